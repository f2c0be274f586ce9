"""Exact arithmetic in Z[zeta_p], the ring of p-th cyclotomic integers.

A value is a length-p integer vector c_0 + c_1*zeta + ... + c_{p-1}*zeta^{p-1}
kept in canonical form with c_{p-1} = 0, reduced through the relation
1 + zeta + ... + zeta^{p-1} = 0.  Canonical vectors are unique, so equality is
coefficient equality.  Every character sum in this package lives here; there is
no floating point anywhere.
"""

from __future__ import annotations

from .errors import ParameterError


class CyclotomicInt:
    """An element of Z[zeta_p] in canonical form (last coefficient zero)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        if p < 2:
            raise ParameterError(f"p must be at least 2, got {p}")
        c = list(coeffs)
        if len(c) > p:
            raise ParameterError(f"at most {p} coefficients expected, got {len(c)}")
        c += [0] * (p - len(c))
        last = c[p - 1]
        self.p = p
        self.coeffs = tuple(int(v - last) for v in c[: p - 1]) + (0,)

    @classmethod
    def from_int(cls, p: int, n: int) -> "CyclotomicInt":
        return cls(p, (n,))

    @classmethod
    def zeta_power(cls, p: int, k: int) -> "CyclotomicInt":
        c = [0] * p
        c[k % p] = 1
        return cls(p, c)

    @classmethod
    def from_counts(cls, p: int, counts) -> "CyclotomicInt":
        """sum_t counts[t] * zeta^t; the raw accumulation of a character sum."""
        return cls(p, counts)

    def _check(self, other: "CyclotomicInt") -> None:
        if self.p != other.p:
            raise ParameterError("cyclotomic integers over different p")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.p, other)
        self._check(other)
        return CyclotomicInt(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.p, other)
        self._check(other)
        return CyclotomicInt(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CyclotomicInt(self.p, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.p, [a * other for a in self.coeffs])
        self._check(other)
        p = self.p
        prod = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[(i + j) % p] += a * b
        return CyclotomicInt(p, prod)

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicInt":
        """Complex conjugation, zeta -> zeta^(-1)."""
        return self.galois(self.p - 1)

    def galois(self, s: int) -> "CyclotomicInt":
        """The automorphism zeta -> zeta^s, gcd(s, p) = 1."""
        p = self.p
        if s % p == 0:
            raise ParameterError("galois exponent must be coprime to p")
        out = [0] * p
        for k, a in enumerate(self.coeffs):
            out[(k * s) % p] += a
        return CyclotomicInt(p, out)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_int(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.p, other)
        return (
            isinstance(other, CyclotomicInt)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def to_json_obj(self) -> dict:
        return {"zeta_coeffs": list(self.coeffs[: self.p - 1])}

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            unit = "1" if k == 0 else ("z" if k == 1 else f"z^{k}")
            term = unit if a == 1 and k > 0 else (f"-{unit}" if a == -1 and k > 0 else f"{a}*{unit}" if k > 0 else f"{a}")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")
