"""Exact arithmetic in GF(p^e).

Elements are coefficient vectors of length e over Z_p in the power basis of a
monic irreducible modulus.  The context object ``FieldParams`` fixes the tuple
(p, e, m=e/2, alpha, d=gcd(alpha, e)) together with the modulus, and provides
trace, Frobenius and the power map x -> x^(p^alpha + 1) that every other
module builds on.

The modulus never appears in any downstream quantity: traces, character sums
and weight enumerators are basis independent, so the default modulus is simply
the lexicographically smallest monic irreducible (coefficients compared low
degree first).
"""

from __future__ import annotations

import itertools
import math
import os
from functools import cached_property

from .errors import InternalError, ParameterError

# Constructors reject q above this unless TRACE_CODES_CAP overrides it; brute
# enumeration is O(q * n) and has to finish in desk time.
DEFAULT_Q_CAP = 1 << 26


def _q_cap() -> int:
    return int(os.environ.get("TRACE_CODES_CAP", DEFAULT_Q_CAP))


def is_prime(n: int) -> bool:
    """Trial-division primality test; n stays small (p^2 <= q cap)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense polynomials over Z_p, low degree first, for modulus handling only


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    e = len(mod) - 1
    conv = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                conv[i + j] += ai * bj
    # mod is monic, so X^(e+k) reduces by repeated subtraction from the top
    for i in range(len(conv) - 1, e - 1, -1):
        ci = conv[i] % p
        if ci:
            for j in range(e):
                conv[i - e + j] -= ci * mod[j]
        conv[i] = 0
    return _poly_trim([v % p for v in conv[:e]])


def _poly_powmod(a: list[int], k: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = a[:]
    while k:
        if k & 1:
            result = _poly_mulmod(result, base, mod, p)
        k >>= 1
        if k:
            base = _poly_mulmod(base, base, mod, p)
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(a[:]), _poly_trim(b[:])
    while b:
        inv = pow(b[-1], -1, p)
        nb = [(v * inv) % p for v in b]
        r = a[:]
        while len(r) >= len(nb):
            lead = r[-1] % p
            if lead:
                shift = len(r) - len(nb)
                for j in range(len(nb)):
                    r[shift + j] = (r[shift + j] - lead * nb[j]) % p
            r.pop()
            _poly_trim(r)
            if not r:
                break
        a, b = nb, r
    return a


def is_irreducible(coeffs, p: int) -> bool:
    """Monic-degree-e irreducibility via gcd(f, X^(p^k) - X) = 1 for k <= e/2."""
    f = [c % p for c in coeffs]
    e = len(f) - 1
    if e < 1 or f[-1] != 1:
        return False
    if e == 1:
        return True
    if f[0] == 0:
        return False
    r = [0, 1]
    for _ in range(e // 2):
        r = _poly_powmod(r, p, f, p)
        rx = r[:]
        while len(rx) < 2:
            rx.append(0)
        rx[1] = (rx[1] - 1) % p
        _poly_trim(rx)
        if len(_poly_gcd(f, rx, p)) > 1:
            return False
    return True


def find_irreducible(p: int, e: int, index: int = 0):
    """The (index+1)-th monic irreducible of degree e over Z_p.

    Candidates are scanned in lexicographic order of (c_0, ..., c_{e-1}),
    values 0..p-1, so index=0 is the canonical reproducible modulus.
    """
    if not is_prime(p) or p < 3:
        raise ParameterError(f"p must be an odd prime, got {p}")
    if e < 2:
        raise ParameterError(f"degree must be at least 2, got {e}")
    seen = 0
    screen = p <= 50
    for tail in itertools.product(range(p), repeat=e):
        if tail[0] == 0:
            continue  # divisible by X
        f = list(tail) + [1]
        if screen and any(
            sum(c * pow(r, i, p) for i, c in enumerate(f)) % p == 0 for r in range(p)
        ):
            continue
        if is_irreducible(f, p):
            if seen == index:
                return tuple(f)
            seen += 1
    raise InternalError(f"no irreducible of degree {e} over GF({p})")  # pragma: no cover


class FieldElement:
    """An element of GF(p^e): a length-e coefficient tuple in the power basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "FieldParams", coeffs):
        self.field = field
        self.coeffs = coeffs  # normalized tuple, built via FieldParams.element

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise ParameterError("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field._mul_coeffs(self.coeffs, other.coeffs))

    def __pow__(self, k: int):
        field = self.field
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("inverse of zero")
            k = k % (field.q - 1)
        result = field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result  # x^0 == 1 for every x, including 0

    def frobenius(self, t: int = 1) -> "FieldElement":
        return self.field.frobenius(self, t)

    def trace(self) -> int:
        return self.field.trace(self)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def vindex(self) -> int:
        """Base-p packing of the coefficient vector, c_0 least significant."""
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.field.p + c
        return v

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.e))

    def __repr__(self):
        return f"FieldElement{self.coeffs}"


class FieldParams:
    """GF(p^e) context: p odd prime, e = 2m even, alpha >= 1, d = gcd(alpha, e)."""

    def __init__(self, p: int, e: int, alpha: int = 1, modulus=None):
        if not isinstance(p, int) or not is_prime(p) or p % 2 == 0 or p < 3:
            raise ParameterError(f"p must be an odd prime, got {p}")
        if not isinstance(e, int) or e < 2 or e % 2 != 0:
            raise ParameterError(f"e must be a positive even integer, got {e}")
        if not isinstance(alpha, int) or alpha < 1:
            raise ParameterError(f"alpha must be a positive integer, got {alpha}")
        q = p**e
        cap = _q_cap()
        if q > cap:
            raise ParameterError(f"q = {p}^{e} = {q} exceeds the cap {cap}")
        self.p = p
        self.e = e
        self.m = e // 2
        self.alpha = alpha
        self.d = math.gcd(alpha, e)
        self.q = q
        if modulus is None:
            modulus = find_irreducible(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ParameterError("modulus must be monic of degree e")
            if not is_irreducible(modulus, p):
                raise ParameterError("modulus is not irreducible over Z_p")
        self.modulus = tuple(modulus)
        self._cache: dict = {}
        self._build_mul_tables()
        self._build_frobenius()
        self.zero = self.element((0,) * e)
        self.one = self.from_int(1)

    # -- construction helpers ------------------------------------------------

    def _build_mul_tables(self) -> None:
        p, e, f = self.p, self.e, self.modulus
        # _red[k] = coefficients of X^(e+k) mod f, k = 0..e-2
        red = []
        cur = [(-c) % p for c in f[:e]]  # X^e mod f
        red.append(tuple(cur))
        for _ in range(e - 2):
            nxt = [0] + cur[: e - 1]
            lead = cur[e - 1]
            if lead:
                for j in range(e):
                    nxt[j] = (nxt[j] - lead * f[j]) % p
            cur = [v % p for v in nxt]
            red.append(tuple(cur))
        self._red = red

    def _build_frobenius(self) -> None:
        p, e, f = self.p, self.e, self.modulus
        cols = []
        for j in range(e):
            xjp = _poly_powmod([0] * j + [1], p, list(f), p)
            xjp += [0] * (e - len(xjp))
            cols.append(xjp)
        # _frob[i][j] = coefficient i of (X^j)^p mod f
        self._frob = [tuple(cols[j][i] for j in range(e)) for i in range(e)]
        # conjugate sum matrix: rows above the constant one must vanish
        acc = [[1 if i == j else 0 for j in range(e)] for i in range(e)]
        total = [row[:] for row in acc]
        for _ in range(e - 1):
            acc = [
                [sum(self._frob[i][k] * acc[k][j] for k in range(e)) % p for j in range(e)]
                for i in range(e)
            ]
            for i in range(e):
                for j in range(e):
                    total[i][j] = (total[i][j] + acc[i][j]) % p
        if any(v for row in total[1:] for v in row):
            raise InternalError("conjugate sum leaves the prime subfield; broken modulus")
        self._tr_basis = tuple(total[0])

    # -- element constructors ------------------------------------------------

    def element(self, coeffs) -> FieldElement:
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.e:
            raise ParameterError(f"expected {self.e} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    def from_int(self, c: int) -> FieldElement:
        return FieldElement(self, (c % self.p,) + (0,) * (self.e - 1))

    def element_from_vindex(self, v: int) -> FieldElement:
        p = self.p
        coeffs = []
        for _ in range(self.e):
            coeffs.append(v % p)
            v //= p
        return FieldElement(self, tuple(coeffs))

    def elements(self):
        """All q elements, in vindex order."""
        for v in range(self.q):
            yield self.element_from_vindex(v)

    # -- core operations -----------------------------------------------------

    def _mul_coeffs(self, x, y) -> tuple:
        p, e = self.p, self.e
        conv = [0] * (2 * e - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    conv[i + j] += xi * yj
        res = conv[:e]
        for k in range(e - 1):
            ck = conv[e + k] % p
            if ck:
                row = self._red[k]
                for j in range(e):
                    res[j] += ck * row[j]
        return tuple(v % p for v in res)

    def frobenius(self, x: FieldElement, t: int = 1) -> FieldElement:
        """x^(p^t) via the precomputed matrix of the p-power map."""
        if x.field != self:
            raise ParameterError("element from a different field")
        e, p = self.e, self.p
        coeffs = x.coeffs
        for _ in range(t % e):
            coeffs = tuple(
                sum(self._frob[i][j] * coeffs[j] for j in range(e)) % p for i in range(e)
            )
        return FieldElement(self, coeffs)

    def trace(self, x: FieldElement) -> int:
        """Tr(x) = sum of the e conjugates, as a residue mod p."""
        if x.field != self:
            raise ParameterError("element from a different field")
        return sum(t * c for t, c in zip(self._tr_basis, x.coeffs)) % self.p

    def power_map(self, x: FieldElement) -> FieldElement:
        """x -> x^(p^alpha + 1), the map defining every code here."""
        return self.frobenius(x, self.alpha) * x

    def primitive_element(self) -> FieldElement:
        """First element in lexicographic coefficient order of order q - 1."""
        cached = self._cache.get("primitive")
        if cached is not None:
            return cached
        n = self.q - 1
        checks = [n // r for r in prime_factors(n)]
        for tail in itertools.product(range(self.p), repeat=self.e):
            if not any(tail):
                continue
            x = self.element(tail)
            if all((x**k) != self.one for k in checks):
                self._cache["primitive"] = x
                return x
        raise InternalError("no primitive element found")  # pragma: no cover

    @cached_property
    def tables(self):
        from .tables import FieldTables

        return FieldTables(self)

    # -- administrivia ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldParams)
            and self.p == other.p
            and self.e == other.e
            and self.alpha == other.alpha
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.e, self.alpha, self.modulus))

    def __repr__(self):
        return f"FieldParams(p={self.p}, e={self.e}, alpha={self.alpha})"

    def to_json_obj(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "alpha": self.alpha,
            "d": self.d,
            "modulus": list(self.modulus),
        }
