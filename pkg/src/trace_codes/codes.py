"""Defining sets, codewords, compositions and the N_b coordinate counts.

The defining set is D_a = { x in GF(q)*, Tr(x^(p^alpha+1)) = a }, ordered
lexicographically by coefficient vector.  Codewords are
(Tr(b d_1) + c, ..., Tr(b d_n) + c) with one codeword per b in GF(q) at a
fixed offset c.  The counts N_b(a, rho) = #{ x in GF(q) : Tr(x^(p^alpha+1)) = a
and Tr(b x) = rho } range over the whole field including x = 0; the exclusion
of 0 from D_a surfaces only in the a = 0 codes, whose length is that count
minus one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .charsums import legendre, trace_of_solution_class
from .errors import DegenerateCodeError, InternalError, ParameterError, UnsupportedRegimeError
from .field import FieldElement, FieldParams


@dataclass(frozen=True)
class CodeSpec:
    """A code instance: field parameters plus the pair (a, c)."""

    field: FieldParams
    a: int
    c: int

    def __post_init__(self):
        p = self.field.p
        if not (0 <= self.a < p and 0 <= self.c < p):
            raise ParameterError(f"a and c must be residues mod {p}")

    @property
    def theorem_id(self):
        """Which of the four closed-form regimes applies, or None."""
        if self.c == 0:
            return None
        m, d = self.field.m, self.field.d
        if m % d != 0:
            return None
        if (m // d) % 2 == 1:
            return 1 if self.a == 0 else 2
        return 3 if self.a == 0 else 4


class DefiningSet:
    """Ordered defining set D_a; elements never include zero."""

    __slots__ = ("field", "a", "vindices", "__dict__")

    def __init__(self, field: FieldParams, a: int, vindices: np.ndarray):
        self.field = field
        self.a = a
        self.vindices = vindices

    @property
    def n(self) -> int:
        return len(self.vindices)

    @cached_property
    def logs(self) -> np.ndarray:
        return self.field.tables.log_v[self.vindices]

    @cached_property
    def elements(self) -> list[FieldElement]:
        return [self.field.element_from_vindex(int(v)) for v in self.vindices]

    def to_json_obj(self) -> dict:
        return {"a": self.a, "n": self.n}


def _coeff_lex_keys(field: FieldParams, vs: np.ndarray) -> np.ndarray:
    # lexicographic on (c_0, ..., c_{e-1}) means c_0 is the most significant digit
    p, e = field.p, field.e
    key = np.zeros_like(vs)
    for i in range(e):
        key += ((vs // p**i) % p) * p ** (e - 1 - i)
    return key


def defining_set(spec: CodeSpec) -> DefiningSet:
    """D_a in lexicographic coefficient order; empty set is a degenerate code."""
    field = spec.field
    cache_key = ("defining_set", spec.a)
    cached = field._cache.get(cache_key)
    if cached is not None:
        return cached
    t = field.tables
    mask = t.trace_class_mask(spec.a).copy()
    mask[0] = False
    vs = np.flatnonzero(mask).astype(np.int64)
    if len(vs) == 0:
        raise DegenerateCodeError(
            f"defining set for a={spec.a} is empty: degenerate code of length 0"
        )
    order = np.argsort(_coeff_lex_keys(field, vs), kind="stable")
    ds = DefiningSet(field, spec.a, vs[order])
    field._cache[cache_key] = ds
    return ds


def n_a_closed(spec: CodeSpec) -> int:
    """The counts n_0 = |D_0 u {0}| and n_a = |D_a| from the closed formulas."""
    field = spec.field
    p, e, m, d = field.p, field.e, field.m, field.d
    if m % d != 0:
        raise UnsupportedRegimeError(
            f"m/d = {m}/{d} is not an integer; no closed length formula applies"
        )
    md_odd = (m // d) % 2 == 1
    if spec.a == 0:
        return p ** (e - 1) - (p - 1) * p ** (m - 1 if md_odd else m + d - 1)
    return p ** (e - 1) + p ** (m - 1 if md_odd else m + d - 1)


def code_length_closed(spec: CodeSpec) -> int:
    """Length of the code: n_a, less the excluded zero element when a = 0."""
    n = n_a_closed(spec)
    return n - 1 if spec.a == 0 else n


def codeword(spec: CodeSpec, b: FieldElement) -> list[int]:
    """(Tr(b d_1) + c, ..., Tr(b d_n) + c) in defining-set order."""
    field = spec.field
    if b.field != field:
        raise ParameterError("element from a different field")
    ds = defining_set(spec)
    if b.is_zero():
        return [spec.c] * ds.n
    t = field.tables
    lb = int(t.log_v[b.vindex])
    syms = (t.trace_exp2[lb + ds.logs] + spec.c) % field.p
    return [int(s) for s in syms]


def composition_of(symbols, p: int) -> tuple[int, ...]:
    """(t_0, ..., t_{p-1}) with t_i the number of coordinates equal to i."""
    counts = np.bincount(np.asarray(symbols, dtype=np.int64), minlength=p)
    if len(counts) > p:
        raise ParameterError("symbol out of range")
    return tuple(int(v) for v in counts)


def _class_logs(field: FieldParams, a: int):
    """Logs of the nonzero members of the full trace class, plus zero-membership."""
    key = ("class_logs", a)
    cached = field._cache.get(key)
    if cached is None:
        t = field.tables
        mask = t.trace_class_mask(a)
        vs = np.flatnonzero(mask)
        nz = vs[vs != 0]
        cached = (t.log_v[nz], bool(mask[0]), len(vs))
        field._cache[key] = cached
    return cached


def n_b_count_brute(spec: CodeSpec, b: FieldElement, rho: int) -> int:
    """|N_b(a, rho)| over all of GF(q), x = 0 included, by enumeration."""
    field = spec.field
    rho %= field.p
    logs, zero_in_class, total = _class_logs(field, spec.a)
    if b.is_zero():
        return total if rho == 0 else 0
    t = field.tables
    lb = int(t.log_v[b.vindex])
    count = int((t.trace_exp2[lb + logs] == rho).sum())
    if zero_in_class and rho == 0:
        count += 1
    return count


def n_b_count_closed(spec: CodeSpec, b: FieldElement, rho: int) -> int:
    """|N_b(a, rho)| from the restated m/d-even lemmas (a nonzero).

    Unsolvable b:                    p^(e-2) + p^(m+d-2).
    Solvable, class trace i = 0:     p^(e-2) + p^(m+d-1) for rho = 0, else p^(e-2).
    Solvable, i = rho^2/(4a):        p^(e-2).
    Solvable otherwise:              p^(e-2) - p^(m+d-1) ((rho^2 - 4 a i)/p).
    """
    field = spec.field
    p, e, m, d = field.p, field.e, field.m, field.d
    a = spec.a
    if m % d != 0 or (m // d) % 2 != 0:
        raise UnsupportedRegimeError(
            "no closed N_b count is restated for m/d odd; use the brute count"
        )
    if a == 0:
        raise UnsupportedRegimeError("the closed N_b counts require a != 0")
    rho %= p
    if b.is_zero():
        return n_a_closed(spec) if rho == 0 else 0
    i = trace_of_solution_class(field, b)
    if i is None:
        return p ** (e - 2) + p ** (m + d - 2)
    if rho == 0:
        if i == 0:
            return p ** (e - 2) + p ** (m + d - 1)
        return p ** (e - 2) - p ** (m + d - 1) * legendre(-a * i, p)
    if i == 0:
        return p ** (e - 2)
    if i == (rho * rho * pow(4 * a, -1, p)) % p:
        return p ** (e - 2)
    return p ** (e - 2) - p ** (m + d - 1) * legendre(rho * rho - 4 * a * i, p)


def solvable_b_census(spec: CodeSpec) -> dict:
    """Classify every b by solvability of f(X) = -b^(p^alpha) and class trace.

    Returns {None: #unsolvable, 0: #class-0, ..., p-1: #class-(p-1)};
    solution sets sharing a b are checked to carry one trace value each.
    """
    field = spec.field
    cached = field._cache.get("census")
    if cached is not None:
        return dict(cached)
    t = field.tables
    p, q = field.p, field.q
    fb = t.f_map_all(field.one)
    tv = t.trace_v[t.power_map_v].astype(np.int64)
    ys, first = np.unique(fb, return_index=True)
    lo = np.full(q, p, dtype=np.int64)
    hi = np.full(q, -1, dtype=np.int64)
    np.minimum.at(lo, fb, tv)
    np.maximum.at(hi, fb, tv)
    if bool((lo[ys] != hi[ys]).any()):
        raise InternalError("a solution set carries more than one trace value")
    counts = np.bincount(tv[first], minlength=p)
    census = {int(i): int(counts[i]) for i in range(p)}
    census[None] = q - len(ys)
    field._cache["census"] = dict(census)
    return census


def expected_census(field: FieldParams) -> dict:
    """The census the two |S| lemmas predict (requires m/d integral)."""
    p, e, m, d = field.p, field.e, field.m, field.d
    if m % d != 0:
        raise UnsupportedRegimeError(
            f"m/d = {m}/{d} is not an integer; the |S| lemmas do not apply"
        )
    md_odd = (m // d) % 2 == 1
    out: dict = {}
    for a in range(p):
        n_a = n_a_closed(CodeSpec(field, a, 0))
        out[a] = n_a if md_odd else n_a // p ** (2 * d)
    out[None] = 0 if md_odd else field.q - p ** (e - 2 * d)
    return out
