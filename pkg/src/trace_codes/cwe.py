"""Complete weight enumerators: brute enumeration, closed forms, verification.

A CWE is a map from compositions (t_0, ..., t_{p-1}) to frequencies; one
codeword per x in GF(q) at fixed offset c, so frequencies always sum to p^e.
``cwe_brute`` enumerates every codeword; ``cwe_closed`` instantiates the
applicable closed formula (four regimes, split by a = 0 vs a != 0 and by the
parity of m/d); ``verify`` diffs the two together with the published weight
distribution tables and renders a verdict.

Closed-form terms carry the proof-case tags C0..C5: C0 the x = 0 singleton,
C1 the unsolvable-b case, C2 class trace 0, C3 class trace c^2/(4a), C4 the
same-residue-class sum and C5 the opposite-class sum.  The m/d-odd formulas
have no unsolvable case, so their terms are tagged C0, C2, C3 (and C4/C5 for
a != 0).
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .charsums import legendre
from .codes import CodeSpec, code_length_closed, defining_set, n_a_closed
from .errors import DegenerateCodeError, InternalError, ParameterError, UnsupportedRegimeError
from .field import FieldParams


class CWEPolynomial:
    """Frequency map of compositions for one code at fixed c."""

    __slots__ = ("p", "n", "terms")

    def __init__(self, p: int, n: int, terms: dict):
        self.p = p
        self.n = n
        self.terms = dict(terms)

    def total_frequency(self) -> int:
        return sum(self.terms.values())

    def weight_distribution(self) -> dict[int, int]:
        return weight_distribution_of(self)

    def __eq__(self, other):
        return (
            isinstance(other, CWEPolynomial)
            and self.p == other.p
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"CWEPolynomial(n={self.n}, terms={len(self.terms)})"

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"composition": list(comp), "frequency": self.terms[comp]}
                for comp in sorted(self.terms)
            ],
        }


class ClosedTerm(NamedTuple):
    label: str
    composition: tuple[int, ...]
    frequency: int


# ---------------------------------------------------------------------------
# brute enumeration


def _compose_block(counter: Counter, logs_block: np.ndarray, log_d: np.ndarray, t2: np.ndarray, p: int):
    m = logs_block[:, None] + log_d[None, :]
    traces = t2[m]
    rows = len(logs_block)
    off = (np.arange(rows, dtype=np.int32) * p)[:, None]
    flat = traces + off
    cnt = np.bincount(flat.ravel(), minlength=rows * p).reshape(rows, p)
    for row in cnt:
        counter[tuple(int(v) for v in row)] += 1


def _brute_worker(logs: np.ndarray, log_d: np.ndarray, t2: np.ndarray, p: int, block: int) -> Counter:
    counter: Counter = Counter()
    for start in range(0, len(logs), block):
        _compose_block(counter, logs[start : start + block], log_d, t2, p)
    return counter


def _brute_base(field: FieldParams, a: int, threads: int = 1) -> Counter:
    """Composition counter at c = 0; compositions for other c are index rolls."""
    key = ("cwe_base", a)
    cached = field._cache.get(key)
    if cached is not None:
        return cached
    ds = defining_set(CodeSpec(field, a, 0))
    t = field.tables
    log_d = ds.logs.astype(np.int32)
    t2 = t.trace_exp2
    p = field.p
    ks = np.arange(t.L, dtype=np.int32)
    block = max(16, min(1024, (1 << 22) // max(ds.n, 1)))
    if threads > 1:
        chunks = [c for c in np.array_split(ks, threads) if len(c)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda c: _brute_worker(c, log_d, t2, p, block), chunks))
        counter = Counter()
        for part in parts:
            counter.update(part)
    else:
        counter = _brute_worker(ks, log_d, t2, p, block)
    zero_comp = (ds.n,) + (0,) * (p - 1)  # x = 0: every coordinate reads Tr(0) = 0
    counter[zero_comp] += 1
    field._cache[key] = counter
    return counter


def _roll_composition(comp: tuple[int, ...], c: int, p: int) -> tuple[int, ...]:
    return tuple(comp[(s - c) % p] for s in range(p))


def cwe_brute(spec: CodeSpec, threads: int = 1) -> CWEPolynomial:
    """CWE by enumerating the codeword of every x in GF(q)."""
    base = _brute_base(spec.field, spec.a, threads)
    p = spec.field.p
    terms: dict = {}
    for comp, freq in base.items():
        key = _roll_composition(comp, spec.c, p)
        terms[key] = terms.get(key, 0) + freq
    n = len(defining_set(spec).vindices)
    cwe = CWEPolynomial(p, n, terms)
    if cwe.total_frequency() != spec.field.q:
        raise InternalError("brute CWE lost codewords")
    return cwe


# ---------------------------------------------------------------------------
# closed forms


def closed_terms(spec: CodeSpec) -> list[ClosedTerm]:
    """The labelled terms of the applicable closed-form CWE, zero terms skipped."""
    theorem = spec.theorem_id
    if theorem is None:
        raise UnsupportedRegimeError(
            "parameters fall outside the paper's four theorems (need c != 0 and m/d integral)"
        )
    field = spec.field
    p, e, m, d = field.p, field.e, field.m, field.d
    a, c = spec.a, spec.c
    n = code_length_closed(spec)
    if n < 1:
        raise DegenerateCodeError("degenerate code of length 0")

    def sym_comp(at_c: int, others) -> tuple[int, ...]:
        comp = [0] * p
        comp[c] = at_c
        if callable(others):
            for i in range(1, p):
                comp[(i + c) % p] = others(i)
        else:
            for i in range(p):
                if i != c:
                    comp[i] = others
        return tuple(comp)

    terms: list[ClosedTerm] = []
    if theorem == 1:
        pm1 = p ** (m - 1)
        terms.append(ClosedTerm("C0", sym_comp(n, 0), 1))
        terms.append(
            ClosedTerm("C2", sym_comp(p ** (e - 2) - (p - 1) * pm1 - 1, p ** (e - 2)),
                       p ** (e - 1) - (p - 1) * pm1 - 1)
        )
        terms.append(
            ClosedTerm("C3", sym_comp(p ** (e - 2) - 1, p ** (e - 2) - pm1),
                       (p - 1) * (p ** (e - 1) + pm1))
        )
    elif theorem == 3:
        terms.append(ClosedTerm("C0", sym_comp(n, 0), 1))
        terms.append(
            ClosedTerm("C1",
                       sym_comp(p ** (e - 2) - (p - 1) * p ** (m + d - 2) - 1,
                                p ** (e - 2) - (p - 1) * p ** (m + d - 2)),
                       p**e - p ** (e - 2 * d))
        )
        terms.append(
            ClosedTerm("C2",
                       sym_comp(p ** (e - 2) - (p - 1) * p ** (m + d - 1) - 1, p ** (e - 2)),
                       p ** (e - 2 * d - 1) - (p - 1) * p ** (m - d - 1) - 1)
        )
        terms.append(
            ClosedTerm("C3", sym_comp(p ** (e - 2) - 1, p ** (e - 2) - p ** (m + d - 1)),
                       (p - 1) * (p ** (e - 2 * d - 1) + p ** (m - d - 1)))
        )
    else:
        # a != 0: exponent scale P and per-class frequency F differ by parity
        if theorem == 2:
            big = p ** (m - 1)
            class_freq = p ** (e - 1) + p ** (m - 1)
            c2_freq = p ** (e - 1) - (p - 1) * p ** (m - 1) - 1
        else:
            big = p ** (m + d - 1)
            class_freq = p ** (e - 2 * d - 1) + p ** (m - d - 1)
            c2_freq = p ** (e - 2 * d - 1) - (p - 1) * p ** (m - d - 1) - 1
        pe2 = p ** (e - 2)
        lm1 = legendre(-1, p)
        terms.append(ClosedTerm("C0", sym_comp(n, 0), 1))
        if theorem == 4:
            terms.append(
                ClosedTerm("C1", tuple([pe2 + p ** (m + d - 2)] * p), p**e - p ** (e - 2 * d))
            )
        terms.append(ClosedTerm("C2", sym_comp(pe2 + big, lambda i: pe2), c2_freq))
        terms.append(
            ClosedTerm("C3",
                       sym_comp(pe2 - lm1 * big,
                                lambda i: pe2 - legendre(i * i - c * c, p) * big),
                       class_freq)
        )
        excluded = (c * c * pow(4 * a, -1, p)) % p
        la = legendre(a, p)
        for i in range(1, p):
            if i == excluded or legendre(i, p) != la:
                continue
            terms.append(
                ClosedTerm(f"C4[i={i}]",
                           sym_comp(pe2 - lm1 * big,
                                    lambda j, i=i: pe2 - legendre(j * j - 4 * a * i, p) * big),
                           class_freq)
            )
        for i in range(1, p):
            if legendre(i, p) == la:
                continue
            terms.append(
                ClosedTerm(f"C5[i={i}]",
                           sym_comp(pe2 + lm1 * big,
                                    lambda j, i=i: pe2 - legendre(j * j - 4 * a * i, p) * big),
                           class_freq)
            )

    kept = []
    for term in terms:
        if term.frequency < 0:
            raise InternalError(f"negative frequency in closed term {term.label}")
        if term.frequency == 0:
            continue  # formal rows may go negative only when their frequency vanishes
        if any(t < 0 for t in term.composition):
            raise InternalError(f"negative exponent with positive frequency in {term.label}")
        if sum(term.composition) != n:
            raise InternalError(f"closed term {term.label} has degree != n")
        kept.append(term)
    return kept


def cwe_closed(spec: CodeSpec) -> CWEPolynomial:
    """The closed-form CWE, with identical compositions merged."""
    field = spec.field
    terms: dict = {}
    for term in closed_terms(spec):
        terms[term.composition] = terms.get(term.composition, 0) + term.frequency
    cwe = CWEPolynomial(field.p, code_length_closed(spec), terms)
    if cwe.total_frequency() != field.q:
        raise InternalError("closed CWE frequencies do not sum to p^e")
    return cwe


def weight_distribution_of(cwe: CWEPolynomial) -> dict[int, int]:
    """Hamming weight rows: each composition contributes at weight n - t_0."""
    rows: dict[int, int] = {}
    for comp, freq in cwe.terms.items():
        w = cwe.n - comp[0]
        rows[w] = rows.get(w, 0) + freq
    return dict(sorted(rows.items()))


def table_closed(spec: CodeSpec) -> dict[int, int]:
    """The published weight-distribution rows, merged and with zero rows dropped."""
    theorem = spec.theorem_id
    if theorem is None:
        raise UnsupportedRegimeError(
            "parameters fall outside the paper's four theorems (need c != 0 and m/d integral)"
        )
    field = spec.field
    p, e, m, d = field.p, field.e, field.m, field.d
    if code_length_closed(spec) < 1:
        raise DegenerateCodeError("degenerate code of length 0")
    if theorem == 1:
        rows = [
            ((p - 1) * (p ** (e - 2) - p ** (m - 1)) - 1, p ** (e - 1) - (p - 1) * p ** (m - 1) - 1),
            ((p - 1) * p ** (e - 2) - (p - 2) * p ** (m - 1) - 1, (p - 1) * (p ** (e - 1) + p ** (m - 1))),
            (p ** (e - 1) - (p - 1) * p ** (m - 1) - 1, 1),
        ]
    elif theorem == 2:
        rows = [
            ((p - 1) * p ** (e - 2), (p - 1) * (p ** (e - 1) + p ** (m - 1)) // 2),
            ((p - 1) * p ** (e - 2) + p ** (m - 1), 2 * p ** (e - 1) - (p - 2) * p ** (m - 1) - 1),
            ((p - 1) * p ** (e - 2) + 2 * p ** (m - 1), (p - 3) * (p ** (e - 1) + p ** (m - 1)) // 2),
            (p ** (e - 1) + p ** (m - 1), 1),
        ]
    elif theorem == 3:
        rows = [
            ((p - 1) * (p ** (e - 2) - (p - 1) * p ** (m + d - 2)) - 1, p**e - p ** (e - 2 * d)),
            ((p - 1) * (p ** (e - 2) - p ** (m + d - 1)) - 1,
             p ** (e - 2 * d - 1) - (p - 1) * p ** (m - d - 1) - 1),
            ((p - 1) * p ** (e - 2) - (p - 2) * p ** (m + d - 1) - 1,
             (p - 1) * (p ** (e - 2 * d - 1) + p ** (m - d - 1))),
            (p ** (e - 1) - (p - 1) * p ** (m + d - 1) - 1, 1),
        ]
    else:
        rows = [
            ((p - 1) * (p ** (e - 2) + p ** (m + d - 2)), p**e - p ** (e - 2 * d)),
            ((p - 1) * p ** (e - 2) + p ** (m + d - 1),
             2 * p ** (e - 2 * d - 1) - (p - 2) * p ** (m - d - 1) - 1),
            ((p - 1) * p ** (e - 2) + 2 * p ** (m + d - 1),
             (p - 3) * (p ** (e - 2 * d - 1) + p ** (m - d - 1)) // 2),
            ((p - 1) * p ** (e - 2), (p - 1) * (p ** (e - 2 * d - 1) + p ** (m - d - 1)) // 2),
            (p ** (e - 1) + p ** (m + d - 1), 1),
        ]
    out: dict[int, int] = {}
    for w, mult in rows:
        if mult < 0:
            raise InternalError("negative multiplicity in a published table row")
        if mult == 0:
            continue
        if w < 0:
            raise InternalError("negative weight with positive multiplicity")
        out[w] = out.get(w, 0) + mult
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# verification


def diff_cwe(brute: CWEPolynomial, closed: CWEPolynomial) -> list[dict]:
    keys = sorted(set(brute.terms) | set(closed.terms))
    return [
        {"kind": "composition", "composition": list(k),
         "brute": brute.terms.get(k, 0), "closed": closed.terms.get(k, 0)}
        for k in keys
        if brute.terms.get(k, 0) != closed.terms.get(k, 0)
    ]


def diff_weights(brute_wd: dict[int, int], table_wd: dict[int, int]) -> list[dict]:
    keys = sorted(set(brute_wd) | set(table_wd))
    return [
        {"kind": "weight", "w": k, "brute": brute_wd.get(k, 0), "closed": table_wd.get(k, 0)}
        for k in keys
        if brute_wd.get(k, 0) != table_wd.get(k, 0)
    ]


@dataclass
class VerificationReport:
    spec: CodeSpec
    theorem: int
    n: int
    brute: CWEPolynomial
    closed: CWEPolynomial
    closed_labeled: list[ClosedTerm]
    brute_weights: dict[int, int]
    table_weights: dict[int, int]
    diffs: list[dict]
    verdict: str

    def to_json_obj(self) -> dict:
        return {
            "params": self.spec.field.to_json_obj(),
            "a": self.spec.a,
            "c": self.spec.c,
            "theorem": self.theorem,
            "n": self.n,
            "brute": self.brute.to_json_obj(),
            "closed": self.closed.to_json_obj(),
            "closed_terms": [
                {"label": t.label, "composition": list(t.composition), "frequency": t.frequency}
                for t in self.closed_labeled
            ],
            "brute_weights": [{"w": w, "A": a} for w, a in sorted(self.brute_weights.items())],
            "table_weights": [{"w": w, "A": a} for w, a in sorted(self.table_weights.items())],
            "diffs": self.diffs,
            "verdict": self.verdict,
        }


def verify(spec: CodeSpec, threads: int = 1) -> VerificationReport:
    """Run brute and closed CWEs, diff them and the weight tables, render verdict."""
    brute = cwe_brute(spec, threads)
    closed = cwe_closed(spec)
    labeled = closed_terms(spec)
    brute_wd = weight_distribution_of(brute)
    table_wd = table_closed(spec)
    diffs = diff_cwe(brute, closed) + diff_weights(brute_wd, table_wd)
    return VerificationReport(
        spec=spec,
        theorem=spec.theorem_id,
        n=brute.n,
        brute=brute,
        closed=closed,
        closed_labeled=labeled,
        brute_weights=brute_wd,
        table_weights=table_wd,
        diffs=diffs,
        verdict="match" if not diffs else "mismatch",
    )


# ---------------------------------------------------------------------------
# exhaustive sweep

# The sweep walks e >= 4 so that every family carries all of its (a, c) cells:
# at e = 2 the a = 0 code is degenerate.  alpha stops at e/2 because alpha and
# e - alpha induce the same defining set.


def sweep_fields(primes, max_q: int):
    """(p, e, alpha) triples the sweep covers, smallest first."""
    out = []
    for p in sorted(set(primes)):
        e = 4
        while p**e <= max_q:
            m = e // 2
            for alpha in range(1, m + 1):
                if m % math.gcd(alpha, e) == 0:
                    out.append((p, e, alpha))
            e += 2
    return out


def run_sweep(primes, max_q: int, threads: int = 1) -> list[dict]:
    """verify() every admissible (p, e, alpha, a, c); one summary row each."""
    rows = []
    for p, e, alpha in sweep_fields(primes, max_q):
        field = FieldParams(p, e, alpha)
        for a in range(p):
            for c in range(1, p):
                spec = CodeSpec(field, a, c)
                report = verify(spec, threads)
                rows.append(
                    {
                        "p": p, "e": e, "alpha": alpha, "a": a, "c": c,
                        "theorem": report.theorem, "n": report.n,
                        "verdict": report.verdict,
                    }
                )
    return rows
