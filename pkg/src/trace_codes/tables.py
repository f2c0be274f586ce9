"""Vectorized index tables for bulk enumeration over GF(p^e).

Every element is identified with its vindex (base-p packing of the coefficient
vector, c_0 least significant).  The tables map between vindex space and the
discrete-log space of a fixed primitive element, so that products become index
additions and traces become table lookups.  All entries are integers; nothing
here ever touches floating point.
"""

from __future__ import annotations

import numpy as np

from .errors import InternalError, ParameterError


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


class FieldTables:
    """exp/log/trace tables plus digit-wise vector helpers for one field."""

    def __init__(self, field):
        self.field = field
        p, e, q = field.p, field.e, field.q
        self.L = q - 1
        theta = field.primitive_element()

        # columns of V are the coefficient vectors of theta^0 .. theta^(q-2),
        # generated blockwise: V[:, j+B] = M^B V[:, j] with M = mult-by-theta
        mat = np.zeros((e, e), dtype=np.int64)
        for j in range(e):
            col = field._mul_coeffs(theta.coeffs, tuple(1 if i == j else 0 for i in range(e)))
            mat[:, j] = col
        block = min(self.L, 1024)
        v = np.zeros((e, self.L), dtype=np.int64)
        col = np.zeros(e, dtype=np.int64)
        col[0] = 1
        for j in range(block):
            v[:, j] = col
            col = _matmul_mod(mat, col, p)
        mb = np.eye(e, dtype=np.int64)
        k = block
        base = mat.copy()
        while k:
            if k & 1:
                mb = _matmul_mod(mb, base, p)
            k >>= 1
            if k:
                base = _matmul_mod(base, base, p)
        filled = block
        while filled < self.L:
            step = min(block, self.L - filled)
            v[:, filled : filled + step] = _matmul_mod(mb, v[:, filled - block : filled - block + step], p)
            filled += step

        pw = p ** np.arange(e, dtype=np.int64)
        self.exp_v = pw @ v  # vindex of theta^k
        self.log_v = np.full(q, -1, dtype=np.int64)
        self.log_v[self.exp_v] = np.arange(self.L, dtype=np.int64)
        if int(np.count_nonzero(self.log_v >= 0)) != self.L or self.log_v[0] != -1:
            raise InternalError("exp table is not a permutation of the nonzero elements")

        # trace of every vindex, via linearity over the base-p digits
        idx = np.arange(q, dtype=np.int64)
        tr = np.zeros(q, dtype=np.int64)
        for i, t in enumerate(field._tr_basis):
            if t:
                tr += ((idx // pw[i]) % p) * t
        self.trace_v = (tr % p).astype(np.int8)
        self.trace_exp = self.trace_v[self.exp_v]
        self.trace_exp2 = np.concatenate([self.trace_exp, self.trace_exp])

    # -- digit-wise vector arithmetic on vindex arrays -----------------------

    def vadd(self, u: np.ndarray, w: np.ndarray) -> np.ndarray:
        p, e = self.field.p, self.field.e
        out = np.zeros_like(u)
        scale = 1
        for _ in range(e):
            out += (((u // scale) % p + (w // scale) % p) % p) * scale
            scale *= p
        return out

    def vneg(self, u: np.ndarray) -> np.ndarray:
        p, e = self.field.p, self.field.e
        out = np.zeros_like(u)
        scale = 1
        for _ in range(e):
            out += ((p - (u // scale) % p) % p) * scale
            scale *= p
        return out

    def vmul_scalar(self, x_vindex: int, u: np.ndarray) -> np.ndarray:
        """x * u for a fixed field element x, elementwise over vindices."""
        if x_vindex == 0:
            return np.zeros_like(u)
        lx = int(self.log_v[x_vindex])
        out = np.zeros_like(u)
        nz = u != 0
        out[nz] = self.exp_v[(lx + self.log_v[u[nz]]) % self.L]
        return out

    def vpow(self, u: np.ndarray, k: int) -> np.ndarray:
        """u^k elementwise (k >= 1 so 0 stays 0)."""
        if k < 1:
            raise ParameterError("vpow needs k >= 1")
        out = np.zeros_like(u)
        nz = u != 0
        out[nz] = self.exp_v[(self.log_v[u[nz]] * (k % self.L)) % self.L]
        return out

    def vfrobenius(self, u: np.ndarray, t: int) -> np.ndarray:
        return self.vpow(u, pow(self.field.p, t, self.L))

    # -- cached per-alpha maps ------------------------------------------------

    @property
    def power_map_v(self) -> np.ndarray:
        """vindex table of x -> x^(p^alpha + 1)."""
        cached = self.field._cache.get("power_map_v")
        if cached is None:
            p, alpha = self.field.p, self.field.alpha
            t = (p**alpha + 1) % self.L
            cached = np.zeros(self.field.q, dtype=np.int64)
            cached[self.exp_v] = self.exp_v[(np.arange(self.L, dtype=np.int64) * t) % self.L]
            self.field._cache["power_map_v"] = cached
        return cached

    def f_map_all(self, a) -> np.ndarray:
        """vindex of a^(p^alpha) x^(p^(2 alpha)) + a x for every x, vindex order."""
        field = self.field
        if a.is_zero():
            raise ParameterError("a must be nonzero")
        x = np.arange(field.q, dtype=np.int64)
        xf = self.vfrobenius(x, 2 * field.alpha)
        af = field.frobenius(a, field.alpha)
        return self.vadd(self.vmul_scalar(af.vindex, xf), self.vmul_scalar(a.vindex, x))

    def trace_class_mask(self, a: int) -> np.ndarray:
        """Boolean mask over vindices of Tr(x^(p^alpha+1)) == a, x = 0 included."""
        key = ("trace_class_mask", a)
        cached = self.field._cache.get(key)
        if cached is None:
            cached = self.trace_v[self.power_map_v] == a
            self.field._cache[key] = cached
        return cached
