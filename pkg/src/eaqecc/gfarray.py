"""Vectorized arithmetic on numpy arrays of packed GF(q^2) elements.

Multiplication goes through exp/log tables of the (small) field; addition is
XOR for p = 2 and digit-wise otherwise.  Used for parity-check matrices,
H H^dagger products, ranks and polynomial division.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .field import FieldCtx, pack_array, unpack_array


class GFArray:
    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.p = ctx.p
        self.order = ctx.order
        n = ctx.order - 1
        exp = np.empty(n, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            x = ctx.mul(x, ctx.g)
        log = np.full(ctx.order, -1, dtype=np.int64)
        log[exp] = np.arange(n)
        self.exp, self.log = exp, log
        self._digits = unpack_array(np.arange(ctx.order), ctx.p, ctx.m)

    def __repr__(self) -> str:
        return f"GFArray({self.ctx})"

    def asarray(self, a) -> np.ndarray:
        return np.asarray(a, dtype=np.int64)

    def mul(self, a, b) -> np.ndarray:
        a, b = self.asarray(a), self.asarray(b)
        out = self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def add(self, a, b) -> np.ndarray:
        a, b = self.asarray(a), self.asarray(b)
        if self.p == 2:
            return a ^ b
        return pack_array((self._digits[a] + self._digits[b]) % self.p, self.p)

    def neg(self, a) -> np.ndarray:
        a = self.asarray(a)
        if self.p == 2:
            return a.copy()
        return pack_array((-self._digits[a]) % self.p, self.p)

    def sub(self, a, b) -> np.ndarray:
        return self.add(a, self.neg(b))

    def inv(self, a) -> np.ndarray:
        a = self.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[a]) % (self.order - 1)]

    def pow(self, a, e: int) -> np.ndarray:
        a = self.asarray(a)
        out = self.exp[(self.log[a] * e) % (self.order - 1)]
        return np.where(a == 0, 0 if e else 1, out)

    def sum(self, a, axis: int = 0) -> np.ndarray:
        a = self.asarray(a)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        return pack_array(self._digits[a].sum(axis=axis) % self.p, self.p)

    def matmul(self, a, b) -> np.ndarray:
        a, b = self.asarray(a), self.asarray(b)
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for i in range(a.shape[0]):
            out[i] = self.sum(self.mul(a[i][:, None], b), axis=0)
        return out

    def conj(self, a, q: int) -> np.ndarray:
        """Entrywise ``x -> x**q``."""
        return self.pow(a, q)

    def row_reduce(self, a) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and pivot columns."""
        a = self.asarray(a).copy()
        rows, cols = a.shape
        pivots: list[int] = []
        r = 0
        for col in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(a[r:, col])
            if nz.size == 0:
                continue
            piv = r + nz[0]
            if piv != r:
                a[[r, piv]] = a[[piv, r]]
            a[r] = self.mul(a[r], self.inv(a[r, col]))
            others = np.flatnonzero(a[:, col])
            others = others[others != r]
            if others.size:
                a[others] = self.sub(a[others], self.mul(a[others, col][:, None], a[r][None, :]))
            pivots.append(col)
            r += 1
        return a, pivots

    def rank(self, a) -> int:
        a = self.asarray(a)
        if a.size == 0:
            return 0
        rows, cols = a.shape
        a = a.copy()
        r = 0
        for col in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(a[r:, col])
            if nz.size == 0:
                continue
            piv = r + nz[0]
            if piv != r:
                a[[r, piv]] = a[[piv, r]]
            below = r + 1 + np.flatnonzero(a[r + 1 :, col])
            if below.size:
                factor = self.mul(a[below, col], self.inv(a[r, col]))
                a[below] = self.sub(a[below], self.mul(factor[:, None], a[r][None, :]))
            r += 1
        return r

    # polynomials: ascending coefficient arrays

    def polymul(self, a, b) -> np.ndarray:
        a, b = self.asarray(a), self.asarray(b)
        out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
        for i, c in enumerate(a):
            if c:
                out[i : i + len(b)] = self.add(out[i : i + len(b)], self.mul(c, b))
        return out

    def polydivmod(self, a, b) -> tuple[np.ndarray, np.ndarray]:
        a, b = self.asarray(a).copy(), self.asarray(b)
        db = len(b) - 1
        if len(a) - 1 < db:
            return np.zeros(1, dtype=np.int64), a
        inv_lead = self.inv(b[-1])
        quot = np.zeros(len(a) - db, dtype=np.int64)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c:
                c = self.mul(c, inv_lead)
                quot[i - db] = c
                a[i - db : i + 1] = self.sub(a[i - db : i + 1], self.mul(c, b))
        return quot, a[:db] if db else np.zeros(1, dtype=np.int64)

    def polyeval(self, a, x: int) -> int:
        acc = 0
        ctx = self.ctx
        for c in reversed(self.asarray(a).tolist()):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc


@lru_cache(maxsize=None)
def gf_array(ctx: FieldCtx) -> GFArray:
    return GFArray(ctx)
