"""lambda-constacyclic codes over GF(q^2) from a defining set."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable

import numpy as np

from .cosets import CodeFrame, coset_of, consecutive_run, is_coset_closed
from .field import Felt, FieldError, minimal_polynomial, root_of_unity, tower
from .gfarray import GFArray, gf_array


class CodeError(ValueError):
    pass


class FieldSetup:
    """Fields, lambda and delta for one frame.

    ``lam`` is ``g**((q^2-1)/(q+1))`` in GF(q^2).  ``delta`` is the primitive
    rn-th root of unity ``D**u`` in GF(q^4), where D is the canonical one and
    u is the smallest unit mod rn giving ``delta**n == lam``.
    """

    def __init__(self, frame: CodeFrame):
        q, n, rn = frame.q, frame.n, frame.rn
        self.frame = frame
        self.tower = tw = tower(q)
        self.small, self.big = tw.small, tw.big
        self.gf: GFArray = gf_array(tw.small)
        small, big = self.small, self.big
        if (small.order - 1) % frame.ord_lambda:
            raise CodeError(f"order {frame.ord_lambda} does not divide |GF(q^2)*|")
        self.lam = small.pow(small.g, (small.order - 1) // frame.ord_lambda)
        lam_big = tw.embed(self.lam)
        d0 = root_of_unity(big, rn).v
        base = big.pow(d0, n)
        v, x = None, 1
        for j in range(frame.ord_lambda):
            if x == lam_big:
                v = j
                break
            x = big.mul(x, base)
        if v is None:
            raise CodeError("lambda is not a power of delta^n")
        u = v
        while gcd(u, rn) != 1:
            u += frame.ord_lambda
        self.delta = big.pow(d0, u)
        if big.pow(self.delta, n) != lam_big or big.multiplicative_order(self.delta) != rn:
            raise CodeError("delta construction failed")

    def delta_pow(self, e: int) -> int:
        return self.big.pow(self.delta, e % self.frame.rn)

    @cached_property
    def power_coords(self) -> tuple[np.ndarray, np.ndarray]:
        """``(a, b)`` arrays with ``delta**e = a[e] + b[e] * beta`` for e < rn."""
        return self.tower.power_coords(self.delta, self.frame.rn)


@lru_cache(maxsize=None)
def field_setup(frame: CodeFrame) -> FieldSetup:
    return FieldSetup(frame)


@dataclass(frozen=True)
class ConstacyclicCode:
    frame: CodeFrame
    Z: tuple[int, ...]
    g: tuple[int, ...]
    lam: int

    @property
    def n(self) -> int:
        return self.frame.n

    @property
    def k(self) -> int:
        return self.frame.n - len(self.Z)

    @property
    def setup(self) -> FieldSetup:
        return field_setup(self.frame)

    @property
    def cosets(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for z in self.Z:
            if z not in seen:
                c = coset_of(z, self.frame)
                seen.update(c.elems)
                out.append(c.elems)
        return out

    def evaluate_generator(self, w: int) -> int:
        """g(delta**w) computed in GF(q^4)."""
        st = self.setup
        big, x = st.big, st.delta_pow(w)
        acc = 0
        for c in reversed(self.g):
            acc = big.add(big.mul(acc, x), st.tower.embed(c))
        return acc


def build_code(frame: CodeFrame, Z: Iterable[int]) -> ConstacyclicCode:
    Zs = frozenset(Z)
    bad = [z for z in Zs if not frame.in_omega(z)]
    if bad:
        raise CodeError(f"exponents {sorted(bad)[:5]} are not in omega")
    if not is_coset_closed(Zs, frame):
        raise CodeError("defining set is not a union of q^2-cyclotomic cosets")
    st = field_setup(frame)
    gf, tw = st.gf, st.tower
    q2 = frame.q**2
    g = np.array([1], dtype=np.int64)
    done: set[int] = set()
    for z in sorted(Zs):
        if z in done:
            continue
        orbit = coset_of(z, frame)
        done.update(orbit)
        mp = minimal_polynomial(Felt(st.big, st.delta_pow(orbit.rep)), q2)
        if len(mp) != len(orbit) + 1:
            raise CodeError(f"minimal polynomial degree mismatch for coset {orbit.rep}")
        try:
            coeffs = [tw.project(c.v) for c in mp]
        except FieldError as exc:
            raise CodeError(str(exc)) from exc
        g = gf.polymul(g, np.array(coeffs, dtype=np.int64))
    modulus = np.zeros(frame.n + 1, dtype=np.int64)
    modulus[0] = gf.neg(np.array(st.lam))
    modulus[-1] = 1
    _, rem = gf.polydivmod(modulus, g)
    if np.any(rem):
        raise CodeError("generator polynomial does not divide x^n - lambda")
    return ConstacyclicCode(frame, tuple(sorted(Zs)), tuple(int(c) for c in g), st.lam)


def bch_bound(code: ConstacyclicCode) -> int:
    return consecutive_run(code.Z, code.frame) + 1


@dataclass(frozen=True)
class DistanceCertificate:
    lower: int
    upper: int
    certificate: str | None = None

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact, "certificate": self.certificate}


def distance_certificate(code: ConstacyclicCode) -> DistanceCertificate:
    """Exact d when the BCH bound meets the Singleton bound, else a bracket."""
    if code.k == 0:
        raise CodeError("zero code has no minimum distance")
    singleton = code.n - code.k + 1
    bch = bch_bound(code)
    if bch >= singleton:
        return DistanceCertificate(singleton, singleton, "BCH∧Singleton")
    return DistanceCertificate(bch, singleton)


def parity_check_matrix(code: ConstacyclicCode) -> np.ndarray:
    """(n-k) x n parity-check matrix over GF(q^2) (packed integers).

    Each coset contributes the root row ``(delta**(j z))_j`` split along the
    basis {1, beta} of GF(q^4) over GF(q^2): one row for a singleton coset,
    two for a pair.
    """
    frame = code.frame
    st = code.setup
    n, rn = frame.n, frame.rn
    if not code.Z:
        return np.zeros((0, n), dtype=np.int64)
    a, b = st.power_coords
    j = np.arange(n, dtype=np.int64)
    rows = []
    for orbit in code.cosets:
        idx = (j * orbit[0]) % rn
        rows.append(a[idx])
        if len(orbit) == 1:
            if np.any(b[idx]):
                raise CodeError("singleton coset row left GF(q^2)")
        elif len(orbit) == 2:
            rows.append(b[idx])
        else:
            raise CodeError(f"coset of size {len(orbit)} does not live in GF(q^4)")
    H = np.array(rows, dtype=np.int64)
    if H.shape[0] != len(code.Z) or st.gf.rank(H) != len(code.Z):
        raise CodeError("parity-check matrix is rank deficient")
    return H


def generator_matrix(code: ConstacyclicCode) -> np.ndarray:
    """k x n matrix whose row i holds the coefficients of x^i g(x)."""
    n, k = code.n, code.k
    g = np.array(code.g, dtype=np.int64)
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i : i + len(g)] = g
    return G


def constacyclic_shift(gf: GFArray, lam: int, v: np.ndarray) -> np.ndarray:
    """``(lam * v[n-1], v[0], ..., v[n-2])``."""
    out = np.roll(np.asarray(v, dtype=np.int64), 1, axis=-1)
    out[..., 0] = gf.mul(lam, out[..., 0])
    return out


def hermitian_dual_defining_set(Z: Iterable[int], frame: CodeFrame) -> frozenset[int]:
    """``{z in omega : -q z mod rn not in Z}``."""
    Z = frozenset(Z)
    q, rn = frame.q, frame.rn
    out = frozenset(z for z in frame.omega if (-q * z) % rn not in Z)
    # z -> -q z permutes omega
    if len(out) != frame.n - len(Z & frame.omega_set):
        raise CodeError("-q z mod rn failed to permute omega")
    return out
