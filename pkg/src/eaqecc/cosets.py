"""Exponent-set combinatorics for constacyclic codes of length (q^2+1)/5.

Exponents live modulo ``rn = (q+1) n`` and the roots of ``x^n - lambda`` are
``delta**i`` for ``i`` in ``omega = {1 + (q+1) j}``.  Cosets are orbits of
``i -> q^2 i``; the map ``i -> -q i`` governs Hermitian duality.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable

from .field import prime_power


class FrameError(ValueError):
    pass


@dataclass(frozen=True)
class CodeFrame:
    """Ambient setting for a given q: length, modulus and distinguished exponents.

    ``s`` is ``(q+6)n/2`` for even q and ``(q^2+1)/2`` for odd q.
    ``r_start = (q^2-q)/2`` is the start exponent of the even families and
    is None for odd q.
    """

    q: int
    n: int
    ord_lambda: int
    rn: int
    s: int
    r_start: int | None

    @property
    def p(self) -> int:
        return prime_power(self.q)[0]

    @cached_property
    def omega(self) -> tuple[int, ...]:
        return tuple(1 + self.ord_lambda * j for j in range(self.n))

    @cached_property
    def omega_set(self) -> frozenset[int]:
        return frozenset(self.omega)

    def in_omega(self, i: int) -> bool:
        return i % self.ord_lambda == 1 % self.ord_lambda and 0 <= i < self.rn

    def index(self, i: int) -> int:
        """Position j of exponent ``1 + ord_lambda * j`` in omega."""
        return (i % self.rn - 1) // self.ord_lambda

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "ord_lambda": self.ord_lambda,
            "rn": self.rn,
            "s": self.s,
            "r_start": self.r_start,
        }


@lru_cache(maxsize=None)
def make_frame(q: int) -> CodeFrame:
    if not isinstance(q, int) or prime_power(q) is None:
        raise FrameError("q must be a prime power")
    if (q * q + 1) % 5:
        raise FrameError(f"q^2 + 1 = {q * q + 1} is not divisible by 5")
    n = (q * q + 1) // 5
    if gcd(n, q) != 1:
        raise FrameError(f"gcd(n, q) = {gcd(n, q)} != 1")
    ord_lambda = q + 1
    rn = ord_lambda * n
    if q % 2 == 0:
        s = (q + 6) * n // 2
        r_start = (q * q - q) // 2
    else:
        s = (q * q + 1) // 2
        r_start = None
    frame = CodeFrame(q, n, ord_lambda, rn, s, r_start)
    for name, v in (("s", s), ("r_start", r_start)):
        if v is not None and not frame.in_omega(v):
            raise FrameError(f"{name} = {v} is not in omega")
    return frame


@dataclass(frozen=True)
class Coset:
    rep: int
    elems: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, i: int) -> bool:
        return i in self.elems

    def to_dict(self) -> dict:
        return {"rep": self.rep, "elems": list(self.elems)}


def omega(frame: CodeFrame) -> list[int]:
    return list(frame.omega)


def _check_exponent(i: int, frame: CodeFrame) -> int:
    i %= frame.rn
    if not frame.in_omega(i):
        raise FrameError(f"exponent {i} is not in omega (must be 1 mod {frame.ord_lambda})")
    return i


def coset_of(i: int, frame: CodeFrame) -> Coset:
    """q^2-cyclotomic coset of ``i`` modulo rn.  Any member (or any integer
    congruent to one mod rn) is accepted as the key."""
    i = _check_exponent(i, frame)
    return _coset_table(frame)[i]


@lru_cache(maxsize=16)
def _coset_table(frame: CodeFrame) -> dict[int, Coset]:
    q2, rn = frame.q * frame.q, frame.rn
    table: dict[int, Coset] = {}
    for i in frame.omega:
        if i in table:
            continue
        orbit = [i]
        x = i * q2 % rn
        while x != i:
            orbit.append(x)
            x = x * q2 % rn
        c = Coset(min(orbit), tuple(sorted(orbit)))
        for x in orbit:
            table[x] = c
    return table


def partition(frame: CodeFrame) -> list[Coset]:
    """All cosets of omega, ordered by representative."""
    return sorted(set(_coset_table(frame).values()), key=lambda c: c.rep)


def coset_union(indices: Iterable[int], frame: CodeFrame) -> frozenset[int]:
    out: set[int] = set()
    for i in indices:
        out.update(coset_of(i, frame))
    return frozenset(out)


def _check_subset(S: Iterable[int], frame: CodeFrame) -> frozenset[int]:
    S = frozenset(S)
    bad = sorted(x for x in S if not frame.in_omega(x))
    if bad:
        raise FrameError(f"exponents {bad[:5]} are not in omega")
    return S


def neg_q_image(S: Iterable[int], frame: CodeFrame) -> frozenset[int]:
    """``{-q x mod rn : x in S}``."""
    S = _check_subset(S, frame)
    image = frozenset((-frame.q * x) % frame.rn for x in S)
    # -q = 1 (mod q+1), so the image can only leave omega if the frame is inconsistent
    if not image <= frame.omega_set:
        raise FrameError("-q image left omega")
    return image


def is_coset_closed(Z: Iterable[int], frame: CodeFrame) -> bool:
    Z = frozenset(Z)
    q2, rn = frame.q * frame.q, frame.rn
    return all(z * q2 % rn in Z for z in Z)


@dataclass(frozen=True)
class DefiningSetDecomposition:
    Z: tuple[int, ...]
    Z1: tuple[int, ...]
    Z2: tuple[int, ...]

    @property
    def c(self) -> int:
        return len(self.Z1)

    def to_dict(self) -> dict:
        return {"Z": list(self.Z), "Z1": list(self.Z1), "Z2": list(self.Z2), "c": self.c}


def decompose(Z: Iterable[int], frame: CodeFrame) -> DefiningSetDecomposition:
    Z = _check_subset(Z, frame)
    if not is_coset_closed(Z, frame):
        warnings.warn("defining set is not a union of q^2-cyclotomic cosets", stacklevel=2)
    Z1 = Z & neg_q_image(Z, frame)
    return DefiningSetDecomposition(tuple(sorted(Z)), tuple(sorted(Z1)), tuple(sorted(Z - Z1)))


def dual_containing(Z: Iterable[int], frame: CodeFrame) -> bool:
    """True iff the code with defining set Z contains its Hermitian dual."""
    return decompose(Z, frame).c == 0


def consecutive_run(Z: Iterable[int], frame: CodeFrame) -> int:
    """Longest run ``1 + ord_lambda * j, ..., 1 + ord_lambda * (j + L - 1)``
    inside Z, with j taken cyclically mod n."""
    Z = _check_subset(Z, frame)
    n = frame.n
    hit = [False] * n
    for z in Z:
        hit[frame.index(z)] = True
    if all(hit):
        return n
    best = cur = 0
    # two passes over the circle catch runs that wrap past j = n - 1
    for j in range(2 * n):
        if hit[j % n]:
            cur += 1
            best = max(best, cur)
        else:
            cur = 0
    return min(best, n)
