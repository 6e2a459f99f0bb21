"""Sweep over coset-closed defining sets of a frame."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .cosets import CodeFrame, consecutive_run, decompose, is_coset_closed, partition
from .derive import EaqeccParams

MAX_CANDIDATES = 2_000_000


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchHit:
    Z: tuple[int, ...]
    reps: tuple[int, ...]
    params: EaqeccParams

    @property
    def is_ea_mds(self) -> bool:
        return self.params.is_ea_mds

    def to_dict(self) -> dict:
        return {"reps": list(self.reps), "Z": list(self.Z), **self.params.to_dict()}


def _consecutive_sets(frame: CodeFrame, max_cosets: int):
    n, step = frame.n, frame.ord_lambda
    cosets = {z: c for c in partition(frame) for z in c.elems}
    seen: set[frozenset[int]] = set()
    for length in range(1, n + 1):
        for start in range(n):
            Z = frozenset(1 + step * ((start + i) % n) for i in range(length))
            if Z in seen or not is_coset_closed(Z, frame):
                continue
            seen.add(Z)
            reps = sorted({cosets[z].rep for z in Z})
            if len(reps) <= max_cosets:
                yield Z, tuple(reps)


def _all_sets(frame: CodeFrame, max_cosets: int):
    cosets = partition(frame)
    total = sum(comb(len(cosets), i) for i in range(1, min(max_cosets, len(cosets)) + 1))
    if total > MAX_CANDIDATES:
        raise SearchError(f"{total} candidate sets exceed the limit {MAX_CANDIDATES}; lower --max-cosets")
    for size in range(1, min(max_cosets, len(cosets)) + 1):
        for combo in itertools.combinations(cosets, size):
            Z = frozenset(z for c in combo for z in c.elems)
            yield Z, tuple(c.rep for c in combo)


def search(frame: CodeFrame, max_cosets: int, consecutive_only: bool = False) -> list[SearchHit]:
    """Parameters of every candidate Z with at most ``max_cosets`` cosets.

    Distances come from the BCH bound and the Singleton bound alone, so a
    hit is exact only when the two meet.  Sorted by c ascending, then d,
    then k descending.
    """
    if max_cosets < 0:
        raise SearchError("max_cosets must be >= 0")
    if max_cosets == 0:
        return []
    sets = _consecutive_sets(frame, max_cosets) if consecutive_only else _all_sets(frame, max_cosets)
    n, q = frame.n, frame.q
    hits = []
    for Z, reps in sets:
        kc = n - len(Z)
        if kc == 0:
            continue
        c = decompose(Z, frame).c
        kq = 2 * kc - n + c
        if kq < 0:
            continue
        singleton = n - kc + 1
        lower = min(consecutive_run(Z, frame) + 1, singleton)
        hits.append(SearchHit(tuple(sorted(Z)), reps, EaqeccParams(q, n, kq, lower, singleton, c)))
    hits.sort(key=lambda h: (h.params.c, -h.params.d_lower, -h.params.k, h.Z))
    return hits
