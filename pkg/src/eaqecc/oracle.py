"""Brute-force cross-checks for the analytic pipeline.

Every oracle here recomputes its answer from matrices or raw orbits without
reusing the closed forms it is meant to confirm.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from math import comb
from typing import Any

import numpy as np

from .code import ConstacyclicCode, build_code, distance_certificate, generator_matrix, parity_check_matrix
from .cosets import CodeFrame, decompose, partition

DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    raw = os.environ.get("EAQECC_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class OracleVerdict:
    kind: str
    value: Any
    agrees_with_analytic: bool | None
    work_bound_hit: bool = False
    work: int = 0
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "agrees_with_analytic": self.agrees_with_analytic,
            "work_bound_hit": self.work_bound_hit,
            "work": self.work,
            "witness": self.witness,
        }


def parity_check_for(code: ConstacyclicCode) -> np.ndarray:
    return parity_check_matrix(code)


def hh_dagger(code: ConstacyclicCode, H: np.ndarray | None = None) -> np.ndarray:
    """H H^dagger with entrywise conjugation x -> x^q."""
    H = parity_check_matrix(code) if H is None else H
    gf = code.setup.gf
    return gf.matmul(H, gf.conj(H, code.frame.q).T)


def rank_hh_dagger(code: ConstacyclicCode, H: np.ndarray | None = None) -> int:
    if not code.Z:
        return 0
    return code.setup.gf.rank(hh_dagger(code, H))


def zero_columns(H: np.ndarray) -> list[int]:
    return [int(j) for j in np.flatnonzero(~H.any(axis=0))] if H.size else []


def _matrix_text(M: np.ndarray) -> str:
    return "\n".join(" ".join(str(int(x)) for x in row) for row in M)


def mds_by_minors(code: ConstacyclicCode, work_budget: int | None = None, H: np.ndarray | None = None) -> OracleVerdict:
    """MDS iff every (n-k)-column submatrix of H is invertible."""
    budget = default_budget() if work_budget is None else work_budget
    n, r = code.n, code.n - code.k
    if r < 1:
        raise ValueError("minors oracle needs n - k >= 1")
    total = comb(n, r)
    if total > budget:
        return OracleVerdict("mds", None, None, True, total)
    H = parity_check_matrix(code) if H is None else H
    gf = code.setup.gf
    checked = 0
    for cols in itertools.combinations(range(n), r):
        checked += 1
        sub = H[:, cols]
        if gf.rank(sub) < r:
            witness = {"columns": list(cols), "submatrix": _matrix_text(sub)}
            return OracleVerdict("mds", False, _agrees_mds(code, False), False, checked, witness)
    return OracleVerdict("mds", True, _agrees_mds(code, True), False, checked)


def _agrees_mds(code: ConstacyclicCode, mds: bool) -> bool | None:
    cert = distance_certificate(code)
    if cert.exact is not None:
        return mds
    return None if mds else True


def exhaustive_distance(code: ConstacyclicCode, work_budget: int | None = None) -> OracleVerdict:
    """Minimum weight over all nonzero codewords, enumerated through G.

    Messages are enumerated up to scalar multiples (leading coefficient 1),
    which leaves weights unchanged.
    """
    budget = default_budget() if work_budget is None else work_budget
    Q, k = code.frame.q ** 2, code.k
    total = Q**k
    if total > budget:
        return OracleVerdict("distance", None, None, True, total)
    if k == 0:
        raise ValueError("zero code has no minimum distance")
    G = generator_matrix(code)
    gf = code.setup.gf
    best, best_msg, work = code.n + 1, None, 0
    for lead in range(k):
        # messages (0,...,0,1,*,...,*) with the 1 at position `lead`
        free = k - lead - 1
        base = G[lead]
        for tail in itertools.product(range(Q), repeat=free) if free else [()]:
            word = base
            for j, coef in enumerate(tail):
                if coef:
                    word = gf.add(word, gf.mul(coef, G[lead + 1 + j]))
            work += 1
            w = int(np.count_nonzero(word))
            if w < best:
                best, best_msg = w, [0] * lead + [1] + list(tail)
    cert = distance_certificate(code)
    agrees = cert.lower <= best <= cert.upper
    return OracleVerdict("distance", best, agrees, False, work, {"message": best_msg})


def recompute_cosets(frame: CodeFrame) -> OracleVerdict:
    """Rebuild the coset partition by repeated multiplication and diff it."""
    q2, rn = frame.q * frame.q, frame.rn
    naive: set[frozenset[int]] = set()
    for j in range(frame.n):
        i = 1 + j * (frame.q + 1)
        orbit = {i}
        x = i
        while True:
            x = (x * q2) % rn
            if x == i:
                break
            orbit.add(x)
        naive.add(frozenset(orbit))
    analytic = {frozenset(c.elems) for c in partition(frame)}
    singletons = sum(1 for c in naive if len(c) == 1)
    agrees = naive == analytic
    witness = None
    if not agrees:
        witness = {
            "only_naive": sorted(sorted(c) for c in naive - analytic)[:5],
            "only_partition": sorted(sorted(c) for c in analytic - naive)[:5],
        }
    value = {"cosets": len(naive), "singletons": singletons, "pairs": len(naive) - singletons}
    return OracleVerdict("cosets", value, agrees, False, frame.n, witness)


def random_defining_set_probe(frame: CodeFrame, trials: int, seed: int) -> list[OracleVerdict]:
    """rank(H H^dagger) against |Z1| on random unions of cosets.

    Each coset is included with probability 1/2; empty draws are redrawn.
    """
    rng = random.Random(seed)
    cosets = partition(frame)
    out = []
    for _ in range(trials):
        Z: set[int] = set()
        while not Z:
            for c in cosets:
                if rng.random() < 0.5:
                    Z.update(c.elems)
        code = build_code(frame, Z)
        r = rank_hh_dagger(code)
        c = decompose(Z, frame).c
        witness = None if r == c else {"Z": sorted(Z), "Z1_size": c}
        out.append(OracleVerdict("rank", r, r == c, False, len(Z), witness))
    return out
