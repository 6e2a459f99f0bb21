"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line, bypassing output capture,
and asserts the same condition.

    pytest tests/test_acceptance.py -s
    python tests/test_acceptance.py
"""

import sys
import time

import pytest

from eaqecc import oracle
from eaqecc.cli import run
from eaqecc.code import bch_bound, build_code, distance_certificate
from eaqecc.cosets import decompose, make_frame
from eaqecc.derive import (
    Family,
    FamilySpec,
    boundary_profile,
    closed_form_z1,
    ea_singleton_check,
    family_instance,
    in_range_specs,
    maximal_family_instance,
    validate_family,
)
from eaqecc.search import search
from eaqecc.tables import golden_diff, render_rows, table_reports

SUPPORTED_Q = (8, 23, 32, 47, 128)


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    global _capsys
    _capsys = capsys
    yield


_capsys = None


def report(number: int, title: str, ok: bool, detail: str, elapsed: float, limit: float | None = None) -> None:
    timing = f"{elapsed:.1f}s" + (f" (limit {limit:.0f}s)" if limit else "")
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}; {detail}; {timing}"
    with _capsys.disabled():
        print("\n" + line)


def test_criterion_1_table2_end_to_end():
    start = time.perf_counter()
    table_out, table_status = run(["table", "--id", "2", "--level", "rank"])
    verify_out, verify_status = run(["verify", "--q", "8", "--level", "minors"])
    rows = table_out.splitlines()[2:4]
    ok = (
        table_status == 0
        and rows == ["8,3,[[13,5,7;4]]_8", "8,3,[[13,1,9;4]]_8"]
        and verify_status == 0
        and "[[13,5,7;4]]_8" in verify_out
        and "rank=4 mds=True(1716)" in verify_out
        and "rank=4 mds=True(1287)" in verify_out
    )
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 30
    report(1, "Table 2 end-to-end", ok, "rows exact, minors 1716/1287 full rank, rank(HH†)=4", elapsed, 30)
    assert ok, table_out + verify_out


def test_criterion_2_tables_1_3_4_5():
    start = time.perf_counter()
    problems = []
    counts = {}
    for table_id, rows in ((1, 7), (3, 26), (4, 5), (5, 10)):
        reports = table_reports(table_id, rank=True)
        counts[table_id] = len(reports)
        if len(reports) != rows:
            problems.append(f"table {table_id}: {len(reports)} rows")
        diff = golden_diff(table_id, render_rows(table_id, reports))
        if diff:
            problems.append(f"table {table_id}: golden diff")
        for rep in reports:
            rank = next(c.observed for c in rep.checks if c.name.startswith("rank"))
            lo, hi = rep.classical[2], rep.classical[3]
            if rank != 4 or lo != hi or rep.derived.d != rep.predicted.d or not rep.ok:
                problems.append(f"table {table_id} t={rep.spec.t}: rank={rank} d={lo}..{hi}")
            v = oracle.mds_by_minors(build_code(rep.frame, rep.Z), oracle.DEFAULT_BUDGET)
            if not v.work_bound_hit:
                problems.append(f"table {table_id} t={rep.spec.t}: minors unexpectedly within budget")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 300
    detail = f"rows {counts}, byte-identical, rank 4, exact d via BCH∧Singleton (minors over budget)"
    report(2, "Tables 1, 3, 4, 5", ok, detail if not problems else "; ".join(problems[:5]), elapsed, 300)
    assert ok, problems


def test_criterion_3_ea_singleton_equality():
    start = time.perf_counter()
    failures, count = [], 0
    for q in SUPPORTED_Q:
        for spec in in_range_specs(q):
            if spec.family.maximal:
                continue
            inst = family_instance(spec)
            code = build_code(inst.frame, inst.Z)
            dec = decompose(code.Z, inst.frame)
            cert = distance_certificate(code)
            k = 2 * code.k - code.n + dec.c
            count += 1
            if cert.exact is None or code.n + dec.c - k != 2 * (cert.exact - 1):
                failures.append(f"{spec.family.value} q={q} t={spec.t}")
            rep_check = validate_family(spec)
            if ea_singleton_check(rep_check.derived).defect != 0:
                failures.append(f"{spec.family.value} q={q} t={spec.t} (derive)")
    elapsed = time.perf_counter() - start
    ok = not failures
    report(3, "EA-Singleton equality", ok, f"{count} in-range instances, {len(failures)} failures", elapsed)
    assert ok, failures


def test_criterion_4_closed_form_z1():
    start = time.perf_counter()
    mismatches, proven, observed = [], 0, set()
    for q in SUPPORTED_Q:
        frame = make_frame(q)
        for spec in in_range_specs(q):
            if spec.family.maximal:
                continue
            inst = family_instance(spec)
            z1 = set(decompose(inst.Z, frame).Z1)
            if q == 47:
                # proof omitted for 20m+7: record what is observed
                forms = [v for v in ("A", "B") if z1 == closed_form_z1(frame, Family.ODD_20M, v)]
                observed.add(forms[0] if forms else str(sorted(z1)))
                continue
            proven += 1
            if z1 != closed_form_z1(frame, spec.family):
                mismatches.append(f"q={q} t={spec.t}")
    elapsed = time.perf_counter() - start
    ok = not mismatches
    form = {"A": "s-2m(q+1)", "B": "s-(2m+1)(q+1)"}
    seen = ", ".join(form.get(o, o) for o in sorted(observed))
    detail = f"{proven} proven-branch instances, {len(mismatches)} mismatches; q=47 observed Z1 pair uses {seen}"
    report(4, "closed-form Z1", ok, detail, elapsed)
    assert ok, mismatches


def test_criterion_5_dual_containment_boundary():
    start = time.perf_counter()
    failures = []
    for q in SUPPORTED_Q:
        profile = boundary_profile(q)
        cs = [c for _, c in profile]
        if any(cs[:-1]) or cs[-1] != 4:
            failures.append(f"q={q}: {profile}")
    elapsed = time.perf_counter() - start
    ok = not failures
    report(5, "dual-containment boundary", ok, f"5 values of q, {len(failures)} failures", elapsed)
    assert ok, failures


def test_criterion_6_rank_probe():
    start = time.perf_counter()
    verdicts = oracle.random_defining_set_probe(make_frame(8), 200, seed=2024)
    agree = sum(bool(v.agrees_with_analytic) for v in verdicts)
    elapsed = time.perf_counter() - start
    ok = len(verdicts) == 200 and agree == 200 and elapsed < 60
    report(6, "rank(HH†) = |Z1| probe at q=8", ok, f"{agree}/200 agreements", elapsed, 60)
    assert ok


def test_criterion_7_maximal_entanglement():
    start = time.perf_counter()
    failures = []
    for q in SUPPORTED_Q:
        spec = next(s for s in in_range_specs(q) if s.family.maximal)
        inst = maximal_family_instance(spec)
        code = build_code(inst.frame, inst.Z)
        c = decompose(code.Z, inst.frame).c
        kq = 2 * code.k - code.n + c
        n = code.n
        if not (len(code.Z) == 4 and c == 4 and kq == n - 4 and n - kq == c and bch_bound(code) >= 2):
            failures.append(f"q={q}")
        if q == 8:
            H = oracle.parity_check_for(code)
            if oracle.zero_columns(H):
                failures.append("q=8: zero column in H")
    elapsed = time.perf_counter() - start
    ok = not failures
    report(7, "maximal-entanglement families", ok, f"5 values of q, d bracketed by BCH and Singleton; {len(failures)} failures", elapsed)
    assert ok, failures


def test_criterion_8_search_rediscovery():
    start = time.perf_counter()
    out, status = run(["search", "--q", "8", "--consecutive-only"])
    hits = search(make_frame(8), 7, consecutive_only=True)
    found = sorted(str(h.params) for h in hits if h.params.c == 4 and h.is_ea_mds)
    listed = sorted(
        line.split()[0] for line in out.splitlines() if ";4]]" in line and "EA-MDS" in line
    )
    elapsed = time.perf_counter() - start
    want = ["[[13,1,9;4]]_8", "[[13,5,7;4]]_8"]
    ok = status == 0 and found == want and listed == want and elapsed < 60
    report(8, "search rediscovery at q=8", ok, f"EA-MDS hits at c=4: {', '.join(listed)}", elapsed, 60)
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
