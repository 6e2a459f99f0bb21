"""Command-line front end.

    eaqecc cosets --q 8
    eaqecc family --family even-e3 --q 8 --t 1
    eaqecc table --id 2
    eaqecc verify --q 8 --level minors
    eaqecc search --q 8 --consecutive-only

Exit status is 0 iff every check in the invocation passed; 2 for usage or
parameter errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass

from . import oracle
from .cosets import FrameError, make_frame, partition
from .derive import Family, FamilyError, FamilySpec, ValidationReport, in_range_specs, validate_family
from .field import FieldError
from .search import SearchError, search
from .tables import golden_diff, render_rows, table_def, table_reports

log = logging.getLogger("eaqecc")

CSV_COLUMNS = ["q", "family", "t", "m", "n", "k", "d", "c", "ea_mds", "max_ent"]
LEVELS = ("analytic", "rank", "minors", "exhaustive")


@dataclass(frozen=True)
class CliConfig:
    format: str = "text"
    budget: int = oracle.DEFAULT_BUDGET
    seed: int = 0
    verbosity: int = 0

    def __post_init__(self):
        if self.format not in ("text", "json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.budget <= 0:
            raise ValueError("budget must be positive")


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _csv_row(rep: ValidationReport) -> dict:
    d = rep.derived
    return {
        "q": d.q,
        "family": rep.spec.family.value,
        "t": "" if rep.spec.t is None else rep.spec.t,
        "m": "" if rep.spec.m is None else rep.spec.m,
        "n": d.n,
        "k": d.k,
        "d": d.d_text(),
        "c": d.c,
        "ea_mds": int(d.is_ea_mds),
        "max_ent": int(d.is_maximal_entanglement),
    }


def _mark(passed) -> str:
    return {True: "PASS", False: "FAIL", None: "info"}[passed]


def render_report(rep: ValidationReport) -> str:
    s = rep.spec
    head = f"{s.family.value} (Theorem {s.family.theorem}) q={s.q}"
    if s.t is not None:
        head += f" t={s.t}"
    if s.m is not None:
        head += f" m={s.m}"
    if s.variant:
        head += f" variant={s.variant}"
    n, k, lo, hi = rep.classical
    d = str(lo) if lo == hi else f"{lo}..{hi}"
    lines = [
        head,
        f"  Z  = {list(rep.Z)}",
        f"  Z1 = {list(rep.decomposition.Z1)}  (c = {rep.decomposition.c})",
        f"  classical [{n},{k},{d}]_{s.q * s.q}",
        f"  derived   {rep.derived}",
        f"  predicted {rep.predicted}",
    ]
    sc = rep.singleton
    defect = sc.defect if sc.defect is not None else f"{sc.defect_lower}..{sc.defect_upper}"
    lines.append(f"  EA-Singleton defect {defect}, EA-MDS {sc.is_mds}, d <= (n+2)/2: {sc.d_in_range}")
    for c in rep.checks:
        line = f"  [{_mark(c.passed)}] {c.name}"
        if c.passed is False or c.observed is not None:
            line += f": expected {c.expected}, observed {c.observed}"
        if c.note:
            line += f" ({c.note})"
        lines.append(line)
    for v in rep.verdicts:
        value = "work bound hit" if v.work_bound_hit else v.value
        lines.append(f"  oracle {v.kind}: {value} (work {v.work})")
    lines.append(f"  => {'ok' if rep.ok else 'MISMATCH'}")
    return "\n".join(lines) + "\n"


def _level_kwargs(level: str, budget: int) -> dict:
    i = LEVELS.index(level)
    return {
        "rank": i >= 1,
        "minors_budget": budget if i >= 2 else None,
        "exhaustive_budget": budget if i >= 3 else None,
    }


# -- subcommands --------------------------------------------------------------


def cmd_cosets(args, cfg: CliConfig) -> tuple[str, int]:
    frame = make_frame(args.q)
    cosets = partition(frame)
    if cfg.format == "json":
        return _dump_json({"frame": frame.to_dict(), "cosets": [c.to_dict() for c in cosets]}), 0
    if cfg.format == "csv":
        lines = ["rep,size,elems"] + [f"{c.rep},{len(c)},{' '.join(map(str, c.elems))}" for c in cosets]
        return "\n".join(lines) + "\n", 0
    singles = [c for c in cosets if len(c) == 1]
    lines = [
        f"q={frame.q} n={frame.n} ord_lambda={frame.ord_lambda} rn={frame.rn} s={frame.s} r_start={frame.r_start}",
        f"cosets: {len(cosets)} (singletons: {len(singles)}, pairs: {len(cosets) - len(singles)})",
        f"singletons: {' '.join('{' + str(c.rep) + '}' for c in singles)}",
    ]
    lines += [f"  C_{c.rep} size={len(c)} {{{', '.join(map(str, c.elems))}}}" for c in cosets]
    return "\n".join(lines) + "\n", 0


def cmd_family(args, cfg: CliConfig) -> tuple[str, int]:
    spec = FamilySpec(Family(args.family), args.q, args.t, args.m, args.variant, args.permissive)
    rep = validate_family(spec, **_level_kwargs(args.level, cfg.budget))
    status = 0 if rep.ok else 1
    if cfg.format == "json":
        return _dump_json(rep.to_dict()), status
    if cfg.format == "csv":
        return _csv([_csv_row(rep)]), status
    return render_report(rep), status


def cmd_table(args, cfg: CliConfig) -> tuple[str, int]:
    td = table_def(args.id)
    reports = table_reports(args.id, rank=args.level == "rank")
    text = render_rows(args.id, reports)
    diff = golden_diff(args.id, text)
    ok = not diff and all(r.ok for r in reports)
    status = 0 if ok else 1
    if cfg.format == "json":
        payload = {
            "table": td.id,
            "caption": td.caption,
            "family": td.family.value,
            "theorem": td.family.theorem,
            "rows": [str(r.derived) for r in reports],
            "golden_diff": diff,
            "reports": [r.to_dict() for r in reports],
            "ok": ok,
        }
        return _dump_json(payload), status
    if cfg.format == "csv":
        return _csv([_csv_row(r) for r in reports]), status
    out = [f"Table {td.id}: {td.caption} [computed from {td.family.value}, Theorem {td.family.theorem}]", text.rstrip("\n")]
    bad = [f"  {r.spec.t}: " + ", ".join(c.name for c in r.checks if c.fatal and c.passed is False) for r in reports if not r.ok]
    out.append("checks: all passed" if not bad else "checks failed for t =\n" + "\n".join(bad))
    out.append("golden diff: none" if not diff else "golden diff:\n" + "\n".join(diff))
    return "\n".join(out) + "\n", status


def cmd_verify(args, cfg: CliConfig) -> tuple[str, int]:
    try:
        specs = in_range_specs(args.q)
    except (FrameError, FamilyError) as exc:
        raise FamilyError(f"unsupported q = {args.q}: {exc}") from None
    kwargs = _level_kwargs(args.level, cfg.budget)
    frame = make_frame(args.q)
    cos = oracle.recompute_cosets(frame)
    reports = []
    for spec in specs:
        log.info("validating %s q=%s t=%s", spec.family.value, spec.q, spec.t)
        reports.append(validate_family(spec, **kwargs))
    ok = cos.agrees_with_analytic and all(r.ok for r in reports)
    status = 0 if ok else 1
    if cfg.format == "json":
        payload = {"q": args.q, "level": args.level, "cosets": cos.to_dict(), "reports": [r.to_dict() for r in reports], "ok": ok}
        return _dump_json(payload), status
    if cfg.format == "csv":
        return _csv([_csv_row(r) for r in reports]), status
    lines = [f"verify q={args.q} level={args.level}", f"  cosets oracle: {cos.value} agrees={cos.agrees_with_analytic}"]
    for r in reports:
        s = r.spec
        tag = f"{s.family.value}" + (f" t={s.t}" if s.t is not None else "") + (f" variant={s.variant}" if s.variant else "")
        extra = []
        for c in r.checks:
            if c.name.startswith("rank"):
                extra.append(f"rank={c.observed}")
        for v in r.verdicts:
            if v.work_bound_hit:
                extra.append(f"{v.kind}=budget")
            else:
                extra.append(f"{v.kind}={v.value}({v.work})")
        failed = [c.name for c in r.checks if c.fatal and c.passed is False]
        mark = "ok" if r.ok else "FAIL: " + "; ".join(failed)
        lines.append(f"  {tag:<24} {str(r.derived):<28} {' '.join(extra)} {mark}".rstrip())
    lines.append(f"instances: {len(reports)}, failures: {sum(not r.ok for r in reports)}")
    return "\n".join(lines) + "\n", status


def cmd_search(args, cfg: CliConfig) -> tuple[str, int]:
    frame = make_frame(args.q)
    k = args.max_cosets if args.max_cosets is not None else len(partition(frame))
    hits = search(frame, k, args.consecutive_only)
    if cfg.format == "json":
        return _dump_json({"q": args.q, "max_cosets": k, "consecutive_only": args.consecutive_only,
                           "hits": [h.to_dict() for h in hits]}), 0
    if cfg.format == "csv":
        rows = [
            {"q": h.params.q, "family": "search", "t": "", "m": "", "n": h.params.n, "k": h.params.k,
             "d": h.params.d_text(), "c": h.params.c, "ea_mds": int(h.is_ea_mds),
             "max_ent": int(h.params.is_maximal_entanglement)}
            for h in hits
        ]
        return _csv(rows), 0
    lines = [f"search q={args.q} max_cosets={k} consecutive_only={args.consecutive_only}: {len(hits)} codes"]
    for h in hits:
        flags = []
        if h.is_ea_mds:
            flags.append("EA-MDS")
        if h.params.is_maximal_entanglement:
            flags.append("max-ent")
        reps = " ".join(f"C_{r}" for r in h.reps)
        lines.append(f"  {str(h.params):<24} {','.join(flags):<15} {reps}".rstrip())
    return "\n".join(lines) + "\n", 0


def cmd_probe(args, cfg: CliConfig) -> tuple[str, int]:
    frame = make_frame(args.q)
    verdicts = oracle.random_defining_set_probe(frame, args.trials, cfg.seed)
    bad = [v for v in verdicts if not v.agrees_with_analytic]
    status = 0 if not bad else 1
    if cfg.format == "json":
        return _dump_json({"q": args.q, "trials": args.trials, "seed": cfg.seed,
                           "verdicts": [v.to_dict() for v in verdicts], "ok": not bad}), status
    lines = [f"probe q={args.q} trials={args.trials} seed={cfg.seed}: "
             f"{len(verdicts) - len(bad)} agreements, {len(bad)} disagreements"]
    lines += [f"  rank={v.value} witness={v.witness}" for v in bad]
    return "\n".join(lines) + "\n", status


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--budget", type=int, default=None, help="oracle work budget (default $EAQECC_BUDGET or 1e7)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="eaqecc", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cosets", parents=[common], help="list the q^2-cyclotomic cosets of omega")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("family", parents=[common], help="validate one family instance")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--variant", choices=("A", "B"))
    p.add_argument("--level", choices=LEVELS, default="rank")
    p.add_argument("--permissive", action="store_true", help="allow t outside the theorem range")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("table", parents=[common], help="regenerate a reference table and diff it")
    p.add_argument("--id", type=int, required=True, choices=range(1, 6))
    p.add_argument("--level", choices=("analytic", "rank"), default="analytic")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run an oracle tier over every family instance for q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--level", choices=LEVELS, default="analytic")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="sweep coset-closed defining sets")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-cosets", type=int)
    p.add_argument("--consecutive-only", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("probe", parents=[common], help="rank(HH†) vs |Z1| on random defining sets")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_probe)
    return parser


def run(argv: list[str] | None = None) -> tuple[str, int]:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    cfg = CliConfig(args.format, args.budget or oracle.default_budget(), args.seed, args.verbose)
    try:
        return args.func(args, cfg)
    except (FrameError, FamilyError, FieldError, SearchError, ValueError) as exc:
        return f"error: {exc}\n", 2


def main(argv: list[str] | None = None) -> int:
    out, status = run(argv)
    stream = sys.stdout if status != 2 else sys.stderr
    stream.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
