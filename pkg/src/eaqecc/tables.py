"""Regeneration of the five reference parameter tables."""

from __future__ import annotations

import difflib
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .derive import Family, FamilySpec, ValidationReport, t_range, validate_family


@dataclass(frozen=True)
class TableDef:
    id: int
    caption: str
    family: Family
    q: int
    column: str
    column_value: int

    def specs(self) -> list[FamilySpec]:
        m = self.column_value if self.column == "m" else None
        lo, hi = t_range(FamilySpec(self.family, self.q, 1, m))
        return [FamilySpec(self.family, self.q, t, m) for t in range(lo, hi + 1)]


TABLES = {
    1: TableDef(1, "Optimal EAQECCs from Theorem 4.5", Family.EVEN_E1, 32, "e", 5),
    2: TableDef(2, "Optimal EAQECCs from Theorem 4.6", Family.EVEN_E3, 8, "e", 3),
    3: TableDef(3, "Optimal EAQECCs from Theorem 4.6", Family.EVEN_E3, 128, "e", 7),
    4: TableDef(4, "Optimal EAQECCs from Theorem 4.7", Family.ODD_20M, 23, "m", 1),
    5: TableDef(5, "Optimal EAQECCs from Theorem 4.7", Family.ODD_20M, 47, "m", 2),
}


def table_def(table_id: int) -> TableDef:
    try:
        return TABLES[table_id]
    except KeyError:
        raise ValueError(f"table id must be one of {sorted(TABLES)}") from None


def table_reports(table_id: int, *, rank: bool = False) -> list[ValidationReport]:
    return [validate_family(spec, rank=rank) for spec in table_def(table_id).specs()]


def render_rows(table_id: int, reports: list[ValidationReport]) -> str:
    td = table_def(table_id)
    lines = [f"q,{td.column},code"]
    lines += [f"{td.q},{td.column_value},{r.derived}" for r in reports]
    return "\n".join(lines) + "\n"


def golden_text(table_id: int) -> str:
    table_def(table_id)
    return resources.files("eaqecc").joinpath("data", f"table{table_id}.csv").read_text(encoding="utf-8")


def golden_diff(table_id: int, regenerated: str) -> list[str]:
    return list(
        difflib.unified_diff(
            golden_text(table_id).splitlines(),
            regenerated.splitlines(),
            f"golden/table{table_id}.csv",
            f"regenerated/table{table_id}.csv",
            lineterm="",
        )
    )


def write_tables(directory: str | Path) -> list[Path]:
    """Regenerate every table into ``directory`` (golden-file format)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for tid in TABLES:
        path = directory / f"table{tid}.csv"
        path.write_text(render_rows(tid, table_reports(tid)), encoding="utf-8")
        out.append(path)
    return out
