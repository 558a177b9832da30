"""Tables of anchored path counts and grid totals, plus their serializations.

The default layout follows the published tables: ``2 <= m <= n <= 8``, and
for the path tables only anchors ``j <= 3`` on the near half of ``P_n``
(``2 * j <= n - 1``).  Cells outside that layout are left out of CSV/JSON
and left blank in markdown.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .errors import InvalidQueryError
from .grid_counts import whom_grid_total
from .path_counts import hom_anchored, whom_anchored

__all__ = ["TableSpec", "TABLES", "table_rows", "render"]

TABLES = ("whom-path", "hom-path", "whom-grid")
FORMATS = ("csv", "json", "md")

PRINTED_MAX_ANCHOR = 3


@dataclass(frozen=True)
class TableSpec:
    which: str
    format: str = "csv"
    m_max: int = 8
    n_max: int = 8
    all_anchors: bool = False

    def __post_init__(self):
        if self.which not in TABLES:
            raise InvalidQueryError(f"unknown table {self.which!r}; choose from {', '.join(TABLES)}")
        if self.format not in FORMATS:
            raise InvalidQueryError(f"unknown format {self.format!r}; choose from {', '.join(FORMATS)}")
        if self.m_max < 1 or self.n_max < 1:
            raise InvalidQueryError("m_max and n_max must be positive")

    @property
    def is_path(self) -> bool:
        return self.which != "whom-grid"

    def anchors(self, n: int) -> range:
        if self.all_anchors:
            return range(n)
        return range(min(PRINTED_MAX_ANCHOR, (n - 1) // 2) + 1)

    def row_keys(self) -> list[tuple[int, int]]:
        """``(m, j)`` for path tables, ``(m, n)`` for the grid table."""
        if self.is_path:
            top = self.n_max - 1 if self.all_anchors else PRINTED_MAX_ANCHOR
            return [(m, j) for m in range(2, self.m_max + 1) for j in range(top + 1)]
        return [(m, n) for m in range(2, self.m_max + 1) for n in range(m, self.n_max + 1)]

    def columns(self) -> list[int]:
        return list(range(2, self.n_max + 1))

    def has_cell(self, row: tuple[int, int], col: int) -> bool:
        if self.is_path:
            m, j = row
            return m <= col and j in self.anchors(col)
        m, _ = row
        return m <= col


def _cell_value(spec: TableSpec, row: tuple[int, int], col: int) -> int:
    if spec.which == "whom-path":
        m, j = row
        return whom_anchored(m, col, j)
    if spec.which == "hom-path":
        m, j = row
        return hom_anchored(m, col, j)
    m, n = row
    return whom_grid_total(m, n, col)


def table_rows(spec: TableSpec) -> list[dict[str, int]]:
    """Nonempty cells in reading order: row by row, left to right."""
    a, b = ("m", "j") if spec.is_path else ("m", "n")
    c = "n" if spec.is_path else "k"
    out = []
    for row in spec.row_keys():
        for col in spec.columns():
            if spec.has_cell(row, col):
                out.append({a: row[0], b: row[1], c: col, "count": _cell_value(spec, row, col)})
    return out


def _to_csv(rows: list[dict[str, int]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["count"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _to_json(spec: TableSpec, rows: list[dict[str, int]]) -> str:
    query = {
        "table": spec.which,
        "m_max": spec.m_max,
        "n_max": spec.n_max,
        "all_anchors": spec.all_anchors,
    }
    cells = [{key: str(v) if key == "count" else v for key, v in r.items()} for r in rows]
    return json.dumps({"query": query, "rows": cells}, indent=2) + "\n"


def _to_markdown(spec: TableSpec, rows: list[dict[str, int]]) -> str:
    keys = ("m", "j") if spec.is_path else ("m", "n")
    col_key = "n" if spec.is_path else "k"
    values = {(r[keys[0]], r[keys[1]], r[col_key]): r["count"] for r in rows}
    cols = spec.columns()
    lines = [
        f"| {keys[0]} | {keys[1]} | " + " | ".join(f"{col_key}={c}" for c in cols) + " |",
        "|---|---|" + "---:|" * len(cols),
    ]
    for row in spec.row_keys():
        cells = [str(values[(*row, c)]) if (*row, c) in values else "" for c in cols]
        if any(cells):
            lines.append(f"| {row[0]} | {row[1]} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def render(spec: TableSpec) -> str:
    rows = table_rows(spec)
    if spec.format == "csv":
        return _to_csv(rows)
    if spec.format == "json":
        return _to_json(spec, rows)
    return _to_markdown(spec, rows)
