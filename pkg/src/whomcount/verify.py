"""Formula-versus-oracle comparison over a box of parameters."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import oracle
from .errors import InvalidQueryError
from .grid_counts import whom_grid_anchored, whom_grid_total
from .path_counts import hom_anchored, hom_anchored_reduced, whom_anchored

__all__ = ["Check", "VerificationReport", "run_verification", "MODES"]

MODES = ("dp", "brute-force", "both")

# Enumeration is exponential in m; these keep a run to a few seconds.
BRUTE_FORCE_MAX_M = 6
BRUTE_FORCE_MAX_CELLS = 25


@dataclass
class Check:
    query: dict
    formula_value: int
    oracle_value: int
    oracle_kind: str

    @property
    def agrees(self) -> bool:
        return self.formula_value == self.oracle_value

    def to_json(self) -> dict:
        return {
            "query": self.query,
            "formula_value": str(self.formula_value),
            "oracle_value": str(self.oracle_value),
            "agrees": self.agrees,
            "oracle_kind": self.oracle_kind,
        }


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> int:
        return sum(c.agrees for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.agrees]

    def to_json(self) -> dict:
        return {
            "checks": [c.to_json() for c in self.checks],
            "summary": {"total": len(self.checks), "pass": self.passed, "fail": self.failed},
            "elapsed": round(self.elapsed_ms, 3),
        }


def _validate(max_m: int, max_n: int, max_k: int, mode: str) -> None:
    if mode not in MODES:
        raise InvalidQueryError(f"mode must be one of {', '.join(MODES)}, got {mode!r}")
    if min(max_m, max_n, max_k) < 1:
        raise InvalidQueryError("bounds must be positive")
    if mode != "dp":
        if max_m > BRUTE_FORCE_MAX_M:
            raise InvalidQueryError(f"brute force is capped at m <= {BRUTE_FORCE_MAX_M}")
        if max_n * max_k > BRUTE_FORCE_MAX_CELLS:
            raise InvalidQueryError(f"brute force is capped at n*k <= {BRUTE_FORCE_MAX_CELLS}")


def _path_checks(m: int, n: int, kinds: list[str]) -> list[Check]:
    graph = oracle.path_graph(n)
    out = []
    for j in range(n):
        formulas = [("hom-path", False, hom_anchored(m, n, j))]
        if m <= n:
            formulas.append(("hom-path-reduced", False, hom_anchored_reduced(m, n, j)))
        formulas.append(("whom-path", True, whom_anchored(m, n, j)))
        for kind in kinds:
            count = oracle.dp_walk_count if kind == "dp" else oracle.brute_force_count
            truth = {weak: count(m, graph, j, weak=weak) for weak in (False, True)}
            for name, weak, value in formulas:
                out.append(Check({"kind": name, "m": m, "n": n, "j": j}, value, truth[weak], kind))
    return out


def _grid_checks(m: int, n: int, k: int, kinds: list[str]) -> list[Check]:
    graph = oracle.grid_graph(n, k)
    out = []
    for kind in kinds:
        count = oracle.dp_walk_count if kind == "dp" else oracle.brute_force_count
        for i in range(n):
            for j in range(k):
                value = whom_grid_anchored(m, n, k, i, j)
                truth = count(m, graph, oracle.grid_vertex(k, i, j), weak=True)
                query = {"kind": "whom-grid", "m": m, "n": n, "k": k, "i": i, "j": j}
                out.append(Check(query, value, truth, kind))
        query = {"kind": "whom-grid-total", "m": m, "n": n, "k": k}
        out.append(Check(query, whom_grid_total(m, n, k), count(m, graph, None, weak=True), kind))
    return out


def run_verification(max_m: int, max_n: int, max_k: int | None = None, mode: str = "dp") -> VerificationReport:
    """Compare every closed form with an oracle for all ``m, n, k`` up to the bounds.

    Path queries cover ``1 <= m <= max_m``, ``1 <= n <= max_n`` and every
    anchor; grid queries additionally cover ``1 <= k <= max_k`` and every
    grid anchor, plus the grid total.
    """
    if max_k is None:
        max_k = max_n
    _validate(max_m, max_n, max_k, mode)
    kinds = ["dp", "brute-force"] if mode == "both" else [mode]

    started = time.perf_counter()
    report = VerificationReport()
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            report.checks.extend(_path_checks(m, n, kinds))
        for n in range(1, max_n + 1):
            for k in range(1, max_k + 1):
                report.checks.extend(_grid_checks(m, n, k, kinds))
    report.elapsed_ms = (time.perf_counter() - started) * 1000
    return report
