"""Cell-by-cell agreement of the five K(m, n) routes."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .closed_form import k_recursive_rows, kappa_double_sum, kappa_simplified
from .intersect import KTable, k_table_operator
from .traffic import ORIENTATION, count_paths, sufficient_bounds

__all__ = ["ROUTES", "CORE_ROUTES", "Cell", "RouteReport", "Violation", "cross_check", "recursion_audit", "route_table"]

ROUTES = ("operator", "recursive", "simplified", "double_sum", "traffic")
# the double sum is least corroborated, so it is reported but never gates
CORE_ROUTES = ("operator", "recursive", "simplified", "traffic")


@dataclass(frozen=True)
class Cell:
    m: int
    n: int
    operator: int
    recursive: int
    simplified: int
    double_sum: Optional[int]
    traffic: int

    def value(self, route: str):
        return getattr(self, route)

    @property
    def agree(self) -> bool:
        return len({self.value(r) for r in ROUTES}) == 1

    @property
    def core_agree(self) -> bool:
        return len({self.value(r) for r in CORE_ROUTES}) == 1


@dataclass
class RouteReport:
    n_max: int
    cells: list[Cell] = field(default_factory=list)
    summary: dict[str, dict[str, int]] = field(default_factory=dict)
    orientation_note: str = ORIENTATION

    @property
    def core_disagreements(self) -> list[Cell]:
        return [c for c in self.cells if not c.core_agree]

    @property
    def double_sum_flags(self) -> list[Cell]:
        return [c for c in self.cells if c.core_agree and c.double_sum != c.operator]

    @property
    def ok(self) -> bool:
        return not self.core_disagreements


def route_table(route: str, n_max: int) -> KTable:
    """The K triangle through ``n_max`` computed along one route."""
    if route == "operator":
        return k_table_operator(n_max)
    if route == "recursive":
        return KTable.from_rows([list(r) for r in k_recursive_rows(n_max)])
    if route == "traffic":
        grid = count_paths(sufficient_bounds(n_max))
        t = KTable(n_max)
        for n in range(n_max + 1):
            for m in range(n + 1):
                assert grid.is_reliable((m, n))
                t.entries[m, n] = grid.count((m, n))
        return t
    fn = {"simplified": kappa_simplified, "double_sum": kappa_double_sum}.get(route)
    if fn is None:
        raise ValueError(f"unknown route {route!r}; choose from {', '.join(ROUTES)}")
    t = KTable(n_max)
    for n in range(n_max + 1):
        for m in range(n + 1):
            t.entries[m, n] = fn(m, n)
    return t


def _safe_double_sum(m, n):
    try:
        return kappa_double_sum(m, n)
    except ArithmeticError:
        return None


def cross_check(n_max: int, inject_fault: Optional[tuple[int, int]] = None) -> RouteReport:
    """Evaluate every route on 0 <= m <= n <= n_max.

    ``inject_fault=(m, n)`` adds 1 to the operator value at that cell; it
    exists to prove that the gate can fail.
    """
    tables = {r: route_table(r, n_max) for r in CORE_ROUTES}
    if inject_fault is not None and inject_fault in tables["operator"]:
        tables["operator"].entries[inject_fault] += 1
    report = RouteReport(n_max)
    for m, n, _ in tables["operator"].records():
        report.cells.append(
            Cell(m, n, *(tables[r][m, n] for r in ("operator", "recursive", "simplified")),
                 _safe_double_sum(m, n), tables["traffic"][m, n])
        )
    for r1, r2 in combinations(ROUTES, 2):
        same = sum(c.value(r1) == c.value(r2) for c in report.cells)
        report.summary[f"{r1}~{r2}"] = {"agree": same, "disagree": len(report.cells) - same}
    return report


@dataclass(frozen=True)
class Violation:
    """K(m, n) != K(m+1, n) - K(m, n-1) at an interior cell."""

    m: int
    n: int
    lhs: int
    rhs: int

    def cells(self) -> tuple[tuple[int, int], ...]:
        return (self.m, self.n), (self.m + 1, self.n), (self.m, self.n - 1)

    def __str__(self):
        return (f"K({self.m},{self.n}) = {self.lhs} but K({self.m + 1},{self.n}) - "
                f"K({self.m},{self.n - 1}) = {self.rhs}")


def recursion_audit(table: KTable) -> list[Violation]:
    out = []
    for n in range(1, table.n_max + 1):
        for m in range(n):
            lhs = table[m, n]
            rhs = table[m + 1, n] - table[m, n - 1]
            if lhs != rhs:
                out.append(Violation(m, n, lhs, rhs))
    return out
