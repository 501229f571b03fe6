"""Niederhausen's "Catalan traffic at the beach" city map.

Lattice points (m, n).  With s = 2m + n:

  * m > n            beach, inaccessible (dominates everything else)
  * s == 1           road block, inaccessible
  * s == 0           gate: West, East, NorthEast
  * s < 0            below the line: North, West
  * s > 1            above the line: East, NorthEast

A move is dropped when it would land on an inaccessible point.  Every move
keeps or raises n, so rows are processed bottom-up.  Inside a row, West
edges leave below/gate points and East edges leave gate/above points; East
never lands on a point that emits West, so one right-to-left West sweep
followed by one left-to-right East sweep settles a row.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import DomainError

__all__ = [
    "CityPoint",
    "Zone",
    "Move",
    "Bounds",
    "PathCountGrid",
    "classify",
    "is_accessible",
    "allowed_moves",
    "count_paths",
    "sufficient_bounds",
    "upsilon",
    "ORIENTATION",
]

ORIENTATION = "printed: rules 1-4 and the beach line m - n = 0 read exactly as stated, no axis swap"


class CityPoint(NamedTuple):
    m: int
    n: int


class Zone(enum.Enum):
    BELOW_LINE = "below"
    GATE = "gate"
    ROAD_BLOCK = "block"
    ABOVE_LINE = "above"
    BEACH_FORBIDDEN = "beach"


class Move(enum.Enum):
    NORTH = (0, 1)
    WEST = (-1, 0)
    EAST = (1, 0)
    NORTH_EAST = (1, 1)

    def step(self, p: CityPoint) -> CityPoint:
        dm, dn = self.value
        return CityPoint(p[0] + dm, p[1] + dn)


_RULES = {
    Zone.BELOW_LINE: (Move.NORTH, Move.WEST),
    Zone.ABOVE_LINE: (Move.EAST, Move.NORTH_EAST),
    Zone.GATE: (Move.WEST, Move.EAST, Move.NORTH_EAST),
}


def classify(p) -> Zone:
    m, n = p
    if m > n:
        return Zone.BEACH_FORBIDDEN
    s = 2 * m + n
    if s == 1:
        return Zone.ROAD_BLOCK
    if s == 0:
        return Zone.GATE
    return Zone.BELOW_LINE if s < 0 else Zone.ABOVE_LINE


def is_accessible(p) -> bool:
    return classify(p) in _RULES


def allowed_moves(p) -> frozenset[Move]:
    p = CityPoint(*p)
    zone = classify(p)
    if zone not in _RULES:
        raise DomainError(f"{tuple(p)} is inaccessible ({zone.value})")
    return frozenset(mv for mv in _RULES[zone] if is_accessible(mv.step(p)))


@dataclass(frozen=True)
class Bounds:
    """Closed rectangle m_min..m_max x n_min..n_max."""

    m_min: int
    m_max: int
    n_min: int
    n_max: int

    def __contains__(self, p) -> bool:
        m, n = p
        return self.m_min <= m <= self.m_max and self.n_min <= n <= self.n_max

    def widen_left(self, extra: int) -> "Bounds":
        return Bounds(self.m_min - extra, self.m_max, self.n_min, self.n_max)

    def points(self):
        for n in range(self.n_min, self.n_max + 1):
            for m in range(self.m_min, self.m_max + 1):
                yield CityPoint(m, n)


@dataclass
class PathCountGrid:
    """Exact path counts from the origin inside ``bounds``.

    Only points with at least one path are stored.  ``unreliable`` holds
    points some of whose paths could leave the window; their stored counts
    are lower bounds, not answers.
    """

    bounds: Bounds
    counts: dict[CityPoint, int] = field(default_factory=dict)
    unreliable: set[CityPoint] = field(default_factory=set)

    def count(self, p) -> int:
        p = CityPoint(*p)
        if p not in self.bounds:
            raise DomainError(f"{tuple(p)} outside {self.bounds}")
        return self.counts.get(p, 0)

    def is_reliable(self, p) -> bool:
        return CityPoint(*p) in self.bounds and CityPoint(*p) not in self.unreliable


def _predecessors(p: CityPoint):
    """Accessible points with an allowed move into p (may lie outside any window)."""
    for mv in Move:
        dm, dn = mv.value
        q = CityPoint(p.m - dm, p.n - dn)
        # rows below the origin are never reached
        if q.n >= 0 and is_accessible(q) and mv in allowed_moves(q):
            yield q


def count_paths(bounds: Bounds) -> PathCountGrid:
    if (0, 0) not in bounds:
        raise DomainError(f"bounds {bounds} must contain the origin")
    grid = PathCountGrid(bounds)
    counts = grid.counts
    bad = grid.unreliable

    def pull(p: CityPoint, moves: tuple[Move, ...]) -> int:
        total = 0
        for q in _predecessors(p):
            mv = Move((p.m - q.m, p.n - q.n))
            if mv not in moves:
                continue
            if q not in bounds or q in bad:
                bad.add(p)
            total += counts.get(q, 0)
        return total

    vertical = (Move.NORTH, Move.NORTH_EAST)
    for n in range(max(bounds.n_min, 0), bounds.n_max + 1):
        row = [CityPoint(m, n) for m in range(bounds.m_min, bounds.m_max + 1)]
        acc = {p: (1 if p == (0, 0) else 0) for p in row if is_accessible(p)}
        for p in acc:
            acc[p] += pull(p, vertical)
            if acc[p]:
                counts[p] = acc[p]
        for p in reversed(row):
            if p in acc:
                acc[p] += pull(p, (Move.WEST,))
                if acc[p]:
                    counts[p] = acc[p]
        for p in row:
            if p in acc:
                acc[p] += pull(p, (Move.EAST,))
                if acc[p]:
                    counts[p] = acc[p]
    return grid


def sufficient_bounds(n: int) -> Bounds:
    """Rows 0..n, columns -(2n+2)..n."""
    return Bounds(-(2 * n + 2), n, 0, n)


def upsilon(m: int, n: int) -> int:
    """Number of legal paths from the origin to (m, n), for 0 <= m <= n."""
    if not 0 <= m <= n:
        raise DomainError(f"need 0 <= m <= n, got m={m}, n={n}")
    bounds = sufficient_bounds(n)
    while True:
        grid = count_paths(bounds)
        if grid.is_reliable((m, n)):
            return grid.count((m, n))
        bounds = bounds.widen_left(bounds.m_max - bounds.m_min + 1)
