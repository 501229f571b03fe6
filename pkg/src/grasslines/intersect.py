"""Top intersection numbers kappa_{a,b} by direct operator application.

kappa_{a,b} is the coefficient of e^1 ^ e^0 in D1^a D2^b (e^{n+1} ^ e^n),
defined when a + 2b = 2n.  Generator and target are both descending, so in
ascending canonical storage the two signs cancel and kappa is the stored
coefficient of (0, 1) in D1^a D2^b applied to canonical (n, n+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import DegreeMismatchError, DomainError
from .exterior import BasisElement, ExtVector, apply_d1, apply_d2, coefficient_of

__all__ = ["KappaQuery", "KTable", "kappa", "apply_word", "k_of", "k_table_operator", "generator"]


@dataclass(frozen=True)
class KappaQuery:
    """Degree of sigma_1^a sigma_2^b on the Grassmannian of lines in P^{n+1}."""

    a: int
    b: int
    n: int

    def __post_init__(self):
        if min(self.a, self.b, self.n) < 0:
            raise DomainError(f"a, b, n must be nonnegative, got {self.a}, {self.b}, {self.n}")
        if self.a + 2 * self.b != 2 * self.n:
            raise DegreeMismatchError(
                f"need a + 2b = 2n, got {self.a} + 2*{self.b} != 2*{self.n}"
            )


def generator(n: int) -> ExtVector:
    """Canonical e^n ^ e^{n+1} in the module of rank bound n + 1."""
    return ExtVector({BasisElement(n, n + 1, n + 1): 1}, n + 1)


def _target(n: int) -> BasisElement:
    return BasisElement(0, 1, n + 1)


def apply_word(word: Iterable[str], n: int) -> ExtVector:
    """Apply a word over {"d1", "d2"} to the generator, rightmost letter first."""
    ops = {"d1": apply_d1, "d2": apply_d2}
    v = generator(n)
    for letter in reversed(list(word)):
        v = ops[letter](v)
    return v


def kappa(q: KappaQuery) -> int:
    v = generator(q.n)
    for _ in range(q.b):
        v = apply_d2(v)
    for _ in range(q.a):
        v = apply_d1(v)
    return coefficient_of(v, _target(q.n))


def k_of(m: int, n: int) -> int:
    """K(m, n) = kappa_{2m, n-m}."""
    if not 0 <= m <= n:
        raise DomainError(f"need 0 <= m <= n, got m={m}, n={n}")
    return kappa(KappaQuery(2 * m, n - m, n))


@dataclass
class KTable:
    """Triangle of K(m, n) for 0 <= m <= n <= n_max."""

    n_max: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, mn: tuple[int, int]) -> int:
        return self.entries[mn]

    def __contains__(self, mn) -> bool:
        return mn in self.entries

    def row(self, n: int) -> list[int]:
        return [self.entries[m, n] for m in range(n + 1)]

    def rows(self) -> list[list[int]]:
        return [self.row(n) for n in range(self.n_max + 1)]

    def diagonal(self) -> list[int]:
        return [self.entries[n, n] for n in range(self.n_max + 1)]

    def column(self, m: int) -> list[int]:
        return [self.entries[m, n] for n in range(m, self.n_max + 1)]

    def records(self) -> Iterator[tuple[int, int, int]]:
        """(m, n, value) in row-major order."""
        for n in range(self.n_max + 1):
            for m in range(n + 1):
                yield m, n, self.entries[m, n]

    @classmethod
    def from_rows(cls, rows: list) -> "KTable":
        t = cls(len(rows) - 1)
        for n, row in enumerate(rows):
            for m, value in enumerate(row):
                t.entries[m, n] = value
        return t


def k_table_operator(n_max: int) -> KTable:
    """Operator-route K triangle.

    Within row n the images D2^b(generator) are built incrementally and each
    receives its own D1^{2(n-b)}.
    """
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    table = KTable(n_max)
    for n in range(n_max + 1):
        target = _target(n)
        v = generator(n)
        for b in range(n + 1):
            m = n - b
            w = v
            for _ in range(2 * m):
                w = apply_d1(w)
            table.entries[m, n] = coefficient_of(w, target)
            v = apply_d2(v)
    return table
