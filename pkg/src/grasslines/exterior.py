"""Second exterior power of a free module and its shift derivations.

M is spanned by e^{r}, ..., e^1, e^0 where r is the rank bound (r = n + 1
for the Grassmannian of lines in P^{n+1}).  Elements of the second exterior
power are stored sparsely, keyed by canonical pairs (i, j) with i < j.

The shift D1 sends e^i to e^{i-1} (and e^0 to 0).  On wedge products:

    D1(e^i ^ e^j)  = D1 e^i ^ e^j + e^i ^ D1 e^j
    D2(e^i ^ e^j)  = D1^2 e^i ^ e^j + D1 e^i ^ D1 e^j + e^i ^ D1^2 e^j
    D11(e^i ^ e^j) = D1 e^i ^ D1 e^j                  (= D1^2 - D2)

Each rule is a list of (drop_i, drop_j) index shifts, applied with
antisymmetric normalization.  Coefficients are Python ints throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional

from .errors import IndexRangeError

__all__ = [
    "BasisElement",
    "NormalizedTerm",
    "ExtVector",
    "normalize",
    "wedge",
    "apply_d1",
    "apply_d2",
    "apply_delta11",
    "coefficient_of",
    "D1_SHIFTS",
    "D2_SHIFTS",
    "DELTA11_SHIFTS",
]


@dataclass(frozen=True, order=True)
class BasisElement:
    """Canonical basis element e^i ^ e^j with 0 <= i < j <= rank_bound."""

    i: int
    j: int
    rank_bound: int

    def __post_init__(self):
        if not 0 <= self.i < self.j <= self.rank_bound:
            raise IndexRangeError(
                f"basis element needs 0 <= i < j <= {self.rank_bound}, got ({self.i}, {self.j})"
            )

    def __str__(self):
        return f"e{self.j}^e{self.i}"


class NormalizedTerm(NamedTuple):
    sign: int
    basis: Optional[BasisElement]


def normalize(i: int, j: int, rank_bound: int) -> NormalizedTerm:
    """Bring e^i ^ e^j to canonical form.

    >>> normalize(2, 1, 3)
    NormalizedTerm(sign=-1, basis=BasisElement(i=1, j=2, rank_bound=3))
    """
    for idx in (i, j):
        if not 0 <= idx <= rank_bound:
            raise IndexRangeError(f"index {idx} outside 0..{rank_bound}")
    if i == j:
        return NormalizedTerm(0, None)
    if i < j:
        return NormalizedTerm(1, BasisElement(i, j, rank_bound))
    return NormalizedTerm(-1, BasisElement(j, i, rank_bound))


class ExtVector:
    """Immutable sparse element of the second exterior power.

    ``terms`` maps canonical :class:`BasisElement` keys to nonzero ints.
    """

    __slots__ = ("_terms", "rank_bound")

    def __init__(self, terms: Mapping[BasisElement, int] | None = None, rank_bound: int = 0):
        clean = {}
        for b, c in (terms or {}).items():
            if b.rank_bound != rank_bound:
                raise IndexRangeError(
                    f"basis element {b} has rank bound {b.rank_bound}, vector has {rank_bound}"
                )
            if c:
                clean[b] = int(c)
        self._terms = clean
        self.rank_bound = rank_bound

    @classmethod
    def basis(cls, i: int, j: int, rank_bound: int, coeff: int = 1) -> "ExtVector":
        """coeff * e^i ^ e^j in either index order."""
        return wedge(i, j, rank_bound) * coeff

    @classmethod
    def zero(cls, rank_bound: int) -> "ExtVector":
        return cls({}, rank_bound)

    @property
    def terms(self) -> dict[BasisElement, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[BasisElement, int]]:
        return iter(sorted(self._terms.items()))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ExtVector):
            return NotImplemented
        return self.rank_bound == other.rank_bound and self._terms == other._terms

    def __hash__(self):
        return hash((self.rank_bound, frozenset(self._terms.items())))

    def _check(self, other: "ExtVector"):
        if self.rank_bound != other.rank_bound:
            raise IndexRangeError(
                f"rank bounds differ: {self.rank_bound} vs {other.rank_bound}"
            )

    def __add__(self, other: "ExtVector") -> "ExtVector":
        self._check(other)
        out = dict(self._terms)
        for b, c in other._terms.items():
            out[b] = out.get(b, 0) + c
        return ExtVector(out, self.rank_bound)

    def __neg__(self) -> "ExtVector":
        return ExtVector({b: -c for b, c in self._terms.items()}, self.rank_bound)

    def __sub__(self, other: "ExtVector") -> "ExtVector":
        return self + (-other)

    def __mul__(self, k: int) -> "ExtVector":
        return ExtVector({b: c * k for b, c in self._terms.items()}, self.rank_bound)

    __rmul__ = __mul__

    def __repr__(self):
        if not self._terms:
            return f"ExtVector(0, rank_bound={self.rank_bound})"
        body = " + ".join(f"{c}*{b}" for b, c in self.items())
        return f"ExtVector({body}, rank_bound={self.rank_bound})"


def wedge(i: int, j: int, rank_bound: int) -> ExtVector:
    """e^i ^ e^j as a vector (zero when i == j)."""
    sign, b = normalize(i, j, rank_bound)
    if b is None:
        return ExtVector.zero(rank_bound)
    return ExtVector({b: sign}, rank_bound)


D1_SHIFTS = ((1, 0), (0, 1))
D2_SHIFTS = ((2, 0), (1, 1), (0, 2))
DELTA11_SHIFTS = ((1, 1),)


def _apply_shifts(v: ExtVector, shifts: Iterable[tuple[int, int]]) -> ExtVector:
    # D1^k e^i = e^{i-k}, zero once the index would drop below 0
    r = v.rank_bound
    out: dict[BasisElement, int] = {}
    for b, c in v._terms.items():
        for di, dj in shifts:
            i, j = b.i - di, b.j - dj
            if i < 0 or j < 0:
                continue
            sign, nb = normalize(i, j, r)
            if sign:
                out[nb] = out.get(nb, 0) + sign * c
    return ExtVector(out, r)


def apply_d1(v: ExtVector) -> ExtVector:
    return _apply_shifts(v, D1_SHIFTS)


def apply_d2(v: ExtVector) -> ExtVector:
    return _apply_shifts(v, D2_SHIFTS)


def apply_delta11(v: ExtVector) -> ExtVector:
    return _apply_shifts(v, DELTA11_SHIFTS)


def coefficient_of(v: ExtVector, b: BasisElement) -> int:
    """Stored coefficient of the canonical element ``b`` (0 if absent).

    Canonical storage is ascending (i < j), so the coefficient of the
    descending e^1 ^ e^0 is ``-coefficient_of(v, BasisElement(0, 1, r))``.
    """
    return v._terms.get(b, 0)
