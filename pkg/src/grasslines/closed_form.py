"""Catalan numbers, the K(m, n) recursion, and the two closed formulas.

K(m, n) is shorthand for kappa_{2m, n-m}.  The diagonal is Catalan and each
row is filled leftward with K(m, n) = K(m+1, n) - K(m, n-1).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

from .errors import DomainError

__all__ = [
    "CatalanCache",
    "catalan",
    "binomial",
    "k_recursive",
    "k_recursive_rows",
    "kappa_simplified",
    "kappa_double_sum",
]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


class CatalanCache:
    """Append-only table of Catalan numbers.

    Reads of already-computed entries are lock-free; extension happens under
    a lock so each index is computed once.
    """

    def __init__(self):
        self.values: list[int] = [1]
        self._lock = threading.Lock()

    def get(self, n: int) -> int:
        if n < 0:
            raise DomainError(f"catalan index must be >= 0, got {n}")
        values = self.values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self.values) <= n:
                k = len(self.values)
                q, r = divmod(comb(2 * k, k), k + 1)
                assert r == 0, f"binomial(2*{k}, {k}) not divisible by {k + 1}"
                self.values.append(q)
            return self.values[n]


_CATALAN = CatalanCache()


def catalan(n: int) -> int:
    """C_n = binomial(2n, n) / (n + 1)."""
    return _CATALAN.get(n)


def _check_mn(m: int, n: int):
    if not 0 <= m <= n:
        raise DomainError(f"need 0 <= m <= n, got m={m}, n={n}")


class _RowCache:
    def __init__(self):
        self.rows: list[tuple[int, ...]] = []
        self._lock = threading.Lock()

    def upto(self, n: int) -> list[tuple[int, ...]]:
        rows = self.rows
        if n < len(rows):
            return rows
        with self._lock:
            while len(self.rows) <= n:
                k = len(self.rows)
                row = [0] * (k + 1)
                row[k] = catalan(k)
                for m in range(k - 1, -1, -1):
                    row[m] = row[m + 1] - self.rows[k - 1][m]
                self.rows.append(tuple(row))
            return self.rows


_ROWS = _RowCache()


def k_recursive_rows(n_max: int) -> list[tuple[int, ...]]:
    """Rows 0..n_max of the K triangle; row n holds K(0, n), ..., K(n, n)."""
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    return _ROWS.upto(n_max)[: n_max + 1]


def k_recursive(m: int, n: int) -> int:
    _check_mn(m, n)
    return _ROWS.upto(n)[n][m]


def kappa_simplified(m: int, n: int) -> int:
    """Alternating sum  sum_i (-1)^i binomial(n-m, i) C_{n-i}."""
    _check_mn(m, n)
    b = n - m
    return sum((-1) ** i * binomial(b, i) * catalan(n - i) for i in range(b + 1))


def kappa_double_sum(m: int, n: int) -> int:
    """Double sum over i in 0..n-m, j in 0..2m of

        binomial(2m, j) (n-m)! (m+n-2j-3i+1) / (i! (n-j-2i+1)! (i+j-m)!)

    Terms with a negative factorial argument are dropped (1/(-k)! = 0).
    Accumulated as a Fraction; a non-integral total raises ArithmeticError.
    """
    _check_mn(m, n)
    total = Fraction(0)
    fb = factorial(n - m)
    for i in range(n - m + 1):
        for j in range(2 * m + 1):
            p, q = n - j - 2 * i + 1, i + j - m
            if p < 0 or q < 0:
                continue
            num = binomial(2 * m, j) * fb * (m + n - 2 * j - 3 * i + 1)
            total += Fraction(num, factorial(i) * factorial(p) * factorial(q))
    if total.denominator != 1:
        raise ArithmeticError(f"double sum at (m={m}, n={n}) is not an integer: {total}")
    return total.numerator
