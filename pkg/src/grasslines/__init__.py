"""Top intersection numbers on the Grassmannian of lines in P^{n+1}.

Four independent routes to K(m, n) = kappa_{2m, n-m}: shift derivations on
the second exterior power, the row recursion with a Catalan diagonal, two
closed formulas, and counting paths in the Catalan traffic city map.
"""

from .closed_form import binomial, catalan, k_recursive, kappa_double_sum, kappa_simplified
from .errors import DegreeMismatchError, DomainError, IndexRangeError
from .exterior import (
    BasisElement,
    ExtVector,
    apply_d1,
    apply_d2,
    apply_delta11,
    coefficient_of,
    normalize,
    wedge,
)
from .intersect import KappaQuery, KTable, k_of, k_table_operator, kappa
from .traffic import CityPoint, Move, Zone, allowed_moves, classify, count_paths, upsilon
from .verify import RouteReport, cross_check, recursion_audit

__version__ = "0.1.0"
