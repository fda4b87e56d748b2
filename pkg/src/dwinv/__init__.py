"""Mod 2 arithmetic Dijkgraaf-Witten invariants of real quadratic fields.

The invariant Z_k of k = Q(sqrt(p_1 ... p_r)), p_i = 1 (mod 4), is computed
three ways (character sum over Hom(T, Z/2Z), product of indicators, and the
even-graph criterion on the quadratic residue graph), together with the
topological analogue for branched double covers of S^3, exhaustive graph
counting, and prime-tuple density experiments.
"""

from dwinv.dw_invariant import (
    DyadicValue,
    HomElement,
    hirano_sum,
    invariant_fast,
    phi_character,
    product_indicator,
)
from dwinv.errors import (
    BudgetError,
    DimensionError,
    DomainError,
    InternalError,
    LimitError,
    NotEvenError,
    ValidationError,
)
from dwinv.graphs import Graph, euler_decomposition, is_even_graph
from dwinv.qr_graph import PrimeSet, build_qr_graph

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "DimensionError",
    "DomainError",
    "DyadicValue",
    "Graph",
    "HomElement",
    "InternalError",
    "LimitError",
    "NotEvenError",
    "PrimeSet",
    "ValidationError",
    "build_qr_graph",
    "euler_decomposition",
    "hirano_sum",
    "invariant_fast",
    "is_even_graph",
    "phi_character",
    "product_indicator",
]
