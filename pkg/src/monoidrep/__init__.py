"""monoidrep: exact representation theory of finite monoids.

Green structure (absolute and relative), Clifford-Munn-Ponizovskii
irreducibles, semisimplicity certificates, Mackey decompositions,
Clifford-Mackey-Rieffel stability theory, symmetric extensions G^(.)n and
Howe correspondences, all in exact cyclotomic arithmetic.
"""

__version__ = "0.1.0"

from .cyclo import CycNum, cyc_arith
from .linalg import ExactMatrix, nullspace, solve_linear
from .monoid import (
    FiniteMonoid,
    SubmonoidRef,
    monoid_from_table,
    monoid_from_partial_transformations,
)
from .rep import Representation

__all__ = [
    "CycNum",
    "ExactMatrix",
    "FiniteMonoid",
    "Representation",
    "SubmonoidRef",
    "cyc_arith",
    "monoid_from_table",
    "monoid_from_partial_transformations",
    "nullspace",
    "solve_linear",
    "__version__",
]
