"""Exact constructions and LOCC-indistinguishability certificates for orthogonal product-state sets."""

__version__ = "0.1.0"

from .algebra import GaussianRational, RationalMatrix, hermitian_inner_form, nullspace, rref
from .families import build_general, build_odd_square, complete_to_basis
from .locc import Verdict, assemble_constraints, nontrivial_witness, solution_space, verdict
from .sep import distinguish, projective_measurement
from .states import (
    ProductState,
    StateSet,
    Tile,
    TileDiagram,
    states_from_tiles,
    tensor_inner,
    validate_orthogonality,
)

__all__ = [
    "GaussianRational",
    "ProductState",
    "RationalMatrix",
    "StateSet",
    "Tile",
    "TileDiagram",
    "Verdict",
    "assemble_constraints",
    "build_general",
    "build_odd_square",
    "complete_to_basis",
    "distinguish",
    "hermitian_inner_form",
    "nontrivial_witness",
    "nullspace",
    "projective_measurement",
    "rref",
    "solution_space",
    "states_from_tiles",
    "tensor_inner",
    "validate_orthogonality",
    "verdict",
]
