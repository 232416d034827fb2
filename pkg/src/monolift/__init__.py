"""Lifting monomial ideals to configurations of linear spaces, with verification."""

from .catalog import NAMED_IDEALS, named_ideal
from .configuration import Configuration, components_artinian, is_generalized_stick_figure
from .errors import MonoliftError, ParseError, PreconditionError, ResourceLimitError
from .field import GF, QQ, Field
from .ideals import graded_betti, hilbert_series, irreducible_decomposition
from .lifting import LiftingMatrix, lift_taylor_complex, lifted_ideal, vandermonde_lifting_matrix
from .monomial import Monomial, MonomialIdeal, parse_ideal
from .poly import Ring, SparsePoly

__version__ = "0.1.0"

__all__ = [
    "NAMED_IDEALS", "named_ideal", "Configuration", "components_artinian", "is_generalized_stick_figure",
    "MonoliftError", "ParseError", "PreconditionError", "ResourceLimitError", "GF", "QQ", "Field",
    "graded_betti", "hilbert_series", "irreducible_decomposition", "LiftingMatrix", "lift_taylor_complex",
    "lifted_ideal", "vandermonde_lifting_matrix", "Monomial", "MonomialIdeal", "parse_ideal", "Ring", "SparsePoly",
]
