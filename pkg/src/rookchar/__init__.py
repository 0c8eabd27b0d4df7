"""Characters of the finitary symmetric inverse semigroup (rook monoid)."""
from .errors import RookError
from .notation import format_element, parse
from .quasicycle import Quasicycle, decompose, to_element
from .rook import (
    IDENTITY,
    KILL,
    RookElement,
    as_matrix,
    compose,
    cycle,
    enumerate_rn,
    epsilon,
    from_map,
    rank_deficit,
    star,
    support,
)
from .tensor import SpectralModel, oracle_character, validate_model
from .thoma import ThomaParams, character, cycle_value, validate

__version__ = "0.1.0"
