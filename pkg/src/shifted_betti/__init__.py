"""Symmetric shifted monomial ideals: shiftedness tests, linear quotients,
closed Betti formulas, star configurations, and a brute-force Koszul oracle.

Partitions are non-decreasing tuples throughout.
"""

from .betti import BettiTable
from .errors import (
    DegenerateIdealError,
    NotShiftedError,
    PreconditionError,
    ShiftedBettiError,
    SizeGuardError,
    ValidationError,
)
from .ideal import (
    SymmetricIdeal,
    is_shifted,
    is_strongly_shifted,
    is_weakly_polymatroidal,
    locate_generator,
    normalize,
)
from .koszul import betti_oracle
from .nlambda import betti_closed_form, filtration
from .quotients import betti_from_quotients, generator_order, verify_linear_quotients
from .star import StarParams, star_ideal

__all__ = [
    "BettiTable",
    "DegenerateIdealError",
    "NotShiftedError",
    "PreconditionError",
    "ShiftedBettiError",
    "SizeGuardError",
    "StarParams",
    "SymmetricIdeal",
    "ValidationError",
    "betti_closed_form",
    "betti_from_quotients",
    "betti_oracle",
    "filtration",
    "generator_order",
    "is_shifted",
    "is_strongly_shifted",
    "is_weakly_polymatroidal",
    "locate_generator",
    "normalize",
    "star_ideal",
    "verify_linear_quotients",
]
