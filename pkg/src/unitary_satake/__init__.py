"""Half-integral spherical unitary Satake parameters, computed exactly.

Root data are built on the coroot side in explicit coordinates; every
number is a ``fractions.Fraction``.
"""

from .folding import fold, restrict_weight, table1, unramified_gate, weight_descends
from .rootdata import (
    RootDatum,
    WeightPoint,
    build_datum,
    coroots_at_level,
    make_datum,
    pairing,
    positive_coroots,
    region_count,
)
from .satake import SatakeParameter, WDParameter, check_pure, half_integral_test, is_tempered, real_part
from .unitarity import (
    R0Table,
    classify_bruteforce,
    classify_half_integral,
    corollary_gate,
    same_classification,
)
from .weyl import dominant_representative, is_hermitian, reflect

__version__ = "0.1.0"

__all__ = [
    "RootDatum", "WeightPoint", "build_datum", "make_datum", "positive_coroots",
    "coroots_at_level", "region_count", "pairing",
    "reflect", "dominant_representative", "is_hermitian",
    "R0Table", "classify_half_integral", "classify_bruteforce", "same_classification",
    "corollary_gate",
    "fold", "restrict_weight", "weight_descends", "unramified_gate", "table1",
    "SatakeParameter", "WDParameter", "real_part", "is_tempered", "half_integral_test",
    "check_pure",
]
