"""Weyl group actions on the weight side, computed in fundamental-weight coordinates."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .rootdata import RootDatum, WeightPoint


@dataclass(frozen=True)
class DominanceCertificate:
    """``dominant = s_{word[-1]} ... s_{word[0]} (input)``; indices are 1-based."""

    input: WeightPoint
    dominant: WeightPoint
    word: tuple[int, ...]


def _reflect_fw(datum: RootDatum, i: int, fw):
    # s_i(nu) = nu - <a_i^vee, nu> a_i, and a_i = sum_j C[i][j] w_j
    c = fw[i]
    if not c:
        return fw
    row = datum.cartan_matrix[i]
    return tuple(x - c * row[j] for j, x in enumerate(fw))


def reflect(datum: RootDatum, i: int, point: WeightPoint) -> WeightPoint:
    """Apply the simple reflection ``s_i`` (1-based index)."""
    if not 1 <= i <= datum.rank:
        raise IndexError(f"simple reflection index {i} out of range 1..{datum.rank}")
    return datum.point(_reflect_fw(datum, i - 1, point.fw_coords))


def dominant_representative(datum: RootDatum, point: WeightPoint) -> DominanceCertificate:
    """Move ``point`` into the closed dominant chamber.

    Always reflects in the lowest-index simple coroot with a negative
    pairing, so the word is deterministic.  Each step lengthens the element
    by one, hence at most ``|Phi^+|`` steps.
    """
    # run on integers scaled by a common denominator; reflections keep them integral
    den = math.lcm(*(x.denominator for x in point.fw_coords))
    fw = [int(x * den) for x in point.fw_coords]
    cartan = datum.cartan_matrix
    word = []
    limit = len(datum.positive_coroots)
    while True:
        neg = next((i for i, x in enumerate(fw) if x < 0), None)
        if neg is None:
            break
        c, row = fw[neg], cartan[neg]
        fw = [x - c * row[j] for j, x in enumerate(fw)]
        word.append(neg + 1)
        if len(word) > limit:
            raise RuntimeError("dominance loop exceeded |Phi^+| steps")
    fw = tuple(Fraction(x, den) for x in fw)
    return DominanceCertificate(point, datum.point(fw), tuple(word))


def longest_element_action(datum: RootDatum, point: WeightPoint) -> WeightPoint:
    """``w_0(nu)`` for dominant ``nu``: the unique element sending C_0 to -C_0."""
    return -dominant_representative(datum, -point).dominant


def is_hermitian(datum: RootDatum, dominant_point: WeightPoint) -> bool:
    """True iff ``w_0(nu) = -nu``."""
    if not dominant_point.is_dominant:
        raise ValueError("is_hermitian expects a dominant point")
    return dominant_representative(datum, -dominant_point).dominant == dominant_point
