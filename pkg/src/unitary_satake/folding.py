"""Diagram automorphisms, folded root data and the quasi-split unramified gate.

For a diagram automorphism ``tau`` of the coroot side of ``G``, the fixed
subgroup of the dual group has as roots the restrictions of the coroots of
``G`` to the ``tau``-fixed subspace.  Identifying that restriction with the
orthogonal projection, the folded simple coroots are the ``tau``-orbit
averages of the simple coroots.  This one rule covers the orthogonal orbits
and the adjacent orbit of ``A_{2n}`` alike; the resulting type is checked
against the table of unramified forms rather than assumed.

Transfer of unitarity between ``G`` and the split group ``G(tau)`` is taken
as given; this module only computes its consequences.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import _linalg
from ._rational import Vector, combination, dot, fmt_vec, vec
from .rootdata import (
    RootDatum,
    RootDataError,
    WeightPoint,
    build_datum,
    canonical_type,
    diagram_automorphisms,
    make_datum,
    split_label,
)
from .unitarity import (
    GateVerdict,
    Representation,
    adjoint_representation,
    corollary_gate,
)

HALF = Fraction(1, 2)


class FoldingError(ValueError):
    """No diagram automorphism of the requested order, or an unsupported row."""


TABLE1 = (
    {"base_type": "A_{2n-1}", "tits_label": "^2A'_{2n-1}", "order": 2, "folded_type": "B_n"},
    {"base_type": "A_{2n}", "tits_label": "^2A'_{2n}", "order": 2, "folded_type": "C_n"},
    {"base_type": "D_n", "tits_label": "^2D_n", "order": 2, "folded_type": "C_{n-1}"},
    {"base_type": "D_4", "tits_label": "^3D_4", "order": 3, "folded_type": "G_2"},
    {"base_type": "E_6", "tits_label": "^2E_6", "order": 2, "folded_type": "F_4"},
)


def table1() -> list[dict]:
    return [dict(row) for row in TABLE1]


def expected_folded_type(type_label: str, rank: int, order: int) -> tuple[str, int, int]:
    """``(label, rank, table row index)`` of ``G(tau)`` for a supported folding."""
    if type_label == "A" and order == 2 and rank >= 2:
        return ("B", (rank + 1) // 2, 0) if rank % 2 else ("C", rank // 2, 1)
    if type_label == "D" and order == 2:
        return "C", rank - 1, 2
    if type_label == "D" and rank == 4 and order == 3:
        return "G2", 2, 3
    if type_label == "E6" and order == 2:
        return "F4", 4, 4
    raise FoldingError(f"no unramified quasi-split form of type {type_label}{rank} with "
                       f"an order-{order} automorphism")


@dataclass(frozen=True)
class DiagramAutomorphism:
    base: RootDatum
    order: int
    node_permutation: tuple[int, ...]  # 0-based: node i -> node_permutation[i]

    def __post_init__(self):
        c, p = self.base.cartan_matrix, self.node_permutation
        n = len(p)
        if any(c[p[i]][p[j]] != c[i][j] for i in range(n) for j in range(n)):
            raise FoldingError("permutation does not preserve the Cartan matrix")
        if _perm_order(p) != self.order:
            raise FoldingError(f"permutation has order {_perm_order(p)}, not {self.order}")

    def orbits(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(len(self.node_permutation)):
            if i in seen:
                continue
            orb, j = [], i
            while j not in orb:
                orb.append(j)
                j = self.node_permutation[j]
            seen.update(orb)
            out.append(tuple(sorted(orb)))
        return out


def _perm_order(p: Sequence[int]) -> int:
    ident = tuple(range(len(p)))
    cur, k = tuple(p), 1
    while cur != ident:
        cur = tuple(p[i] for i in cur)
        k += 1
    return k


def automorphism_of_order(datum: RootDatum, order: int) -> DiagramAutomorphism:
    """Lexicographically first diagram automorphism of exactly ``order``."""
    for p in diagram_automorphisms(datum.cartan_matrix):
        if _perm_order(p) == order:
            return DiagramAutomorphism(datum, order, p)
    raise FoldingError(f"{datum.name} has no diagram automorphism of order {order}")


def _cartan_isomorphism(src, dst) -> Optional[tuple[int, ...]]:
    n = len(src)
    if len(dst) != n:
        return None

    def extend(prefix):
        i = len(prefix)
        if i == n:
            return tuple(prefix)
        for k in range(n):
            if k in prefix:
                continue
            if all(dst[prefix[j]][k] == src[j][i] and dst[k][prefix[j]] == src[i][j]
                   for j in range(i)):
                found = extend(prefix + [k])
                if found:
                    return found
        return None

    return extend([])


@dataclass(frozen=True)
class FoldedDatum:
    """``G(tau)`` data: ``fixed_datum`` lives in the base ambient space and is
    labeled like ``canonical`` (the explicit-coordinate datum of the same type)."""

    base: RootDatum
    automorphism: DiagramAutomorphism
    fixed_datum: RootDatum
    canonical: RootDatum
    restriction_map: tuple[Vector, ...]  # rows of the projection onto the tau-fixed subspace
    orbit_structure: tuple[tuple[int, ...], ...]  # 1-based base nodes, in fixed-node order
    tits_label: str

    def to_json(self) -> dict:
        return {
            "base_type": self.base.name,
            "order": self.automorphism.order,
            "tits_label": self.tits_label,
            "node_permutation": [p + 1 for p in self.automorphism.node_permutation],
            "folded_type": self.fixed_datum.name,
            "orbits": [list(o) for o in self.orbit_structure],
            "folded_simple_coroots": [fmt_vec(v) for v in self.fixed_datum.simple_coroots],
            "folded_cartan_matrix": [list(r) for r in self.fixed_datum.cartan_matrix],
        }


def _projection(datum: RootDatum, perm: Sequence[int], order: int) -> tuple[Vector, ...]:
    """Matrix (rows) of the tau-average: permutes simple coroots, fixes their orthogonal complement."""
    dim = datum.ambient_dim
    cor = list(datum.simple_coroots)
    complement = _linalg.nullspace(cor) if len(cor) < dim else []
    basis = cor + list(complement)
    images = []
    for i in range(len(cor)):
        orbit, j = [], i
        for _ in range(order):
            orbit.append(cor[j])
            j = perm[j]
        images.append(tuple(sum(col) / order for col in zip(*orbit)))
    images += list(complement)
    # P * basis_k = images_k, so P = images^T * (basis^T)^{-1}
    binv = _linalg.inverse([list(col) for col in zip(*basis)])
    img_cols = [list(col) for col in zip(*images)]
    return tuple(tuple(r) for r in _linalg.matmul(img_cols, binv))


def _apply(matrix: Sequence[Vector], v: Sequence[Fraction]) -> Vector:
    return tuple(dot(row, v) for row in matrix)


@functools.lru_cache(maxsize=None)
def fold(type_label: str, rank: Optional[int], order: int) -> FoldedDatum:
    """Fold ``type_label``/``rank`` along a diagram automorphism of ``order``."""
    base = build_datum(type_label, rank)
    want_label, want_rank, row = expected_folded_type(base.type_label, base.rank, order)
    if base.type_label == "D" and order == 2:
        # swap the two spin nodes; for D4 this singles out one of the three involutions
        auto = DiagramAutomorphism(base, 2, (1, 0) + tuple(range(2, base.rank)))
    else:
        auto = automorphism_of_order(base, order)
    orbits = auto.orbits()
    averaged = [tuple(sum(col) / len(o) for col in zip(*(base.simple_coroots[i] for i in o)))
                for o in orbits]
    raw = make_datum(averaged)
    canonical = build_datum(want_label, want_rank)
    if raw.recognized_type != canonical.recognized_type:
        raise FoldingError(f"folded {base.name} recognized as {raw.recognized_type}, "
                           f"table predicts {canonical.recognized_type}")
    iso = _cartan_isomorphism(raw.cartan_matrix, canonical.cartan_matrix)
    if iso is None:
        raise FoldingError("no Cartan isomorphism onto the canonical datum")
    order_of = sorted(range(len(iso)), key=lambda i: iso[i])
    fixed = make_datum([averaged[i] for i in order_of], canonical.type_label)
    if fixed.cartan_matrix != canonical.cartan_matrix:
        raise FoldingError("relabeled folded Cartan matrix differs from the canonical one")
    return FoldedDatum(base, auto, fixed, canonical,
                       _projection(base, auto.node_permutation, order),
                       tuple(tuple(k + 1 for k in orbits[i]) for i in order_of),
                       TABLE1[row]["tits_label"])


def restrict_weight(folded: FoldedDatum, weight: Sequence) -> Vector:
    """Restrict a weight of the dual group to the fixed subgroup.

    The map is the tau-average, so a weight that is not tau-stable is
    symmetrized over its orbit first.  The result is in the base ambient
    coordinates shared with ``folded.fixed_datum``.
    """
    w = vec(weight)
    if len(w) != folded.base.ambient_dim:
        raise ValueError(f"dimension mismatch: {len(w)} vs {folded.base.ambient_dim}")
    return _apply(folded.restriction_map, w)


def to_canonical_coweight(folded: FoldedDatum, v: Sequence) -> Vector:
    """Carry a coroot-side vector of ``fixed_datum`` to ``canonical`` coordinates."""
    coeffs = _linalg.solve_columns(folded.fixed_datum.simple_coroots, vec(v))
    if coeffs is None:
        raise ValueError("vector is not in the span of the folded coroots")
    return combination(coeffs, folded.canonical.simple_coroots)


def to_canonical_point(folded: FoldedDatum, p: WeightPoint) -> WeightPoint:
    return folded.canonical.point(p.fw_coords)


def weight_descends(datum: RootDatum, weight: Sequence) -> bool:
    """Whether ``weight`` lies in the datum's character lattice."""
    w = vec(weight)
    if len(w) != datum.ambient_dim:
        raise ValueError(f"dimension mismatch: {len(w)} vs {datum.ambient_dim}")
    coeffs = _linalg.solve_columns(datum.character_lattice, w)
    return coeffs is not None and all(c.denominator == 1 for c in coeffs)


def descended_representations(folded: FoldedDatum) -> list[Representation]:
    """Representations of ``G^vee(tau)`` reached by restricting tau-stable ones."""
    reps = [adjoint_representation(folded.canonical)]
    base = folded.base
    if base.type_label == "A" and base.rank % 2 == 1:
        w = to_canonical_coweight(folded, restrict_weight(folded, base.fundamental_coweights[0]))
        reps.append(Representation("restricted vector representation", w))
    elif base.type_label == "D" and folded.automorphism.order == 2:
        for i in (0, 1):
            w = to_canonical_coweight(folded, restrict_weight(folded, base.fundamental_coweights[i]))
            reps.append(Representation(f"restricted spin representation V(omega_{i + 1}^vee)", w))
    return reps


def unramified_gate(type_label: str, rank: Optional[int], order: int,
                    satake_real_part: Sequence) -> GateVerdict:
    """Half-integrality verdict for the quasi-split form, computed on ``G(tau)``.

    ``satake_real_part`` is given in fundamental-weight coordinates of the
    canonical ``G(tau)`` datum.  For ``^2A'_{2n}`` (quasi-split ``PSU(2n+1)``)
    only the adjoint is available, the point ``(1/2) omega_n`` stays
    undetermined and the verdict carries ``psu_obstruction``.
    """
    folded = fold(type_label, rank, order)
    canon = folded.canonical
    nu = canon.point(satake_real_part)
    reps = descended_representations(folded)
    psu = folded.base.type_label == "A" and folded.base.rank % 2 == 0
    if not psu:
        return corollary_gate(canon, reps, nu)
    verdict = corollary_gate(canon, reps, nu, require=False)
    n = canon.rank
    spin_point = tuple(HALF if i == n - 1 else Fraction(0) for i in range(n))
    if verdict.verdict == "undetermined" and verdict.dominant_nu.fw_coords == spin_point:
        dual = build_datum("B", n, "adjoint")
        spin = dual.fundamental_weights[0]
        return GateVerdict("undetermined",
                           "only (1/2) omega_n survives the adjoint test; the spin representation "
                           "that rules it out for PSp(2n) does not descend to SO(2n+1)",
                           verdict.dominant_nu,
                           {"spin_weight": fmt_vec(spin),
                            "descends_to_SO(2n+1)": weight_descends(dual, spin)},
                           psu_obstruction=True)
    return verdict


__all__ = [
    "DiagramAutomorphism", "FoldedDatum", "FoldingError", "TABLE1", "table1", "fold",
    "restrict_weight", "weight_descends", "unramified_gate", "automorphism_of_order",
    "descended_representations", "expected_folded_type", "to_canonical_coweight",
]
