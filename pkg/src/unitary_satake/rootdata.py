"""Exact root data for the simple types, in explicit ambient coordinates.

Every datum is stored on the coroot side: simple coroots and fundamental
weights are vectors in one ambient space with the ordinary dot product as
pairing, so ``<alpha_i^vee, omega_j> = delta_ij`` is a dot product.  The
classical types use the coordinates

* ``A``: ``alpha_i^vee = e_i - e_{i+1}`` in ``R^{l+1}``;
* ``B`` (``SO(2n+1)``): ``alpha_1^vee = 2 e_1``, ``alpha_i^vee = e_i - e_{i-1}``;
* ``C`` (``PSp(2n)``): ``alpha_1^vee = e_1``, ``alpha_i^vee = e_i - e_{i-1}``;
* ``D`` (``PSO(2n)``): ``alpha_1^vee = e_1 + e_2``, ``alpha_2^vee = e_2 - e_1``,
  ``alpha_i^vee = e_i - e_{i-1}`` (nodes 1 and 2 are the fork),

and the exceptional types use Bourbaki coordinates (with ``F4`` numbered
from the long end).  Nothing in this module uses floating point.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import _linalg
from ._rational import Vector, combination, dot, fmt, fmt_vec, scale, vec

F = Fraction
HALF = F(1, 2)

TYPE_LABELS = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")
ISOGENIES = ("adjoint", "simply_connected", "custom")

_MIN_RANK = {"A": 1, "B": 1, "C": 1, "D": 3}
_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}


class RootDataError(ValueError):
    """Invalid type/rank/isogeny combination or malformed root data."""


# --------------------------------------------------------------------------
# Standard invariants

def degrees_of(letter: str, n: int) -> tuple[int, ...]:
    """Fundamental degrees of the irreducible Weyl group of type ``letter``+``n``."""
    if letter == "A":
        return tuple(range(2, n + 2))
    if letter in ("B", "C"):
        return tuple(range(2, 2 * n + 1, 2))
    if letter == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    table = {
        ("E", 6): (2, 5, 6, 8, 9, 12),
        ("E", 7): (2, 6, 8, 10, 12, 14, 18),
        ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
        ("F", 4): (2, 6, 8, 12),
        ("G", 2): (2, 6),
    }
    try:
        return table[(letter, n)]
    except KeyError:
        raise RootDataError(f"no degree table for type {letter}{n}") from None


def coxeter_number_of(letter: str, n: int) -> int:
    return max(degrees_of(letter, n))


def canonical_type(letter: str, n: int) -> tuple[str, int]:
    """Collapse the low-rank coincidences ``B1=C1=A1``, ``C2=B2``, ``D3=A3``."""
    if letter in ("E", "F", "G"):
        return letter, n
    if letter in ("B", "C") and n == 1:
        return "A", 1
    if letter == "C" and n == 2:
        return "B", 2
    if letter == "D" and n == 3:
        return "A", 3
    return letter, n


def split_label(type_label: str, rank: int) -> tuple[str, int]:
    if len(type_label) == 2:
        return type_label[0], int(type_label[1])
    return type_label, rank


def recognize_cartan(cartan: Sequence[Sequence[int]]) -> tuple[str, int]:
    """Identify a Cartan matrix ``C[i][j] = <alpha_j^vee, alpha_i>`` up to relabeling.

    Returns ``(letter, rank)`` in canonical form (see :func:`canonical_type`).
    """
    n = len(cartan)
    for i in range(n):
        if len(cartan[i]) != n or cartan[i][i] != 2:
            raise RootDataError("not a Cartan matrix: bad shape or diagonal")
        for j in range(n):
            if i != j:
                a, b = cartan[i][j], cartan[j][i]
                if a > 0 or b > 0 or (a == 0) != (b == 0):
                    raise RootDataError("not a Cartan matrix: bad off-diagonal entries")
    edges = {(i, j): cartan[i][j] * cartan[j][i]
             for i in range(n) for j in range(i + 1, n) if cartan[i][j]}
    if any(m not in (1, 2, 3) for m in edges.values()):
        raise RootDataError("not of finite type: bond multiplicity > 3")
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen, stack = {0}, [0]
    while stack:
        for k in adj[stack.pop()]:
            if k not in seen:
                seen.add(k)
                stack.append(k)
    if len(seen) != n or len(edges) != n - 1:
        raise RootDataError("Dynkin diagram is not a connected tree")
    if n == 1:
        return "A", 1
    if 3 in edges.values():
        if n != 2:
            raise RootDataError("triple bond outside rank 2")
        return "G", 2
    doubles = [e for e, m in edges.items() if m == 2]
    if len(doubles) > 1:
        raise RootDataError("more than one double bond")
    if max(len(v) for v in adj.values()) > 3:
        raise RootDataError("node of degree > 3")
    if doubles:
        if any(len(v) > 2 for v in adj.values()):
            raise RootDataError("branched diagram with a double bond")
        if n == 2:
            return "B", 2
        i, j = doubles[0]
        if len(adj[i]) == 2 and len(adj[j]) == 2:
            if n != 4:
                raise RootDataError("interior double bond outside rank 4")
            return "F", 4
        leaf, nbr = (i, j) if len(adj[i]) == 1 else (j, i)
        if len(adj[leaf]) != 1:
            raise RootDataError("double bond not at an end of the diagram")
        # short leaf <=> <alpha_nbr^vee, alpha_leaf> == -1
        return ("B", n) if cartan[leaf][nbr] == -1 else ("C", n)
    branch = [i for i, v in adj.items() if len(v) == 3]
    if not branch:
        return "A", n
    if len(branch) > 1:
        raise RootDataError("more than one branch node")
    b = branch[0]
    arms = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [k for k in adj[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return canonical_type("D", n)
    if arms == [1, 2, 2]:
        return "E", 6
    if arms == [1, 2, 3]:
        return "E", 7
    if arms == [1, 2, 4]:
        return "E", 8
    raise RootDataError(f"not of finite type: arm lengths {arms}")


# --------------------------------------------------------------------------
# Data types

@dataclass(frozen=True)
class Coroot:
    """A positive coroot with its level ``<vector, rho>``."""

    vector: Vector
    level: int
    simple_coordinates: tuple[int, ...]


@dataclass(frozen=True)
class WeightPoint:
    """A point of the weight side, kept in both coordinate systems."""

    fw_coords: Vector
    ambient_coords: Vector

    def __neg__(self) -> "WeightPoint":
        return WeightPoint(tuple(-x for x in self.fw_coords),
                           tuple(-x for x in self.ambient_coords))

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self.fw_coords)

    @property
    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.fw_coords)


@dataclass(frozen=True)
class RootDatum:
    type_label: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    fundamental_weights: tuple[Vector, ...]
    fundamental_coweights: tuple[Vector, ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    isogeny_label: str
    character_lattice: tuple[Vector, ...]
    # derived, computed once by the constructors
    recognized_type: tuple[str, int] = field(compare=False, repr=False, default=("", 0))
    coroot_type: tuple[str, int] = field(compare=False, repr=False, default=("", 0))
    positive_coroots: tuple[Coroot, ...] = field(compare=False, repr=False, default=())

    @property
    def name(self) -> str:
        return self.type_label if len(self.type_label) == 2 else f"{self.type_label}{self.rank}"

    @property
    def rho(self) -> Vector:
        return combination([1] * self.rank, self.fundamental_weights)

    @property
    def highest_coroot(self) -> Coroot:
        return self.positive_coroots[-1]

    @property
    def coxeter_number(self) -> int:
        return coxeter_number_of(*self.coroot_type)

    @property
    def degrees(self) -> tuple[int, ...]:
        return degrees_of(*self.coroot_type)

    def point(self, fw_coords: Sequence) -> WeightPoint:
        fw = vec(fw_coords)
        if len(fw) != self.rank:
            raise RootDataError(f"{self.name} needs {self.rank} fundamental-weight "
                                f"coordinates, got {len(fw)}")
        return WeightPoint(fw, combination(fw, self.fundamental_weights))

    def point_from_ambient(self, ambient: Sequence) -> WeightPoint:
        v = vec(ambient)
        if len(v) != self.ambient_dim:
            raise RootDataError(f"dimension mismatch: {len(v)} vs {self.ambient_dim}")
        p = self.point(dot(c, v) for c in self.simple_coroots)
        if p.ambient_coords != v:
            raise RootDataError("vector does not lie in the span of the fundamental weights")
        return p

    def zero(self) -> WeightPoint:
        return self.point([0] * self.rank)

    def to_json(self) -> dict:
        return {
            "type": self.type_label,
            "rank": self.rank,
            "isogeny": self.isogeny_label,
            "ambient_dim": self.ambient_dim,
            "simple_roots": [fmt_vec(v) for v in self.simple_roots],
            "simple_coroots": [fmt_vec(v) for v in self.simple_coroots],
            "fundamental_weights": [fmt_vec(v) for v in self.fundamental_weights],
            "fundamental_coweights": [fmt_vec(v) for v in self.fundamental_coweights],
            "cartan_matrix": [list(r) for r in self.cartan_matrix],
            "character_lattice": [fmt_vec(v) for v in self.character_lattice],
            "coroot_type": "".join(map(str, self.coroot_type)),
            "coxeter_number": self.coxeter_number,
            "degrees": list(self.degrees),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


# --------------------------------------------------------------------------
# Explicit coordinate tables

def _e(n: int, *entries: tuple[int, object]) -> Vector:
    v = [F(0)] * n
    for i, c in entries:
        v[i] += F(c)
    return tuple(v)


def _tail_sum(n: int, i: int) -> Vector:
    return tuple(F(int(k >= i)) for k in range(n))


_E8_COROOTS = (
    vec([HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF]),
    _e(8, (0, 1), (1, 1)),
    _e(8, (0, -1), (1, 1)),
    _e(8, (1, -1), (2, 1)),
    _e(8, (2, -1), (3, 1)),
    _e(8, (3, -1), (4, 1)),
    _e(8, (4, -1), (5, 1)),
    _e(8, (5, -1), (6, 1)),
)

_E8_WEIGHTS = (
    _e(8, (7, 2)),
    vec([HALF] * 7 + [F(5, 2)]),
    vec([-HALF] + [HALF] * 6 + [F(7, 2)]),
    vec([0, 0, 1, 1, 1, 1, 1, 5]),
    vec([0, 0, 0, 1, 1, 1, 1, 4]),
    vec([0, 0, 0, 0, 1, 1, 1, 3]),
    vec([0, 0, 0, 0, 0, 1, 1, 2]),
    _e(8, (6, 1), (7, 1)),
)

_E7_WEIGHTS = (
    vec([0, 0, 0, 0, 0, 0, -1, 1]),
    vec([HALF] * 6 + [-1, 1]),
    vec([-HALF] + [HALF] * 5 + [F(-3, 2), F(3, 2)]),
    vec([0, 0, 1, 1, 1, 1, -2, 2]),
    vec([0, 0, 0, 1, 1, 1, F(-3, 2), F(3, 2)]),
    vec([0, 0, 0, 0, 1, 1, -1, 1]),
    vec([0, 0, 0, 0, 0, 1, -HALF, HALF]),
)

_E6_WEIGHTS = (
    vec([0, 0, 0, 0, 0, F(-2, 3), F(-2, 3), F(2, 3)]),
    vec([HALF] * 5 + [-HALF, -HALF, HALF]),
    vec([-HALF] + [HALF] * 4 + [F(-5, 6), F(-5, 6), F(5, 6)]),
    vec([0, 0, 1, 1, 1, -1, -1, 1]),
    vec([0, 0, 0, 1, 1, F(-2, 3), F(-2, 3), F(2, 3)]),
    vec([0, 0, 0, 0, 1, F(-1, 3), F(-1, 3), F(1, 3)]),
)


def _coordinates(type_label: str, n: int) -> tuple[tuple[Vector, ...], Optional[tuple[Vector, ...]]]:
    """Simple coroots and, where tabulated, the expected fundamental weights."""
    if type_label == "A":
        cor = tuple(_e(n + 1, (i, 1), (i + 1, -1)) for i in range(n))
        return cor, None
    if type_label in ("B", "C", "D"):
        chain = [_e(n, (i - 1, -1), (i, 1)) for i in range(1, n)]
        if type_label == "B":
            cor = [_e(n, (0, 2))] + chain
            wts = [scale(HALF, _tail_sum(n, 0))] + [_tail_sum(n, i) for i in range(1, n)]
        elif type_label == "C":
            cor = [_e(n, (0, 1))] + chain
            wts = [_tail_sum(n, i) for i in range(n)]
        else:
            cor = [_e(n, (0, 1), (1, 1))] + chain
            w2 = scale(HALF, _tail_sum(n, 0))
            w2 = (-w2[0],) + w2[1:]
            wts = [scale(HALF, _tail_sum(n, 0)), w2] + [_tail_sum(n, i) for i in range(2, n)]
        return tuple(cor), tuple(wts)
    if type_label == "G2":
        cor = (vec([F(2, 3), F(-1, 3), F(-1, 3)]), vec([-1, 1, 0]))
        return cor, (vec([1, 1, -2]), vec([0, 1, -1]))
    if type_label == "F4":
        cor = (vec([1, -1, -1, -1]), vec([0, 0, 0, 2]), vec([0, 0, 1, -1]), vec([0, 1, -1, 0]))
        wts = (vec([1, 0, 0, 0]), vec([F(3, 2), HALF, HALF, HALF]),
               vec([2, 1, 1, 0]), vec([1, 1, 0, 0]))
        return cor, wts
    if type_label == "E8":
        return _E8_COROOTS, _E8_WEIGHTS
    if type_label == "E7":
        return _E8_COROOTS[:7], _E7_WEIGHTS
    if type_label == "E6":
        return _E8_COROOTS[:6], _E6_WEIGHTS
    raise RootDataError(f"unknown type label {type_label!r}")


# --------------------------------------------------------------------------
# Construction

def _dual_basis(vectors: Sequence[Vector], targets: Sequence[Vector]) -> tuple[Vector, ...]:
    """Vectors in span(vectors) dual to ``targets`` under the dot product."""
    gram = [[dot(a, b) for b in vectors] for a in targets]
    # want w_j = sum_k M[j][k] vectors[k] with <targets_i, w_j> = delta_ij
    inv = _linalg.inverse(gram)
    n = len(vectors)
    return tuple(combination([inv[k][j] for k in range(n)], vectors) for j in range(n))


def _generate_positive_coroots(coroots: Sequence[Vector], cartan, weights_rho: Vector) -> tuple[Coroot, ...]:
    n = len(coroots)
    found: set[tuple[int, ...]] = set()
    layer = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found.update(layer)
    everything = list(layer)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in found:
                        p += 1
                    else:
                        break
                pair = sum(beta[j] * cartan[i][j] for j in range(n))
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        everything.extend(nxt)
        layer = nxt
    out = []
    for c in everything:
        v = combination(c, coroots)
        level = dot(v, weights_rho)
        assert level == sum(c)
        out.append(Coroot(v, int(level), c))
    out.sort(key=lambda r: (r.level, r.vector))
    return tuple(out)


def make_datum(simple_coroots: Sequence[Sequence], type_label: Optional[str] = None,
               isogeny_label: str = "adjoint",
               character_lattice: Optional[Sequence[Sequence]] = None,
               expected_weights: Optional[Sequence[Vector]] = None) -> RootDatum:
    """Assemble a :class:`RootDatum` from simple coroots in any ambient space.

    The pairing is the dot product, so the coordinates must carry a
    Weyl-invariant inner product (true for all the explicit tables here and
    for orbit averages of them).
    """
    cor = tuple(vec(c) for c in simple_coroots)
    if not cor:
        raise RootDataError("need at least one simple coroot")
    dim = len(cor[0])
    if any(len(c) != dim for c in cor):
        raise RootDataError("simple coroots of unequal dimension")
    if isogeny_label not in ISOGENIES:
        raise RootDataError(f"isogeny must be one of {ISOGENIES}, got {isogeny_label!r}")
    n = len(cor)
    if _linalg.rank(cor) != n:
        raise RootDataError("simple coroots are linearly dependent")
    roots = tuple(scale(F(2) / dot(c, c), c) for c in cor)
    cartan = tuple(tuple(int(dot(cor[j], roots[i])) for j in range(n)) for i in range(n))
    for i in range(n):
        for j in range(n):
            if dot(cor[j], roots[i]) != cartan[i][j]:
                raise RootDataError("non-integral Cartan entry; coordinates not crystallographic")
    letter, k = recognize_cartan(cartan)
    coletter, cok = recognize_cartan([list(r) for r in zip(*cartan)])
    weights = _dual_basis(cor, cor)
    if expected_weights is not None and tuple(expected_weights) != weights:
        raise RootDataError(f"tabulated fundamental weights disagree with duality for {type_label}")
    coweights = _dual_basis(cor, roots)
    if type_label is None:
        type_label = f"{letter}{k}" if letter in "EFG" else letter
    if isogeny_label == "adjoint":
        lattice = roots
    elif isogeny_label == "simply_connected":
        lattice = weights
    else:
        if character_lattice is None:
            raise RootDataError("custom isogeny needs an explicit character lattice basis")
        lattice = tuple(vec(v) for v in character_lattice)
    rho = combination([1] * n, weights)
    pos = _generate_positive_coroots(cor, cartan, rho)
    return RootDatum(type_label=type_label, rank=n, ambient_dim=dim,
                     simple_roots=roots, simple_coroots=cor,
                     fundamental_weights=weights, fundamental_coweights=coweights,
                     cartan_matrix=cartan, isogeny_label=isogeny_label,
                     character_lattice=lattice, recognized_type=(letter, k),
                     coroot_type=(coletter, cok), positive_coroots=pos)


def validate_type(type_label: str, rank: Optional[int]) -> tuple[str, int]:
    if type_label not in TYPE_LABELS:
        raise RootDataError(f"unknown type {type_label!r}; expected one of {', '.join(TYPE_LABELS)}")
    if type_label in _FIXED_RANK:
        fixed = _FIXED_RANK[type_label]
        if rank is not None and rank != fixed:
            raise RootDataError(f"type {type_label} has rank {fixed}, got {rank}")
        return type_label, fixed
    if rank is None:
        raise RootDataError(f"type {type_label} needs a rank")
    if not isinstance(rank, int) or rank < _MIN_RANK[type_label]:
        raise RootDataError(f"type {type_label} requires rank >= {_MIN_RANK[type_label]}, got {rank}")
    return type_label, rank


@functools.lru_cache(maxsize=None)
def build_datum(type_label: str, rank: Optional[int] = None,
                isogeny_label: str = "adjoint") -> RootDatum:
    """Root datum of type ``type_label`` in the explicit coordinates above.

    ``isogeny_label`` picks the character lattice: ``adjoint`` (root lattice)
    or ``simply_connected`` (weight lattice).  Exceptional labels carry their
    rank (``"E7"``); ``rank`` may be omitted for them.
    """
    type_label, rank = validate_type(type_label, rank)
    if isogeny_label == "custom":
        raise RootDataError("use make_datum() with an explicit lattice for custom isogenies")
    coroots, weights = _coordinates(type_label, rank)
    datum = make_datum(coroots, type_label, isogeny_label, expected_weights=weights)
    letter, k = split_label(type_label, rank)
    if datum.recognized_type != canonical_type(letter, k):
        raise RootDataError(f"coordinates for {type_label}{rank} recognized as "
                            f"{datum.recognized_type}")
    return datum


# --------------------------------------------------------------------------
# Queries

def positive_coroots(datum: RootDatum) -> list[Coroot]:
    return list(datum.positive_coroots)


def coroots_at_level(datum: RootDatum, r: int) -> list[Coroot]:
    if r < 1:
        raise ValueError(f"level must be >= 1, got {r}")
    return [c for c in datum.positive_coroots if c.level == r]


def region_count(datum: RootDatum) -> int:
    """Number of open regions cut out of the dominant chamber by ``alpha^vee = 1``."""
    h = datum.coxeter_number
    m = F(1)
    for d in datum.degrees:
        m *= F(d + h, d)
    assert m.denominator == 1
    return int(m)


def diagram_automorphisms(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All node permutations ``p`` (0-based) with ``C[p[i]][p[j]] == C[i][j]``.

    Returned in lexicographic order; the identity comes first.
    """
    n = len(cartan)
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], used: set[int]) -> None:
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        for k in range(n):
            if k in used or cartan[k][k] != cartan[i][i]:
                continue
            if all(cartan[prefix[j]][k] == cartan[j][i] and cartan[k][prefix[j]] == cartan[i][j]
                   for j in range(i)):
                prefix.append(k)
                used.add(k)
                extend(prefix, used)
                prefix.pop()
                used.discard(k)

    extend([], set())
    return out


def opposition_involution(datum: RootDatum) -> tuple[int, ...]:
    """The permutation ``-w_0`` induces on simple nodes (0-based).

    Trivial exactly when ``-1`` lies in the Weyl group; otherwise (A_n with
    n >= 2, D_n with n odd, E6) it is the unique nontrivial involution of
    the Dynkin diagram.
    """
    letter, n = datum.recognized_type
    ident = tuple(range(datum.rank))
    if not ((letter == "A" and n >= 2) or (letter == "D" and n % 2) or (letter, n) == ("E", 6)):
        return ident
    invol = [p for p in diagram_automorphisms(datum.cartan_matrix)
             if p != ident and all(p[p[i]] == i for i in range(len(p)))]
    if len(invol) != 1:
        raise RootDataError(f"expected one diagram involution for {datum.name}, found {len(invol)}")
    return invol[0]


Pairable = Union[Coroot, WeightPoint, Sequence]


def _as_vector(x: Pairable) -> Sequence[Fraction]:
    if isinstance(x, Coroot):
        return x.vector
    if isinstance(x, WeightPoint):
        return x.ambient_coords
    return vec(x)


def pairing(a: Pairable, b: Pairable) -> Fraction:
    """Exact pairing of a coroot-side vector with a weight-side vector."""
    return dot(_as_vector(a), _as_vector(b))


def coroot_label(datum: RootDatum, c: Coroot) -> str:
    parts = []
    for i, k in enumerate(c.simple_coordinates):
        if k:
            parts.append(f"{'' if k == 1 else k}a{i + 1}")
    return "+".join(parts)


def coroot_json(datum: RootDatum, c: Coroot) -> dict:
    return {"vector": fmt_vec(c.vector), "level": c.level,
            "simple_coordinates": list(c.simple_coordinates),
            "label": coroot_label(datum, c)}


__all__ = [
    "Coroot", "RootDatum", "RootDataError", "WeightPoint", "build_datum", "make_datum",
    "positive_coroots", "coroots_at_level", "region_count", "pairing",
    "recognize_cartan", "canonical_type", "diagram_automorphisms", "opposition_involution", "degrees_of", "coxeter_number_of", "fmt",
]
