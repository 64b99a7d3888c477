"""Half-integral generic spherical unitary points, one simple type at a time.

The pipeline starts from the ``2^l`` candidates with fundamental-weight
coordinates in ``{0, 1/2}`` (anything with a coordinate ``>= 1`` pairs to
more than one against a simple coroot and cannot be unitary) and filters
them:

1. hermitian: ``w_0(nu) = -nu``;
2. level bound: ``<beta^vee, nu> < 1`` for every coroot of the type's
   maximal bounded level ``r0`` (an imported fact, see :class:`R0Table`);
3. genericity: ``<alpha^vee, nu> != 1`` for every positive coroot;
4. fundamental alcove: ``<gamma^vee, nu> < 1``, which is sufficient.

A candidate passing 1-3 but failing 4 is *inconclusive*: the imported bound
was too weak to decide it, which never happens for the supported types.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

from ._rational import Vector, dot, fmt, fmt_vec, in_half_integers, vec
from .rootdata import (
    Coroot,
    RootDatum,
    WeightPoint,
    coroots_at_level,
    opposition_involution,
    split_label,
)
from .weyl import dominant_representative, is_hermitian

HALF = Fraction(1, 2)
DEFAULT_RANK_CEILING = 12
BRUTEFORCE_MAX_RANK = 8

STATUSES = ("unitary", "excluded_hermitian", "excluded_bound", "excluded_reducible", "inconclusive")


class ClassificationError(ValueError):
    """Unsupported configuration for the half-integral classification."""


# --------------------------------------------------------------------------
# r0 configuration

@dataclass(frozen=True)
class R0Entry:
    r0: int
    source: str


def _default_r0(type_label: str, n: int) -> Optional[R0Entry]:
    if type_label == "A":
        return R0Entry(n, "PGL(n): unitary half-integral region is the fundamental alcove; "
                          "bound taken at the highest coroot")
    if type_label == "B":
        return R0Entry(2 * n - 1, "spherical unitary dual of split SO(2n+1)")
    if type_label == "C":
        return R0Entry(n if n % 2 else n + 1, "spherical unitary dual of split PSp(2n)")
    if type_label == "D":
        return R0Entry(n - 1, "spherical unitary dual of split PSO(2n)")
    return {
        "G2": R0Entry(3, "spherical unitary dual of split G2"),
        "F4": R0Entry(9, "spherical unitary dual of split F4"),
        "E6": R0Entry(9, "spherical unitary dual of split adjoint E6"),
        "E7": R0Entry(9, "spherical unitary dual of split adjoint E7"),
        "E8": R0Entry(15, "spherical unitary dual of split E8"),
    }.get(type_label)


class R0Table:
    """Per-type maximal bounded level ``r0``, with optional exact-rank overrides.

    Override files are JSON::

        {"entries": [{"type": "C", "rank": 4, "r0": 5, "source": "..."}]}
    """

    def __init__(self, overrides: Optional[dict[tuple[str, int], R0Entry]] = None):
        self.overrides = dict(overrides or {})

    def lookup(self, type_label: str, rank: int) -> R0Entry:
        hit = self.overrides.get((type_label, rank))
        if hit is None:
            hit = _default_r0(type_label, rank)
        if hit is None:
            raise ClassificationError(f"no r0 value configured for {type_label}{rank}")
        return hit

    @classmethod
    def from_json(cls, data: Union[dict, str, Path]) -> "R0Table":
        from .rootdata import build_datum

        if not isinstance(data, dict):
            data = json.loads(Path(data).read_text(encoding="utf-8"))
        overrides = {}
        for raw in data.get("entries", []):
            try:
                t, r, r0 = raw["type"], raw.get("rank"), int(raw["r0"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ClassificationError(f"malformed r0 entry {raw!r}") from exc
            datum = build_datum(t, r)
            if r0 < 1 or not coroots_at_level(datum, r0):
                raise ClassificationError(f"r0={r0} for {datum.name}: no coroots at that level")
            overrides[(datum.type_label, datum.rank)] = R0Entry(r0, str(raw.get("source", "override")))
        return cls(overrides)


DEFAULT_R0_TABLE = R0Table()


def d_metadata(type_label: str, n: int) -> Optional[int]:
    """Exponent ``d`` of the ``2^d`` unitary alcoves (reported, never checked)."""
    letter, n = split_label(type_label, n)
    if letter in ("A", "B"):
        return 0
    if letter == "C":
        return (n - 1) // 2
    if letter == "D":
        return n // 2 - 1
    return {"G": 1, "F": 1, "E": {6: 1, 7: 3, 8: 4}.get(n)}.get(letter)


def tabulated_level_r0_coroots(type_label: str, n: int) -> Optional[list[Vector]]:
    """Published level-``r0`` coroot lists, for cross-checking the computed ones."""

    def e(*pairs):
        v = [Fraction(0)] * n
        for i, c in pairs:
            v[i - 1] += c
        return tuple(v)

    h = Fraction(1, 2)
    if type_label == "B":
        return [e((n, 2))]
    if type_label == "C":
        if n % 2:
            return [e((i, 1), (n - i, 1)) for i in range(1, (n - 1) // 2 + 1)] + [e((n, 1))]
        return [e((i, 1), (n + 1 - i, 1)) for i in range(1, n // 2 + 1)]
    if type_label == "D" and n % 2 == 0:
        return [e((1, 1), (n, 1)), e((1, -1), (n, 1))] + \
            [e((i, 1), (n + 1 - i, 1)) for i in range(2, n // 2 + 1)]
    if type_label == "G2":
        return [vec([Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3)])]
    if type_label == "F4":
        return [vec([1, 1, 1, -1])]
    if type_label == "E6":
        return [vec([-h, h, -h, h, h, -h, -h, h])]
    if type_label == "E7":
        return [vec([-h, h, -h, h, h, -h, -h, h]), vec([-h, h, h, -h, -h, h, -h, h]),
                vec([h, -h, -h, h, -h, h, -h, h]), vec([0, 0, 0, 0, 1, 1, 0, 0])]
    if type_label == "E8":
        return [vec([h, -h, h, h, h, h, -h, h]), vec([h, h, -h, h, h, -h, h, h]),
                vec([h, h, h, -h, -h, h, h, h]), vec([-h, -h, -h, h, -h, h, h, h])]
    return None


# --------------------------------------------------------------------------
# Verdicts and reports

@dataclass(frozen=True)
class FilterVerdict:
    candidate: WeightPoint
    hermitian: bool
    r0_bound_ok: bool
    r0_violation: Optional[Coroot]
    generic_ok: bool
    generic_witness: Optional[Coroot]
    in_fundamental_alcove: bool
    alcove_pairing: Fraction
    status: str

    @property
    def is_unitary(self) -> bool:
        return self.status == "unitary"

    def to_json(self) -> dict:
        witnesses = {"alcove_pairing": fmt(self.alcove_pairing)}
        if self.r0_violation is not None:
            witnesses["r0_violation"] = fmt_vec(self.r0_violation.vector)
        if self.generic_witness is not None:
            witnesses["reducibility"] = fmt_vec(self.generic_witness.vector)
        return {"nu_fw": fmt_vec(self.candidate.fw_coords), "status": self.status,
                "hermitian": self.hermitian, "r0_bound_ok": self.r0_bound_ok,
                "generic_ok": self.generic_ok,
                "in_fundamental_alcove": self.in_fundamental_alcove,
                "witnesses": witnesses}


def _status(hermitian: bool, bound_ok: bool, generic_ok: bool, alcove: bool) -> str:
    if not hermitian:
        return "excluded_hermitian"
    if not bound_ok:
        return "excluded_bound"
    if not generic_ok:
        return "excluded_reducible"
    return "unitary" if alcove else "inconclusive"


@dataclass
class ClassificationReport:
    type_label: str
    rank: int
    isogeny: str
    method: str
    r0: int
    r0_source: str
    d_metadata: Optional[int]
    verdicts: list[FilterVerdict]
    r0_coroots: list[Coroot] = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)

    @property
    def unitary_set(self) -> list[WeightPoint]:
        return [v.candidate for v in self.verdicts if v.is_unitary]

    @property
    def inconclusive(self) -> bool:
        return any(v.status == "inconclusive" for v in self.verdicts)

    def signature(self) -> tuple:
        """What two independent routes must agree on: each candidate's verdict
        as unitary / not unitary / inconclusive."""
        coarse = {"unitary": "unitary", "inconclusive": "inconclusive"}
        return tuple((v.candidate.fw_coords, coarse.get(v.status, "excluded"))
                     for v in self.verdicts)

    def to_json(self) -> dict:
        return {
            "type": self.type_label,
            "rank": self.rank,
            "isogeny": self.isogeny,
            "method": self.method,
            "r0": self.r0,
            "r0_source": self.r0_source,
            "d_metadata": self.d_metadata,
            "r0_coroots": [fmt_vec(c.vector) for c in self.r0_coroots],
            "candidates": [v.to_json() for v in self.verdicts],
            "unitary_set": [fmt_vec(p.fw_coords) for p in self.unitary_set],
            "inconclusive": self.inconclusive,
            "discrepancies": list(self.discrepancies),
        }


# --------------------------------------------------------------------------
# Pipeline

def enumerate_candidates(datum: RootDatum, rank_ceiling: int = DEFAULT_RANK_CEILING) -> list[WeightPoint]:
    """All points with fundamental-weight coordinates in ``{0, 1/2}``, lexicographically."""
    if datum.rank > rank_ceiling:
        raise ClassificationError(f"rank {datum.rank} exceeds the candidate ceiling {rank_ceiling}")
    return [datum.point(c) for c in itertools.product((Fraction(0), HALF), repeat=datum.rank)]


def _check_epsilon(epsilon) -> None:
    if Fraction(epsilon) != 0:
        raise ClassificationError(
            "only the epsilon = 0 lattice is supported: for rank >= 2 the shifted "
            "lattice is empty unless epsilon = 0, and epsilon = 1/4 for PGL(2) is not considered")


def _first(coroots: Sequence[Coroot], pred: Callable[[Fraction], bool], nu: WeightPoint):
    for c in coroots:
        if pred(dot(c.vector, nu.ambient_coords)):
            return c
    return None


def _verdict(datum: RootDatum, nu: WeightPoint, bound_coroots: Sequence[Coroot]) -> FilterVerdict:
    herm = is_hermitian(datum, nu)
    violation = _first(bound_coroots, lambda x: x >= 1, nu)
    witness = _first(datum.positive_coroots, lambda x: x == 1, nu)
    gamma = dot(datum.highest_coroot.vector, nu.ambient_coords)
    return FilterVerdict(nu, herm, violation is None, violation, witness is None, witness,
                         gamma < 1, gamma,
                         _status(herm, violation is None, witness is None, gamma < 1))


def _report_header(datum: RootDatum, table: R0Table):
    entry = table.lookup(datum.type_label, datum.rank)
    r0_coroots = coroots_at_level(datum, entry.r0)
    if not r0_coroots:
        raise ClassificationError(f"r0={entry.r0} for {datum.name}: no coroots at that level")
    return entry, r0_coroots


def classify_half_integral(datum: RootDatum, table: R0Table = DEFAULT_R0_TABLE,
                           epsilon=0, rank_ceiling: int = DEFAULT_RANK_CEILING) -> ClassificationReport:
    """Run the four filters over every half-integral candidate."""
    _check_epsilon(epsilon)
    entry, r0_coroots = _report_header(datum, table)
    verdicts = [_verdict(datum, nu, r0_coroots) for nu in enumerate_candidates(datum, rank_ceiling)]
    report = ClassificationReport(datum.type_label, datum.rank, datum.isogeny_label, "levels",
                                  entry.r0, entry.source, d_metadata(datum.type_label, datum.rank),
                                  verdicts, r0_coroots)
    expected = tabulated_level_r0_coroots(datum.type_label, datum.rank)
    if expected is not None and (datum.type_label, datum.rank) not in table.overrides:
        got = {c.vector for c in r0_coroots}
        if got != set(expected):
            report.discrepancies.append(
                f"computed level-{entry.r0} coroots differ from the tabulated list: "
                f"computed {sorted(map(fmt_vec, got))}, tabulated {sorted(map(fmt_vec, expected))}")
    return report


def evaluate_point(datum: RootDatum, point: WeightPoint,
                   table: R0Table = DEFAULT_R0_TABLE) -> FilterVerdict:
    """The four filters applied to the dominant representative of ``point``."""
    _, r0_coroots = _report_header(datum, table)
    return _verdict(datum, dominant_representative(datum, point).dominant, r0_coroots)


@functools.lru_cache(maxsize=None)
def unitary_set(datum: RootDatum) -> frozenset:
    """Fundamental-weight coordinates of the half-integral generic unitary points."""
    report = classify_half_integral(datum)
    if report.inconclusive:
        raise ClassificationError(f"classification of {datum.name} is inconclusive")
    return frozenset(p.fw_coords for p in report.unitary_set)


# --------------------------------------------------------------------------
# Independent route

def _reflection_closure_coroots(datum: RootDatum) -> list[Vector]:
    """Positive coroots as the orbit of the simple coroots under simple reflections."""
    cor, roots = datum.simple_coroots, datum.simple_roots
    seen = set(cor)
    frontier = list(cor)
    while frontier:
        nxt = []
        for v in frontier:
            for a, av in zip(roots, cor):
                k = dot(v, a)
                if k:
                    w = tuple(x - k * y for x, y in zip(v, av))
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
        frontier = nxt
    rho = datum.rho
    return sorted(v for v in seen if dot(v, rho) > 0)


def classify_bruteforce(datum: RootDatum, table: R0Table = DEFAULT_R0_TABLE) -> ClassificationReport:
    """Same classification by a separate route, for cross-checking.

    Coroots come from reflection closure instead of root strings, the
    hermitian test uses the opposition involution of the Dynkin diagram
    instead of Weyl-group reflections, the bound is imposed on every coroot
    of level ``>= r0``, and alcove membership is the maximum pairing over all
    positive coroots rather than the highest coroot.
    """
    if datum.rank > BRUTEFORCE_MAX_RANK:
        raise ClassificationError(f"brute-force route limited to rank <= {BRUTEFORCE_MAX_RANK}")
    entry = table.lookup(datum.type_label, datum.rank)
    coroots = _reflection_closure_coroots(datum)
    rho = datum.rho
    levels = [dot(v, rho) for v in coroots]
    r0_coroots = [c for c in datum.positive_coroots if c.level == entry.r0]
    eps = opposition_involution(datum)
    verdicts = []
    for fw in itertools.product((Fraction(0), HALF), repeat=datum.rank):
        nu = datum.point(fw)
        pair = [dot(v, nu.ambient_coords) for v in coroots]
        herm = all(fw[i] == fw[eps[i]] for i in range(datum.rank))
        bad = next((k for k, x in enumerate(pair) if levels[k] >= entry.r0 and x >= 1), None)
        red = next((k for k, x in enumerate(pair) if x == 1), None)
        top = max(pair)

        def as_coroot(k):
            if k is None:
                return None
            return Coroot(coroots[k], int(levels[k]), ())

        verdicts.append(FilterVerdict(nu, herm, bad is None, as_coroot(bad), red is None,
                                      as_coroot(red), top < 1, top,
                                      _status(herm, bad is None, red is None, top < 1)))
    return ClassificationReport(datum.type_label, datum.rank, datum.isogeny_label, "bruteforce",
                                entry.r0, entry.source, d_metadata(datum.type_label, datum.rank),
                                verdicts, r0_coroots)


def same_classification(a: ClassificationReport, b: ClassificationReport) -> bool:
    return (a.type_label, a.rank) == (b.type_label, b.rank) and a.signature() == b.signature()


# --------------------------------------------------------------------------
# Point tests

def integral_point_excluded(datum: RootDatum, point: WeightPoint) -> tuple[bool, Optional[Coroot]]:
    """``(True, witness)`` when some positive coroot pairs to a positive integer."""
    if not point.is_dominant:
        raise ValueError("integral_point_excluded expects a dominant point")
    for c in datum.positive_coroots:
        x = dot(c.vector, point.ambient_coords)
        if x > 0 and x.denominator == 1:
            return True, c
    return False, None


def in_half_lattice(point: WeightPoint) -> bool:
    """``<alpha^vee, nu>`` in ``Z/2`` for every coroot, i.e. all coordinates in ``Z/2``."""
    return all(in_half_integers(x) for x in point.fw_coords)


def rep_half_integral(datum: RootDatum, highest_weight: Sequence, point: WeightPoint) -> bool:
    """Half-integrality of ``point`` for the representation of highest weight
    ``highest_weight``; reduces to one pairing because every other weight
    differs from it by simple coroots."""
    if not in_half_lattice(point):
        raise ValueError("point is not half-integral for the adjoint representation; "
                         "the highest-weight criterion does not apply")
    return in_half_integers(dot(vec(highest_weight), point.ambient_coords))


@dataclass(frozen=True)
class Representation:
    name: str
    highest_weight: Vector


def adjoint_representation(datum: RootDatum) -> Representation:
    return Representation("adjoint", datum.highest_coroot.vector)


def fundamental_representation(datum: RootDatum, i: int, name: Optional[str] = None) -> Representation:
    return Representation(name or f"V(omega_{i}^vee)", datum.fundamental_coweights[i - 1])


def required_representations(datum: RootDatum) -> list[Representation]:
    """Adjoint plus the fundamental representations the type needs."""
    reps = [adjoint_representation(datum)]
    t, n = datum.type_label, datum.rank
    if t == "A" and (n + 1) % 2 == 0:
        reps.append(fundamental_representation(datum, 1, "defining V(omega_1^vee)"))
    elif t == "B":
        reps.append(fundamental_representation(datum, n, "defining V(omega_n^vee)"))
    elif t == "C":
        reps.append(fundamental_representation(datum, 1, "spin V(omega_1^vee)"))
    elif t == "D":
        reps.append(fundamental_representation(datum, 1, "spin V(omega_1^vee)"))
        reps.append(fundamental_representation(datum, n, "defining V(omega_n^vee)"))
    elif t == "E7":
        reps.append(fundamental_representation(datum, 7, "56-dimensional V(omega_7^vee)"))
    return reps


GATE_VERDICTS = ("tempered", "not_half_integral", "not_unitary", "undetermined")


@dataclass(frozen=True)
class GateVerdict:
    verdict: str
    reason: str
    dominant_nu: WeightPoint
    witness: Optional[dict] = None
    psu_obstruction: bool = False

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "reason": self.reason,
               "nu_fw": fmt_vec(self.dominant_nu.fw_coords), "psu_obstruction": self.psu_obstruction}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


RepLike = Union[Representation, Sequence]


def _as_rep(r: RepLike) -> Representation:
    if isinstance(r, Representation):
        return r
    return Representation("V(" + ",".join(fmt_vec(r)) + ")", vec(r))


def corollary_gate(datum: RootDatum, rep_list: Sequence[RepLike], satake_real_part: WeightPoint,
                   *, require: bool = True) -> GateVerdict:
    """Decide what half-integrality says about the real Satake parameter ``nu``.

    ``tempered`` when ``nu = 0``; ``not_unitary`` when a positive coroot pairs
    to a nonzero integer, or when ``nu`` is half-integral but excluded by the
    classification; ``not_half_integral`` when ``nu`` is a nonzero half-integral
    unitary point and one of ``rep_list`` detects it; ``undetermined``
    otherwise.
    """
    reps = [_as_rep(r) for r in rep_list]
    if require:
        have = {r.highest_weight for r in reps}
        missing = [r for r in required_representations(datum) if r.highest_weight not in have]
        if missing:
            raise ValueError(f"{datum.name} requires representations "
                             f"{[r.name for r in required_representations(datum)]}; missing "
                             f"{[r.name for r in missing]}")
    nu = dominant_representative(datum, satake_real_part).dominant
    if nu.is_zero:
        return GateVerdict("tempered", "nu = 0", nu)
    excluded, c = integral_point_excluded(datum, nu)
    if excluded:
        return GateVerdict("not_unitary", "a positive coroot pairs to a positive integer", nu,
                           {"coroot": fmt_vec(c.vector),
                            "pairing": fmt(dot(c.vector, nu.ambient_coords))})
    if not in_half_lattice(nu):
        return GateVerdict("undetermined", "nu is not half-integral for the adjoint representation", nu)
    if nu.fw_coords not in unitary_set(datum):
        verdict = classify_half_integral(datum).verdicts if all(x <= HALF for x in nu.fw_coords) else None
        status = "coordinate above 1/2"
        if verdict is not None:
            status = next(v.status for v in verdict if v.candidate.fw_coords == nu.fw_coords)
        return GateVerdict("not_unitary", f"half-integral point outside the unitary set ({status})", nu)
    # weights of a representation differ by coroots, which pair into (1/2)Z here,
    # so the highest weight alone decides
    for r in reps:
        x = dot(r.highest_weight, nu.ambient_coords)
        if not in_half_integers(x):
            return GateVerdict("not_half_integral", f"fails half-integrality for {r.name}", nu,
                               {"representation": r.name, "pairing": fmt(x)})
    return GateVerdict("undetermined", "half-integral unitary point that no listed representation rules out", nu)
