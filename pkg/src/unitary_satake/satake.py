"""Spherical Satake parameters and pure Weil-Deligne parameters.

Absolute values enter only as exact base-``q`` exponents: a Satake
parameter ``s = s_c * s_nu`` is stored as an opaque compact part and the
real part ``nu`` with ``s_nu = q^nu``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

from . import _linalg
from ._rational import Vector, dot, fmt, fmt_vec, in_half_integers, parse, pretty, scale, sub, vec
from .rootdata import RootDatum, WeightPoint
from .weyl import dominant_representative

DIRECTIONS = ("raising", "lowering")


def is_prime_power(q: int) -> bool:
    if isinstance(q, bool) or not isinstance(q, int) or q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True


@dataclass(frozen=True)
class SatakeParameter:
    datum: RootDatum
    nu: WeightPoint
    q: int
    compact_part: Union[None, str, tuple[Fraction, ...]] = "unitary"

    def __post_init__(self):
        if not is_prime_power(self.q):
            raise ValueError(f"q = {self.q!r} is not a prime power")
        if len(self.nu.fw_coords) != self.datum.rank:
            raise ValueError("nu does not belong to this datum")
        if isinstance(self.compact_part, tuple):
            # angles of s_c, taken mod 1
            object.__setattr__(self, "compact_part", tuple(Fraction(a) % 1 for a in self.compact_part))

    def to_json(self) -> dict:
        cp = self.compact_part
        return {
            "type": self.datum.name,
            "q": self.q,
            "nu_fw": fmt_vec(self.nu.fw_coords),
            "nu": fmt_vec(self.nu.ambient_coords),
            "compact_part": fmt_vec(cp) if isinstance(cp, tuple) else cp,
        }


def real_part(datum: RootDatum, exponents: Sequence, q: int) -> WeightPoint:
    """``nu`` from the coordinatewise exponents ``e`` with ``|s_i| = q^{e_i}``.

    Only pairings with the coroots are kept, so a central component of the
    exponent vector (which no coroot sees) is discarded.
    """
    if not is_prime_power(q):
        raise ValueError(f"q = {q!r} is not a prime power")
    e = vec(exponents)
    if len(e) != datum.ambient_dim:
        raise ValueError(f"expected {datum.ambient_dim} exponents, got {len(e)}")
    return datum.point(dot(c, e) for c in datum.simple_coroots)


def is_tempered(param: SatakeParameter) -> bool:
    return dominant_representative(param.datum, param.nu).dominant.is_zero


def representation_weights(datum: RootDatum, highest_weight: Sequence) -> list[Vector]:
    """Weights (without multiplicity) of the irreducible dual-group representation.

    ``highest_weight`` is a dominant coroot-side vector.  The weight set is
    the saturation of ``{highest_weight}`` under root strings: whenever
    ``mu`` is a weight and ``k = <mu, a>`` for a root ``a`` of the dual group
    (a coroot here, with coroot the matching root), ``mu - j a`` is a weight
    for ``j`` between 0 and ``k``.
    """
    lam = vec(highest_weight)
    if len(lam) != datum.ambient_dim:
        raise ValueError("dimension mismatch")
    pairs = []
    for c in datum.positive_coroots:
        r = scale(Fraction(2) / dot(c.vector, c.vector), c.vector)
        pairs.append((c.vector, r))
    for root in datum.simple_roots:
        k = dot(lam, root)
        if k < 0 or k.denominator != 1:
            raise ValueError("highest weight is not dominant integral for the dual group")
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for a, r in pairs:
            k = dot(mu, r)
            step = a if k > 0 else scale(-1, a)
            cur = mu
            for _ in range(abs(int(k))):
                cur = sub(cur, step)
                if cur not in seen:
                    seen.add(cur)
                    stack.append(cur)
    seen.discard(lam)
    return [lam] + sorted(seen, reverse=True)


@dataclass(frozen=True)
class HalfIntegralResult:
    passed: bool
    violator: Optional[Vector] = None
    pairing: Optional[Fraction] = None

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {"passed": self.passed}
        if self.violator is not None:
            out["violator"] = fmt_vec(self.violator)
            out["pairing"] = fmt(self.pairing)
        return out


def half_integral_test(param: SatakeParameter, rep_weights: Sequence[Sequence]) -> HalfIntegralResult:
    """Every weight of the representation pairs with ``nu`` into ``(1/2)Z``."""
    nu = param.nu.ambient_coords
    for w in rep_weights:
        x = dot(vec(w), nu)
        if not in_half_integers(x):
            return HalfIntegralResult(False, vec(w), x)
    return HalfIntegralResult(True)


# -- Weil-Deligne parameters -------------------------------------------------


def _weight(x) -> Fraction:
    return parse(x) if isinstance(x, str) else Fraction(x)


@dataclass(frozen=True)
class WDParameter:
    """Graded pieces ``{weight: dim}``, the graded components of ``N`` and ``w``.

    ``blocks[(a, b)]`` is the ``dim(gr_b) x dim(gr_a)`` matrix of ``N``
    from ``gr_a`` to ``gr_b``; missing blocks are zero.
    """

    center_weight: int
    pieces: dict = field(hash=False)
    blocks: dict = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if isinstance(self.center_weight, bool) or Fraction(self.center_weight).denominator != 1:
            raise ValueError("center weight must be an integer")
        pieces = {}
        for a, d in self.pieces.items():
            if isinstance(d, bool) or not isinstance(d, int) or d < 0:
                raise ValueError(f"dimension of gr_{a} must be a non-negative integer")
            if d:
                pieces[_weight(a)] = d
        blocks = {}
        for (a, b), m in self.blocks.items():
            a, b = _weight(a), _weight(b)
            if a == b:
                raise ValueError(f"block from gr_{pretty(a)} to itself: N must shift the weight")
            rows = [tuple(Fraction(x) if not isinstance(x, str) else parse(x) for x in r) for r in m]
            da, db = pieces.get(a, 0), pieces.get(b, 0)
            if len(rows) != db or any(len(r) != da for r in rows):
                raise ValueError(f"block gr_{pretty(a)} -> gr_{pretty(b)} should be {db}x{da}")
            if (a, b) in blocks:
                raise ValueError("duplicate block")
            if da and db:
                blocks[(a, b)] = tuple(rows)
        shifts = {b - a for a, b in blocks}
        if len(shifts) > 1:
            raise ValueError("N blocks shift the weight by different amounts, so N is not graded")
        object.__setattr__(self, "center_weight", int(self.center_weight))
        object.__setattr__(self, "pieces", dict(sorted(pieces.items())))
        object.__setattr__(self, "blocks", dict(sorted(blocks.items())))

    @property
    def shift(self) -> Optional[Fraction]:
        return next((b - a for a, b in self.blocks), None)

    def dim(self, a) -> int:
        return self.pieces.get(Fraction(a), 0)

    def block(self, a, b):
        a, b = Fraction(a), Fraction(b)
        if (a, b) in self.blocks:
            return [list(r) for r in self.blocks[(a, b)]]
        return [[Fraction(0)] * self.dim(a) for _ in range(self.dim(b))]

    def to_json(self) -> dict:
        return {
            "center_weight": self.center_weight,
            "pieces": [{"weight": fmt(a), "dim": d} for a, d in self.pieces.items()],
            "blocks": [{"from_weight": fmt(a), "to_weight": fmt(b),
                        "matrix": [fmt_vec(r) for r in m]}
                       for (a, b), m in self.blocks.items()],
        }

    @classmethod
    def from_json(cls, data: Union[dict, str, Path]) -> "WDParameter":
        if isinstance(data, (str, Path)):
            data = json.loads(Path(data).read_text())
        try:
            pieces = {}
            for p in data["pieces"]:
                w = _weight(p["weight"])
                if w in pieces:
                    raise ValueError(f"weight {fmt(w)} listed twice")
                pieces[w] = p["dim"]
            blocks = {(_weight(b["from_weight"]), _weight(b["to_weight"])): b["matrix"]
                      for b in data.get("blocks", [])}
            return cls(data["center_weight"], pieces, blocks)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed WD parameter: {exc!r}") from exc


@dataclass(frozen=True)
class PurityVerdict:
    pure: bool
    weight: int
    reason: str

    @property
    def label(self) -> str:
        return f"pure_of_weight_{self.weight}" if self.pure else "impure"

    def to_json(self) -> dict:
        return {"verdict": self.label, "center_weight": self.weight, "reason": self.reason}


def _composite(wd: WDParameter, start: Fraction, steps: int, shift: Fraction):
    m = _linalg.identity(wd.dim(start))
    a = start
    for _ in range(steps):
        m = _linalg.matmul(wd.block(a, a + shift), m) if m else []
        a += shift
    return m


def check_pure(wd: WDParameter, direction: str = "raising") -> PurityVerdict:
    """Purity of weight ``wd.center_weight``.

    ``direction="raising"`` asks ``N`` to send ``gr_{w-i}`` onto
    ``gr_{w+i}``; ``"lowering"`` is the opposite, conventional reading.
    Checks, in order: integral weights, ``N`` moving weights the prescribed
    way (so it respects the filtration), equal mirror dimensions and the
    ``i``-fold mirror composites being isomorphisms.
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}")
    w = wd.center_weight

    def impure(reason):
        return PurityVerdict(False, w, reason)

    bad = [a for a in wd.pieces if a.denominator != 1]
    if bad:
        return impure(f"(i) non-integral weight {pretty(bad[0])}")
    shift = wd.shift
    if shift is not None and (shift > 0) != (direction == "raising"):
        return impure(f"(ii) N shifts weights by {pretty(shift)}, against the {direction} convention")
    for i in sorted({abs(a - w) for a in wd.pieces} - {0}):
        lo, hi = w - i, w + i
        if wd.dim(lo) != wd.dim(hi):
            return impure(f"(iii) dim gr_{pretty(lo)} = {wd.dim(lo)} but dim gr_{pretty(hi)} = {wd.dim(hi)}")
        src = lo if direction == "raising" else hi
        if shift is None:
            return impure(f"(iii) N = 0, so gr_{pretty(lo)} and gr_{pretty(hi)} are not identified")
        if (2 * i) % abs(shift):
            return impure(f"(iii) no power of N maps gr_{pretty(src)} to its mirror")
        steps = int(2 * i / abs(shift))
        comp = _composite(wd, src, steps, shift)
        if _linalg.rank(comp) != wd.dim(src):
            return impure(f"(iii) N^{steps} between gr_{pretty(lo)} and gr_{pretty(hi)} is not an isomorphism")
    return PurityVerdict(True, w, "all conditions hold")


__all__ = [
    "SatakeParameter", "real_part", "is_tempered", "is_prime_power", "representation_weights",
    "HalfIntegralResult", "half_integral_test", "WDParameter", "PurityVerdict", "check_pure",
    "DIRECTIONS",
]
