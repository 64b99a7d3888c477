"""Exact rational helpers shared by every module."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a: Sequence[Fraction]) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in a)


def combination(coeffs: Sequence, vectors: Sequence[Sequence[Fraction]]) -> Vector:
    """Return ``sum(c_i * v_i)``; ``vectors`` must be nonempty."""
    dim = len(vectors[0])
    out = [Fraction(0)] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for k in range(dim):
                out[k] += c * v[k]
    return tuple(out)


def is_zero(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


def in_half_integers(x: Fraction) -> bool:
    return (2 * x).denominator == 1


def fmt(x) -> str:
    """Serialize as an exact ``"p/q"`` string (denominator always present)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def fmt_vec(v: Sequence) -> list[str]:
    return [fmt(x) for x in v]


def pretty(x) -> str:
    """Human-readable form: ``"1/2"``, ``"-3"``, ``"0"``."""
    return str(Fraction(x))


def parse(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r} (use p/q)")
    return Fraction(text)


def parse_vec(text: str) -> Vector:
    return tuple(parse(part) for part in text.split(","))
