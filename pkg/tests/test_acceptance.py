"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction as F

import pytest

from _oracles import conjugate, dominant_in_orbit, random_wd
from unitary_satake.folding import fold, unramified_gate, weight_descends
from unitary_satake.rootdata import build_datum, coroots_at_level, pairing, region_count
from unitary_satake.satake import WDParameter, check_pure
from unitary_satake.unitarity import classify_bruteforce, classify_half_integral, same_classification
from unitary_satake.weyl import dominant_representative, reflect

H = F(1, 2)
ALL_TYPES = ([("A", n) for n in range(1, 10)] + [("B", n) for n in range(2, 9)]
             + [("C", n) for n in range(2, 9)] + [("D", n) for n in range(4, 9)]
             + [(t, None) for t in ("E6", "E7", "E8", "F4", "G2")])


def half(n, *idx):
    return tuple(H if i + 1 in idx else F(0) for i in range(n))


def e(n, *pairs):
    v = [F(0)] * n
    for i, c in pairs:
        v[i - 1] = F(c)
    return tuple(v)


# -- criteria ----------------------------------------------------------------

def criterion_1():
    build_datum.cache_clear()
    for t, expected in (("F4", 105), ("E8", 25080)):
        start = time.perf_counter()
        got = region_count(build_datum(t))
        elapsed = time.perf_counter() - start
        assert got == expected, f"{t}: {got} regions"
        assert elapsed < 1.0, f"{t}: {elapsed:.2f}s"
    return "F4 -> 105, E8 -> 25080, each under 1 s"


def expected_set(t, n):
    if t == "A":
        return {half(n)} | ({half(n, (n + 1) // 2)} if n % 2 else set())
    if t == "B":
        return {half(n), half(n, 1)}
    if t == "C":
        return {half(n), half(n, n)}
    if t == "D":
        extra = {half(n, 1), half(n, 2)} if n % 2 == 0 else set()
        return {half(n), half(n, n)} | extra
    if t == "E7":
        return {half(7), half(7, 7)}
    return {half(n)}


def criterion_2():
    build_datum.cache_clear()
    start = time.perf_counter()
    for t, r in ALL_TYPES:
        d = build_datum(t, r)
        report = classify_half_integral(d)
        assert not report.inconclusive, f"{d.name}: inconclusive"
        got = {p.fw_coords for p in report.unitary_set}
        assert got == expected_set(d.type_label, d.rank), f"{d.name}: {sorted(got)}"
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"{elapsed:.2f}s"
    return f"{len(ALL_TYPES)} rows in {elapsed:.2f}s"


def criterion_3():
    h = H
    vecs = lambda d, r: {c.vector for c in coroots_at_level(d, r)}  # noqa: E731
    assert vecs(build_datum("E7"), 9) == {(-h, h, -h, h, h, -h, -h, h), (-h, h, h, -h, -h, h, -h, h),
                                          (h, -h, -h, h, -h, h, -h, h), e(8, (5, 1), (6, 1))}
    assert vecs(build_datum("E8"), 15) == {(h, -h, h, h, h, h, -h, h), (h, h, -h, h, h, -h, h, h),
                                           (h, h, h, -h, -h, h, h, h), (-h, -h, -h, h, -h, h, h, h)}
    assert vecs(build_datum("E6"), 9) == {(-h, h, -h, h, h, -h, -h, h)}
    assert vecs(build_datum("F4"), 9) == {(1, 1, 1, -1)}
    assert [c.simple_coordinates for c in coroots_at_level(build_datum("G2"), 3)] == [(2, 1)]
    for n in range(2, 9):
        if n % 2:
            expected = {e(n, (i, 1), (n - i, 1)) for i in range(1, (n - 1) // 2 + 1)} | {e(n, (n, 1))}
            r0 = n
        else:
            expected = {e(n, (i, 1), (n + 1 - i, 1)) for i in range(1, n // 2 + 1)}
            r0 = n + 1
        assert vecs(build_datum("C", n), r0) == expected, f"PSp({2 * n})"
    for n in (4, 6, 8):
        expected = {e(n, (1, 1), (n, 1)), e(n, (1, -1), (n, 1))}
        expected |= {e(n, (i, 1), (n + 1 - i, 1)) for i in range(2, n // 2 + 1)}
        assert vecs(build_datum("D", n), n - 1) == expected, f"PSO({2 * n})"
    return "E6, E7, E8, F4, G2, PSp(2n) n<=8, PSO(2n) even n<=8"


def criterion_4():
    q = F(1, 4)
    for n in (2, 4, 6, 8, 10):
        d = build_datum("A", n - 1)
        assert pairing(d.fundamental_coweights[0], d.point(half(n - 1, n // 2))) == q, f"PGL({n})"
    for n in range(2, 9):
        b = build_datum("B", n)
        assert pairing(b.fundamental_coweights[n - 1], b.point(half(n, 1))) == q, f"SO({2 * n + 1})"
        c = build_datum("C", n)
        assert pairing(c.fundamental_coweights[0], c.point(half(n, n))) == q, f"PSp({2 * n})"
    for n in range(4, 9):
        d = build_datum("D", n)
        w1, wn = d.fundamental_coweights[0], d.fundamental_coweights[n - 1]
        assert pairing(w1, d.point(half(n, n))) == q
        assert pairing(wn, d.point(half(n, 1))) == q
        assert pairing(wn, d.point(half(n, 2))) == q
    e7 = build_datum("E7")
    assert pairing(e7.fundamental_coweights[6], e7.point(half(7, 7))) == F(3, 4)
    return "1/4 for PGL, SO odd, PSp, PSO; 3/4 for E7"


def criterion_5():
    cases = [(t, r) for t, r in ALL_TYPES if (r or 8) <= 8] + [("D", 3)]
    for t, r in cases:
        d = build_datum(t, r)
        a, b = classify_half_integral(d), classify_bruteforce(d)
        assert same_classification(a, b), d.name
        assert [v.hermitian for v in a.verdicts] == [v.hermitian for v in b.verdicts], d.name
    return f"{len(cases)} types of rank <= 8 agree with the brute-force route"


def criterion_6():
    rows = [(fold("A", 2 * n - 1, 2), ("B", n)) for n in range(2, 5)]
    rows += [(fold("A", 2 * n, 2), ("C", n)) for n in range(3, 5)]
    rows += [(fold("D", n, 2), ("C", n - 1)) for n in range(4, 7)]
    rows += [(fold("D", 4, 3), ("G", 2)), (fold("E6", None, 2), ("F", 4))]
    for f, expected in rows:
        assert f.fixed_datum.recognized_type == expected, f.tits_label
    for n in range(2, 7):
        so = build_datum("B", n, "adjoint")
        assert not weight_descends(so, tuple([H] * n)), f"SO({2 * n + 1})"
        g = unramified_gate("A", 2 * n, 2, [0] * (n - 1) + [H])
        assert g.verdict == "undetermined" and g.psu_obstruction, f"PSU({2 * n + 1})"
    return "five folding rows, spin weight does not descend, PSU flagged"


def criterion_7():
    rng = random.Random("acceptance-invariants")
    for t, r in ALL_TYPES:
        d = build_datum(t, r)
        n = d.rank
        for i in range(n):
            for j in range(n):
                assert pairing(d.simple_coroots[i], d.fundamental_weights[j]) == (i == j), d.name
        assert sum(d.highest_coroot.simple_coordinates) == d.coxeter_number - 1, d.name
        assert len(d.positive_coroots) * 2 == n * d.coxeter_number, d.name
        for _ in range(100):
            p = d.point(F(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(n))
            i = rng.randint(1, n)
            assert reflect(d, i, reflect(d, i, p)) == p, d.name
    for t, r in [("A", 2), ("A", 3), ("B", 3), ("C", 3), ("G2", None)]:
        d = build_datum(t, r)
        for _ in range(20):
            p = d.point(F(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(d.rank))
            dom = dominant_representative(d, p).dominant
            assert dominant_representative(d, dom).dominant == dom
            assert dom.ambient_coords == dominant_in_orbit(d, p.ambient_coords), d.name
    for _ in range(50):
        wd = random_wd(rng)
        assert check_pure(conjugate(rng, wd)).pure == check_pure(wd).pure
    return "duality, Coxeter level, root count, reflections, dominance, WD conjugation"


def criterion_8():
    assert check_pure(WDParameter(0, {0: 1})).label == "pure_of_weight_0"
    assert check_pure(WDParameter(1, {0: 1, 2: 1}, {(0, 2): [[1]]})).label == "pure_of_weight_1"
    broken = check_pure(WDParameter(1, {0: 1, 2: 1}))
    assert broken.label == "impure" and "(iii)" in broken.reason
    return "unramified, Steinberg, Steinberg with N = 0"


def criterion_9():
    cmd = [sys.executable, "-m", "unitary_satake", "full-table", "--format", "json"]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1] and runs[0]
    return f"two runs, {len(runs[0])} identical bytes"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def run_criterion(k, write=print):
    try:
        detail = CRITERIA[k - 1]()
    except Exception as exc:
        write(f"criterion {k}: FAIL ({type(exc).__name__}: {exc})")
        raise
    write(f"criterion {k}: PASS ({detail})")


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1))
def test_criterion(k, capsys):
    with capsys.disabled():
        run_criterion(k, lambda line: print("\n" + line))


if __name__ == "__main__":
    failed = 0
    for k in range(1, len(CRITERIA) + 1):
        try:
            run_criterion(k)
        except Exception:
            failed += 1
    sys.exit(1 if failed else 0)
