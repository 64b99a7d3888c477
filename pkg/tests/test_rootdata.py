from fractions import Fraction as F
from math import prod

import pytest

from _oracles import count_dominant_regions, weyl_orbit
from unitary_satake.rootdata import (
    RootDataError,
    build_datum,
    coroot_label,
    coroots_at_level,
    diagram_automorphisms,
    make_datum,
    opposition_involution,
    pairing,
    positive_coroots,
    recognize_cartan,
    region_count,
)

ALL_TYPES = ([("A", n) for n in range(1, 11)] + [("B", n) for n in range(1, 9)]
             + [("C", n) for n in range(1, 9)] + [("D", n) for n in range(3, 9)]
             + [(t, None) for t in ("E6", "E7", "E8", "F4", "G2")])
SMALL = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G2", None)]


def ids(cases):
    return [f"{t}{r or ''}" for t, r in cases]


@pytest.mark.parametrize("t,r", ALL_TYPES, ids=ids(ALL_TYPES))
def test_duality_and_counts(t, r):
    d = build_datum(t, r)
    n = d.rank
    for i in range(n):
        for j in range(n):
            assert pairing(d.simple_coroots[i], d.fundamental_weights[j]) == (i == j)
            assert pairing(d.fundamental_coweights[i], d.simple_roots[j]) == (i == j)
            assert d.cartan_matrix[i][j] == pairing(d.simple_coroots[j], d.simple_roots[i])
    h = d.coxeter_number
    assert len(d.positive_coroots) * 2 == n * h
    assert d.highest_coroot.level == h - 1
    assert len(coroots_at_level(d, h - 1)) == 1
    assert all(c.level == pairing(c.vector, d.rho) for c in d.positive_coroots)


@pytest.mark.parametrize("t,r", ALL_TYPES, ids=ids(ALL_TYPES))
def test_simple_coordinates_reconstruct(t, r):
    d = build_datum(t, r)
    for c in d.positive_coroots:
        total = [sum(k * v[i] for k, v in zip(c.simple_coordinates, d.simple_coroots))
                 for i in range(d.ambient_dim)]
        assert tuple(total) == c.vector
        assert all(k >= 0 for k in c.simple_coordinates)


def test_g2_coordinates():
    d = build_datum("G2")
    assert d.simple_coroots[0] == (F(2, 3), F(-1, 3), F(-1, 3))
    assert d.fundamental_weights[0] == (1, 1, -2)
    assert len(d.positive_coroots) == 6
    assert d.highest_coroot.simple_coordinates == (3, 2)
    assert d.highest_coroot.level == 5


def test_e7_omega7():
    d = build_datum("E7")
    assert d.fundamental_weights[6] == (0, 0, 0, 0, 0, 1, F(-1, 2), F(1, 2))


def test_e8_highest_coroot():
    d = build_datum("E8")
    assert len(d.positive_coroots) == 120
    assert {c.level for c in d.positive_coroots} == set(range(1, 30))
    assert d.highest_coroot.vector == (0, 0, 0, 0, 0, 0, 1, 1)


def test_a1():
    d = build_datum("A", 1)
    assert [c.level for c in positive_coroots(d)] == [1]
    assert pairing(d.simple_coroots[0], d.fundamental_weights[0]) == 1


def test_region_counts():
    assert region_count(build_datum("F4")) == 105
    assert region_count(build_datum("E8")) == 25080
    assert region_count(build_datum("A", 1)) == 2


@pytest.mark.parametrize("t,r", SMALL, ids=ids(SMALL))
def test_region_count_matches_enumeration(t, r):
    d = build_datum(t, r)
    assert region_count(d) == count_dominant_regions(d)


@pytest.mark.parametrize("t,r", SMALL, ids=ids(SMALL))
def test_degrees_multiply_to_weyl_order(t, r):
    d = build_datum(t, r)
    assert prod(d.degrees) == len(weyl_orbit(d, d.rho))


@pytest.mark.parametrize("t,r,expected", [
    ("B", 1, ("A", 1)), ("C", 1, ("A", 1)), ("C", 2, ("B", 2)), ("D", 3, ("A", 3)),
    ("B", 3, ("B", 3)), ("C", 3, ("C", 3)), ("F4", None, ("F", 4)),
])
def test_recognition(t, r, expected):
    assert build_datum(t, r).recognized_type == expected


def test_coroot_type_is_transpose():
    b = build_datum("B", 3)
    assert b.coroot_type == ("C", 3)
    assert recognize_cartan([list(r) for r in zip(*b.cartan_matrix)]) == ("C", 3)


@pytest.mark.parametrize("bad", [("A", 0), ("D", 2), ("E6", 7), ("X", 3), ("B", None)])
def test_invalid_types(bad):
    with pytest.raises(RootDataError):
        build_datum(*bad)


def test_custom_isogeny_needs_basis():
    with pytest.raises(RootDataError):
        build_datum("A", 2, "custom")


def test_level_precondition():
    with pytest.raises(ValueError):
        coroots_at_level(build_datum("A", 2), 0)
    assert coroots_at_level(build_datum("A", 2), 7) == []


def test_pairing_dimension_mismatch():
    with pytest.raises(ValueError):
        pairing((1, 0), (1, 0, 0))


def test_make_datum_rejects_dependent_coroots():
    with pytest.raises((RootDataError, ValueError)):
        make_datum([(1, -1, 0), (2, -2, 0)])


def test_make_datum_recognizes_type():
    d = make_datum([(1, -1, 0), (0, 1, -1)])
    assert d.recognized_type == ("A", 2)
    assert len(d.positive_coroots) == 3


def test_simply_connected_lattice():
    d = build_datum("B", 3, "simply_connected")
    assert d.character_lattice == d.fundamental_weights
    assert build_datum("B", 3).character_lattice == build_datum("B", 3).simple_roots


def test_diagram_automorphisms():
    assert len(diagram_automorphisms(build_datum("D", 4).cartan_matrix)) == 6
    assert len(diagram_automorphisms(build_datum("E6").cartan_matrix)) == 2
    assert len(diagram_automorphisms(build_datum("E7").cartan_matrix)) == 1
    assert len(diagram_automorphisms(build_datum("B", 3).cartan_matrix)) == 1


@pytest.mark.parametrize("t,r,trivial", [
    ("A", 1, True), ("A", 3, False), ("D", 4, True), ("D", 5, False), ("E6", None, False),
    ("E7", None, True), ("C", 4, True),
])
def test_opposition_involution(t, r, trivial):
    d = build_datum(t, r)
    assert (opposition_involution(d) == tuple(range(d.rank))) == trivial


def test_labels_and_json():
    d = build_datum("G2")
    assert coroot_label(d, d.highest_coroot) == "3a1+2a2"
    js = d.to_json()
    assert js["rank"] == 2
    assert "." not in d.dumps()
