from __future__ import annotations

from fractions import Fraction as Q

import pytest

from cayley_lift.cartan import (
    E_CLASS_REPS,
    cartan_classes,
    cartan_shape,
    cover_center_data,
    genuine_central_character_count,
    hasse_diagram,
    involution_for_class,
    signature_from_involution,
)
from cayley_lift.root_system import (
    build_root_system,
    identity_matrix,
    mat_apply,
    mat_mul,
    pairing,
)


def V(*xs):
    return tuple(Q(x) for x in xs)


# ---------------------------------------------------------------------------
# class enumeration
# ---------------------------------------------------------------------------

def test_a_class_lists():
    assert [c.render() for c in cartan_classes("A", 3)] == ["i=3", "i=2", "i=1"]
    assert [c.render() for c in cartan_classes("A", 4)] == ["i=4", "i=3", "i=2"]
    assert [c.render() for c in cartan_classes("A", 5)] == ["i=5", "i=4", "i=3", "i=2"]
    # ambient n has n//2 + 1 classes
    for rank in range(2, 10):
        n = rank + 1
        assert len(cartan_classes("A", rank)) == n // 2 + 1


def test_d_class_counts():
    expected = {3: 3, 4: 7, 5: 6, 6: 11, 7: 10, 8: 16}
    for rank, count in expected.items():
        assert len(cartan_classes("D", rank)) == count


def test_e_class_lists():
    assert [c.render() for c in cartan_classes("E6")] == [
        "(2,2,0)", "(0,3,0)", "(0,2,2)", "(0,1,4)", "(0,0,6)",
    ]
    assert len(cartan_classes("E7")) == 10
    assert len(cartan_classes("E8")) == 10
    assert len(E_CLASS_REPS) == 25


def test_split_class_position_and_shape():
    # A and D list the split class first; E families list it last.
    for family, rank in (("A", 4), ("A", 7), ("D", 4), ("D", 5)):
        classes = cartan_classes(family, rank)
        shape = cartan_shape(classes[0])
        system = build_root_system(family, rank)
        assert shape.compact == 0 and shape.complex_pairs == 0
        assert shape.real_rank == system.rank
    for family in ("E6", "E7", "E8"):
        classes = cartan_classes(family)
        shape = cartan_shape(classes[-1])
        system = build_root_system(family)
        assert (shape.compact, shape.complex_pairs, shape.split) == (0, 0, system.rank)


def test_e_signature_equals_torus_shape():
    for family in ("E6", "E7", "E8"):
        for c in cartan_classes(family):
            shape = cartan_shape(c)
            assert c.signature == (shape.compact, shape.complex_pairs, shape.split)


def test_e7_compact_cartan_has_real_rank_zero():
    (compact,) = [c for c in cartan_classes("E7") if c.render() == "(7,0,0)"]
    assert cartan_shape(compact).real_rank == 0


def test_d4_shape_table():
    shapes = {c.render(): cartan_shape(c) for c in cartan_classes("D", 4)}
    as_tuples = {k: (s.compact, s.complex_pairs, s.split) for k, s in shapes.items()}
    assert as_tuples == {
        "(0,0,+)": (0, 0, 4),
        "(1,0,+)": (0, 1, 2),
        "(0,1,+)": (1, 1, 1),
        "(2,0,+)": (1, 1, 1),
        "(2,0,-)": (1, 1, 1),
        "(1,1,+)": (2, 1, 0),
        "(0,2,+)": (4, 0, 0),
    }


# ---------------------------------------------------------------------------
# involutions
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("family", ["E6", "E7", "E8"])
def test_e_involutions_are_honest(family):
    system = build_root_system(family)
    roots = set(system.roots)
    for c in cartan_classes(family):
        inv = involution_for_class(c)
        theta = inv.matrix
        assert mat_mul(theta, theta) == identity_matrix(system.dim)
        assert {mat_apply(theta, r) for r in roots} == roots
        assert signature_from_involution(system, inv) == c.signature


@pytest.mark.parametrize("family,rank", [("A", 3), ("A", 6), ("D", 4), ("D", 5), ("D", 6)])
def test_classical_involutions_are_honest(family, rank):
    system = build_root_system(family, rank)
    roots = set(system.roots)
    for c in cartan_classes(family, rank):
        theta = involution_for_class(c).matrix
        assert mat_mul(theta, theta) == identity_matrix(system.dim)
        assert {mat_apply(theta, r) for r in roots} == roots


# ---------------------------------------------------------------------------
# Hasse diagram
# ---------------------------------------------------------------------------

def test_d4_hasse_edges():
    h = hasse_diagram("D", 4)
    assert h.edges == ((0, 1), (1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5), (5, 6))


@pytest.mark.parametrize(
    "family,rank",
    [("A", 4), ("A", 7), ("D", 4), ("D", 6), ("E6", None), ("E7", None), ("E8", None)],
)
def test_hasse_edges_drop_real_rank_by_one(family, rank):
    h = hasse_diagram(family, rank)
    ranks = [cartan_shape(c).real_rank for c in h.classes]
    assert all(ranks[i] == ranks[j] + 1 for i, j in h.edges)
    # every class except the maximally split one is reachable, and every class
    # except the most compact one moves downward
    indices = set(range(len(h.classes)))
    split_index = ranks.index(max(ranks))
    compact_indices = {i for i, r in enumerate(ranks) if r == min(ranks)}
    assert {j for _, j in h.edges} == indices - {split_index}
    assert indices - {i for i, _ in h.edges} <= compact_indices


# ---------------------------------------------------------------------------
# centers of the nonlinear cover
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "family,rank,center_render,quotient",
    [
        ("A", 1, "Z/2 x Z/2", 2),       # SL(2)
        ("A", 3, "Z/2 x Z/2", 2),       # SL(4)
        ("A", 5, "Z/2 x Z/2", 2),       # SL(6)
        ("A", 2, "Z/2", 1),             # SL(3)
        ("A", 4, "Z/2", 1),             # SL(5)
        ("D", 4, "Z/2 x Z/2 x Z/2", 4),
        ("D", 6, "Z/2 x Z/2 x Z/2", 4),
        ("D", 5, "Z/2 x Z/2", 2),
        ("D", 7, "Z/2 x Z/2", 2),
        ("E6", None, "Z/2", 1),
        ("E7", None, "Z/2 x Z/2", 2),
        ("E8", None, "Z/2", 1),
    ],
)
def test_cover_center_structure(family, rank, center_render, quotient):
    data = cover_center_data(family, rank)
    assert data.center.render() == center_render
    assert data.quotient_order == quotient
    assert len(data.quotient_reps) == quotient
    assert genuine_central_character_count(family, rank) == quotient


def test_e7_quotient_representative():
    data = cover_center_data("E7")
    assert data.quotient_reps[0] == V(0, 0, 0, 0, 0, 0, 0, 0)
    rep = data.quotient_reps[1]
    assert rep == V(1, 1, -1, 1, -1, 1, 0, 0)
    e7 = build_root_system("E7")
    # the representative pairs evenly with every root, as a coweight of 2P must
    assert all(pairing(rep, a) % 2 == 0 for a in e7.roots)
    # e8 - e7 is an E7 root yet pairs oddly with the first simple root, so it
    # cannot represent any class of this quotient
    stray = V(0, 0, 0, 0, 0, 0, -1, 1)
    assert e7.is_root(stray)
    assert pairing(stray, e7.simple_roots[0]) % 2 == 1


def test_nontrivial_quotient_reps_pair_evenly():
    for family, rank in (("A", 3), ("A", 5), ("D", 4), ("D", 5), ("D", 6)):
        system = build_root_system(family, rank)
        data = cover_center_data(family, rank)
        for rep in data.quotient_reps:
            assert all(pairing(rep, a) % 2 == 0 for a in system.roots)
