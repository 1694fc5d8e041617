from __future__ import annotations

import pytest

from cayley_lift.klv_poset import (
    FormalIntegerCombination,
    M_entry,
    block_poset,
    gamma_star_row_check,
    in_tower_scope,
    m_entry,
    matrix_M,
    matrix_m,
    tower_poset,
    verify_inversion,
    zuckerman_restricted,
)
from cayley_lift.parameters import make_parameter
from cayley_lift.root_system import ScopeError


def _a3(pairs=()):
    return make_parameter("A", 3, pairs=pairs)


# ---------------------------------------------------------------------------
# entries
# ---------------------------------------------------------------------------

def test_multiplicity_entry_is_containment_indicator():
    full = _a3(((1, 2), (3, 4)))
    single = _a3(((1, 2),))
    other = _a3(((3, 4),))
    empty = _a3()
    assert m_entry(full, empty) == 1
    assert m_entry(full, single) == 1
    assert m_entry(single, full) == 0
    assert m_entry(single, other) == 0
    assert m_entry(single, single) == 1


def test_character_entry_signs():
    full = _a3(((1, 2), (3, 4)))
    single = _a3(((1, 2),))
    empty = _a3()
    # length drops by one per pair step, so signs alternate with pair count
    assert M_entry(full, full) == 1
    assert M_entry(full, single) == -1
    assert M_entry(full, empty) == 1
    assert M_entry(single, empty) == -1
    assert M_entry(single, full) == 0


def test_character_row_is_tower_scoped():
    crossing = _a3(((1, 4), (2, 3)))
    empty = _a3()
    assert not in_tower_scope(crossing)
    with pytest.raises(ScopeError):
        M_entry(crossing, empty)
    # the antidiagonal single pair is off-tower as well
    with pytest.raises(ScopeError):
        M_entry(_a3(((1, 4),)), empty)
    # columns are unrestricted: m rows work on every block element
    assert m_entry(crossing, empty) == 1


def test_sl2_edge_case():
    empty = make_parameter("A", 1)
    full = make_parameter("A", 1, pairs=((1, 2),))
    assert m_entry(full, empty) == 1
    assert M_entry(full, empty) == -1
    poset = tower_poset("A", 1)
    assert [p.render() for p in poset.elements] == ["gamma()", "gamma({1,2})"]
    assert verify_inversion(poset)


# ---------------------------------------------------------------------------
# posets
# ---------------------------------------------------------------------------

def test_a3_poset_layouts():
    tower = tower_poset("A", 3)
    block = block_poset("A", 3)
    assert [p.render() for p in tower.elements] == [
        "gamma()",
        "gamma({1,2})",
        "gamma({3,4})",
        "gamma({1,2},{3,4})",
    ]
    assert [p.render() for p in block.elements] == [
        "gamma()",
        "gamma({1,2})",
        "gamma({1,4})",
        "gamma({2,3})",
        "gamma({3,4})",
        "gamma({1,2},{3,4})",
        "gamma({1,4},{2,3})",
    ]


def test_tower_poset_sizes():
    assert len(tower_poset("A", 5).elements) == 8
    assert len(tower_poset("A", 7).elements) == 16
    assert len(tower_poset("D", 4).elements) == 7
    assert len(tower_poset("D", 5).elements) == 4
    assert len(tower_poset("E7").elements) == 8
    assert len(tower_poset("E6").elements) == 1
    assert len(tower_poset("E8").elements) == 1


@pytest.mark.parametrize(
    "family,rank",
    [("A", 3), ("A", 5), ("A", 7), ("D", 4), ("D", 5), ("E7", None)],
)
def test_inversion_on_acceptance_posets(family, rank):
    assert verify_inversion(tower_poset(family, rank))


def test_inversion_matrices_are_triangular():
    poset = tower_poset("A", 5)
    big = matrix_M(poset)
    small = matrix_m(poset)
    n = len(poset.elements)
    for i in range(n):
        assert big[i][i] == 1 and small[i][i] == 1
        for j in range(i + 1, n):
            assert big[i][j] == 0 and small[i][j] == 0


def test_full_block_row_identity_for_catalog_gamma_star():
    block = block_poset("A", 3)
    assert gamma_star_row_check(block, _a3(((1, 2), (3, 4))))
    with pytest.raises(ScopeError):
        gamma_star_row_check(block, _a3(((1, 4), (2, 3))))


# ---------------------------------------------------------------------------
# restricted Zuckerman sums
# ---------------------------------------------------------------------------

def test_zuckerman_a3_signs():
    z = zuckerman_restricted("A", 3, 0)
    assert z.render() == "gamma() - gamma({1,2}) - gamma({3,4}) + gamma({1,2},{3,4})"


def test_zuckerman_e7_signs():
    z = zuckerman_restricted("E7", None, 0)
    assert z.render() == (
        "gamma() - gamma({-1,-2}) - gamma({3,4}) - gamma({5,6})"
        " + gamma({-1,-2},{3,4}) + gamma({-1,-2},{5,6}) + gamma({3,4},{5,6})"
        " - gamma({-1,-2},{3,4},{5,6})"
    )
    # coefficient is (-1)^{number of members} throughout
    for p in z.support():
        assert z.coefficient(p) == (-1) ** len(p.pairs)


# ---------------------------------------------------------------------------
# formal combinations
# ---------------------------------------------------------------------------

def test_formal_combination_merges_and_drops_zeros():
    a, b = _a3(), _a3(((1, 2),))
    combo = FormalIntegerCombination.from_pairs([(a, 2), (b, -1), (a, -2), (b, -1)])
    assert combo.coefficient(a) == 0
    assert combo.coefficient(b) == -2
    assert [p.render() for p in combo.support()] == ["gamma({1,2})"]
    assert combo.render() == "- 2*gamma({1,2})"


def test_formal_combination_render_orders_and_prefixes():
    a, b = _a3(), _a3(((1, 2),))
    combo = FormalIntegerCombination.from_pairs([(b, 1), (a, 3)])
    assert combo.render() == "3*gamma() + gamma({1,2})"
