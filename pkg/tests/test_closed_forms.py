from collections import Counter
from itertools import combinations_with_replacement

import pytest

from preinforce.closed_forms import (
    NotApplicable,
    PartiteSpec,
    as_multiset,
    f,
    f_star,
    gamma_p_cycle,
    gamma_p_multipartite,
    gamma_p_path,
    multipartite_formula,
    r_1_path_cycle,
    r_p_cycle,
    r_p_multipartite,
    r_p_multipartite_counts,
    r_p_path,
    script_X,
)
from preinforce.graph import complete_multipartite, cycle_graph, path_graph
from preinforce.pdomination import gamma_p
from preinforce.reinforcement import r_p

WORKED_SPEC = (2, 2, 10, 17)


def test_path_cycle_gamma_values():
    assert gamma_p_path(7, 2) == 4
    assert gamma_p_cycle(6, 2) == 3
    assert gamma_p_path(4, 3) == 4
    assert gamma_p_path(1, 2) == 1
    with pytest.raises(NotApplicable):
        gamma_p_path(5, 1)


def test_path_cycle_r_values():
    assert r_p_path(5, 2) == 2
    assert r_p_path(6, 2) == 1
    assert r_p_path(4, 3) == 1
    assert r_p_cycle(7, 2) == 2
    assert r_p_cycle(6, 2) == 4
    assert r_p_cycle(5, 3) == 1
    with pytest.raises(NotApplicable):
        r_p_path(3, 2)


@pytest.mark.parametrize("n,expected", [(4, 1), (5, 2), (6, 3), (7, 1), (8, 2)])
def test_r1_path_cycle(n, expected):
    assert r_1_path_cycle(n) == expected


def test_r1_path_cycle_rejects_small():
    with pytest.raises(ValueError):
        r_1_path_cycle(3)


@pytest.mark.parametrize("n", range(1, 15))
@pytest.mark.parametrize("p", [2, 3, 4])
def test_path_closed_forms_match_exact(n, p):
    g = path_graph(n)
    assert gamma_p_path(n, p) == gamma_p(g, p).gamma_p
    if gamma_p_path(n, p) > p:
        assert r_p_path(n, p) == r_p(g, p).r_p


@pytest.mark.parametrize("n", range(3, 15))
@pytest.mark.parametrize("p", [2, 3, 4])
def test_cycle_closed_forms_match_exact(n, p):
    g = cycle_graph(n)
    assert gamma_p_cycle(n, p) == gamma_p(g, p).gamma_p
    if gamma_p_cycle(n, p) > p:
        assert r_p_cycle(n, p) == r_p(g, p).r_p


def test_partite_spec_validation():
    assert PartiteSpec([3, 1]).order == 4
    with pytest.raises(ValueError):
        PartiteSpec([3])
    with pytest.raises(ValueError):
        PartiteSpec([3, 0])


def test_gamma_multipartite_examples():
    assert gamma_p_multipartite(WORKED_SPEC, 11) == 12
    assert gamma_p_multipartite((1, 1), 1) == 1
    assert gamma_p_multipartite((3, 3), 2) == gamma_p(complete_multipartite((3, 3)), 2).gamma_p


def test_script_X_worked_example():
    family = script_X(WORKED_SPEC, 11)
    multisets = Counter(as_multiset(WORKED_SPEC, X) for X in family)
    assert set(multisets) == {
        (17,), (2, 10), (2, 17), (10, 17), (2, 2, 10), (2, 2, 17), (2, 10, 17), (2, 2, 10, 17),
    }
    # the two parts of size 2 are distinct positions
    assert multisets[(2, 10)] == 2 and multisets[(2, 10, 17)] == 2 and len(family) == 11


def test_script_X_small():
    assert script_X((1, 1), 1) == [(0,), (1,), (0, 1)]
    assert script_X((3, 3), 5) == [(0, 1)]
    assert gamma_p_multipartite((3, 3), 5) == 6


def test_f_star_worked_table():
    expected = {
        (17,): 0, (2, 10, 17): 0, (2, 2, 10, 17): 0,
        (2, 17): 2,
        (2, 2, 10): 4, (2, 2, 17): 4,
        (2, 10): 10, (10, 17): 10,
    }
    for X in script_X(WORKED_SPEC, 11):
        assert f_star(WORKED_SPEC, 11, X) == expected[as_multiset(WORKED_SPEC, X)]


def test_f_star_without_candidate_is_zero():
    # every single part of K_{5,5} already has f = 5 >= 2
    assert f_star((5, 5), 2, (0, 1)) == 0
    assert f_star((5, 5), 2, (0,)) == 0


def test_multipartite_formula_worked_example():
    res = multipartite_formula(WORKED_SPEC, 11)
    assert res.r_p == 1 and res.gamma_p == 12
    assert res.minimizer_multiset(WORKED_SPEC) == (2, 10)
    assert f(WORKED_SPEC, res.minimizer) == 12


def test_multipartite_formula_convention_case():
    assert gamma_p_multipartite((1, 1, 1), 2) == 2
    with pytest.raises(NotApplicable):
        r_p_multipartite((1, 1, 1), 2)


def test_multipartite_formula_k23():
    # taking the part of size 3 already 3-dominates K_{2,3}
    assert gamma_p_multipartite((2, 3), 3) == 3
    with pytest.raises(NotApplicable):
        r_p_multipartite((2, 3), 3)
    assert r_p(complete_multipartite((2, 3)), 3).r_p == 0
    assert r_p_multipartite((2, 3), 1) == r_p(complete_multipartite((2, 3)), 1).r_p == 1


def test_formula_overshoots_when_two_parts_are_split():
    # K_{5,5}, p = 2: {0, 1, 5} plus edges 0-2, 0-3, 0-4 gives r = 3
    assert r_p(complete_multipartite((5, 5)), 2).r_p == 3
    assert r_p_multipartite((5, 5), 2) == 4
    assert r_p_multipartite_counts((5, 5), 2) == 3


def _specs(max_order):
    for t in (2, 3, 4):
        for parts in combinations_with_replacement(range(1, max_order + 1), t):
            if sum(parts) <= max_order:
                yield parts[::-1]


@pytest.mark.parametrize("parts", list(_specs(10)))
def test_multipartite_counts_match_exact(parts):
    g = complete_multipartite(parts)
    for p in (1, 2, 3):
        assert gamma_p_multipartite(parts, p) == gamma_p(g, p).gamma_p
        if gamma_p_multipartite(parts, p) > p:
            assert r_p_multipartite_counts(parts, p) == r_p(g, p).r_p
            assert r_p_multipartite(parts, p) >= r_p(g, p).r_p


def test_unsorted_parts_give_same_values():
    assert gamma_p_multipartite((17, 2, 10, 2), 11) == 12
    assert r_p_multipartite((17, 2, 10, 2), 11) == 1
