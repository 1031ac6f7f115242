import random

import pytest

from klcograph import (
    BudgetExceededError,
    OracleBudget,
    box_cograph_dimension,
    build_cotree,
    chromatic_number_exact,
    complement,
    conjugate,
    disjoint_union,
    evaluate_cotree,
    is_box_cograph_oracle,
    is_kl_colourable_exhaustive,
    is_kl_colourable_oracle,
    kappa_hat,
    kappa_hat_oracle,
    kappa_oracle,
    lambda_hat_oracle,
    random_cotree,
)

from helpers import (
    EXAMPLE_7,
    complete_graph,
    cycle_graph,
    empty_graph,
    l_copies_of_k_clique,
    path_graph,
    random_graph,
)


def test_chromatic_number_small_cases():
    assert chromatic_number_exact(empty_graph(4)) == 1
    assert chromatic_number_exact(complete_graph(5)) == 5
    assert chromatic_number_exact(cycle_graph(5)) == 3
    assert chromatic_number_exact(cycle_graph(6)) == 2
    assert chromatic_number_exact(path_graph(4)) == 2


def test_kappa_oracle_worked_example():
    assert kappa_hat_oracle(EXAMPLE_7).entries == (3, 3, 1)
    assert lambda_hat_oracle(EXAMPLE_7).entries == (3, 2, 2)


def test_kappa_sum_differs_from_n_outside_cographs():
    assert kappa_hat_oracle(path_graph(4)).entries == (2, 1)
    assert kappa_hat_oracle(cycle_graph(5)).entries == (3, 2, 1)


def test_oracle_matches_cotree_calculus_on_cographs():
    rng = random.Random(20)
    for _ in range(60):
        t = random_cotree(rng.randint(1, 10), rng)
        g = evaluate_cotree(t)
        assert kappa_hat_oracle(g) == kappa_hat(t)


def test_conjugacy_on_random_general_graphs():
    rng = random.Random(21)
    for _ in range(60):
        g = random_graph(rng.randint(1, 7), rng.random(), rng)
        assert conjugate(kappa_hat_oracle(g)) == lambda_hat_oracle(g)


def test_colourability_routes_agree():
    rng = random.Random(22)
    for _ in range(60):
        g = random_graph(rng.randint(1, 7), rng.random(), rng)
        for k in range(4):
            for l in range(4):
                assert is_kl_colourable_oracle(g, k, l) == is_kl_colourable_exhaustive(g, k, l)


def test_kappa_oracle_monotone_in_l():
    rng = random.Random(23)
    for _ in range(20):
        g = random_graph(rng.randint(1, 8), 0.5, rng)
        values = [kappa_oracle(g, l) for l in range(g.n + 1)]
        assert values == sorted(values, reverse=True)
        assert values[-1] == 0


def test_budget_enforced():
    with pytest.raises(BudgetExceededError):
        chromatic_number_exact(empty_graph(13), OracleBudget(max_vertices=12))
    with pytest.raises(BudgetExceededError):
        is_kl_colourable_exhaustive(empty_graph(9), 1, 1)
    # raising the budget lifts the limit
    assert chromatic_number_exact(empty_graph(13), OracleBudget(max_vertices=13)) == 1


def test_box_cograph_base_and_closure():
    assert box_cograph_dimension(complete_graph(1)) == (1, 1)
    assert box_cograph_dimension(complete_graph(4)) == (4, 1)
    assert box_cograph_dimension(empty_graph(4)) == (1, 4)
    assert box_cograph_dimension(l_copies_of_k_clique(2, 3)) == (3, 2)
    assert box_cograph_dimension(cycle_graph(4)) == (2, 2)


def test_box_cograph_non_members():
    assert box_cograph_dimension(path_graph(4)) is None  # not even a cograph
    assert box_cograph_dimension(path_graph(3)) is None
    # K2 union K1: union parts have different chromatic numbers
    assert box_cograph_dimension(disjoint_union(complete_graph(2), complete_graph(1))) is None


def test_box_cograph_closed_under_complement():
    rng = random.Random(24)
    for _ in range(40):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        dim = box_cograph_dimension(g)
        cdim = box_cograph_dimension(complement(g))
        if dim is None:
            assert cdim is None
        else:
            assert cdim == (dim[1], dim[0])


def test_box_cograph_dimension_is_chi_theta():
    g = l_copies_of_k_clique(3, 2)
    assert is_box_cograph_oracle(g, 2, 3)
    assert not is_box_cograph_oracle(g, 3, 2)


def test_box_cograph_members_have_constant_kappa():
    rng = random.Random(25)
    for _ in range(60):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        dim = box_cograph_dimension(g)
        if dim is not None:
            k, l = dim
            assert kappa_hat_oracle(g).entries == (k,) * l
