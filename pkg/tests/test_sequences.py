import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klcograph import (
    PartitionSequence,
    bichromatic_number,
    build_cotree,
    cochromatic_number,
    complement,
    complement_cotree,
    conjugate,
    cotree_from_text,
    entrywise_add,
    evaluate_cotree,
    extract_colouring,
    is_kl_colourable,
    kappa_at,
    kappa_hat,
    kappa_hat_fast,
    kappa_hat_naive,
    lambda_hat,
    lambda_hat_fast,
    lambda_hat_naive,
    random_cotree,
    star_merge,
    validate_colouring,
)

from helpers import l_copies_of_k_clique

partitions = st.lists(st.integers(1, 12), max_size=12).map(
    lambda xs: PartitionSequence(sorted(xs, reverse=True))
)


def test_sequence_validation():
    with pytest.raises(ValueError):
        PartitionSequence([1, 2])
    with pytest.raises(ValueError):
        PartitionSequence([2, 0])
    assert PartitionSequence([]).entries == ()


def test_sequence_text_round_trip():
    s = PartitionSequence([3, 3, 1])
    assert PartitionSequence.from_text(s.to_text()) == s
    assert PartitionSequence.from_text("3^2,1") == s
    assert PartitionSequence.from_text("3,3,1") == s


def test_runs_and_constant():
    assert PartitionSequence.constant(4, 3).entries == (4, 4, 4)
    assert PartitionSequence([5, 5, 2]).runs == ((5, 2), (2, 1))
    assert PartitionSequence.from_runs([(5, 2), (2, 1)]).entries == (5, 5, 2)


def test_entrywise_add_worked_example():
    a = PartitionSequence([3, 2, 2, 1])
    b = PartitionSequence([3, 2, 1])
    assert entrywise_add(a, b) == PartitionSequence([6, 4, 3, 1])


def test_star_merge_sorts_concatenation():
    a = PartitionSequence([3, 1])
    b = PartitionSequence([2, 2])
    assert star_merge(a, b) == PartitionSequence([3, 2, 2, 1])


def test_empty_sequence_is_identity_for_both_operators():
    s = PartitionSequence([4, 2])
    e = PartitionSequence()
    assert entrywise_add(s, e) == s
    assert star_merge(e, s) == s


def test_conjugate_pairs():
    assert conjugate(PartitionSequence([3, 3, 1])) == PartitionSequence([3, 2, 2])
    assert conjugate(PartitionSequence([])) == PartitionSequence([])


@given(partitions)
def test_conjugate_is_involution(s):
    assert conjugate(conjugate(s)) == s


@given(partitions)
def test_conjugate_preserves_total(s):
    assert conjugate(s).total == s.total


@given(partitions, partitions)
def test_operators_commute(a, b):
    assert entrywise_add(a, b) == entrywise_add(b, a)
    assert star_merge(a, b) == star_merge(b, a)


@given(partitions)
def test_bichromatic_matches_definition(s):
    # smallest r such that every split k + l = r admits a colouring
    def colourable_all(r):
        return all(is_kl_colourable(s, k, r - k) for k in range(r + 1))

    r = 0
    while not colourable_all(r):
        r += 1
    assert bichromatic_number(s) == r


@given(partitions)
def test_cochromatic_matches_definition(s):
    def colourable_some(r):
        return any(is_kl_colourable(s, k, r - k) for k in range(r + 1))

    r = 0
    while not colourable_some(r):
        r += 1
    assert cochromatic_number(s) == r


def test_kappa_at_zero_beyond_length():
    s = PartitionSequence([3, 1])
    assert [kappa_at(s, l) for l in range(4)] == [3, 1, 0, 0]


def test_kappa_hat_of_single_leaf():
    t = cotree_from_text("0")
    assert kappa_hat_naive(t) == PartitionSequence([1])
    assert kappa_hat_fast(t) == PartitionSequence([1])


def test_kappa_hat_of_l_copies_of_k_clique():
    for l in range(1, 5):
        for k in range(1, 5):
            g = l_copies_of_k_clique(l, k)
            t = build_cotree(g)
            assert kappa_hat(t) == PartitionSequence.constant(k, l)


def test_naive_and_fast_agree_with_conjugate_duality():
    rng = random.Random(10)
    for _ in range(200):
        t = random_cotree(rng.randint(1, 80), rng)
        kn = kappa_hat_naive(t)
        kf = kappa_hat_fast(t)
        ln = lambda_hat_naive(t)
        lf = lambda_hat_fast(t)
        assert kn == kf
        assert ln == lf
        assert conjugate(kn) == ln
        assert kn.total == t.n


def test_kappa_of_complement_is_lambda():
    rng = random.Random(11)
    for _ in range(100):
        t = random_cotree(rng.randint(1, 40), rng)
        assert kappa_hat(complement_cotree(t)) == lambda_hat(t)


def test_kappa_equals_lambda_of_complement_graph():
    rng = random.Random(12)
    for _ in range(50):
        t = random_cotree(rng.randint(1, 25), rng)
        g = evaluate_cotree(t)
        ct = build_cotree(complement(g))
        assert kappa_hat(t) == lambda_hat(ct)


def test_extract_colouring_valid_for_all_feasible_parameters():
    rng = random.Random(13)
    for _ in range(40):
        t = random_cotree(rng.randint(1, 25), rng)
        g = evaluate_cotree(t)
        kh = kappa_hat(t)
        for l in range(len(kh) + 2):
            k = kappa_at(kh, l)
            col = extract_colouring(t, k, l)
            assert validate_colouring(g, col, k, l)


def test_extract_colouring_rejects_infeasible_parameters():
    t = build_cotree(l_copies_of_k_clique(2, 3))
    with pytest.raises(ValueError):
        extract_colouring(t, 1, 1)
