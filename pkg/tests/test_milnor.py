import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clover_milnor.magnus import expand
from clover_milnor.milnor import (
    SeriesPresentation,
    TanglePresentation,
    check_vanishing,
    delta_k,
    delta_k_subsequences,
    delta_link,
    format_sequence,
    milnor_number,
    mu_bar,
    mu_table,
    parse_sequence,
    reduce_mod,
    seq_basis,
)
from clover_milnor.sampling import random_gamma, random_word, zero_framed
from clover_milnor.word import GroupWord, commutator, conjugate
from strategies import brute_subsequence_gcd, naive_expand


def g(n, i, p=1):
    return GroupWord.generator(n, i, p)


def tangle(n, *longs):
    return TanglePresentation(n, tuple(longs))


E3 = GroupWord.identity(3)
E4 = GroupWord.identity(4)
BORROMEAN = tangle(
    3,
    commutator(g(3, 2), g(3, 3)),
    commutator(g(3, 3), g(3, 1)),
    commutator(g(3, 1), g(3, 2)),
)
HOPF_PAIRS = tangle(4, g(4, 2), g(4, 1), g(4, 4), g(4, 3))


def test_milnor_number_examples():
    t = tangle(2, E3.__class__.identity(2), g(2, 1))
    assert milnor_number(t, (1, 2)) == 1
    assert milnor_number(BORROMEAN, (3,)) == 0
    t3 = tangle(3, E3, E3, commutator(g(3, 1), g(3, 2)))
    assert milnor_number(t3, (1, 2, 3)) == 1
    assert milnor_number(t3, (2, 1, 3)) == -1
    with pytest.raises(ValueError):
        milnor_number(t3, (1, 4))


def test_mu_table_examples():
    assert not any(mu_table(TanglePresentation.trivial(3), 4).values())
    t = tangle(2, g(2, 2), g(2, 1))
    assert mu_table(t, 2) == {(1,): 0, (2,): 0, (1, 1): 0, (2, 1): 1, (1, 2): 1, (2, 2): 0}
    table = mu_table(BORROMEAN, 3, non_repeated_only=True)
    assert all(table[I] == 0 for I in table if len(I) <= 2)
    assert [table[I] for I in [(1, 2, 3), (2, 3, 1), (3, 1, 2)]] == [1, 1, 1]
    assert [table[I] for I in [(2, 1, 3), (1, 3, 2), (3, 2, 1)]] == [-1, -1, -1]


def test_mu_table_against_naive_expansion():
    rng = random.Random(11)
    t = TanglePresentation(3, [zero_framed(random_word(rng, 3, 9), i) for i in (1, 2, 3)])
    table = mu_table(t, 4)
    naive = [naive_expand(w, 3) for w in t.longitudes]
    for I, v in table.items():
        expected = 0 if len(I) == 1 else naive[I[-1] - 1].get(I[:-1], 0)
        assert v == expected


def test_delta_k_examples():
    assert delta_k(BORROMEAN, (1, 2, 3), 1) == 0
    assert delta_k(HOPF_PAIRS, (1, 2, 3, 4), 0) == 1
    for I in [(1,), (1, 2), (3, 1)]:
        assert delta_k(HOPF_PAIRS, I, len(I) - 1) == 0


def test_delta_k_against_bitmask_enumeration():
    rng = random.Random(5)
    for _ in range(10):
        t = random_gamma(rng, 3, 1)
        I = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 6)))
        k = rng.randint(0, 2)
        expected = brute_subsequence_gcd(lambda J: milnor_number(t, J), I, k + 1)
        assert delta_k(t, I, k) == expected


def test_delta_link_examples():
    assert delta_link(BORROMEAN, (1, 2, 3)) == 0
    t = tangle(2, g(2, 2), g(2, 1))
    assert delta_link(t, (1, 2, 1)) == 1
    assert delta_link(TanglePresentation.trivial(3), (1, 2, 3, 1)) == 0


def test_delta_link_uses_cyclic_permutations():
    # only mu(31) is nonzero; 31 is a cyclic permutation of the subsequence 13 of 123
    t = tangle(3, g(3, 3, 2), E3, g(3, 1, 2))
    assert milnor_number(t, (1, 3)) == 2 and milnor_number(t, (3, 1)) == 2
    t2 = TanglePresentation(3, (g(3, 3, 2), E3, E3), check_framing=True)
    assert milnor_number(t2, (1, 3)) == 0 and milnor_number(t2, (3, 1)) == 2
    assert delta_link(t2, (1, 2, 3)) == 2
    assert delta_k(t2, (1, 2, 3), 0) == 0


def test_mu_bar_examples():
    assert mu_bar(BORROMEAN, (1, 2, 3)) == (1, 0)
    t = tangle(2, g(2, 2), g(2, 1))
    assert mu_bar(t, (1, 2)) == (1, 0)
    assert reduce_mod(5, 3) == 2
    assert reduce_mod(-4, 3) == 2
    assert reduce_mod(-4, 0) == -4


def test_mu_bar_reduces_into_range():
    # linking 3 makes Delta(112) = 3; mu(112) is the X1X1 coefficient of (1+X1)^3
    t = tangle(2, g(2, 2, 3), g(2, 1, 3))
    assert milnor_number(t, (1, 1, 2)) == 3
    assert mu_bar(t, (1, 1, 2)) == (0, 3)
    t2 = tangle(2, g(2, 2, 2), g(2, 1, 2) * commutator(g(2, 1), g(2, 2)))
    res, mod = mu_bar(t2, (1, 2, 2))
    assert mod == 2 and res == milnor_number(t2, (1, 2, 2)) % 2


def test_check_vanishing_examples():
    assert check_vanishing(TanglePresentation.trivial(4), 5)
    assert check_vanishing(HOPF_PAIRS, 1)
    assert not check_vanishing(HOPF_PAIRS, 2)
    assert check_vanishing(BORROMEAN, 2)
    assert not check_vanishing(BORROMEAN, 3)


def test_seq_basis_examples():
    assert seq_basis(4, 4, 3) == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    assert seq_basis(3, 3, 1) == [(1,), (2,)]
    assert seq_basis(4, 1, 3) == [(2, 3, 4), (2, 4, 3), (3, 2, 4), (3, 4, 2), (4, 2, 3), (4, 3, 2)]
    with pytest.warns(UserWarning):
        assert seq_basis(4, 4, 4) == []


def test_framing_validation():
    with pytest.raises(ValueError, match="zero-framed"):
        tangle(2, g(2, 1), E3.__class__.identity(2))
    t = TanglePresentation(2, (g(2, 1), GroupWord.identity(2)), check_framing=False)
    assert milnor_number(t, (1, 1)) == 1
    assert not HOPF_PAIRS.is_abelian_trivial()
    assert BORROMEAN.is_abelian_trivial()
    with pytest.raises(ValueError):
        TanglePresentation(2, (g(2, 2),))


def test_document_roundtrip():
    d = HOPF_PAIRS.to_dict()
    assert d == {"n": 4, "longitudes": [[[2, 1]], [[1, 1]], [[4, 1]], [[3, 1]]]}
    assert TanglePresentation.from_dict(d) == HOPF_PAIRS
    with pytest.raises(ValueError):
        TanglePresentation.from_dict({"n": 2})


def test_sequence_notation():
    assert parse_sequence("1234", 4) == (1, 2, 3, 4)
    assert parse_sequence("10,2,3", 12) == (10, 2, 3)
    assert format_sequence((1, 2, 3), 4) == "123"
    assert format_sequence((10, 2), 12) == "10,2"
    with pytest.raises(ValueError):
        parse_sequence("12", 12)
    with pytest.raises(ValueError):
        parse_sequence("15", 4)


def test_series_presentation_agrees_with_words():
    sp = SeriesPresentation(3, tuple(expand(w, 3) for w in BORROMEAN.longitudes))
    assert mu_table(sp, 4) == mu_table(BORROMEAN, 4)


@given(st.integers(0, 3), st.lists(st.integers(1, 3), min_size=1, max_size=6))
def test_delta_k_subsequence_sets_shrink(k, seq):
    small = set(delta_k_subsequences(seq, k + 1))
    big = set(delta_k_subsequences(seq, k))
    assert small <= big
    assert all(len(J) <= len(seq) - (k + 1) for J in big)


@settings(max_examples=25)
@given(st.randoms(use_true_random=False))
def test_length_two_symmetry_for_commutator_tangles(rng):
    # tangles built from linking powers and commutators have symmetric mu(pq) when the
    # exponents are chosen symmetrically
    n = 3
    lk = {(1, 2): rng.randint(-3, 3), (1, 3): rng.randint(-3, 3), (2, 3): rng.randint(-3, 3)}
    lk.update({(q, p): v for (p, q), v in list(lk.items())})
    longs = []
    for j in range(1, n + 1):
        w = GroupWord.identity(n)
        for p in range(1, n + 1):
            if p != j:
                w = w * g(n, p, lk[(p, j)])
        longs.append(w * commutator(g(n, rng.randint(1, 3)), g(n, rng.randint(1, 3))))
    t = TanglePresentation(n, longs)
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            if p != q:
                assert milnor_number(t, (p, q)) == milnor_number(t, (q, p))


@settings(max_examples=25)
@given(st.randoms(use_true_random=False))
def test_mu_bar_under_conjugation(rng):
    t = random_gamma(rng, 3, 1)
    j = rng.randint(1, 3)
    gword = random_word(rng, 3, 3)
    longs = list(t.longitudes)
    longs[j - 1] = conjugate(longs[j - 1], gword)
    t2 = TanglePresentation(3, longs)
    I = tuple(rng.randint(1, 3) for _ in range(3)) + (j,)
    r1, d1 = mu_bar(t, I)
    r2, d2 = mu_bar(t2, I)
    change = milnor_number(t2, I) - milnor_number(t, I)
    if d1 == d2 and d1 > 0 and change % d1 == 0:
        assert r1 == r2
