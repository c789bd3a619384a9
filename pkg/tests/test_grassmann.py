from itertools import combinations

import pytest
from hypothesis import given, strategies as st

import oracles
from schubert_levi.grassmann import (SchubertContext, all_words, bruhat_leq, check_word,
                                     count_std_monomials, hasse_diagram, lower_interval,
                                     reflect, stabilizer_set, standard_monomials)
from schubert_levi.lr import weyl_dimension
from schubert_levi.tableaux import SkewShape

RUNNING = SchubertContext(9, 3, (3, 6, 9))


@st.composite
def words(draw, max_n=8):
    N = draw(st.integers(2, max_n))
    d = draw(st.integers(1, N - 1))
    pick = lambda: tuple(sorted(draw(st.sets(st.integers(1, N), min_size=d, max_size=d))))
    return N, pick(), pick(), pick()


def test_bruhat_examples():
    assert bruhat_leq((1, 2, 4), (3, 6, 9))
    assert not bruhat_leq((2, 5, 9), (3, 4, 8))
    assert not bruhat_leq((3, 4, 8), (2, 5, 9))
    assert bruhat_leq((3, 6, 9), (3, 6, 9))
    with pytest.raises(ValueError):
        bruhat_leq((1, 2), (1, 2, 3))


@given(words())
def test_bruhat_is_a_partial_order(data):
    _, a, b, c = data
    if bruhat_leq(a, b) and bruhat_leq(b, a):
        assert a == b
    if bruhat_leq(a, b) and bruhat_leq(b, c):
        assert bruhat_leq(a, c)


def test_context_validation():
    with pytest.raises(ValueError):
        SchubertContext(4, 2, (3, 3))
    with pytest.raises(ValueError):
        SchubertContext(4, 2, (3, 5))
    with pytest.raises(ValueError):
        SchubertContext(4, 4, (1, 2, 3, 4))
    with pytest.raises(ValueError):
        check_word((1, 2, 3), 2, 5)


def test_lower_interval_examples():
    assert len(lower_interval(RUNNING)) == 55
    assert lower_interval(SchubertContext(4, 2, (3, 4))) == tuple(all_words(2, 4))
    assert lower_interval(SchubertContext(5, 2, (1, 2))) == ((1, 2),)


@pytest.mark.parametrize("N,d", [(4, 2), (5, 2), (6, 3), (7, 3)])
def test_lower_interval_matches_filter(N, d):
    for w in all_words(d, N):
        assert list(lower_interval(SchubertContext(N, d, w))) == oracles.interval(w, N)


def test_hasse_examples():
    diagram = hasse_diagram(RUNNING)
    assert ((2, 6, 9), (3, 6, 9), 2) in diagram.edges
    assert sorted(diagram.lower_neighbors((3, 6, 9))) == [(2, 6, 9), (3, 5, 9), (3, 6, 8)]
    small = hasse_diagram(SchubertContext(4, 2, (3, 4)))
    assert len(small.nodes) == 6
    # brute-force covering search gives 6 edges on I(2,4)
    assert len(small.edges) == 6


@pytest.mark.parametrize("N,d", [(4, 2), (5, 2), (6, 3), (6, 2)])
def test_hasse_edges_are_exactly_the_covers(N, d):
    for w in all_words(d, N):
        diagram = hasse_diagram(SchubertContext(N, d, w))
        assert {(a, b) for a, b, _ in diagram.edges} == oracles.covers(w, N)
        for lower, upper, m in diagram.edges:
            assert reflect(upper, m) == lower
            assert m in lower and m + 1 in upper and m + 1 not in lower


def test_stabilizer_examples():
    assert stabilizer_set(RUNNING) == {1, 2, 4, 5, 7, 8}
    assert stabilizer_set(SchubertContext.grassmannian(7, 3)) == set(range(1, 7))


@pytest.mark.parametrize("N", range(2, 9))
def test_stabilizer_matches_reflection_criterion(N):
    for d in range(1, N):
        for w in all_words(d, N):
            assert stabilizer_set(SchubertContext(N, d, w)) == oracles.stabilizer_by_reflection(w, N)


def test_determinantal_hat_set():
    # w = (t+1..d, N-t+1..N): only d is missing from the stabilizer
    for N, d, t in [(6, 4, 1), (8, 5, 2), (8, 3, 2), (4, 2, 1)]:
        w = tuple(range(t + 1, d + 1)) + tuple(range(N - t + 1, N + 1))
        assert set(range(1, N)) - stabilizer_set(SchubertContext(N, d, w)) == {d}


def test_count_examples():
    top = SchubertContext(4, 2, (3, 4))
    assert count_std_monomials(top, 1) == 6
    assert count_std_monomials(top, 2) == 20
    assert count_std_monomials(RUNNING, 1) == 55
    # frozen from the brute-force multichain count
    assert count_std_monomials(RUNNING, 2) == 1001
    with pytest.raises(ValueError):
        count_std_monomials(top, 0)


@pytest.mark.parametrize("N,d,r", [(4, 2, 3), (5, 2, 2), (5, 3, 2), (6, 3, 2)])
def test_count_and_list_match_brute_force(N, d, r):
    for w in all_words(d, N):
        ctx = SchubertContext(N, d, w)
        listed = list(standard_monomials(ctx, r))
        assert len(listed) == len(set(listed)) == count_std_monomials(ctx, r)
        assert count_std_monomials(ctx, r) == oracles.std_monomial_count(w, N, r)


@pytest.mark.parametrize("N,d", [(4, 2), (6, 3), (7, 2), (8, 3)])
def test_top_counts_are_rectangle_dimensions(N, d):
    ctx = SchubertContext.grassmannian(N, d)
    for r in (1, 2, 3):
        assert count_std_monomials(ctx, r) == weyl_dimension(SkewShape((r,) * d), N)


def test_enumeration_is_canonical():
    first = list(standard_monomials(RUNNING, 2))
    assert first == list(standard_monomials(SchubertContext(9, 3, (3, 6, 9)), 2))
    assert first[0] == ((3, 6, 9), (3, 6, 9))
    assert all(len(set(f)) == 3 for m in first for f in m)
    assert set(all_words(2, 4)) == set(combinations(range(1, 5), 2))
