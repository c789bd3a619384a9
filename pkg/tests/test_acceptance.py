"""
Acceptance suite. Every criterion records one PASS/FAIL line, printed in the
terminal summary (and to stdout with -s). Time limits are checked as well.
"""

import random
import time
from contextlib import contextmanager
from itertools import combinations, product

import pytest

import oracles
from schubert_levi.decomposition import character_check, decompose_degree, verify_psi_bijection
from schubert_levi.grassmann import (SchubertContext, all_words, count_std_monomials,
                                     stabilizer_set, standard_monomials)
from schubert_levi.heads import (LeviContext, Order, class_of, hasse_partition, head_of,
                                 head_sequence, heads, str_compare)
from schubert_levi.lr import skew_weyl_decomposition, weyl_character, weyl_dimension
from schubert_levi.sphericity import (CERTIFIED, classify, determinantal_form,
                                      empirical_multiplicity_check, scan, smooth_form,
                                      unsound_rows)
from schubert_levi.straightening import (chevalley_action, is_standard, random_matrix,
                                         restrict_to_schubert, straighten)
from schubert_levi.tableaux import (SkewShape, contains, partitions_of, pi_rotation, psi,
                                    render_tableau)

RUNNING_W = (3, 6, 9)


def running():
    return LeviContext.stabilizer(SchubertContext(9, 3, RUNNING_W))


@contextmanager
def criterion(log, number, title, limit, offset=0.0):
    start = time.perf_counter() - offset
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        line = f"criterion {number:2d}: {status}  {title}  ({elapsed:.2f} s, limit {limit} s)"
        log.append(line)
        print(line)
    assert within, f"criterion {number} took {elapsed:.1f} s, limit {limit} s"


def test_criterion_01_heads(acceptance_log):
    with criterion(acceptance_log, 1, "running example heads and classes", 1):
        levi = running()
        assert levi.r_q == frozenset({1, 2, 4, 5, 7, 8})
        assert levi.blocks == ((1, 2, 3), (4, 5, 6), (7, 8, 9))
        assert set(heads(levi)) == {(1, 2, 3), (2, 3, 6), (2, 3, 9), (3, 5, 6), (3, 6, 9)}
        assert class_of((2, 3, 6), levi) == (1, 1, 2)


def test_criterion_02_hasse_partition(acceptance_log):
    with criterion(acceptance_log, 2, "running example Hasse partition", 1):
        levi = running()
        components = hasse_partition(levi)
        assert len(components) == 5
        assert set(components) == set(heads(levi))
        for theta, members in components.items():
            assert max(members, key=sum) == theta
            assert all(oracles.leq(tau, theta) for tau in members)
        assert (2, 5, 9) in components[(3, 6, 9)] and head_of((2, 5, 9), levi) == (3, 6, 9)
        assert (1, 2, 4) in components[(2, 3, 6)] and head_of((1, 2, 4), levi) == (2, 3, 6)
        assert sum(map(len, components.values())) == 55


def test_criterion_03_skew_extraction(acceptance_log):
    with criterion(acceptance_log, 3, "running example skew extraction", 1):
        parts = psi(((3, 5, 9), (2, 3, 8), (1, 2, 4)), running())
        assert [p.shape for p in parts] == [SkewShape((3, 2)), SkewShape((2, 1), (1,)),
                                            SkewShape((2,))]
        assert [p.rows for p in parts] == [((1, 2, 3), (2, 3)), ((2,), (1,)), ((2, 3),)]
        assert [render_tableau(p) for p in parts] == ["1 2 3\n2 3", "· 2\n1", "2 3"]


@pytest.fixture(scope="module")
def sweep():
    """Every N <= 7, d <= 3, w, R_Q inside the stabilizer set, degree <= 3."""
    start = time.perf_counter()
    contexts, dim_failures, psi_failures = 0, [], []
    for N in range(2, 8):
        for d in range(1, min(3, N - 1) + 1):
            for w in all_words(d, N):
                ctx = SchubertContext(N, d, w)
                full = sorted(stabilizer_set(ctx))
                for k in range(len(full) + 1):
                    for r_q in combinations(full, k):
                        levi = LeviContext(ctx, frozenset(r_q))
                        for r in (1, 2, 3):
                            contexts += 1
                            case = (N, d, w, r_q, r)
                            report = decompose_degree(levi, r, check=False)
                            if report.total_dim != count_std_monomials(ctx, r):
                                dim_failures.append(case)
                            if not (verify_psi_bijection(levi, r) and character_check(levi, r)):
                                psi_failures.append(case)
    return {"contexts": contexts, "dims": dim_failures, "psi": psi_failures,
            "elapsed": time.perf_counter() - start}


def test_criterion_04_dimension_sweep(acceptance_log, sweep):
    # the sweep runs once and its time is charged to both criteria 4 and 8
    with criterion(acceptance_log, 4, f"dimension identity over {sweep['contexts']} contexts",
                   1800, offset=sweep["elapsed"]):
        assert sweep["dims"] == []


def test_criterion_05_degree_one_total(acceptance_log):
    with criterion(acceptance_log, 5, "running example degree-1 total", 1):
        report = decompose_degree(running(), 1)
        assert sorted(e.tensor_dim for e in report.entries) == [1, 9, 9, 9, 27]
        assert report.total_dim == 55 == len(SchubertContext(9, 3, RUNNING_W).interval)


def test_criterion_06_straightening_oracle(acceptance_log):
    with criterion(acceptance_log, 6, "straightening against exact minors", 30):
        checked = 0
        for N in range(2, 7):
            for d in range(1, N):
                words = all_words(d, N)
                expansions = {m: straighten(m) for m in product(words, repeat=2)
                              if not is_standard(m)}
                rng = random.Random(1000 * N + d)
                for _ in range(100):
                    M = random_matrix(N, d, rng)
                    minor = {t: oracles.det_fraction([M[i - 1] for i in t]) for t in words}
                    for (a, b), e in expansions.items():
                        assert minor[a] * minor[b] == sum(c * minor[x] * minor[y]
                                                          for (x, y), c in e.items())
                        checked += 1
        assert checked == 65000


def _at_least(new, old):
    return str_compare(new, old) in (Order.GREATER, Order.EQUAL)


def test_criterion_07_head_order_and_stability(acceptance_log):
    with criterion(acceptance_log, 7, "head order and L-stability, N <= 6, degree <= 3", 120):
        # straightening happens in the whole Grassmannian; restricting to X(w) only
        # drops terms, so the top cell with every Levi covers every w
        for N in range(2, 7):
            for d in range(1, N):
                ctx = SchubertContext.grassmannian(N, d)
                levis = [LeviContext(ctx, frozenset(c))
                         for k in range(N) for c in combinations(range(1, N), k)]
                for r in (1, 2, 3):
                    for m in product(all_words(d, N), repeat=r):
                        terms = straighten(m)
                        for levi in levis:
                            before = head_sequence(m, levi)
                            assert all(_at_least(head_sequence(t, levi), before) for t in terms)
        for N in range(2, 7):
            for d in range(1, N):
                for w in all_words(d, N):
                    ctx = SchubertContext(N, d, w)
                    full = sorted(stabilizer_set(ctx))
                    for k in range(1, len(full) + 1):
                        for r_q in combinations(full, k):
                            levi = LeviContext(ctx, frozenset(r_q))
                            for r in (1, 2, 3):
                                for m in standard_monomials(ctx, r):
                                    theta = head_sequence(m, levi)
                                    for i in r_q:
                                        for direction in ("raise", "lower"):
                                            for moved, _ in chevalley_action(i, m, direction):
                                                kept = restrict_to_schubert(straighten(moved), w)
                                                assert all(_at_least(head_sequence(t, levi), theta)
                                                           for t in kept)


def test_criterion_08_psi_and_characters(acceptance_log, sweep):
    with criterion(acceptance_log, 8, f"psi bijection and characters over {sweep['contexts']} "
                   "contexts", 1800, offset=sweep["elapsed"]):
        assert sweep["psi"] == []


def test_criterion_09_lr_consistency(acceptance_log):
    with criterion(acceptance_log, 9, "LR sums, pi-rotation, s_(2,1)/(1)", 30):
        assert skew_weyl_decomposition(SkewShape((2, 1), (1,))) == {(2,): 1, (1, 1): 1}
        for size in range(9):
            for lam in partitions_of(size):
                for k in range(size + 1):
                    for mu in partitions_of(k):
                        if not contains(lam, mu):
                            continue
                        shape = SkewShape(lam, mu)
                        rotated = pi_rotation(shape)
                        dec = skew_weyl_decomposition(shape)
                        for n in range(1, 6):
                            dim = weyl_dimension(shape, n)
                            assert dim == sum(c * weyl_dimension(SkewShape(nu), n)
                                              for nu, c in dec.items())
                            assert dim == weyl_dimension(rotated, n)
                            assert weyl_character(shape, n) == weyl_character(rotated, n)


def test_criterion_10_certifications(acceptance_log):
    with criterion(acceptance_log, 10, "smooth, determinantal, Gr(2,N) and soundness", 300):
        for N in range(2, 9):
            for d in range(1, N):
                for w in all_words(d, N):
                    ctx = SchubertContext(N, d, w)
                    if smooth_form(w, N) is not None:
                        levi = LeviContext.stabilizer(ctx)
                        for r in range(1, 5):
                            entries = decompose_degree(levi, r).entries
                            assert len(entries) == 1
                            assert [m for _, m in entries[0].constituents] == [1]
                    if determinantal_form(w, N) is not None or d == 2:
                        assert classify(ctx).theorem_verdict == CERTIFIED
                        result = empirical_multiplicity_check(LeviContext.stabilizer(ctx), 3)
                        assert result.multiplicity_free_up_to_bound
        rows = [v for N in range(2, 9) for d in range(1, N) for v in scan(N, d, 3)]
        assert len(rows) == sum(2 ** N - 2 for N in range(2, 9))
        assert unsound_rows(rows) == []
