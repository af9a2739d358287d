import itertools
import math
from fractions import Fraction

import pytest

from cubegeo import construction as con
from cubegeo.construction import (
    BlockDecomposition,
    build_report,
    choose_variant,
    exact_expectation,
    exact_stats,
    f_geodesic,
    f_value,
    modify_geodesic,
    monte_carlo_mean,
)
from cubegeo.core import EdgeColouring, colour_changes, subcube_of_pair
from cubegeo.q3 import FVariant


def dir_mask(dirs):
    return sum(1 << d for d in dirs)


def test_f_value_examples():
    allred = EdgeColouring.monochromatic(3)
    assert f_value(allred, 0, 7, FVariant.F1) == 1
    assert f_value(allred, 0, 7, FVariant.F2) == 1
    split = EdgeColouring.direction_split(3)
    assert f_value(split, 0, 7, FVariant.F1) == 2
    assert f_value(split, 0, 7, FVariant.F2) == 1
    with pytest.raises(ValueError):
        f_value(allred, 0, 3, FVariant.F1)


@pytest.mark.parametrize("n,seed", [(6, 0), (6, 5), (9, 2)])
def test_f_value_conditions(n, seed):
    # conditions (i)-(iii): distances 1, 2 and 1 from the relevant endpoints
    c = EdgeColouring.random(n, seed)
    rng_pairs = []
    for v in range(0, 1 << n, max(1, (1 << n) // 32)):
        for dirs in itertools.islice(itertools.combinations(range(n), 3), 5):
            rng_pairs.append((v, v ^ dir_mask(dirs)))
    for v, w in rng_pairs:
        for variant in FVariant:
            fv = f_value(c, v, w, variant)
            fw = f_value(c, w, v, variant)
            assert (v ^ fv).bit_count() == 1
            assert (w ^ fv).bit_count() == 2
            assert (fv ^ fw).bit_count() == 1


def test_block_decomposition_validation():
    BlockDecomposition(0, ((0, 1, 2), (3, 4, 5)))
    with pytest.raises(ValueError):
        BlockDecomposition(0, ((0, 1, 2), (2, 3, 4)))
    with pytest.raises(ValueError):
        BlockDecomposition(0, ((0, 1, 3),))
    bd = BlockDecomposition.from_permutation(5, [4, 0, 2, 1, 5, 3])
    assert bd.triples == ((0, 2, 4), (1, 3, 5))
    assert bd.endpoints() == [5, 5 ^ 0b010101, 5 ^ 0b111111]


def test_modify_geodesic_examples():
    split3 = EdgeColouring.direction_split(3)
    bd = BlockDecomposition(0, ((0, 1, 2),))
    g = modify_geodesic(split3, bd, FVariant.F1)
    assert g == f_geodesic(split3, 0, 7, FVariant.F1)

    allred = EdgeColouring.monochromatic(6)
    bd6 = BlockDecomposition.from_permutation(0, [1, 2, 3, 0, 4, 5])
    assert colour_changes(allred, modify_geodesic(allred, bd6, FVariant.F1)) == 0

    split6 = EdgeColouring.direction_split(6)
    g = modify_geodesic(split6, bd6, FVariant.F1)
    assert sorted(g.dirs) == list(range(6))
    assert g.end == 63
    # passes through the block endpoint
    assert 0 ^ dir_mask((1, 2, 3)) in g.vertices()
    with pytest.raises(ValueError):
        modify_geodesic(split3, bd6, FVariant.F1)


def test_modified_geodesic_uses_each_direction_once():
    for seed in range(5):
        c = EdgeColouring.random(9, seed)
        bd = BlockDecomposition.from_permutation(seed * 37 % 512, [3, 1, 8, 0, 6, 2, 7, 4, 5])
        for variant in FVariant:
            g = modify_geodesic(c, bd, variant)
            assert sorted(g.dirs) == list(range(9))
            assert all(v in g.vertices() for v in bd.endpoints())


def test_exact_stats_all_red():
    st = exact_stats(EdgeColouring.monochromatic(6))
    assert (st.p, st.a, st.b) == (1, 1, 0)
    assert all(count == math.comb(6, 3) for count in st.good_count_at)


def test_exact_stats_direction_split():
    st = exact_stats(EdgeColouring.direction_split(6))
    assert st.p == Fraction(1, 2)
    assert st.a == 0
    assert st.b == 1
    assert st.p == st.a + st.b / 2


def test_exact_stats_identity_random():
    for seed in range(25):
        st = exact_stats(EdgeColouring.random(6, seed))
        assert st.p == st.a + st.b / 2


def test_exact_stats_rejects_small_dimension():
    with pytest.raises(ValueError):
        exact_stats(EdgeColouring.monochromatic(5))


def test_good_count_lower_bound():
    # every subcube monochromatic at a vertex's star is good
    for seed in range(5):
        c = EdgeColouring.random(6, seed)
        st = exact_stats(c)
        for v in range(64):
            r = sum(1 for d in range(6) if c.colour_at(v, d) == 0)
            assert st.good_count_at[v] >= math.comb(r, 3) + math.comb(6 - r, 3)


def test_choose_variant():
    assert choose_variant(EdgeColouring.monochromatic(6)) == FVariant.F1
    split = EdgeColouring.direction_split(6)
    jc = con._junction_counts(split)
    assert 2 * jc.changes_mixed[int(choose_variant(split))] <= jc.mixed
    for seed in range(5):
        c = EdgeColouring.random(6, seed)
        jc = con._junction_counts(c)
        # exactly one variant changes per mixed configuration
        assert jc.changes_mixed[0] + jc.changes_mixed[1] == jc.mixed
        assert jc.changes_bad_bad == (0, 0)
        assert 2 * jc.changes_mixed[int(choose_variant(c))] <= jc.mixed


def test_exact_expectation_examples():
    e = exact_expectation(EdgeColouring.monochromatic(6), FVariant.F1)
    assert (e.block_mean, e.junction_mean, e.expectation) == (0, 0, 0)

    e3 = exact_expectation(EdgeColouring.direction_split(3), FVariant.F1)
    assert e3.block_mean == 1 and e3.expectation == 1

    split6 = EdgeColouring.direction_split(6)
    e6 = exact_expectation(split6, choose_variant(split6))
    assert e6.block_mean == Fraction(1, 2)
    assert e6.expectation <= Fraction(3, 2)
    with pytest.raises(ValueError):
        exact_expectation(EdgeColouring.monochromatic(4), FVariant.F1)


def test_expectation_matches_direct_average_n6():
    # independent oracle: average colour_changes over every modified geodesic
    # (all 64 starts x all 720 direction permutations)
    c = EdgeColouring.random(6, 17)
    variant = choose_variant(c)
    total = 0
    count = 0
    for start in range(64):
        for perm in itertools.permutations(range(6)):
            bd = BlockDecomposition.from_permutation(start, perm)
            total += colour_changes(c, modify_geodesic(c, bd, variant))
            count += 1
    assert Fraction(total, count) == exact_expectation(c, variant).expectation


def test_monte_carlo_examples():
    allred = EdgeColouring.monochromatic(6)
    mean, stderr = monte_carlo_mean(allred, FVariant.F1, 500, 1)
    assert mean == 0 and stderr == 0

    split3 = EdgeColouring.direction_split(3)
    mean, stderr = monte_carlo_mean(split3, FVariant.F1, 500, 2)
    assert mean == 1 and stderr == 0

    c = EdgeColouring.random(6, 4)
    variant = choose_variant(c)
    exact = float(exact_expectation(c, variant).expectation)
    mean, stderr = monte_carlo_mean(c, variant, 20000, 3)
    assert abs(mean - exact) <= 4 * stderr
    # determinism
    assert monte_carlo_mean(c, variant, 1000, 9) == monte_carlo_mean(c, variant, 1000, 9)


def test_build_report():
    c = EdgeColouring.direction_split(6)
    rep = build_report(c)
    assert rep.p == Fraction(1, 2) and rep.a == 0 and rep.b == 1
    assert rep.expectation == rep.n // 3 * rep.block_mean + (rep.n // 3 - 1) * rep.junction_mean
    rep_f2 = build_report(c, FVariant.F2)
    assert rep_f2.chosen == FVariant.F2
    rep3 = build_report(EdgeColouring.direction_split(3))
    assert rep3.a is None and rep3.expectation == 1
