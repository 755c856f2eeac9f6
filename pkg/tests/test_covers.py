"""Covers, covering number, saturation."""

import random

import pytest

from ekrforge.binomial import binom
from ekrforge.constructions import build_G, build_K34, build_R, build_S, full_star
from ekrforge.covers import (all_covers, brute_force_tau, covers, is_saturated,
                             saturate, tau)
from ekrforge.families import UniformFamily, is_intersecting
from ekrforge.generators import random_intersecting_seed, saturate_random


def test_covers_of_R_matches_listed_pairs():
    result = {s for s in covers(build_R(5), 2).sets()}
    assert result == {(1, 2), (1, 3), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)}


def test_covers_of_S_matches_listed_pairs():
    result = {s for s in covers(build_S(6), 2).sets()}
    assert result == {(1, 2), (3, 4), (2, 4), (1, 6), (1, 4), (2, 5)}


def test_covers_star_and_empty():
    star = full_star(7, 3)
    assert covers(star, 1).sets() == [(1,)]
    empty = UniformFamily(5, 2)
    assert len(covers(empty, 2)) == binom(5, 2)


def test_covers_padding_property():
    fam = build_S(7)
    for ell in range(1, 6):
        if len(covers(fam, ell)):
            assert len(covers(fam, ell + 1))


def test_tau_named_values():
    assert tau(build_G(9, 4)) == 3
    assert tau(full_star(7, 3)) == 1
    assert tau(build_S(6)) == 2
    assert tau(build_K34(4)) == 2
    with pytest.raises(ValueError):
        tau(UniformFamily(6, 3))


def test_tau_matches_brute_force_on_random_families():
    rng = random.Random(7)
    for _ in range(40):
        n, k = rng.choice(((6, 3), (7, 3), (8, 4)))
        fam = saturate_random(random_intersecting_seed(n, k, rng, size=3), rng)
        assert tau(fam) == brute_force_tau(fam, k)


def test_tau_monotone_under_supersets():
    rng = random.Random(13)
    for _ in range(25):
        n, k = rng.choice(((7, 3), (8, 3)))
        small = random_intersecting_seed(n, k, rng, size=3)
        big = saturate_random(small, rng)
        assert tau(small) <= tau(big)


def test_saturate_star_is_fixed_point():
    star = full_star(7, 3)
    assert saturate(star) == star
    assert is_saturated(star)


def test_saturate_idempotent_and_maximal():
    seed = build_S(7)
    sat = saturate(seed)
    assert is_intersecting(sat)
    assert is_saturated(sat)
    assert saturate(sat) == sat
    assert set(seed.masks) <= set(sat.masks)
    assert tau(sat) >= tau(seed)


def test_saturated_named_families():
    assert is_saturated(build_G(9, 4))
    single = UniformFamily.from_sets(7, 3, [(1, 2, 3)])
    assert not is_saturated(single)
    with pytest.raises(ValueError):
        saturate(UniformFamily.from_sets(6, 3, [(1, 2, 3), (4, 5, 6)]))


def test_tau_at_most_k_for_intersecting():
    rng = random.Random(5)
    for _ in range(20):
        n, k = rng.choice(((7, 3), (9, 4)))
        fam = saturate_random(random_intersecting_seed(n, k, rng, size=3), rng)
        assert tau(fam) <= k


def test_prop14_cover_family_intersecting_small_run():
    """T(H) intersecting for saturated H; the full-sized run is acceptance #9."""
    from itertools import combinations
    rng = random.Random(2)
    for _ in range(25):
        n, k = rng.choice(((7, 3), (8, 3), (9, 4)))
        fam = saturate_random(random_intersecting_seed(n, k, rng, size=3), rng)
        cover_masks = all_covers(fam)
        assert all(a & b for a, b in combinations(cover_masks, 2))


def test_fano_plane_is_maximal_with_tau3():
    fano = UniformFamily.from_sets(
        7, 3, [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7),
               (3, 4, 7), (3, 5, 6)])
    assert is_intersecting(fano)
    assert tau(fano) == 3
    assert is_saturated(fano)
