"""Seeded random family generation."""

import random

import pytest

from ekrforge.covers import is_saturated, tau
from ekrforge.families import is_intersecting, mask_of
from ekrforge.generators import (blocked_lift_seed, lift_seed,
                                 random_intersecting_seed,
                                 random_saturated_family, sample_saturated_tau3,
                                 saturate_random)


def test_saturate_random_is_maximal():
    rng = random.Random(0)
    for _ in range(10):
        fam = random_saturated_family(7, 3, rng, "free")
        assert is_intersecting(fam)
        assert is_saturated(fam)


def test_seed_reproducibility():
    a = sample_saturated_tau3(9, 4, 20, seed=42)
    b = sample_saturated_tau3(9, 4, 20, seed=42)
    assert a == b
    c = sample_saturated_tau3(9, 4, 20, seed=43)
    assert a != c


def test_sampled_families_have_tau3():
    for fam in sample_saturated_tau3(9, 4, 30, seed=1):
        assert tau(fam) >= 3
        assert is_saturated(fam)


def test_blocked_lift_guarantees_window():
    rng = random.Random(3)
    w5 = mask_of([1, 2, 3, 4, 5], 11)
    for _ in range(10):
        fam = saturate_random(blocked_lift_seed(11, 5), rng)
        assert all((m & w5).bit_count() >= 2 for m in fam.masks)
    with pytest.raises(ValueError):
        blocked_lift_seed(7, 3)


def test_lift_seed_traces():
    rng = random.Random(4)
    seed = lift_seed(9, 4, rng, "R", partial=False)
    w5 = mask_of([1, 2, 3, 4, 5], 9)
    r_edges = {mask_of(e, 9) for e in [(1, 2, 3), (1, 4, 5), (2, 3, 5)]}
    assert all(m & w5 in r_edges for m in seed.masks)
    partial = lift_seed(9, 4, rng, "S", partial=True)
    assert len(partial) >= 3
    assert is_intersecting(partial)


def test_common_free_seed():
    rng = random.Random(5)
    fam = random_intersecting_seed(8, 3, rng, size=4)
    assert is_intersecting(fam)
    common = fam.masks[0]
    for m in fam.masks[1:]:
        common &= m
    assert common == 0
    with pytest.raises(ValueError):
        random_intersecting_seed(8, 3, rng, size=2)
