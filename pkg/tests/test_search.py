"""Search oracle: exact m(n,k,r), degree caps, canonical forms, optima."""

import random

import pytest

from conftest import brute_max_by_cliques
from ekrforge.binomial import binom
from ekrforge.constructions import build_K34, build_R, build_S, g_size_formula
from ekrforge.covers import is_intersecting, tau
from ekrforge.families import UniformFamily
from ekrforge.search import (are_isomorphic, canonical_form, enumerate_optima,
                             max_intersecting, max_intersecting_degcap)


def test_values_against_closed_forms():
    assert max_intersecting(7, 3, 1, budget=60).value == binom(6, 2)
    assert max_intersecting(8, 3, 1, budget=60).value == binom(7, 2)
    assert max_intersecting(7, 3, 2, budget=60).value == binom(6, 2) - binom(3, 2) + 1
    assert max_intersecting(7, 3, 3, budget=60).value == 10 == g_size_formula(7, 3)


def test_values_without_warm_start():
    for n, k, r, expected in ((7, 3, 1, 15), (7, 3, 2, 13), (7, 3, 3, 10),
                              (8, 3, 3, 10)):
        res = max_intersecting(n, k, r, budget=120, seed_incumbent=False)
        assert res.status == "proved-optimal"
        assert res.value == expected


def test_witness_soundness():
    res = max_intersecting(8, 3, 3, budget=120)
    assert is_intersecting(res.witness)
    assert tau(res.witness) >= 3
    assert len(res.witness) == res.value


def test_monotone_in_r():
    values = [max_intersecting(7, 3, r, budget=60).value for r in (1, 2, 3)]
    assert values[0] >= values[1] >= values[2]


def test_determinism():
    a = max_intersecting(7, 3, 3, budget=60)
    b = max_intersecting(7, 3, 3, budget=60)
    assert (a.value, a.status, a.nodes, a.witness) == (b.value, b.status, b.nodes,
                                                       b.witness)


def test_matches_maximal_clique_enumeration():
    """Independent oracle: Bron-Kerbosch over all maximal intersecting families."""
    for n, k, r in ((6, 3, 1), (7, 3, 1), (7, 3, 2), (7, 3, 3)):
        assert max_intersecting(n, k, r, budget=120).value == \
            brute_max_by_cliques(n, k, r)


def test_preconditions():
    with pytest.raises(ValueError):
        max_intersecting(5, 3, 1)
    with pytest.raises(ValueError):
        max_intersecting(7, 3, 4)


def test_degcap_values():
    res2 = max_intersecting_degcap(7, 3, 2, budget=300)
    bound2 = binom(6, 2) - binom(4, 2) + binom(4, 1)
    assert res2.status == "proved-optimal"
    assert res2.value == 13 == bound2
    res3 = max_intersecting_degcap(7, 3, 3, budget=300)
    bound3 = binom(6, 2) - binom(3, 2) + binom(3, 0)
    assert res3.status == "proved-optimal"
    assert res3.value == 13 == bound3


def test_degcap_witness_respects_cap():
    res = max_intersecting_degcap(7, 3, 2, budget=300)
    cap = binom(6, 2) - binom(4, 2)
    degs = [sum(1 for s in res.witness.sets() if x in s) for x in range(1, 8)]
    assert max(degs) <= cap


def test_degcap_lower_bound_construction():
    """The 13-member witness for the cap-9 case: 1-star through [2,3] plus
    every triple containing {2,3}."""
    members = [(1, 2, x) for x in range(3, 8)] + [(1, 3, x) for x in range(4, 8)]
    members += [(2, 3, x) for x in range(4, 8)]
    fam = UniformFamily.from_sets(7, 3, members)
    assert len(fam) == 13
    assert is_intersecting(fam)
    degs = [sum(1 for s in fam.sets() if x in s) for x in range(1, 8)]
    assert max(degs) <= 9


def test_degcap_preconditions():
    with pytest.raises(ValueError):
        max_intersecting_degcap(7, 3, 1)
    with pytest.raises(ValueError):
        max_intersecting_degcap(6, 3, 2)


def test_canonical_form_invariance():
    rng = random.Random(0)
    fam = build_S(6)
    base = canonical_form(fam)
    for _ in range(100):
        perm = list(range(1, 7))
        rng.shuffle(perm)
        relabeled = UniformFamily.from_sets(
            6, 3, [tuple(perm[x - 1] for x in s) for s in fam.sets()])
        assert canonical_form(relabeled) == base


def test_canonical_form_distinguishes():
    assert canonical_form(build_S(6)) != canonical_form(build_R(6))


def test_canonical_k34_placement_independent():
    base = canonical_form(build_K34(6))
    moved = UniformFamily.from_sets(
        6, 3, [(3, 4, 5), (3, 4, 6), (3, 5, 6), (4, 5, 6)])
    assert canonical_form(moved) == base


def test_are_isomorphic():
    import random as _random
    rng = _random.Random(8)
    fam = build_S(6)
    perm = list(range(1, 7))
    rng.shuffle(perm)
    relabeled = UniformFamily.from_sets(
        6, 3, [tuple(perm[x - 1] for x in s) for s in fam.sets()])
    assert are_isomorphic(fam, relabeled)
    assert not are_isomorphic(build_S(6), build_R(6))


def test_enumerate_optima_6_3_1():
    """13 isomorphism classes; cross-checked exhaustively over all 1024
    one-per-complement-pair selections (every maximal intersecting family
    at n = 2k arises that way)."""
    forms, result = enumerate_optima(6, 3, 1, budget=300)
    assert result.status == "proved-optimal"
    assert result.value == binom(5, 2) == 10
    assert len(forms) == 13
    assert all(f.masks for f in forms)


def test_enumerate_optima_7_3_3():
    forms, result = enumerate_optima(7, 3, 3, budget=300)
    assert result.value == 10
    assert len(forms) == 7
    # every recorded class really has value-many members
    assert all(len(f.masks) == 10 for f in forms)


@pytest.mark.slow
def test_optima_7_3_3_against_clique_enumeration():
    """Dual route for the 7-class count: Bron-Kerbosch over all maximal
    intersecting families, filtered to size-10 τ≥3, deduplicated."""
    from conftest import intersect_compat, maximal_cliques
    from ekrforge.families import ksets_colex
    from ekrforge.search import _dedup_to_forms

    masks = list(ksets_colex(7, 3))
    compat = intersect_compat(masks)
    raw = []
    for clique in maximal_cliques(compat, len(masks)):
        if clique.bit_count() != 10:
            continue
        fam_masks = tuple(masks[i] for i in range(len(masks)) if clique >> i & 1)
        fam = UniformFamily.from_masks(7, 3, fam_masks)
        if tau(fam) >= 3:
            raw.append(fam.masks)
    forms = _dedup_to_forms(7, 3, raw)
    assert len(raw) == 3185
    assert len(forms) == 7
    direct, _ = enumerate_optima(7, 3, 3, budget=300)
    assert [f.masks for f in forms] == [f.masks for f in direct]


@pytest.mark.slow
def test_seeded_search_structure():
    """The τ=3-restricted branch of the structural split proves 48 at (9,4)."""
    from ekrforge.families import ksets_colex, mask_of
    cover3 = mask_of((1, 2, 3), 9)
    universe = [m for m in ksets_colex(9, 4) if m & cover3]
    res = max_intersecting(9, 4, 3, budget=600, forced_first=False,
                           universe=universe)
    assert res.status == "proved-optimal"
    assert res.value == 48
