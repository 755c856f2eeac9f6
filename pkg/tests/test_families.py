"""Family core: masks, predicates, traces, layers, degrees."""

import random
from fractions import Fraction

import pytest

from ekrforge.binomial import binom
from ekrforge.constructions import build_G, full_star, lex_family
from ekrforge.families import (KSet, UniformFamily, are_cross_intersecting,
                               disjoint_pairs, elements_of, is_intersecting,
                               ksets_colex, layer, mask_of, max_degree, trace)


def test_mask_roundtrip():
    m = mask_of([2, 5, 7], 8)
    assert elements_of(m) == (2, 5, 7)
    with pytest.raises(ValueError):
        mask_of([0, 1], 5)
    with pytest.raises(ValueError):
        mask_of([1, 1, 2], 5)


def test_kset_invariants():
    s = KSet.from_elements([1, 3, 4], 6)
    assert s.k == 3 and 3 in s and 2 not in s
    assert KSet.from_elements([1, 3, 4], 6) == s
    with pytest.raises(ValueError):
        KSet(0b111, 6, 2)


def test_family_colex_order_and_dedup():
    fam = UniformFamily.from_sets(6, 3, [(4, 5, 6), (1, 2, 3), (1, 2, 3)])
    assert len(fam) == 2
    assert fam.sets() == [(1, 2, 3), (4, 5, 6)]
    # colex order == integer order on masks
    masks = list(ksets_colex(6, 3))
    assert masks == sorted(masks)
    assert len(masks) == binom(6, 3)


def test_family_validation():
    with pytest.raises(ValueError):
        UniformFamily.from_sets(6, 3, [(1, 2)])
    with pytest.raises(ValueError):
        UniformFamily.from_sets(6, 3, [(1, 2, 7)])
    with pytest.raises(ValueError):
        UniformFamily(65, 3)


def test_is_intersecting():
    star = full_star(6, 3)
    assert is_intersecting(star)
    assert not is_intersecting(UniformFamily.from_sets(6, 3, [(1, 2, 3), (4, 5, 6)]))
    assert is_intersecting(build_G(9, 4))


def test_cross_intersecting():
    a = UniformFamily.from_sets(5, 2, [(1, 2)])
    assert are_cross_intersecting(a, UniformFamily.from_sets(5, 3, [(1, 3, 4)]))
    assert not are_cross_intersecting(a, UniformFamily.from_sets(5, 3, [(3, 4, 5)]))
    with pytest.raises(ValueError):
        are_cross_intersecting(a, UniformFamily.from_sets(6, 3, [(1, 3, 4)]))
    # symmetry on random pairs
    rng = random.Random(3)
    for _ in range(25):
        fa = UniformFamily.from_sets(
            6, 2, {tuple(sorted(rng.sample(range(1, 7), 2))) for _ in range(4)})
        fb = UniformFamily.from_sets(
            6, 3, {tuple(sorted(rng.sample(range(1, 7), 3))) for _ in range(4)})
        assert are_cross_intersecting(fa, fb) == are_cross_intersecting(fb, fa)


def test_cross_intersecting_ft92_optimum_pair():
    from ekrforge.oracles import ft92_oracle
    _, cert = ft92_oracle(6, 2, 3)
    opt = cert.params["optimum"]
    a = lex_family(6, 2, opt["a_count"])
    b = lex_family(6, 3, opt["b_count"])
    assert are_cross_intersecting(a, b)


def test_trace_full_star():
    star = full_star(7, 3)
    stats = trace(star, [1])
    assert stats.f([1]) == binom(6, 2) == 15
    assert stats.f(0) == 0
    assert stats.total() == len(star)


def test_trace_g94_window5():
    g = build_G(9, 4)
    stats = trace(g, [1, 2, 3, 4, 5])
    assert stats.total() == len(g) == 48
    # the member {2,6,7,8} shows up under S={2} with residual {6,7,8}
    assert stats.f([2]) == 1
    assert stats.residual([2]).sets() == [(6, 7, 8)]


def test_trace_alpha_exact_and_flags():
    g = build_G(9, 4)
    stats = trace(g, [1, 2, 3, 4, 5])
    a = stats.alpha_of([1, 2])
    assert isinstance(a, Fraction)
    assert a == Fraction(stats.f([1, 2]), binom(4, 2))
    # α undefined for the empty trace by design
    assert stats.alpha_of(0) is None
    # denominator-zero flag: k - |S| > n - |U| forces binom = 0
    fam = UniformFamily.from_sets(6, 3, [(1, 2, 3), (1, 4, 5)])
    st = trace(fam, [1, 2, 3, 4, 5])
    assert st.alpha_of([1]) is None  # binom(1, 2) = 0


def test_layer_partition_law():
    g = build_G(9, 4)
    u = [1, 2, 3, 4, 5]
    sizes = [len(layer(g, u, i)) for i in range(0, 5)]
    assert sum(sizes) == len(g)
    assert sizes[0] == 0  # every member of G(9,4) meets [5]
    assert layer(g, range(1, 10), 4) == g
    fam = UniformFamily.from_sets(5, 3, [(1, 2, 3), (3, 4, 5)])
    assert layer(fam, [1, 2], 2).sets() == [(1, 2, 3)]


def test_trace_layer_consistency():
    g = build_G(9, 4)
    u = [1, 2, 3, 4, 5]
    stats = trace(g, u)
    for i in range(0, 5):
        expect = sum(f for s, (f, _) in stats.table.items() if s.bit_count() == i)
        assert len(layer(g, u, i)) == expect


def test_max_degree():
    assert max_degree(full_star(7, 3)) == (1, 15)
    fam = UniformFamily.from_sets(6, 3, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    assert max_degree(fam) == (1, 3)  # four-way tie broken by smallest element
    assert max_degree(build_G(9, 4)) == (1, 45)
    with pytest.raises(ValueError):
        max_degree(UniformFamily(6, 3))


def test_sperner_alpha_property_random():
    """α(A)+α(B) ≤ 1 for disjoint A,B in a window of a random intersecting family."""
    from ekrforge.properties import suite_sperner_random
    cert = suite_sperner_random(samples=18, seed=11)
    assert cert.passed, cert.witnesses[:3]
    assert cert.params["pairs_checked"] > 100


def test_hilton_lemma_lex_compression():
    from ekrforge.properties import suite_hilton_lex
    cert = suite_hilton_lex(samples=2000, seed=5)
    assert cert.passed, cert.witnesses[:3]


def test_disjoint_pairs_helper():
    masks = [mask_of(p, 5) for p in [(1, 2), (3, 4), (1, 3)]]
    pairs = disjoint_pairs(masks)
    assert len(pairs) == 1
