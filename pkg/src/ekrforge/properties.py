"""Randomized and exhaustive property suites, packaged as certificates.

These complement the closed-form sweeps in ``certify``: instead of
parameter grids they quantify over families - seeded random saturated
families, or exhaustive cross-intersecting configurations - and check
the structural statements on each.  Every suite takes an explicit seed
so its "zero violations" verdict is reproducible bit for bit.
"""

from __future__ import annotations

import random
import time
import warnings
from itertools import combinations

from .binomial import binom
from .certify import Certificate, make_certificate
from .classify import ClassificationTag, classify_T3
from .covers import all_covers, covers, tau
from .families import are_cross_intersecting, ksets_colex, mask_of
from .constructions import lex_family
from .generators import random_saturated_family, sample_saturated_tau3
from .oracles import trace_bound_check


def suite_prop14(samples: int = 200, seed: int = 0,
                 grid=((7, 3), (8, 3), (9, 4)), **_) -> Certificate:
    """T(H) is intersecting for saturated H: property run over random saturations."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    witnesses = []
    per_point = max(1, samples // len(grid))
    checked = 0
    for n, k in grid:
        for _ in range(per_point):
            fam = random_saturated_family(n, k, rng,
                                          rng.choice(["free", "r_lift_partial"]))
            cover_masks = all_covers(fam)
            checked += 1
            bad = next(((a, b) for a, b in combinations(cover_masks, 2) if not a & b),
                       None)
            if bad is not None:
                witnesses.append({"n": n, "k": k, "family_size": len(fam),
                                  "disjoint_covers": [list(bad)]})
    return make_certificate(
        "PROP-14", "for saturated intersecting H, the cover family T(H) is intersecting",
        {"samples": checked, "seed": seed, "grid": [list(g) for g in grid]},
        witnesses, t0)


def suite_prop22_classify(samples: int = 100, seed: int = 0,
                          grid=((7, 3), (8, 3), (9, 4)), **_) -> Certificate:
    """Saturated τ=3 families classify into star/K34/S/R when T^(3) is nonempty."""
    t0 = time.perf_counter()
    witnesses = []
    tags = {t.value: 0 for t in ClassificationTag}
    per_point = max(1, samples // len(grid))
    total = 0
    for n, k in grid:
        fams = sample_saturated_tau3(n, k, per_point, seed + n * 100 + k)
        for fam in fams:
            total += 1
            try:
                with warnings.catch_warnings():
                    # τ≥3 samples occasionally have τ=4; EMPTY is then correct
                    warnings.simplefilter("ignore")
                    result = classify_T3(fam)
            except ValueError as exc:
                witnesses.append({"n": n, "k": k, "error": str(exc)})
                continue
            tags[result.tag.value] += 1
            if result.tag == ClassificationTag.EMPTY and tau(fam) == 3:
                witnesses.append({"n": n, "k": k, "error": "empty T3 despite tau=3"})
    return make_certificate(
        "PROP-22", "classification of T^(3) over saturated τ=3 samples",
        {"samples": total, "seed": seed, "grid": [list(g) for g in grid]},
        witnesses, t0, details={"tags": tags})


def suite_trace_bounds_random(samples: int = 1000, seed: int = 0,
                              grid=((9, 4), (11, 5)), window=(1, 2, 3, 4, 5),
                              min_applicable: int = 100, **_) -> Certificate:
    """All applicable window trace bounds over saturated τ≥3 samples."""
    t0 = time.perf_counter()
    witnesses = []
    per_point = max(1, samples // len(grid))
    applicable = 0
    evaluated_total: dict[str, int] = {}
    total = 0
    for n, k in grid:
        fams = sample_saturated_tau3(n, k, per_point, seed + 17 * n + k)
        for fam in fams:
            total += 1
            cert = trace_bound_check(fam, window)
            if cert.params["window_hypothesis"]:
                applicable += 1
            for name, cnt in cert.details["evaluated"].items():
                evaluated_total[name] = evaluated_total.get(name, 0) + cnt
            if not cert.passed:
                witnesses.append({"n": n, "k": k, "family_size": len(fam),
                                  "violations": cert.witnesses[:3]})
    if applicable < min_applicable:
        witnesses.append({"error": "window hypothesis too rarely satisfied",
                          "applicable": applicable, "required": min_applicable})
    return make_certificate(
        "TRACE-BOUNDS-RANDOM",
        "window trace inequalities over seeded saturated τ≥3 families",
        {"samples": total, "seed": seed, "grid": [list(g) for g in grid],
         "window": list(window)},
        witnesses, t0,
        details={"window_applicable": applicable, "evaluated": evaluated_total})


def suite_sperner_random(samples: int = 60, seed: int = 0,
                         grid=((9, 4), (11, 5), (13, 6)), **_) -> Certificate:
    """The α-inequality on random intersecting families (no τ hypothesis)."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    witnesses = []
    per_point = max(1, samples // len(grid))
    checked_pairs = 0
    for n, k in grid:
        for _ in range(per_point):
            fam = random_saturated_family(n, k, rng, "free")
            u_elems = tuple(rng.sample(range(1, n + 1), rng.choice((4, 5, 6))))
            from .families import trace as trace_stats
            stats = trace_stats(fam, u_elems)
            u_size = len(u_elems)
            subsets = []
            for size in range(1, u_size + 1):
                subsets.extend(mask_of(c, n) for c in combinations(sorted(u_elems), size))
            for s_a, s_b in combinations(subsets, 2):
                if s_a & s_b:
                    continue
                if n < 2 * k - s_a.bit_count() - s_b.bit_count() + u_size:
                    continue
                alpha_a, alpha_b = stats.alpha_of(s_a), stats.alpha_of(s_b)
                if alpha_a is None or alpha_b is None:
                    continue
                checked_pairs += 1
                if alpha_a + alpha_b > 1:
                    witnesses.append({"n": n, "k": k, "U": list(u_elems),
                                      "A": s_a, "B": s_b,
                                      "sum": str(alpha_a + alpha_b)})
    return make_certificate(
        "SPERNER-RANDOM", "α(A) + α(B) <= 1 on random intersecting families",
        {"samples": samples, "seed": seed, "pairs_checked": checked_pairs},
        witnesses, t0)


def _bmax_bitsets(n: int, a: int, b: int):
    items_a = list(ksets_colex(n, a))
    items_b = list(ksets_colex(n, b))
    compat = []
    for am in items_a:
        bits = 0
        for idx, bm in enumerate(items_b):
            if am & bm:
                bits |= 1 << idx
        compat.append(bits)
    return items_a, items_b, compat


def suite_hilton_lex(samples: int = 10000, seed: int = 0, **_) -> Certificate:
    """Lexicographic compression preserves cross-intersection.

    Exhaustive at (n,a,b) = (5,2,2) through the derive-B_max reduction
    (checking each A against its maximal partner covers every pair by
    monotonicity of initial segments), plus seeded random pairs at
    (6,2,3).
    """
    t0 = time.perf_counter()
    witnesses = []
    # exhaustive at (5,2,2)
    items_a, items_b, compat = _bmax_bitsets(5, 2, 2)
    full_b = (1 << len(items_b)) - 1
    for mask in range(1, 1 << len(items_a)):
        bmax = full_b
        mm = mask
        while mm:
            vb = mm & -mm
            bmax &= compat[vb.bit_length() - 1]
            mm ^= vb
        ca, cb = mask.bit_count(), bmax.bit_count()
        la, lb = lex_family(5, 2, ca), lex_family(5, 2, cb)
        if not are_cross_intersecting(la, lb):
            witnesses.append({"case": "exhaustive-522", "A_count": ca, "B_count": cb})
    # randomized at (6,2,3)
    rng = random.Random(seed)
    items_a, items_b, compat = _bmax_bitsets(6, 2, 3)
    full_b = (1 << len(items_b)) - 1
    for _ in range(samples):
        mask = rng.getrandbits(len(items_a))
        if not mask:
            continue
        bmax = full_b
        mm = mask
        while mm:
            vb = mm & -mm
            bmax &= compat[vb.bit_length() - 1]
            mm ^= vb
        # random admissible B inside B_max
        bsel = bmax & rng.getrandbits(len(items_b))
        ca, cb = mask.bit_count(), bsel.bit_count()
        la, lb = lex_family(6, 2, ca), lex_family(6, 3, cb)
        if not are_cross_intersecting(la, lb):
            witnesses.append({"case": "random-623", "A_count": ca, "B_count": cb})
    return make_certificate(
        "HILTON-LEX", "L(n,a,|A|), L(n,b,|B|) stay cross-intersecting",
        {"samples": samples, "seed": seed}, witnesses, t0)


def suite_ft92_small(**_) -> Certificate:
    """The three desk-scale cross-intersecting oracle instances."""
    from .oracles import ft92_oracle
    t0 = time.perf_counter()
    witnesses = []
    expected = {(6, 2, 3): binom(6, 3) - binom(4, 3) + 1,
                (5, 2, 3): binom(5, 3) - binom(3, 3) + 1,
                (4, 2, 2): binom(4, 2) - binom(2, 2) + 1}
    attained = {}
    for (n, a, b), bound in expected.items():
        value, cert = ft92_oracle(n, a, b)
        attained[f"{n},{a},{b}"] = value
        if value != bound or not cert.passed:
            witnesses.append({"n": n, "a": a, "b": b, "value": value,
                              "bound": bound, "verdict": cert.verdict})
    return make_certificate(
        "FT92-SMALL", "cross-intersecting sum oracle attains the bound",
        {"instances": sorted(attained)}, witnesses, t0, details=attained)


def suite_hilton_cor_small(**_) -> Certificate:
    from .oracles import hilton_corollary_oracle
    t0 = time.perf_counter()
    cert = hilton_corollary_oracle(6, 3, 2)
    witnesses = [] if cert.passed and cert.params["max"] == 15 else [cert.params]
    return make_certificate(
        "HILTON-COR-SMALL", "hypothesis-restricted sum bound attains 15 at (6,3,2)",
        {"m": 6, "a": 3, "b": 2}, witnesses, t0)


def suite_saturation_props(samples: int = 60, seed: int = 0, **_) -> Certificate:
    """Saturation and covering-number structure on random families.

    Checks idempotence of saturation, monotonicity of τ under supersets,
    cover padding, and τ ≤ k.
    """
    t0 = time.perf_counter()
    rng = random.Random(seed)
    witnesses = []
    from .covers import is_saturated, saturate
    from .generators import random_intersecting_seed
    for _ in range(samples):
        n, k = rng.choice(((6, 3), (7, 3), (8, 3), (9, 4)))
        seed_fam = random_intersecting_seed(n, k, rng, size=rng.randint(3, 5))
        sat = saturate(seed_fam)
        if not is_saturated(sat) or saturate(sat) != sat:
            witnesses.append({"n": n, "k": k, "problem": "saturation not maximal/idempotent"})
            continue
        if tau(seed_fam) > tau(sat):
            witnesses.append({"n": n, "k": k, "problem": "tau dropped under superset"})
        if tau(sat) > k:
            witnesses.append({"n": n, "k": k, "problem": "tau exceeds k"})
        for ell in range(1, k):
            if len(covers(sat, ell)) and not len(covers(sat, ell + 1)):
                witnesses.append({"n": n, "k": k, "problem": f"cover padding broke at {ell}"})
    return make_certificate(
        "SATURATION-PROPS", "saturation and covering-number structural laws",
        {"samples": samples, "seed": seed}, witnesses, t0)


PROPERTY_SUITES = {
    "PROP-14": suite_prop14,
    "PROP-22": suite_prop22_classify,
    "TRACE-BOUNDS-RANDOM": suite_trace_bounds_random,
    "SPERNER-RANDOM": suite_sperner_random,
    "HILTON-LEX": suite_hilton_lex,
    "FT92-SMALL": suite_ft92_small,
    "HILTON-COR-SMALL": suite_hilton_cor_small,
    "SATURATION-PROPS": suite_saturation_props,
}
