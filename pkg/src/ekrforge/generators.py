"""Seeded random generation of intersecting and saturated families.

The property suites need reproducible streams of saturated intersecting
families, many of them with covering number at least 3 and with every
member meeting a fixed window in at least two points.  Random maximal
families rarely have those properties by accident, so the generators
grow them from structured seeds:

  * ``free``    - a few random pairwise-intersecting k-sets with empty
                  common intersection,
  * ``r_lift``  - every k-set whose window trace is an edge of R placed
                  on [5] (any addition then meets [5] twice),
  * ``s_lift``  - the same for S placed on [6],
  * partial lifts - a random nonempty slice of a lift, for variety.

Seeds are completed to maximal families by a saturation scan in a
seeded-random candidate order, and rejection sampling enforces τ ≥ 3.
Everything is driven by an explicit ``random.Random`` so runs are
deterministic given the seed.
"""

from __future__ import annotations

import random
from typing import Iterable, Optional

from .constructions import build_R, build_S
from .covers import is_intersecting, tau
from .families import UniformFamily, ksets_colex, mask_of


def saturate_random(family: UniformFamily, rng: random.Random) -> UniformFamily:
    """Maximal intersecting completion scanning candidates in random order."""
    if not is_intersecting(family):
        raise ValueError("saturate_random requires an intersecting family")
    order = list(ksets_colex(family.n, family.k))
    rng.shuffle(order)
    present = set(family.masks)
    current = list(family.masks)
    for cand in order:
        if cand in present:
            continue
        for m in current:
            if not cand & m:
                break
        else:
            current.append(cand)
            present.add(cand)
    return UniformFamily.from_masks(family.n, family.k, current)


def random_kset_mask(n: int, k: int, rng: random.Random) -> int:
    return mask_of(rng.sample(range(1, n + 1), k), n)


def random_intersecting_seed(n: int, k: int, rng: random.Random,
                             size: int = 4, tries: int = 200) -> UniformFamily:
    """A few pairwise-intersecting random k-sets with no common element."""
    if size < 3:
        raise ValueError("a common-free intersecting seed needs at least 3 members")
    for _ in range(tries):
        masks = [random_kset_mask(n, k, rng)]
        for _ in range(size - 1):
            for _ in range(tries):
                cand = random_kset_mask(n, k, rng)
                if all(cand & m for m in masks):
                    masks.append(cand)
                    break
        common = masks[0]
        for m in masks[1:]:
            common &= m
        if len(masks) == size and not common:
            return UniformFamily.from_masks(n, k, masks)
    raise RuntimeError(f"could not build a common-free intersecting seed at ({n},{k})")


def _lift_masks(pattern: UniformFamily, n: int, k: int) -> list[int]:
    """All k-sets over [n] whose trace in the pattern's ground set is a pattern edge."""
    window = mask_of(range(1, pattern.n + 1), n)
    edges = set(pattern.masks)
    out = []
    for m in ksets_colex(n, k):
        if m & window in edges:
            out.append(m)
    return out


def lift_seed(n: int, k: int, rng: random.Random, pattern: str = "R",
              partial: bool = False) -> UniformFamily:
    """Seed whose window traces are edges of R (on [5]) or S (on [6]).

    The full lift forces every later addition to meet the window in at
    least two points; a partial lift keeps a random nonempty slice of
    each edge's tails instead, for sample variety.
    """
    base = build_R(5) if pattern == "R" else build_S(6)
    lift = _lift_masks(base, n, k)
    if not partial:
        return UniformFamily.from_masks(n, k, lift)
    window = mask_of(range(1, base.n + 1), n)
    chosen: list[int] = []
    for edge in base.masks:
        tails = [m for m in lift if m & window == edge]
        take = rng.randint(1, len(tails))
        chosen.extend(rng.sample(tails, take))
    return UniformFamily.from_masks(n, k, chosen)


def blocked_lift_seed(n: int, k: int) -> UniformFamily:
    """Full R-lift on [5] plus the blockers {[4] ∪ T : T ⊆ [n]\\[5], |T| = k-4}.

    For n ≥ 2k+1 and k ≥ 4 the blockers exclude every k-set meeting [5]
    in fewer than two points from any intersecting completion: a set with
    a single window point misses some lifted edge outright, and a
    window-avoiding set is disjoint from one of the blockers.  Saturating
    this seed therefore yields families satisfying the |F ∩ [5]| ≥ 2
    window hypothesis outright.
    """
    if k < 4 or n < 2 * k + 1:
        raise ValueError("blocked lift needs k >= 4 and n >= 2k+1")
    from itertools import combinations
    masks = _lift_masks(build_R(5), n, k)
    base = mask_of([1, 2, 3, 4], n)
    for tail in combinations(range(6, n + 1), k - 4):
        masks.append(base | mask_of(tail, n))
    return UniformFamily.from_masks(n, k, masks)


def random_saturated_family(n: int, k: int, rng: random.Random,
                            mode: str = "free") -> UniformFamily:
    if mode == "free":
        seed = random_intersecting_seed(n, k, rng)
    elif mode in ("r_lift", "s_lift"):
        seed = lift_seed(n, k, rng, "R" if mode == "r_lift" else "S", partial=False)
    elif mode in ("r_lift_partial", "s_lift_partial"):
        seed = lift_seed(n, k, rng, "R" if mode == "r_lift_partial" else "S",
                         partial=True)
    elif mode == "r_lift_blocked":
        seed = blocked_lift_seed(n, k)
    else:
        raise ValueError(f"unknown generation mode {mode!r}")
    return saturate_random(seed, rng)


def random_saturated_tau3(n: int, k: int, rng: random.Random,
                          mode: str = "r_lift", max_tries: int = 50
                          ) -> Optional[UniformFamily]:
    """Saturated intersecting family with τ ≥ 3, by rejection; None if unlucky."""
    for _ in range(max_tries):
        fam = random_saturated_family(n, k, rng, mode)
        if tau(fam) >= 3:
            return fam
    return None


def sample_saturated_tau3(n: int, k: int, count: int, seed: int,
                          modes: Iterable[str] = ("r_lift_blocked", "r_lift",
                                                  "r_lift_partial", "free"),
                          ) -> list[UniformFamily]:
    """Deterministic stream of `count` saturated τ≥3 families, cycling modes."""
    rng = random.Random(seed)
    mode_list = [m for m in modes
                 if m != "r_lift_blocked" or (k >= 4 and n >= 2 * k + 1)]
    if not mode_list:
        mode_list = ["r_lift"]
    out: list[UniformFamily] = []
    attempts = 0
    while len(out) < count:
        mode = mode_list[attempts % len(mode_list)]
        attempts += 1
        if attempts > 40 * count:
            raise RuntimeError(
                f"τ>=3 sampling stalled at ({n},{k}): {len(out)}/{count}")
        fam = random_saturated_tau3(n, k, rng, mode, max_tries=4)
        if fam is not None:
            out.append(fam)
    return out
