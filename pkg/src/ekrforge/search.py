"""Exact computation of m(n,k,r) at desk scale.

m(n,k,r) is the maximum size of an intersecting k-uniform family on [n]
with covering number at least r.  The solver is a branch-and-bound over
k-sets in colex order:

  * the first selected k-set is forced to {1..k} - every nonempty family
    is isomorphic to one containing the colex-least k-set, so this
    normalisation is lossless;
  * for r >= 2 the covering constraints propagate as "this element/pair
    must still be avoidable": a branch dies when some small set can no
    longer be avoided by any chosen or remaining candidate, and open
    constraints are branched on directly (first-avoider split);
  * the upper bound is a greedy clique cover of the remaining candidates
    by groups of pairwise-disjoint sets;
  * a candidate compatible with every other remaining candidate and all
    chosen members is forced in: adding it never hurts intersecting-ness
    and never lowers τ, so some optimum (indeed every optimum) contains it.

Every returned witness is re-verified post hoc through the covers module
before the result is released.  Searches are single-threaded and fully
deterministic; an exhausted budget downgrades the status to a lower
bound but never invalidates the value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations

from .binomial import binom
from .constructions import build_G, build_HM, full_star
from .covers import is_intersecting, tau
from .families import UniformFamily, ksets_colex, mask_of

PROVED = "proved-optimal"
TIMEBOXED = "timeboxed-lower-bound"


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: UniformFamily
    status: str
    nodes: int
    elapsed: float
    budget: float


@dataclass(frozen=True)
class CanonicalForm:
    """Relabeling-invariant encoding: the minimum colex-sorted mask tuple
    over all ground-set permutations."""

    n: int
    k: int
    masks: tuple[int, ...]


class _Budget(Exception):
    pass


def canonical_form(family: UniformFamily) -> CanonicalForm:
    """Minimum relabeled mask tuple over all permutations of [n].

    Pruned sweep: the minimum image tuple necessarily starts with the mask
    of {1..k}, so only permutations sending some member onto {1..k} can
    win.  The outer loop ranges over (member, bijection-onto-[1..k])
    pairs, the inner one over the placements of the remaining elements.
    """
    n, k = family.n, family.k
    masks = family.masks
    if not masks:
        return CanonicalForm(n, k, ())
    elems = list(range(n))
    best: tuple[int, ...] | None = None
    for member in masks:
        member_elems = [b - 1 for b in _bit_positions(member)]
        rest = [x for x in elems if x not in member_elems]
        for head in permutations(range(k)):
            table = [0] * n
            for idx, x in enumerate(member_elems):
                table[x] = head[idx]
            for tail in permutations(range(k, n)):
                for idx, x in enumerate(rest):
                    table[x] = tail[idx]
                relabeled = tuple(sorted(_apply_perm(m, table) for m in masks))
                if best is None or relabeled < best:
                    best = relabeled
    return CanonicalForm(n, k, best)


def _bit_positions(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length())
        mask ^= b
    return out


def _iso_signature(family: UniformFamily) -> tuple:
    """Cheap relabeling invariant: degree sequence plus per-member
    intersection profiles, both sorted."""
    masks = family.masks
    degs = sorted(sum(1 for m in masks if m >> x & 1) for x in range(family.n))
    profiles = sorted(tuple(sorted((m & other).bit_count()
                                   for other in masks if other != m))
                      for m in masks)
    return tuple(degs), tuple(profiles)


def are_isomorphic(fam_a: UniformFamily, fam_b: UniformFamily) -> bool:
    """Backtracking ground-set bijection test with degree refinement."""
    if (fam_a.n, fam_a.k, len(fam_a)) != (fam_b.n, fam_b.k, len(fam_b)):
        return False
    if _iso_signature(fam_a) != _iso_signature(fam_b):
        return False
    n = fam_a.n
    set_b = set(fam_b.masks)

    def degree_key(masks, x):
        return sum(1 for m in masks if m >> x & 1)

    deg_a = [degree_key(fam_a.masks, x) for x in range(n)]
    deg_b = [degree_key(fam_b.masks, x) for x in range(n)]
    order = sorted(range(n), key=lambda x: (-deg_a[x], x))
    candidates = [[y for y in range(n) if deg_b[y] == deg_a[x]] for x in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def feasible(depth: int) -> bool:
        assigned = {order[i] for i in range(depth + 1)}
        for m in fam_a.masks:
            bits = [b - 1 for b in _bit_positions(m)]
            if all(x in assigned for x in bits):
                img = 0
                for x in bits:
                    img |= 1 << mapping[x]
                if img not in set_b:
                    return False
        return True

    def assign(depth: int) -> bool:
        if depth == n:
            return True
        x = order[depth]
        for y in candidates[x]:
            if used[y]:
                continue
            mapping[x] = y
            used[y] = True
            if feasible(depth) and assign(depth + 1):
                return True
            used[y] = False
            mapping[x] = -1
        return False

    return assign(0)


def _apply_perm(mask: int, table) -> int:
    out = 0
    while mask:
        b = mask & -mask
        out |= 1 << table[b.bit_length() - 1]
        mask ^= b
    return out


def _constraint_masks(n: int, r_min: int) -> list[int]:
    """Sets that must be avoided by some member: pairs for τ>=3 (pairs subsume
    singletons), singletons for τ>=2."""
    if r_min >= 3:
        return [mask_of(p, n) for p in combinations(range(1, n + 1), 2)]
    if r_min == 2:
        return [1 << i for i in range(n)]
    return []


def _greedy_cover_bound(cand: int, disj: list[int]) -> int:
    """Greedy partition of the candidate bitset into pairwise-disjoint groups;
    an intersecting family picks at most one per group."""
    groups = 0
    rest = cand
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        groups += 1
        cur = rest & disj[v]
        while cur:
            u = (cur & -cur).bit_length() - 1
            rest &= ~(1 << u)
            cur &= disj[u] & ~((1 << (u + 1)) - 1)
    return groups


def _default_incumbent(n: int, k: int, r_min: int) -> UniformFamily | None:
    """A verified feasible family to warm-start the incumbent."""
    try:
        if r_min <= 1:
            fam = full_star(n, k)
        elif r_min == 2:
            fam = build_HM(n, k) if n > 2 * k else full_star(n, k)
        else:
            fam = build_G(n, k)
    except ValueError:
        return None
    if not is_intersecting(fam):
        return None
    if r_min >= 2 and tau(fam) < r_min:
        return None
    return fam


def _verify(witness: UniformFamily, r_min: int) -> None:
    if not is_intersecting(witness):
        raise AssertionError("search produced a non-intersecting witness")
    if r_min >= 2 and tau(witness) < r_min:
        raise AssertionError(f"search witness has covering number < {r_min}")


def max_intersecting(n: int, k: int, r_min: int = 1, budget: float = 600.0,
                     seed_incumbent: bool = True,
                     collect_optima: bool = False,
                     forced_first: bool = True,
                     universe: list[int] | None = None,
                     extra_constraints: list[int] | None = None,
                     forced_members: list[int] | None = None,
                     incumbent_family: UniformFamily | None = None,
                     collect_floor: int = 0,
                     ) -> SearchResult | tuple[SearchResult, list[tuple[int, ...]]]:
    """Exact m(n,k,r) with optimality proof, or a timeboxed lower bound.

    ``collect_optima`` switches to exhaustive collection of every
    optimum-size family (the incumbent prune becomes non-strict); with a
    ``collect_floor`` only families of at least that size are gathered,
    and an empty collection reports that the floor was never reached.
    The remaining keyword arguments support the structural-seeding mode
    and are not part of the basic contract; any supplied
    ``forced_members`` must themselves be justified by a symmetry
    argument of the caller.
    """
    if r_min not in (1, 2, 3):
        raise ValueError("r_min must be 1, 2, or 3")
    if n < 2 * k:
        raise ValueError("max_intersecting requires n >= 2k")
    t_start = time.perf_counter()
    deadline = t_start + budget

    allsets = universe if universe is not None else list(ksets_colex(n, k))
    if forced_members is not None:
        chosen0 = list(forced_members)
    elif forced_first:
        chosen0 = [mask_of(range(1, k + 1), n)]
    else:
        chosen0 = []
    cand_masks = [m for m in allsets
                  if m not in set(chosen0) and all(m & f for f in chosen0)]
    nc = len(cand_masks)
    full = (1 << nc) - 1
    compat = [0] * nc
    disj = [0] * nc
    for i in range(nc):
        mi = cand_masks[i]
        for j in range(i + 1, nc):
            if mi & cand_masks[j]:
                compat[i] |= 1 << j
                compat[j] |= 1 << i
            else:
                disj[i] |= 1 << j
                disj[j] |= 1 << i

    constraints = _constraint_masks(n, r_min)
    if extra_constraints:
        constraints = constraints + list(extra_constraints)
    avoiders = []
    for cm in constraints:
        bits = 0
        for i, m in enumerate(cand_masks):
            if not m & cm:
                bits |= 1 << i
        avoiders.append(bits)
    # constraints already satisfied by the forced member
    sat0 = 0
    for ci, cm in enumerate(constraints):
        if any(not pm & cm for pm in chosen0):
            sat0 |= 1 << ci
    all_sat = (1 << len(constraints)) - 1

    best = 0
    best_masks: tuple[int, ...] = ()
    optima: set[tuple[int, ...]] = set()
    if collect_optima:
        best = collect_floor
    else:
        seeded = incumbent_family if incumbent_family is not None else (
            _default_incumbent(n, k, r_min) if seed_incumbent else None)
        if seeded is not None:
            if not is_intersecting(seeded) or (r_min >= 2 and tau(seeded) < r_min):
                raise ValueError("incumbent family is not feasible")
            best = len(seeded)
            best_masks = seeded.masks
    nodes = 0

    def note_solution(chosen: list[int]) -> None:
        nonlocal best, best_masks
        size = len(chosen)
        if collect_optima:
            if size > best:
                best = size
                optima.clear()
                best_masks = ()
            if size == best:
                key = tuple(sorted(chosen))
                optima.add(key)
                if not best_masks or key < best_masks:
                    best_masks = key
            return
        if size > best or (size == best and
                           (not best_masks or tuple(sorted(chosen)) < best_masks)):
            if size > best:
                best = size
            best_masks = tuple(sorted(chosen))

    def drop_satisfied(mask_new: int, unsat: int) -> int:
        uu = unsat
        out = unsat
        while uu:
            ub2 = uu & -uu
            uu ^= ub2
            if not mask_new & constraints[ub2.bit_length() - 1]:
                out &= ~ub2
        return out

    def recurse(chosen: list[int], cand: int, unsat: int, excluded: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes % 4096 == 0 and time.perf_counter() > deadline:
            raise _Budget
        # constraint feasibility
        u = unsat
        while u:
            cb = u & -u
            u ^= cb
            if not avoiders[cb.bit_length() - 1] & cand:
                return
        # maximality domination: an excluded candidate compatible with every
        # chosen member and every remaining candidate extends any completion
        # in this subtree, so none of them is optimal
        x = excluded
        while x:
            xb = x & -x
            x ^= xb
            if cand & ~compat[xb.bit_length() - 1] == 0:
                return
        if unsat == 0:
            note_solution(chosen)
        # bound
        ub = len(chosen) + _greedy_cover_bound(cand, disj)
        if collect_optima:
            if ub < best:
                return
        elif ub <= best:
            return
        if not cand:
            return
        # forced inclusions: candidates compatible with everything left
        c = cand
        while c:
            vb = c & -c
            v = vb.bit_length() - 1
            c ^= vb
            if cand & ~vb & ~compat[v] == 0:
                chosen.append(cand_masks[v])
                recurse(chosen, cand & compat[v],
                        drop_satisfied(cand_masks[v], unsat), excluded & compat[v])
                chosen.pop()
                return
        if unsat:
            # branch on the tightest open constraint: first-avoider split
            pick_av, pick_cnt = 0, 1 << 62
            u = unsat
            while u:
                cb = u & -u
                u ^= cb
                av = avoiders[cb.bit_length() - 1] & cand
                cnt = av.bit_count()
                if cnt < pick_cnt:
                    pick_av, pick_cnt = av, cnt
            prefix = 0
            av = pick_av
            while av:
                vb = av & -av
                v = vb.bit_length() - 1
                av ^= vb
                chosen.append(cand_masks[v])
                recurse(chosen, cand & compat[v] & ~prefix,
                        drop_satisfied(cand_masks[v], unsat),
                        (excluded | prefix) & compat[v])
                chosen.pop()
                prefix |= vb
            return
        # plain clique phase: include/exclude the lowest candidate
        vb = cand & -cand
        v = vb.bit_length() - 1
        chosen.append(cand_masks[v])
        recurse(chosen, cand & compat[v], 0, excluded & compat[v])
        chosen.pop()
        recurse(chosen, cand & ~vb, 0, excluded | vb)

    status = PROVED
    try:
        recurse(list(chosen0), full, all_sat & ~sat0, 0)
    except _Budget:
        status = TIMEBOXED

    elapsed = time.perf_counter() - t_start
    witness = UniformFamily.from_masks(n, k, best_masks)
    if collect_optima and not optima:
        # the collection floor was never reached; value and witness carry no claim
        result = SearchResult(best, witness, status, nodes, elapsed, budget)
        return result, []
    if len(witness) != best:
        raise AssertionError("witness size disagrees with the proven value")
    _verify(witness, r_min)
    result = SearchResult(best, witness, status, nodes, elapsed, budget)
    if collect_optima:
        return result, sorted(optima)
    return result


def max_intersecting_degcap(n: int, k: int, ell: int, budget: float = 600.0
                            ) -> SearchResult:
    """Maximum intersecting family with every degree capped per the
    degree-bounded theorem: Δ(F) ≤ C(n-1,k-1) - C(n-ℓ-1,k-1); the result
    must stay within C(n-1,k-1) - C(n-ℓ-1,k-1) + C(n-ℓ-1,k-ℓ)."""
    if not 2 <= ell <= k:
        raise ValueError("degree-cap parameter must satisfy 2 <= ell <= k")
    if n <= 2 * k:
        raise ValueError("degree-capped search requires n > 2k")
    cap = binom(n - 1, k - 1) - binom(n - ell - 1, k - 1)
    bound = cap + binom(n - ell - 1, k - ell)
    t_start = time.perf_counter()
    deadline = t_start + budget

    cand_masks = list(ksets_colex(n, k))
    first = mask_of(range(1, k + 1), n)
    cand_masks = [m for m in cand_masks if m != first and m & first]
    nc = len(cand_masks)
    compat = [0] * nc
    disj = [0] * nc
    for i in range(nc):
        mi = cand_masks[i]
        for j in range(i + 1, nc):
            if mi & cand_masks[j]:
                compat[i] |= 1 << j
                compat[j] |= 1 << i
            else:
                disj[i] |= 1 << j
                disj[j] |= 1 << i

    best = 0
    best_masks: tuple[int, ...] = ()
    # warm start: the degree-capped extremal candidate - the 1-star through
    # [2,ell+1] together with every k-set containing [2,ell+1]
    seed = _degcap_seed(n, k, ell, cap)
    if seed is not None:
        best, best_masks = len(seed), seed.masks
    nodes = 0

    def recurse(chosen: list[int], cand: int, degs: list[int]) -> None:
        nonlocal nodes, best, best_masks
        nodes += 1
        if nodes % 4096 == 0 and time.perf_counter() > deadline:
            raise _Budget
        size = len(chosen)
        if size > best or (size == best and tuple(sorted(chosen)) < best_masks):
            if size > best:
                best = size
            best_masks = tuple(sorted(chosen))
        if size + _greedy_cover_bound(cand, disj) <= best:
            return
        if not cand:
            return
        vb = cand & -cand
        v = vb.bit_length() - 1
        m = cand_masks[v]
        fits = True
        mm = m
        while mm:
            b = mm & -mm
            if degs[b.bit_length() - 1] + 1 > cap:
                fits = False
                break
            mm ^= b
        if fits:
            mm = m
            while mm:
                b = mm & -mm
                degs[b.bit_length() - 1] += 1
                mm ^= b
            chosen.append(m)
            recurse(chosen, cand & compat[v], degs)
            chosen.pop()
            mm = m
            while mm:
                b = mm & -mm
                degs[b.bit_length() - 1] -= 1
                mm ^= b
        recurse(chosen, cand & ~vb, degs)

    degs0 = [0] * n
    for x in range(k):
        degs0[x] = 1
    status = PROVED
    try:
        recurse([first], (1 << nc) - 1, degs0)
    except _Budget:
        status = TIMEBOXED
    elapsed = time.perf_counter() - t_start
    witness = UniformFamily.from_masks(n, k, best_masks)
    _verify(witness, 1)
    if max((sum(1 for m in witness.masks if m >> i & 1) for i in range(n)), default=0) > cap:
        raise AssertionError("degree cap violated by the witness")
    if status == PROVED and best > bound:
        raise AssertionError(
            f"degree-capped optimum {best} exceeds the theorem bound {bound}")
    return SearchResult(best, witness, status, nodes, elapsed, budget)


def _degcap_seed(n: int, k: int, ell: int, cap: int) -> UniformFamily | None:
    base = mask_of(range(2, ell + 2), n)
    members = []
    for tail in ksets_colex(n - 1, k - 1):
        m = (tail << 1) | 1
        if m & base:
            members.append(m)
    for m in ksets_colex(n, k):
        if m & base == base and not m & 1:
            members.append(m)
    fam = UniformFamily.from_masks(n, k, members)
    if not is_intersecting(fam):
        return None
    if max(sum(1 for m in fam.masks if m >> i & 1) for i in range(n)) > cap:
        return None
    return fam


def max_intersecting_seeded(n: int, k: int, budget: float = 3600.0,
                            seed_incumbent: bool = True) -> SearchResult:
    """m(n,k,3) via the structural case split, mirroring the proof architecture.

    Case A: families with covering number exactly 3 are isomorphic to one
    in which {1,2,3} is a cover, so the universe shrinks to the k-sets
    meeting {1,2,3} (no first-member forcing; the relabeling freedom is
    spent).  Case B: covering number at least 4, enforced by avoiding
    every triple, over the full universe with the forced first member.
    Solutions of either case are feasible for τ ≥ 3, and every τ ≥ 3
    family lands in one of them up to isomorphism, so the combined
    maximum is exact.
    """
    t0 = time.perf_counter()
    cover3 = mask_of((1, 2, 3), n)
    universe_a = [m for m in ksets_colex(n, k) if m & cover3]
    res_a = max_intersecting(n, k, 3, budget=budget, seed_incumbent=seed_incumbent,
                             forced_first=False, universe=universe_a)
    triple_constraints = [mask_of(c, n) for c in combinations(range(1, n + 1), 3)]
    # Covering number >= 4 case.  With the first member normalised to [1..k],
    # some member avoids {1,2,3}; it meets [1..k] in a nonempty subset of
    # [4..k], say of size i, and the stabiliser of [1..k] maps it onto the
    # representative [k-i+1..k] ∪ [k+1..2k-i].  One forced-pair search per i
    # is therefore exhaustive over isomorphism classes.
    first = mask_of(range(1, k + 1), n)
    incumbent = build_G(n, k) if seed_incumbent else None
    results = [res_a]
    for i in range(1, k - 2):
        second = mask_of(list(range(k - i + 1, k + 1))
                         + list(range(k + 1, 2 * k - i + 1)), n)
        remaining = max(1.0, budget - (time.perf_counter() - t0))
        # triple avoidance subsumes pair and singleton avoidance, so r_min=1
        # keeps the constraint set lean; feasibility for τ >= 3 is re-checked
        # on the combined witness below
        results.append(max_intersecting(n, k, 1, budget=remaining,
                                        seed_incumbent=False,
                                        extra_constraints=triple_constraints,
                                        forced_members=[first, second],
                                        incumbent_family=incumbent))
    value, witness = results[0].value, results[0].witness
    for res in results[1:]:
        if res.value > value or (res.value == value
                                 and res.witness.masks < witness.masks):
            value, witness = res.value, res.witness
    status = PROVED if all(r.status == PROVED for r in results) else TIMEBOXED
    _verify(witness, 3)
    return SearchResult(value, witness, status, sum(r.nodes for r in results),
                        time.perf_counter() - t0, budget)


def _dedup_to_forms(n: int, k: int, raw: list[tuple[int, ...]]
                    ) -> list[CanonicalForm]:
    """Collapse labeled optima to isomorphism classes.

    Classes are split by the cheap invariant signature first; inside a
    bucket, membership is decided by the explicit bijection test, and the
    expensive canonical form is computed once per class.
    """
    buckets: dict[tuple, list[UniformFamily]] = {}
    for masks in raw:
        fam = UniformFamily.from_masks(n, k, masks)
        buckets.setdefault(_iso_signature(fam), []).append(fam)
    forms: list[CanonicalForm] = []
    for fams in buckets.values():
        reps: list[UniformFamily] = []
        for fam in fams:
            if not any(are_isomorphic(fam, rep) for rep in reps):
                reps.append(fam)
        forms.extend(canonical_form(rep) for rep in reps)
    return sorted(forms, key=lambda f: f.masks)


def enumerate_optima(n: int, k: int, r_min: int, budget: float = 600.0,
                     structural: bool = False
                     ) -> tuple[list[CanonicalForm], SearchResult]:
    """All optimum-size witnesses up to isomorphism.

    Every family is isomorphic to one containing {1..k}, so collecting
    the optima through the forced-first-member search and deduplicating
    by canonical form covers every isomorphism class.  With
    ``structural=True`` (r_min = 3 only) the collection instead runs over
    the structural case split of ``max_intersecting_seeded``, whose
    branches likewise reach every isomorphism class.
    """
    if not structural:
        result, raw = max_intersecting(n, k, r_min, budget=budget,
                                       seed_incumbent=False, collect_optima=True)
        return _dedup_to_forms(n, k, raw), result
    if r_min != 3:
        raise ValueError("structural enumeration is defined for r_min = 3")
    t0 = time.perf_counter()
    cover3 = mask_of((1, 2, 3), n)
    universe_a = [m for m in ksets_colex(n, k) if m & cover3]
    branches = [max_intersecting(n, k, 3, budget=budget, seed_incumbent=False,
                                 forced_first=False, universe=universe_a,
                                 collect_optima=True)]
    floor = branches[0][0].value
    triple_constraints = [mask_of(c, n) for c in combinations(range(1, n + 1), 3)]
    first = mask_of(range(1, k + 1), n)
    for i in range(1, k - 2):
        second = mask_of(list(range(k - i + 1, k + 1))
                         + list(range(k + 1, 2 * k - i + 1)), n)
        remaining = max(1.0, budget - (time.perf_counter() - t0))
        # the covering-number-4 branches only matter where they tie or beat
        # the 3-cover branch, so their collection is floored at its value
        branches.append(max_intersecting(n, k, 1, budget=remaining,
                                         seed_incumbent=False,
                                         extra_constraints=triple_constraints,
                                         forced_members=[first, second],
                                         collect_optima=True,
                                         collect_floor=floor))
    value = max(res.value for res, raw in branches if raw)
    status = PROVED if all(res.status == PROVED for res, _ in branches) \
        else TIMEBOXED
    raw_all = sorted({masks for res, raw in branches if res.value == value
                      for masks in raw})
    forms = _dedup_to_forms(n, k, raw_all)
    witness = UniformFamily.from_masks(n, k, raw_all[0])
    _verify(witness, 3)
    combined = SearchResult(value, witness, status,
                            sum(res.nodes for res, _ in branches),
                            time.perf_counter() - t0, budget)
    return forms, combined
