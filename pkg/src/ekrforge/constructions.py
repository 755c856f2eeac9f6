"""Named families and the lexicographic machinery.

Houses the two 3-edge 3-graphs S and R, the complete 3-graph on four
vertices, the conjectured-extremal covering-number-3 family G(n, k) with
its closed-form size, the cover-completion F_H, full stars, the
Hilton-Milner family, and lexicographic initial segments L(n, k, m).
"""

from __future__ import annotations

from itertools import combinations, islice

from .binomial import binom
from .covers import is_intersecting
from .families import KSet, UniformFamily, ksets_colex, mask_of


def build_S(n: int = 6) -> UniformFamily:
    """S = {{1,2,3},{1,4,5},{2,4,6}} inside an ambient ground set of size n ≥ 6."""
    if n < 6:
        raise ValueError("S needs an ambient ground set of size at least 6")
    return UniformFamily.from_sets(n, 3, [(1, 2, 3), (1, 4, 5), (2, 4, 6)])


def build_R(n: int = 5) -> UniformFamily:
    """R = {{1,2,3},{1,4,5},{2,3,5}} inside an ambient ground set of size n ≥ 5."""
    if n < 5:
        raise ValueError("R needs an ambient ground set of size at least 5")
    return UniformFamily.from_sets(n, 3, [(1, 2, 3), (1, 4, 5), (2, 3, 5)])


def build_K34(n: int = 4) -> UniformFamily:
    """The complete 3-graph on {1,2,3,4} inside an ambient ground set of size n ≥ 4."""
    if n < 4:
        raise ValueError("K3(4) needs an ambient ground set of size at least 4")
    return UniformFamily.from_sets(n, 3, combinations(range(1, 5), 3))


def build_G(n: int, k: int) -> UniformFamily:
    """G(n,k) = A ∪ B with B the three blocking sets and A the 1-star filtered by B.

    B = {[2,k+1], {2} ∪ [k+2,2k], {3} ∪ [k+2,2k]}; A is every k-set
    containing 1 that meets all three.  A is materialised by filtering so
    the count stays an independent cross-check of the closed form.
    """
    if not (n >= 2 * k >= 6):
        raise ValueError(f"build_G requires n >= 2k >= 6, got n={n}, k={k}")
    b1 = mask_of(range(2, k + 2), n)
    b2 = mask_of([2] + list(range(k + 2, 2 * k + 1)), n)
    b3 = mask_of([3] + list(range(k + 2, 2 * k + 1)), n)
    members = [b1, b2, b3]
    # A: bit 0 is element 1; enumerate (k-1)-subsets of [2..n] shifted up one bit
    for tail in ksets_colex(n - 1, k - 1):
        m = (tail << 1) | 1
        if m & b1 and m & b2 and m & b3:
            members.append(m)
    return UniformFamily.from_masks(n, k, members)


def g_size_formula(n: int, k: int) -> int:
    """Closed-form |G(n,k)| via the vanishing-binomial convention."""
    if not (n >= 2 * k >= 6):
        raise ValueError(f"g_size_formula requires n >= 2k >= 6, got n={n}, k={k}")
    return (binom(n - 1, k - 1) - binom(n - k, k - 1) - binom(n - k - 1, k - 1)
            + binom(n - 2 * k, k - 1) + binom(n - k - 2, k - 3) + 3)


def build_F_H(h: UniformFamily, n: int, k: int) -> UniformFamily:
    """H ∪ {F : 1 ∈ F, F contains a cover of H}.

    A k-set containing 1 includes a (≤k)-cover of H iff it meets every
    member of H (the set itself is then such a cover), so the filter is a
    plain meets-all test.
    """
    if h.k != k:
        raise ValueError(f"H has uniformity {h.k}, expected {k}")
    if h.n > n:
        raise ValueError("H lives on a larger ground set than requested")
    if any(m & 1 for m in h.masks):
        raise ValueError("H must avoid element 1")
    if not is_intersecting(h):
        raise ValueError("build_F_H requires an intersecting H")
    members = list(h.masks)
    hmasks = h.masks
    for tail in ksets_colex(n - 1, k - 1):
        m = (tail << 1) | 1
        for b in hmasks:
            if not m & b:
                break
        else:
            members.append(m)
    return UniformFamily.from_masks(n, k, members)


def full_star(n: int, k: int, apex: int = 1) -> UniformFamily:
    """All k-sets containing the apex element."""
    if not 1 <= apex <= n:
        raise ValueError(f"apex {apex} outside [1..{n}]")
    bit = 1 << (apex - 1)
    members = [m | bit for m in ksets_colex(n, k - 1) if not m & bit]
    return UniformFamily.from_masks(n, k, members)


def build_HM(n: int, k: int) -> UniformFamily:
    """The Hilton-Milner family: {F : 1 ∈ F, F ∩ [2,k+1] ≠ ∅} ∪ {[2,k+1]}."""
    if not (n > 2 * k >= 4):
        raise ValueError(f"build_HM requires n > 2k >= 4, got n={n}, k={k}")
    base = mask_of(range(2, k + 2), n)
    members = [base]
    for tail in ksets_colex(n - 1, k - 1):
        m = (tail << 1) | 1
        if m & base:
            members.append(m)
    return UniformFamily.from_masks(n, k, members)


def lex_precedes(f: KSet, g: KSet) -> bool:
    """F precedes G iff min(F \\ G) < min(G \\ F). Strict total order on distinct sets."""
    only_f = f.mask & ~g.mask
    only_g = g.mask & ~f.mask
    if not only_f and not only_g:
        return False
    if not only_f or not only_g:
        # one strictly contains the other; not comparable as k-sets of equal size,
        # but the min-rule still answers: the missing side has min = +infinity
        return bool(only_f)
    return (only_f & -only_f) < (only_g & -only_g)


def lex_family(n: int, k: int, m: int) -> UniformFamily:
    """L(n,k,m): the first m k-sets of [n] in lexicographic order."""
    if not 0 <= m <= binom(n, k):
        raise ValueError(f"m={m} outside [0, C({n},{k})={binom(n, k)}]")
    first = islice(combinations(range(1, n + 1), k), m)
    return UniformFamily.from_sets(n, k, first)
