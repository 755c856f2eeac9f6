"""Shared fixtures and independent oracles for the test suite."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from itertools import combinations

from ekrforge.families import UniformFamily


def k34_window_family(n: int = 9) -> UniformFamily:
    """A saturated intersecting 4-graph on [9] whose 3-cover family is K3(4).

    Members: every 4-set meeting [4] in at least 3 points, plus the pair
    types {P ∪ t} for each 2-subset P of [4] and t in the triangle
    {{5,6},{5,7},{6,7}}.  The triangle tails pairwise intersect, which
    keeps opposite pair types compatible, and their empty intersection
    kills every would-be 3-cover besides the four triples of [4].
    """
    assert n == 9
    members = []
    for quad in combinations(range(1, 5), 3):
        for z in range(5, 10):
            members.append(tuple(sorted(quad + (z,))))
    members.append((1, 2, 3, 4))
    triangle = [(5, 6), (5, 7), (6, 7)]
    for pair in combinations(range(1, 5), 2):
        for t in triangle:
            members.append(tuple(sorted(pair + t)))
    return UniformFamily.from_sets(n, 4, members)


def prop34_equality_family() -> UniformFamily:
    """Intersecting τ=3 family on ([9],4) hitting the 3(n-6) bound with equality.

    For the disjoint window pair P={3,4}, P'={1,2}: f_P = 0,
    f_P' = 5 = 2n-13, f_{[5]\\P} = 4 = n-5, f_{[5]\\P'} = 0.
    """
    members = [(1, 2, 6, 7), (1, 2, 6, 8), (1, 2, 6, 9), (1, 2, 7, 8), (1, 2, 7, 9),
               (1, 2, 5, 6), (1, 2, 5, 7), (1, 2, 5, 8), (1, 2, 5, 9),
               (1, 4, 5, 8), (3, 5, 6, 7), (2, 4, 6, 8), (2, 3, 4, 8), (1, 3, 4, 6)]
    return UniformFamily.from_sets(9, 4, members)


def maximal_cliques(compat: list[int], n_vertices: int) -> list[int]:
    """Bron-Kerbosch with pivoting over vertex bitsets.

    Independent of the branch-and-bound search: used to cross-check
    optimum values by enumerating every maximal intersecting family.
    """
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pux = p | x
        # pivot with the most neighbours inside p
        best_u, best_cnt = -1, -1
        scan = pux
        while scan:
            ub = scan & -scan
            u = ub.bit_length() - 1
            scan ^= ub
            cnt = (p & compat[u]).bit_count()
            if cnt > best_cnt:
                best_u, best_cnt = u, cnt
        ext = p & ~compat[best_u]
        while ext:
            vb = ext & -ext
            v = vb.bit_length() - 1
            ext ^= vb
            expand(r | vb, p & compat[v], x & compat[v])
            p &= ~vb
            x |= vb
    expand(0, (1 << n_vertices) - 1, 0)
    return out


def intersect_compat(masks: list[int]) -> list[int]:
    nm = len(masks)
    compat = [0] * nm
    for i in range(nm):
        for j in range(i + 1, nm):
            if masks[i] & masks[j]:
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    return compat


def brute_max_by_cliques(n: int, k: int, r_min: int) -> int:
    """Independent oracle for m(n,k,r): enumerate every maximal intersecting
    family via Bron-Kerbosch, filter by covering number, take the max size."""
    from ekrforge.covers import tau
    from ekrforge.families import ksets_colex

    masks = list(ksets_colex(n, k))
    compat = intersect_compat(masks)
    best = 0
    for clique in maximal_cliques(compat, len(masks)):
        fam_masks = []
        scan = clique
        while scan:
            vb = scan & -scan
            fam_masks.append(masks[vb.bit_length() - 1])
            scan ^= vb
        if len(fam_masks) <= best:
            continue
        fam = UniformFamily.from_masks(n, k, fam_masks)
        if r_min <= 1 or tau(fam) >= r_min:
            best = max(best, len(fam))
    return best
