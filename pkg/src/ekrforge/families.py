"""Bitmask-backed k-uniform set families over the ground set [n] = {1..n}.

A k-set is an n-bit membership mask: element i occupies bit i-1, so the
usual integer order on masks coincides with the colexicographic order on
sets.  A family is an immutable, duplicate-free, colex-sorted tuple of
such masks together with its (n, k) signature.  All predicates used by
the covering-number machinery live here:

  * is_intersecting / are_cross_intersecting,
  * the trace F(S, U) = {F \\ U : F in F, F ∩ U = S} with its counts f_S
    and exact-rational densities α(S) = f_S / C(n-|U|, k-|S|),
  * layers F_i = {F : |F ∩ U| = i} and the maximum degree Δ(F).

The ground set is capped at 64 elements so every mask fits one machine
word; all desk-scale parameters of interest fit comfortably.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .binomial import binom

MAX_GROUND = 64


# ── mask helpers ─────────────────────────────────────────────────────────────

def mask_of(elements: Iterable[int], n: int) -> int:
    """Membership mask of a set of 1-based elements from [n]."""
    m = 0
    for x in elements:
        if not 1 <= x <= n:
            raise ValueError(f"element {x} outside ground set [1..{n}]")
        b = 1 << (x - 1)
        if m & b:
            raise ValueError(f"duplicate element {x}")
        m |= b
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based elements of a mask."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length())
        mask ^= b
    return tuple(out)


def ksets_colex(n: int, k: int) -> Iterator[int]:
    """All k-subset masks of [n] in increasing (= colex) order.

    Gosper's hack; the loop is the hot path of saturation and of the
    construction filters, so it stays free of per-step allocation.
    """
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    limit = 1 << n
    v = (1 << k) - 1
    while v < limit:
        yield v
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r


# ── domain types ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class KSet:
    """A k-element subset of [n], identified by its membership mask."""

    mask: int
    n: int
    k: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND:
            raise ValueError(f"ground size {self.n} outside [1, {MAX_GROUND}]")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError("mask has bits outside the ground set")
        if self.mask.bit_count() != self.k:
            raise ValueError(f"mask popcount {self.mask.bit_count()} != k={self.k}")

    @classmethod
    def from_elements(cls, elements: Iterable[int], n: int) -> "KSet":
        m = mask_of(elements, n)
        return cls(m, n, m.bit_count())

    def elements(self) -> tuple[int, ...]:
        return elements_of(self.mask)

    def intersects(self, other: "KSet") -> bool:
        return bool(self.mask & other.mask)

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.n and bool(self.mask >> (x - 1) & 1)


@dataclass(frozen=True)
class UniformFamily:
    """A duplicate-free k-uniform family over [n], colex-sorted.

    Iteration order, tie-breaking and file output all follow the mask
    order, so every run is deterministic.
    """

    n: int
    k: int
    masks: tuple[int, ...] = ()

    def __post_init__(self):
        if not 1 <= self.n <= MAX_GROUND:
            raise ValueError(f"ground size {self.n} outside [1, {MAX_GROUND}]")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"uniformity k={self.k} outside [0, n={self.n}]")
        prev = -1
        for m in self.masks:
            if m >> self.n:
                raise ValueError("member has elements outside the ground set")
            if m.bit_count() != self.k:
                raise ValueError(
                    f"member {elements_of(m)} has size {m.bit_count()}, expected {self.k}")
            if m <= prev:
                raise ValueError("members must be strictly colex-increasing (no duplicates)")
            prev = m

    @classmethod
    def from_masks(cls, n: int, k: int, masks: Iterable[int]) -> "UniformFamily":
        return cls(n, k, tuple(sorted(set(masks))))

    @classmethod
    def from_sets(cls, n: int, k: int, sets_: Iterable[Iterable[int]]) -> "UniformFamily":
        return cls.from_masks(n, k, (mask_of(s, n) for s in sets_))

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return (elements_of(m) for m in self.masks)

    def sets(self) -> list[tuple[int, ...]]:
        return [elements_of(m) for m in self.masks]

    def members(self) -> tuple[KSet, ...]:
        return tuple(KSet(m, self.n, self.k) for m in self.masks)

    def contains_mask(self, mask: int) -> bool:
        lo, hi = 0, len(self.masks)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.masks[mid] < mask:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(self.masks) and self.masks[lo] == mask


@dataclass(frozen=True)
class TraceStats:
    """Trace of a family through a window U: S ↦ (f_S, residual family).

    `table` is keyed by the masks S that actually occur as F ∩ U; `f`
    returns 0 for the rest.  Residual families keep the original labels
    (their members are supported on [n] \\ U).  α(S) is an exact
    Fraction, or None when its denominator C(n-|U|, k-|S|) vanishes and
    for S = ∅, which the source material leaves undefined.
    """

    n: int
    k: int
    window: int
    table: dict[int, tuple[int, UniformFamily]] = field(repr=False)
    alpha: dict[int, Optional[Fraction]] = field(repr=False)

    def _as_mask(self, s) -> int:
        return s if isinstance(s, int) else mask_of(s, self.n)

    def f(self, s) -> int:
        entry = self.table.get(self._as_mask(s))
        return entry[0] if entry else 0

    def residual(self, s) -> Optional[UniformFamily]:
        entry = self.table.get(self._as_mask(s))
        return entry[1] if entry else None

    def alpha_of(self, s) -> Optional[Fraction]:
        m = self._as_mask(s)
        if m in self.alpha:
            return self.alpha[m]
        if m == 0:
            return None
        d = binom(self.n - self.window.bit_count(), self.k - m.bit_count())
        return Fraction(0) if d else None

    def total(self) -> int:
        return sum(fs for fs, _ in self.table.values())


# ── predicates and statistics ────────────────────────────────────────────────

def is_intersecting(family: UniformFamily) -> bool:
    """True iff every pair of members meets (mask AND nonzero)."""
    masks = family.masks
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if not a & b:
                return False
    return True


def are_cross_intersecting(fam_a: UniformFamily, fam_b: UniformFamily) -> bool:
    """True iff every member of one family meets every member of the other."""
    if fam_a.n != fam_b.n:
        raise ValueError(f"ground sets differ: {fam_a.n} vs {fam_b.n}")
    for a in fam_a.masks:
        for b in fam_b.masks:
            if not a & b:
                return False
    return True


def trace(family: UniformFamily, window: Iterable[int] | int) -> TraceStats:
    """Group members by their intersection with the window U."""
    u = window if isinstance(window, int) else mask_of(window, family.n)
    if u >> family.n:
        raise ValueError("window has elements outside the ground set")
    groups: dict[int, list[int]] = {}
    for m in family.masks:
        groups.setdefault(m & u, []).append(m & ~u)
    usize = u.bit_count()
    table: dict[int, tuple[int, UniformFamily]] = {}
    alpha: dict[int, Optional[Fraction]] = {}
    for s, residual_masks in sorted(groups.items()):
        res = UniformFamily.from_masks(family.n, family.k - s.bit_count(), residual_masks)
        table[s] = (len(residual_masks), res)
        denom = binom(family.n - usize, family.k - s.bit_count())
        if s == 0 or denom == 0:
            alpha[s] = None
        else:
            alpha[s] = Fraction(len(residual_masks), denom)
    return TraceStats(family.n, family.k, u, table, alpha)


def layer(family: UniformFamily, window: Iterable[int] | int, i: int) -> UniformFamily:
    """Subfamily {F : |F ∩ U| = i}; the layers over i partition the family."""
    u = window if isinstance(window, int) else mask_of(window, family.n)
    return UniformFamily(family.n, family.k,
                         tuple(m for m in family.masks if (m & u).bit_count() == i))


def max_degree(family: UniformFamily) -> tuple[int, int]:
    """(element, degree) with the maximum degree; ties go to the smallest element."""
    if not family.masks:
        raise ValueError("max_degree of an empty family is undefined")
    best_x, best_d = 1, -1
    for x in range(1, family.n + 1):
        b = 1 << (x - 1)
        d = sum(1 for m in family.masks if m & b)
        if d > best_d:
            best_x, best_d = x, d
    return best_x, best_d


def degree(family: UniformFamily, x: int) -> int:
    b = 1 << (x - 1)
    return sum(1 for m in family.masks if m & b)


def disjoint_pairs(window_masks: Iterable[int]) -> list[tuple[int, int]]:
    """All unordered disjoint pairs among the given masks."""
    ms = list(window_masks)
    return [(a, b) for a, b in combinations(ms, 2) if not a & b]
