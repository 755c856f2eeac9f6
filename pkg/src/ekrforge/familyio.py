"""The family text format.

First line ``n k m``; then m lines, each the sorted 1-based elements of
one member separated by single spaces; member lines in colex order;
trailing newline; no comments.  The reader accepts member lines in any
order (families are canonically re-sorted on load) but insists on sorted
elements within a line, correct cardinalities, in-range elements and no
duplicate members, and reports problems with 1-based line numbers.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import TextIO

from .families import UniformFamily, elements_of, mask_of


class FamilyFormatError(ValueError):
    """Malformed family file; carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_family(text: str) -> UniformFamily:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise FamilyFormatError(1, "missing 'n k m' header")
    head = lines[0].split()
    if len(head) != 3:
        raise FamilyFormatError(1, f"header must be 'n k m', got {lines[0]!r}")
    try:
        n, k, m = (int(x) for x in head)
    except ValueError:
        raise FamilyFormatError(1, f"non-integer header field in {lines[0]!r}") from None
    if n < 1 or n > 64:
        raise FamilyFormatError(1, f"ground size {n} outside [1, 64]")
    if not 0 <= k <= n:
        raise FamilyFormatError(1, f"uniformity {k} outside [0, {n}]")
    if m < 0:
        raise FamilyFormatError(1, f"negative member count {m}")
    body = [(idx + 2, ln) for idx, ln in enumerate(lines[1:]) if ln.strip()]
    if len(body) != m:
        raise FamilyFormatError(
            len(lines) + 1 if len(body) < m else body[m][0],
            f"header promises {m} members, file has {len(body)}")
    masks = []
    seen: dict[int, int] = {}
    for line_no, ln in body:
        fields = ln.split()
        try:
            elems = [int(x) for x in fields]
        except ValueError:
            raise FamilyFormatError(line_no, f"non-integer element in {ln!r}") from None
        if len(elems) != k:
            raise FamilyFormatError(
                line_no, f"member has {len(elems)} elements, expected k={k}")
        if any(not 1 <= x <= n for x in elems):
            bad = next(x for x in elems if not 1 <= x <= n)
            raise FamilyFormatError(line_no, f"element {bad} outside [1, {n}]")
        if elems != sorted(set(elems)):
            raise FamilyFormatError(line_no, "elements must be strictly increasing")
        mask = mask_of(elems, n)
        if mask in seen:
            raise FamilyFormatError(
                line_no, f"duplicate member (first seen on line {seen[mask]})")
        seen[mask] = line_no
        masks.append(mask)
    return UniformFamily.from_masks(n, k, masks)


def read_family(path: str | Path) -> UniformFamily:
    return parse_family(Path(path).read_text())


def render_family(family: UniformFamily) -> str:
    out = io.StringIO()
    out.write(f"{family.n} {family.k} {len(family)}\n")
    for mask in family.masks:
        out.write(" ".join(str(x) for x in elements_of(mask)))
        out.write("\n")
    return out.getvalue()


def write_family(family: UniformFamily, path: str | Path | TextIO) -> None:
    text = render_family(family)
    if hasattr(path, "write"):
        path.write(text)
    else:
        Path(path).write_text(text)
