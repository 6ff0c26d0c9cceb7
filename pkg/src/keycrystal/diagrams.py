"""Diagrams, Kohnert moves, diagram crystal moves, rectification and the Aries map."""
from __future__ import annotations

from collections import deque
from functools import lru_cache

from .combinatorics import Composition
from .ssyt import YoungTableau, crystal_flip
from .tabloids import KeyTabloid

Cell = tuple[int, int]
Diagram = frozenset  # of (row, column), both 1-based


def diagram(cells) -> Diagram:
    cells = frozenset((int(r), int(c)) for r, c in cells)
    if any(r < 1 or c < 1 for r, c in cells):
        raise ValueError("rows and columns start at 1")
    return cells


def serialize_diagram(d: Diagram) -> str:
    return "[" + ",".join(f"({r},{c})" for r, c in sorted(d)) + "]"


def parse_diagram(text: str) -> Diagram:
    import re

    return diagram((int(r), int(c)) for r, c in re.findall(r"\((\d+)\s*,\s*(\d+)\)", text))


def pretty_diagram(d: Diagram) -> str:
    if not d:
        return ""
    top = max(r for r, _ in d)
    width = max(c for _, c in d)
    return "\n".join(
        "".join("x" if (r, c) in d else "." for c in range(1, width + 1))
        for r in range(top, 0, -1)
    )


def key_diagram(a) -> Diagram:
    return diagram((r, c) for r, x in enumerate(a, 1) for c in range(1, x + 1))


def diagram_weight(d: Diagram, n: int) -> Composition:
    wt = [0] * n
    for r, _ in d:
        wt[r - 1] += 1
    return tuple(wt)


def transpose(d: Diagram) -> Diagram:
    return frozenset((c, r) for r, c in d)


def kohnert_move(d: Diagram, row: int) -> Diagram | None:
    """Move the rightmost cell of ``row`` to the first empty spot below it."""
    cols = [c for r, c in d if r == row]
    if not cols:
        return None
    c = max(cols)
    for s in range(row - 1, 0, -1):
        if (s, c) not in d:
            return (d - {(row, c)}) | {(s, c)}
    return None


def kohnert_diagrams(a) -> list[Diagram]:
    """Closure of the key diagram of ``a`` under Kohnert moves."""
    start = key_diagram(a)
    seen = {start}
    todo = deque([start])
    while todo:
        d = todo.popleft()
        for row in range(1, len(a) + 1):
            e = kohnert_move(d, row)
            if e is not None and e not in seen:
                seen.add(e)
                todo.append(e)
    return sorted(seen, key=lambda d: sorted(d))


def tabloid_diagram(t: KeyTabloid) -> Diagram:
    """Cell ``(T(r,c), c)`` for every cell of ``T``."""
    return diagram((x, c) for (r, c), x in t.cells())


def is_rectified(d: Diagram) -> bool:
    for r, c in d:
        if c > 1:
            left = sum(1 for s, k in d if k == c - 1 and s >= r)
            here = sum(1 for s, k in d if k == c and s >= r)
            if left < here:
                return False
    return True


# ---------------------------------------------------------------------------
# vertical moves: rows i and i+1

def vertical_unpaired(d: Diagram, i: int):
    """Unpaired cells of row ``i`` and of row ``i+1`` in column order.

    Columns holding both rows cancel.  A remaining row ``i+1`` cell pairs with
    the nearest unpaired row ``i`` cell to its left.
    """
    lo_cols = {c for r, c in d if r == i}
    hi_cols = {c for r, c in d if r == i + 1}
    stack, hi = [], []
    for c in sorted(lo_cols ^ hi_cols):
        if c in lo_cols:
            stack.append((i, c))
        elif stack:
            stack.pop()
        else:
            hi.append((i + 1, c))
    return stack, hi


def vertical_raise(d: Diagram, i: int) -> Diagram | None:
    """Move the rightmost unpaired row ``i+1`` cell down to row ``i``."""
    _, hi = vertical_unpaired(d, i)
    if not hi:
        return None
    r, c = hi[-1]
    return (d - {(r, c)}) | {(i, c)}


def vertical_lower(d: Diagram, i: int) -> Diagram | None:
    """Move the leftmost unpaired row ``i`` cell up to row ``i+1``."""
    lo, _ = vertical_unpaired(d, i)
    if not lo:
        return None
    r, c = lo[0]
    return (d - {(r, c)}) | {(i + 1, c)}


# ---------------------------------------------------------------------------
# horizontal moves: columns i and i+1

def horizontal_unpaired(d: Diagram, i: int):
    """Unpaired cells of column ``i`` and of column ``i+1``, top to bottom.

    Rows holding both columns cancel.  A remaining column ``i+1`` cell pairs
    with the nearest unpaired column ``i`` cell above it.
    """
    lo_rows = {r for r, c in d if c == i}
    hi_rows = {r for r, c in d if c == i + 1}
    stack, hi = [], []
    for r in sorted(lo_rows ^ hi_rows, reverse=True):
        if r in lo_rows:
            stack.append((r, i))
        elif stack:
            stack.pop()
        else:
            hi.append((r, i + 1))
    return stack, hi


def horizontal_raise(d: Diagram, i: int) -> Diagram | None:
    """Move the bottom-most unpaired column ``i+1`` cell left into column ``i``."""
    _, hi = horizontal_unpaired(d, i)
    if not hi:
        return None
    r, c = hi[-1]
    return (d - {(r, c)}) | {(r, i)}


def rectify_steps(d: Diagram):
    """Yield ``(i, diagram)`` after each move of the rectification."""
    while True:
        width = max((c for _, c in d), default=0)
        for i in range(1, width):
            e = horizontal_raise(d, i)
            if e is not None:
                d = e
                yield i, d
                break
        else:
            return


@lru_cache(maxsize=None)
def rectify(d: Diagram) -> Diagram:
    for _, d in rectify_steps(d):
        pass
    return d


def diagram_tableau(d: Diagram, n: int) -> YoungTableau:
    """Tableau of a rectified diagram in ``n`` rows."""
    if not is_rectified(d):
        raise ValueError("diagram is not rectified")
    if any(r > n for r, _ in d):
        raise ValueError(f"diagram has a cell above row {n}")
    width = max((c for _, c in d), default=0)
    cols = [sorted(n - r + 1 for r, k in d if k == c) for c in range(1, width + 1)]
    height = max((len(col) for col in cols), default=0)
    rows = tuple(tuple(col[k] for col in cols if len(col) > k) for k in range(height))
    t = YoungTableau(rows)
    if not t.is_semistandard():
        raise AssertionError("column labels do not form a tableau")
    return crystal_flip(t, n)


@lru_cache(maxsize=None)
def aries(t: KeyTabloid) -> YoungTableau:
    """Tableau attached to a key tabloid by rectifying its diagram."""
    return diagram_tableau(rectify(tabloid_diagram(t)), t.n)
