"""Crystal operators on key tabloids."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import Composition, check_composition
from .crystal import CrystalGraph
from .tabloids import KeyTabloid, enumerate_sskd, maj


@dataclass(frozen=True)
class Pairing:
    """Result of i-pairing.

    Cells are ``(row, column)``.  ``same_column`` lists columns holding both
    ``i`` and ``i+1``; ``matched`` lists ``(cell of i, cell of i+1)`` pairs
    found by bracketing.
    """

    i: int
    same_column: tuple[int, ...]
    matched: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    unpaired_low: tuple[tuple[int, int], ...]
    unpaired_high: tuple[tuple[int, int], ...]


def _locate(col: dict[int, int], value: int):
    for r, x in col.items():
        if x == value:
            return r
    return None


def pairing(t: KeyTabloid, i: int) -> Pairing:
    if not 1 <= i < t.n:
        raise ValueError(f"i={i} out of range for n={t.n}")
    same = []
    stack: list[tuple[int, int]] = []
    matched = []
    high = []
    for c, col in enumerate(t.columns(), 1):
        r_low, r_high = _locate(col, i), _locate(col, i + 1)
        if r_low is not None and r_high is not None:
            same.append(c)
        elif r_low is not None:
            stack.append((r_low, c))
        elif r_high is not None:
            if stack:
                matched.append((stack.pop(), (r_high, c)))
            else:
                high.append((r_high, c))
    return Pairing(i, tuple(same), tuple(matched), tuple(stack), tuple(high))


def _swap_run(t, changes, r, start, step, i, moving, other_above):
    """Swap i and i+1 along consecutive columns starting at ``start``.

    A column joins the run when it holds ``moving`` in row ``r`` and the other
    value strictly above (``other_above``) or strictly below row ``r``.
    """
    other = i if moving == i + 1 else i + 1
    c = start
    width = len(t.rows[r - 1])
    while 1 <= c <= width:
        col = t.column(c)
        if col.get(r) != moving:
            break
        s = _locate(col, other)
        if s is None or (s > r) != other_above:
            break
        changes[(r, c)] = other
        changes[(s, c)] = moving
        c += step
    return changes


def raise_op(t: KeyTabloid, i: int) -> KeyTabloid | None:
    """``e_i``; ``None`` when every ``i+1`` is paired."""
    p = pairing(t, i)
    if not p.unpaired_high:
        return None
    r, c = p.unpaired_high[-1]
    changes = {(r, c): i}
    _swap_run(t, changes, r, c - 1, -1, i, i + 1, True)
    _swap_run(t, changes, r, c + 1, +1, i, i + 1, False)
    return t.replace(changes)


def _dies(t: KeyTabloid, i: int, r: int, c: int) -> bool:
    """Lowering would push the row-i entry past the basement."""
    if r != i:
        return False
    for d in range(1, c):
        col = t.column(d)
        s = _locate(col, i + 1)
        if col.get(i) != i or s is None or s < i:
            return False
    return True


def lower_op(t: KeyTabloid, i: int) -> KeyTabloid | None:
    """``f_i``; ``None`` when every ``i`` is paired or the move would leave the shape."""
    p = pairing(t, i)
    if not p.unpaired_low:
        return None
    r, c = p.unpaired_low[0]
    if _dies(t, i, r, c):
        return None
    changes = {(r, c): i + 1}
    _swap_run(t, changes, r, c - 1, -1, i, i, True)
    _swap_run(t, changes, r, c + 1, +1, i, i, False)
    return t.replace(changes)


@dataclass
class TabloidComponent:
    vertices: list[KeyTabloid]
    highest_weight: KeyTabloid
    maj: int


@dataclass
class TabloidCrystal:
    shape: Composition
    graph: CrystalGraph
    components: list[TabloidComponent]


@lru_cache(maxsize=512)
def _build(shape: Composition) -> TabloidCrystal:
    verts = enumerate_sskd(shape)
    n = len(shape)
    g = CrystalGraph.build(verts, max(n - 1, 0), KeyTabloid.weight, lower_op, raise_op)
    comps = []
    for comp in g.components():
        hws = g.highest_weights(comp)
        if len(hws) != 1:
            raise AssertionError(f"component without a unique highest weight in {shape}")
        majs = {maj(t) for t in comp}
        if len(majs) != 1:
            raise AssertionError(f"maj is not constant on a component of {shape}")
        comps.append(TabloidComponent(comp, hws[0], majs.pop()))
    return TabloidCrystal(shape, g, comps)


def tabloid_crystal(shape) -> TabloidCrystal:
    """The crystal on all key tabloids of ``shape`` split into components."""
    return _build(check_composition(shape))


def highest_weight_tabloids(shape) -> list[KeyTabloid]:
    shape = check_composition(shape)
    n = len(shape)
    return [t for t in enumerate_sskd(shape) if all(raise_op(t, i) is None for i in range(1, n))]
