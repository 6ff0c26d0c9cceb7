"""Semistandard Young tableaux (French convention) and their crystal."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import Composition, strip
from .crystal import CrystalGraph


@dataclass(frozen=True)
class YoungTableau:
    """Rows listed bottom to top; row 1 is the longest."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows if r))

    @property
    def shape(self) -> Composition:
        return tuple(len(r) for r in self.rows)

    def entry(self, r: int, c: int) -> int:
        return self.rows[r - 1][c - 1]

    def column(self, c: int) -> list[int]:
        """Entries of column ``c`` from bottom to top."""
        return [row[c - 1] for row in self.rows if len(row) >= c]

    def columns(self) -> list[list[int]]:
        width = len(self.rows[0]) if self.rows else 0
        return [self.column(c) for c in range(1, width + 1)]

    def weight(self, n: int) -> Composition:
        wt = [0] * n
        for row in self.rows:
            for x in row:
                wt[x - 1] += 1
        return tuple(wt)

    def reading_word(self) -> tuple[int, ...]:
        """Rows from top to bottom, each left to right."""
        return tuple(x for row in reversed(self.rows) for x in row)

    def is_semistandard(self) -> bool:
        for k, row in enumerate(self.rows):
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                return False
            if k and (len(row) > len(self.rows[k - 1])
                      or any(row[c] <= self.rows[k - 1][c] for c in range(len(row)))):
                return False
        return True

    def replace(self, changes: dict[tuple[int, int], int]) -> "YoungTableau":
        rows = [list(r) for r in self.rows]
        for (r, c), x in changes.items():
            rows[r - 1][c - 1] = x
        return YoungTableau(tuple(tuple(r) for r in rows))

    def serialize(self) -> str:
        return "/".join(" ".join(str(x) for x in row) for row in self.rows)

    def __str__(self):
        return self.serialize()

    def pretty(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in reversed(self.rows))


def parse_tableau(text: str) -> YoungTableau:
    """Parse ``"1 1/2 2/3"`` (rows bottom to top)."""
    text = text.strip()
    if not text:
        return YoungTableau(())
    rows = tuple(tuple(int(x) for x in part.split()) for part in text.split("/"))
    t = YoungTableau(rows)
    if not t.is_semistandard():
        raise ValueError(f"not semistandard: {text!r}")
    return t


@lru_cache(maxsize=None)
def _ssyt(shape: Composition, n: int) -> tuple[YoungTableau, ...]:
    out = []

    def rows_over(below, size):
        # weakly increasing rows of given size sitting strictly above ``below``
        def rec(c, lo, acc):
            if c == size:
                yield tuple(acc)
                return
            start = max(lo, below[c] + 1 if below is not None else 1)
            for x in range(start, n + 1):
                yield from rec(c + 1, x, acc + [x])
        yield from rec(0, 1, [])

    def build(k, acc):
        if k == len(shape):
            out.append(YoungTableau(tuple(acc)))
            return
        below = acc[-1] if acc else None
        for row in rows_over(below, shape[k]):
            build(k + 1, acc + [row])

    build(0, [])
    out.sort(key=lambda t: t.reading_word()[::-1])
    return tuple(out)


def enumerate_ssyt(shape, n: int) -> list[YoungTableau]:
    return list(_ssyt(strip(tuple(shape)), n))


def _residual(t: YoungTableau, i: int):
    """Column-ordered residual cells after cancelling columns holding both values."""
    out = []
    for c, col in enumerate(t.columns(), 1):
        has_lo, has_hi = i in col, i + 1 in col
        if has_lo and not has_hi:
            out.append((col.index(i) + 1, c, i))
        elif has_hi and not has_lo:
            out.append((col.index(i + 1) + 1, c, i + 1))
    return out


def unpaired(t: YoungTableau, i: int):
    """Unpaired cells of ``i`` and of ``i+1``, each in column order.

    An ``i+1`` opens a bracket that a later ``i`` closes.
    """
    stack = []
    lo = []
    for r, c, x in _residual(t, i):
        if x == i + 1:
            stack.append((r, c))
        elif stack:
            stack.pop()
        else:
            lo.append((r, c))
    return lo, stack


def raise_op(t: YoungTableau, i: int) -> YoungTableau | None:
    _, hi = unpaired(t, i)
    if not hi:
        return None
    return t.replace({hi[0]: i})


def lower_op(t: YoungTableau, i: int) -> YoungTableau | None:
    lo, _ = unpaired(t, i)
    if not lo:
        return None
    return t.replace({lo[-1]: i + 1})


def phi(t: YoungTableau, i: int) -> int:
    return len(unpaired(t, i)[0])


def eps(t: YoungTableau, i: int) -> int:
    return len(unpaired(t, i)[1])


def reflect(t: YoungTableau, i: int, n: int) -> YoungTableau:
    """String reflection ``S_i``."""
    d = t.weight(n)[i - 1] - t.weight(n)[i]
    op = lower_op if d >= 0 else raise_op
    for _ in range(abs(d)):
        t = op(t, i)
    return t


def row_insert(t: YoungTableau, x: int) -> YoungTableau:
    rows = [list(r) for r in t.rows]
    for row in rows:
        for c, y in enumerate(row):
            if y > x:
                row[c], x = x, y
                break
        else:
            row.append(x)
            return YoungTableau(tuple(tuple(r) for r in rows))
    rows.append([x])
    return YoungTableau(tuple(tuple(r) for r in rows))


def insertion_tableau(word) -> YoungTableau:
    t = YoungTableau(())
    for x in word:
        t = row_insert(t, x)
    return t


@lru_cache(maxsize=None)
def crystal_flip(t: YoungTableau, n: int) -> YoungTableau:
    """Lusztig involution on ``B(lambda)``, computed as evacuation."""
    word = [n + 1 - x for x in reversed(t.reading_word())]
    return insertion_tableau(word)


@lru_cache(maxsize=256)
def ssyt_crystal(shape, n: int) -> CrystalGraph:
    shape = strip(tuple(shape))
    verts = enumerate_ssyt(shape, n)
    return CrystalGraph.build(verts, n - 1, lambda t: t.weight(n), lower_op, raise_op)
