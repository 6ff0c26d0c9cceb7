"""Semistandard key tabloids.

A key tabloid of shape ``a`` (length ``n``) fills row ``r`` with ``a_r``
entries from ``1..n``.  Rows are numbered from the bottom.  Column 0 is an
implicit basement holding ``r`` in row ``r``: it attacks column 1 and it is
the left cell of triples whose right cell sits in column 1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import Composition, Poly, QPoly, check_composition, format_composition


@dataclass(frozen=True)
class KeyTabloid:
    shape: Composition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != len(self.shape):
            raise ValueError("one row per part is required")
        for r, (row, a) in enumerate(zip(self.rows, self.shape), 1):
            if len(row) != a:
                raise ValueError(f"row {r} has {len(row)} entries, expected {a}")

    @property
    def n(self) -> int:
        return len(self.shape)

    def entry(self, r: int, c: int) -> int:
        """Entry in row ``r`` column ``c`` (both 1-based); column 0 is the basement."""
        if c == 0:
            return r
        return self.rows[r - 1][c - 1]

    def cells(self):
        for r, row in enumerate(self.rows, 1):
            for c, x in enumerate(row, 1):
                yield (r, c), x

    def column(self, c: int) -> dict[int, int]:
        """Map row -> entry for column ``c``."""
        return {r: row[c - 1] for r, row in enumerate(self.rows, 1) if len(row) >= c}

    def columns(self) -> list[dict[int, int]]:
        width = max(self.shape, default=0)
        return [self.column(c) for c in range(1, width + 1)]

    def weight(self) -> Composition:
        wt = [0] * self.n
        for row in self.rows:
            for x in row:
                wt[x - 1] += 1
        return tuple(wt)

    def reading_key(self) -> tuple[int, ...]:
        """Concatenated rows, bottom to top; the canonical sort key."""
        return tuple(x for row in self.rows for x in row)

    def replace(self, changes: dict[tuple[int, int], int]) -> "KeyTabloid":
        rows = [list(row) for row in self.rows]
        for (r, c), x in changes.items():
            rows[r - 1][c - 1] = x
        return KeyTabloid(self.shape, tuple(tuple(row) for row in rows))

    def serialize(self) -> str:
        parts = [f"shape={format_composition(self.shape)}"]
        for r, row in enumerate(self.rows, 1):
            parts.append(f"r{r}=" + ",".join(str(x) for x in row))
        return "; ".join(parts)

    def __str__(self):
        return self.serialize()

    def pretty(self) -> str:
        """Rows drawn top to bottom with the row index on the left."""
        lines = []
        for r in range(self.n, 0, -1):
            lines.append(f"{r:>2} | " + " ".join(str(x) for x in self.rows[r - 1]))
        return "\n".join(lines)

    @classmethod
    def from_rows(cls, shape, rows: dict[int, tuple[int, ...]] | None = None) -> "KeyTabloid":
        """Build from ``{row: entries}``, omitted rows being empty."""
        shape = check_composition(shape)
        rows = rows or {}
        return cls(shape, tuple(tuple(rows.get(r, ())) for r in range(1, len(shape) + 1)))


_ROW_RE = re.compile(r"^r(\d+)=(.*)$")


def parse_tabloid(text: str) -> KeyTabloid:
    """Inverse of :meth:`KeyTabloid.serialize`."""
    fields = [f.strip() for f in text.strip().split(";")]
    if not fields or not fields[0].startswith("shape="):
        raise ValueError("tabloid text must start with shape=")
    from .combinatorics import parse_composition

    shape = parse_composition(fields[0][len("shape="):])
    rows: dict[int, tuple[int, ...]] = {}
    for f in fields[1:]:
        if not f:
            continue
        m = _ROW_RE.match(f)
        if not m:
            raise ValueError(f"bad row field {f!r}")
        body = m.group(2).strip()
        rows[int(m.group(1))] = tuple(int(x) for x in body.split(",")) if body else ()
    t = KeyTabloid.from_rows(shape, rows)
    return t


# ---------------------------------------------------------------------------
# validity

def attacking_violations(t: KeyTabloid):
    """Pairs of attacking cells carrying equal entries."""
    out = []
    width = max(t.shape, default=0)
    for c in range(1, width + 1):
        col = t.column(c)
        seen: dict[int, int] = {}
        for r, x in sorted(col.items()):
            if x in seen:
                out.append(((seen[x], c), (r, c)))
            seen[x] = r
        left = {r: r for r in range(1, t.n + 1)} if c == 1 else t.column(c - 1)
        for r, x in col.items():
            for s, y in left.items():
                if s > r and y == x:
                    out.append(((s, c - 1), (r, c)))
    return out


def triples(t: KeyTabloid):
    """Every type I and type II triple as ``(i, j, k)`` cell triples."""
    out = []
    a = t.shape
    for r in range(1, t.n + 1):
        for c in range(0, a[r - 1]):
            i, j = (r, c), (r, c + 1)
            for s in range(1, t.n + 1):
                if c >= 1 and s > r and a[s - 1] < a[r - 1] and a[s - 1] >= c:
                    out.append((i, j, (s, c)))
                if c == 0 and s > r and a[s - 1] < a[r - 1]:
                    out.append((i, j, (s, 0)))
                if s < r and a[s - 1] <= a[r - 1] and a[s - 1] >= c + 1:
                    out.append((i, j, (s, c + 1)))
    return out


def _is_coinversion(x: int, y: int, z: int) -> bool:
    return x < y < z or y < z < x or z < x < y


def coinversion_triples(t: KeyTabloid):
    out = []
    for i, j, k in triples(t):
        vals = [t.entry(*cell) for cell in (i, j, k)]
        if _is_coinversion(*vals):
            out.append((i, j, k))
    return out


def is_valid(t: KeyTabloid) -> bool:
    if any(not 1 <= x <= t.n for _, x in t.cells()):
        return False
    return not attacking_violations(t) and not coinversion_triples(t)


def maj(t: KeyTabloid) -> int:
    total = 0
    for row in t.rows:
        for c in range(len(row) - 1):
            if row[c] < row[c + 1]:
                total += len(row) - (c + 1)
    return total


# ---------------------------------------------------------------------------
# enumeration

def _column_fillings(shape, n):
    """Yield the list of columns (each a dict row -> entry) of every tabloid."""
    width = max(shape, default=0)
    col_rows = [[r for r in range(1, n + 1) if shape[r - 1] >= c] for c in range(1, width + 1)]

    def column_ok(prev: dict[int, int], cur: dict[int, int], c: int) -> bool:
        # triples between column c-1 (prev) and column c (cur)
        for r, y in cur.items():
            x = prev[r]
            ar = shape[r - 1]
            for s in range(r + 1, n + 1):
                if shape[s - 1] < ar and shape[s - 1] >= c - 1 and _is_coinversion(x, y, prev[s]):
                    return False
            for s in range(1, r):
                if shape[s - 1] <= ar and s in cur and _is_coinversion(x, y, cur[s]):
                    return False
        return True

    def fill_column(c, prev, rows_left, cur, used):
        if not rows_left:
            yield dict(cur)
            return
        r = rows_left[0]
        for x in range(1, n + 1):
            if x in used:
                continue
            # the left neighbour column is attacked from strictly higher rows
            if any(s > r and y == x for s, y in prev.items()):
                continue
            cur[r] = x
            used.add(x)
            yield from fill_column(c, prev, rows_left[1:], cur, used)
            used.discard(x)
            del cur[r]

    def rec(c, prev, acc):
        if c > width:
            yield acc
            return
        for col in fill_column(c, prev, col_rows[c - 1], {}, set()):
            if column_ok(prev, col, c):
                yield from rec(c + 1, col, acc + [col])

    basement = {r: r for r in range(1, n + 1)}
    yield from rec(1, basement, [])


@lru_cache(maxsize=4096)
def _enumerate(shape: Composition) -> tuple[KeyTabloid, ...]:
    n = len(shape)
    out = []
    for cols in _column_fillings(shape, n):
        rows = tuple(tuple(cols[c][r] for c in range(shape[r - 1])) for r in range(1, n + 1))
        out.append(KeyTabloid(shape, rows))
    out.sort(key=KeyTabloid.reading_key)
    return tuple(out)


def enumerate_sskd(shape) -> list[KeyTabloid]:
    """All key tabloids of the given shape, sorted by reading key."""
    return list(_enumerate(check_composition(shape)))


def generating_function(shape) -> Poly:
    """Sum of ``q^maj(T) x^wt(T)`` over all tabloids of the shape."""
    shape = check_composition(shape)
    p = Poly(len(shape))
    for t in enumerate_sskd(shape):
        p._add_term(t.weight(), QPoly.monomial(maj(t)))
    return p
