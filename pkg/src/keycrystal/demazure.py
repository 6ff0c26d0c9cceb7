"""Demazure characters, Demazure crystals, lowest weights and subset axioms."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .combinatorics import (
    Composition,
    Poly,
    act,
    check_composition,
    compose,
    dominance_leq,
    length,
    reduced_word,
    shortest_sorting_permutation,
    simple,
    sort_decreasing,
    strip,
    pad_to,
)
from .crystal import CrystalGraph
from .ssyt import YoungTableau, ssyt_crystal


# ---------------------------------------------------------------------------
# polynomials

def divided_difference(f: Poly, i: int) -> Poly:
    """``(f - s_i f) / (x_i - x_{i+1})``."""
    return (f - f.swap(i)).divide_by_root(i)


def demazure_pi(f: Poly, i: int) -> Poly:
    """``pi_i f = d_i(x_i f)``."""
    return divided_difference(f.times_variable(i), i)


def apply_word(f: Poly, word) -> Poly:
    """``pi_{i_1} ... pi_{i_k} f`` with the last letter acting first."""
    for i in reversed(tuple(word)):
        f = demazure_pi(f, i)
    return f


@lru_cache(maxsize=None)
def key_polynomial(a) -> Poly:
    a = check_composition(a)
    lam = sort_decreasing(a)
    w = shortest_sorting_permutation(a)
    return apply_word(Poly.monomial(lam), reduced_word(w))


def schur_polynomial(lam, n: int) -> Poly:
    return key_polynomial(tuple(reversed(pad_to(strip(lam), n))))


# ---------------------------------------------------------------------------
# subsets of crystals

@dataclass(frozen=True)
class CrystalSubset:
    ambient: CrystalGraph = field(hash=False, compare=False)
    members: frozenset

    def __post_init__(self):
        missing = [v for v in self.members if v not in self.ambient.index]
        if missing:
            raise ValueError("members must be ambient vertices")

    def __contains__(self, v):
        return v in self.members

    def __len__(self):
        return len(self.members)

    def inside(self, v):
        """``v`` if it is a member, else ``None``."""
        return v if v is not None and v in self.members else None

    def f(self, v, i):
        return self.inside(self.ambient.f(v, i))

    def character(self) -> Poly:
        return self.ambient.character(sorted(self.members, key=self.ambient.index.get))

    def sorted_members(self) -> list:
        return sorted(self.members, key=self.ambient.index.get)


def highest_weight_element(g: CrystalGraph):
    hws = g.highest_weights()
    if len(hws) != 1:
        raise ValueError("ambient crystal is not connected")
    return hws[0]


def demazure_operator_D(x: CrystalSubset, i: int) -> CrystalSubset:
    g = x.ambient
    out = set(x.members)
    for v in x.members:
        while (v := g.f(v, i)) is not None:
            out.add(v)
    return CrystalSubset(g, frozenset(out))


def demazure_from_word(g: CrystalGraph, word) -> CrystalSubset:
    """``D_{i_1} ... D_{i_k} {u}`` with the last letter acting first."""
    x = CrystalSubset(g, frozenset([highest_weight_element(g)]))
    for i in reversed(tuple(word)):
        x = demazure_operator_D(x, i)
    return x


def demazure_crystal(lam, w, n: int | None = None) -> CrystalSubset:
    """``B_w(lambda)`` inside the tableau crystal ``B(lambda)``."""
    n = len(w) if n is None else n
    g = ssyt_crystal(strip(lam), n)
    return demazure_from_word(g, reduced_word(w))


# ---------------------------------------------------------------------------
# lowering inside a subset, lowest weights

def _step(g: CrystalGraph, members, v, k):
    u = g.f(v, k)
    if u is None or (members is not None and u not in members):
        return None
    return u


def composite_lower(g: CrystalGraph, members, b, i: int, j: int):
    """``F_[i,j]``: apply ``f_j`` then ``f_{j-1}`` ... ``f_i`` maximally inside ``members``.

    Returns ``(vertex, faithful, exponents)`` where ``exponents[k - i] = r_k``.
    """
    if i > j:
        raise ValueError("need i <= j")
    exps = [0] * (j - i + 1)
    for k in range(j, i - 1, -1):
        while (u := _step(g, members, b, k)) is not None:
            b = u
            exps[k - i] += 1
    return b, all(r > 0 for r in exps), tuple(exps)


def is_lowest(g: CrystalGraph, members, b) -> bool:
    return all(_step(g, members, b, k) is None for k in range(1, g.rank + 1))


def demazure_lowest_Z(g: CrystalGraph, members, start, trace: list | None = None):
    """Run the composite lowering algorithm from ``start`` until a lowest weight."""
    b = start
    while not is_lowest(g, members, b):
        move = None
        for i in range(1, g.rank + 1):
            for j in range(g.rank, i - 1, -1):
                u, faithful, exps = composite_lower(g, members, b, i, j)
                if faithful:
                    move = (i, j, u, exps)
                    break
            if move:
                break
        if move is None:
            raise AssertionError(f"no faithful composite lowering from {b}")
        i, j, b, exps = move
        if trace is not None:
            trace.append((i, j, exps, b))
    return b


@dataclass
class LowestWeightScan:
    lowest: list
    demazure_lowest: object
    strict: bool


def scan_lowest_weights(g: CrystalGraph, members) -> LowestWeightScan:
    """Find the dominance-minimal lowest weight by checking every element."""
    verts = g.vertices if members is None else [v for v in g.vertices if v in members]
    lows = [v for v in verts if is_lowest(g, members, v)]
    cands = [z for z in lows if all(dominance_leq(g.weight(z), g.weight(y)) for y in lows)]
    if len(cands) != 1:
        raise AssertionError(f"{len(cands)} Demazure lowest weights")
    z = cands[0]
    strict = all(g.weight(y) != g.weight(z) for y in lows if y != z)
    return LowestWeightScan(lows, z, strict)


def super_yamanouchi_lowering(g: CrystalGraph, members, blocks):
    """Apply ``F`` along super-Yamanouchi blocks, rightmost block first.

    Returns the end vertex and whether every block acted faithfully.
    """
    b = highest_weight_element(g) if members is None else None
    if b is None:
        b = next(v for v in g.highest_weights() if v in members)
    ok = True
    for block in reversed(blocks):
        b, faithful, _ = composite_lower(g, members, b, block[0], block[-1])
        ok = ok and faithful
    return b, ok


# ---------------------------------------------------------------------------
# axiom checks

@dataclass
class CheckResult:
    ok: bool
    condition: str | None = None
    vertices: tuple = ()
    colors: tuple = ()

    def __bool__(self):
        return self.ok

    def to_json(self, label=str) -> dict:
        return {
            "ok": self.ok,
            "condition": self.condition,
            "vertices": [label(v) for v in self.vertices],
            "colors": list(self.colors),
        }


_PASS = CheckResult(True)


def check_extremal(x: CrystalSubset) -> CheckResult:
    g = x.ambient
    u = highest_weight_element(g)
    if u not in x:
        return CheckResult(False, "1", (u,), ())
    for v in x.sorted_members():
        for i in range(1, g.rank + 1):
            up = g.e(v, i)
            if up is not None and up not in x:
                return CheckResult(False, "2", (v,), (i,))
            down = g.f(v, i)
            if down is not None and down not in x and up is not None and up in x:
                return CheckResult(False, "3", (v,), (i,))
    return _PASS


def is_extremal_weight(wt, lam) -> bool:
    return sort_decreasing(wt) == tuple(lam)


def _left_descent(sigma, j) -> bool:
    return length(compose(simple(j, len(sigma)), sigma)) < length(sigma)


class _Checker:
    def __init__(self, x: CrystalSubset):
        self.x = x
        self.g = x.ambient
        g = self.g
        self.lam = g.weight(highest_weight_element(g))
        self.ext = [v for v in x.sorted_members() if is_extremal_weight(g.weight(v), sort_decreasing(self.lam))]
        self.rank = g.rank

    def nz(self, v):
        """Nonzero in the induced crystal on X."""
        return v is not None and v in self.x

    def run(self) -> CheckResult:
        for cond in (self.cond4, self.cond5a, self.cond5b, self.cond6):
            res = cond()
            if not res:
                return res
        return _PASS

    def _pairs(self, far: bool):
        """Extremal ``u`` with two colors ``i != j`` and ``x = f_i^* u``, ``y = f_j^* u``."""
        g = self.g
        for u in self.ext:
            for i in range(1, self.rank + 1):
                if g.f(u, i) is None or g.e(u, i) is not None:
                    continue
                for j in range(1, self.rank + 1):
                    if j == i or (abs(i - j) >= 2) != far:
                        continue
                    if g.f(u, j) is None or g.e(u, j) is not None:
                        continue
                    yield u, i, j, g.f_star(u, i), g.f_star(u, j)

    def cond4(self) -> CheckResult:
        g, X = self.g, self.x
        for u, i, j, x, y in self._pairs(far=True):
            if u not in X or x not in X or y not in X:
                continue
            if not self.nz(g.f(x, j)) or not self.nz(g.f(y, i)):
                return CheckResult(False, "4", (x, y), (i, j))
            if abs(i - j) == 2:
                # forward implication only, read in the ambient crystal
                k = (i + j) // 2
                z = g.f_star(x, j)
                if g.f(x, k) is not None and g.f(y, k) is not None and g.f(z, k) is None:
                    return CheckResult(False, "4k", (x, y), (i, j, k))
        return _PASS

    def cond5a(self) -> CheckResult:
        g, X = self.g, self.x
        for x in self.ext:
            for i in range(1, self.rank + 1):
                for j in (i - 1, i + 1):
                    if not 1 <= j <= self.rank:
                        continue
                    if g.f(x, j) is None or g.e(x, j) is not None:
                        continue
                    mid = g.f_star(x, j)
                    if g.f(mid, i) is None or g.e(mid, i) is not None:
                        continue
                    y = g.f_star(mid, i)
                    if y not in X or x not in X:
                        continue
                    fx = g.f(x, i)
                    if fx is not None and fx not in X:
                        return CheckResult(False, "5a", (x, y), (i, j))
        return _PASS

    def cond5b(self) -> CheckResult:
        g, X = self.g, self.x
        for u, i, j, x, y in self._pairs(far=False):
            if x not in X or y not in X:
                continue
            a, b = g.f(y, i), g.f(x, j)
            a_in, b_in = a is not None and a in X, b is not None and b in X
            if not a_in and not b_in:
                return CheckResult(False, "5b", (x, y), (i, j))
            if a_in and b_in:
                p, q = g.f_star(g.f_star(x, j), i), g.f_star(g.f_star(y, i), j)
                if p != q or p not in X:
                    return CheckResult(False, "5b*", (x, y), (i, j))
        return _PASS

    def cond6(self) -> CheckResult:
        g, X = self.g, self.x
        n = self.rank + 1
        ident = tuple(range(1, n + 1))
        for u, i, j, x, _ in self._pairs(far=False):
            v = g.f_star(u, j)
            if g.f(v, i) is None or g.e(v, i) is not None:
                continue
            y = g.f_star(v, i)
            if x not in X or y not in X:
                continue
            # walk x and y along the same f* path; a path kept inside X from y
            # must also stay inside X from x
            seen = {(x, y, ident)}
            todo = deque([(x, y, ident, ())])
            while todo:
                a, b, sigma, path = todo.popleft()
                if path and b in X and not _left_descent(sigma, j) and a not in X:
                    return CheckResult(False, "6", (x, y), (i, j) + path)
                for k in range(1, self.rank + 1):
                    if g.f(a, k) is None:
                        continue
                    state = (g.f_star(a, k), g.f_star(b, k), compose(sigma, simple(k, n)))
                    if state not in seen:
                        seen.add(state)
                        todo.append(state + (path + (k,),))
        return _PASS


_demazure_cache: dict = {}


def check_demazure_subset(x: CrystalSubset) -> CheckResult:
    key = (id(x.ambient), x.members)
    hit = _demazure_cache.get(key)
    if hit is not None and hit[0] is x.ambient:
        return hit[1]
    res = check_extremal(x)
    if res:
        res = _Checker(x).run()
    _demazure_cache[key] = (x.ambient, res)
    return res


def all_demazure_crystals(lam, n: int) -> dict[Composition, CrystalSubset]:
    """``B_w(lambda)`` for every faithful ``w``, keyed by ``w . lambda``."""
    lam = pad_to(strip(lam), n)
    g = ssyt_crystal(strip(lam), n)
    out = {}
    from .combinatorics import permutations

    for w in permutations(n):
        a = act(w, lam)
        if a not in out and shortest_sorting_permutation(a) == w:
            out[a] = demazure_from_word(g, reduced_word(w))
    return out
