"""A small finite crystal graph container shared by tabloids and tableaux."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Generic, Hashable, TypeVar

from .combinatorics import Composition, Poly, QPoly

V = TypeVar("V", bound=Hashable)


@dataclass
class CrystalGraph(Generic[V]):
    """Vertices with colored lowering edges ``f_i`` for ``i = 1..rank``.

    ``lower[i][u] = v`` means ``f_i(u) = v``; a missing key means zero.
    """

    rank: int
    vertices: list
    weight_of: Callable[[V], Composition]
    lower: dict[int, dict[V, V]] = field(default_factory=dict)
    raise_: dict[int, dict[V, V]] = field(default_factory=dict)

    def __post_init__(self):
        self.index = {v: k for k, v in enumerate(self.vertices)}
        for i in range(1, self.rank + 1):
            self.lower.setdefault(i, {})
            self.raise_.setdefault(i, {})

    @classmethod
    def build(cls, vertices, rank, weight_of, f_op, e_op=None) -> "CrystalGraph":
        """Tabulate ``f_op`` (and check it against ``e_op`` when given)."""
        g = cls(rank, list(vertices), weight_of)
        members = set(g.vertices)
        for i in range(1, rank + 1):
            for v in g.vertices:
                u = f_op(v, i)
                if u is None:
                    continue
                if u not in members:
                    raise AssertionError(f"f_{i} leaves the vertex set at {v}")
                g.lower[i][v] = u
                if u in g.raise_[i]:
                    raise AssertionError(f"f_{i} is not injective at {u}")
                g.raise_[i][u] = v
            if e_op is not None:
                for v in g.vertices:
                    if e_op(v, i) != g.raise_[i].get(v):
                        raise AssertionError(f"e_{i} is not the inverse of f_{i} at {v}")
        return g

    def f(self, v, i):
        return self.lower[i].get(v)

    def e(self, v, i):
        return self.raise_[i].get(v)

    def phi(self, v, i) -> int:
        k = 0
        while (v := self.lower[i].get(v)) is not None:
            k += 1
        return k

    def eps(self, v, i) -> int:
        k = 0
        while (v := self.raise_[i].get(v)) is not None:
            k += 1
        return k

    def f_star(self, v, i):
        while (u := self.lower[i].get(v)) is not None:
            v = u
        return v

    def e_star(self, v, i):
        while (u := self.raise_[i].get(v)) is not None:
            v = u
        return v

    def weight(self, v) -> Composition:
        return self.weight_of(v)

    def edges(self):
        for i in range(1, self.rank + 1):
            for u, v in self.lower[i].items():
                yield u, i, v

    def components(self) -> list[list]:
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, _, v in self.edges():
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups: dict = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        comps = list(groups.values())
        comps.sort(key=lambda c: self.index[c[0]])
        return comps

    def is_highest_weight(self, v) -> bool:
        return all(v not in self.raise_[i] for i in range(1, self.rank + 1))

    def highest_weights(self, subset=None) -> list:
        verts = self.vertices if subset is None else subset
        return [v for v in verts if self.is_highest_weight(v)]

    def character(self, subset=None, n: int | None = None) -> Poly:
        verts = self.vertices if subset is None else subset
        n = self.rank + 1 if n is None else n
        p = Poly(n)
        for v in verts:
            p._add_term(tuple(self.weight(v)), QPoly.const(1))
        return p

    def subgraph(self, subset) -> "CrystalGraph":
        keep = set(subset)
        g = CrystalGraph(self.rank, [v for v in self.vertices if v in keep], self.weight_of)
        for u, i, v in self.edges():
            if u in keep and v in keep:
                g.lower[i][u] = v
                g.raise_[i][v] = u
        return g

    def to_json(self, label: Callable[[V], str] = str, extra: Callable[[V], dict] | None = None) -> str:
        vertices = []
        for k, v in enumerate(self.vertices):
            entry = {"id": k, "label": label(v), "weight": list(self.weight(v))}
            if extra is not None:
                entry.update(extra(v))
            vertices.append(entry)
        data = {
            "rank": self.rank,
            "vertices": vertices,
            "edges": [
                {"source": self.index[u], "color": i, "target": self.index[v]}
                for u, i, v in sorted(self.edges(), key=lambda t: (t[1], self.index[t[0]]))
            ],
        }
        return json.dumps(data, indent=2, sort_keys=True)

    def to_dot(
        self,
        label: Callable[[V], str] = str,
        name: str = "crystal",
        tooltip: Callable[[V], str] | None = None,
    ) -> str:
        """Graphviz source; edges carry ``class="c<i>"`` and a fixed colour per ``i``."""
        colors = ["red", "blue", "darkgreen", "orange", "purple", "brown", "black"]

        def quote(text):
            return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'

        lines = [f"digraph {name} {{"]
        for k, v in enumerate(self.vertices):
            tip = tooltip(v) if tooltip else "wt=" + ",".join(map(str, self.weight(v)))
            lines.append(f"  v{k} [label={quote(label(v))}, tooltip={quote(tip)}];")
        for u, i, v in sorted(self.edges(), key=lambda t: (t[1], self.index[t[0]])):
            color = colors[(i - 1) % len(colors)]
            lines.append(
                f'  v{self.index[u]} -> v{self.index[v]} [label="{i}", class="c{i}", color={color}];'
            )
        lines.append("}")
        return "\n".join(lines)


def standard_crystal(n: int) -> CrystalGraph:
    """The crystal ``1 -> 2 -> ... -> n`` of single letters."""
    def wt(v):
        w = [0] * n
        w[v - 1] = 1
        return tuple(w)

    return CrystalGraph.build(
        list(range(1, n + 1)), n - 1, wt, lambda v, i: v + 1 if v == i else None
    )


def tensor_product(b1: CrystalGraph, b2: CrystalGraph) -> CrystalGraph:
    """Tensor product with ``f_i`` acting on the left factor iff ``eps_i(b2) < phi_i(b1)``."""
    if b1.rank != b2.rank:
        raise ValueError("tensor factors must have the same rank")
    verts = [(x, y) for x in b1.vertices for y in b2.vertices]

    def wt(v):
        return tuple(p + q for p, q in zip(b1.weight(v[0]), b2.weight(v[1])))

    def f_op(v, i):
        x, y = v
        if b2.eps(y, i) < b1.phi(x, i):
            u = b1.f(x, i)
            return None if u is None else (u, y)
        u = b2.f(y, i)
        return None if u is None else (x, u)

    return CrystalGraph.build(verts, b1.rank, wt, f_op)
