"""Weak compositions, partitions, permutations, orders and exact polynomials.

Compositions and partitions are plain tuples of ints.  A composition keeps
its length: ``(0, 3, 0, 2)`` and ``(3, 0, 2)`` are different values.
Permutations are one-line tuples on ``1..n``.
"""
from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

Composition = tuple[int, ...]
Permutation = tuple[int, ...]


# ---------------------------------------------------------------------------
# compositions and partitions

_COMP_RE = re.compile(r"^\s*\(?\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*,?\s*\)?\s*$")


def parse_composition(text: str) -> Composition:
    """Parse ``"(0,3,0,2)"`` (parentheses optional) into a tuple."""
    m = _COMP_RE.match(text)
    if not m:
        raise ValueError(f"not a composition: {text!r}")
    body = m.group(1)
    if body is None:
        return ()
    parts = tuple(int(p) for p in body.split(","))
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {text!r}")
    return parts


def format_composition(a) -> str:
    return "(" + ",".join(str(x) for x in a) + ")"


def check_composition(a) -> Composition:
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a):
        raise ValueError(f"negative part in {a}")
    return a


def sort_decreasing(a) -> Composition:
    """Partition rearrangement of ``a``, zero padded to the same length."""
    return tuple(sorted(a, reverse=True))


def reverse(a) -> Composition:
    return tuple(reversed(a))


def pad(m: int, a) -> Composition:
    """The composition ``0^m x a``."""
    return (0,) * m + tuple(a)


def pad_to(a, n: int) -> Composition:
    """Right pad a partition with zeros up to length ``n``."""
    a = tuple(a)
    if len(a) > n and any(a[n:]):
        raise ValueError(f"{a} has more than {n} nonzero parts")
    return (a + (0,) * n)[:n]


def strip(lam) -> Composition:
    lam = list(lam)
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


def is_partition(lam) -> bool:
    return all(lam[k] >= lam[k + 1] for k in range(len(lam) - 1)) and all(x >= 0 for x in lam)


def conjugate(lam) -> Composition:
    lam = strip(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > c) for c in range(lam[0]))


def n_stat(mu) -> int:
    """n(mu) = sum (i-1) mu_i."""
    return sum(i * x for i, x in enumerate(mu))


def partitions(total: int, max_part: int | None = None):
    """Partitions of ``total`` in reverse lexicographic order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def weak_compositions(total: int, length: int):
    """All weak compositions of ``total`` with exactly ``length`` parts."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, length - 1):
            yield (first,) + rest


def column_lengths(a) -> Composition:
    """Column lengths of the diagram of ``a``, as a partition."""
    return conjugate(sort_decreasing(a))


def dominance_leq(a, b) -> bool:
    """Prefix-sum dominance ``a <= b``."""
    if len(a) != len(b):
        raise ValueError("dominance needs equal lengths")
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def _bruhat_down(a):
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] < a[j]:
                b = list(a)
                b[i], b[j] = b[j], b[i]
                yield tuple(b)
            if a[i] - a[j] > 1:
                b = list(a)
                b[i], b[j] = a[j] + 1, a[i] - 1
                yield tuple(b)


def bruhat_leq(a, b) -> bool:
    """Bruhat order on compositions, closure of the two cover relations."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError("Bruhat order needs equal lengths")
    if sum(a) != sum(b):
        return False
    seen = {b}
    todo = deque([b])
    while todo:
        c = todo.popleft()
        if c == a:
            return True
        for d in _bruhat_down(c):
            if d not in seen:
                seen.add(d)
                todo.append(d)
    return False


bruhat_cover_leq = bruhat_leq


# ---------------------------------------------------------------------------
# permutations

def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def simple(i: int, n: int) -> Permutation:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def is_permutation(w) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def compose(u, v) -> Permutation:
    """``(u v)(k) = u(v(k))``."""
    return tuple(u[x - 1] for x in v)


def inverse(w) -> Permutation:
    inv = [0] * len(w)
    for k, x in enumerate(w, 1):
        inv[x - 1] = k
    return tuple(inv)


def length(w) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def from_word(word, n: int) -> Permutation:
    """The product ``s_{i_1} s_{i_2} ... s_{i_k}``."""
    w = identity(n)
    for i in word:
        w = compose(w, simple(i, n))
    return w


def act(w, lam) -> Composition:
    """``w . lam`` with ``(w . lam)_{w(i)} = lam_i``."""
    out = [0] * len(lam)
    for k, x in enumerate(lam):
        out[w[k] - 1] = x
    return tuple(out)


def shortest_sorting_permutation(a) -> Permutation:
    """The minimal length ``w`` with ``w . sort(a) = a``."""
    lam = sort_decreasing(a)
    slots: dict[int, list[int]] = {}
    for pos, x in enumerate(a, 1):
        slots.setdefault(x, []).append(pos)
    w = []
    for x in lam:
        w.append(slots[x].pop(0))
    return tuple(w)


def acts_faithfully(w, lam) -> bool:
    return tuple(w) == shortest_sorting_permutation(act(w, lam))


def reduced_word(w) -> tuple[int, ...]:
    """One reduced word, peeling off right descents."""
    w = list(w)
    word = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            break
    return tuple(reversed(word))


def reduced_words(w):
    """Every reduced word of ``w``."""
    w = tuple(w)
    if length(w) == 0:
        return [()]
    out = []
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            v = list(w)
            v[i], v[i + 1] = v[i + 1], v[i]
            out.extend(word + (i + 1,) for word in reduced_words(tuple(v)))
    return out


def weak_leq(u, v) -> bool:
    """Left weak order: ``v = x u`` with lengths adding."""
    return length(v) == length(compose(v, inverse(u))) + length(u)


def super_yamanouchi_word(w) -> tuple[tuple[int, ...], ...]:
    """Reduced word ``pi^(k)|...|pi^(1)`` split into interval blocks.

    Blocks are read left to right as written, so the last block acts first.
    Each block is an increasing run of consecutive integers and the block
    minima decrease from left to right.
    """
    w = tuple(w)
    n = len(w)

    def search(v):
        if length(v) == 0:
            return ()
        for i in range(1, n):
            for j in range(i, n):
                block = tuple(range(i, j + 1))
                c = from_word(block, n)
                u = compose(v, inverse(c))
                if length(u) != length(v) - len(block):
                    continue
                if any(u[k] != k + 1 for k in range(i)):
                    continue
                rest = search(u)
                if rest is not None:
                    return rest + (block,)
        return None

    blocks = search(w)
    if blocks is None:
        raise AssertionError(f"no super-Yamanouchi word for {w}")
    return blocks


def permutations(n: int):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


# ---------------------------------------------------------------------------
# polynomials

@dataclass(frozen=True)
class QPoly:
    """Integer polynomial in one formal variable; ``coeffs[k]`` is the q^k term."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = _as_qpoly(other)
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (m - len(self.coeffs))
        b = other.coeffs + (0,) * (m - len(other.coeffs))
        return QPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_qpoly(other))

    def __mul__(self, other):
        other = _as_qpoly(other)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, value):
        return sum(c * value ** k for k, c in enumerate(self.coeffs))

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def format(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            else:
                mono = f"{var}^{k}"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.format()


def _as_qpoly(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a q-polynomial")


class Poly:
    """Polynomial in ``x_1..x_n`` with ``QPoly`` coefficients.

    Exponent vectors are dense tuples of length ``n``; zero coefficients are
    never stored.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms: dict[tuple[int, ...], QPoly] = {}
        if terms:
            for e, c in dict(terms).items():
                self._add_term(tuple(e), _as_qpoly(c))

    def _add_term(self, e, c: QPoly):
        if len(e) != self.n:
            raise ValueError(f"exponent {e} is not of length {self.n}")
        s = self.terms.get(e, QPoly()) + c
        if s:
            self.terms[e] = s
        else:
            self.terms.pop(e, None)

    @classmethod
    def monomial(cls, e, c=1) -> "Poly":
        e = tuple(e)
        return cls(len(e), {e: c})

    @classmethod
    def one(cls, n: int) -> "Poly":
        return cls(n, {(0,) * n: 1})

    def copy(self) -> "Poly":
        p = Poly(self.n)
        p.terms = dict(self.terms)
        return p

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _check(self, other):
        if other.n != self.n:
            raise ValueError("polynomials in different numbers of variables")

    def __add__(self, other):
        self._check(other)
        p = self.copy()
        for e, c in other.terms.items():
            p._add_term(e, c)
        return p

    def __neg__(self):
        return Poly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, QPoly)):
            other = _as_qpoly(other)
            p = Poly(self.n)
            for e, c in self.terms.items():
                p._add_term(e, c * other)
            return p
        self._check(other)
        p = Poly(self.n)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                p._add_term(tuple(x + y for x, y in zip(e1, e2)), c1 * c2)
        return p

    __rmul__ = __mul__

    def swap(self, i: int) -> "Poly":
        """Apply ``s_i``: exchange ``x_i`` and ``x_{i+1}``."""
        p = Poly(self.n)
        for e, c in self.terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            p._add_term(tuple(e), c)
        return p

    def times_variable(self, i: int) -> "Poly":
        p = Poly(self.n)
        for e, c in self.terms.items():
            e = list(e)
            e[i - 1] += 1
            p.terms[tuple(e)] = c
        return p

    def divide_by_root(self, i: int) -> "Poly":
        """Exact quotient by ``x_i - x_{i+1}``; raises if not divisible."""
        groups: dict[tuple, dict[int, QPoly]] = {}
        for e, c in self.terms.items():
            key = e[: i - 1] + e[i + 1:]
            groups.setdefault(key, {})[(e[i - 1], e[i])] = c
        out = Poly(self.n)
        for key, coeffs in groups.items():
            # synthetic division in x_i with root x_{i+1}, one total degree at a time
            by_deg: dict[int, dict[int, QPoly]] = {}
            for (a, b), c in coeffs.items():
                by_deg.setdefault(a + b, {})[a] = c
            for d, row in by_deg.items():
                carry = QPoly()
                for a in range(d, 0, -1):
                    carry = carry + row.get(a, QPoly())
                    if carry:
                        e = key[: i - 1] + (a - 1, d - a) + key[i - 1:]
                        out._add_term(e, carry)
                if carry + row.get(0, QPoly()):
                    raise ArithmeticError(f"not divisible by x_{i} - x_{i + 1}")
        return out

    def specialize_q(self, value: int) -> "Poly":
        return Poly(self.n, {e: c(value) for e, c in self.terms.items() if c(value)})

    def truncate(self, m: int) -> "Poly":
        """Set ``x_{m+1}, ..., x_n`` to zero, leaving a polynomial in ``m`` variables."""
        p = Poly(m)
        for e, c in self.terms.items():
            if not any(e[m:]):
                p._add_term(e[:m], c)
        return p

    def coefficient(self, e) -> QPoly:
        return self.terms.get(tuple(e), QPoly())

    def is_symmetric(self) -> bool:
        return all(self.swap(i) == self for i in range(1, self.n))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: tuple(-x for x in t[0]))

    def __repr__(self):
        return f"Poly({self.n}, {self.format()})"

    def format(self, var: str = "q") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{k}" if x == 1 else f"x{k}^{x}" for k, x in enumerate(e, 1) if x
            )
            coeff = c.format(var)
            if not mono:
                parts.append(coeff)
            elif coeff == "1":
                parts.append(mono)
            elif len(c.coeffs) - c.coeffs.count(0) == 1 and "-" not in coeff:
                parts.append(f"{coeff}*{mono}")
            else:
                parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)


def monomial_count(p: Poly) -> int:
    """Sum of coefficients at q = 1 (number of monomials with multiplicity)."""
    return sum(c(1) for c in p.terms.values())


@lru_cache(maxsize=None)
def weak_compositions_upto(max_total: int, max_length: int) -> tuple[Composition, ...]:
    out = []
    for n in range(1, max_length + 1):
        for total in range(max_total + 1):
            out.extend(weak_compositions(total, n))
    return tuple(out)
