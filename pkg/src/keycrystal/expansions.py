"""Demazure and Schur expansions of E_b(X;q,0), charge and Kostka-Foulkes polynomials."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .combinatorics import (
    Composition,
    Poly,
    QPoly,
    check_composition,
    column_lengths,
    conjugate,
    format_composition,
    is_partition,
    n_stat,
    pad,
    pad_to,
    partitions,
    sort_decreasing,
    strip,
)
from .demazure import demazure_lowest_Z, key_polynomial, scan_lowest_weights
from .ssyt import YoungTableau, enumerate_ssyt, insertion_tableau
from .tabloid_crystal import highest_weight_tabloids, tabloid_crystal
from .tabloids import generating_function, maj


def macdonald_q0(b) -> Poly:
    """``E_b(X;q,0)`` as the maj generating function of key tabloids."""
    return generating_function(b)


@dataclass
class DemazureExpansion:
    shape: Composition
    terms: list[tuple[int, Composition]]
    coefficients: dict[Composition, QPoly] = field(default_factory=dict)

    def __post_init__(self):
        if not self.coefficients:
            for k, a in self.terms:
                self.coefficients[a] = self.coefficients.get(a, QPoly()) + QPoly.monomial(k)

    def ordered_keys(self) -> list[Composition]:
        """Keys by lowest q power, then sort(a) and a, both lexicographically decreasing."""
        def order(a):
            c = self.coefficients[a].coeffs
            low = next(k for k, x in enumerate(c) if x)
            return (low, tuple(-x for x in sort_decreasing(a)), tuple(-x for x in a))

        return sorted(self.coefficients, key=order)

    def polynomial(self) -> Poly:
        n = len(self.shape)
        p = Poly(n)
        for a, c in self.coefficients.items():
            p = p + key_polynomial(a) * c
        return p

    def is_multiplicity_free(self) -> bool:
        return all(sum(c.coeffs) == 1 for c in self.coefficients.values())

    def is_positive(self) -> bool:
        return all(c.is_nonnegative() for c in self.coefficients.values())

    def format(self, var: str = "q") -> str:
        parts = []
        for a in self.ordered_keys():
            c = self.coefficients[a]
            coeff = c.format(var)
            key = f"k{format_composition(a)}"
            if coeff == "1":
                parts.append(key)
            elif sum(1 for x in c.coeffs if x) == 1 and "-" not in coeff:
                parts.append(f"{coeff}*{key}")
            else:
                parts.append(f"({coeff})*{key}")
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {
            "shape": format_composition(self.shape),
            "terms": [{"q": k, "key": format_composition(a)} for k, a in self.terms],
            "aggregated": {
                format_composition(a): list(self.coefficients[a].coeffs) for a in self.ordered_keys()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


@lru_cache(maxsize=None)
def _expansion(b: Composition) -> DemazureExpansion:
    crystal = tabloid_crystal(b)
    g = crystal.graph
    terms = []
    for comp in crystal.components:
        z = demazure_lowest_Z(g, frozenset(comp.vertices), comp.highest_weight)
        terms.append((comp.maj, z.weight()))
    terms.sort(key=lambda t: (t[0], tuple(-x for x in t[1])))
    return DemazureExpansion(b, terms)


def demazure_expansion(b) -> DemazureExpansion:
    return _expansion(check_composition(b))


def check_master_identity(b) -> bool:
    b = check_composition(b)
    exp = demazure_expansion(b)
    return exp.is_positive() and exp.polynomial() == macdonald_q0(b)


def check_lowest_weights(b) -> bool:
    """The composite lowering run agrees with an exhaustive scan on every component."""
    crystal = tabloid_crystal(check_composition(b))
    g = crystal.graph
    for comp in crystal.components:
        members = frozenset(comp.vertices)
        z = demazure_lowest_Z(g, members, comp.highest_weight)
        if scan_lowest_weights(g, members).demazure_lowest != z:
            return False
    return True


def is_weakly_increasing(b) -> bool:
    return all(b[k] <= b[k + 1] for k in range(len(b) - 1))


def schur_expansion_of_full_crystal(b) -> dict[Composition, QPoly]:
    """Per component ``q^maj s_wt(highest)``; needs ``b`` weakly increasing."""
    b = check_composition(b)
    if not is_weakly_increasing(b):
        raise ValueError(f"{format_composition(b)} is not weakly increasing")
    out: dict[Composition, QPoly] = {}
    for comp in tabloid_crystal(b).components:
        lam = strip(comp.highest_weight.weight())
        out[lam] = out.get(lam, QPoly()) + QPoly.monomial(comp.maj)
    return out


def schur_form(exp: DemazureExpansion) -> dict[Composition, QPoly]:
    """Rewrite ``kappa_rev(lambda)`` as ``s_lambda``; every key must be weakly increasing."""
    out: dict[Composition, QPoly] = {}
    for a, c in exp.coefficients.items():
        if not is_weakly_increasing(a):
            raise ValueError(f"key {format_composition(a)} is not a Schur polynomial")
        lam = strip(tuple(reversed(a)))
        out[lam] = out.get(lam, QPoly()) + c
    return out


def omega_on_schur_expansion(expansion: dict[Composition, QPoly]) -> dict[Composition, QPoly]:
    return {conjugate(lam): c for lam, c in expansion.items()}


def format_schur(expansion: dict[Composition, QPoly], var: str = "q") -> str:
    parts = []
    for lam in sorted(expansion, reverse=True):
        c = expansion[lam]
        coeff = c.format(var)
        s = "s" + format_composition(lam)
        if coeff == "1":
            parts.append(s)
        elif sum(1 for x in c.coeffs if x) == 1:
            parts.append(f"{coeff}*{s}")
        else:
            parts.append(f"({coeff})*{s}")
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# charge

def _partition_weight(t: YoungTableau) -> Composition:
    word = t.reading_word()
    top = max(word, default=0)
    wt = tuple(word.count(x) for x in range(1, top + 1))
    if not is_partition(wt) or (wt and wt[-1] == 0):
        raise ValueError(f"tableau {t} does not have partition weight")
    return wt


def charge(t: YoungTableau) -> int:
    """Lascoux-Schutzenberger charge via cyclic extraction of standard subwords."""
    _partition_weight(t)
    word = list(t.reading_word())
    used = [False] * len(word)
    total = 0
    while not all(used):
        letters = sorted({x for x, u in zip(word, used) if not u})
        pos = len(word)
        index = 0
        for k, letter in enumerate(letters):
            if letter != k + 1:
                raise AssertionError("remaining letters are not an initial segment")
            found = None
            for p in range(pos - 1, -1, -1):
                if not used[p] and word[p] == letter:
                    found = p
                    break
            if found is None:
                for p in range(len(word) - 1, pos, -1):
                    if not used[p] and word[p] == letter:
                        found = p
                        break
                if k:
                    index += 1
            used[found] = True
            total += index
            pos = found
    return total


def cocharge_by_cyclage(t: YoungTableau) -> int:
    """Count cyclages ``x v -> P(v x)`` until a single row is reached."""
    _partition_weight(t)
    steps = 0
    while len(t.rows) > 1:
        word = t.reading_word()
        if word[0] == 1:
            raise AssertionError("cyclage needs a first letter other than 1")
        t = insertion_tableau(word[1:] + word[:1])
        steps += 1
        if steps > 10_000:
            raise AssertionError("cyclage did not terminate")
    return steps


def tableaux_of_weight(lam, mu) -> list[YoungTableau]:
    mu = strip(mu)
    return [t for t in enumerate_ssyt(lam, len(mu)) if t.weight(len(mu)) == mu]


def kostka_foulkes_charge(lam, mu) -> QPoly:
    lam, mu = strip(lam), strip(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different sizes")
    out = QPoly()
    for t in tableaux_of_weight(lam, mu):
        out = out + QPoly.monomial(charge(t))
    return out


def min_padding(mu) -> int:
    mu = strip(mu)
    return sum(mu) - (mu[0] if mu else 0)


@lru_cache(maxsize=None)
def _hw_by_weight(shape: Composition) -> dict[Composition, QPoly]:
    out: dict[Composition, QPoly] = {}
    for t in highest_weight_tabloids(shape):
        out[t.weight()] = out.get(t.weight(), QPoly()) + QPoly.monomial(maj(t))
    return out


def kostka_foulkes_maj(lam, mu, m: int | None = None) -> QPoly:
    """``t^maj`` over highest weight tabloids of shape ``0^m x rev(mu')`` with weight ``lam'``."""
    lam, mu = strip(lam), strip(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different sizes")
    if m is None:
        m = min_padding(mu)
    if m < min_padding(mu):
        raise ValueError(f"m must be at least {min_padding(mu)}")
    shape = pad(m, tuple(reversed(conjugate(mu))))
    target = conjugate(lam)
    if len(target) > len(shape):
        return QPoly()
    return _hw_by_weight(shape).get(pad_to(target, len(shape)), QPoly())


def hall_littlewood_expansion(mu) -> dict[Composition, QPoly]:
    """``H_mu(X;t) = sum K_{lam,mu}(t) s_lam``."""
    mu = strip(mu)
    out = {}
    for lam in partitions(sum(mu)):
        c = kostka_foulkes_charge(lam, mu)
        if c:
            out[lam] = c
    return out


@dataclass
class RefinementReport:
    ok: bool
    mu: Composition
    m: int
    rows: list[tuple[Composition, QPoly, QPoly]]
    stable: bool | None = None

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "mu": format_composition(self.mu),
            "m": self.m,
            "stable": self.stable,
            "rows": [
                {"lambda": format_composition(lam), "charge": list(a.coeffs), "keys": list(b.coeffs)}
                for lam, a, b in self.rows
            ],
        }


def refinement_padding(b) -> int:
    """Default padding ``m = |b|``, enough room for every conjugate partition."""
    return sum(b)


def _refinement_rows(b: Composition, m: int):
    mu = column_lengths(b)
    exp = demazure_expansion(pad(m, b))
    grouped: dict[Composition, QPoly] = {}
    for a, c in exp.coefficients.items():
        lam = conjugate(sort_decreasing(a))
        grouped[lam] = grouped.get(lam, QPoly()) + c
    rows = []
    for lam in partitions(sum(b)):
        if len(conjugate(lam)) > len(b) + m:
            continue
        lhs = kostka_foulkes_charge(lam, mu) if mu else QPoly.const(1)
        rows.append((lam, lhs, grouped.get(lam, QPoly())))
    return mu, rows


def kf_refinement_check(b, m: int | None = None, probe: bool = False) -> RefinementReport:
    """Compare ``K_{lam,mu}(t)`` with the key coefficients of ``0^m x b`` grouped by ``sort(a)``.

    With ``probe`` the right hand side is recomputed at ``m + 1`` and must not change.
    """
    b = check_composition(b)
    if m is None:
        m = refinement_padding(b)
    mu, rows = _refinement_rows(b, m)
    ok = all(lhs == rhs for _, lhs, rhs in rows)
    stable = None
    if probe:
        stable = _refinement_rows(b, m + 1)[1] == rows
        ok = ok and stable
    return RefinementReport(ok, mu, m, rows, stable)
