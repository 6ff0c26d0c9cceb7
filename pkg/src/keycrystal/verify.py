"""Exhaustive property suites shared by the CLI and the test-suite."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import ssyt
from .combinatorics import (
    partitions,
    reduced_word,
    shortest_sorting_permutation,
    strip,
    weak_compositions,
)
from .demazure import (
    CrystalSubset,
    all_demazure_crystals,
    check_demazure_subset,
    demazure_from_word,
    demazure_lowest_Z,
    key_polynomial,
)
from .diagrams import aries, rectify, tabloid_diagram, vertical_raise
from .expansions import (
    check_lowest_weights,
    check_master_identity,
    kostka_foulkes_charge,
    kostka_foulkes_maj,
)
from .tabloid_crystal import lower_op, pairing, raise_op, tabloid_crystal
from .tabloids import enumerate_sskd, maj


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, **info):
        self.failures.append(info)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "checked": self.checked,
            "failures": self.failures[:20],
            "failure_count": len(self.failures),
        }


def shapes(max_size: int = 6, max_length: int = 5):
    """Weak compositions with at most ``max_size`` cells and ``1..max_length`` parts."""
    for n in range(1, max_length + 1):
        for size in range(max_size + 1):
            yield from weak_compositions(size, n)


def suite_pairing(max_size: int, max_length: int = 5) -> SuiteReport:
    """Pairing partitions the i and i+1 cells, and string lengths match the weight."""
    rep = SuiteReport("pairing")
    for b in shapes(max_size, max_length):
        for t in enumerate_sskd(b):
            wt = t.weight()
            for i in range(1, len(b)):
                p = pairing(t, i)
                rep.checked += 1
                lows = len(p.same_column) + len(p.matched) + len(p.unpaired_low)
                highs = len(p.same_column) + len(p.matched) + len(p.unpaired_high)
                if lows != wt[i - 1] or highs != wt[i]:
                    rep.fail(tabloid=str(t), color=i)
    return rep


def suite_operators(max_size: int, max_length: int = 5) -> SuiteReport:
    """e_i and f_i are mutually inverse, keep validity, shift weight and keep maj."""
    rep = SuiteReport("operators")
    for b in shapes(max_size, max_length):
        verts = set(enumerate_sskd(b))
        for t in verts:
            for i in range(1, len(b)):
                rep.checked += 1
                up = raise_op(t, i)
                if up is not None:
                    if up not in verts or lower_op(up, i) != t or maj(up) != maj(t):
                        rep.fail(tabloid=str(t), color=i, op="e")
                    wt, wu = list(t.weight()), list(up.weight())
                    wt[i - 1] += 1
                    wt[i] -= 1
                    if wt != wu:
                        rep.fail(tabloid=str(t), color=i, op="weight")
                down = lower_op(t, i)
                if down is not None and (down not in verts or raise_op(down, i) != t):
                    rep.fail(tabloid=str(t), color=i, op="f")
    return rep


def suite_commute(max_size: int, max_length: int = 5) -> SuiteReport:
    """Raising commutes with the diagram map, rectification and the tableau map."""
    rep = SuiteReport("commute")
    for b in shapes(max_size, max_length):
        for t in enumerate_sskd(b):
            d = tabloid_diagram(t)
            a = aries(t)
            for i in range(1, len(b)):
                rep.checked += 1
                up = raise_op(t, i)
                moved = vertical_raise(d, i)
                if (up is None) != (moved is None):
                    rep.fail(tabloid=str(t), color=i, check="diagram")
                    continue
                if up is None:
                    if ssyt.raise_op(a, i) is not None:
                        rep.fail(tabloid=str(t), color=i, check="aries-null")
                    continue
                if tabloid_diagram(up) != moved:
                    rep.fail(tabloid=str(t), color=i, check="diagram")
                rd = rectify(d)
                if vertical_raise(rd, i) != rectify(moved):
                    rep.fail(tabloid=str(t), color=i, check="rect")
                if aries(up) != ssyt.raise_op(a, i):
                    rep.fail(tabloid=str(t), color=i, check="aries")
    return rep


def suite_axioms(max_size: int, n: int = 4, max_length: int = 5) -> SuiteReport:
    """Every B_w(lambda) passes the Demazure checker with the right character;
    Aries images of tabloid components are Demazure crystals."""
    rep = SuiteReport("axioms")
    for size in range(max_size + 1):
        for lam in partitions(size):
            if len(lam) > n:
                continue
            for a, x in all_demazure_crystals(lam, n).items():
                rep.checked += 1
                res = check_demazure_subset(x)
                if not res:
                    rep.fail(lam=list(lam), key=list(a), witness=res.to_json())
                if x.character() != key_polynomial(a):
                    rep.fail(lam=list(lam), key=list(a), check="character")
    cache: dict = {}
    for b in shapes(max_size, max_length):
        crystal = tabloid_crystal(b)
        nb = len(b)
        for comp in crystal.components:
            rep.checked += 1
            members = frozenset(comp.vertices)
            image = frozenset(aries(t) for t in comp.vertices)
            lam = strip(aries(comp.highest_weight).weight(nb))
            g = ssyt.ssyt_crystal(lam, nb)
            z = demazure_lowest_Z(crystal.graph, members, comp.highest_weight)
            w = shortest_sorting_permutation(z.weight())
            key = (lam, nb, w)
            if key not in cache:
                cache[key] = demazure_from_word(g, reduced_word(w))
            if len(image) != len(members) or cache[key].members != image:
                rep.fail(shape=list(b), highest=str(comp.highest_weight), check="image")
            elif not check_demazure_subset(CrystalSubset(g, image)):
                rep.fail(shape=list(b), highest=str(comp.highest_weight), check="axioms")
    return rep


def suite_expansions(max_size: int, max_length: int = 5) -> SuiteReport:
    """Master identity, positivity and Z against the exhaustive lowest weight scan."""
    rep = SuiteReport("expansions")
    for b in shapes(max_size, max_length):
        rep.checked += 1
        if not check_master_identity(b):
            rep.fail(shape=list(b), check="identity")
        if not check_lowest_weights(b):
            rep.fail(shape=list(b), check="lowest")
    return rep


def suite_kostka(max_size: int) -> SuiteReport:
    """Charge and maj give the same Kostka-Foulkes polynomials."""
    rep = SuiteReport("kostka")
    for size in range(1, max_size + 1):
        for lam in partitions(size):
            for mu in partitions(size):
                rep.checked += 1
                a, b = kostka_foulkes_charge(lam, mu), kostka_foulkes_maj(lam, mu)
                if a != b:
                    rep.fail(lam=list(lam), mu=list(mu), charge=list(a.coeffs), maj=list(b.coeffs))
    return rep


SUITES = {
    "pairing": suite_pairing,
    "operators": suite_operators,
    "commute": suite_commute,
    "axioms": suite_axioms,
    "expansions": suite_expansions,
    "kostka": suite_kostka,
}
