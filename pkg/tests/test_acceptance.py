"""The eight acceptance criteria, timed, one PASS/FAIL line each.

Run with pytest (lines appear in the terminal summary) or directly:
``python tests/test_acceptance.py``.
"""
import contextlib
import io
import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from keycrystal.cli import main  # noqa: E402
from keycrystal.combinatorics import Poly, QPoly, partitions  # noqa: E402
from keycrystal.demazure import key_polynomial  # noqa: E402
from keycrystal.diagrams import aries, diagram_weight, kohnert_diagrams  # noqa: E402
from keycrystal.expansions import charge, check_master_identity, demazure_expansion, tableaux_of_weight  # noqa: E402
from keycrystal.ssyt import enumerate_ssyt, lower_op as ssyt_lower  # noqa: E402
from keycrystal.tabloid_crystal import tabloid_crystal  # noqa: E402
from keycrystal.tabloids import enumerate_sskd, generating_function  # noqa: E402
from keycrystal.verify import shapes, suite_axioms, suite_commute, suite_kostka, suite_operators  # noqa: E402
from keycrystal.expansions import check_lowest_weights  # noqa: E402

from fixtures import (  # noqa: E402
    CRYSTAL_0122,
    CRYSTAL_0122_EDGES,
    CRYSTAL_1112,
    CRYSTAL_1211,
    COMPONENT_SUMMARY,
    KAPPA_1202,
    LADDER_4123,
    LADDER_EDGES,
    SSKD_0212,
    SSYT_221,
    tab,
    yt,
)

CRITERIA = {}
RESULTS = {}


def criterion(number, title, limit):
    def register(fn):
        CRITERIA[number] = (title, limit, fn)
        return fn
    return register


def cli(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


@criterion(1, "enumeration goldens", 1.0)
def enumeration():
    bad = []
    sskd = enumerate_sskd((0, 2, 1, 2))
    if len(sskd) != 20 or set(sskd) != {tab((0, 2, 1, 2), r4=a, r3=b, r2=c) for a, b, c in SSKD_0212}:
        bad.append(f"SSKD(0,2,1,2) has {len(sskd)} elements or differs from the golden list")
    ssyt = enumerate_ssyt((2, 2, 1), 4)
    if len(ssyt) != 20 or set(ssyt) != {yt(s) for s in SSYT_221.values()}:
        bad.append(f"SSYT_4(2,2,1) has {len(ssyt)} elements or differs from the golden list")
    return bad


@criterion(2, "key (1,2,0,2): divided differences = golden = Kohnert = maj 0 tabloids", 1.0)
def three_way():
    want = Poly(4)
    for e in KAPPA_1202:
        want = want + Poly.monomial(e)
    kohnert = Poly(4)
    for d in kohnert_diagrams((1, 2, 0, 2)):
        kohnert = kohnert + Poly.monomial(diagram_weight(d, 4))
    crystal = tabloid_crystal((1, 2, 0, 2))
    maj0 = Poly(4)
    for comp in crystal.components:
        if comp.maj == 0:
            maj0 = maj0 + crystal.graph.character(comp.vertices)
    texts = {name: p.format() for name, p in [
        ("golden", want), ("divided differences", key_polynomial((1, 2, 0, 2))),
        ("Kohnert", kohnert), ("maj 0", maj0),
    ]}
    if len(set(texts.values())) != 1:
        return [f"{k}: {v}" for k, v in texts.items()]
    return []


EXPAND_0302 = "k(0,3,0,2) + q*k(0,3,1,1) + q*k(0,2,1,2) + q^2*k(0,1,2,2) + q^2*k(1,2,1,1) + q^3*k(1,1,1,2)"
EXPAND_00023 = "k(0,0,0,2,3) + q*k(0,0,1,1,3) + (q + q^2)*k(0,0,1,2,2) + (q^2 + q^3)*k(0,1,1,1,2) + q^4*k(1,1,1,1,1)"
SCHUR_00023 = "s(3,2) + q*s(3,1,1) + (q + q^2)*s(2,2,1) + (q^2 + q^3)*s(2,1,1,1) + q^4*s(1,1,1,1,1)"


@criterion(3, "expand (0,3,0,2) and (0,0,0,2,3) with Schur form", 5.0)
def expansions():
    bad = []
    code, out = cli("expand", "(0,3,0,2)")
    if code or out != EXPAND_0302 + "\n":
        bad.append(f"expand (0,3,0,2) gave {out!r}")
    code, out = cli("expand", "(0,0,0,2,3)", "--schur")
    if code or out != EXPAND_00023 + "\n" + SCHUR_00023 + "\n":
        bad.append(f"expand (0,0,0,2,3) --schur gave {out!r}")
    return bad


@criterion(4, "master identity and positivity, |b| <= 6, length <= 5", 600.0)
def master_identity():
    bad = []
    count = 0
    for b in shapes(6, 5):
        count += 1
        if not demazure_expansion(b).is_positive():
            bad.append(f"negative coefficient for {b}")
        if not check_master_identity(b):
            bad.append(f"identity fails for {b}")
    if count < 300:
        bad.append(f"only {count} shapes")
    return bad


@criterion(5, "Kostka-Foulkes charge = maj for n <= 6; weight (2,2,1) charges", 300.0)
def kostka():
    bad = [str(f) for f in suite_kostka(6).failures]
    charges = sorted(charge(t) for lam in partitions(5) for t in tableaux_of_weight(lam, (2, 2, 1)))
    if charges != [0, 1, 1, 2, 2, 3, 4]:
        bad.append(f"weight (2,2,1) charges {charges}")
    return bad


@criterion(6, "operators, maj, diagram, rectification and Aries commute, |b| <= 6", 600.0)
def commutation():
    ops = suite_operators(6)
    com = suite_commute(6)
    return [str(f) for f in ops.failures + com.failures]


@criterion(7, "axiom checker on B_w, Aries images, Z vs exhaustive lowest weight", 900.0)
def axioms():
    rep = suite_axioms(6, n=4)
    bad = [str(f) for f in rep.failures]
    for b in shapes(6, 5):
        if not check_lowest_weights(b):
            bad.append(f"Z disagrees with the scan on {b}")
    return bad


@criterion(8, "crystals of (0,3,0,2) and the commuting ladder", None)
def crystals_0302():
    shape = (0, 3, 0, 2)
    crystal = tabloid_crystal(shape)
    g = crystal.graph
    by_hw = {c.highest_weight: c for c in crystal.components}
    bad = []

    def t(rows):
        return tab(shape, r4=rows[0], r2=rows[1])

    def edges_of(vertices):
        return {(v.serialize(), g.f(v, i).serialize(), i)
                for v in vertices for i in (1, 2, 3) if g.f(v, i) is not None}

    def compare(name, vertices, edges):
        comp = by_hw.get(vertices[0])
        if comp is None:
            bad.append(f"{name}: highest weight not found")
            return
        if {v.serialize() for v in comp.vertices} != {v.serialize() for v in vertices}:
            bad.append(f"{name}: vertex set differs")
        want = {(vertices[s].serialize(), vertices[e].serialize(), i) for s, e, i in edges}
        if edges_of(comp.vertices) != want:
            bad.append(f"{name}: edges differ")

    compare("(1,1,1,2)", [t(v) for v in CRYSTAL_1112["vertices"]], CRYSTAL_1112["edges"])
    compare("(1,2,1,1)", [t(v) for v in CRYSTAL_1211["vertices"]], CRYSTAL_1211["edges"])
    order = sorted(CRYSTAL_0122, key=lambda k: (-k[1], k[0]))
    compare(
        "(0,1,2,2)",
        [t(CRYSTAL_0122[k]) for k in order],
        [(order.index(s), order.index(e), i) for i, es in CRYSTAL_0122_EDGES.items() for s, e in es],
    )
    ladder = [t(rows) for rows, *_ in LADDER_4123]
    compare("(0,3,1,1)", ladder, [(s - 1, e - 1, i) for i, s, e in LADDER_EDGES])

    total = Poly(4)
    for rows, weight, key in COMPONENT_SUMMARY:
        comp = by_hw.get(t(rows))
        if comp is None:
            bad.append(f"component {key}: highest weight missing")
            continue
        if comp.highest_weight.weight() != weight:
            bad.append(f"component {key}: highest weight has weight {comp.highest_weight.weight()}")
        char = g.character(comp.vertices)
        if char != key_polynomial(key):
            bad.append(f"component {key}: character is not the key polynomial")
        total = total + char * QPoly.monomial(comp.maj)
    if len(COMPONENT_SUMMARY) != len(crystal.components) or total != generating_function(shape):
        bad.append("graded characters do not sum to E_(0,3,0,2)(X;q,0)")

    for rows, d, rd, y in LADDER_4123:
        if aries(t(rows)).serialize() != yt(y).serialize():
            bad.append(f"Aries image of {rows} is {aries(t(rows)).serialize()}")
    for i, s, e in LADDER_EDGES:
        if ssyt_lower(aries(ladder[s - 1]), i) != aries(ladder[e - 1]):
            bad.append(f"ladder edge {i}: {s} -> {e} does not commute")
    return bad


def run_criterion(number):
    title, limit, fn = CRITERIA[number]
    start = time.perf_counter()
    failures = fn()
    seconds = time.perf_counter() - start
    ok = not failures and (limit is None or seconds <= limit)
    limit_text = f" (limit {limit:g} s)" if limit is not None else ""
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {title} [{seconds:.2f} s{limit_text}]"
    RESULTS[number] = line
    return ok, failures, seconds, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, failures, seconds, line = run_criterion(number)
    print(line)
    assert not failures, failures[:10]
    limit = CRITERIA[number][1]
    assert limit is None or seconds <= limit, line


if __name__ == "__main__":
    all_ok = True
    for n in sorted(CRITERIA):
        ok, failures, _, line = run_criterion(n)
        print(line, flush=True)
        for f in failures[:10]:
            print("   ", f)
        all_ok = all_ok and ok
    sys.exit(0 if all_ok else 1)
