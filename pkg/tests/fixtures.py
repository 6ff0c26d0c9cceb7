"""Hand-transcribed golden data."""
from keycrystal.diagrams import diagram
from keycrystal.ssyt import YoungTableau
from keycrystal.tabloids import KeyTabloid


def tab(shape, **rows):
    """``tab((0,3,0,2), r4=(2,3), r2=(1,1,1))``."""
    return KeyTabloid.from_rows(shape, {int(k[1:]): v for k, v in rows.items()})


def yt(text):
    """Young tableau from rows written top to bottom, e.g. ``"3/22/11"``."""
    return YoungTableau(tuple(tuple(int(c) for c in part) for part in reversed(text.split("/"))))


def cells(**rows):
    """Diagram from ``r3={1, 2}`` style keyword rows."""
    return diagram((int(k[1:]), c) for k, cols in rows.items() for c in cols)


# tabloids of shape (0,2,1,2), each as (r4, r3, r2)
SSKD_0212 = [
    ((4, 4), (3,), (2, 2)), ((4, 4), (3,), (2, 1)), ((4, 4), (3,), (1, 1)),
    ((4, 4), (2,), (1, 1)), ((4, 4), (1,), (2, 2)), ((4, 3), (3,), (2, 2)),
    ((4, 3), (3,), (2, 1)), ((4, 3), (3,), (1, 1)), ((4, 3), (2,), (1, 1)),
    ((4, 3), (1,), (2, 2)), ((4, 2), (3,), (2, 1)), ((4, 2), (3,), (1, 1)),
    ((4, 2), (2,), (1, 1)), ((3, 3), (2,), (1, 1)), ((3, 3), (1,), (2, 2)),
    ((3, 2), (2,), (1, 1)), ((4, 4), (2,), (1, 3)), ((3, 3), (2,), (1, 4)),
    ((3, 2), (2,), (1, 4)), ((3, 1), (2,), (1, 4)),
]

# the crystal B(2,2,1) on SSYT with four letters
SSYT_221 = {
    "T00": "3/22/11", "T01": "3/23/11", "T11": "4/22/11", "Tb2": "3/23/12",
    "T22": "3/24/11", "T12": "4/23/11", "T03": "3/24/12", "T33": "4/24/11",
    "T13": "4/33/11", "Ta3": "4/23/12", "T04": "3/24/13", "T24": "4/24/12",
    "T34": "4/34/11", "Ta4": "4/33/12", "T25": "4/24/13", "T15": "4/34/12",
    "Tb5": "4/33/22", "T26": "4/34/13", "T06": "4/34/22", "T07": "4/34/23",
}
SSYT_221_EDGES = {
    1: [("T01", "Tb2"), ("T12", "Ta3"), ("T22", "T03"), ("T13", "Ta4"), ("T33", "T24"),
        ("Ta4", "Tb5"), ("T34", "T15"), ("T15", "T06"), ("T26", "T07")],
    2: [("T00", "T01"), ("T11", "T12"), ("T12", "T13"), ("Ta3", "Ta4"), ("T03", "T04"),
        ("T33", "T34"), ("T24", "T25"), ("T25", "T26"), ("T06", "T07")],
    3: [("T00", "T11"), ("T01", "T22"), ("Tb2", "T03"), ("T22", "T33"), ("T03", "T24"),
        ("T13", "T34"), ("Ta4", "T15"), ("T04", "T25"), ("Tb5", "T06")],
}

# B_2413(2,2,1,0) inside the crystal above
B2413_VERTICES = ["T00", "T01", "T11", "Tb2", "T22", "T03", "T33", "T24"]
B2413_EDGES = {
    1: [("T01", "Tb2"), ("T22", "T03"), ("T33", "T24")],
    2: [("T00", "T01")],
    3: [("T00", "T11"), ("T01", "T22"), ("Tb2", "T03"), ("T22", "T33"), ("T03", "T24")],
}

# the maj 0 tabloids of shape (1,2,0,2), same names as B2413, each (r4, r2, r1)
SSKT_1202 = {
    "T00": ((3, 2), (2, 1), (1,)), "T01": ((3, 3), (2, 1), (1,)),
    "T11": ((4, 2), (2, 1), (1,)), "Tb2": ((3, 3), (2, 2), (1,)),
    "T22": ((4, 3), (2, 1), (1,)), "T03": ((4, 3), (2, 2), (1,)),
    "T33": ((4, 4), (2, 1), (1,)), "T24": ((4, 4), (2, 2), (1,)),
}

KAPPA_1202 = [
    (2, 2, 1, 0), (2, 2, 0, 1), (2, 1, 2, 0), (2, 1, 1, 1),
    (2, 1, 0, 2), (1, 2, 2, 0), (1, 2, 1, 1), (1, 2, 0, 2),
]

# weight (2,2,1) tableaux, top row first, with their charges
CHARGE_221 = [
    ("3/22/11", 0), ("3/2/112", 1), ("23/112", 2), ("22/113", 1),
    ("2/1123", 2), ("3/1122", 3), ("11223", 4),
]

# highest weights of shape (0,0,0,2,3) as (r5, r4) with maj
HW_00023 = [
    ((2, 2, 1), (1, 1), 0), ((2, 1, 1), (1, 3), 1), ((2, 1, 2), (1, 3), 2),
    ((2, 2, 3), (1, 1), 1), ((2, 4, 1), (1, 3), 3), ((2, 1, 4), (1, 3), 2),
    ((2, 4, 5), (1, 3), 4),
]

# highest weights of shape (0,3,0,2) as (r4, r2) and their Demazure lowest weights
HW_0302 = [
    (((2, 2), (1, 1, 1)), ((4, 4), (2, 2, 2))),
    (((2, 3), (1, 1, 1)), ((3, 4), (2, 2, 2))),
    (((2, 1), (1, 3, 2)), ((3, 3), (2, 4, 4))),
    (((2, 2), (1, 1, 3)), ((4, 3), (2, 2, 4))),
    (((2, 4), (1, 3, 1)), ((2, 3), (1, 4, 4))),
    (((2, 3), (1, 1, 4)), ((1, 3), (2, 2, 4))),
]

# composite lowering runs: list of (i, j, exponents r_i..r_j, tabloid after)
Z_RUNS = [
    (((2, 1), (1, 3, 2)), [
        (1, 3, (2, 2, 1), ((3, 2), (2, 4, 3))),
        (2, 3, (1, 1), ((3, 3), (2, 4, 4))),
    ]),
    (((2, 2), (1, 1, 3)), [
        (1, 3, (2, 2, 1), ((3, 3), (2, 2, 4))),
        (3, 3, (1,), ((4, 3), (2, 2, 4))),
    ]),
]
# intermediate steps of the first F_[1,3] above
Z_FIRST_STEPS = [((2, 1), (1, 4, 2)), ((3, 1), (1, 4, 3)), ((3, 2), (2, 4, 3))]

# crystal with highest weight r4=(2,4), r2=(1,3,1)
CRYSTAL_1112 = {
    "vertices": [((2, 4), (1, 3, 1)), ((2, 4), (1, 3, 2)), ((2, 4), (1, 3, 3)), ((2, 3), (1, 4, 4))],
    "edges": [(0, 1, 1), (1, 2, 2), (2, 3, 3)],
}
CRYSTAL_1211 = {
    "vertices": [((2, 3), (1, 1, 4)), ((1, 3), (2, 2, 4))],
    "edges": [(0, 1, 1)],
}
# crystal with highest weight r4=(2,1), r2=(1,3,2); keys are drawing positions
CRYSTAL_0122 = {
    (0, 6): ((2, 1), (1, 3, 2)), (1, 4.5): ((2, 1), (1, 4, 2)),
    (0, 4.5): ((2, 1), (1, 3, 3)), (2, 3): ((2, 1), (1, 4, 3)),
    (1, 3): ((3, 1), (1, 4, 2)), (-2, 3): ((2, 2), (1, 3, 3)),
    (3, 1.5): ((2, 1), (1, 4, 4)), (1, 1.5): ((3, 1), (1, 4, 3)),
    (0, 1.5): ((3, 1), (2, 4, 2)), (-1, 1.5): ((2, 2), (1, 4, 3)),
    (3, 0): ((3, 1), (1, 4, 4)), (1, 0): ((2, 2), (1, 4, 4)),
    (0, 0): ((3, 1), (2, 4, 3)), (-1, 0): ((3, 2), (1, 4, 3)),
    (2, -1.5): ((3, 1), (2, 4, 4)), (1, -1.5): ((3, 2), (1, 4, 4)),
    (-2, -1.5): ((3, 2), (2, 4, 3)), (1, -3): ((3, 3), (1, 4, 4)),
    (0, -3): ((3, 2), (2, 4, 4)), (0, -4.5): ((3, 3), (2, 4, 4)),
}
CRYSTAL_0122_EDGES = {
    2: [((0, 6), (0, 4.5)), ((1, 4.5), (1, 3)), ((1, 3), (1, 1.5)), ((3, 1.5), (3, 0)),
        ((0, 1.5), (0, 0)), ((-1, 1.5), (-1, 0)), ((1, 0), (1, -1.5)), ((1, -1.5), (1, -3)),
        ((0, -3), (0, -4.5))],
    3: [((0, 6), (1, 4.5)), ((0, 4.5), (2, 3)), ((-2, 3), (-1, 1.5)), ((2, 3), (3, 1.5)),
        ((-1, 1.5), (1, 0)), ((1, 1.5), (3, 0)), ((-1, 0), (1, -1.5)), ((0, 0), (2, -1.5)),
        ((-2, -1.5), (0, -3))],
    1: [((0, 4.5), (-2, 3)), ((1, 3), (0, 1.5)), ((2, 3), (-1, 1.5)), ((3, 1.5), (1, 0)),
        ((1, 1.5), (0, 0)), ((3, 0), (2, -1.5)), ((0, 0), (-2, -1.5)), ((2, -1.5), (0, -3)),
        ((1, -3), (0, -4.5))],
}

# commuting ladder for the component with highest weight r4=(2,3), r2=(1,1,1)
LADDER_4123 = [
    (((2, 3), (1, 1, 1)), {3: {2}, 2: {1}, 1: {1, 2, 3}}, {3: {1}, 2: {1}, 1: {1, 2, 3}}, "3/2/111"),
    (((2, 4), (1, 1, 1)), {4: {2}, 2: {1}, 1: {1, 2, 3}}, {4: {1}, 2: {1}, 1: {1, 2, 3}}, "4/2/111"),
    (((1, 3), (2, 2, 1)), {3: {2}, 2: {1, 2}, 1: {1, 3}}, {3: {1}, 2: {1, 2}, 1: {1, 3}}, "3/2/112"),
    (((3, 4), (1, 1, 1)), {4: {2}, 3: {1}, 1: {1, 2, 3}}, {4: {1}, 3: {1}, 1: {1, 2, 3}}, "4/3/111"),
    (((1, 4), (2, 2, 1)), {4: {2}, 2: {1, 2}, 1: {1, 3}}, {4: {1}, 2: {1, 2}, 1: {1, 3}}, "4/2/112"),
    (((1, 3), (2, 2, 2)), {3: {2}, 2: {1, 2, 3}, 1: {1}}, {3: {1}, 2: {1, 2, 3}, 1: {1}}, "3/2/122"),
    (((3, 4), (2, 1, 1)), {4: {2}, 3: {1}, 2: {1}, 1: {2, 3}}, {4: {1}, 3: {1}, 2: {1}, 1: {2, 3}}, "4/3/112"),
    (((1, 4), (2, 2, 2)), {4: {2}, 2: {1, 2, 3}, 1: {1}}, {4: {1}, 2: {1, 2, 3}, 1: {1}}, "4/2/122"),
    (((3, 4), (2, 2, 1)), {4: {2}, 3: {1}, 2: {1, 2}, 1: {3}}, {4: {1}, 3: {1}, 2: {1, 2}, 1: {3}}, "4/3/122"),
    (((3, 4), (2, 2, 2)), {4: {2}, 3: {1}, 2: {1, 2, 3}}, {4: {1}, 3: {1}, 2: {1, 2, 3}}, "4/3/222"),
]
# (color, source, target), 1-based ladder positions
LADDER_EDGES = [
    (3, 1, 2), (3, 3, 5), (3, 6, 8), (2, 2, 4),
    (1, 1, 3), (1, 5, 8), (1, 4, 7), (1, 3, 6), (1, 2, 5), (1, 9, 10), (1, 7, 9),
]

# diagram rectified by Ě1^3 Ě2^4 Ě1 Ě3^4 Ě2^3 Ě1^2
RECT_START = {9: {4}, 8: {4}, 7: {3}, 6: {2}, 5: {2, 4}, 4: {2, 3}, 3: {1, 3}, 2: {1, 3}, 1: {1, 2, 4}}
RECT_MOVES = [(1, 3), (2, 4), (1, 1), (3, 4), (2, 3), (1, 2)]

# every component of (0,3,0,2): highest weight (r4, r2), its weight, the key
COMPONENT_SUMMARY = [
    (((2, 1), (1, 3, 2)), (2, 2, 1, 0), (0, 1, 2, 2)),
    (((2, 4), (1, 3, 1)), (2, 1, 1, 1), (1, 1, 1, 2)),
    (((2, 3), (1, 1, 4)), (2, 1, 1, 1), (1, 2, 1, 1)),
    (((2, 3), (1, 1, 1)), (3, 1, 1, 0), (0, 3, 1, 1)),
    (((2, 2), (1, 1, 1)), (3, 2, 0, 0), (0, 3, 0, 2)),
    (((2, 2), (1, 1, 3)), (2, 2, 1, 0), (0, 2, 1, 2)),
]
