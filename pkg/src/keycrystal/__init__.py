"""Crystals on semistandard key tabloids and Demazure expansions of E_b(X;q,0)."""
from .combinatorics import Poly, QPoly, format_composition, parse_composition
from .demazure import key_polynomial
from .expansions import demazure_expansion, kostka_foulkes_charge, kostka_foulkes_maj, macdonald_q0
from .ssyt import YoungTableau, parse_tableau
from .tabloid_crystal import lower_op, raise_op, tabloid_crystal
from .tabloids import KeyTabloid, enumerate_sskd, maj, parse_tabloid

__all__ = [
    "KeyTabloid",
    "Poly",
    "QPoly",
    "YoungTableau",
    "demazure_expansion",
    "enumerate_sskd",
    "format_composition",
    "key_polynomial",
    "kostka_foulkes_charge",
    "kostka_foulkes_maj",
    "lower_op",
    "macdonald_q0",
    "maj",
    "parse_composition",
    "parse_tableau",
    "parse_tabloid",
    "raise_op",
    "tabloid_crystal",
]

__version__ = "0.1.0"
