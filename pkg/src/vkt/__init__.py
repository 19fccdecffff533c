"""Exact invariants of virtual knots given as Gauss diagrams.

Modules: ``diagram`` (Gauss codes, moves, Carter genus), ``parity`` (chord
index, numberings, projection), ``presentations`` (knot groups, Tietze moves,
homomorphism counts, virtual braids), ``polyring`` (Laurent polynomials),
``alexander`` (Fox calculus and polynomial invariants), ``cli``.
"""

from .alexander import delta, gks, hbar, knot_determinant, mod_p_obstruction
from .diagram import GaussDiagram, carter_genus, parse_gauss, to_code
from .parity import chord_index, is_numberable, stable_project
from .polyring import LaurentPoly
from .presentations import Presentation, group, hom_count

__version__ = "0.1.0"

__all__ = [
    "GaussDiagram",
    "LaurentPoly",
    "Presentation",
    "carter_genus",
    "chord_index",
    "delta",
    "gks",
    "group",
    "hbar",
    "hom_count",
    "is_numberable",
    "knot_determinant",
    "mod_p_obstruction",
    "parse_gauss",
    "stable_project",
    "to_code",
]
