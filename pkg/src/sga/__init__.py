"""Freeness and supersolvability of signed-graphic arrangements."""
from .core import DirectedEdge, Edge, InputError, SignedGraph
from .decide import Verdict, decide
from .kernels import BACKEND
from .oracle.arrangement import realize
from .oracle.freeness import freeness_decide
from .poly import IntPoly, chromatic_polynomial
from .signedstruct import is_balanced_chordal

__all__ = [
    "BACKEND",
    "DirectedEdge",
    "Edge",
    "InputError",
    "IntPoly",
    "SignedGraph",
    "Verdict",
    "chromatic_polynomial",
    "decide",
    "freeness_decide",
    "is_balanced_chordal",
    "realize",
]
