"""Finite geometry of the three-qubit Pauli group and the Mermin pentagram.

Modules: ``gf2`` (vectors and subspaces over GF(2)), ``pauli`` (signed
observables), ``geometry`` (PG(m,2), W(5,2), Q+(5,2)), ``klein`` (Klein
correspondence), ``mermin`` (pentagram <-> ovoid), ``cli``.
"""

from .gf2 import BitVector, Subspace, echelonize
from .mermin import Pentagram, from_ovoid, paper_pentagram, to_ovoid, validate
from .pauli import PauliObservable, parse

__all__ = [
    "BitVector",
    "Subspace",
    "echelonize",
    "PauliObservable",
    "parse",
    "Pentagram",
    "paper_pentagram",
    "validate",
    "to_ovoid",
    "from_ovoid",
]
