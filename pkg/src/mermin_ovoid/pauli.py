"""Signed observables of the real N-qubit Pauli group.

An observable is ``sign * (Z^b_1 X^a_1) (x) ... (x) (Z^b_n X^a_n)``, so
the letters decode as (a, b) = (0,0) I, (1,0) X, (0,1) Z, (1,1) Y, where
Y = ZX = [[0, 1], [-1, 0]] is i*sigma_y.  Every matrix here is real and
every sign is +1 or -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import gf2
from .errors import CapacityError, DimensionError, NoImageError, PauliParseError
from .gf2 import BitVector

MAX_MATRIX_QUBITS = 8

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_LETTER = {v: k for k, v in _LETTER_BITS.items()}

_SINGLE = {
    "I": np.array([[1, 0], [0, 1]], dtype=np.int64),
    "X": np.array([[0, 1], [1, 0]], dtype=np.int64),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.int64),
    "Y": np.array([[0, 1], [-1, 0]], dtype=np.int64),
}


@dataclass(frozen=True, order=True)
class PauliObservable:
    x: BitVector
    z: BitVector
    sign: int = 1

    def __post_init__(self):
        if self.x.length != self.z.length:
            raise DimensionError("x and z parts differ in length")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    @property
    def n(self) -> int:
        return self.x.length

    @property
    def letters(self) -> str:
        return "".join(_BITS_LETTER[a, b] for a, b in zip(self.x.coords, self.z.coords))

    def is_identity(self) -> bool:
        return not self.x and not self.z

    def unsigned(self) -> PauliObservable:
        return PauliObservable(self.x, self.z, 1)

    def __neg__(self) -> PauliObservable:
        return PauliObservable(self.x, self.z, -self.sign)

    def __mul__(self, other: PauliObservable) -> PauliObservable:
        return multiply(self, other)

    def __str__(self) -> str:
        return format_pauli(self)

    def __repr__(self) -> str:
        return f"PauliObservable({format_pauli(self)!r})"


def parse(text: str) -> PauliObservable:
    if not text:
        raise PauliParseError("empty Pauli string", 0)
    sign, pos = 1, 0
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        pos = 1
    if pos == len(text):
        raise PauliParseError("missing letters after sign", pos)
    xs, zs = [], []
    for i in range(pos, len(text)):
        ch = text[i]
        if ch not in _LETTER_BITS:
            raise PauliParseError(f"illegal character {ch!r}", i)
        a, b = _LETTER_BITS[ch]
        xs.append(a)
        zs.append(b)
    return PauliObservable(BitVector.from_coords(xs), BitVector.from_coords(zs), sign)


def format_pauli(p: PauliObservable) -> str:
    return ("+" if p.sign > 0 else "-") + p.letters


def identity(n: int, sign: int = 1) -> PauliObservable:
    return PauliObservable(BitVector.zero(n), BitVector.zero(n), sign)


def from_point(v: BitVector, sign: int = 1) -> PauliObservable:
    """Observable whose symplectic point is ``v`` = (a|b)."""
    a, b = v.split()
    return PauliObservable(a, b, sign)


def _check(p: PauliObservable, q: PauliObservable) -> None:
    if p.n != q.n:
        raise DimensionError(f"qubit count mismatch: {p.n} != {q.n}")


def multiply(p: PauliObservable, q: PauliObservable) -> PauliObservable:
    _check(p, q)
    # moving X^a_p past Z^b_q costs (-1)^(a_p . b_q)
    sign = p.sign * q.sign * (-1 if gf2.dot(p.x, q.z) else 1)
    return PauliObservable(p.x + q.x, p.z + q.z, sign)


def product(observables) -> PauliObservable:
    """Left-to-right product of a non-empty sequence."""
    return reduce(multiply, observables)


def symplectic_inner(p: PauliObservable, q: PauliObservable) -> int:
    _check(p, q)
    return gf2.dot(p.x, q.z) ^ gf2.dot(q.x, p.z)


def commutes(p: PauliObservable, q: PauliObservable) -> bool:
    return symplectic_inner(p, q) == 0


def quadratic_value(p: PauliObservable) -> int:
    """a.b mod 2, which is the parity of the number of Y letters."""
    return gf2.dot(p.x, p.z)


def is_symmetric(p: PauliObservable) -> bool:
    return quadratic_value(p) == 0


def to_matrix(p: PauliObservable) -> np.ndarray:
    """Exact integer matrix of ``p``; a signed permutation matrix."""
    if p.n > MAX_MATRIX_QUBITS:
        raise CapacityError(f"{p.n} qubits exceeds the {MAX_MATRIX_QUBITS}-qubit matrix limit")
    m = reduce(np.kron, (_SINGLE[ch] for ch in p.letters))
    return p.sign * m


def symplectic_point(p: PauliObservable) -> BitVector:
    if p.is_identity():
        raise NoImageError("the identity has no projective image")
    return BitVector.concat(p.x, p.z)


def all_observables(n: int, *, include_identity: bool = False) -> list[PauliObservable]:
    """Every unsigned observable on ``n`` qubits, ordered by symplectic point."""
    out = []
    for v in gf2.all_vectors(2 * n, nonzero=not include_identity):
        out.append(from_point(v))
    return out


__all__ = [
    "PauliObservable",
    "parse",
    "format_pauli",
    "identity",
    "from_point",
    "multiply",
    "product",
    "symplectic_inner",
    "commutes",
    "quadratic_value",
    "is_symmetric",
    "to_matrix",
    "symplectic_point",
    "all_observables",
]
