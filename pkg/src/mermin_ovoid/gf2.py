"""Bit-packed vectors and subspaces over GF(2).

A vector of length ``n`` is stored as a Python int whose most significant
bit (bit ``n - 1``) is coordinate 0.  With that packing, integer order is
the same as lexicographic order on coordinate tuples, which is the order
used for every enumeration in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError


@dataclass(frozen=True, order=True)
class BitVector:
    length: int
    bits: int

    def __post_init__(self):
        if self.length < 0:
            raise DimensionError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise DimensionError(f"bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def from_coords(cls, coords: Iterable[int]) -> BitVector:
        coords = list(coords)
        bits = 0
        for c in coords:
            if c not in (0, 1):
                raise ValueError(f"coordinate {c!r} is not in GF(2)")
            bits = (bits << 1) | c
        return cls(len(coords), bits)

    @classmethod
    def zero(cls, length: int) -> BitVector:
        return cls(length, 0)

    @classmethod
    def unit(cls, length: int, index: int) -> BitVector:
        if not 0 <= index < length:
            raise DimensionError(f"index {index} out of range for length {length}")
        return cls(length, 1 << (length - 1 - index))

    @property
    def coords(self) -> tuple[int, ...]:
        n = self.length
        return tuple((self.bits >> (n - 1 - i)) & 1 for i in range(n))

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise IndexError(index)
        return (self.bits >> (self.length - 1 - index)) & 1

    def __len__(self) -> int:
        return self.length

    def __bool__(self) -> bool:
        return self.bits != 0

    def __add__(self, other: BitVector) -> BitVector:
        return add(self, other)

    def weight(self) -> int:
        return self.bits.bit_count()

    def split(self) -> tuple[BitVector, BitVector]:
        """Halves ``(a, b)`` of an even-length vector."""
        if self.length % 2:
            raise DimensionError(f"cannot split odd length {self.length}")
        h = self.length // 2
        return BitVector(h, self.bits >> h), BitVector(h, self.bits & ((1 << h) - 1))

    @classmethod
    def concat(cls, left: BitVector, right: BitVector) -> BitVector:
        return cls(left.length + right.length, (left.bits << right.length) | right.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.coords))

    def __repr__(self) -> str:
        return f"BitVector({self})"


def _check(u: BitVector, v: BitVector) -> None:
    if u.length != v.length:
        raise DimensionError(f"length mismatch: {u.length} != {v.length}")


def add(u: BitVector, v: BitVector) -> BitVector:
    _check(u, v)
    return BitVector(u.length, u.bits ^ v.bits)


def dot(u: BitVector, v: BitVector) -> int:
    _check(u, v)
    return (u.bits & v.bits).bit_count() & 1


def _rref(rows: list[int], length: int) -> list[int]:
    """Reduced row-echelon rows, pivots ordered from coordinate 0 downward."""
    basis: list[int] = []
    rows = [r for r in rows if r]
    for bit in range(length - 1, -1, -1):
        mask = 1 << bit
        pivot = next((r for r in rows if r & mask), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        rows = [r ^ pivot if r & mask else r for r in rows]
        rows = [r for r in rows if r]
        basis = [b ^ pivot if b & mask else b for b in basis]
        basis.append(pivot)
    return basis


def rank(vectors: Sequence[BitVector]) -> int:
    if not vectors:
        return 0
    n = vectors[0].length
    for v in vectors:
        if v.length != n:
            raise DimensionError("vectors of mixed length")
    return len(_rref([v.bits for v in vectors], n))


@dataclass(frozen=True, order=True)
class Subspace:
    """A vector subspace of GF(2)^ambient_length held by its RREF basis.

    Two equal subspaces always have identical fields, so instances can be
    compared, hashed and sorted directly.
    """

    ambient_length: int
    basis: tuple[BitVector, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def points(self) -> list[BitVector]:
        return span_points(self)

    def __contains__(self, v: BitVector) -> bool:
        return contains(self, v)

    def __str__(self) -> str:
        return "<" + ", ".join(str(b) for b in self.basis) + ">"


def echelonize(vectors: Iterable[BitVector], length: int | None = None) -> Subspace:
    """Canonical subspace spanned by ``vectors``.

    ``length`` is only needed when ``vectors`` is empty.
    """
    vectors = list(vectors)
    if vectors:
        n = vectors[0].length
        if length is not None and length != n:
            raise DimensionError(f"length mismatch: {length} != {n}")
        for v in vectors:
            if v.length != n:
                raise DimensionError("vectors of mixed length")
    else:
        n = length or 0
    rows = _rref([v.bits for v in vectors], n)
    return Subspace(n, tuple(BitVector(n, r) for r in rows))


def span_points(s: Subspace) -> list[BitVector]:
    """All nonzero vectors of the span, in lexicographic order."""
    out = set()
    for coeffs in itertools.product((0, 1), repeat=s.dimension):
        acc = 0
        for c, b in zip(coeffs, s.basis):
            if c:
                acc ^= b.bits
        if acc:
            out.add(acc)
    return [BitVector(s.ambient_length, b) for b in sorted(out)]


def contains(s: Subspace, v: BitVector) -> bool:
    if v.length != s.ambient_length:
        raise DimensionError(f"length mismatch: {v.length} != {s.ambient_length}")
    r = v.bits
    # basis is reduced: clear each pivot in turn
    for b in s.basis:
        if r & (1 << (b.bits.bit_length() - 1)):
            r ^= b.bits
    return r == 0


def intersection(s: Subspace, t: Subspace) -> Subspace:
    if s.ambient_length != t.ambient_length:
        raise DimensionError("ambient length mismatch")
    common = [p for p in span_points(s) if contains(t, p)]
    return echelonize(common, s.ambient_length)


def all_vectors(length: int, *, nonzero: bool = False) -> list[BitVector]:
    start = 1 if nonzero else 0
    return [BitVector(length, b) for b in range(start, 1 << length)]
