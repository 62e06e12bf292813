"""Klein correspondence between lines of PG(3, 2) and points of Q+(5, 2).

A line through x and y has Plücker coordinates p_ij = x_i y_j + x_j y_i.
They are packed into Pauli coordinates as

    a = (p23, p13, p12),   b = (p01, p02, p03)

so the Klein relation p01 p23 + p02 p13 + p03 p12 = 0 reads a.b = 0, the
same quadratic form that singles out symmetric observables.  With this
half-ordering the generators containing Z-only observables are stars
(all lines through a point of PG(3, 2)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

from . import gf2
from .errors import NotALineError, PreconditionError
from .geometry import (
    GeneratorPlane,
    as_generator,
    collinear,
    is_totally_singular,
    projective_lines,
    quadratic_form,
)
from .gf2 import BitVector, Subspace, echelonize

STAR = "star"
RULED = "ruled"
CONCURRENT = "concurrent"
COPLANAR = "coplanar"

# (i, j) index pairs for the a half, then the b half
_PLUCKER_ORDER = ((2, 3), (1, 3), (1, 2), (0, 1), (0, 2), (0, 3))


@dataclass(frozen=True, order=True)
class LinePG32:
    points: tuple[BitVector, BitVector, BitVector]

    def __post_init__(self):
        pts = self.points
        if len(pts) != 3 or any(p.length != 4 for p in pts) or not collinear(*pts):
            raise NotALineError(f"{pts} is not a line of PG(3, 2)")
        if tuple(sorted(pts)) != pts:
            object.__setattr__(self, "points", tuple(sorted(pts)))

    @classmethod
    def through(cls, x: BitVector, y: BitVector) -> LinePG32:
        if x == y or not x or not y:
            raise PreconditionError("a line needs two distinct points")
        return cls((x, y, x + y))

    @classmethod
    def from_subspace(cls, s: Subspace) -> LinePG32:
        if s.dimension != 2 or s.ambient_length != 4:
            raise NotALineError(f"{s} is not a line of PG(3, 2)")
        return cls(tuple(s.points()))

    def subspace(self) -> Subspace:
        return echelonize(self.points)

    def __contains__(self, p: BitVector) -> bool:
        return p in self.points

    def __str__(self) -> str:
        return "{" + " ".join(str(p) for p in self.points) + "}"


def plucker(x: BitVector, y: BitVector) -> BitVector:
    return BitVector.from_coords(
        (x[i] & y[j]) ^ (x[j] & y[i]) for i, j in _PLUCKER_ORDER
    )


def line_to_point(line: LinePG32) -> BitVector:
    x, y, _ = line.points
    return plucker(x, y)


@cache
def _table() -> dict[BitVector, LinePG32]:
    table = {}
    for s in projective_lines(3):
        line = LinePG32.from_subspace(s)
        table[line_to_point(line)] = line
    return table


def all_lines() -> list[LinePG32]:
    return sorted(_table().values())


def point_to_line(p: BitVector) -> LinePG32:
    if p.length != 6 or not p or quadratic_form(p):
        raise NotALineError(f"{p} is not a point of the Klein quadric")
    return _table()[p]


def lines_meet(k: LinePG32, m: LinePG32) -> bool:
    return bool(set(k.points) & set(m.points))


def common_point(lines) -> BitVector | None:
    common = set.intersection(*(set(L.points) for L in lines))
    if len(common) > 1:
        raise PreconditionError("lines coincide")
    return common.pop() if common else None


def common_plane(lines) -> Subspace | None:
    span = echelonize([p for L in lines for p in L.points])
    return span if span.dimension == 3 else None


@dataclass(frozen=True)
class PlaneImage:
    """Image of a generator plane: seven lines, either a star or a ruled plane."""

    kind: str
    lines: tuple[LinePG32, ...]
    vertex: BitVector | None = None
    carrier: Subspace | None = None


def plane_image(g: GeneratorPlane | Subspace) -> PlaneImage:
    if isinstance(g, Subspace):
        g = as_generator(g)
    if g.plane.dimension != 3 or not is_totally_singular(g.plane):
        raise PreconditionError(f"{g.plane} is not a generator plane")
    lines = tuple(point_to_line(p) for p in g.points)
    vertex = common_point(lines)
    if vertex is not None:
        return PlaneImage(STAR, lines, vertex=vertex)
    carrier = common_plane(lines)
    if carrier is None:
        raise AssertionError("generator image is neither a star nor a ruled plane")
    return PlaneImage(RULED, lines, carrier=carrier)


@dataclass(frozen=True)
class AffineImage:
    kind: str
    lines: tuple[LinePG32, ...]
    vertex: BitVector | None = None
    carrier: Subspace | None = None


def check_affine_plane(points) -> None:
    """Raise unless ``points`` are an affine plane of order two on the quadric."""
    points = list(points)
    if len(points) != 4 or len(set(points)) != 4:
        raise PreconditionError("an affine plane of order two has four distinct points")
    if any(p.length != 6 or not p or quadratic_form(p) for p in points):
        raise PreconditionError("affine plane points must lie on the Klein quadric")
    total = points[0] + points[1] + points[2] + points[3]
    if total:
        raise PreconditionError("affine plane points must sum to zero")
    for triple in itertools.combinations(points, 3):
        if collinear(*triple):
            raise PreconditionError(f"three points are collinear: {triple}")
    span = echelonize(points)
    if span.dimension != 3 or not is_totally_singular(span):
        raise PreconditionError("points do not lie in a common generator plane")


def affine_image(points) -> AffineImage:
    """Four image lines: concurrent with no three coplanar, or coplanar with
    no three concurrent."""
    points = list(points)
    check_affine_plane(points)
    lines = tuple(point_to_line(p) for p in points)
    vertex = common_point(lines)
    if vertex is not None:
        for trio in itertools.combinations(lines, 3):
            if common_plane(trio) is not None:
                raise AssertionError("three concurrent image lines are coplanar")
        return AffineImage(CONCURRENT, lines, vertex=vertex)
    carrier = common_plane(lines)
    if carrier is None:
        raise AssertionError("affine image is neither concurrent nor coplanar")
    for trio in itertools.combinations(lines, 3):
        if common_point(trio) is not None:
            raise AssertionError("three coplanar image lines are concurrent")
    return AffineImage(COPLANAR, lines, carrier=carrier)


def lines_through(p: BitVector) -> list[LinePG32]:
    return [L for L in all_lines() if p in L]


def lines_in(plane: Subspace) -> list[LinePG32]:
    return [L for L in all_lines() if all(gf2.contains(plane, q) for q in L.points)]
