"""Projective spaces PG(m, 2), the symplectic polar space W(2n-1, 2) and
the hyperbolic quadric Q+(2n-1, 2).

Points are nonzero ``BitVector`` instances; over GF(2) each projective
point has exactly one representative.  Planes (and lines) are ``Subspace``
instances of vector dimension 3 (and 2).  Vectors of even length are read
in Pauli coordinates (a|b), so the symplectic form is a.b' + a'.b and the
quadratic form is a.b.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cache

from . import gf2
from .errors import DimensionError, NotAGeneratorError, PreconditionError
from .gf2 import BitVector, Subspace, echelonize

ProjectivePoint = BitVector
FanoPlane = Subspace

SYSTEM_A = "A"
SYSTEM_B = "B"


def projective_points(m: int) -> list[BitVector]:
    """The 2^(m+1) - 1 points of PG(m, 2)."""
    return gf2.all_vectors(m + 1, nonzero=True)


@cache
def projective_lines(m: int) -> tuple[Subspace, ...]:
    lines = {
        echelonize([x, y])
        for x, y in itertools.combinations(projective_points(m), 2)
    }
    return tuple(sorted(lines))


@cache
def projective_planes(m: int) -> tuple[Subspace, ...]:
    pts = projective_points(m)
    planes = set()
    for line in projective_lines(m):
        for p in pts:
            if p not in line:
                planes.add(echelonize([*line.basis, p]))
    return tuple(sorted(planes))


def symplectic_form(u: BitVector, v: BitVector) -> int:
    if u.length != v.length:
        raise DimensionError(f"length mismatch: {u.length} != {v.length}")
    ua, ub = u.split()
    va, vb = v.split()
    return gf2.dot(ua, vb) ^ gf2.dot(va, ub)


def quadratic_form(v: BitVector) -> int:
    a, b = v.split()
    return gf2.dot(a, b)


def is_totally_isotropic(s: Subspace) -> bool:
    return all(
        symplectic_form(u, v) == 0 for u, v in itertools.combinations(s.basis, 2)
    )


def is_totally_singular(s: Subspace) -> bool:
    return is_totally_isotropic(s) and all(quadratic_form(b) == 0 for b in s.basis)


def _extend(seeds, candidates, accept, target_dim):
    """Grow subspaces one vector at a time until ``target_dim``.

    ``accept(s, v)`` decides whether ``v`` may join ``s``.  Each level is
    deduplicated through the canonical echelon form.
    """
    level = set(seeds)
    while level and next(iter(level)).dimension < target_dim:
        nxt = set()
        for s in level:
            for v in candidates:
                if v not in s and accept(s, v):
                    nxt.add(echelonize([*s.basis, v]))
        level = nxt
    return sorted(level)


@cache
def enumerate_w_generators(n: int = 3) -> tuple[Subspace, ...]:
    """Maximal totally isotropic subspaces (dimension n) of W(2n-1, 2)."""
    pts = projective_points(2 * n - 1)
    seeds = [echelonize([p]) for p in pts]

    def accept(s, v):
        return all(symplectic_form(b, v) == 0 for b in s.basis)

    return tuple(_extend(seeds, pts, accept, n))


def enumerate_w52_generators() -> tuple[Subspace, ...]:
    return enumerate_w_generators(3)


@dataclass(frozen=True)
class Quadric:
    """Zero set of Q(a|b) = a.b in PG(2n-1, 2); for n = 3 the Klein quadric."""

    n: int = 3

    @property
    def ambient(self) -> int:
        return 2 * self.n - 1

    def form(self, v: BitVector) -> int:
        return quadratic_form(v)

    @property
    def points(self) -> list[BitVector]:
        return [p for p in projective_points(self.ambient) if quadratic_form(p) == 0]


KLEIN_QUADRIC = Quadric(3)


@dataclass(frozen=True, order=True)
class GeneratorPlane:
    plane: Subspace
    system: str = field(compare=False)

    @property
    def points(self) -> list[BitVector]:
        return self.plane.points()


def quadric_contains(q: Quadric, p: BitVector) -> bool:
    if p.length != 2 * q.n:
        raise DimensionError(f"point of length {p.length} is not in PG({q.ambient}, 2)")
    if not p:
        raise PreconditionError("the zero vector is not a projective point")
    return quadratic_form(p) == 0


def _same_system(s: Subspace, t: Subspace) -> bool:
    # generators of Q+(2n-1,2) are in one family iff their vector
    # intersection has dimension congruent to n mod 2
    n = s.dimension
    return (gf2.intersection(s, t).dimension - n) % 2 == 0


@cache
def _singular_generators(n: int) -> tuple[Subspace, ...]:
    pts = [p for p in projective_points(2 * n - 1) if quadratic_form(p) == 0]
    seeds = [echelonize([p]) for p in pts]

    def accept(s, v):
        return all(symplectic_form(b, v) == 0 for b in s.basis)

    return tuple(_extend(seeds, pts, accept, n))


def quadric_generators(q: Quadric = KLEIN_QUADRIC) -> tuple[GeneratorPlane, ...]:
    """Every generator of ``q``, labelled A or B.

    The lexicographically least generator is the reference for A.
    """
    planes = _singular_generators(q.n)
    ref = planes[0]
    return tuple(
        GeneratorPlane(s, SYSTEM_A if _same_system(s, ref) else SYSTEM_B) for s in planes
    )


def as_generator(plane: Subspace, q: Quadric = KLEIN_QUADRIC) -> GeneratorPlane:
    """Label ``plane`` relative to the default system A reference."""
    if plane.ambient_length != 2 * q.n or plane.dimension != q.n or not is_totally_singular(plane):
        raise NotAGeneratorError(f"{plane} is not a generator of the quadric")
    return GeneratorPlane(plane, system_of(plane, quadric_generators(q)[0]))


def system_of(plane: Subspace, reference: GeneratorPlane) -> str:
    if plane.dimension != reference.plane.dimension or not is_totally_singular(plane):
        raise NotAGeneratorError(f"{plane} is not a generator of the quadric")
    if _same_system(plane, reference.plane):
        return reference.system
    return SYSTEM_B if reference.system == SYSTEM_A else SYSTEM_A


def collinear(p: BitVector, q: BitVector, r: BitVector) -> bool:
    if len({p, q, r}) != 3:
        raise PreconditionError("collinear() needs three distinct points")
    if not (p.length == q.length == r.length):
        raise DimensionError("points from different ambient spaces")
    return not (p + q + r)


def coplanar(points) -> bool:
    """True iff the points of PG(3, 2) lie in a common plane."""
    points = list(points)
    if any(p.length != 4 for p in points):
        raise DimensionError("coplanar() is defined for PG(3, 2) points only")
    if len(points) < 3:
        raise PreconditionError("coplanar() needs at least three points")
    return gf2.rank(points) <= 3


def join(points) -> Subspace:
    return echelonize(points)
