"""Mermin's pentagram and its image as an ovoid of PG(3, 2)."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cache

from . import pauli
from .errors import (
    NotAnEdgeError,
    OffQuadricError,
    PreconditionError,
    StructuralError,
    TheoremViolation,
)
from .geometry import (
    as_generator,
    collinear,
    coplanar,
    is_totally_isotropic,
    projective_points,
    system_of,
)
from .gf2 import BitVector, Subspace, echelonize
from .klein import CONCURRENT, LinePG32, affine_image, line_to_point, point_to_line
from .pauli import PauliObservable

PAPER_EDGES = {
    "green": ("ZII", "IZI", "IIZ", "ZZZ"),
    "blue": ("XII", "IXI", "IIZ", "XXZ"),
    "violet": ("XII", "IZI", "IIX", "XZX"),
    "yellow": ("ZII", "IXI", "IIX", "ZXX"),
    "red": ("ZZZ", "XXZ", "XZX", "ZXX"),
}


@dataclass(frozen=True)
class Pentagram:
    """Ten observables and five labelled edges of four observable indices each."""

    observables: tuple[PauliObservable, ...]
    edges: tuple[tuple[str, tuple[int, int, int, int]], ...]

    def __post_init__(self):
        if len(self.observables) != 10:
            raise StructuralError(f"expected 10 observables, got {len(self.observables)}")
        if len(self.edges) != 5:
            raise StructuralError(f"expected 5 edges, got {len(self.edges)}")
        for label, idx in self.edges:
            if len(idx) != 4:
                raise StructuralError(f"edge {label!r} has {len(idx)} observables, not 4")
            if any(not 0 <= i < 10 for i in idx):
                raise StructuralError(f"edge {label!r} has an index out of range")

    @classmethod
    def from_edges(cls, edges) -> Pentagram:
        """Build from ``{label: [observable, ...]}``; shared observables are
        matched by their unsigned part and must agree in sign."""
        observables: list[PauliObservable] = []
        index: dict[PauliObservable, int] = {}
        built = []
        for label, obs in dict(edges).items():
            idx = []
            for o in obs:
                if isinstance(o, str):
                    o = pauli.parse(o)
                key = o.unsigned()
                if key in index:
                    if observables[index[key]].sign != o.sign:
                        raise StructuralError(
                            f"observable {key.letters} appears with both signs"
                        )
                else:
                    index[key] = len(observables)
                    observables.append(o)
                idx.append(index[key])
            built.append((label, tuple(idx)))
        return cls(tuple(observables), tuple(built))

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self.edges]

    def edge_indices(self, label: str) -> tuple[int, ...]:
        for name, idx in self.edges:
            if name == label:
                return idx
        raise KeyError(label)

    def edge(self, label: str) -> list[PauliObservable]:
        return [self.observables[i] for i in self.edge_indices(label)]

    def edges_of(self, i: int) -> list[str]:
        return [label for label, idx in self.edges if i in idx]

    def with_observable(self, i: int, obs: PauliObservable) -> Pentagram:
        new = list(self.observables)
        new[i] = obs
        return Pentagram(tuple(new), self.edges)


def paper_pentagram() -> Pentagram:
    return Pentagram.from_edges(PAPER_EDGES)


def check_incidence(p: Pentagram) -> None:
    """Raise ``StructuralError`` on malformed incidence."""
    problems = []
    unsigned = Counter(o.unsigned() for o in p.observables)
    for o, c in unsigned.items():
        if c > 1:
            problems.append(f"observable {o.letters} occurs {c} times")
    labels = Counter(p.labels)
    for label, c in labels.items():
        if c > 1:
            problems.append(f"edge label {label!r} repeated")
    for label, idx in p.edges:
        if len(set(idx)) != 4:
            problems.append(f"edge {label!r} repeats an observable")
    for i, o in enumerate(p.observables):
        k = len(p.edges_of(i))
        if k != 2:
            problems.append(f"observable {o.letters} lies on {k} edges, not 2")
    for (l1, e1), (l2, e2) in itertools.combinations(p.edges, 2):
        shared = len(set(e1) & set(e2))
        if shared != 1:
            problems.append(f"edges {l1!r} and {l2!r} share {shared} observables, not 1")
    if problems:
        raise StructuralError("; ".join(problems))


@dataclass
class EdgeReport:
    label: str
    commuting: bool
    product: PauliObservable
    anticommuting_pairs: list[tuple[str, str]] = field(default_factory=list)

    @property
    def sign(self) -> int:
        return self.product.sign

    @property
    def product_is_scalar(self) -> bool:
        return self.product.is_identity()


@dataclass
class ValidationReport:
    edges: list[EdgeReport]
    failures: list[str]

    @property
    def negative_edges(self) -> list[str]:
        return [e.label for e in self.edges if e.product_is_scalar and e.sign < 0]

    @property
    def magic(self) -> bool:
        return not self.failures and len(self.negative_edges) % 2 == 1


def validate(p: Pentagram) -> ValidationReport:
    """Check commutation, edge products and parity.

    Malformed incidence raises ``StructuralError``; anything else, including
    a non-magic but well-formed pentagram, is reported.
    """
    check_incidence(p)
    failures = []
    for i, o in enumerate(p.observables):
        if o.is_identity():
            failures.append(f"observable {i} is the identity")
    reports = []
    for label, idx in p.edges:
        obs = [p.observables[i] for i in idx]
        bad = [
            (str(a), str(b))
            for a, b in itertools.combinations(obs, 2)
            if not pauli.commutes(a, b)
        ]
        prod = pauli.product(obs)
        reports.append(EdgeReport(label, not bad, prod, bad))
        if bad:
            failures.append(f"edge {label!r} has anticommuting pairs {bad}")
        if not prod.is_identity():
            failures.append(f"edge {label!r} product {prod} is not +-I")
    report = ValidationReport(reports, failures)
    if not failures and len(report.negative_edges) % 2 == 0:
        failures.append(
            f"even number ({len(report.negative_edges)}) of edges multiply to -I"
        )
    return report


def edge_affine_plane(p: Pentagram, label: str) -> tuple[BitVector, ...]:
    """The four symplectic points of an edge; they form an affine plane of order two."""
    obs = p.edge(label)
    if any(o.is_identity() for o in obs):
        raise NotAnEdgeError(f"edge {label!r} contains the identity")
    pts = tuple(pauli.symplectic_point(o) for o in obs)
    if len(set(pts)) != 4:
        raise NotAnEdgeError(f"edge {label!r} repeats a point")
    if pts[0] + pts[1] + pts[2] + pts[3]:
        raise NotAnEdgeError(f"points of edge {label!r} do not sum to zero")
    for trio in itertools.combinations(pts, 3):
        # a collinear triple would force the fourth point to be zero
        if collinear(*trio):
            raise TheoremViolation(f"edge {label!r} has a collinear triple")
    return pts


def projective_closure(p: Pentagram, label: str) -> Subspace:
    pts = edge_affine_plane(p, label)
    plane = echelonize(pts)
    if plane.dimension != 3 or not is_totally_isotropic(plane):
        raise NotAnEdgeError(f"edge {label!r} does not span a totally isotropic plane")
    return plane


def closure_triple(p: Pentagram, label: str) -> list[PauliObservable]:
    """The three unsigned observables added by the closure; they form a line."""
    pts = edge_affine_plane(p, label)
    projective_closure(p, label)
    extra = sorted({pts[0] + q for q in pts[1:]})
    return [pauli.from_point(v) for v in extra]


@dataclass(frozen=True)
class Ovoid:
    points: tuple[BitVector, ...]
    edge_points: dict[str, BitVector]
    line_map: dict[int, LinePG32]
    system: str


def ovoid_violation(points) -> str | None:
    points = list(points)
    if len(points) != 5 or len(set(points)) != 5:
        return "an ovoid of PG(3, 2) has five distinct points"
    if any(p.length != 4 or not p for p in points):
        return "ovoid points must be points of PG(3, 2)"
    for trio in itertools.combinations(points, 3):
        if collinear(*trio):
            return "collinear triple " + " ".join(map(str, trio))
    for quad in itertools.combinations(points, 4):
        if coplanar(quad):
            return "coplanar quadruple " + " ".join(map(str, quad))
    return None


def is_ovoid(points) -> bool:
    return ovoid_violation(points) is None


def to_ovoid(p: Pentagram) -> Ovoid:
    report = validate(p)
    for o in p.observables:
        if not pauli.is_symmetric(o):
            raise OffQuadricError(f"observable {o} is not symmetric, so it is off the quadric")
    if not all(e.commuting and e.product_is_scalar for e in report.edges):
        raise PreconditionError("; ".join(report.failures))

    closures = {label: as_generator(projective_closure(p, label)) for label in p.labels}
    first = closures[p.labels[0]]
    for label, g in closures.items():
        if system_of(g.plane, first) != first.system:
            raise TheoremViolation(f"closure of {label!r} is in the other generator system")

    edge_points = {}
    for label in p.labels:
        img = affine_image(edge_affine_plane(p, label))
        if img.kind != CONCURRENT:
            raise TheoremViolation(f"image of edge {label!r} is {img.kind}, not concurrent")
        edge_points[label] = img.vertex

    points = tuple(edge_points[label] for label in p.labels)
    bad = ovoid_violation(points)
    if bad:
        raise TheoremViolation(bad)

    line_map = {}
    for i, o in enumerate(p.observables):
        line = point_to_line(pauli.symplectic_point(o))
        on = {q for q in points if q in line}
        want = {edge_points[label] for label in p.edges_of(i)}
        if on != want:
            raise TheoremViolation(f"line of {o} does not join the points of its two edges")
        line_map[i] = line
    return Ovoid(points, edge_points, line_map, first.system)


def from_ovoid(points) -> Pentagram:
    """Pentagram with all-positive signs whose image is the given ovoid.

    Edges are labelled by the coordinates of their ovoid point.
    """
    points = list(points)
    bad = ovoid_violation(points)
    if bad:
        raise PreconditionError(f"not an ovoid: {bad}")
    obs = {}
    for x, y in itertools.combinations(points, 2):
        obs[x, y] = pauli.from_point(line_to_point(LinePG32.through(x, y)))
    edges = {}
    for x in points:
        edges[str(x)] = [o for pair, o in obs.items() if x in pair]
    return Pentagram.from_edges(edges)


@cache
def enumerate_ovoids() -> tuple[tuple[BitVector, ...], ...]:
    """Every ovoid of PG(3, 2) as a sorted 5-tuple, in lexicographic order."""
    pts = projective_points(3)
    return tuple(q for q in itertools.combinations(pts, 5) if is_ovoid(q))
