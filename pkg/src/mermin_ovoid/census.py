"""Derived structural counts of the spaces involved."""

from __future__ import annotations

from collections import Counter

from . import geometry, klein
from .mermin import enumerate_ovoids


def generators_per_quadric_point() -> set[int]:
    """Distinct values of the number of generators through a quadric point."""
    counts = Counter()
    for g in geometry.quadric_generators():
        counts.update(g.points)
    return set(counts[p] for p in geometry.KLEIN_QUADRIC.points)


def klein_bijection_ok() -> bool:
    lines = klein.all_lines()
    images = {klein.line_to_point(L) for L in lines}
    return (
        len(lines) == len(images) == len(geometry.KLEIN_QUADRIC.points)
        and images == set(geometry.KLEIN_QUADRIC.points)
        and all(klein.point_to_line(klein.line_to_point(L)) == L for L in lines)
    )


def census() -> dict[str, object]:
    gens = geometry.quadric_generators()
    systems = Counter(g.system for g in gens)
    per_point = generators_per_quadric_point()
    return {
        "pg32_points": len(geometry.projective_points(3)),
        "pg32_lines": len(geometry.projective_lines(3)),
        "pg32_planes": len(geometry.projective_planes(3)),
        "w52_points": len(geometry.projective_points(5)),
        "w52_generators": len(geometry.enumerate_w52_generators()),
        "quadric_points": len(geometry.KLEIN_QUADRIC.points),
        "quadric_generators": len(gens),
        "quadric_generators_by_system": dict(sorted(systems.items())),
        "generators_per_quadric_point": per_point.pop() if len(per_point) == 1 else sorted(per_point),
        "ovoids": len(enumerate_ovoids()),
        "klein_bijection": klein_bijection_ok(),
    }
