import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mermin_ovoid import geometry as g
from mermin_ovoid import klein, mermin, pauli
from mermin_ovoid.errors import (
    NotAnEdgeError,
    OffQuadricError,
    PreconditionError,
    StructuralError,
)
from mermin_ovoid.gf2 import BitVector
from mermin_ovoid.mermin import PAPER_EDGES, Pentagram
from mermin_ovoid.pauli import parse

CLOSURES = {
    "green": {"ZZI", "ZIZ", "IZZ"},
    "blue": {"XXI", "XIZ", "IXZ"},
    "violet": {"XIX", "IZX", "XZI"},
    "yellow": {"IXX", "ZXI", "ZIX"},
    "red": {"IYY", "YIY", "YYI"},
}


def matrix_sign(observables):
    """Sign of a product known to be +-I, from the integer matrices."""
    m = np.linalg.multi_dot([pauli.to_matrix(o) for o in observables])
    eye = np.eye(m.shape[0], dtype=int)
    if (m == eye).all():
        return 1
    if (m == -eye).all():
        return -1
    raise AssertionError("product is not +-I")


def oracle_is_ovoid(points):
    """Independent ovoid test on raw ints: no three sum to zero and every
    four are linearly independent (no nonempty subset sums to zero)."""
    ints = [p.bits for p in points]
    for a, b, c in itertools.combinations(ints, 3):
        if a ^ b ^ c == 0:
            return False
    for quad in itertools.combinations(ints, 4):
        for k in range(1, 5):
            for sub in itertools.combinations(quad, k):
                acc = 0
                for v in sub:
                    acc ^= v
                if acc == 0:
                    return False
    return True


def test_paper_pentagram_structure(paper):
    assert len(paper.observables) == 10
    assert paper.labels == ["green", "blue", "violet", "yellow", "red"]
    mermin.check_incidence(paper)
    for i in range(10):
        assert len(paper.edges_of(i)) == 2
    assert all(o.sign == 1 for o in paper.observables)


def test_paper_pentagram_validates(paper):
    report = mermin.validate(paper)
    assert report.magic
    assert report.failures == []
    assert [e.sign for e in report.edges] == [1, 1, 1, 1, -1]
    assert report.negative_edges == ["red"]
    for e in report.edges:
        assert e.commuting and e.product_is_scalar
        assert e.sign == matrix_sign(paper.edge(e.label))


def test_flipping_zzz_keeps_magic(paper):
    i = paper.observables.index(parse("ZZZ"))
    flipped = paper.with_observable(i, parse("-ZZZ"))
    report = mermin.validate(flipped)
    assert [e.sign for e in report.edges] == [-1, 1, 1, 1, 1]
    assert report.magic


def test_anticommuting_edge_is_reported(paper):
    # IIZ sits on green and blue; ZZI anticommutes with XII on blue
    i = paper.observables.index(parse("IIZ"))
    bad = paper.with_observable(i, parse("ZZI"))
    report = mermin.validate(bad)
    blue = next(e for e in report.edges if e.label == "blue")
    assert not blue.commuting
    assert ("+XII", "+ZZI") in blue.anticommuting_pairs
    assert not report.magic
    assert report.failures


def test_xii_zii_on_one_edge_is_reported():
    p = Pentagram.from_edges({
        "a": ["XII", "ZII", "IIZ", "IZI"],
        "b": ["XII", "IXI", "XXZ", "IIX"],
        "c": ["ZII", "IXI", "ZZZ", "ZXX"],
        "d": ["IIZ", "XXZ", "ZZZ", "XZX"],
        "e": ["IZI", "IIX", "ZXX", "XZX"],
    })
    report = mermin.validate(p)
    a = report.edges[0]
    assert not a.commuting and ("+XII", "+ZII") in a.anticommuting_pairs
    assert not report.magic


def test_structural_errors(paper):
    with pytest.raises(StructuralError):
        Pentagram.from_edges({**PAPER_EDGES, "red": ("ZZZ", "XXZ", "XZX")})
    with pytest.raises(StructuralError):
        Pentagram.from_edges({**PAPER_EDGES, "red": ("III", "XXZ", "XZX", "ZXX")})
    i, j = paper.observables.index(parse("ZZZ")), paper.observables.index(parse("ZII"))
    with pytest.raises(StructuralError, match="occurs 2 times"):
        mermin.validate(paper.with_observable(i, paper.observables[j]))
    with pytest.raises(StructuralError, match="both signs"):
        Pentagram.from_edges({**PAPER_EDGES, "red": ("-ZZZ", "XXZ", "XZX", "ZXX")})


def test_identity_observable_is_reported(paper):
    i = paper.observables.index(parse("ZZZ"))
    report = mermin.validate(paper.with_observable(i, pauli.identity(3)))
    assert not report.magic
    assert any("identity" in f for f in report.failures)


def test_edge_affine_plane(paper):
    for label in paper.labels:
        pts = mermin.edge_affine_plane(paper, label)
        assert not (pts[0] + pts[1] + pts[2] + pts[3])
        assert not any(g.collinear(*t) for t in itertools.combinations(pts, 3))


def test_fig3_quadruple_is_not_an_edge():
    p = Pentagram.from_edges({
        "a": ["ZII", "IZI", "ZZI", "ZZZ"],
        "b": ["ZII", "IXI", "IIX", "ZXX"],
        "c": ["IZI", "XII", "IIX", "XZX"],
        "d": ["ZZI", "IXI", "XII", "YYI"],
        "e": ["ZZZ", "ZXX", "XZX", "YYI"],
    })
    with pytest.raises(NotAnEdgeError):
        mermin.edge_affine_plane(p, "a")


def test_closure_triples_match(paper):
    for label in paper.labels:
        triple = mermin.closure_triple(paper, label)
        assert {o.letters for o in triple} == CLOSURES[label]
        sign = pauli.product(triple).sign
        assert pauli.product(triple).is_identity()
        assert sign == matrix_sign(triple)
        plane = mermin.projective_closure(paper, label)
        assert plane in g.enumerate_w52_generators()
        extra = [pauli.symplectic_point(o) for o in triple]
        assert g.collinear(*extra)
    with_y = [label for label in paper.labels
              if any("Y" in o.letters for o in mermin.closure_triple(paper, label))]
    assert with_y == ["red"]


def test_to_ovoid_paper(paper):
    ov = mermin.to_ovoid(paper)
    assert len(ov.points) == 5 and len(set(ov.points)) == 5
    assert oracle_is_ovoid(ov.points)
    assert all(not g.collinear(*t) for t in itertools.combinations(ov.points, 3))
    assert all(not g.coplanar(q) for q in itertools.combinations(ov.points, 4))
    joining = {klein.LinePG32.through(x, y) for x, y in itertools.combinations(ov.points, 2)}
    assert set(ov.line_map.values()) == joining
    assert len(set(ov.line_map.values())) == 10
    # IIZ lies on green and blue
    i = paper.observables.index(parse("IIZ"))
    line = ov.line_map[i]
    assert {q for q in ov.points if q in line} == {ov.edge_points["green"], ov.edge_points["blue"]}


def test_closures_share_a_system(paper):
    planes = [g.as_generator(mermin.projective_closure(paper, l)) for l in paper.labels]
    for x, y in itertools.combinations(planes, 2):
        assert g.system_of(x.plane, y) == y.system
        assert len(set(x.plane.points()) & set(y.plane.points())) == 1


def test_to_ovoid_rejects_asymmetric():
    # a magic pentagram carrying Y letters: conjugate every qubit by (X, Z) -> (X, Y)
    def twist(word):
        return word.replace("Z", "y").replace("Y", "Z").replace("y", "Y")

    p = Pentagram.from_edges({k: [twist(w) for w in v] for k, v in PAPER_EDGES.items()})
    report = mermin.validate(p)
    assert all(e.commuting and e.product_is_scalar for e in report.edges)
    with pytest.raises(OffQuadricError, match=r"\+YII|\+IYI|\+IIY"):
        mermin.to_ovoid(p)


def test_from_ovoid_round_trip(paper):
    ov = mermin.to_ovoid(paper)
    back = mermin.from_ovoid(ov.points)
    assert mermin.validate(back).magic
    assert {o.unsigned() for o in back.observables} == {o.unsigned() for o in paper.observables}
    edge_sets = lambda p: {frozenset(o.letters for o in p.edge(l)) for l in p.labels}
    assert edge_sets(back) == edge_sets(paper)


def test_from_ovoid_rejects_non_ovoid():
    e = [BitVector.unit(4, i) for i in range(4)]
    coplanar = [e[0], e[1], e[2], e[0] + e[1] + e[2], e[3]]
    with pytest.raises(PreconditionError, match="coplanar"):
        mermin.from_ovoid(coplanar)


def test_enumerate_ovoids(paper):
    ovoids = mermin.enumerate_ovoids()
    assert all(len(o) == 5 for o in ovoids)
    assert list(ovoids) == sorted(ovoids)
    oracle = [q for q in itertools.combinations(g.projective_points(3), 5) if oracle_is_ovoid(q)]
    assert list(ovoids) == oracle
    assert len(ovoids) == 168
    assert tuple(sorted(mermin.to_ovoid(paper).points)) in ovoids


def test_every_ovoid_gives_a_magic_pentagram():
    for ov in mermin.enumerate_ovoids():
        p = mermin.from_ovoid(ov)
        assert mermin.validate(p).magic
        back = mermin.to_ovoid(p)
        assert tuple(sorted(back.points)) == ov


def test_sign_gauge_invariance(paper):
    for i, o in enumerate(paper.observables):
        flipped = paper.with_observable(i, -o)
        report = mermin.validate(flipped)
        assert report.magic
        base = mermin.validate(paper)
        changed = {a.label for a, b in zip(report.edges, base.edges) if a.sign != b.sign}
        assert changed == set(paper.edges_of(i))


@given(st.lists(st.sampled_from([1, -1]), min_size=10, max_size=10))
def test_random_sign_gauges_stay_magic(signs):
    p = mermin.paper_pentagram()
    p = Pentagram(
        tuple(pauli.PauliObservable(o.x, o.z, s) for o, s in zip(p.observables, signs)),
        p.edges,
    )
    assert mermin.validate(p).magic


def test_edge_products_order_independent(paper):
    for label in paper.labels:
        obs = paper.edge(label)
        expected = pauli.product(obs)
        for perm in itertools.permutations(obs):
            assert pauli.product(perm) == expected


def test_collinear_triple_impossible_in_commuting_zero_sum_quadruples(three_qubit_paulis):
    pts = [pauli.symplectic_point(p) for p in three_qubit_paulis]
    found = 0
    for a, b, c in itertools.combinations(pts, 3):
        if g.symplectic_form(a, b) or g.symplectic_form(a, c) or g.symplectic_form(b, c):
            continue
        d = a + b + c
        if not d or d <= c:
            continue
        if any(g.symplectic_form(d, x) for x in (a, b, c)):
            continue
        found += 1
        assert not any(g.collinear(*t) for t in itertools.combinations((a, b, c, d), 3))
    assert found > 0


def test_klein_incidence_three_ways(paper):
    ov = mermin.to_ovoid(paper)
    for i, j in itertools.combinations(range(10), 2):
        share = bool(set(paper.edges_of(i)) & set(paper.edges_of(j)))
        li, lj = ov.line_map[i], ov.line_map[j]
        meet_at_ovoid = any(q in li and q in lj for q in ov.points)
        u = pauli.symplectic_point(paper.observables[i])
        v = pauli.symplectic_point(paper.observables[j])
        singular_join = (
            pauli.commutes(paper.observables[i], paper.observables[j])
            and g.quadratic_form(u + v) == 0
        )
        assert share == meet_at_ovoid == singular_join


def test_theorem_for_every_ovoid_pentagram():
    systems = set()
    for ov in mermin.enumerate_ovoids():
        systems.add(mermin.to_ovoid(mermin.from_ovoid(ov)).system)
    assert len(systems) == 1
