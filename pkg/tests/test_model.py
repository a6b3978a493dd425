"""Polytope model: validation, circumspheres, distance reconstruction."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import delrank as dr
from tests.helpers import random_polytope

SQUARE_D = [[0, 1, 1, 2], [1, 0, 2, 1], [1, 2, 0, 1], [2, 1, 1, 0]]


def test_from_coords_rejects_bad_input():
    with pytest.raises(dr.TooFewVertices):
        dr.from_coords(2, [[0, 0], [1, 0]])
    with pytest.raises(dr.DuplicateVertex):
        dr.from_coords(2, [[0, 0], [1, 0], [0, 1], [0, 0]])
    with pytest.raises(dr.DimensionDeficient):
        dr.from_coords(2, [[0, 0], [1, 0], [2, 0]])
    with pytest.raises(dr.DimensionDeficient):
        dr.from_coords(2, [[0, 0, 0], [1, 0, 0], [0, 1, 0]])


def test_affine_basis_indices(square):
    assert dr.affine_basis_indices(square) == [0, 1, 2]
    degenerate_first = dr.from_coords(2, [[0, 0], [1, 0], [2, 0], [0, 1]])
    assert dr.affine_basis_indices(degenerate_first) == [0, 1, 3]


def test_distance_matrix(square):
    ident = [[1, 0], [0, 1]]
    d = dr.distance_matrix(square, ident)
    assert d == [[Fraction(x) for x in row] for row in SQUARE_D]


def test_validate_distance_matrix_rejects():
    with pytest.raises(ValueError):
        dr.validate_distance_matrix([[0, 1], [1, 0], [1, 1]])
    with pytest.raises(ValueError):
        dr.validate_distance_matrix([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        dr.validate_distance_matrix([[1, 1], [1, 0]])
    with pytest.raises(ValueError):
        dr.validate_distance_matrix([[0, -1], [-1, 0]])


def test_circumcenter_square(square):
    cd = dr.circumcenter(square, [[1, 0], [0, 1]])
    assert cd.center == (Fraction(1, 2), Fraction(1, 2))
    assert cd.radius_sq == Fraction(1, 2)


def test_circumcenter_not_cospherical(square):
    with pytest.raises(dr.NotCospherical):
        dr.circumcenter(square, [[1, 1], [1, 1]])
    with pytest.raises(dr.NotCospherical):
        dr.circumcenter(square, [[2, 1], [1, 2]])


def test_central_symmetry(square):
    ident = [[1, 0], [0, 1]]
    sym, pairing = dr.is_centrally_symmetric(square, ident)
    assert sym
    assert pairing == {0: 3, 1: 2, 2: 1, 3: 0}
    sym, pairing = dr.is_centrally_symmetric(dr.simplex(2), ident)
    assert not sym and pairing is None


def test_from_distances_square():
    p, gram = dr.from_distances(SQUARE_D)
    assert p.dim == 2
    assert gram == [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    assert p.vertices == (
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(1)),
        (Fraction(1), Fraction(1)),
    )
    assert dr.distance_matrix(p, gram) == [[Fraction(x) for x in row] for row in SQUARE_D]


def test_from_distances_rejects():
    # violates the quadrilateral of squared distances: form is indefinite
    with pytest.raises(dr.NotPositiveDefinite):
        dr.from_distances([[0, 1, 1], [1, 0, 9], [1, 9, 0]])
    with pytest.raises(dr.TooFewVertices):
        dr.from_distances([[0]])


def test_verify_empty_sphere_square(square):
    rep = dr.verify_empty_sphere(square, [[1, 0], [0, 1]], window=2)
    assert rep.ok()
    assert rep.points_checked == 36
    assert rep.strict_violations == ()
    assert rep.on_sphere_nonvertices == ()
    assert rep.caveats == ()
    assert "heuristic" in rep.note


def test_verify_empty_sphere_simplex_boundary_point():
    rep = dr.verify_empty_sphere(dr.simplex(2), [[1, 0], [0, 1]], window=1)
    assert rep.ok()
    assert rep.strict_violations == ()
    assert rep.on_sphere_nonvertices == ((1, 1),)


def test_verify_empty_sphere_window_zero(square):
    rep = dr.verify_empty_sphere(square, [[1, 0], [0, 1]], window=0)
    assert rep.box == ((0, 1), (0, 1))
    assert rep.points_checked == 4
    assert rep.ok()
    with pytest.raises(ValueError):
        dr.verify_empty_sphere(square, [[1, 0], [0, 1]], window=-1)


def test_verify_flags_sublattice():
    doubled = dr.from_coords(2, [[0, 0], [2, 0], [0, 2], [2, 2]])
    rep = dr.verify_empty_sphere(doubled, [[1, 0], [0, 1]], window=0)
    assert any("proper sublattice" in c for c in rep.caveats)
    # center (1,1) is an interior integer point of the doubled square
    assert (1, 1) in rep.strict_violations

    halves = dr.from_coords(1, [[0], [Fraction(1, 2)]])
    rep = dr.verify_empty_sphere(halves, [[1]], window=1)
    assert any("not all integral" in c for c in rep.caveats)


def test_verify_detects_interior_point():
    # 3x1 rectangle: (1,0) and (2,0) land strictly inside the circumsphere
    rect = dr.from_coords(2, [[0, 0], [3, 0], [0, 1], [3, 1]])
    rep = dr.verify_empty_sphere(rect, [[1, 0], [0, 1]], window=0)
    assert not rep.ok()
    assert (1, 0) in rep.strict_violations and (2, 0) in rep.strict_violations


@settings(max_examples=25)
@given(st.integers(0, 10_000))
def test_distance_matrix_translation_invariant(seed):
    rng = random.Random(seed)
    p = random_polytope(rng, max_dim=3)
    ident = [[int(i == j) for j in range(p.dim)] for i in range(p.dim)]
    a = [rng.randrange(-4, 5) for _ in range(p.dim)]
    q = dr.translate(p, a)
    assert dr.distance_matrix(p, ident) == dr.distance_matrix(q, ident)


def test_from_distances_then_distance_matrix_roundtrip(p0data):
    assert dr.distance_matrix(p0data.polytope, [list(r) for r in p0data.gram]) == [
        list(r) for r in p0data.distances
    ]
