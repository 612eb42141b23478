from fractions import Fraction

import pytest

from conftest import CHENGYANG2, CUBE, SEGMENT02, SQUARE, TRIANGLE, oracle_count, oracle_points
from ehrlift.errors import InputError
from ehrlift.polytope import (
    Polytope,
    cone_facets,
    integrate_monomial,
    integrate_polynomial,
    volume,
)


@pytest.mark.parametrize("verts", [SQUARE, TRIANGLE, SEGMENT02, CUBE, CHENGYANG2])
def test_lattice_points_match_oracle(verts):
    P = Polytope(verts)
    for n in range(4):
        assert P.lattice_points(n) == oracle_points(verts, n)
        assert P.count(n) == oracle_count(verts, n)


@pytest.mark.parametrize("verts", [SQUARE, TRIANGLE, CUBE, CHENGYANG2])
def test_interior_points_match_oracle(verts):
    P = Polytope(verts)
    for n in range(5):
        assert P.count(n, interior=True) == oracle_count(verts, n, strict=True)


def test_redundant_points_are_dropped():
    P = Polytope([(0, 0), (2, 0), (0, 2), (1, 1), (1, 0)])
    assert sorted(P.vertices) == [(0, 0), (0, 2), (2, 0)]


def test_lower_dimensional_polytope():
    P = Polytope([(0, 0, 1), (1, 1, 1)])
    assert P.dim == 1 and P.ambient_dim == 3
    assert P.count(3) == 4
    assert P.lattice_points(2) == [(0, 0, 2), (1, 1, 2), (2, 2, 2)]


def test_relative_volume_uses_affine_lattice():
    assert Polytope([(0, 0), (2, 2)]).volume() == 2
    assert Polytope([(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)]).volume() == 1


def test_volumes():
    assert volume(Polytope(SQUARE)) == 1
    assert volume(Polytope(TRIANGLE)) == Fraction(1, 2)
    assert volume(Polytope(CHENGYANG2)) == Fraction(1, 3)
    assert volume(Polytope(CUBE)) == 1


def test_rational_polytope_points():
    P = Polytope([(0,), ("1/2",)])
    assert not P.is_lattice
    assert [P.count(n) for n in range(5)] == [1, 1, 2, 2, 3]


def test_integrals_against_factorial_formula():
    sq = Polytope(SQUARE)
    assert integrate_monomial(sq, (1, 1)) == Fraction(1, 4)
    assert integrate_monomial(sq, (2, 0)) == Fraction(1, 3)
    # simplex: int x^a y^b = a! b! / (a+b+2)!
    simplex = Polytope([(0, 0), (1, 0), (0, 1)])
    assert integrate_monomial(simplex, (1, 1)) == Fraction(1, 24)
    assert integrate_monomial(simplex, (2, 1)) == Fraction(2, 120)
    assert integrate_polynomial(sq, [(1, (1, 0)), (1, (0, 1))]) == 1


def test_cone_facets_of_quadrant_cone():
    normals = cone_facets([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
    assert sorted(normals) == sorted([(1, 0, 0), (0, 1, 0), (-1, 0, 1), (0, -1, 1)])


def test_contains_and_relint():
    P = Polytope(SQUARE)
    assert P.contains((1, 1)) and not P.in_relint((1, 1))
    assert P.in_relint((Fraction(1, 2), Fraction(1, 2)))
    assert P.contains((2, 2), 2) and not P.contains((3, 0), 2)


def test_empty_input_rejected():
    with pytest.raises(InputError):
        Polytope([])
