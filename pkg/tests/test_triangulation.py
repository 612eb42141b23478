from fractions import Fraction

import pytest

from conftest import CHENGYANG2, CUBE, SQUARE
from ehrlift.errors import GuardExceeded
from ehrlift.polytope import Polytope
from ehrlift.triangulation import all_triangulations, configuration, triangulate


def test_placing_covers_volume():
    for verts in (SQUARE, CUBE, CHENGYANG2):
        P = Polytope(verts)
        T = triangulate(P)
        assert T.total_volume() == P.volume()


def test_square_has_two_triangulations():
    Ts = list(all_triangulations(SQUARE))
    assert len(Ts) == 2
    assert all(len(T) == 2 for T in Ts)


def test_collinear_configuration():
    Ts = list(all_triangulations([(0,), (1,), (2,)]))
    assert sorted(len(T) for T in Ts) == [1, 2]


def test_chengyang2_two_triangulations():
    assert len(list(all_triangulations(CHENGYANG2))) == 2


def test_cube_triangulation_count():
    # the 3-cube has 74 triangulations using its vertices
    assert len(list(all_triangulations(CUBE))) == 74


def test_every_enumerated_triangulation_has_full_volume():
    for T in all_triangulations(CUBE):
        assert T.total_volume() == 1


def test_guard():
    pts = [(i, i * i) for i in range(13)]
    with pytest.raises(GuardExceeded):
        list(all_triangulations(pts))


def test_configuration_choices():
    P = Polytope([(0, 0), (2, 0), (0, 2)])
    assert len(configuration(P, "vertices")) == 3
    assert len(configuration(P, "all")) == 6
    T = triangulate(P, "all")
    assert len(T) == 4 and T.total_volume() == 2
    assert all(T.volume_of(s) == Fraction(1, 2) for s in T.simplices)
