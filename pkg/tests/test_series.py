from fractions import Fraction

import pytest

from conftest import SQUARE, STD_TRIANGLE, oracle_points
from ehrlift.algebra import (
    LaurentPoly,
    RationalSeries,
    VarSet,
    euler_operator,
    invert_variables,
    series_equal,
    specialize,
    truncate,
)
from ehrlift.errors import InputError
from ehrlift.linalg import det
from ehrlift.polytope import Polytope
from ehrlift.series import (
    HalfOpenCone,
    SimplicialCone,
    cone_over,
    expo_poly_1d_series,
    half_open_decompose,
    interior_q_series,
    parallelepiped_points,
    q_weighted_series,
    r_reciprocity_check,
    r_weighted_series,
    reciprocity_check_q,
    s_reciprocity_check,
    s_series_exppoly,
    s_weighted_series,
    scale_variable,
    transform,
)
from ehrlift.triangulation import triangulate
from ehrlift.weights import ExpPolyWeight, LinearForm

TX = VarSet(["t1", "x"])
QTX = VarSet(["q1", "t1", "x"])
X = VarSet(["x"])


def rs(vars, num: dict, den):
    return RationalSeries(LaurentPoly(vars, num), den)


def test_cone_over_examples(polys):
    assert sorted(cone_over(polys["square"])) == [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]
    assert cone_over(Polytope([(3, 4)])) == [(3, 4, 1)]
    assert len(cone_over(polys["chengyang2"])) == 5
    with pytest.raises(InputError):
        cone_over(Polytope([(0,), ("1/2",)]))


def test_parallelepiped_examples():
    assert parallelepiped_points(SimplicialCone([(0, 1), (1, 1)])).points == [(0, 0)]
    assert parallelepiped_points(SimplicialCone([(0, 1), (2, 1)])).points == [(0, 0), (1, 1)]
    C = HalfOpenCone(SimplicialCone([(0, 1), (1, 1)]), [1])
    assert parallelepiped_points(C).points == [(1, 1)]


def test_parallelepiped_lower_dimensional_cone():
    # cone over the segment (0,0)-(2,2) inside Z^3: index 2 in its span
    pts = parallelepiped_points(SimplicialCone([(0, 0, 1), (2, 2, 1)])).points
    assert pts == [(0, 0, 0), (1, 1, 1)]


@pytest.mark.parametrize("gens", [
    [(1, 0, 1), (0, 1, 1), (-1, -1, 1)],
    [(0, 0, 1), (3, 0, 1), (0, 2, 1)],
    [(1, 2, 1), (2, 1, 1), (0, 0, 1)],
    [(0, 0, 0, 1), (1, 0, 0, 1), (1, 1, 0, 1), (2, 1, 1, 1)],
])
def test_parallelepiped_count_is_determinant(gens):
    C = SimplicialCone(gens)
    assert len(parallelepiped_points(C)) == abs(det([list(g) for g in gens]))
    for opens in ([0], [0, 1], list(range(len(gens)))):
        assert len(parallelepiped_points(HalfOpenCone(C, opens))) == abs(det([list(g) for g in gens]))


def test_transform_examples():
    F = transform([HalfOpenCone(SimplicialCone([(0, 1), (1, 1)]))])
    assert series_equal(F, rs(TX, {(0, 0): 1}, [(0, 1), (1, 1)]))
    G = transform([HalfOpenCone(SimplicialCone([(0, 1), (2, 1)]))])
    assert series_equal(G, rs(TX, {(0, 0): 1, (1, 1): 1}, [(0, 1), (2, 1)]))
    assert series_equal(specialize(G, ["t1"]), rs(X, {(0,): 1, (1,): 1}, [(1,), (1,)]))


def _piece_counts(cones, n):
    total = 0
    for C in cones:
        pts = parallelepiped_points(C).points
        k = len(C.generators)
        # lattice points at level n: pi + sum m_j g_j with m_j >= 0
        def walk(j, level):
            nonlocal total
            if j == k:
                total += level == n
                return
            m = 0
            while level + m * C.generators[j][-1] <= n:
                walk(j + 1, level + m * C.generators[j][-1])
                m += 1
        for p in pts:
            walk(0, p[-1])
    return total


@pytest.mark.parametrize("name", ["square", "segment02", "cube", "chengyang2", "triangle"])
def test_half_open_pieces_partition_levels(polys, name):
    P = polys[name]
    cones = half_open_decompose(triangulate(P))
    for n in range(5):
        assert _piece_counts(cones, n) == P.count(n)


def test_half_open_pieces_partition_interior(polys):
    P = polys["square"]
    cones = half_open_decompose(triangulate(P), interior=True)
    assert [_piece_counts(cones, n) for n in range(5)] == [0, 0, 1, 4, 9]


def test_subdivided_segment():
    P = Polytope([(0,), (2,)])
    T = triangulate(P, "all")
    assert len(T) == 2
    cones = half_open_decompose(T)
    assert [_piece_counts(cones, n) for n in range(5)] == [2 * n + 1 for n in range(5)]


def test_single_simplex_has_no_open_facets():
    P = Polytope(STD_TRIANGLE)
    cones = half_open_decompose(triangulate(P))
    assert len(cones) == 1 and not cones[0].open_facets


def test_q_series_examples(polys):
    seg = polys["segment01"]
    F = q_weighted_series(seg, [LinearForm([1])])
    assert series_equal(F, rs(QTX, {(0, 0, 0): 1}, [(0, 0, 1), (1, 1, 1)]))
    E = q_weighted_series(polys["square"], [], specialize_t=True)
    assert E.render() == "(1+x)/(1-x)^3"


def _brute_q(P, forms, n):
    vars = VarSet.standard(len(forms), P.ambient_dim, x=False)
    terms = {}
    for a in oracle_points(P.vertices, n):
        e = tuple(f(a) for f in forms) + a
        terms[e] = terms.get(e, 0) + 1
    return LaurentPoly(vars, terms)


@pytest.mark.parametrize("name,coeffs", [
    ("segment01", [[1]]),
    ("segment02", [[1], [3]]),
    ("square", [[1, 1], [2, 3]]),
    ("triangle", [[1, -1]]),
    ("chengyang2", [[1, 1, 1]]),
    ("cube", [[1, 2, 0]]),
])
def test_q_series_truncation_oracle(polys, name, coeffs):
    P = polys[name]
    forms = [LinearForm(c) for c in coeffs]
    F = q_weighted_series(P, forms)
    for n, c in enumerate(truncate(F, "x", 4)):
        assert c == _brute_q(P, forms, n)


def test_r_series_examples(polys):
    F = r_weighted_series(polys["segment01"], [LinearForm([1])])
    c1 = truncate(F, "x", 1)[1]
    q, t = (LaurentPoly.var(VarSet(["q1", "t1"]), v) for v in ("q1", "t1"))
    assert c1 == 1 + (1 + q) * t
    G = r_weighted_series(polys["square"], [LinearForm([1, 1])])
    assert truncate(G, "x", 1)[1].total() == 8


def test_s_series_examples(polys):
    seg = polys["segment01"]
    F = s_weighted_series(seg, LinearForm([1]), specialize_t=True)
    assert series_equal(F, rs(X, {(1,): 1}, [(1,)] * 3))
    Z = s_weighted_series(seg, LinearForm([0]), specialize_t=True)
    assert Z.is_zero()
    S = s_weighted_series(polys["square"], LinearForm([1, 1]), specialize_t=True)
    assert [c.constant_term() for c in truncate(S, "x", 5)] == [n * (n + 1) ** 2 for n in range(6)]


def test_interior_series_examples(polys):
    F = interior_q_series(polys["segment01"])
    assert series_equal(F, rs(TX, {(1, 2): 1}, [(0, 1), (1, 1)]))
    G = interior_q_series(polys["square"], specialize_t=True)
    assert series_equal(G, rs(X, {(2,): 1, (3,): 1}, [(1,)] * 3))
    with pytest.raises(InputError):
        interior_q_series(Polytope([(0, 0), (1, 1)]))


@pytest.mark.parametrize("name,coeffs", [
    ("segment01", [[1]]),
    ("square", []),
    ("square", [[1, 1], [2, 3]]),
    ("triangle", [[1, 1]]),
    ("chengyang2", [[1, 1, 1]]),
])
def test_reciprocity_q(polys, name, coeffs):
    assert reciprocity_check_q(polys[name], [LinearForm(c) for c in coeffs])


def test_reciprocity_detects_wrong_sign(polys):
    P = polys["square"]
    F = q_weighted_series(P, [LinearForm([1, 1])])
    Fi = interior_q_series(P, [LinearForm([1, 1])])
    inv = invert_variables(F, F.vars.names)
    assert series_equal(inv, Fi * -1)  # (-1)^{s+1} with s = 2
    assert not series_equal(inv, Fi)


@pytest.mark.parametrize("name", ["segment01", "square", "chengyang2"])
def test_r_reciprocity_subset_sum(polys, name):
    P = polys[name]
    assert r_reciprocity_check(P, [LinearForm([1] * P.ambient_dim)])


def test_expo_poly_1d_examples():
    y = (0, 1)
    one = expo_poly_1d_series([((1,), 1)], 0, y)
    assert series_equal(one, rs(TX, {(0, 0): 1}, [(0, 1)]))
    lin = expo_poly_1d_series([((0, 1), 1)], 0, y)
    assert series_equal(lin, rs(TX, {(0, 1): 1}, [(0, 1), (0, 1)]))
    geo = expo_poly_1d_series([((1,), 2)], 0, y)
    assert series_equal(geo, rs(TX, {(0, 0): 1}, [((0, 1), 2)]))


@pytest.mark.parametrize("h", [
    [((1,), 1)],
    [((0, 1), 1)],
    [((1, 2, 1), 1)],
    [((1,), 2)],
    [((0, 1), 2), ((3,), "1/3")],
])
@pytest.mark.parametrize("shift", [0, Fraction(1, 2)])
def test_one_dimensional_reciprocity(h, shift):
    if shift and any(Fraction(g) not in (1, 4) for _, g in h):
        h = [(p, 4) for p, _ in h]  # keep gamma^shift rational
    y = (1, 1)
    G = expo_poly_1d_series(h, shift, y, "forward")
    Gb = expo_poly_1d_series(h, shift, y, "backward")
    assert series_equal(invert_variables(G, G.vars.names), Gb * -1)


def _brute_s(P, h, n, interior=False):
    vars = VarSet.standard(0, P.ambient_dim, x=False)
    terms = {}
    for a in oracle_points(P.vertices, n, strict=interior):
        if interior:
            terms[a] = h(tuple(-c for c in a), -n)
        else:
            terms[a] = h(a, n)
    return LaurentPoly(vars, terms)


H_CASES = {
    "1": [[((1,), 1)]],
    "a1": [[((0, 1), 1)]],
    "a1^2": [[((0, 0, 1), 1)]],
    "2^a1": [[((1,), 2)]],
    "a1*2^a1": [[((0, 1), 2)]],
}


def _weight(P, key):
    facs = list(H_CASES[key]) + [[((1,), 1)]] * (P.ambient_dim - 1)
    return ExpPolyWeight(facs, dim=P.ambient_dim)


@pytest.mark.parametrize("key", sorted(H_CASES))
@pytest.mark.parametrize("name", ["segment01", "square"])
def test_s_series_truncation_oracle(polys, name, key):
    P = polys[name]
    h = _weight(P, key)
    F = s_series_exppoly(P, h)
    Fi = s_series_exppoly(P, h, interior=True)
    for n, c in enumerate(truncate(F, "x", 4)):
        assert c == _brute_s(P, h, n)
    for n, c in enumerate(truncate(Fi, "x", 4)):
        assert c == _brute_s(P, h, n, interior=True)


def test_s_series_with_level_factor(polys):
    P = polys["segment01"]
    h = ExpPolyWeight([[((0, 1), 1)], [((1,), 3)]], dim=1)  # a1 * 3^n
    F = s_series_exppoly(P, h)
    for n, c in enumerate(truncate(F, "x", 4)):
        assert c == _brute_s(P, h, n)
    assert s_reciprocity_check(P, h)


def test_s_series_agrees_with_euler_route(polys):
    # F^{s, a1 2^{a1}} = theta_t1 applied to F(2 t1, x)
    P = polys["square"]
    h = ExpPolyWeight([[((0, 1), 2)], [((1,), 1)]], dim=2)
    F = s_series_exppoly(P, h)
    base = q_weighted_series(P, [])
    other = euler_operator(scale_variable(base, "t1", 2), "t1")
    assert series_equal(F, other)


def test_s_series_on_rational_polytope():
    P = Polytope([(0,), ("1/2",)])
    h = ExpPolyWeight([[((0, 1), 1)]])
    F = s_series_exppoly(P, h)
    for n, c in enumerate(truncate(F, "x", 5)):
        assert c.total() == sum(a for a in range(n // 2 + 1))
    assert s_reciprocity_check(P, h)


@pytest.mark.parametrize("key", sorted(H_CASES))
@pytest.mark.parametrize("verts", [[(0,), (1,)], STD_TRIANGLE, SQUARE])
def test_s_reciprocity(verts, key):
    P = Polytope(verts)
    assert s_reciprocity_check(P, _weight(P, key))


def test_custom_triangulation_gives_same_series(polys):
    P = polys["square"]
    T = triangulate(P, "all")
    F = q_weighted_series(P, [LinearForm([1, 1])], triangulation=T)
    assert series_equal(F, q_weighted_series(P, [LinearForm([1, 1])]))
