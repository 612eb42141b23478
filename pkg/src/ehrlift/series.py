"""Generating functions of cones over polytopes.

Pipeline: triangulate P, take the cones over the simplices, make them
half-open with respect to a generic reference point so that they partition
cone(P), and sum the integer-point transforms of the pieces.  Weighted series
follow by monomial substitution (q), inclusion-exclusion (r) or the Euler
operator (s); exponential-polynomial weights are expanded in the generator
coordinates of each piece.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb, floor
from typing import Iterable, Sequence

from .algebra import (
    LaurentPoly,
    RationalSeries,
    VarSet,
    drop_variables,
    invert_variables,
    q_derivative_at_one,
    series_equal,
    set_to_one,
    specialize,
    substitute_monomial,
)
from .errors import InputError
from .linalg import det, norm, rank, solve
from .polytope import Polytope
from .triangulation import Triangulation, triangulate
from .weights import ExpPolyWeight, LinearForm, WeightSystem


# --------------------------------------------------------------------------
# cones
# --------------------------------------------------------------------------


def cone_over(P: Polytope) -> list[tuple[int, ...]]:
    """{(v, 1) : v vertex of P} for a lattice polytope."""
    if not P.is_lattice:
        raise InputError("cone_over needs lattice vertices")
    return [tuple(int(c) for c in v) + (1,) for v in P.vertices]


def homogenize(v: Sequence) -> tuple[int, ...]:
    """Smallest integer multiple of (v, 1)."""
    fr = [Fraction(c) for c in v] + [Fraction(1)]
    den = 1
    for c in fr:
        den = den * c.denominator // _gcd(den, c.denominator)
    return tuple(int(c * den) for c in fr)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class SimplicialCone:
    """Cone spanned by linearly independent integer generators (last coord = level)."""

    def __init__(self, generators: Iterable[Sequence[int]]):
        self.generators = tuple(tuple(int(c) for c in g) for g in generators)
        if not self.generators:
            raise InputError("a cone needs generators")
        if rank([list(g) for g in self.generators]) != len(self.generators):
            raise InputError("cone generators are linearly dependent")
        if any(g[-1] <= 0 for g in self.generators):
            raise InputError("every generator needs a positive level")

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def ambient(self) -> int:
        return len(self.generators[0])

    def coordinates(self, z: Sequence) -> list:
        """Coefficients of z in the generator basis (z must lie in the span)."""
        k = self.dim
        mat = [[self.generators[j][r] for j in range(k)] for r in range(self.ambient)]
        mu = solve(mat, list(z))
        if mu is None:
            raise InputError("point is outside the span of the cone")
        return mu

    def __repr__(self):
        return f"SimplicialCone({list(self.generators)!r})"


class HalfOpenCone:
    """A simplicial cone minus the facets opposite the generators in ``open_facets``."""

    def __init__(self, cone: SimplicialCone, open_facets: Iterable[int] = ()):
        self.cone = cone
        self.open_facets = frozenset(open_facets)
        if any(j < 0 or j >= cone.dim for j in self.open_facets):
            raise InputError("open facet index out of range")

    @property
    def generators(self):
        return self.cone.generators

    def contains(self, z: Sequence) -> bool:
        try:
            mu = self.cone.coordinates(z)
        except InputError:
            return False
        return all(m > 0 if j in self.open_facets else m >= 0 for j, m in enumerate(mu))

    def __repr__(self):
        return f"HalfOpenCone({list(self.generators)!r}, open={sorted(self.open_facets)})"


def _simplex_cones(T: Triangulation) -> list[SimplicialCone]:
    return [SimplicialCone(homogenize(T.points[i]) for i in s) for s in T.simplices]


def _reference_coordinates(cones: Sequence[SimplicialCone]):
    """Generic point inside the first cone and its coordinates in every cone."""
    first = cones[0]
    k = first.dim
    step = 0
    while True:
        step += 1
        c = [Fraction(1) + Fraction(1, (step + 1) ** (i + 1)) for i in range(k)]
        y = [sum((c[i] * first.generators[i][r] for i in range(k)), Fraction(0))
             for r in range(first.ambient)]
        mus = [cone.coordinates(y) for cone in cones]
        if all(m != 0 for mu in mus for m in mu):
            return y, mus


def half_open_decompose(T: Triangulation, interior: bool = False) -> list[HalfOpenCone]:
    """Half-open cones over the simplices of T partitioning cone(P).

    A facet is dropped when the reference point y lies strictly beyond it.
    With ``interior=True`` the reference point is -y instead, which yields a
    partition of the (relative) interior of the cone.
    """
    cones = _simplex_cones(T)
    _, mus = _reference_coordinates(cones)
    out = []
    for cone, mu in zip(cones, mus):
        if interior:
            opens = [j for j, m in enumerate(mu) if m > 0]
        else:
            opens = [j for j, m in enumerate(mu) if m < 0]
        out.append(HalfOpenCone(cone, opens))
    return out


# --------------------------------------------------------------------------
# fundamental parallelepipeds
# --------------------------------------------------------------------------


class ParallelepipedPoints:
    """Lattice points of a half-open fundamental parallelepiped."""

    def __init__(self, cone: HalfOpenCone, points: list[tuple[int, ...]], coords: list[tuple]):
        self.cone = cone
        self.points = points
        self.coords = coords  # generator coordinates of each point

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __repr__(self):
        return f"ParallelepipedPoints({self.points!r})"


def _best_coordinates(gens):
    k, m = len(gens), len(gens[0])
    best = None
    for I in combinations(range(m), k):
        d = det([[g[i] for i in I] for g in gens])
        if d != 0 and (best is None or abs(d) < abs(best[1])):
            best = (I, d)
    if best is None:
        raise InputError("generators are rank-deficient")
    return best


def _inverse(mat):
    k = len(mat)
    from .linalg import rref

    red, piv = rref([list(row) + [int(i == r) for i in range(k)] for r, row in enumerate(mat)])
    if len(piv) < k or piv[-1] >= k:
        raise InputError("singular matrix")
    return [row[k:] for row in red]


@lru_cache(maxsize=4096)
def _parallelepiped(gens: tuple, open_facets: frozenset):
    k = len(gens)
    I, _ = _best_coordinates(gens)
    M = [[gens[j][I[r]] for j in range(k)] for r in range(k)]  # columns = generators
    Minv = _inverse(M)
    steps = [tuple(Minv[j][r] - floor(Minv[j][r]) for j in range(k)) for r in range(k)]
    zero = tuple(Fraction(0) for _ in range(k))
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for c in frontier:
            for s in steps:
                e = tuple((a + b) - floor(a + b) for a, b in zip(c, s))
                if e not in seen:
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    pts, coords = [], []
    m = len(gens[0])
    for c in seen:
        c = tuple(Fraction(1) if (v == 0 and j in open_facets) else v for j, v in enumerate(c))
        z = [sum((c[j] * gens[j][r] for j in range(k)), Fraction(0)) for r in range(m)]
        if all(v.denominator == 1 for v in z):
            pts.append(tuple(int(v) for v in z))
            coords.append(c)
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    return [pts[i] for i in order], [coords[i] for i in order]


def parallelepiped_points(C: HalfOpenCone | SimplicialCone) -> ParallelepipedPoints:
    """Lattice points sum c_j g_j with c_j in [0,1), or (0,1] on open facets."""
    if isinstance(C, SimplicialCone):
        C = HalfOpenCone(C)
    pts, coords = _parallelepiped(C.generators, C.open_facets)
    return ParallelepipedPoints(C, pts, coords)


# --------------------------------------------------------------------------
# transforms and weighted series
# --------------------------------------------------------------------------


def series_vars(P_or_dim, p: int = 0) -> VarSet:
    s = P_or_dim.ambient_dim if isinstance(P_or_dim, Polytope) else int(P_or_dim)
    return VarSet.standard(p, s)


def _embed(vars: VarSet, vec: Sequence[int], p: int) -> tuple[int, ...]:
    """Cone vector (a, level) to an exponent over q1..qp, t1..ts, x."""
    return (0,) * p + tuple(vec)


def cone_transform(C: HalfOpenCone, vars: VarSet | None = None, p: int = 0) -> RationalSeries:
    vars = vars or VarSet.standard(p, C.cone.ambient - 1)
    num = LaurentPoly(vars, {_embed(vars, z, p): 1 for z in parallelepiped_points(C)})
    return RationalSeries(num, [_embed(vars, g, p) for g in C.generators])


def transform(cones: Sequence[HalfOpenCone], vars: VarSet | None = None, p: int = 0) -> RationalSeries:
    """Sum of the integer-point transforms of half-open cones."""
    if not cones:
        raise InputError("no cones to transform")
    vars = vars or VarSet.standard(p, cones[0].cone.ambient - 1)
    total = RationalSeries.zero(vars)
    for C in cones:
        total = total + cone_transform(C, vars, p)
    return total


def _weight_substitution(vars: VarSet, forms: Sequence[LinearForm], s: int, interior: bool = False):
    """Exponent vectors for t_i -> q^{w(e_i)} t_i (interior: q^{-w(-e_i)})."""
    p = len(forms)
    subs = []
    for i in range(s):
        e = [0] * s
        if interior:
            e[i] = -1
            qexp = [-f(e) for f in forms]
        else:
            e[i] = 1
            qexp = [f(e) for f in forms]
        for v in qexp:
            if isinstance(v, Fraction):
                raise InputError("linear weights need integer coefficients for q-series")
        m = list(qexp) + [int(j == i) for j in range(s)] + [0]
        subs.append((f"t{i + 1}", tuple(m)))
    assert len(vars) == p + s + 1
    return subs


def _linear_forms(W) -> list[LinearForm]:
    if W is None:
        return []
    if isinstance(W, (LinearForm,)):
        return [W]
    if not isinstance(W, WeightSystem):
        W = WeightSystem(list(W))
    return W.linear_forms()


def _q_pieces(P: Polytope, W, triangulation: Triangulation | None, interior: bool):
    forms = _linear_forms(W)
    p, s = len(forms), P.ambient_dim
    vars = VarSet.standard(p, s)
    T = triangulation or triangulate(P)
    subs = _weight_substitution(vars, forms, s, interior)
    pieces = []
    for C in half_open_decompose(T, interior=interior):
        F = cone_transform(C, vars, p)
        for name, m in subs:
            F = substitute_monomial(F, name, m)
        pieces.append(F)
    return vars, pieces


def _assemble(vars: VarSet, pieces, specialize_t: bool) -> RationalSeries:
    if specialize_t:
        ts = vars.t_names()
        pieces = [specialize(F, ts) for F in pieces]
        vars = vars.without(ts)
    total = RationalSeries.zero(vars)
    for F in pieces:
        total = total + F
    return total.reduced()


def q_weighted_series(P: Polytope, W=None, triangulation: Triangulation | None = None,
                      specialize_t: bool = False) -> RationalSeries:
    """F^{q,w}(q, t, x) = sum over cone(P) of q^{w(a)} t^a x^n."""
    vars, pieces = _q_pieces(P, W, triangulation, interior=False)
    return _assemble(vars, pieces, specialize_t)


def interior_q_series(P: Polytope, W=None, triangulation: Triangulation | None = None,
                      specialize_t: bool = False, relative: bool = False) -> RationalSeries:
    """Sum over the interior of cone(P) of q^{-w(-a)} t^a x^n."""
    if not relative and P.dim != P.ambient_dim:
        raise InputError("the interior series needs a full-dimensional cone")
    vars, pieces = _q_pieces(P, W, triangulation, interior=True)
    return _assemble(vars, pieces, specialize_t)


def ehrhart_series(P: Polytope, specialize_t: bool = True) -> RationalSeries:
    return q_weighted_series(P, None, specialize_t=specialize_t)


def r_weighted_series(P: Polytope, W=None, specialize_t: bool = False) -> RationalSeries:
    """Sum over I of prod_{j in I}(-q_j) / prod_i(1 - q_i) * F^q with q_k = 1 off I."""
    forms = _linear_forms(W)
    if W is not None and len(forms):
        WeightSystem(forms).check_liftable()
    Fq = q_weighted_series(P, forms, specialize_t=specialize_t)
    vars = Fq.vars
    p = len(forms)
    qs = [f"q{i + 1}" for i in range(p)]
    total = RationalSeries.zero(vars)
    for k in range(p + 1):
        for I in combinations(range(p), k):
            F = Fq
            for j in range(p):
                if j not in I:
                    F = set_to_one(F, qs[j])
            mono = LaurentPoly.monomial(vars, vars.exponent({qs[j]: 1 for j in I}), (-1) ** len(I))
            total = total + F * mono
    den = [vars.unit(q) for q in qs]
    return RationalSeries(total.num, list(total.den) + den).reduced()


def s_weighted_series(P: Polytope, w, specialize_t: bool = False) -> RationalSeries:
    """(q d/dq F^{q,w})|_{q=1}, with q removed from the variables."""
    forms = _linear_forms([w] if not isinstance(w, (list, tuple, WeightSystem)) else w)
    if len(forms) != 1:
        raise InputError("the s-weighted series takes a single linear weight")
    Fq = q_weighted_series(P, forms, specialize_t=specialize_t)
    return drop_variables(q_derivative_at_one(Fq, "q1"), ["q1"]).reduced()


def reciprocity_check_q(P: Polytope, W=None) -> bool:
    """F^q(1/q, 1/t, 1/x) == (-1)^{s+1} F°^q(q, t, x)."""
    F = q_weighted_series(P, W)
    Fi = interior_q_series(P, W)
    lhs = invert_variables(F, F.vars.names)
    sign = (-1) ** (P.ambient_dim + 1)
    return series_equal(lhs, Fi * sign)


def r_reciprocity_rhs(P: Polytope, W=None) -> RationalSeries:
    """(-1)^{s+1} sum_I prod_{j in I}(-1/q_j) / prod_i (1 - 1/q_i) * F°^q|_{q_k=1, k not in I}."""
    forms = _linear_forms(W)
    Fi = interior_q_series(P, forms)
    vars = Fi.vars
    p = len(forms)
    qs = [f"q{i + 1}" for i in range(p)]
    total = RationalSeries.zero(vars)
    for k in range(p + 1):
        for I in combinations(range(p), k):
            F = Fi
            for j in range(p):
                if j not in I:
                    F = set_to_one(F, qs[j])
            mono = LaurentPoly.monomial(vars, vars.exponent({qs[j]: -1 for j in I}), (-1) ** len(I))
            total = total + F * mono
    den = [tuple(-c for c in vars.unit(q)) for q in qs]
    sign = (-1) ** (P.ambient_dim + 1)
    return RationalSeries(total.num * sign, list(total.den) + den)


def r_reciprocity_check(P: Polytope, W=None) -> bool:
    F = r_weighted_series(P, W)
    return series_equal(invert_variables(F, F.vars.names), r_reciprocity_rhs(P, W))


# --------------------------------------------------------------------------
# exponential-polynomial weights
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _power_sum_numerator(kappa: int) -> tuple:
    """A_k with sum_{n>=0} n^k v^n = A_k(v) / (1 - v)^{k+1} (coefficients in v)."""
    num = [Fraction(1)]
    m = 1
    for _ in range(kappa):
        # v d/dv [N / (1-v)^m] = (v N' (1 - v) + m v N) / (1 - v)^{m+1}
        dN = [i * c for i, c in enumerate(num)]
        new = [Fraction(0)] * (len(num) + 1)
        for i, c in enumerate(dN):
            new[i] += c
            new[i + 1] -= c
        for i, c in enumerate(num):
            new[i + 1] += m * c
        while len(new) > 1 and new[-1] == 0:
            new.pop()
        num = new
        m += 1
    return tuple(num)


def power_series(vars: VarSet, kappa: int, gamma, g: Sequence[int], start: int = 0) -> RationalSeries:
    """sum_{n >= start} n^kappa gamma^n z^{n g}, start in {0, 1}."""
    A = _power_sum_numerator(kappa)
    g = tuple(g)
    gamma = Fraction(gamma)
    terms = {}
    for i, c in enumerate(A):
        if c:
            e = tuple(i * k for k in g)
            terms[e] = terms.get(e, 0) + c * gamma ** i
    F = RationalSeries(LaurentPoly(vars, terms), [(g, norm(gamma))] * (kappa + 1))
    if start == 1 and kappa == 0:
        F = F - RationalSeries.one(vars)
    return F


def _rational_power(gamma, c) -> Fraction:
    """gamma^c for rational c, exactly, or raise when it is irrational."""
    gamma, c = Fraction(gamma), Fraction(c)
    if c.denominator == 1:
        return gamma ** c.numerator
    q = c.denominator
    sign = 1
    if gamma < 0:
        if q % 2 == 0:
            raise InputError(f"{gamma}^{c} is not real")
        sign = -1
        gamma = -gamma

    def iroot(n):
        r = round(n ** (1.0 / q))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand ** q == n:
                return cand
        raise InputError(f"{gamma}^{c} is not rational")

    root = Fraction(iroot(gamma.numerator), iroot(gamma.denominator)) * sign
    return root ** c.numerator


def _shift_poly(poly: Sequence, c, sign: int) -> list[Fraction]:
    """Coefficients in n of P(sign*n + c)."""
    out = [Fraction(0)] * max(len(poly), 1)
    for k, a in enumerate(poly):
        a = Fraction(a)
        if not a:
            continue
        # a * (sign*n + c)^k
        for j in range(k + 1):
            out[j] += a * comb(k, j) * Fraction(sign) ** j * Fraction(c) ** (k - j)
    return out


def expo_poly_1d_series(h: Sequence[tuple[Sequence, object]], shift, y: Sequence[int],
                        direction: str = "forward", vars: VarSet | None = None) -> RationalSeries:
    """Closed form of sum_{n>=0} h(n+shift) z^{ny} (forward) or
    sum_{n>=1} h(-n+shift) z^{ny} (backward), h(x) = sum_j P_j(x) gamma_j^x."""
    if vars is None:
        vars = VarSet.standard(0, len(y) - 1)
    if direction not in ("forward", "backward"):
        raise InputError("direction must be 'forward' or 'backward'")
    y = tuple(y)
    total = RationalSeries.zero(vars)
    for poly, gamma in h:
        gamma = Fraction(gamma)
        if gamma == 0:
            raise InputError("exponential bases must be nonzero")
        scale = _rational_power(gamma, shift)
        if direction == "forward":
            coeffs = _shift_poly(poly, shift, 1)
            base, start = gamma, 0
        else:
            coeffs = _shift_poly(poly, shift, -1)
            base, start = 1 / gamma, 1
        for kappa, b in enumerate(coeffs):
            if b:
                total = total + power_series(vars, kappa, base, y, start) * (b * scale)
    return total


def _linear_in(vars_n: VarSet, const, coeffs) -> LaurentPoly:
    terms = {(0,) * len(vars_n): const}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * len(vars_n)
            e[k] = 1
            terms[tuple(e)] = terms.get(tuple(e), 0) + c
    return LaurentPoly(vars_n, terms)


def _exppoly_factors(h: ExpPolyWeight, negate: bool):
    """Per-coordinate term lists of h(a) or of h(-a); the level factor defaults to 1."""
    facs = [list(f) for f in h.factors]
    if not h.has_level_factor:
        facs.append([((1,), 1)])
    if negate:
        out = []
        for fac in facs:
            row = []
            for poly, g in fac:
                row.append((tuple(c * (-1) ** k for k, c in enumerate(poly)), Fraction(1) / Fraction(g)))
            out.append(row)
        facs = out
    return facs


def _s_series_pieces(cones: Sequence[HalfOpenCone], facs, vars: VarSet) -> RationalSeries:
    total = RationalSeries.zero(vars)
    for C in cones:
        gens = C.generators
        k = len(gens)
        vn = VarSet([f"n{j}" for j in range(k)])
        for pi in parallelepiped_points(C):
            for choice in product(*facs):
                gamma_pi = Fraction(1)
                Gam = [Fraction(1)] * k
                poly = LaurentPoly.constant(vn, 1)
                for i, (P_i, g_i) in enumerate(choice):
                    g_i = Fraction(g_i)
                    gamma_pi *= g_i ** pi[i]
                    for j in range(k):
                        Gam[j] *= g_i ** gens[j][i]
                    lin = _linear_in(vn, pi[i], [gens[j][i] for j in range(k)])
                    val = LaurentPoly(vn)
                    for c in reversed(P_i):
                        val = val * lin + c
                    poly = poly * val
                    if poly.is_zero():
                        break
                if poly.is_zero():
                    continue
                mono = LaurentPoly.monomial(vars, pi, gamma_pi)
                for kap, c in poly.terms.items():
                    F = RationalSeries(mono * c)
                    for j in range(k):
                        F = F * power_series(vars, kap[j], Gam[j], gens[j])
                    total = total + F
    return total


def s_series_exppoly(P: Polytope, h: ExpPolyWeight, interior: bool = False,
                     triangulation: Triangulation | None = None) -> RationalSeries:
    """F^{s,h}(t, x) (or the interior series with h(-a)) for rational bases."""
    if h.dim != P.ambient_dim:
        raise InputError("weight dimension does not match the polytope")
    if interior and P.dim != P.ambient_dim:
        raise InputError("the interior series needs a full-dimensional cone")
    T = triangulation or triangulate(P)
    vars = VarSet.standard(0, P.ambient_dim)
    cones = half_open_decompose(T, interior=interior)
    return _s_series_pieces(cones, _exppoly_factors(h, negate=interior), vars)


def s_reciprocity_check(P: Polytope, h: ExpPolyWeight) -> bool:
    """F^{s,h}(1/t, 1/x) == (-1)^{s+1} F°^{s,h}(t, x)."""
    F = s_series_exppoly(P, h)
    Fi = s_series_exppoly(P, h, interior=True)
    sign = (-1) ** (P.ambient_dim + 1)
    return series_equal(invert_variables(F, F.vars.names), Fi * sign)


def scale_variable(A: RationalSeries, var: str, c) -> RationalSeries:
    """Substitute var -> c * var for a nonzero rational c."""
    c = Fraction(c)
    i = A.vars.index(var)
    num = LaurentPoly(A.vars, {e: v * c ** e[i] for e, v in A.num.terms.items()})
    return RationalSeries(num, [(g, f * c ** g[i]) for g, f in A.den])
