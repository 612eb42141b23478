"""Brute-force weighted counts, interpolation, h*-data and theorem checks.

Every check returns a :class:`CheckResult`; ``CheckResult.require()`` turns a
failure into :class:`~ehrlift.errors.CheckFailed`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .algebra import LaurentPoly, RationalSeries, VarSet, series_equal, truncate
from .errors import CheckFailed, InputError
from .lift import (
    SquarePartitionSemigroup,
    cone_over,
    construct_H_Pw,
    hilbert_basis,
    is_irreducible,
    lift_q,
    lift_r,
)
from .linalg import Number, norm
from .polytope import Polytope, integrate_polynomial, standard_polytopes
from .series import (
    half_open_decompose,
    parallelepiped_points,
    q_weighted_series,
    s_weighted_series,
)
from .triangulation import Triangulation, all_triangulations, configuration
from .weights import (
    LinearForm,
    MonomialWeight,
    PolynomialWeight,
    Weight,
    WeightSystem,
    constant,
    coordinate_sum,
    to_polynomial,
)


# --------------------------------------------------------------------------
# univariate polynomials and h*-data
# --------------------------------------------------------------------------


class UniPoly:
    """Polynomial in n with exact rational coefficients, lowest degree first."""

    def __init__(self, coeffs: Iterable[Number]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(norm(c) for c in cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, n: Number) -> Number:
        v = Fraction(0)
        for c in reversed(self.coeffs):
            v = v * n + c
        return norm(v)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == UniPoly(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        k = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (k - len(self.coeffs))
        b = list(other.coeffs) + [0] * (k - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def render(self, var: str = "n") -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if out:
                out += "-" if c < 0 else "+"
            elif c < 0:
                out = "-"
            out += body
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"UniPoly({self.render()!r})"


def _binomial_poly(k: int) -> list[Fraction]:
    """Coefficients of C(n, k) as a polynomial in n."""
    poly = [Fraction(1)]
    for j in range(k):
        # multiply by (n - j) / (j + 1)
        new = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] += c / (j + 1)
            new[i] -= c * j / (j + 1)
        poly = new
    return poly


def interpolate_values(values: Sequence[Number]) -> UniPoly:
    """The polynomial of degree < len(values) taking values[n] at n = 0, 1, ..."""
    diffs = [Fraction(v) for v in values]
    out = [Fraction(0)] * max(len(values), 1)
    for k in range(len(values)):
        for i, c in enumerate(_binomial_poly(k)):
            out[i] += diffs[0] * c
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    return UniPoly(out)


@dataclass(frozen=True)
class HStarData:
    """h(x) / (1 - x)^exponent."""

    numerator: tuple
    exponent: int

    def series(self) -> RationalSeries:
        vars = VarSet(["x"])
        num = LaurentPoly(vars, {(i,): c for i, c in enumerate(self.numerator)})
        return RationalSeries(num, [(1,)] * self.exponent)

    def render(self) -> str:
        return self.series().render()

    def coefficients(self, n: int) -> list[Number]:
        """First n coefficients of the expansion."""
        out = []
        for m in range(n):
            out.append(norm(sum((Fraction(c) * comb(m - i + self.exponent - 1, self.exponent - 1)
                                 for i, c in enumerate(self.numerator) if i <= m), Fraction(0))))
        return out


def series_from_poly(E: UniPoly, exponent: int | None = None) -> HStarData:
    """h(x) with sum E(n) x^n = h(x) / (1 - x)^{deg E + 1}."""
    if exponent is None:
        exponent = E.degree + 1
    if E.degree >= exponent:
        raise InputError("exponent too small for the polynomial degree")
    if not E.coeffs:
        return HStarData((), 0)
    vals = [Fraction(E(n)) for n in range(exponent)]
    h = []
    for k in range(exponent):
        h.append(sum((Fraction((-1) ** j * comb(exponent, j)) * vals[k - j] for j in range(k + 1)),
                     Fraction(0)))
    while h and h[-1] == 0:
        h.pop()
    data = HStarData(tuple(norm(c) for c in h), exponent)
    top = E.degree + 3
    if data.coefficients(top + 1) != [E(n) for n in range(top + 1)]:
        raise CheckFailed("h*-round trip failed")
    return data


# --------------------------------------------------------------------------
# brute-force counts
# --------------------------------------------------------------------------


def count_weighted(P: Polytope, f, n: int) -> Number:
    """sum of f(a) over the lattice points a of nP."""
    if n < 0:
        raise InputError("n must be nonnegative")
    if isinstance(f, (int, Fraction)):
        f = constant(f, P.ambient_dim)
    total = Fraction(0)
    for a in P.lattice_points(n):
        total += f(a, n)
    return norm(total)


def _forms(W) -> list[LinearForm]:
    if W is None:
        return []
    if not isinstance(W, WeightSystem):
        W = WeightSystem(list(W))
    return W.linear_forms()


def _values(forms, a):
    out = []
    for f in forms:
        v = f(a)
        if isinstance(v, Fraction):
            raise InputError("weights must be integral on lattice points")
        out.append(v)
    return out


def count_q(P: Polytope, W, n: int, interior: bool = False) -> LaurentPoly:
    """sum q^{w(a)} t^a over nP (interior: over int(nP) with q^{-w(-a)})."""
    forms = _forms(W)
    vars = VarSet.standard(len(forms), P.ambient_dim, x=False)
    terms: dict = {}
    pts = P.interior_lattice_points(n) if interior else P.lattice_points(n)
    for a in pts:
        if interior:
            e = tuple(-v for v in _values(forms, tuple(-c for c in a))) + a
        else:
            e = tuple(_values(forms, a)) + a
        terms[e] = terms.get(e, 0) + 1
    return LaurentPoly(vars, terms)


def count_r(P: Polytope, W, n: int) -> LaurentPoly:
    """sum over a in nP and 0 <= b_i <= w_i(a) of q^b t^a."""
    forms = _forms(W)
    vars = VarSet.standard(len(forms), P.ambient_dim, x=False)
    total = LaurentPoly(vars)
    for a in P.lattice_points(n):
        vals = _values(forms, a)
        if any(v < 0 for v in vals):
            raise InputError(f"weight is negative at {a}")
        term = LaurentPoly.monomial(vars, (0,) * len(forms) + a)
        for i, v in enumerate(vals):
            box = LaurentPoly(vars, {tuple(j if k == i else 0 for k in range(len(vars))): 1
                                     for j in range(v + 1)})
            term = term * box
        total = total + term
    return total


def count_s(P: Polytope, h: Weight, n: int, interior: bool = False) -> LaurentPoly:
    """sum h(a) t^a over nP, or sum h(-a) t^a over int(nP) (level included)."""
    vars = VarSet.standard(0, P.ambient_dim, x=False)
    terms: dict = {}
    if interior:
        for a in P.interior_lattice_points(n):
            terms[a] = h(tuple(-c for c in a), -n)
    else:
        for a in P.lattice_points(n):
            terms[a] = h(a, n)
    return LaurentPoly(vars, terms)


def _weight_degree(f) -> int:
    if isinstance(f, (int, Fraction)):
        return 0
    if isinstance(f, LinearForm):
        return 1 if any(f.coeffs) else 0
    if isinstance(f, (MonomialWeight, PolynomialWeight)):
        return f.degree
    raise InputError("interpolation needs a polynomial weight")


def interpolate(P: Polytope, f=1, extra: int = 3) -> UniPoly:
    """E^{s,f}_P(n) from nodes 0..d+p, validated on `extra` further nodes."""
    if not P.is_lattice:
        raise InputError("interpolation needs a lattice polytope")
    top = P.dim + _weight_degree(f)
    vals = [count_weighted(P, f, n) for n in range(top + 1 + extra)]
    E = interpolate_values(vals[: top + 1])
    for n in range(top + 1, top + 1 + extra):
        if E(n) != vals[n]:
            raise CheckFailed(f"interpolation disagrees with the count at n={n}")
    return E


def ehrhart_polynomial(P: Polytope) -> UniPoly:
    return interpolate(P, 1)


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    polytope: str
    weight: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"CHECK {self.name} {self.polytope} {self.weight} {status} {self.detail}".rstrip()

    def require(self) -> "CheckResult":
        if not self.passed:
            raise CheckFailed(self.line())
        return self

    def __bool__(self):
        return self.passed


def _ids(pid, wid):
    return pid or "P", wid or "W"


def verify_q_lift(P: Polytope, W, pid=None, wid=None, top: int = 5) -> CheckResult:
    """|nP| = |n P^w| for n <= top and dim P^w = dim P."""
    pid, wid = _ids(pid, wid)
    W = W if isinstance(W, WeightSystem) else WeightSystem(list(W or []), dim=P.ambient_dim)
    L = lift_q(P, W)
    if L.dim != P.dim:
        return CheckResult("q_lift", pid, wid, False, f"dim {L.dim} != {P.dim}")
    counts = []
    for n in range(top + 1):
        a, b = P.count(n), L.count(n)
        if a != b:
            return CheckResult("q_lift", pid, wid, False, f"n={n} {a}!={b}")
        counts.append(a)
    return CheckResult("q_lift", pid, wid, True, "counts=" + ",".join(map(str, counts)))


def verify_r_lift(P: Polytope, W, pid=None, wid=None, top: int = 5) -> CheckResult:
    """E_{P_w}(n) = sum over subsets J of E^{s, prod_J w_j}(n) = E^{s, prod(w_i+1)}(n)."""
    pid, wid = _ids(pid, wid)
    W = W if isinstance(W, WeightSystem) else WeightSystem(list(W or []), dim=P.ambient_dim)
    L = lift_r(P, W)
    f = W.product_plus_one() if len(W) else constant(1, P.ambient_dim)
    subsets = [W.subsystem(J).product() if J else constant(1, P.ambient_dim)
               for k in range(len(W) + 1) for J in combinations(range(len(W)), k)]
    counts = []
    for n in range(top + 1):
        lhs = L.count(n)
        mid = sum((Fraction(count_weighted(P, g, n)) for g in subsets), Fraction(0))
        rhs = count_weighted(P, f, n)
        if not (lhs == mid == rhs):
            return CheckResult("r_lift", pid, wid, False, f"n={n} {lhs},{norm(mid)},{rhs}")
        counts.append(lhs)
    return CheckResult("r_lift", pid, wid, True, "counts=" + ",".join(map(str, counts)))


def hilbert_bound(P: Polytope) -> int:
    """Cone over a lattice d-polytope: Hilbert basis in degrees <= max(1, d - 1)."""
    return max(1, P.dim - 1)


def verify_hilbert_lift(P: Polytope, W, pid=None, wid=None) -> CheckResult:
    """HB(cone over P_w) = {(c, b, d) : (c, d) in HB(cone over P), b <= w(c)}."""
    pid, wid = _ids(pid, wid)
    W = W if isinstance(W, WeightSystem) else WeightSystem(list(W or []), dim=P.ambient_dim)
    L = lift_r(P, W)
    HP = hilbert_basis(cone_over(P), hilbert_bound(P))
    HL = hilbert_basis(cone_over(L), hilbert_bound(L))
    expected = construct_H_Pw(HP, W)
    if HL != expected:
        extra = sorted(HL.as_set() ^ expected.as_set())[:3]
        return CheckResult("hilbert_lift", pid, wid, False, f"differ at {extra}")
    if not (HP.certified and HL.certified):
        return CheckResult("hilbert_lift", pid, wid, False, "basis not certified")
    return CheckResult("hilbert_lift", pid, wid, True, f"size={len(HL)}")


def verify_dim_formula(P: Polytope, w: MonomialWeight, pid=None, wid=None) -> CheckResult:
    """dim P_w = deg E_{P_w} = dim P + r, r = number of factors not vanishing on P."""
    pid, wid = _ids(pid, wid)
    W = w.coordinate_system()
    forms = W.linear_forms()
    r = sum(1 for f in forms if any(f(v) != 0 for v in P.vertices))
    L = lift_r(P, W)
    E = interpolate(L, 1)
    d = P.dim
    ok = L.dim == d + r and E.degree == d + r
    detail = f"dim={L.dim} deg={E.degree} expected={d + r}"
    if ok and r == len(forms) and len(forms):
        Es = interpolate(P, w.as_polynomial())
        ok = Es.degree == d + len(forms)
        detail += f" deg_s={Es.degree}"
    return CheckResult("dim_formula", pid, wid, ok, detail)


def _hstar(P: Polytope) -> HStarData:
    return series_from_poly(ehrhart_polynomial(P), P.dim + 1)


def _dominates(a: Sequence, b: Sequence) -> bool:
    k = max(len(a), len(b))
    a = list(a) + [0] * (k - len(a))
    b = list(b) + [0] * (k - len(b))
    return all(x >= y for x, y in zip(a, b))


def verify_positivity(P: Polytope, w: LinearForm, pid=None, wid=None) -> CheckResult:
    """deg E^{s,w} = d+1, h(x) in N[x] for F^{s,w} = h/(1-x)^{d+2}, h*(P_w) >= h*(P)."""
    pid, wid = _ids(pid, wid)
    d = P.dim
    E = interpolate(P, w)
    if E.degree != d + 1:
        return CheckResult("positivity", pid, wid, False, f"deg={E.degree}")
    h = series_from_poly(E, d + 2)
    if any(not (isinstance(c, int) and c >= 0) for c in h.numerator):
        return CheckResult("positivity", pid, wid, False, f"h={list(h.numerator)}")
    F = s_weighted_series(P, w, specialize_t=True)
    if not series_equal(F, h.series()):
        return CheckResult("positivity", pid, wid, False, "series engine disagrees")
    hw = _hstar(lift_r(P, WeightSystem([w])))
    hp = _hstar(P)
    if not _dominates(hw.numerator, hp.numerator):
        return CheckResult("positivity", pid, wid, False,
                           f"h*(P_w)={list(hw.numerator)} h*(P)={list(hp.numerator)}")
    return CheckResult("positivity", pid, wid, True,
                       "h=" + ",".join(map(str, h.numerator)) + " h*(P_w)=" + ",".join(map(str, hw.numerator)))


def verify_bounds(P: Polytope, f: LinearForm, w: LinearForm | None = None,
                  pid=None, wid=None, top: int = 8) -> CheckResult:
    """c1 n^p E_P(n) <= E^{s,f}(n) <= c2 n^p E_P(n) and the lambda_n window for w."""
    pid, wid = _ids(pid, wid)
    w = w or f
    fv = [f(v) for v in P.vertices]
    wv = [w(v) for v in P.vertices]
    c1, c2 = min(fv), max(fv)
    lo, hi = min(wv), max(wv)
    for n in range(top + 1):
        EP = P.count(n)
        Ef = count_weighted(P, f, n)
        if not (c1 * n * EP <= Ef <= c2 * n * EP):
            return CheckResult("bounds", pid, wid, False, f"n={n} E^s={Ef}")
        if n >= 1:
            lam = Fraction(count_weighted(P, w, n)) / (n * EP)
            if not (lo <= lam <= hi):
                return CheckResult("bounds", pid, wid, False, f"n={n} lambda={lam}")
    detail = f"c1={c1} c2={c2}"
    if lo == hi:
        k = lo
        for n in range(top + 1):
            if count_weighted(P, w, n) != k * n * P.count(n):
                return CheckResult("bounds", pid, wid, False, f"constant weight fails at n={n}")
        if k > 0 and lift_r(P, WeightSystem([w])).volume() != k * P.volume():
            return CheckResult("bounds", pid, wid, False, "vol(P_w) != k vol(P)")
        detail += f" k={k}"
    return CheckResult("bounds", pid, wid, True, detail)


def verify_leading_coefficient(P: Polytope, f, pid=None, wid=None) -> CheckResult:
    """Leading coefficient of E^{s,f} equals the integral of f over P."""
    pid, wid = _ids(pid, wid)
    if not P.is_full_dimensional:
        raise InputError("leading-coefficient check needs a full-dimensional polytope")
    poly = to_polynomial(f, P.ambient_dim) if not isinstance(f, (int, Fraction)) else constant(f, P.ambient_dim)
    if not poly.is_homogeneous():
        raise InputError("leading-coefficient check needs a homogeneous weight")
    E = interpolate(P, poly)
    integral = integrate_polynomial(P, poly.items())
    ok = E.degree == P.dim + poly.degree and E.leading == integral
    return CheckResult("leading_coefficient", pid, wid, ok, f"leading={E.leading} integral={integral}")


def _weight_vectors(forms, pts):
    return sorted(tuple(f(p) for f in forms) for p in pts)


def compatible_triangulation_search(P: Polytope, W, points="vertices", pid=None, wid=None):
    """First triangulation whose simplices share one multiset of weight vectors.

    Returns (triangulation or None, CheckResult).  When one is found the
    assembled numerator over prod(1 - q^{alpha_i} x) must be nonnegative and
    series-equal to the engine's q-series.
    """
    pid, wid = _ids(pid, wid)
    forms = _forms(W)
    pts = configuration(P, points)
    found = None
    for T in all_triangulations(pts, P.frame):
        multisets = {tuple(_weight_vectors(forms, verts)) for verts in T.vertex_sets()}
        if len(multisets) == 1:
            found = T
            break
    if found is None:
        return None, CheckResult("compatible", pid, wid, True, f"none config={points}")
    num, den = compatible_numerator(P, forms, found)
    if any(c < 0 for c in num.terms.values()):
        return found, CheckResult("compatible", pid, wid, False, "negative numerator coefficient")
    engine = q_weighted_series(P, forms, specialize_t=True)
    if not series_equal(RationalSeries(num, den), engine):
        return found, CheckResult("compatible", pid, wid, False, "numerator disagrees with engine")
    return found, CheckResult("compatible", pid, wid, True, f"found numerator={num.render()}")


def compatible_numerator(P: Polytope, forms, T: Triangulation):
    """Numerator and denominator of the q-series (t = 1) assembled from T."""
    p = len(forms)
    vars = VarSet.standard(p, 0)
    alphas = _weight_vectors(forms, T.vertex_sets()[0])
    den = [tuple(a) + (1,) for a in alphas]
    terms: dict = {}
    for C in half_open_decompose(T):
        if sorted(tuple(f(g[:-1]) for f in forms) for g in C.generators) != alphas:
            raise InputError("triangulation is not compatible")
        for z in parallelepiped_points(C):
            e = tuple(f(z[:-1]) for f in forms) + (z[-1],)
            terms[e] = terms.get(e, 0) + 1
    return LaurentPoly(vars, terms), den


def verify_non_noetherian_witness(K: int) -> CheckResult:
    """(k^2, k) is irreducible in {(sum l_i^2, sum l_i)} for k = 1..K."""
    S = SquarePartitionSemigroup(K)
    for k in range(1, K + 1):
        if not is_irreducible((k * k, k), S):
            return CheckResult("non_noetherian", "point1", "a^2", False, f"k={k} reducible")
    return CheckResult("non_noetherian", "point1", "a^2", True, f"K={K}")


# --------------------------------------------------------------------------
# battery
# --------------------------------------------------------------------------


def example0_weights() -> dict[str, LinearForm]:
    return {"w1": LinearForm([1, 1]), "w2": LinearForm([2, 3]), "w3": LinearForm([1, 0])}


def battery() -> list[tuple[str, Polytope, str, WeightSystem]]:
    """(polytope id, P, weight id, W) with p <= 3; the cube stays at p <= 1."""
    polys = standard_polytopes()
    out = []
    for pid, P in polys.items():
        s = P.ambient_dim
        out.append((pid, P, "none", WeightSystem([], dim=s)))
        out.append((pid, P, "sum", WeightSystem([coordinate_sum(s)])))
    out.append(("segment01", polys["segment01"], "t1,2t1", WeightSystem([LinearForm([1]), LinearForm([2])])))
    ex = example0_weights()
    sq = polys["square"]
    for k in (1, 2, 3):
        for J in combinations(sorted(ex), k):
            out.append(("square", sq, ",".join(J), WeightSystem([ex[j] for j in J])))
    return out


def run_battery(P: Polytope | None = None, W: WeightSystem | None = None,
                pid: str = "spec", wid: str = "spec") -> list[CheckResult]:
    """All applicable checks on (P, W), or on the standard battery."""
    cases = battery() if P is None else [(pid, P, wid, W or WeightSystem([], dim=P.ambient_dim))]
    out: list[CheckResult] = []
    from .series import r_reciprocity_check, reciprocity_check_q

    for pid, P, wid, W in cases:
        linear_ok = True
        try:
            W.linear_forms()
            W.check_liftable()
        except InputError:
            linear_ok = False
        if not linear_ok or not P.is_lattice:
            out.append(CheckResult("applicable", pid, wid, True, "skipped: needs liftable weights on a lattice polytope"))
            continue
        out.append(verify_q_lift(P, W, pid, wid))
        out.append(verify_r_lift(P, W, pid, wid))
        if len(W) <= 2:
            out.append(verify_hilbert_lift(P, W, pid, wid))
        if P.is_full_dimensional and len(W) <= 2:
            ok = reciprocity_check_q(P, W)
            out.append(CheckResult("reciprocity_q", pid, wid, ok))
            out.append(CheckResult("reciprocity_r", pid, wid, r_reciprocity_check(P, W)))
        out.append(verify_truncation(P, W, pid, wid))
        if len(W) == 1:
            w = W.linear_forms()[0]
            in_orthant = all(c >= 0 for v in P.vertices for c in v)
            active = all(any(v[i] for v in P.vertices) for i, c in enumerate(w.coeffs) if c > 0)
            if in_orthant and active and any(w.coeffs):
                out.append(verify_positivity(P, w, pid, wid))
            out.append(verify_bounds(P, w, w, pid, wid))
        if len(W) == 0:
            h = _hstar(P)
            out.append(CheckResult("hstar_nonnegative", pid, wid, all(c >= 0 for c in h.numerator),
                                   "h*=" + ",".join(map(str, h.numerator))))
    return out


def verify_truncation(P: Polytope, W, pid=None, wid=None, order: int = 6) -> CheckResult:
    """Engine q-series against brute-force count_q, coefficientwise, for n <= order."""
    pid, wid = _ids(pid, wid)
    F = q_weighted_series(P, W)
    coeffs = truncate(F, "x", order)
    for n in range(order + 1):
        if coeffs[n] != count_q(P, W, n):
            return CheckResult("truncation_q", pid, wid, False, f"n={n}")
    return CheckResult("truncation_q", pid, wid, True, f"order={order}")


def render_report(results: Iterable[CheckResult]) -> str:
    return "".join(r.line() + "\n" for r in results)


__all__ = [
    "UniPoly",
    "HStarData",
    "CheckResult",
    "interpolate_values",
    "interpolate",
    "ehrhart_polynomial",
    "series_from_poly",
    "count_weighted",
    "count_q",
    "count_r",
    "count_s",
    "verify_q_lift",
    "verify_r_lift",
    "verify_hilbert_lift",
    "verify_dim_formula",
    "verify_positivity",
    "verify_bounds",
    "verify_leading_coefficient",
    "compatible_triangulation_search",
    "compatible_numerator",
    "verify_non_noetherian_witness",
    "verify_truncation",
    "battery",
    "run_battery",
    "render_report",
    "example0_weights",
]
