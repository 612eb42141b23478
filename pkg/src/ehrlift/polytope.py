"""Vertex-described polytopes: facets, lattice points, volume, integration.

Every polytope carries an ``AffineFrame``: a choice of d coordinates (the
pivot columns of its direction space) on which the projection of aff(P) is
injective.  All geometry (facets, triangulations, enumeration) happens in
those d coordinates and is lifted back, which keeps lower-dimensional
polytopes such as weight lifts on the same code path as full-dimensional ones.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, factorial, floor, gcd, lcm
from typing import Iterable, Sequence

from . import kernels
from .errors import InputError
from .linalg import Number, as_rat, det, norm, primitive, rank, rref

Point = tuple[Number, ...]


def _as_point(v) -> Point:
    return tuple(as_rat(c) for c in v)


def _is_integral(p: Sequence[Number]) -> bool:
    return all(isinstance(c, int) for c in p)


# --------------------------------------------------------------------------
# affine frames
# --------------------------------------------------------------------------


class AffineFrame:
    """Coordinates on aff(points) given by the pivot columns of its directions."""

    def __init__(self, points: Sequence[Point]):
        if not points:
            raise InputError("empty point set")
        self.D = len(points[0])
        self.origin = points[0]
        diffs = [[a - b for a, b in zip(p, self.origin)] for p in points[1:]]
        red, piv = rref(diffs) if diffs else ([], [])
        self.d = len(piv)
        self.pivots = tuple(piv)
        self.R = red  # d x D, identity on pivot columns
        self.full = self.d == self.D
        # lifted point for dilation n: x = n*(origin - R^T origin_I) + R^T y
        o_i = [self.origin[c] for c in piv]
        self._base = [
            Fraction(self.origin[c]) - sum((red[k][c] * o_i[k] for k in range(self.d)), Fraction(0))
            for c in range(self.D)
        ]
        den = 1
        for row in red:
            for v in row:
                den = lcm(den, v.denominator)
        for v in self._base:
            den = lcm(den, v.denominator)
        self._den = den
        self._R_int = [[int(v * den) for v in row] for row in red]
        self._base_int = [int(v * den) for v in self._base]
        self.equations = self._equations()

    def _equations(self) -> list[tuple[tuple[int, ...], Number]]:
        eqs = []
        for c in range(self.D):
            if c in self.pivots:
                continue
            # x_c - sum_k R[k][c] x_{I_k} = base[c]
            row = [Fraction(0)] * self.D
            row[c] = Fraction(1)
            for k, pc in enumerate(self.pivots):
                row[pc] -= self.R[k][c]
            scale = 1
            for v in row + [self._base[c]]:
                scale = lcm(scale, Fraction(v).denominator)
            a = tuple(int(v * scale) for v in row)
            b = norm(self._base[c] * scale)
            g = 0
            for v in a:
                g = gcd(g, v)
            if isinstance(b, int):
                g = gcd(g, b)
            eqs.append((tuple(v // g for v in a), norm(Fraction(b) / g)))
        return eqs

    def project(self, x: Sequence[Number]) -> Point:
        return tuple(x[c] for c in self.pivots)

    def lift(self, y: Sequence[Number], n: Number = 1) -> Point:
        if self.full:
            return tuple(y)
        out = []
        for c in range(self.D):
            v = n * self._base[c]
            for k in range(self.d):
                v += self.R[k][c] * y[k]
            out.append(norm(v))
        return tuple(out)

    def lift_integral(self, y: Sequence[int], n: int = 1) -> tuple[int, ...] | None:
        """Lift an integer y, or None if the lifted point is not integral."""
        if self.full:
            return tuple(y)
        den = self._den
        out = []
        for c in range(self.D):
            v = n * self._base_int[c]
            for k in range(self.d):
                v += self._R_int[k][c] * y[k]
            if v % den:
                return None
            out.append(v // den)
        return tuple(out)

    def on_hull(self, x: Sequence[Number]) -> bool:
        return all(sum(a * v for a, v in zip(row, x)) == b for row, b in self.equations)

    def lattice_index(self) -> int:
        """[Z^d : projection of the direction lattice], found by walking the
        finite group generated by the columns of the lift map modulo 1."""
        if self.full or self.d == 0:
            return 1
        gens = []
        for k in range(self.d):
            gens.append(tuple(v - floor(v) for v in self.R[k]))
        zero = tuple(Fraction(0) for _ in range(self.D))
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for e in frontier:
                for g in gens:
                    s = tuple((a + b) - floor(a + b) for a, b in zip(e, g))
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return len(seen)


# --------------------------------------------------------------------------
# cone facets by double description
# --------------------------------------------------------------------------


def cone_facets(gens: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Primitive inner normals a (a.z >= 0) of a full-dimensional cone.

    Incremental double description with the algebraic adjacency test.
    """
    gens = [tuple(g) for g in gens]
    k = len(gens[0])
    basis: list[int] = []
    for i, g in enumerate(gens):
        if rank([gens[j] for j in basis] + [g]) > len(basis):
            basis.append(i)
        if len(basis) == k:
            break
    if len(basis) < k:
        raise InputError("cone is not full-dimensional")
    # rows of (B^T)^{-1} are dual to the basis: h_i . B_j = delta_ij
    B = [gens[i] for i in basis]
    aug = [[B[r][c] for r in range(k)] + [int(i == c) for i in range(k)] for c in range(k)]
    red, _ = rref(aug)
    H = [primitive(row[k:]) for row in red]
    done = list(basis)

    def zero_set(h):
        return frozenset(j for j in done if _dot(h, gens[j]) == 0)

    facets = {h: zero_set(h) for h in H}
    for i, r in enumerate(gens):
        if i in basis:
            continue
        vals = {h: _dot(h, r) for h in facets}
        neg = [h for h in facets if vals[h] < 0]
        done.append(i)
        if not neg:
            for h in facets:
                if vals[h] == 0:
                    facets[h] = facets[h] | {i}
            continue
        pos = [h for h in facets if vals[h] > 0]
        new: dict[tuple[int, ...], frozenset] = {}
        for h in facets:
            if vals[h] > 0:
                new[h] = facets[h]
            elif vals[h] == 0:
                new[h] = facets[h] | {i}
        for hp in pos:
            for hn in neg:
                common = facets[hp] & facets[hn]
                if len(common) < k - 2:
                    continue
                if k > 2 and rank([gens[j] for j in common]) != k - 2:
                    continue
                comb = primitive([vals[hp] * a - vals[hn] * b for a, b in zip(hn, hp)])
                if comb not in new:
                    new[comb] = common | {i}
        facets = new
    return sorted(facets)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _full_facets(points: Sequence[Point]) -> list[tuple[tuple[int, ...], Number]]:
    """Facets a.y <= b of a full-dimensional polytope given by points in R^d."""
    d = len(points[0])
    if d == 0:
        return []
    den = 1
    for p in points:
        for v in p:
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
    homog = [tuple(int(v * den) for v in p) + (den,) for p in points]
    out = []
    for h in cone_facets(homog):
        a, a0 = h[:-1], h[-1]
        # a.y + a0 >= 0  <=>  (-a).y <= a0
        out.append((tuple(-v for v in a), a0))
    return sorted(set(out))


# --------------------------------------------------------------------------
# facet systems and polytopes
# --------------------------------------------------------------------------


class FacetSystem:
    """Inequalities a.x <= b plus affine-hull equations a.x = b (ambient coords)."""

    def __init__(self, inequalities, equations):
        self.inequalities = list(inequalities)
        self.equations = list(equations)

    def contains(self, x: Sequence[Number], n: Number = 1) -> bool:
        return all(_dot(a, x) <= n * b for a, b in self.inequalities) and all(
            _dot(a, x) == n * b for a, b in self.equations
        )

    def in_relint(self, x: Sequence[Number], n: Number = 1) -> bool:
        return all(_dot(a, x) < n * b for a, b in self.inequalities) and all(
            _dot(a, x) == n * b for a, b in self.equations
        )

    def __len__(self):
        return len(self.inequalities)

    def __repr__(self):
        return f"FacetSystem({len(self.inequalities)} inequalities, {len(self.equations)} equations)"


class Polytope:
    """conv(vertices) for rational vertices; immutable, facets computed eagerly."""

    def __init__(self, vertices: Iterable[Sequence]):
        pts: list[Point] = []
        seen = set()
        for v in vertices:
            p = _as_point(v)
            if p not in seen:
                seen.add(p)
                pts.append(p)
        if not pts:
            raise InputError("a polytope needs at least one vertex")
        D = len(pts[0])
        if any(len(p) != D for p in pts):
            raise InputError("vertices have inconsistent dimensions")
        self.ambient_dim = D
        self.frame = AffineFrame(pts)
        self.dim = self.frame.d
        proj = [self.frame.project(p) for p in pts]
        self._proj_facets = _full_facets(proj) if self.dim > 0 else []
        if self.dim == 0:
            keep = [0]
        else:
            keep = [
                i for i, y in enumerate(proj)
                if rank([a for a, b in self._proj_facets if _dot(a, y) == b]) == self.dim
            ]
        self.vertices: tuple[Point, ...] = tuple(pts[i] for i in keep)
        self._proj_vertices = [proj[i] for i in keep]
        ineqs = []
        for a, b in self._proj_facets:
            amb = [0] * D
            for k, c in enumerate(self.frame.pivots):
                amb[c] = a[k]
            ineqs.append((tuple(amb), b))
        self.facets = FacetSystem(ineqs, self.frame.equations)
        self._levels = None

    # basic ------------------------------------------------------------------
    @property
    def is_lattice(self) -> bool:
        return all(_is_integral(v) for v in self.vertices)

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def __repr__(self):
        return f"Polytope({[list(v) for v in self.vertices]!r})"

    def __eq__(self, other):
        return isinstance(other, Polytope) and set(self.vertices) == set(other.vertices)

    def __hash__(self):
        return hash(frozenset(self.vertices))

    def contains(self, x, n: Number = 1) -> bool:
        return self.facets.contains(x, n)

    def in_relint(self, x, n: Number = 1) -> bool:
        return self.facets.in_relint(x, n)

    def dilate(self, k: Number) -> "Polytope":
        return Polytope([tuple(k * c for c in v) for v in self.vertices])

    # enumeration ------------------------------------------------------------
    def _prefix_levels(self):
        """Facets of the projections onto the first 1..d frame coordinates."""
        if self._levels is None:
            levels = []
            for k in range(1, self.dim):
                pts = sorted({y[:k] for y in self._proj_vertices})
                levels.append(_full_facets(pts))
            levels.append(self._proj_facets)
            self._levels = levels
        return self._levels

    def _scan_levels(self, n: int, strict: bool):
        levels = []
        last = self.dim - 1
        for k, rows in enumerate(self._prefix_levels()):
            out = []
            for a, b in rows:
                nb = n * b
                rhs = (ceil(nb) - 1) if (strict and k == last) else floor(nb)
                out.append(tuple(a) + (rhs,))
            levels.append(out)
        return levels

    def _radius(self, n: int) -> int:
        m = 0
        for y in self._proj_vertices:
            for v in y:
                m = max(m, abs(v))
        return int(ceil(n * m)) + 1

    def _points(self, n: int, strict: bool) -> list[tuple[int, ...]]:
        if n < 0:
            raise InputError("dilation factor must be nonnegative")
        if strict and n == 0:
            return []
        if self.dim == 0:
            p = tuple(n * c for c in self.vertices[0])
            return [tuple(int(c) for c in p)] if all(Fraction(c).denominator == 1 for c in p) else []
        ys = kernels.scan(self._scan_levels(n, strict), radius=self._radius(n))
        lift = self.frame.lift_integral
        out = []
        for y in ys:
            x = lift(y, n)
            if x is not None:
                out.append(x)
        if not self.frame.full:
            out.sort()
        return out

    def lattice_points(self, n: int = 1) -> list[tuple[int, ...]]:
        return self._points(n, False)

    def interior_lattice_points(self, n: int = 1) -> list[tuple[int, ...]]:
        return self._points(n, True)

    def count(self, n: int = 1, interior: bool = False) -> int:
        if self.frame.full and self.dim > 0 and not (interior and n == 0):
            return kernels.scan_count(self._scan_levels(n, interior), radius=self._radius(n))
        return len(self._points(n, interior))

    # measures ---------------------------------------------------------------
    def volume(self) -> Number:
        return volume(self)


# --------------------------------------------------------------------------
# module-level operations
# --------------------------------------------------------------------------


def facets(P: Polytope) -> FacetSystem:
    return P.facets


def lattice_points(P: Polytope, n: int = 1) -> list[tuple[int, ...]]:
    return P.lattice_points(n)


def interior_lattice_points(P: Polytope, n: int = 1) -> list[tuple[int, ...]]:
    return P.interior_lattice_points(n)


def simplex_volume(frame: AffineFrame, pts: Sequence[Point]) -> Number:
    """Relative volume of a simplex lying in the affine hull described by frame."""
    d = frame.d
    if d == 0:
        return 1
    ys = [frame.project(p) for p in pts]
    m = [[a - b for a, b in zip(y, ys[0])] for y in ys[1:]]
    return norm(Fraction(abs(det(m))) / (factorial(d) * frame.lattice_index()))


def volume(P: Polytope) -> Number:
    """Relative volume, normalized to the lattice of aff(P)."""
    from .triangulation import triangulate

    if P.dim == 0:
        return 1
    T = triangulate(P)
    return norm(sum((Fraction(T.volume_of(s)) for s in T.simplices), Fraction(0)))


def integrate_monomial(P: Polytope, b: Sequence[int]) -> Number:
    """Exact integral of x^b over P (relative Lebesgue measure of aff(P))."""
    from .algebra import LaurentPoly, VarSet
    from .triangulation import triangulate

    b = tuple(int(v) for v in b)
    if len(b) != P.ambient_dim:
        raise InputError("exponent length does not match the ambient dimension")
    d = P.dim
    lam = VarSet([f"l{k}" for k in range(d + 1)])
    total = Fraction(0)
    T = triangulate(P) if d > 0 else None
    simplices = T.simplices if T else [(0,)]
    points = T.points if T else [P.vertices[0]]
    for s in simplices:
        verts = [points[i] for i in s]
        vol = Fraction(T.volume_of(s)) if T else Fraction(1)
        poly = LaurentPoly.constant(lam, 1)
        for i, bi in enumerate(b):
            if bi == 0:
                continue
            lin = LaurentPoly(lam, {lam.unit(f"l{k}"): verts[k][i] for k in range(d + 1)})
            poly = poly * lin ** bi
        acc = Fraction(0)
        for e, c in poly.terms.items():
            num = 1
            for a in e:
                num *= factorial(a)
            acc += c * Fraction(num, factorial(sum(e) + d))
        total += vol * factorial(d) * acc
    return norm(total)


def integrate_polynomial(P: Polytope, terms: Iterable[tuple[Number, Sequence[int]]]) -> Number:
    return norm(sum((Fraction(c) * Fraction(integrate_monomial(P, e)) for c, e in terms), Fraction(0)))


def standard_polytopes() -> dict[str, Polytope]:
    """The small fixed battery used across tests, CLI and verification."""
    return {
        "segment01": Polytope([(0,), (1,)]),
        "segment02": Polytope([(0,), (2,)]),
        "square": Polytope([(0, 0), (1, 0), (0, 1), (1, 1)]),
        "triangle": Polytope([(0, 0), (1, 0), (1, 1)]),
        "cube": Polytope([(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]),
        "chengyang2": Polytope([(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 1)]),
    }


__all__ = [
    "AffineFrame",
    "FacetSystem",
    "Polytope",
    "cone_facets",
    "facets",
    "lattice_points",
    "interior_lattice_points",
    "simplex_volume",
    "volume",
    "integrate_monomial",
    "integrate_polynomial",
    "standard_polytopes",
]
