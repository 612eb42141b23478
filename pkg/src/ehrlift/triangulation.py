"""Triangulations of point configurations: placing and exhaustive enumeration."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterator, Sequence

from .errors import GuardExceeded, InputError
from .linalg import det, norm, nullspace, rank
from .polytope import AffineFrame, Point, Polytope, _as_point, simplex_volume

MAX_POINTS = 12


class Triangulation:
    """Simplices (sorted index tuples) over a list of points."""

    def __init__(self, points: Sequence[Sequence], simplices, frame: AffineFrame | None = None):
        self.points: list[Point] = [_as_point(p) for p in points]
        self.frame = frame or AffineFrame(self.points)
        self.simplices: list[tuple[int, ...]] = sorted(tuple(sorted(s)) for s in simplices)
        self._vol: dict[tuple[int, ...], Number] = {}
        d = self.frame.d
        for s in self.simplices:
            if len(s) != d + 1:
                raise InputError(f"simplex {s} does not have {d + 1} vertices")

    @property
    def dim(self) -> int:
        return self.frame.d

    def volume_of(self, s: Sequence[int]):
        s = tuple(s)
        if s not in self._vol:
            self._vol[s] = simplex_volume(self.frame, [self.points[i] for i in s])
        return self._vol[s]

    def total_volume(self):
        return norm(sum((Fraction(self.volume_of(s)) for s in self.simplices), Fraction(0)))

    def vertex_sets(self) -> list[list[Point]]:
        return [[self.points[i] for i in s] for s in self.simplices]

    def key(self) -> frozenset:
        return frozenset(frozenset(self.points[i] for i in s) for s in self.simplices)

    def __eq__(self, other):
        return isinstance(other, Triangulation) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __len__(self):
        return len(self.simplices)

    def __repr__(self):
        return f"Triangulation({self.vertex_sets()!r})"


Number = int | Fraction


def _orient(ys: Sequence[Sequence[Number]]) -> Number:
    """Signed volume (times d!) of the simplex ys[0..d] in R^d."""
    return det([[a - b for a, b in zip(y, ys[0])] for y in ys[1:]])


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def configuration(P: Polytope, points="vertices") -> list[Point]:
    """Points of a configuration choice, sorted lexicographically."""
    if isinstance(points, str):
        if points == "vertices":
            pts = list(P.vertices)
        elif points in ("all", "lattice"):
            if not P.is_lattice:
                raise InputError("lattice-point configurations need a lattice polytope")
            pts = P.lattice_points(1)
        else:
            raise InputError(f"unknown configuration choice {points!r}")
    else:
        pts = [_as_point(p) for p in points]
    return sorted(set(pts))


def triangulate(P: Polytope, points="vertices") -> Triangulation:
    """Placing triangulation, inserting points in lexicographic order."""
    pts = configuration(P, points)
    frame = P.frame
    if not all(frame.on_hull(p) and P.contains(p) for p in pts):
        raise InputError("configuration points must lie in the polytope")
    return _placing(pts, frame)


def _placing(pts: list[Point], frame: AffineFrame) -> Triangulation:
    d = frame.d
    ys = [frame.project(p) for p in pts]
    if d == 0:
        return Triangulation(pts, [(0,)], frame)
    start: list[int] = []
    for i, y in enumerate(ys):
        cand = start + [i]
        if rank([[a - b for a, b in zip(ys[j], ys[cand[0]])] for j in cand[1:]] or [[0] * d]) == len(cand) - 1:
            start = cand
        if len(start) == d + 1:
            break
    if len(start) < d + 1:
        raise InputError("points do not affinely span the polytope")
    simplices = [tuple(start)]
    # boundary facet -> the vertex of its simplex opposite to it
    boundary: dict[frozenset, int] = {}
    for v in start:
        boundary[frozenset(set(start) - {v})] = v
    placed = set(start)
    for i in range(len(pts)):
        if i in placed:
            continue
        visible = []
        for F, opp in boundary.items():
            Fl = sorted(F)
            s_opp = _orient([ys[j] for j in Fl] + [ys[opp]])
            s_new = _orient([ys[j] for j in Fl] + [ys[i]])
            if s_new != 0 and _sign(s_new) != _sign(s_opp):
                visible.append(F)
        if not visible:
            continue  # inside (or on the boundary of) the current hull
        placed.add(i)
        for F in visible:
            simplices.append(tuple(sorted(F | {i})))
            del boundary[F]
            for f in F:
                G = frozenset((F - {f}) | {i})
                if G in boundary:
                    del boundary[G]
                else:
                    boundary[G] = f
    return Triangulation(pts, simplices, frame)


# --------------------------------------------------------------------------
# exhaustive enumeration
# --------------------------------------------------------------------------


def _circuits(ys: list[tuple], d: int) -> list[tuple[frozenset, frozenset]]:
    """All circuits (Z+, Z-) of the configuration, both orientations."""
    out = []
    n = len(ys)
    for size in range(2, min(n, d + 2) + 1):
        for Z in combinations(range(n), size):
            rows = [[ys[j][c] for j in Z] for c in range(d)] + [[1] * size]
            ker = nullspace(rows, size)
            if len(ker) != 1:
                continue
            v = ker[0]
            if any(c == 0 for c in v):
                continue
            pos = frozenset(Z[k] for k in range(size) if v[k] > 0)
            neg = frozenset(Z[k] for k in range(size) if v[k] < 0)
            out.append((pos, neg))
            out.append((neg, pos))
    return out


def all_triangulations(points, frame: AffineFrame | None = None) -> Iterator[Triangulation]:
    """Every triangulation of conv(points) that uses only the given points.

    Search: fix a generic point y, branch on the simplex containing y, then
    repeatedly close the smallest open interior facet by every admissible
    simplex on its far side.  Branches are disjoint, so each triangulation is
    produced exactly once; a volume sum certifies each completed one.
    """
    pts = sorted({_as_point(p) for p in points})
    if len(pts) > MAX_POINTS:
        raise GuardExceeded(f"{len(pts)} points exceeds the guard of {MAX_POINTS}")
    frame = frame or AffineFrame(pts)
    d = frame.d
    ys = [frame.project(p) for p in pts]
    n = len(pts)
    if d == 0:
        yield Triangulation(pts, [(0,)], frame)
        return
    full = [s for s in combinations(range(n), d + 1) if _orient([ys[i] for i in s]) != 0]
    if not full:
        raise InputError("points do not affinely span a full simplex")
    circuits = _circuits(ys, d)

    def proper(s, t):
        S, Tt = set(s), set(t)
        return not any(zp <= S and zn <= Tt for zp, zn in circuits)

    hull = Polytope(pts)
    hull_facets = [(tuple(a[c] for c in frame.pivots), b) for a, b in hull.facets.inequalities]

    def on_boundary(F):
        return any(all(sum(x * y for x, y in zip(a, ys[j])) == b for j in F) for a, b in hull_facets)

    target = sum((Fraction(abs(_orient([ys[i] for i in s]))) for s in _hull_simplices(ys)), Fraction(0))

    y = _generic_point(ys, full, d)

    def contains_strictly(s, pt):
        sg = [_sign(_orient([ys[j] for j in s[:k]] + [pt] + [ys[j] for j in s[k + 1:]])) for k in range(d + 1)]
        base = _sign(_orient([ys[j] for j in s]))
        return all(v == base for v in sg)

    seeds = [s for s in full if contains_strictly(s, y)]
    compat_cache: dict[tuple, bool] = {}

    def ok(s, t):
        key = (s, t) if s < t else (t, s)
        if key not in compat_cache:
            compat_cache[key] = proper(s, t) and proper(t, s)
        return compat_cache[key]

    def open_facets(chosen):
        count: dict[frozenset, list] = {}
        for s in chosen:
            for v in s:
                F = frozenset(set(s) - {v})
                count.setdefault(F, []).append((s, v))
        out = []
        for F, owners in count.items():
            if len(owners) == 1 and not on_boundary(F):
                out.append((tuple(sorted(F)), owners[0][1]))
        out.sort()
        return out

    def extend(chosen, vol):
        opens = open_facets(chosen)
        if not opens:
            if vol == target:
                yield Triangulation(pts, chosen, frame)
            return
        F, opp = opens[0]
        s_opp = _sign(_orient([ys[j] for j in F] + [ys[opp]]))
        for q in range(n):
            if q in F or q == opp:
                continue
            s_q = _orient([ys[j] for j in F] + [ys[q]])
            if s_q == 0 or _sign(s_q) == s_opp:
                continue
            t = tuple(sorted(F + (q,)))
            if t in chosen:
                continue
            if all(ok(t, s) for s in chosen):
                v = Fraction(abs(s_q))
                if vol + v <= target:
                    yield from extend(chosen + [t], vol + v)

    seen = set()
    for s in seeds:
        for T in extend([s], Fraction(abs(_orient([ys[i] for i in s])))):
            k = T.key()
            if k not in seen:
                seen.add(k)
                yield T


def _hull_simplices(ys):
    # any triangulation of the hull certifies its volume; placing is cheapest
    pts = [tuple(y) for y in ys]
    T = _placing(sorted(pts), AffineFrame(sorted(pts)))
    index = {p: i for i, p in enumerate(pts)}
    return [tuple(index[T.points[i]] for i in s) for s in T.simplices]


def _generic_point(ys, full, d):
    """A point inside the first full simplex avoiding every spanned hyperplane."""
    s0 = full[0]
    hyper = []
    for F in combinations(range(len(ys)), d):
        sub = [ys[j] for j in F]
        if d == 1 or rank([[a - b for a, b in zip(p, sub[0])] for p in sub[1:]]) == d - 1:
            hyper.append(F)
    k = 0
    while True:
        k += 1
        w = [Fraction(1) + Fraction(1, (k + 2) ** (i + 1)) for i in range(d + 1)]
        tot = sum(w)
        y = tuple(sum(w[i] * ys[s0[i]][c] for i in range(d + 1)) / tot for c in range(d))
        if all(_orient([ys[j] for j in F] + [y]) != 0 for F in hyper):
            return y


def normalized_volume(T: Triangulation, s) -> Number:
    return norm(T.volume_of(s) * factorial(T.dim))
