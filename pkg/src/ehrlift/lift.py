"""Weight-lifting polytopes and Hilbert bases of cones over polytopes."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterable, Sequence

from .errors import GuardExceeded, InputError
from .linalg import rank
from .polytope import Polytope
from .weights import WeightSystem


def _lattice_vertices(P: Polytope) -> list[tuple[int, ...]]:
    if not P.is_lattice:
        raise InputError("weight lifts need a lattice polytope")
    return [tuple(int(c) for c in v) for v in P.vertices]


def lift_q(P: Polytope, W: WeightSystem) -> Polytope:
    """conv{(v, w(v))}: the graph of the weight map over P."""
    if len(W) == 0:
        return P
    W.check_liftable()
    forms = W.linear_forms()
    return Polytope([v + tuple(w(v) for w in forms) for v in _lattice_vertices(P)])


def lift_r_points(P: Polytope, W: WeightSystem) -> list[tuple[int, ...]]:
    """The point set G: (v, 0) plus any partial sum of w_j(v) e_{s+j}."""
    if len(W) == 0:
        return _lattice_vertices(P)
    W.check_liftable()
    forms = W.linear_forms()
    p = len(forms)
    out = set()
    for v in _lattice_vertices(P):
        vals = [w(v) for w in forms]
        for k in range(p + 1):
            for J in combinations(range(p), k):
                out.add(v + tuple(vals[j] if j in J else 0 for j in range(p)))
    return sorted(out)


def lift_r(P: Polytope, W: WeightSystem) -> Polytope:
    """conv(G), the region between P x {0} and the partial weight lifts."""
    return Polytope(lift_r_points(P, W))


# --------------------------------------------------------------------------
# Hilbert bases
# --------------------------------------------------------------------------


class HilbertBasis:
    """Irreducible cone lattice points of degree <= bound.

    ``certified`` records whether the elements regenerate every cone lattice
    point up to degree 2*bound.
    """

    def __init__(self, elements: Iterable[Sequence[int]], bound: int, certified: bool):
        self.elements = sorted(tuple(e) for e in elements)
        self.bound = bound
        self.certified = certified

    def as_set(self) -> set[tuple[int, ...]]:
        return set(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if isinstance(other, HilbertBasis):
            return self.as_set() == other.as_set()
        return self.as_set() == {tuple(e) for e in other}

    def __repr__(self):
        return f"HilbertBasis({self.elements!r}, bound={self.bound}, certified={self.certified})"


def cone_over(P: Polytope) -> list[tuple[int, ...]]:
    """(v, 1) for each vertex v of a lattice polytope."""
    return [v + (1,) for v in _lattice_vertices(P)]


def _slice_polytope(generators: Sequence[Sequence[int]]) -> Polytope:
    gens = [tuple(int(c) for c in g) for g in generators]
    if not gens:
        raise InputError("need at least one generator")
    if any(g[-1] <= 0 for g in gens):
        raise InputError("every generator must have positive grading (last coordinate)")
    return Polytope([tuple(Fraction(c, g[-1]) for c in g[:-1]) for g in gens])


def cone_dimension(generators: Sequence[Sequence[int]]) -> int:
    return rank([list(g) for g in generators])


def hilbert_basis(generators: Sequence[Sequence[int]], bound: int | None = None) -> HilbertBasis:
    """Hilbert basis of the semigroup of lattice points of cone(generators).

    Lattice points are walked level by level (level = last coordinate); a
    point is kept when no previously kept element h of lower level leaves
    a remainder e - h inside the cone.
    """
    Q = _slice_polytope(generators)
    if bound is None:
        bound = cone_dimension(generators)
    if bound < 1:
        raise InputError("degree bound must be positive")
    basis: list[tuple[int, ...]] = []
    for n in range(1, bound + 1):
        found = []
        for a in Q.lattice_points(n):
            if not any(h[-1] < n and Q.contains(tuple(x - y for x, y in zip(a, h[:-1])), n - h[-1])
                       for h in basis):
                found.append(a + (n,))
        basis.extend(found)
    certified = _regenerates(Q, basis, 2 * bound)
    return HilbertBasis(basis, bound, certified)


def _regenerates(Q: Polytope, basis: Sequence[tuple[int, ...]], top: int) -> bool:
    """Do sums of basis elements give every cone lattice point up to level top?"""
    by_level: dict[int, list[tuple[int, ...]]] = {}
    for h in basis:
        by_level.setdefault(h[-1], []).append(h[:-1])
    made: list[set] = [{tuple(0 for _ in range(Q.ambient_dim))}]
    for n in range(1, top + 1):
        cur = set()
        for k, hs in by_level.items():
            if k <= n:
                for prev in made[n - k]:
                    for h in hs:
                        cur.add(tuple(x + y for x, y in zip(prev, h)))
        made.append(cur)
        if cur != set(Q.lattice_points(n)):
            return False
    return True


def construct_H_Pw(H_P: HilbertBasis | Iterable[Sequence[int]], W: WeightSystem) -> HilbertBasis:
    """{(c, b, d) : (c, d) in H_P, 0 <= b_j <= w_j(c)}."""
    elems = list(H_P)
    bound = H_P.bound if isinstance(H_P, HilbertBasis) else max((e[-1] for e in elems), default=1)
    certified = H_P.certified if isinstance(H_P, HilbertBasis) else False
    if len(W) == 0:
        return HilbertBasis(elems, bound, certified)
    forms = W.linear_forms()
    out = []
    for e in elems:
        c, d = tuple(e[:-1]), e[-1]
        ranges = []
        for w in forms:
            top = w(c)
            if top < 0:
                raise InputError(f"weight is negative at {c}")
            ranges.append(range(int(top) + 1))
        for b in product(*ranges):
            out.append(c + tuple(b) + (d,))
    return HilbertBasis(out, bound, certified)


def expected_H_Pw_size(H_P: Iterable[Sequence[int]], W: WeightSystem) -> int:
    forms = W.linear_forms()
    total = 0
    for e in H_P:
        k = 1
        for w in forms:
            k *= int(w(tuple(e[:-1]))) + 1
        total += k
    return total


# --------------------------------------------------------------------------
# irreducibility in general semigroups
# --------------------------------------------------------------------------


def is_irreducible(e: Sequence[int], membership: Callable[[tuple[int, ...]], bool]) -> bool:
    """e is a nonzero member admitting no split f + g into nonzero members.

    The search runs over the box between 0 and e, so the semigroup is
    assumed to live in the nonnegative orthant.
    """
    e = tuple(e)
    if not any(e) or not membership(e):
        return False
    if any(c < 0 for c in e):
        raise InputError("irreducibility search expects a nonnegative vector")
    zero = tuple(0 for _ in e)
    for f in product(*(range(c + 1) for c in e)):
        if f == zero or f == e:
            continue
        g = tuple(x - y for x, y in zip(e, f))
        # each split shows up twice in the box; look at it once
        if f <= g and membership(f) and membership(g):
            return False
    return True


class SquarePartitionSemigroup:
    """{(sum of squares of the parts, sum of the parts) : partitions}.

    This is the semigroup of exponents of q^{w(a)} x^n for the single point
    polytope {1} with w(a) = a^2, after a dilation of n.
    """

    MAX_K = 60

    def __init__(self, K: int):
        if K > self.MAX_K:
            raise GuardExceeded(f"K = {K} exceeds the guard of {self.MAX_K}")
        self.K = K
        # sums[k] = square sums of partitions of k
        sums: list[set[int]] = [{0}]
        for k in range(1, K + 1):
            sums.append(set())
        for part in range(1, K + 1):
            sq = part * part
            for k in range(part, K + 1):
                sums[k] |= {s + sq for s in sums[k - part]}
        self.sums = sums

    def __call__(self, e: Sequence[int]) -> bool:
        m, k = e
        if k < 0 or k > self.K:
            if k > self.K:
                raise GuardExceeded("query beyond the tabulated range")
            return False
        return m in self.sums[k]
