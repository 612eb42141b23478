"""Weight functions on lattice points and systems of them."""

from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from typing import Iterable, Sequence

from .errors import InputError
from .linalg import Number, as_rat, norm


class Weight:
    """Base class; subclasses implement ``_value``."""

    kind = "abstract"
    dim: int

    def __call__(self, a: Sequence[Number], level: int | None = None) -> Number:
        return evaluate(self, a, level)

    def _value(self, a, level):
        raise NotImplementedError

    def is_linear(self) -> bool:
        return False


class LinearForm(Weight):
    """w(a) = sum_j c_j a_j."""

    kind = "linear"

    def __init__(self, coeffs: Sequence):
        self.coeffs = tuple(as_rat(c) for c in coeffs)
        self.dim = len(self.coeffs)

    def _value(self, a, level):
        return norm(sum((c * x for c, x in zip(self.coeffs, a)), 0))

    def is_linear(self):
        return True

    @property
    def integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def as_polynomial(self) -> "PolynomialWeight":
        terms = []
        for j, c in enumerate(self.coeffs):
            e = [0] * self.dim
            e[j] = 1
            terms.append((c, e))
        return PolynomialWeight(terms, dim=self.dim)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("linear", self.coeffs))

    def __repr__(self):
        return f"LinearForm({list(self.coeffs)!r})"


class MonomialWeight(Weight):
    """w(a) = prod_j a_j^{e_j}."""

    kind = "monomial"

    def __init__(self, exponents: Sequence[int]):
        self.exponents = tuple(int(e) for e in exponents)
        if any(e < 0 for e in self.exponents):
            raise InputError("monomial exponents must be nonnegative")
        self.dim = len(self.exponents)

    def _value(self, a, level):
        out = 1
        for x, e in zip(a, self.exponents):
            if e:
                out *= x ** e
        return norm(out)

    def is_linear(self):
        return sum(self.exponents) == 1

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def as_polynomial(self) -> "PolynomialWeight":
        return PolynomialWeight([(1, self.exponents)], dim=self.dim)

    def coordinate_system(self) -> "WeightSystem":
        """The monomial as a product of coordinate linear forms."""
        forms = []
        for j, e in enumerate(self.exponents):
            forms.extend([LinearForm([int(i == j) for i in range(self.dim)])] * e)
        return WeightSystem(forms, dim=self.dim)

    def __repr__(self):
        return f"MonomialWeight({list(self.exponents)!r})"


class PolynomialWeight(Weight):
    """w(a) = sum of c * a^e over its terms."""

    kind = "polynomial"

    def __init__(self, terms: Iterable, dim: int | None = None):
        acc: dict[tuple[int, ...], Number] = {}
        for c, e in terms:
            if isinstance(e, MonomialWeight):
                e = e.exponents
            e = tuple(int(k) for k in e)
            if any(k < 0 for k in e):
                raise InputError("polynomial exponents must be nonnegative")
            acc[e] = acc.get(e, 0) + as_rat(c)
        lens = {len(e) for e in acc}
        if dim is None:
            if len(lens) != 1:
                raise InputError("cannot infer the dimension of the polynomial weight")
            dim = lens.pop()
        elif lens - {dim}:
            raise InputError("polynomial term has the wrong number of exponents")
        self.dim = dim
        self.terms = {e: norm(c) for e, c in sorted(acc.items()) if c}

    def _value(self, a, level):
        total = 0
        for e, c in self.terms.items():
            m = c
            for x, k in zip(a, e):
                if k:
                    m *= x ** k
            total += m
        return norm(total)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_linear(self):
        return all(sum(e) == 1 for e in self.terms)

    def as_polynomial(self):
        return self

    def __add__(self, other):
        other = to_polynomial(other, self.dim)
        return PolynomialWeight(list(self.items()) + list(other.items()), dim=self.dim)

    __radd__ = __add__

    def __mul__(self, other):
        other = to_polynomial(other, self.dim)
        out = []
        for (e1, c1), (e2, c2) in cartesian(self.terms.items(), other.terms.items()):
            out.append((c1 * c2, tuple(i + j for i, j in zip(e1, e2))))
        return PolynomialWeight(out, dim=self.dim)

    __rmul__ = __mul__

    def items(self):
        return [(c, e) for e, c in self.terms.items()]

    def __eq__(self, other):
        return isinstance(other, PolynomialWeight) and self.terms == other.terms and self.dim == other.dim

    def __hash__(self):
        return hash(("poly", tuple(self.terms.items())))

    def __repr__(self):
        return f"PolynomialWeight({self.items()!r})"


class ExpPolyWeight(Weight):
    """h(a) = prod_i sum_j P_ij(a_i) * gamma_ij^{a_i}.

    ``factors[i]`` is a list of (polynomial coefficients [p0, p1, ...], gamma).
    There may be s factors (the coordinates of a) or s+1, in which case the
    last one acts on the dilation level.
    """

    kind = "exppoly"

    def __init__(self, factors: Sequence[Sequence[tuple[Sequence, Number]]], dim: int | None = None):
        fs = []
        for fac in factors:
            row = []
            for poly, gamma in fac:
                g = as_rat(gamma)
                if g == 0:
                    raise InputError("exponential bases must be nonzero")
                row.append((tuple(as_rat(c) for c in poly), g))
            fs.append(tuple(row))
        self.factors = tuple(fs)
        self.dim = dim if dim is not None else len(fs)
        if len(fs) not in (self.dim, self.dim + 1):
            raise InputError("exp-poly weight needs s or s+1 coordinate factors")

    @property
    def has_level_factor(self) -> bool:
        return len(self.factors) == self.dim + 1

    @staticmethod
    def univariate(fac, x: Number) -> Number:
        total = 0
        for poly, g in fac:
            p = 0
            for c in reversed(poly):
                p = p * x + c
            total += p * Fraction(g) ** x if p else 0
        return norm(Fraction(total))

    def _value(self, a, level):
        vals = list(a)
        if self.has_level_factor:
            if level is None:
                raise InputError("this weight needs the dilation level")
            vals.append(level)
        out = Fraction(1)
        for fac, x in zip(self.factors, vals):
            out *= self.univariate(fac, x)
        return norm(out)

    def __repr__(self):
        return f"ExpPolyWeight({self.factors!r})"


def evaluate(w: Weight, a: Sequence[Number], level: int | None = None) -> Number:
    """Exact value of the weight at a (the level is used by level-aware weights)."""
    if len(a) != w.dim:
        raise InputError(f"weight expects {w.dim} coordinates, got {len(a)}")
    return w._value(a, level)


def to_polynomial(w, dim: int) -> PolynomialWeight:
    if isinstance(w, PolynomialWeight):
        return w
    if isinstance(w, (LinearForm, MonomialWeight)):
        return w.as_polynomial()
    c = as_rat(w)
    return PolynomialWeight([(c, (0,) * dim)], dim=dim)


def constant(c: Number, dim: int) -> PolynomialWeight:
    return PolynomialWeight([(c, (0,) * dim)], dim=dim)


class WeightSystem:
    """Ordered weights w_1..w_p sharing one ambient dimension."""

    def __init__(self, weights: Iterable[Weight], dim: int | None = None):
        self.weights = tuple(weights)
        dims = {w.dim for w in self.weights}
        if dim is None:
            if len(dims) > 1:
                raise InputError("weights have different ambient dimensions")
            dim = dims.pop() if dims else None
        elif dims - {dim}:
            raise InputError("weights have different ambient dimensions")
        self.dim = dim

    @property
    def p(self) -> int:
        return len(self.weights)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def values(self, a: Sequence[Number]) -> tuple[Number, ...]:
        return tuple(evaluate(w, a) for w in self.weights)

    def all_linear(self) -> bool:
        return all(isinstance(w, LinearForm) or (w.is_linear() and hasattr(w, "as_polynomial"))
                   for w in self.weights)

    def linear_forms(self) -> list[LinearForm]:
        """The weights as LinearForms; raises for a nonlinear weight."""
        out = []
        for w in self.weights:
            if isinstance(w, LinearForm):
                out.append(w)
            elif w.is_linear() and isinstance(w, (MonomialWeight, PolynomialWeight)):
                poly = w.as_polynomial()
                coeffs = [0] * w.dim
                for e, c in poly.terms.items():
                    coeffs[e.index(1)] += c
                out.append(LinearForm(coeffs))
            else:
                raise InputError(f"weight {w!r} is not linear")
        return out

    def unit_matrix(self) -> list[list[Number]]:
        """M[i][j] = w_i(e_j) for linear weights."""
        return [list(w.coeffs) for w in self.linear_forms()]

    def check_liftable(self):
        """Linear with w_i(e_j) in N, as required for the lifting polytopes."""
        for w in self.linear_forms():
            if not w.integral:
                raise InputError(f"{w!r} has non-integer coefficients")
            if any(c < 0 for c in w.coeffs):
                raise InputError(f"{w!r} has a negative value on a unit vector")

    def product(self) -> PolynomialWeight:
        out = constant(1, self.dim)
        for w in self.weights:
            out = out * to_polynomial(w, self.dim)
        return out

    def product_plus_one(self) -> PolynomialWeight:
        """prod_i (w_i + 1)."""
        out = constant(1, self.dim)
        for w in self.weights:
            out = out * (to_polynomial(w, self.dim) + 1)
        return out

    def subsystem(self, idx: Iterable[int]) -> "WeightSystem":
        return WeightSystem([self.weights[i] for i in idx], dim=self.dim)

    def __repr__(self):
        return f"WeightSystem({list(self.weights)!r})"


def coordinate(j: int, dim: int) -> LinearForm:
    return LinearForm([int(i == j) for i in range(dim)])


def coordinate_sum(dim: int) -> LinearForm:
    return LinearForm([1] * dim)
