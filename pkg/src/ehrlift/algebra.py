"""Exact multivariate Laurent polynomials and rational series.

A ``RationalSeries`` is a Laurent polynomial numerator over a multiset of
binomial factors ``(1 - c*z^g)``.  Denominators are never multiplied out or
reduced by a gcd; equality is decided by cross multiplication.  Series are
expanded in ascending powers of the grading variable ``x``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import IllPosedSpecialization, InputError
from .linalg import Number, as_rat, norm

Exp = tuple[int, ...]


class VarSet:
    """An ordered, fixed list of variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise InputError(f"duplicate variable names in {self.names}")
        self._index = {n: i for i, n in enumerate(self.names)}

    @classmethod
    def standard(cls, p: int, s: int, x: bool = True) -> "VarSet":
        names = [f"q{i + 1}" for i in range(p)] + [f"t{i + 1}" for i in range(s)]
        if x:
            names.append("x")
        return cls(names)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, VarSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarSet({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown variable {name!r}; have {self.names}") from None

    def unit(self, name: str) -> Exp:
        i = self.index(name)
        return tuple(int(j == i) for j in range(len(self.names)))

    def exponent(self, powers: Mapping[str, int]) -> Exp:
        e = [0] * len(self.names)
        for name, k in powers.items():
            e[self.index(name)] += k
        return tuple(e)

    def without(self, names: Iterable[str]) -> "VarSet":
        drop = set(names)
        for n in drop:
            self.index(n)
        return VarSet(n for n in self.names if n not in drop)

    def q_names(self):
        return [n for n in self.names if n.startswith("q")]

    def t_names(self):
        return [n for n in self.names if n.startswith("t")]


def _add_exp(a: Exp, b: Exp) -> Exp:
    return tuple(i + j for i, j in zip(a, b))


def _fmt_coeff(c: Number) -> str:
    return str(c)


def _fmt_monomial(names: Sequence[str], e: Exp) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k != 0:
            parts.append(f"{name}^{k}" if k > 0 else f"{name}^({k})")
    return "*".join(parts)


class LaurentPoly:
    """Finite sum of c * z^e with exact rational c and integer exponent vectors e."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: VarSet, terms: Mapping[Exp, Number] | None = None):
        self.vars = vars
        clean: dict[Exp, Number] = {}
        n = len(vars)
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise InputError(f"exponent {e} does not match {vars}")
            c = as_rat(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: norm(c) for e, c in clean.items() if c}

    # constructors -----------------------------------------------------------
    @classmethod
    def _raw(cls, vars: VarSet, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.vars = vars
        obj.terms = {e: norm(c) for e, c in terms.items() if c}
        return obj

    @classmethod
    def constant(cls, vars: VarSet, c: Number = 1) -> "LaurentPoly":
        return cls._raw(vars, {(0,) * len(vars): as_rat(c)})

    @classmethod
    def monomial(cls, vars: VarSet, e: Sequence[int], c: Number = 1) -> "LaurentPoly":
        return cls(vars, {tuple(e): c})

    @classmethod
    def var(cls, vars: VarSet, name: str) -> "LaurentPoly":
        return cls._raw(vars, {vars.unit(name): 1})

    # basic protocol ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise InputError(f"variable sets differ: {self.vars} vs {other.vars}")
            return other
        return LaurentPoly.constant(self.vars, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly._raw(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict[Exp, Number] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return LaurentPoly.monomial(self.vars, tuple(i * k for i in e), Fraction(c) ** k)
        result = LaurentPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, e: Sequence[int], c: Number = 1) -> "LaurentPoly":
        """Multiply by the monomial c*z^e."""
        e = tuple(e)
        return LaurentPoly._raw(self.vars, {_add_exp(k, e): v * c for k, v in self.terms.items()})

    # structure --------------------------------------------------------------
    def coefficient(self, e: Sequence[int]) -> Number:
        return self.terms.get(tuple(e), 0)

    def constant_term(self) -> Number:
        return self.terms.get((0,) * len(self.vars), 0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def degree_in(self, name: str) -> tuple[int, int]:
        """(min, max) exponent of a variable; (0, 0) for the zero polynomial."""
        i = self.vars.index(name)
        ks = [e[i] for e in self.terms]
        return (min(ks), max(ks)) if ks else (0, 0)

    def coefficients(self) -> list[Number]:
        return list(self.terms.values())

    def sorted_terms(self) -> list[tuple[Exp, Number]]:
        return sorted(self.terms.items())

    def total(self) -> Number:
        """Value with every variable set to 1."""
        return norm(sum(self.terms.values(), 0))

    def map_exponents(self, f, vars: VarSet | None = None) -> "LaurentPoly":
        vars = vars or self.vars
        out: dict[Exp, Number] = {}
        for e, c in self.terms.items():
            e2 = tuple(f(e))
            out[e2] = out.get(e2, 0) + c
        return LaurentPoly._raw(vars, out)

    def substitute(self, name: str, m: Sequence[int]) -> "LaurentPoly":
        """Replace the variable by the monomial z^m (m = 0 sets it to 1)."""
        i = self.vars.index(name)
        m = tuple(m)
        unit = self.vars.unit(name)

        def f(e):
            k = e[i]
            return tuple(a - k * u + k * b for a, u, b in zip(e, unit, m))

        return self.map_exponents(f)

    def drop(self, names: Iterable[str]) -> "LaurentPoly":
        """Set the listed variables to 1 and remove them from the VarSet."""
        names = list(names)
        new_vars = self.vars.without(names)
        keep = [self.vars.index(n) for n in new_vars.names]
        return self.map_exponents(lambda e: [e[i] for i in keep], new_vars)

    def embed(self, vars: VarSet) -> "LaurentPoly":
        """Re-embed into a larger VarSet containing all current names."""
        pos = [vars.index(n) for n in self.vars.names]

        def f(e):
            out = [0] * len(vars)
            for p, k in zip(pos, e):
                out[p] = k
            return out

        return self.map_exponents(f, vars)

    def invert(self, names: Iterable[str]) -> "LaurentPoly":
        idx = {self.vars.index(n) for n in names}
        return self.map_exponents(lambda e: [-k if i in idx else k for i, k in enumerate(e)])

    def euler(self, name: str) -> "LaurentPoly":
        """var * d/dvar."""
        i = self.vars.index(name)
        return LaurentPoly._raw(self.vars, {e: c * e[i] for e, c in self.terms.items()})

    def evaluate(self, values: Mapping[str, Number]) -> "LaurentPoly":
        """Substitute rational numbers for some variables (others stay symbolic)."""
        idx = {self.vars.index(n): as_rat(v) for n, v in values.items()}
        out: dict[Exp, Number] = {}
        for e, c in self.terms.items():
            for i, v in idx.items():
                if e[i]:
                    if v == 0 and e[i] < 0:
                        raise ZeroDivisionError("negative power of zero")
                    c = c * Fraction(v) ** e[i]
            e2 = tuple(0 if i in idx else k for i, k in enumerate(e))
            out[e2] = out.get(e2, 0) + c
        return LaurentPoly._raw(self.vars, out)

    def divide_one_minus(self, name: str) -> "LaurentPoly | None":
        """Exact quotient by (1 - var), or None if var = 1 is not a root."""
        i = self.vars.index(name)
        groups: dict[Exp, dict[int, Number]] = {}
        for e, c in self.terms.items():
            rest = e[:i] + (0,) + e[i + 1:]
            groups.setdefault(rest, {})[e[i]] = c
        out: dict[Exp, Number] = {}
        for rest, coeffs in groups.items():
            lo, hi = min(coeffs), max(coeffs)
            run = 0
            for k in range(lo, hi):
                run += coeffs.get(k, 0)
                if run:
                    out[rest[:i] + (k,) + rest[i + 1:]] = run
            run += coeffs.get(hi, 0)
            if run:
                return None
        return LaurentPoly._raw(self.vars, out)

    def divide_binomial(self, g: Exp, c: Number = 1) -> "LaurentPoly | None":
        """Exact quotient by (1 - c*z^g), or None when it does not divide."""
        c = as_rat(c)
        if not any(g):
            if c == 1:
                return None
            return self * (Fraction(1) / (1 - c))
        j = next(i for i, k in enumerate(g) if k)
        # split into classes e0 + k*g; each class is a polynomial in u = z^g
        classes: dict[Exp, dict[int, Number]] = {}
        for e, v in self.terms.items():
            k = e[j] // g[j]
            base = tuple(a - k * b for a, b in zip(e, g))
            classes.setdefault(base, {})[k] = v
        out: dict[Exp, Number] = {}
        for base, poly in classes.items():
            lo, hi = min(poly), max(poly)
            prev: Number = 0
            for k in range(lo, hi):
                prev = poly.get(k, 0) + c * prev
                if prev:
                    out[tuple(a + k * b for a, b in zip(base, g))] = prev
            if poly.get(hi, 0) + c * prev != 0:
                return None
        return LaurentPoly._raw(self.vars, out)

    # rendering --------------------------------------------------------------
    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = _fmt_monomial(self.vars.names, e)
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
            else:
                body = _fmt_coeff(a)
            pieces.append(("-" if neg else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += sign + body
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"


# --------------------------------------------------------------------------
# binomial denominators
# --------------------------------------------------------------------------

Factor = tuple[Exp, Number]  # (g, c) stands for 1 - c*z^g


def _x_index(vars: VarSet) -> int | None:
    return vars._index.get("x")


def _is_canonical(vars: VarSet, g: Exp) -> bool:
    xi = _x_index(vars)
    if xi is not None and g[xi] != 0:
        return g[xi] > 0
    first = next(k for k in g if k)
    return first > 0


def factor_poly(vars: VarSet, f: Factor) -> LaurentPoly:
    g, c = f
    return LaurentPoly._raw(vars, {(0,) * len(vars): 1}) + LaurentPoly._raw(vars, {g: -c})


def render_factor(vars: VarSet, f: Factor) -> str:
    g, c = f
    mono = _fmt_monomial(vars.names, g)
    if c == 1:
        return f"1-{mono}"
    if c == -1:
        return f"1+{mono}"
    if c < 0:
        return f"1+{_fmt_coeff(-c)}*{mono}"
    return f"1-{_fmt_coeff(c)}*{mono}"


class RationalSeries:
    """num / prod (1 - c_i z^{g_i}), canonical, immutable."""

    __slots__ = ("vars", "num", "den")

    def __init__(self, num: LaurentPoly, den: Iterable[Factor | Exp] = ()):
        vars = num.vars
        n = len(vars)
        factors: list[Factor] = []
        scale: Number = 1
        shift = [0] * n
        for f in den:
            if len(f) == 2 and isinstance(f[0], (tuple, list)):
                g, c = tuple(f[0]), as_rat(f[1])
            else:
                g, c = tuple(f), 1
            if len(g) != n:
                raise InputError(f"factor exponent {g} does not match {vars}")
            if c == 0:
                continue
            if not any(g):
                if c == 1:
                    raise IllPosedSpecialization("denominator factor (1 - 1) vanishes")
                scale = Fraction(scale) / (1 - c)
                continue
            if not _is_canonical(vars, g):
                # 1/(1 - c z^g) = (-1/c) z^{-g} / (1 - (1/c) z^{-g})
                inv = Fraction(1) / Fraction(c)
                scale = scale * -inv
                shift = [a - b for a, b in zip(shift, g)]
                g, c = tuple(-k for k in g), norm(inv)
            factors.append((g, norm(c)))
        if num.is_zero():
            factors = []
        elif scale != 1 or any(shift):
            num = num.shift(shift, norm(Fraction(scale)))
        self.vars = vars
        self.num = num
        self.den = tuple(sorted(factors, key=lambda f: (f[0], Fraction(f[1]))))

    # constructors -----------------------------------------------------------
    @classmethod
    def zero(cls, vars: VarSet) -> "RationalSeries":
        return cls(LaurentPoly(vars))

    @classmethod
    def one(cls, vars: VarSet) -> "RationalSeries":
        return cls(LaurentPoly.constant(vars, 1))

    @classmethod
    def geometric(cls, vars: VarSet, g: Sequence[int], c: Number = 1) -> "RationalSeries":
        return cls(LaurentPoly.constant(vars, 1), [(tuple(g), c)])

    # structure --------------------------------------------------------------
    def den_counter(self) -> Counter:
        return Counter(self.den)

    def den_poly(self, factors: Iterable[Factor] | None = None) -> LaurentPoly:
        out = LaurentPoly.constant(self.vars, 1)
        for f in self.den if factors is None else factors:
            out = out * factor_poly(self.vars, f)
        return out

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _check(self, other: "RationalSeries"):
        if not isinstance(other, RationalSeries):
            raise TypeError("expected a RationalSeries")
        if other.vars != self.vars:
            raise InputError(f"variable sets differ: {self.vars} vs {other.vars}")

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, RationalSeries):
            other = RationalSeries(LaurentPoly.constant(self.vars, 1) * other)
        self._check(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b = self.den_counter(), other.den_counter()
        common = a | b
        na = self.num * self._poly_of(common - a)
        nb = other.num * self._poly_of(common - b)
        return RationalSeries(na + nb, common.elements())

    __radd__ = __add__

    def _poly_of(self, counter: Counter) -> LaurentPoly:
        return self.den_poly(counter.elements())

    def __neg__(self):
        return RationalSeries(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RationalSeries):
            self._check(other)
            return RationalSeries(self.num * other.num, self.den + other.den)
        if isinstance(other, LaurentPoly):
            return RationalSeries(self.num * other, self.den)
        return RationalSeries(self.num * as_rat(other), self.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return series_equal(self, other)

    __hash__ = None

    def reduced(self) -> "RationalSeries":
        """Cancel denominator factors that divide the numerator."""
        num = self.num
        den = list(self.den)
        changed = True
        while changed and not num.is_zero():
            changed = False
            for i, (g, c) in enumerate(den):
                q = num.divide_binomial(g, c)
                if q is not None:
                    num = q
                    del den[i]
                    changed = True
                    break
        return RationalSeries(num, den)

    # rendering --------------------------------------------------------------
    def render(self) -> str:
        num = self.num.render()
        if not self.den:
            return num
        counts = Counter(self.den)
        parts = []
        for f in sorted(counts, key=lambda f: (f[0], Fraction(f[1]))):
            k = counts[f]
            parts.append(f"({render_factor(self.vars, f)})" + (f"^{k}" if k > 1 else ""))
        den = "".join(parts)
        if len(parts) > 1:
            den = f"({den})"
        return f"({num})/{den}"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RationalSeries({self.render()!r})"


# --------------------------------------------------------------------------
# operations
# --------------------------------------------------------------------------


def series_equal(a: RationalSeries, b: RationalSeries) -> bool:
    """Cross-multiplied equality after cancelling shared factors."""
    a._check(b)
    ca, cb = a.den_counter(), b.den_counter()
    lhs = a.num * a._poly_of(cb - ca)
    rhs = b.num * b._poly_of(ca - cb)
    return lhs == rhs


def invert_variables(a: RationalSeries, names: Iterable[str]) -> RationalSeries:
    names = list(names)
    if not names:
        return a
    idx = {a.vars.index(n) for n in names}
    flip = lambda g: tuple(-k if i in idx else k for i, k in enumerate(g))  # noqa: E731
    # the constructor rewrites any non-canonical factor into canonical form
    return RationalSeries(a.num.invert(names), [(flip(g), c) for g, c in a.den])


def substitute_monomial(a: RationalSeries, var: str, m: Sequence[int]) -> RationalSeries:
    """Replace ``var`` by the monomial z^m everywhere.

    ``m = 0`` sets the variable to 1; a factor collapsing to (1 - 1) raises
    IllPosedSpecialization (use ``set_to_one`` to cancel such factors first).
    """
    i = a.vars.index(var)
    m = tuple(m)
    unit = a.vars.unit(var)

    def f(e):
        k = e[i]
        return tuple(p - k * u + k * b for p, u, b in zip(e, unit, m))

    return RationalSeries(a.num.map_exponents(f), [(f(g), c) for g, c in a.den])


def _vanishing_at_one(vars: VarSet, var: str, f: Factor) -> int:
    """k if the factor is exactly (1 - var^k), else 0."""
    g, c = f
    i = vars.index(var)
    if c != 1 or any(k for j, k in enumerate(g) if j != i):
        return 0
    return g[i]


def set_to_one(a: RationalSeries, var: str, drop: bool = False) -> RationalSeries:
    """Specialize var = 1, cancelling factors (1 - var^k) against the numerator.

    Each such factor is (1 - var)(1 + ... + var^{k-1}); the (1 - var) parts are
    divided out of the numerator exactly and the cyclotomic parts contribute k.
    """
    vars = a.vars
    num = a.num
    keep: list[Factor] = []
    scale = 1
    need = 0
    for f in a.den:
        k = _vanishing_at_one(vars, var, f)
        if k:
            need += 1
            scale *= k
        else:
            keep.append(f)
    for _ in range(need):
        q = num.divide_one_minus(var)
        if q is None:
            raise IllPosedSpecialization(
                f"setting {var}=1 leaves a pole: numerator does not vanish to order {need}"
            )
        num = q
    zero = (0,) * len(vars)
    out = substitute_monomial(RationalSeries(num * Fraction(1, scale), keep), var, zero)
    if drop:
        return drop_variables(out, [var])
    return out


def drop_variables(a: RationalSeries, names: Iterable[str]) -> RationalSeries:
    """Remove variables whose exponents are all zero (e.g. after setting them to 1)."""
    names = list(names)
    new_vars = a.vars.without(names)
    keep = [a.vars.index(n) for n in new_vars.names]
    for n in names:
        i = a.vars.index(n)
        if any(e[i] for e in a.num.terms) or any(g[i] for g, _ in a.den):
            a = set_to_one(a, n)
    proj = lambda e: tuple(e[i] for i in keep)  # noqa: E731
    return RationalSeries(a.num.map_exponents(proj, new_vars), [(proj(g), c) for g, c in a.den])


def specialize(a: RationalSeries, names: Iterable[str]) -> RationalSeries:
    """Set each listed variable to 1 and remove it from the VarSet."""
    for n in names:
        a = set_to_one(a, n, drop=True)
    return a


def euler_operator(a: RationalSeries, var: str) -> RationalSeries:
    """var * d/dvar of the series, by the quotient rule on the factored denominator."""
    vars = a.vars
    i = vars.index(var)
    counts = a.den_counter()
    moving = [f for f in counts if f[0][i] != 0]
    if not moving:
        return RationalSeries(a.num.euler(var), a.den)
    polys = {f: factor_poly(vars, f) for f in moving}
    prod_all = LaurentPoly.constant(vars, 1)
    for f in moving:
        prod_all = prod_all * polys[f]
    num = a.num.euler(var) * prod_all
    for f in moving:
        g, c = f
        others = LaurentPoly.constant(vars, 1)
        for h in moving:
            if h != f:
                others = others * polys[h]
        # var d/dvar (1 - c z^g)^{-m} = m c g_i z^g (1 - c z^g)^{-m-1}
        num = num + a.num.shift(g, counts[f] * c * g[i]) * others
    return RationalSeries(num, list(a.den) + moving)


def q_derivative_at_one(a: RationalSeries, var: str) -> RationalSeries:
    """(var * d/dvar A) with var = 1, keeping ``var`` in the VarSet at exponent 0."""
    return set_to_one(euler_operator(a, var), var)


def truncate(a: RationalSeries, var: str = "x", N: int = 6) -> list[LaurentPoly]:
    """Coefficients of var^0..var^N as Laurent polynomials in the other variables."""
    vars = a.vars
    xi = vars.index(var)
    rest = vars.without([var])
    proj = lambda e: e[:xi] + e[xi + 1:]  # noqa: E731
    coeffs: list[dict[Exp, Number]] = [dict() for _ in range(N + 1)]
    for e, c in a.num.terms.items():
        k = e[xi]
        if k < 0:
            raise InputError(f"numerator has a negative power of {var}; not a power series")
        if k <= N:
            pe = proj(e)
            coeffs[k][pe] = coeffs[k].get(pe, 0) + c
    series = [LaurentPoly._raw(rest, d) for d in coeffs]
    flat: list[Factor] = []
    for g, c in a.den:
        k = g[xi]
        if k < 0:
            raise InputError(f"factor with negative {var}-exponent cannot be expanded")
        if k == 0:
            flat.append((proj(g), c))
            continue
        mono = LaurentPoly._raw(rest, {proj(g): c})
        # r_n = s_n + c z^g' r_{n-k}
        for n in range(k, N + 1):
            series[n] = series[n] + mono * series[n - k]
    for g, c in flat:
        out = []
        for poly in series:
            q = poly.divide_binomial(g, c)
            if q is None:
                raise InputError(
                    f"coefficient is not divisible by the {var}-free factor; series has no "
                    f"Laurent-polynomial coefficients"
                )
            out.append(q)
        series = out
    return series


def series_from_coefficients(vars: VarSet, coeffs: Sequence[LaurentPoly], var: str = "x") -> LaurentPoly:
    """Polynomial sum_n coeffs[n] * var^n, embedding coefficients into ``vars``."""
    xi = vars.index(var)
    out: dict[Exp, Number] = {}
    for n, c in enumerate(coeffs):
        c = c.embed(vars) if c.vars != vars else c
        for e, v in c.terms.items():
            e2 = e[:xi] + (e[xi] + n,) + e[xi + 1:]
            out[e2] = out.get(e2, 0) + v
    return LaurentPoly._raw(vars, out)
