"""Exact arithmetic over Q: sparse multivariate polynomials and rational functions.

The variable set is fixed to ``x, lam, mu1, mu2, tau``.  Exponent vectors are
stored in the order ``(lam, mu1, mu2, x, tau)`` so that the default lexicographic
order ``lam > mu1 > mu2 > x > tau`` is plain tuple comparison.  Only ``x`` is
differentiated; the remaining variables are constants for the derivation.
"""

from fractions import Fraction
from functools import reduce
from math import gcd as igcd, lcm as ilcm

Rational = Fraction

VARS = ("lam", "mu1", "mu2", "x", "tau")
LAM, MU1, MU2, X, TAU = range(5)
NVARS = len(VARS)
# textual order of factors inside a printed term
PRINT_ORDER = (X, LAM, MU1, MU2, TAU)

_ZERO_EXP = (0,) * NVARS


def var_index(v):
    """Normalize a variable given by name or index to its index."""
    if isinstance(v, int):
        if 0 <= v < NVARS:
            return v
        raise ValueError(f"variable index out of range: {v}")
    try:
        return VARS.index(v)
    except ValueError:
        raise ValueError(f"unknown variable {v!r}; expected one of {VARS}") from None


class LexOrder:
    """Pure lexicographic order with a configurable variable priority."""

    __slots__ = ("priority", "_identity")

    def __init__(self, priority=VARS):
        idx = tuple(var_index(v) for v in priority)
        rest = tuple(i for i in range(NVARS) if i not in idx)
        self.priority = idx + rest
        self._identity = self.priority == tuple(range(NVARS))

    def key(self, exp):
        if self._identity:
            return exp
        return tuple(exp[i] for i in self.priority)

    def __eq__(self, other):
        return isinstance(other, LexOrder) and self.priority == other.priority

    def __hash__(self):
        return hash(self.priority)

    def __repr__(self):
        return "LexOrder(%s)" % " > ".join(VARS[i] for i in self.priority)


LEX = LexOrder()


def _coerce_scalar(c):
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, Fraction):
        return c
    raise TypeError(f"not an exact scalar: {c!r}")


class MPoly:
    """Immutable sparse polynomial in Q[lam, mu1, mu2, x, tau].

    ``terms`` maps exponent tuples to nonzero ``Fraction`` coefficients.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in dict(terms).items():
                e = tuple(e)
                if len(e) != NVARS or any(k < 0 for k in e):
                    raise ValueError(f"bad exponent vector {e}")
                c = _coerce_scalar(c)
                if c:
                    t[e] = t.get(e, 0) + c
                    if not t[e]:
                        del t[e]
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t):
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        c = _coerce_scalar(c)
        return cls._raw({_ZERO_EXP: c} if c else {})

    @classmethod
    def var(cls, v, power=1):
        e = [0] * NVARS
        e[var_index(v)] = power
        return cls._raw({tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exp, c=1):
        c = _coerce_scalar(c)
        return cls._raw({tuple(exp): c} if c else {})

    # -- basic protocol -------------------------------------------------

    @property
    def terms(self):
        return dict(self._t)

    def items(self, order=LEX):
        """Terms sorted strictly descending in ``order``."""
        return sorted(self._t.items(), key=lambda it: order.key(it[0]), reverse=True)

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self):
        return not self._t

    def is_constant(self):
        return not self._t or (len(self._t) == 1 and _ZERO_EXP in self._t)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._t.get(_ZERO_EXP, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == MPoly.const(other)._t
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self):
        return f"MPoly({str(self)!r})"

    def __str__(self):
        return format_poly(self)

    # -- ring operations ------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if len(o._t) > len(self._t):
            a, b = o._t, self._t
        else:
            a, b = self._t, o._t
        t = dict(a)
        for e, c in b.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s += c
                if s:
                    t[e] = s
                else:
                    del t[e]
        return MPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        t = dict(self._t)
        for e, c in o._t.items():
            s = t.get(e)
            if s is None:
                t[e] = -c
            else:
                s -= c
                if s:
                    t[e] = s
                else:
                    del t[e]
        return MPoly._raw(t)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return MPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        t = {}
        get = t.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(i + j for i, j in zip(ea, eb))
                t[e] = get(e, 0) + ca * cb
        return MPoly._raw({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = MPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        c = _coerce_scalar(c)
        if not c:
            return MPoly._raw({})
        return MPoly._raw({e: v * c for e, v in self._t.items()})

    def mul_term(self, exp, c):
        """Multiply by the single term ``c * m`` with exponent vector ``exp``."""
        return MPoly._raw(
            {tuple(i + j for i, j in zip(e, exp)): v * c for e, v in self._t.items()}
        )

    # -- structure -----------------------------------------------------

    def degree(self, v):
        i = var_index(v)
        if not self._t:
            return -1
        return max(e[i] for e in self._t)

    def total_degree(self):
        if not self._t:
            return -1
        return max(sum(e) for e in self._t)

    def variables(self):
        s = set()
        for e in self._t:
            s.update(i for i, k in enumerate(e) if k)
        return s

    def has_var(self, v):
        i = var_index(v)
        return any(e[i] for e in self._t)

    def leading(self, order=LEX):
        """Leading ``(exponent, coefficient)`` under ``order``."""
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        if order is LEX:
            e = max(self._t)
        else:
            e = max(self._t, key=order.key)
        return e, self._t[e]

    def lc(self, order=LEX):
        return self.leading(order)[1]

    def coeffs_in(self, v):
        """View as a univariate polynomial in ``v``: ``{power: MPoly}``."""
        i = var_index(v)
        out = {}
        for e, c in self._t.items():
            k = e[i]
            red = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[red] = c
        return {k: MPoly._raw(t) for k, t in out.items()}

    @classmethod
    def from_coeffs(cls, v, coeffs):
        i = var_index(v)
        t = {}
        for k, p in coeffs.items():
            for e, c in p._t.items():
                ne = e[:i] + (e[i] + k,) + e[i + 1:]
                t[ne] = t.get(ne, 0) + c
        return cls._raw({e: c for e, c in t.items() if c})

    def diff(self, v):
        """Formal partial derivative."""
        i = var_index(v)
        t = {}
        for e, c in self._t.items():
            k = e[i]
            if k:
                t[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return MPoly._raw(t)

    def evaluate(self, values):
        """Substitute rationals for some variables; returns an MPoly."""
        vals = {var_index(k): _coerce_scalar(v) for k, v in values.items()}
        t = {}
        for e, c in self._t.items():
            ne = list(e)
            cc = c
            for i, val in vals.items():
                if e[i]:
                    cc *= val ** e[i]
                    ne[i] = 0
            if cc:
                ne = tuple(ne)
                t[ne] = t.get(ne, 0) + cc
        return MPoly._raw({e: c for e, c in t.items() if c})

    def compose(self, values):
        """Substitute polynomials for some variables; returns an MPoly."""
        vals = {var_index(k): MPoly._lift(v) for k, v in values.items()}
        by_rest = {}
        for e, c in self._t.items():
            key = tuple(e[i] for i in sorted(vals))
            rest = tuple(0 if i in vals else k for i, k in enumerate(e))
            by_rest.setdefault(key, {})[rest] = c
        order_idx = sorted(vals)
        cache = {}

        def power(i, k):
            if (i, k) not in cache:
                cache[(i, k)] = vals[i] ** k
            return cache[(i, k)]

        result = MPoly._raw({})
        for key, t in by_rest.items():
            part = MPoly._raw(t)
            for i, k in zip(order_idx, key):
                if k:
                    part = part * power(i, k)
            result = result + part
        return result

    def content(self):
        """Positive rational ``c`` with ``self / c`` integral and primitive."""
        if not self._t:
            return Fraction(0)
        nums = [c.numerator for c in self._t.values()]
        dens = [c.denominator for c in self._t.values()]
        return Fraction(abs(reduce(igcd, nums)), reduce(ilcm, dens))

    def canonical(self, order=LEX):
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if not self._t:
            return self
        c = self.content()
        if self.lc(order) < 0:
            c = -c
        if c == 1:
            return self
        return self.scale(1 / c)

    def monic(self, order=LEX):
        if not self._t:
            raise ZeroDivisionError("zero polynomial cannot be made monic")
        return self.scale(1 / self.lc(order))

    def exquo(self, other):
        """Exact quotient ``self / other``; raises ``ArithmeticError`` otherwise."""
        other = MPoly._lift(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if other.is_constant():
            return self.scale(1 / other.constant_value())
        if not self._t:
            return self
        le, lc = other.leading()
        q = {}
        r = dict(self._t)
        while r:
            e = max(r)
            c = r[e]
            d = tuple(i - j for i, j in zip(e, le))
            if any(k < 0 for k in d):
                raise ArithmeticError("polynomial division is not exact")
            f = c / lc
            q[d] = f
            for oe, oc in other._t.items():
                ne = tuple(i + j for i, j in zip(oe, d))
                s = r.get(ne, 0) - f * oc
                if s:
                    r[ne] = s
                else:
                    r.pop(ne, None)
        return MPoly._raw(q)

    def divides(self, other):
        try:
            MPoly._lift(other).exquo(self)
        except ArithmeticError:
            return False
        return True


ZERO = MPoly._raw({})
ONE = MPoly.const(1)


def var(v, power=1):
    return MPoly.var(v, power)


def as_mpoly(p):
    q = MPoly._lift(p)
    if q is None:
        if isinstance(p, Frac) and p.is_poly():
            return p.num
        raise TypeError(f"cannot interpret {p!r} as a polynomial")
    return q


def format_poly(p, order=LEX):
    """Canonical text form, e.g. ``-mu1^3 + lam^4 - 4 * lam^3``."""
    if not p._t:
        return "0"
    out = []
    for e, c in p.items(order):
        factors = []
        for i in PRINT_ORDER:
            k = e[i]
            if k == 1:
                factors.append(VARS[i])
            elif k:
                factors.append(f"{VARS[i]}^{k}")
        a = abs(c)
        if a != 1 or not factors:
            factors.insert(0, str(a))
        term = " * ".join(factors)
        if not out:
            out.append("-" + term if c < 0 else term)
        else:
            out.append(("- " if c < 0 else "+ ") + term)
    return " ".join(out)


# -- gcd machinery ------------------------------------------------------


def _monomial_gcd(m, p):
    """gcd of a single-term polynomial ``m`` with ``p``."""
    e = next(iter(m._t))
    g = list(e)
    for pe in p._t:
        g = [min(a, b) for a, b in zip(g, pe)]
        if not any(g):
            break
    return MPoly._raw({tuple(g): Fraction(1)})


def _prem(f, g, v):
    """Pseudo-remainder of ``f`` by ``g`` viewed univariately in ``v``."""
    i = var_index(v)
    dg = g.degree(i)
    cg = g.coeffs_in(i)
    lcg = cg[dg]
    rest = g - MPoly.from_coeffs(i, {dg: lcg})
    r = f
    while r and r.degree(i) >= dg:
        dr = r.degree(i)
        cr = r.coeffs_in(i)
        lcr = cr.pop(dr)
        low = MPoly.from_coeffs(i, cr) if cr else ZERO
        shift = [0] * NVARS
        shift[i] = dr - dg
        # r*lcg - lcr * v^(dr-dg) * g, with the leading terms cancelled exactly
        r = low * lcg - (lcr * rest).mul_term(tuple(shift), Fraction(1))
        r = r.canonical()
    return r


def _content_in(p, v):
    cs = sorted(p.coeffs_in(v).values(), key=len)
    g = cs[0]
    for c in cs[1:]:
        if g.is_constant():
            break
        g = mpoly_gcd(g, c)
    return g.canonical()


def _gcd_nonzero(a, b):
    if a.is_constant() or b.is_constant():
        return ONE
    if len(a) == 1:
        return _monomial_gcd(a, b)
    if len(b) == 1:
        return _monomial_gcd(b, a)
    va, vb = a.variables(), b.variables()
    common = va & vb
    if not common:
        return ONE
    # a variable present in only one argument only enters through its content
    only_a = va - vb
    if only_a:
        v = min(only_a)
        return _gcd_nonzero(_content_in(a, v), b)
    only_b = vb - va
    if only_b:
        v = min(only_b)
        return _gcd_nonzero(a, _content_in(b, v))
    v = min(common, key=lambda i: (max(a.degree(i), b.degree(i)), i))
    ca, cb = _content_in(a, v), _content_in(b, v)
    cont = mpoly_gcd(ca, cb)
    f, g = a.exquo(ca).canonical(), b.exquo(cb).canonical()
    if f.degree(v) < g.degree(v):
        f, g = g, f
    while g and g.degree(v) > 0:
        r = _prem(f, g, v)
        f = g
        g = r.exquo(_content_in(r, v)).canonical() if r else r
    if g:
        h = ONE
    else:
        h = f.exquo(_content_in(f, v))
    return (cont * h).canonical()


def mpoly_gcd(a, b):
    """Greatest common divisor, primitive with positive leading coefficient.

    ``gcd(0, b)`` is the canonical form of ``b``; ``gcd(0, 0) = 0``.
    """
    a, b = as_mpoly(a), as_mpoly(b)
    if not a:
        return b.canonical()
    if not b:
        return a.canonical()
    return _gcd_nonzero(a, b).canonical()


def mpoly_lcm(a, b):
    a, b = as_mpoly(a), as_mpoly(b)
    if not a or not b:
        return ZERO
    return (a * b).exquo(mpoly_gcd(a, b)).canonical()


def squarefree_part(h):
    """Product of the distinct irreducible factors of ``h``.

    Computed as ``h / gcd(h, dh/dv for every variable v present)``.
    """
    h = as_mpoly(h)
    if not h:
        raise ValueError("square-free part of the zero polynomial is undefined")
    g = h
    for v in sorted(h.variables()):
        if g.is_constant():
            break
        g = mpoly_gcd(g, h.diff(v))
    return h.exquo(g).canonical()


def det_bareiss(rows):
    """Determinant of a square matrix of MPoly by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return ONE
    a = [[as_mpoly(c) for c in row] for row in rows]
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = ONE
    for k in range(n - 1):
        piv = [i for i in range(k, n) if a[i][k]]
        if not piv:
            return ZERO
        p = min(piv, key=lambda i: (len(a[i][k]), i))
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = row_i[j] * akk - aik * row_k[j]
                row_i[j] = num.exquo(prev) if num else ZERO
            row_i[k] = ZERO
        prev = akk
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def sylvester_matrix(f, g, v):
    """Classical Sylvester matrix of ``f`` and ``g`` as polynomials in ``v``.

    Rows of ``g`` come first; this fixes the sign of :func:`uni_resultant`.
    """
    i = var_index(v)
    f, g = as_mpoly(f), as_mpoly(g)
    n, m = f.degree(i), g.degree(i)
    if n < 1 or m < 1:
        raise ValueError(f"both polynomials need positive degree in {VARS[i]}")
    cf, cg = f.coeffs_in(i), g.coeffs_in(i)
    size = n + m

    def rows(c, deg, count):
        out = []
        for s in range(count):
            row = [ZERO] * size
            for k, p in c.items():
                row[s + deg - k] = p
            out.append(row)
        return out

    return rows(cg, m, n) + rows(cf, n, m)


def uni_resultant(f, g, v):
    """Resultant of ``f`` and ``g`` with respect to ``v`` (free of ``v``)."""
    return det_bareiss(sylvester_matrix(f, g, v))


# -- rational functions -------------------------------------------------


class Frac:
    """Reduced fraction ``num / den`` of polynomials with canonical denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=1):
        num, den = as_mpoly(num), as_mpoly(den)
        if not den:
            raise ZeroDivisionError("fraction with zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
        elif den.is_constant():
            self.num, self.den = num.scale(1 / den.constant_value()), ONE
        else:
            g = mpoly_gcd(num, den)
            if not g.is_constant():
                num, den = num.exquo(g), den.exquo(g)
            c = den.content()
            if den.lc() < 0:
                c = -c
            self.num, self.den = num.scale(1 / c), den.scale(1 / c)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        f = cls.__new__(cls)
        f.num, f.den, f._hash = num, den, None
        return f

    @staticmethod
    def lift(x):
        if isinstance(x, Frac):
            return x
        if isinstance(x, (MPoly, int, Fraction)):
            return Frac._raw(as_mpoly(x), ONE)
        raise TypeError(f"cannot interpret {x!r} as a rational function")

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_poly(self):
        return self.den == ONE

    def is_constant(self):
        return self.den == ONE and self.num.is_constant()

    def variables(self):
        return self.num.variables() | self.den.variables()

    def has_var(self, v):
        return self.num.has_var(v) or self.den.has_var(v)

    def __eq__(self, other):
        try:
            o = Frac.lift(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"Frac({str(self)!r})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        num = str(self.num) if len(self.num) == 1 else f"({self.num})"
        (e, c), = self.den._t.items() if len(self.den) == 1 else ((None, None),)
        if c == 1 and sum(1 for k in e if k) == 1:
            return f"{num}/{self.den}"
        return f"{num}/({self.den})"

    def __neg__(self):
        return Frac._raw(-self.num, self.den)

    def __add__(self, other):
        try:
            o = Frac.lift(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            if self.den == ONE:
                return Frac._raw(self.num + o.num, ONE)
            return Frac(self.num + o.num, self.den)
        if o.den == ONE:
            return Frac._raw(self.num + o.num * self.den, self.den)
        if self.den == ONE:
            return Frac._raw(self.num * o.den + o.num, o.den)
        g = mpoly_gcd(self.den, o.den)
        if g == ONE:
            return Frac(self.num * o.den + o.num * self.den, self.den * o.den)
        d1, d2 = self.den.exquo(g), o.den.exquo(g)
        return Frac(self.num * d2 + o.num * d1, d1 * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = Frac.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return Frac.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Frac._raw(ZERO, ONE)
            return Frac._raw(self.num.scale(other), self.den)
        try:
            o = Frac.lift(other)
        except TypeError:
            return NotImplemented
        if not self.num or not o.num:
            return Frac._raw(ZERO, ONE)
        if self.den == ONE and o.den == ONE:
            return Frac._raw(self.num * o.num, ONE)
        # cross-cancel before multiplying
        g1 = mpoly_gcd(self.num, o.den)
        g2 = mpoly_gcd(o.num, self.den)
        n1, d2 = self.num.exquo(g1), o.den.exquo(g1)
        n2, d1 = o.num.exquo(g2), self.den.exquo(g2)
        num, den = n1 * n2, d1 * d2
        c = den.content()
        if den.lc() < 0:
            c = -c
        return Frac._raw(num.scale(1 / c), den.scale(1 / c))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return Frac(self.den, self.num)

    def __truediv__(self, other):
        try:
            o = Frac.lift(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Frac.lift(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("integer exponent required")
        if k < 0:
            return self.inverse() ** (-k)
        return Frac._raw(self.num ** k, self.den ** k)

    def subs(self, values):
        """Substitute rational functions for variables."""
        return substitute(self.num, values) / substitute(self.den, values)

    def evaluate(self, values):
        """Substitute rationals for variables."""
        den = self.den.evaluate(values)
        if not den:
            raise ZeroDivisionError("denominator vanishes at the given point")
        return Frac(self.num.evaluate(values), den)


def as_frac(x):
    return Frac.lift(x)


def deriv_x(f):
    """d/dx of a polynomial or rational function; other variables are constants."""
    if isinstance(f, (MPoly, int, Fraction)):
        return Frac._raw(as_mpoly(f).diff(X), ONE)
    f = Frac.lift(f)
    if f.den == ONE:
        return Frac._raw(f.num.diff(X), ONE)
    dd = f.den.diff(X)
    if not dd:
        return Frac(f.num.diff(X), f.den)
    # with g = gcd(den, den'), write den = g*h; d/dx(n/den) = (n' h - n (den'/g)) / (den h)
    g = mpoly_gcd(f.den, dd)
    h = f.den.exquo(g)
    num = f.num.diff(X) * h - f.num * dd.exquo(g)
    return Frac(num, f.den * h)


def substitute(p, values):
    """Substitute rational functions for variables of a polynomial."""
    p = as_mpoly(p)
    vals = {var_index(k): Frac.lift(v) for k, v in values.items()}
    if not vals:
        return Frac._raw(p, ONE)
    # common-denominator evaluation: one reduction at the end
    degs = {i: p.degree(i) for i in vals}
    num_pow, den_pow = {}, {}

    def npow(i, k):
        if (i, k) not in num_pow:
            num_pow[(i, k)] = vals[i].num ** k
        return num_pow[(i, k)]

    def dpow(i, k):
        if (i, k) not in den_pow:
            den_pow[(i, k)] = vals[i].den ** k
        return den_pow[(i, k)]

    groups = {}
    for e, c in p._t.items():
        key = tuple(e[i] for i in sorted(vals))
        rest = tuple(0 if i in vals else k for i, k in enumerate(e))
        groups.setdefault(key, {})[rest] = c
    idx = sorted(vals)
    total = ZERO
    for key, t in groups.items():
        part = MPoly._raw(t)
        for i, k in zip(idx, key):
            if k:
                part = part * npow(i, k)
            if degs[i] - k:
                part = part * dpow(i, degs[i] - k)
        total = total + part
    den = ONE
    for i in idx:
        if degs[i] > 0:
            den = den * dpow(i, degs[i])
    return Frac(total, den)
