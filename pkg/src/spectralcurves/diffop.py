"""Ordinary differential operators with rational-function coefficients.

An operator ``c0 + c1*D + ... + cn*D^n`` is stored as the coefficient tuple
``(c0, ..., cn)`` of :class:`~spectralcurves.arith.Frac` values, with
``D*a = a*D + a'`` for ``a' = d a / dx``.
"""

from .arith import Frac, deriv_x


class _NegInfinity:
    """Order of the zero operator.  Ordering comparisons raise on purpose."""

    __slots__ = ()

    def __repr__(self):
        return "-inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-inf")

    def _fail(self, other):
        raise TypeError("the zero operator has order -inf; compare explicitly")

    __lt__ = __le__ = __gt__ = __ge__ = _fail

    def __add__(self, other):
        return self

    __radd__ = __add__


NEG_INF = _NegInfinity()

# When true, right_divmod re-multiplies and checks A = Q*B + R on every call.
CHECK_DIVISION = False


def _lift_coeff(c):
    return Frac.lift(c)


class DiffOp:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [_lift_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, cs):
        cs = list(cs)
        while cs and not cs[-1]:
            cs.pop()
        op = cls.__new__(cls)
        op.coeffs = tuple(cs)
        op._hash = None
        return op

    @classmethod
    def const(cls, c):
        return cls._raw([_lift_coeff(c)])

    @classmethod
    def monomial(cls, c, k):
        """``c * D^k``."""
        return cls._raw([Frac.lift(0)] * k + [_lift_coeff(c)])

    @property
    def order(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Frac.lift(0)

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero operator has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, DiffOp):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == DiffOp.const(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"DiffOp({str(self)!r})"

    def __str__(self):
        return format_operator(self)

    @staticmethod
    def _lift(other):
        if isinstance(other, DiffOp):
            return other
        try:
            return DiffOp.const(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return DiffOp._raw([self.coeff(k) + o.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return DiffOp._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return DiffOp._raw([self.coeff(k) - o.coeff(k) for k in range(n)])

    def __rsub__(self, other):
        return DiffOp._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return op_mul(self, o)

    def __rmul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return op_mul(o, self)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("operator powers must be non-negative integers")
        result = DiffOp.const(1)
        for _ in range(k):
            result = op_mul(result, self)
        return result

    def scale(self, c):
        """Left multiplication by the function ``c``."""
        c = _lift_coeff(c)
        return DiffOp._raw([c * a for a in self.coeffs])

    def monic(self):
        inv = self.lc.inverse()
        return DiffOp._raw([c * inv for c in self.coeffs[:-1]] + [Frac.lift(1)])

    def shift(self):
        """``D * self``."""
        return d_times(self)

    def apply(self, f):
        """Action on a function: ``sum c_k * f^(k)``."""
        f = Frac.lift(f)
        total = Frac.lift(0)
        for c in self.coeffs:
            if c:
                total = total + c * f
            f = deriv_x(f)
        return total

    def map_coeffs(self, fn):
        return DiffOp._raw([fn(c) for c in self.coeffs])

    def evaluate(self, values):
        """Substitute rationals for variables in every coefficient."""
        return self.map_coeffs(lambda c: c.evaluate(values))

    def subs(self, values):
        """Substitute rational functions for variables in every coefficient."""
        return self.map_coeffs(lambda c: c.subs(values))

    def variables(self):
        s = set()
        for c in self.coeffs:
            s |= c.variables()
        return s


D = DiffOp._raw([Frac.lift(0), Frac.lift(1)])


def d_times(b):
    """``D * b`` via the Leibniz rule."""
    cs = list(b.coeffs)
    if not cs:
        return b
    out = [deriv_x(cs[0])]
    for k in range(1, len(cs)):
        out.append(cs[k - 1] + deriv_x(cs[k]))
    out.append(cs[-1])
    return DiffOp._raw(out)


def op_mul(a, b):
    """Noncommutative product ``a * b``."""
    if not a or not b:
        return DiffOp._raw([])
    n = len(a.coeffs) + len(b.coeffs) - 1
    acc = [Frac.lift(0)] * n
    cur = b
    for i, ai in enumerate(a.coeffs):
        if i:
            cur = d_times(cur)
        if ai:
            for k, c in enumerate(cur.coeffs):
                if c:
                    acc[k] = acc[k] + ai * c
    return DiffOp._raw(acc)


def commutator(a, b):
    """``a*b - b*a``."""
    return op_mul(a, b) - op_mul(b, a)


def right_divmod(a, b):
    """``(q, r)`` with ``a = q*b + r`` and ``ord(r) < ord(b)``."""
    if not b:
        raise ZeroDivisionError("right division by the zero operator")
    nb = b.order
    inv = b.lc.inverse()
    q = [Frac.lift(0)] * max(len(a.coeffs) - nb, 0)
    r = a
    while r and r.order >= nb:
        k = r.order - nb
        c = r.lc * inv
        q[k] = c
        t = DiffOp.monomial(c, k)
        r = r - op_mul(t, b)
        if r and r.order >= nb + k:
            raise ArithmeticError("right division failed to lower the order")
    q = DiffOp._raw(q)
    if CHECK_DIVISION and op_mul(q, b) + r != a:
        raise AssertionError("right division contract violated")
    return q, r


def gcrd(a, b):
    """Monic greatest common right divisor by the right Euclidean algorithm."""
    if not a and not b:
        raise ValueError("gcrd(0, 0) is undefined")
    while b:
        a, b = b, right_divmod(a, b)[1]
    return a.monic()


def format_operator(op):
    """Text such as ``D^3 + (-6/x^2) * D + ((x^3 + 12)/x^3)``."""
    if not op.coeffs:
        return "0"
    parts = []
    for k in range(len(op.coeffs) - 1, -1, -1):
        c = op.coeffs[k]
        if not c:
            continue
        dk = "D" if k == 1 else f"D^{k}"
        simple = c.den == 1 and len(c.num) == 1
        if k == 0:
            parts.append(str(c) if simple else f"({c})")
        elif c == 1:
            parts.append(dk)
        else:
            parts.append(f"{c} * {dk}" if simple else f"({c}) * {dk}")
    return " + ".join(parts)


def poly_in_operator(coeffs, op):
    """Evaluate ``sum c_k * op^k`` for constant coefficients ``c_k`` (Horner)."""
    result = DiffOp._raw([])
    for c in reversed(list(coeffs)):
        result = op_mul(result, op) + DiffOp.const(c)
    return result


def parse_operator(src, line=1):
    """Parse operator text such as ``D^3 - (6/x^2)*D + 12/x^3 + 1``."""
    from .parsing import parse_operator_text

    return parse_operator_text(src, line)


__all__ = [
    "D", "DiffOp", "NEG_INF", "commutator", "d_times", "format_operator", "gcrd",
    "op_mul", "parse_operator", "poly_in_operator", "right_divmod",
]
