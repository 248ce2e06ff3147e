"""Differential Sylvester matrices, resultants and first subresultants.

For ``P`` of order ``n`` and ``Q`` of order ``m`` the rows of the Sylvester
matrix are the coefficients of ``D^(m-1-k) P, ..., D P, P, D^(n-1-k) Q, ..., Q``
(``k = 0`` for the resultant, ``k = 1`` for the first subresultant) in the
columns ``D^(n+m-1-k), ..., D, 1``.

Each row is scaled by the lcm of its denominators so that the elimination runs
over polynomials; the row multipliers are divided back out, so every result is
the exact value over the coefficient field.
"""

from dataclasses import dataclass
from functools import reduce

from .arith import ONE, Frac, MPoly, det_bareiss, mpoly_lcm
from .diffop import DiffOp, d_times


@dataclass(frozen=True)
class SylvesterMatrix:
    """Denominator-free Sylvester matrix.

    ``entries[i][j] / multipliers[i]`` is the true entry of row ``i``.
    """

    entries: tuple
    multipliers: tuple
    row_labels: tuple
    col_labels: tuple

    @property
    def shape(self):
        return (len(self.entries), len(self.col_labels))

    def entry(self, i, j):
        return Frac(self.entries[i][j], self.multipliers[i])

    def fractions(self):
        return [[self.entry(i, j) for j in range(self.shape[1])]
                for i in range(self.shape[0])]

    def multiplier(self):
        return reduce(lambda a, b: a * b, self.multipliers, ONE)

    def dump(self):
        """Row-major debug text with row and column labels."""
        lines = ["\t".join(["row"] + list(self.col_labels) + ["multiplier"])]
        for label, row, mult in zip(self.row_labels, self.entries, self.multipliers):
            lines.append("\t".join([label] + [str(c) for c in row] + [str(mult)]))
        return "\n".join(lines)


def _check_orders(p, q, minimum=1):
    if not p or not q or p.order < minimum or q.order < minimum:
        raise ValueError("both operators must have positive order")


def _clear_row(coeffs):
    dens = [c.den for c in coeffs if c]
    mult = reduce(mpoly_lcm, dens, ONE)
    row = tuple(c.num * mult.exquo(c.den) if c else MPoly() for c in coeffs)
    return row, mult


def _extended_system(p, q, k):
    n, m = p.order, q.order
    rows, labels = [], []
    for name, op, count in (("P", p, m - k), ("Q", q, n - k)):
        powers = [op]
        for _ in range(count - 1):
            powers.append(d_times(powers[-1]))
        for e in range(count - 1, -1, -1):
            rows.append(powers[e])
            labels.append(name if e == 0 else (f"D*{name}" if e == 1 else f"D^{e}*{name}"))
    return rows, labels


def _build(p, q, k):
    n, m = p.order, q.order
    ncols = n + m - k
    ops, labels = _extended_system(p, q, k)
    entries, mults = [], []
    for op in ops:
        coeffs = [op.coeff(ncols - 1 - j) for j in range(ncols)]
        row, mult = _clear_row(coeffs)
        entries.append(row)
        mults.append(mult)
    cols = tuple("1" if e == 0 else ("D" if e == 1 else f"D^{e}")
                 for e in range(ncols - 1, -1, -1))
    return SylvesterMatrix(tuple(entries), tuple(mults), tuple(labels), cols)


def sylvester0(p, q):
    """Square Sylvester matrix of size ``ord(P) + ord(Q)``."""
    _check_orders(p, q)
    return _build(p, q, 0)


def sylvester1(p, q):
    """Matrix of the first subresultant: ``n+m-2`` rows, ``n+m-1`` columns."""
    _check_orders(p, q)
    if p.order + q.order < 3:
        raise ValueError("first subresultant needs ord(P) >= 2 or ord(Q) >= 2")
    return _build(p, q, 1)


def _det(entries, mults):
    if not entries:
        return Frac.lift(1)
    d = det_bareiss([list(r) for r in entries])
    return Frac(d, reduce(lambda a, b: a * b, mults, ONE))


def dres(p, q):
    """Differential resultant ``det S0(P, Q)`` as an exact rational function."""
    s = sylvester0(p, q)
    return _det(s.entries, s.multipliers)


def subres1(p, q):
    """First differential subresultant ``(phi0, phi1)``, i.e. ``phi0 + phi1*D``.

    ``phi0`` is the minor without the ``D`` column and ``phi1`` the minor
    without the ``1`` column.  The determinant of the bordered matrix with
    first row ``(0, ..., 0, 1, -D)`` equals ``(-1)^(n+m-1) (phi0 + phi1*D)``.
    """
    s = sylvester1(p, q)
    ncols = s.shape[1]
    drop_d = [tuple(c for j, c in enumerate(r) if j != ncols - 2) for r in s.entries]
    drop_1 = [tuple(c for j, c in enumerate(r) if j != ncols - 1) for r in s.entries]
    return _det(drop_d, s.multipliers), _det(drop_1, s.multipliers)


def bezout_cofactors(p, q):
    """Operators ``(C0, D0)`` of orders ``m-1`` and ``n-1`` with
    ``C0*P + D0*Q = dres(P, Q)``.

    Cofactor expansion of the Sylvester matrix along its last column, whose
    entries are replaced by the rows of the extended system.
    """
    s = sylvester0(p, q)
    n, m = p.order, q.order
    size = n + m
    cof = []
    for i in range(size):
        minor = [r[:-1] for k, r in enumerate(s.entries) if k != i]
        mults = [mu for k, mu in enumerate(s.multipliers) if k != i]
        c = _det(minor, mults)
        cof.append(-c if (i + size - 1) % 2 else c)
    c0 = DiffOp([cof[m - 1 - e] for e in range(m)])
    d0 = DiffOp([cof[m + n - 1 - e] for e in range(n)])
    return c0, d0


def shift_operator(op, c):
    """``op - c`` for a constant or function ``c``."""
    return op - DiffOp.const(c)
