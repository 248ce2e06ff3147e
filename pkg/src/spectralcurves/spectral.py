"""Spectral curve of a rank-one centralizer of a third-order operator.

Given ``L`` of order 3 and commuting ``A1``, ``A2`` of orders congruent to 1
and 2 mod 3, this module builds the three pairwise curves ``f1, f2, f3``, the
lex Gröbner basis of ``(f1, f2, f3)``, the first subresultants of each pair
and, from them, the first-order right factor ``D + phi`` of ``L - lam`` over
the function field of the curve.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import (
    LAM, MU1, MU2, Frac, MPoly, as_mpoly, deriv_x, squarefree_part,
    substitute, uni_resultant,
)
from .diffop import D, DiffOp, commutator, gcrd, poly_in_operator, right_divmod
from .ideals import buchberger, constant_certify, normal_form, projection_data
from .resultants import dres, subres1


class BasisError(ValueError):
    """Rejected centralizer basis; ``code`` identifies the failed condition."""

    code = "basis"


class ConstantCoefficientError(BasisError):
    code = "constant-coefficients"


class OrderResidueError(BasisError):
    code = "order-residue"


class CommutatorError(BasisError):
    code = "commutator"

    def __init__(self, pair, value):
        self.pair = pair
        self.commutator = value
        super().__init__(f"[{pair[0]}, {pair[1]}] = {value} is not zero")


class CurveModelError(ArithmeticError):
    """Failure while building the curve model.  ``partial`` keeps computed data."""

    def __init__(self, code, message, partial=None):
        self.code = code
        self.partial = partial or {}
        super().__init__(message)


class OffCurveError(ValueError):
    code = "off-curve"


class ExclusionError(ArithmeticError):
    """The point lies in the exclusion set for every usable index."""

    code = "exclusion-set"

    def __init__(self, indices):
        self.indices = tuple(indices)
        names = ", ".join(f"phi{i},1" for i in self.indices)
        super().__init__(f"the point lies in the exclusion set: {names} vanish there")


class FactorDisagreement(ArithmeticError):
    code = "factor-disagreement"


# -- centralizer basis -------------------------------------------------------


@dataclass(frozen=True)
class CentralizerBasis:
    """Commuting triple ``(L, A1, A2)``.  Minimality of the orders is assumed."""

    L: DiffOp
    A1: DiffOp
    A2: DiffOp

    @property
    def orders(self):
        return (self.L.order, self.A1.order, self.A2.order)


def verify_basis(L, A1, A2):
    if not L or L.order != 3 or L.lc != 1:
        raise BasisError("L must be monic of order 3")
    if all(c.is_constant() for c in L.coeffs):
        raise ConstantCoefficientError("L has constant coefficients")
    for name, op, residue in (("A1", A1, 1), ("A2", A2, 2)):
        if not op or op.order % 3 != residue:
            raise OrderResidueError(
                f"ord({name}) = {op.order} is not congruent to {residue} mod 3")
    for (na, a), (nb, b) in ((("L", L), ("A1", A1)), (("L", L), ("A2", A2)),
                             (("A1", A1), ("A2", A2))):
        c = commutator(a, b)
        if c:
            raise CommutatorError((na, nb), c)
    return CentralizerBasis(L, A1, A2)


# -- pairwise curves ---------------------------------------------------------


def _spectral_shift(op, v):
    return op - DiffOp.const(MPoly.var(v))


def pair_resultant(P, Q, vars=("lam", "mu1")):
    """``dres(P - v1, Q - v2)`` as a polynomial; requires ``[P, Q] = 0``."""
    c = commutator(P, Q)
    if c:
        raise CommutatorError(("P", "Q"), c)
    h = dres(_spectral_shift(P, vars[0]), _spectral_shift(Q, vars[1]))
    if not h.is_poly() or not constant_certify(h):
        raise ArithmeticError(f"resultant of a commuting pair depends on x: {h}")
    return h.num


def bc_pair(P, Q, vars=("lam", "mu1")):
    """Square-free generator of the curve of the commuting pair ``(P, Q)``.

    The sign follows the realized resultant.
    """
    h = pair_resultant(P, Q, vars)
    f = squarefree_part(h)
    return -f if h.lc() < 0 else f


def normalize_operator(L, A, var="mu1"):
    """Tschirnhaus shift ``A + a2(L)/3`` removing the ``mu^2`` term.

    ``a2`` is the ``mu^2`` coefficient of ``dres(L - lam, A - mu)`` after it is
    made monic in ``mu``.
    """
    h = pair_resultant(L, A, ("lam", var))
    parts = h.coeffs_in(var)
    if h.degree(var) != 3:
        raise ValueError(f"resultant has degree {h.degree(var)} in {var}, expected 3")
    lead = parts[3]
    if not lead.is_constant():
        raise ValueError("leading mu coefficient of the resultant is not constant")
    a2 = parts.get(2, MPoly()).scale(1 / lead.constant_value())
    if a2.variables() - {LAM}:
        raise ValueError("mu^2 coefficient is not a polynomial in lam")
    dense = [Fraction(0)] * (a2.degree(LAM) + 1 if a2 else 0)
    for k, v in a2.coeffs_in(LAM).items():
        dense[k] = v.constant_value()
    return A + poly_in_operator([c / 3 for c in dense], L)


# -- curve model -------------------------------------------------------------


def saturated_member(g, F, h, max_power=8):
    """Least ``k <= max_power`` with ``h^k * g`` in the ideal of ``F``, else None.

    Membership in the saturation by a function that does not vanish
    identically on the curve; for a prime saturation this is vanishing on the
    curve.
    """
    num = g.num if isinstance(g, Frac) else as_mpoly(g)
    acc = num
    for k in range(max_power + 1):
        if not normal_form(acc, F):
            return k
        acc = acc * h
    return None


@dataclass(frozen=True)
class CurveModel:
    basis: CentralizerBasis
    f1: MPoly
    f2: MPoly
    f3: MPoly
    projection_cofactor: MPoly
    gb: object
    F0: MPoly
    F1: MPoly
    g1: MPoly
    g2: MPoly
    phi_pairs: tuple
    flags: dict = field(default_factory=dict)

    def lam_on_curve(self):
        """``lam`` as a function of ``(mu1, mu2)`` read from ``F1 = g2*lam + g1``."""
        return Frac(-self.g1, self.g2)

    def phi(self, i=1):
        a, b = self.phi_pairs[i - 1]
        return a / b

    def to_dict(self):
        return {
            "operators": {"L": str(self.basis.L), "A1": str(self.basis.A1),
                          "A2": str(self.basis.A2)},
            "f1": str(self.f1),
            "f2": str(self.f2),
            "f3": str(self.f3),
            "projection_cofactor": str(self.projection_cofactor),
            "groebner_basis": [str(g) for g in self.gb.gens],
            "F0": str(self.F0),
            "F1": str(self.F1),
            "g1": str(self.g1),
            "g2": str(self.g2),
            "phi": {f"phi{i + 1},{j}": str(p[j])
                    for i, p in enumerate(self.phi_pairs) for j in (0, 1)},
            "flags": dict(self.flags),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def build_curve_model(basis):
    L, A1, A2 = basis.L, basis.A1, basis.A2
    f1 = bc_pair(L, A1, ("lam", "mu1"))
    f2 = bc_pair(L, A2, ("lam", "mu2"))
    f3 = bc_pair(A1, A2, ("mu1", "mu2"))
    partial = {"f1": f1, "f2": f2, "f3": f3}
    r = uni_resultant(f1, f2, LAM)
    try:
        p = r.exquo(f3)
    except ArithmeticError:
        raise CurveModelError("projection", "f3 does not divide Res_lam(f1, f2)",
                              partial) from None
    gb = buchberger([f1, f2, f3])
    partial["gb"] = gb
    try:
        F0, F1, g1, g2 = projection_data(gb)
    except ValueError as e:
        raise CurveModelError("not-birational", str(e), partial) from None
    lam, m1, m2 = (Frac.lift(MPoly.var(v)) for v in (LAM, MU1, MU2))
    pairs = (subres1(L - lam, A1 - m1), subres1(L - lam, A2 - m2),
             subres1(A1 - m1, A2 - m2))
    w = pairs[0][0] * pairs[1][1] - pairs[1][0] * pairs[0][1]
    plain = not normal_form(w.num, gb)
    sat = saturated_member(w, gb, g2)
    if not plain and sat is None:
        raise CurveModelError("well-definedness",
                              "phi1 and phi2 differ on the curve", partial)
    flags = {
        "constant_certified": True,
        "projection_divides": True,
        "lam_linear": True,
        "well_defined_in_ideal": plain,
        "well_defined_on_curve": sat is not None,
    }
    return CurveModel(basis, f1, f2, f3, p, gb, F0, F1, g1, g2, pairs, flags)


# -- intrinsic factor --------------------------------------------------------


@dataclass(frozen=True)
class IntrinsicFactor:
    phi: Frac
    cofactor: DiffOp
    residual: Frac
    residual_in_ideal: bool
    residual_on_curve: bool
    closed_form: bool

    def __iter__(self):
        return iter((self.phi, self.cofactor))


def residual_numerator(phi0, phi1, u1, u0, lam=None):
    """Cleared numerator of ``phi^3 + u1 phi - 3 phi phi' - u0 + phi'' + lam``
    for ``phi = phi0/phi1``."""
    q = phi0 / phi1
    n, d = Frac.lift(q.num), Frac.lift(q.den)
    lam = Frac.lift(MPoly.var(LAM)) if lam is None else Frac.lift(lam)
    n1, d1 = deriv_x(n), deriv_x(d)
    n2, d2 = deriv_x(n1), deriv_x(d1)
    return (n ** 3 + u1 * n * d ** 2 - 3 * n * (n1 * d - n * d1) - u0 * d ** 3
            + (n2 * d ** 2 - 2 * n1 * d * d1 - n * d2 * d + 2 * n * d1 ** 2)
            + lam * d ** 3)


def intrinsic_factor(model, full=False):
    """``(phi, N)`` with ``L - lam = N * (D + phi)`` on the curve.

    With ``full=True`` the :class:`IntrinsicFactor` record is returned; it
    still unpacks as ``(phi, N)``.
    """
    L = model.basis.L
    phi0, phi1 = model.phi_pairs[0]
    if not normal_form(phi1.num, model.gb):
        raise ArithmeticError("phi1,1 lies in the ideal; phi is undefined")
    phi = phi0 / phi1
    u1, u0 = L.coeff(1), L.coeff(0)
    if not L.coeff(2):
        N = DiffOp([u1 - 2 * deriv_x(phi) + phi * phi, -phi, 1])
        closed = True
    else:
        lam = Frac.lift(MPoly.var(LAM))
        N, rem = right_divmod(L - lam, D + phi)
        if rem and normal_form(rem.coeff(0).num, model.gb):
            if saturated_member(rem.coeff(0), model.gb, model.g2) is None:
                raise ArithmeticError("D + phi does not right-divide L - lam on the curve")
        closed = False
    res = residual_numerator(phi0, phi1, u1, u0) if closed else Frac.lift(0)
    in_ideal = not normal_form(res.num, model.gb)
    on_curve = in_ideal or saturated_member(res, model.gb, model.g2) is not None
    if not on_curve:
        raise ArithmeticError("residual condition fails on the curve")
    out = IntrinsicFactor(phi, N, res, in_ideal, on_curve, closed)
    return out if full else (phi, N)


def recomposition_residues(model, phi, N):
    """Numerators of ``N*(D + phi) - (L - lam)`` reduced modulo the basis."""
    lam = Frac.lift(MPoly.var(LAM))
    diff = N * (D + phi) - (model.basis.L - lam)
    return [normal_form(c.num, model.gb) for c in diff.coeffs]


# -- parametrizations and points --------------------------------------------


def substitute_param(e, param):
    """Replace ``lam, mu1, mu2`` by the three entries of ``param``."""
    values = {LAM: Frac.lift(param[0]), MU1: Frac.lift(param[1]),
              MU2: Frac.lift(param[2])}
    if isinstance(e, DiffOp):
        return e.map_coeffs(lambda c: substitute_param(c, param))
    if isinstance(e, Frac):
        return substitute(e.num, values) / substitute(e.den, values)
    return substitute(as_mpoly(e), values)


@dataclass(frozen=True)
class ParamPoint:
    lambda0: object
    eta1: object
    eta2: object

    def values(self):
        return {LAM: Frac.lift(self.lambda0), MU1: Frac.lift(self.eta1),
                MU2: Frac.lift(self.eta2)}

    def on_curve(self, model):
        vals = self.values()
        return all(not substitute(f, vals) for f in (model.f1, model.f2, model.f3))

    def as_tuple(self):
        return (self.lambda0, self.eta1, self.eta2)


def _at(f, point):
    return substitute(f.num, point.values()) / substitute(f.den, point.values())


def factor_at_point(basis, model, p, details=False):
    """``(D + phi_i(P0), N)`` with ``N * (D + phi_i(P0)) = L - lambda0``.

    Both indices are tried; when both are usable their factors must agree and
    must match ``gcrd(L - lambda0, A_i - eta_i)``.
    """
    if not p.on_curve(model):
        raise OffCurveError(f"point {p.as_tuple()} does not lie on the curve")
    lam0 = Frac.lift(p.lambda0)
    L = basis.L
    factors, excluded = {}, []
    for i, (A, eta) in ((1, (basis.A1, p.eta1)), (2, (basis.A2, p.eta2))):
        phi0, phi1 = model.phi_pairs[i - 1]
        den = _at(phi1, p)
        if not den:
            excluded.append(i)
            continue
        factors[i] = D + _at(phi0, p) / den
    if not factors:
        raise ExclusionError(excluded)
    first = next(iter(factors.values()))
    for i, fac in factors.items():
        if fac != first:
            raise FactorDisagreement(f"phi1 and phi2 give different factors: "
                                     f"{factors[1]} and {factors[2]}")
        A = basis.A1 if i == 1 else basis.A2
        eta = p.eta1 if i == 1 else p.eta2
        g = gcrd(L - lam0, A - Frac.lift(eta))
        if g != fac:
            raise FactorDisagreement(f"gcrd(L - lambda0, A{i} - eta{i}) = {g} "
                                     f"differs from {fac}")
    N, rem = right_divmod(L - lam0, first)
    if rem:
        raise ArithmeticError(f"nonzero remainder {rem} on right division")
    if details:
        return first, N, {"indices": sorted(factors), "excluded": excluded,
                          "remainder": str(rem)}
    return first, N


__all__ = [
    "BasisError", "CentralizerBasis", "CommutatorError", "ConstantCoefficientError",
    "CurveModel", "CurveModelError", "ExclusionError", "FactorDisagreement",
    "IntrinsicFactor", "OffCurveError", "OrderResidueError", "ParamPoint",
    "bc_pair", "build_curve_model", "factor_at_point", "intrinsic_factor",
    "normalize_operator", "pair_resultant", "recomposition_residues",
    "residual_numerator", "saturated_member", "substitute_param", "verify_basis",
]
