"""Gröbner bases over Q[lam, mu1, mu2] and normal forms with Q(x) coefficients.

The monomial order is pure lex with ``lam > mu1 > mu2``.  Basis elements have
rational coefficients; polynomials being reduced may additionally involve
``x`` and ``tau``, which are treated as part of the coefficient field.  Since
every leading coefficient of a basis is a rational number, reduction never
divides by a function of ``x``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import LAM, MU1, MU2, TAU, X, Frac, MPoly, as_mpoly

_NCURVE = 3  # lam, mu1, mu2 occupy the first exponent slots


def _split(p):
    """Group ``p`` as ``{(a, b, c): coefficient in x, tau}``."""
    out = {}
    for e, c in p.terms.items():
        key = e[:_NCURVE]
        rest = (0,) * _NCURVE + e[_NCURVE:]
        out.setdefault(key, {})[rest] = c
    return {k: MPoly._raw(v) for k, v in out.items()}


def _join(groups):
    t = {}
    for key, coeff in groups.items():
        for e, c in coeff.terms.items():
            t[key + e[_NCURVE:]] = c
    return MPoly._raw(t)


def _divides(a, b):
    return all(i <= j for i, j in zip(a, b))


def _sub(a, b):
    return tuple(i - j for i, j in zip(a, b))


def _lcm(a, b):
    return tuple(max(i, j) for i, j in zip(a, b))


def _mono(key):
    return MPoly.monomial(key + (0,) * (5 - _NCURVE))


def _check_constant(p, what="generator"):
    if p.has_var(X) or p.has_var(TAU):
        raise ValueError(f"{what} depends on x or tau; bases must have constant coefficients")


class _Elem:
    """Basis element with its leading data and optional input cofactors."""

    __slots__ = ("poly", "terms", "lt", "lc", "sugar", "cof")

    def __init__(self, poly, sugar, cof=None):
        self.poly = poly
        self.terms = {k: v.constant_value() for k, v in _split(poly).items()}
        self.lt = max(self.terms)
        self.lc = self.terms[self.lt]
        self.sugar = sugar
        self.cof = cof


def _reduce(groups, basis, track=False, ncof=0, head_only=False):
    """Full (or head) reduction of ``{key: coeff}`` by elements of ``basis``.

    Returns ``(remainder_groups, cofactor_delta)`` where the second item is the
    combination subtracted, expressed on input generators when ``track``.
    """
    h = dict(groups)
    rem = {}
    delta = [MPoly() for _ in range(ncof)] if track else None
    while h:
        key = max(h)
        c = h[key]
        for el in basis:
            if _divides(el.lt, key):
                shift = _sub(key, el.lt)
                f = c * (1 / el.lc)
                for te, tc in el.terms.items():
                    k2 = tuple(i + j for i, j in zip(te, shift))
                    v = h.get(k2)
                    v = -(f * tc) if v is None else v - f * tc
                    if v:
                        h[k2] = v
                    else:
                        h.pop(k2, None)
                if track:
                    m = _mono(shift) * f
                    for i in range(ncof):
                        delta[i] = delta[i] + m * el.cof[i]
                break
        else:
            rem[key] = h.pop(key)
            if head_only:
                rem.update(h)
                break
    return rem, delta


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced lex Gröbner basis, sorted by increasing leading monomial.

    ``cofactors[i][k]`` is the coefficient of input ``k`` in ``gens[i]`` when
    the basis was built with tracking.
    """

    gens: tuple
    inputs: tuple = ()
    reduced: bool = True
    cofactors: tuple = None
    _elems: tuple = field(default=(), repr=False, compare=False)

    @property
    def order(self):
        return "lex(lam > mu1 > mu2)"

    def leading_monomials(self):
        return [e.lt for e in self._elems]

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)


def spoly(f, g):
    """S-polynomial of two nonzero constant-coefficient polynomials."""
    a, b = _Elem(as_mpoly(f), 0), _Elem(as_mpoly(g), 0)
    lcm = _lcm(a.lt, b.lt)
    return (_mono(_sub(lcm, a.lt)) * (1 / a.lc)) * a.poly - (
        _mono(_sub(lcm, b.lt)) * (1 / b.lc)) * b.poly


def _make_monic(poly, cof):
    el = _Elem(poly, 0)
    inv = 1 / el.lc
    return poly * inv, (None if cof is None else [c * inv for c in cof])


def buchberger(gens, track=False):
    """Reduced lex Gröbner basis of ``gens`` (sugar pair selection)."""
    inputs = []
    for g in gens:
        g = as_mpoly(g)
        if not g:
            raise ValueError("zero generator")
        _check_constant(g)
        inputs.append(g)
    if not inputs:
        raise ValueError("at least one generator is required")
    n_in = len(inputs)

    basis = []
    pairs = set()

    def add(poly, sugar, cof):
        poly, cof = _make_monic(poly, cof)
        el = _Elem(poly, sugar, cof)
        j = len(basis)
        basis.append(el)
        for i in range(j):
            pairs.add((i, j))

    for k, g in enumerate(inputs):
        cof = [MPoly.const(1 if i == k else 0) for i in range(n_in)] if track else None
        add(g, g.total_degree(), cof)

    done = set()
    while pairs:
        def pair_key(p):
            i, j = p
            lcm = _lcm(basis[i].lt, basis[j].lt)
            sug = max(basis[i].sugar + sum(_sub(lcm, basis[i].lt)),
                      basis[j].sugar + sum(_sub(lcm, basis[j].lt)))
            return (sug, lcm, i, j)

        best = min(pairs, key=pair_key)
        pairs.discard(best)
        done.add(best)
        i, j = best
        a, b = basis[i], basis[j]
        lcm = _lcm(a.lt, b.lt)
        # product criterion
        if all(min(u, v) == 0 for u, v in zip(a.lt, b.lt)):
            continue
        # chain criterion
        skip = False
        for k, c in enumerate(basis):
            if k in (i, j) or not _divides(c.lt, lcm):
                continue
            if tuple(sorted((i, k))) not in pairs and tuple(sorted((j, k))) not in pairs:
                skip = True
                break
        if skip:
            continue
        ma = _mono(_sub(lcm, a.lt)) * (1 / a.lc)
        mb = _mono(_sub(lcm, b.lt)) * (1 / b.lc)
        s = ma * a.poly - mb * b.poly
        sugar = pair_key(best)[0]
        if not s:
            continue
        cof = [ma * a.cof[t] - mb * b.cof[t] for t in range(n_in)] if track else None
        rem, delta = _reduce(_split(s), basis, track, n_in)
        if not rem:
            continue
        if track:
            cof = [cof[t] - delta[t] for t in range(n_in)]
        add(_join(rem), sugar, cof)

    # minimize: drop elements whose leading monomial is divisible by another's
    keep = []
    for idx, el in enumerate(basis):
        redundant = False
        for jdx, other in enumerate(basis):
            if jdx == idx or not _divides(other.lt, el.lt):
                continue
            if other.lt != el.lt or jdx < idx:
                redundant = True
                break
        if not redundant:
            keep.append(el)

    # interreduce the tails
    final = []
    for el in keep:
        others = [o for o in keep if o is not el]
        groups = _split(el.poly)
        head = {el.lt: groups.pop(el.lt)}
        rem, delta = _reduce(groups, others, track, n_in)
        rem.update(head)
        cof = [el.cof[t] - delta[t] for t in range(n_in)] if track else None
        final.append(_Elem(_join(rem), el.sugar, cof))
    final.sort(key=lambda e: e.lt)
    return GroebnerBasis(
        gens=tuple(e.poly for e in final),
        inputs=tuple(inputs),
        reduced=True,
        cofactors=tuple(tuple(e.cof) for e in final) if track else None,
        _elems=tuple(final),
    )


def _elems_of(F):
    if isinstance(F, GroebnerBasis) and F._elems:
        return F._elems
    els = []
    for g in F:
        g = as_mpoly(g)
        _check_constant(g, "basis element")
        els.append(_Elem(g, 0))
    return sorted(els, key=lambda e: e.lt)


def normal_form(g, F):
    """Remainder of ``g`` on division by the basis ``F``.

    ``g`` may be a polynomial involving ``x`` and ``tau`` or a ``Frac`` whose
    denominator is free of ``lam, mu1, mu2``; the denominator is carried along.
    """
    els = _elems_of(F)
    if isinstance(g, Frac):
        if any(g.den.has_var(v) for v in (LAM, MU1, MU2)):
            raise ValueError("denominator involves lam or mu; clear it before reducing")
        rem, _ = _reduce(_split(g.num), els)
        return Frac(_join(rem), g.den)
    g = as_mpoly(g)
    rem, _ = _reduce(_split(g), els)
    return _join(rem)


def ideal_member(g, F):
    return not normal_form(g, F)


def constant_certify(h):
    """True iff ``h`` does not involve ``x`` or ``tau``."""
    if isinstance(h, Frac):
        parts = (h.num, h.den)
    elif isinstance(h, (int, Fraction)):
        return True
    else:
        parts = (as_mpoly(h),)
    return not any(p.has_var(X) or p.has_var(TAU) for p in parts)


def s_polynomials_reduce(F):
    """Check that every S-polynomial of basis pairs reduces to zero."""
    els = _elems_of(F)
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            rem, _ = _reduce(_split(spoly(els[i].poly, els[j].poly)), els)
            if rem:
                return False
    return True


def is_reduced(F):
    """Monic, and no term of a generator divisible by another leading monomial."""
    els = _elems_of(F)
    for el in els:
        if el.lc != 1:
            return False
        for other in els:
            if other is el:
                continue
            if any(_divides(other.lt, k) for k in el.terms):
                return False
    return True


def projection_data(F):
    """``(F0, F1, g1, g2)``: the lam-free element of least leading monomial and
    the first element of lam-degree one, read as ``F1 = g2*lam + g1``.

    Raises ``ValueError`` when either element is missing.
    """
    F0 = F1 = None
    for g in F.gens:
        d = g.degree(LAM)
        if d == 0 and F0 is None:
            F0 = g
        elif d == 1 and F1 is None:
            F1 = g
    if F0 is None:
        raise ValueError("the basis contains no element free of lam")
    if F1 is None:
        raise ValueError("the basis has no element linear in lam; "
                         "the projection to (mu1, mu2) is not birational")
    parts = F1.coeffs_in(LAM)
    return F0, F1, parts.get(0, MPoly()), parts[1]
