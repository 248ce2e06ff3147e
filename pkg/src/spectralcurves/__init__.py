"""Exact computation of spectral curves of commuting ordinary differential
operators and of the first-order right factors they induce.

The main entry points are :func:`verify_basis`, :func:`build_curve_model`,
:func:`intrinsic_factor` and :func:`factor_at_point`; the lower layers
(polynomials, operators, resultants, Gröbner bases) are usable on their own.
"""

from .arith import (
    Frac, LexOrder, MPoly, Rational, det_bareiss, deriv_x, format_poly, mpoly_gcd,
    mpoly_lcm, squarefree_part, substitute, sylvester_matrix, uni_resultant,
)
from .diffop import (
    D, NEG_INF, DiffOp, commutator, format_operator, gcrd, op_mul, parse_operator,
    poly_in_operator, right_divmod,
)
from .ideals import (
    GroebnerBasis, buchberger, constant_certify, ideal_member, normal_form,
    projection_data,
)
from .parsing import ParseError, parse_frac, parse_poly
from .resultants import SylvesterMatrix, bezout_cofactors, dres, subres1, sylvester0, sylvester1
from .spectral import (
    CentralizerBasis, CurveModel, CurveModelError, ParamPoint, bc_pair,
    build_curve_model, factor_at_point, intrinsic_factor, normalize_operator,
    substitute_param, verify_basis,
)

__version__ = "0.1.0"


def load_example():
    """The bundled third-order example ``(L, A1, A2)``."""
    from importlib import resources

    from .cli import read_operator_file

    text = resources.files(__name__).joinpath("data", "space_curve_example.ops").read_text()
    return tuple(read_operator_file(text))
