# %% [markdown]
# Right factors of L - lam, on the whole curve and at points.

# %%
from fractions import Fraction

from spectralcurves import (
    ParamPoint, build_curve_model, factor_at_point, intrinsic_factor, load_example,
    parse_frac, substitute_param, verify_basis,
)

basis = verify_basis(*load_example())
model = build_curve_model(basis)
phi, N = intrinsic_factor(model)
print(N.order)

# %%
# the curve is rational, tau -> (1 - tau^3, tau^4, -tau^5)
aleph = tuple(parse_frac(s) for s in ("1 - tau^3", "tau^4", "-tau^5"))
phi_t = substitute_param(phi, aleph)
print(phi_t)

# %%
for t in (Fraction(1), Fraction(2), Fraction(1, 2)):
    p = ParamPoint(1 - t**3, t**4, -t**5)
    fac, N = factor_at_point(basis, model, p)
    print(t, fac, N * fac == basis.L - p.lambda0)

# %%
# the singular point is excluded
try:
    factor_at_point(basis, model, ParamPoint(1, 0, 0))
except Exception as exc:
    print(type(exc).__name__, exc)
