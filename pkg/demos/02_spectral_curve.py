# %% [markdown]
# The curve of a commuting triple.

# %%
from spectralcurves import build_curve_model, load_example, normal_form, parse_poly, verify_basis

basis = verify_basis(*load_example())
model = build_curve_model(basis)

# %%
for name in ("f1", "f2", "f3"):
    print(name, getattr(model, name))

# %%
# reduced lex basis, lam > mu1 > mu2
for g in model.gb.gens:
    print(g)
print("g1 =", model.g1, " g2 =", model.g2)

# %%
# (L - 1) A2 = A1^2, so this extra relation holds on the triple
L, A1, A2 = load_example()
print((L - 1) * A2 == A1 * A1)
print(normal_form(parse_poly("mu2*(lam - 1) - mu1^2"), model.gb))

# %%
print(model.flags)
print(model.to_json()[:200])
