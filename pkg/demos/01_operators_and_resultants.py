# %% [markdown]
# Operators, products and differential resultants.

# %%
from spectralcurves import D, commutator, dres, gcrd, load_example, parse_frac, subres1

L, A1, A2 = load_example()
print(L)
print(A1.order, A2.order)

# %%
# D*a = a*D + a'
a = parse_frac("x^2 + 1/x")
print(D * a)

# %%
# the three operators commute pairwise
print(commutator(L, A1), commutator(L, A2), commutator(A1, A2))

# %%
lam, mu1 = parse_frac("lam"), parse_frac("mu1")
f1 = dres(L - lam, A1 - mu1)
print(f1)   # no x left in it

# %%
# the first subresultant gives the common right factor where f1 vanishes
phi0, phi1 = subres1(L - lam, A1 - mu1)
print(phi0)
print(phi1)
print(gcrd(L, A1 - 1))
