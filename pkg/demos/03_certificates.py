"""The n+1 lower bound, certified family by family.

Run: python3 demos/03_certificates.py
"""
# %%
from posetsat import antichain, complete_bipartite, enumerate_saturated, legs_certificate
from posetsat.poset import classify_legs
from posetsat.sets import fmt

# %% which posets have legs
for name, p in [("antichain-2", antichain(2)), ("K22", complete_bipartite(2, 2)),
                ("K21", complete_bipartite(2, 1)), ("K12", complete_bipartite(1, 2))]:
    print(f"{name:<12} {classify_legs(p).kind.name}")
# K21 has none, but its dual K12 does, so K21 families get certified through complements

# %% every saturated family for K22 on [4], with the injection x -> f(x)
p = complete_bipartite(2, 2)
fams = enumerate_saturated(4, p, 16)
print(len(fams), "saturated families; sizes", sorted({len(f) for f in fams}))
cert = legs_certificate(fams[0], p)
print(fams[0])
for x, fx in cert.f_map.items():
    print(f"  f({x}) = {fmt(fx)}")
print("bound", cert.lower_bound, "<=", cert.family_size)

# %% K21 goes through the dual
fam = enumerate_saturated(3, complete_bipartite(2, 1), 8)[0]
c = legs_certificate(fam, complete_bipartite(2, 1))
print(fam, "dualized:", c.dualized, "valid:", c.valid)

# %% with a body and no maximum, f also avoids [n]
for fam in fams:
    c = legs_certificate(fam, p, avoid_top=True, strict=False)
    print(len(fam), c.valid, c.lower_bound)
