"""Exact induced saturation numbers for n <= 4.

Run: python3 demos/04_exact_small_cases.py
"""
# %%
import time

from posetsat import antichain, chain, complete_bipartite, exact_sat_star

posets = {
    "K11": complete_bipartite(1, 1),
    "antichain-2": antichain(2),
    "K21": complete_bipartite(2, 1),
    "K22": complete_bipartite(2, 2),
    "K32": complete_bipartite(3, 2),
    "chain-3": chain(3),
}

# %% one row per poset, one column per n
print(f"{'':<12}" + "".join(f"{n:>6}" for n in range(1, 5)))
for name, p in posets.items():
    t0 = time.perf_counter()
    row = [exact_sat_star(n, p) for n in range(1, 5)]
    cells = "".join(f"{r.value:>6}" if r.exact else f"{'>=' + str(r.lower_bound):>6}" for r in row)
    print(f"{name:<12}{cells}   ({time.perf_counter() - t0:.2f}s)")

# %% the minimizers for K22 at n = 3
res = exact_sat_star(3, complete_bipartite(2, 2))
for fam in res.witnesses:
    print(fam)

# %% a tight budget gives a flagged partial answer rather than a wrong one
partial = exact_sat_star(4, complete_bipartite(2, 2), budget=50)
print(partial.value, partial.exact, partial.lower_bound)
