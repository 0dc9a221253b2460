"""Build the saturated family for K_{s,t} and check it exhaustively.

Run: python3 demos/02_construct_and_verify.py
"""
# %%
import time

from posetsat import build_saturated_family, check_saturated, witness_for_missing
from posetsat.sets import fmt, from_elements as S

con = build_saturated_family(n=9, s=3, t=2)
print(con.report())

# %% every one of the 2^9 - |F| missing sets should complete an induced K_{3,2}
t0 = time.perf_counter()
rep = check_saturated(con.family, 3, 2)
print(rep.summary(), f"({time.perf_counter() - t0:.2f}s)")

# %% the explicit copies, one case per shape of the missing set
from posetsat.verify import witness_with_case

for a in [S([5]), S([1, 2, 3, 4, 9]), S([1, 9]), S([1, 2, 6]), S([1, 2, 5, 6, 7, 8])]:
    if a in con.family:
        continue
    label, w = witness_with_case(a, con)
    print(f"{fmt(a):>18}  {label:<24} {w}")

# %% the linear part grows like coefficient*n while |F5| stays put
for n in range(7, 13):
    c = build_saturated_family(n, 3, 2)
    print(n, len(c.family), c.coefficient * n + c.f5_size, c.f5_size)

# %% asking for K_{2,3} builds K_{3,2} and complements
dual = build_saturated_family(9, 2, 3)
print(dual.swapped, check_saturated(dual.family, 2, 3).saturated)
