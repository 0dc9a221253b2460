"""Chains and lanterns on a small ground set.

Run: python3 demos/01_lanterns.py
"""
# %% internally disjoint chains between two sets
from posetsat.chains import disjoint_chains, lower_lantern, upper_lantern
from posetsat.sets import fmt, from_elements as S

A, B = S([1]), S([1, 2, 3, 4])
for c in disjoint_chains(A, B, [2, 3, 4]):
    print(" < ".join(fmt(x) for x in c.sets))
# each chain adds the elements of B \ A in a rotated order, so
# the middle sets of two different chains never coincide

# %% an upper lantern for K_{3,2} over A = {1,2} in [9]
lan = upper_lantern(S([1, 2]), s=3, t=2, n=9)
for c in lan.chains:
    print(" < ".join(fmt(x) for x in c.sets))
print("members:", len(lan.members))
print("last increment set:", fmt(lan.last_increment))   # always {6,7} = [s+t+1, 2s+t-1]

# %% a lower lantern over {1,5}: the first step above the base is pinned instead
low = lower_lantern(S([1, 5]), s=3, t=2, n=9)
print("first increment set:", fmt(low.first_increment))

# %% level slices are what the witness builder reads off
for k in range(2, 8):
    print(k, [fmt(x) for x in lan.level(k)])
