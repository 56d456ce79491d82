"""
Vexillary permutations have a single insertion tableau T(sigma), built
column by column from the Rothe diagram; shifting each entry back by how
far it sits above the frozen value recovers the diagram itself.

Run:  python3 demos/vexillary.py
"""

from egkit import eg_map, is_vexillary, lehmer_code, rothe_diagram
from egkit.networks import enumerate_reduced_words
from egkit.vexillary import delta_map, t0_construction, t_construction

sigma = (8, 1, 3, 9, 7, 5, 2, 4, 6)
print("sigma =", "".join(map(str, sigma)), "vexillary:", is_vexillary(sigma))
print("Lehmer code", lehmer_code(sigma))

print("\ncolumns placed from the diagram:\n" + t0_construction(sigma).grid())
t = t_construction(sigma)
print("\nT(sigma):\n" + t.pretty())
print("\nshifted cells equal the diagram:", delta_map(t) == rothe_diagram(sigma))

# Every reduced word inserts to the same tableau.
tableaux = set()
for k, w in enumerate(enumerate_reduced_words(sigma)):
    tableaux.add(eg_map(w)[0])
    if k == 2000:
        break
print(f"distinct insertion tableaux among the first {k + 1} reduced words:", len(tableaux))

# 2143 is the smallest permutation where this fails.
print("\n2143: distinct P =", len({eg_map(w)[0] for w in enumerate_reduced_words((2, 1, 4, 3))}))
