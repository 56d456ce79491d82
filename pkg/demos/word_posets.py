"""
Word posets: all words with a frozen insertion tableau and a fixed
recording tableau Q, ordered letter by letter.

Run:  python3 demos/word_posets.py
"""

from egkit import build_poset, eg_inverse, eg_map, eta_table, interval_height
from egkit.promotion import right_slide_total
from egkit.tableaux import Tableau, column_word

q = Tableau.of((1, 4, 5), (2, 6), (3,))
poset = build_poset(q)
print(f"Q = {q}: {len(poset)} words")
for w in poset.elements:
    print("  ", "".join(map(str, w)))
bottom, top = column_word(q), eg_inverse(q)
print("minimum", bottom, "network", top)
print("interval height", interval_height(poset, bottom, top), "right slides", right_slide_total(q))

# Heights over all staircase tableaux, n = 3, 4, 5.
for n in (3, 4, 5):
    print(f"eta for n = {n}:", eta_table(n))

# For n = 6 the network need not be the only maximal element.
network = (4, 5, 2, 1, 3, 4, 3, 2, 1, 3, 2, 4, 5, 4, 3)
q6 = eg_map(network)[1]
big = build_poset(q6, cap=15)
print(f"\nn = 6, Q from {''.join(map(str, network))}: {len(big)} words")
for w in big.maximal_elements():
    tag = "  (the network)" if w == network else ""
    print("  maximal:", "".join(map(str, w)) + tag)
