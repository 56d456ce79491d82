"""
Frozen regions against Rothe diagrams over all reduced words of S_5.

For every reduced word the frozen region of the insertion tableau is the
top-left component of the diagram of its permutation.  The frozen region
is all of P exactly when the permutation avoids 132.

Run:  python3 demos/frozen_regions.py
"""

from collections import Counter

from egkit import avoids_132, eg_map, frozen_region, is_frozen, rothe_diagram, top_left_component
from egkit.networks import enumerate_all_reduced_words

n = 5
agree = total = 0
fully_frozen = Counter()
for w, sigma in enumerate_all_reduced_words(n):
    p, _ = eg_map(w)
    total += 1
    agree += frozen_region(p) == top_left_component(rothe_diagram(sigma))
    fully_frozen[(is_frozen(p), avoids_132(sigma))] += 1

print(f"{agree} of {total} reduced words: frozen region = top-left diagram component")
for (frozen, avoiding), count in sorted(fully_frozen.items()):
    print(f"  P fully frozen={frozen!s:5}  sigma avoids 132={avoiding!s:5}: {count}")
