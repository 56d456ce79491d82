"""
Walk through Edelman-Greene insertion for the sorting network 321232 of S_4.

Run:  python3 demos/worked_example.py
"""

from egkit import eg_inverse, eg_map, evacuation, insertion_trace
from egkit.promotion import PartialTableau, promote, right_slide_total
from egkit.tableaux import column_word

word = (3, 2, 1, 2, 3, 2)

# Insert one letter at a time.  The frozen region (cells holding i + j - 1)
# only ever grows, and for a network it ends as the whole staircase.
print("insertion of", "".join(map(str, word)))
for k, (p, frozen) in enumerate(insertion_trace(word), 1):
    print(f"  after {k} letters: P = {p}   frozen shape {frozen}")

p, q = eg_map(word)
print("\nP =", p, "\nQ =", q)

# Promotion peels Q apart again.  The first cell of each step's path gives
# back one letter of the network, read from the end.
t = PartialTableau.from_tableau(q)
while not t.is_empty():
    step = promote(t)
    print(f"  promote: first cell {step.first_cell}, now {step.tableau}")
    t = step.tableau
print("inverse map gives", eg_inverse(q))

# Reversing the network evacuates Q.
print("\nQ of the reversed word:", eg_map(word[::-1])[1])
print("evacuation of Q:       ", evacuation(q))

# The column word of Q is the smallest word with this recording tableau;
# the gap to the network is the number of right slides.
print("\ncolumn word", column_word(q), "right slides", right_slide_total(q))
