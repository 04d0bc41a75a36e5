"""
Admissible cuts and the coproduct
=================================

Cutting edges of a tree gives a coproduct.  Its left and right halves
track whether the right-most leaf falls off.
"""

from tridend import parse_tree
from tridend.coproduct import (coproduct, coproduct_left, coproduct_right, cut_parts,
                               enumerate_admissible_cuts)
from tridend.dual import dual_coproduct

t = parse_tree("(|,(|,|),(|,|))")

for cut in enumerate_admissible_cuts(t):
    fallen, rest = cut_parts(t, cut)
    print(f"{str(cut):>22}   fallen: {fallen}   kept: {rest}")

print("Δ  =", coproduct(t))
print("Δ← =", coproduct_left(t))
print("Δ→ =", coproduct_right(t))

# On the dual side the tree is split along the path to each leaf.
print("lightning:", dual_coproduct(t))
