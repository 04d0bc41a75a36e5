"""
Products of planar trees
========================

Trees are written with ``|`` for the leaf and ``(a,b,...)`` for grafting.
The product ``*`` splits into three parts, ``≺ + · + ≻``.
"""

from tridend import parse_tree
from tridend.products import (apply_qsh, enumerate_qsh, express_in_generator, left, mid,
                              render_expression, right, star)

Y = parse_tree("(|,|)")

# The three degree-2 trees come from Y*Y, one for each part.
print("Y*Y =", star(Y, Y))
print("Y≺Y =", left(Y, Y))
print("Y·Y =", mid(Y, Y))
print("Y≻Y =", right(Y, Y))

# Each term is a ladder indexed by a quasi-shuffle.
for q in enumerate_qsh(1, 1):
    print(q.values, "->", apply_qsh(q, Y, Y))

# Every tree is an iterated product of Y.
t = parse_tree("((|,|),(|,|,|),|)")
print(t, "=", render_expression(express_in_generator(t)))
