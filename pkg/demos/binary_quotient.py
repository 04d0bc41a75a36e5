"""
The quotient on binary trees
============================

Middle products generate an ideal whose basis is the non-binary trees.
What is left is a product and coproduct on binary trees.
"""

from tridend import parse_tree
from tridend.quotient import (binary_trees, check_lr_readings, lr_coproduct, lr_product,
                              lr_product_recursive)

Y = parse_tree("(|,|)")
t = parse_tree("(|,(|,|))")

print("Y*Y in the quotient   :", lr_product(Y, Y))
print("Y*t in the quotient   :", lr_product(Y, t))
print("same, recursive form  :", lr_product_recursive(Y, t))
print("coproduct of t        :", lr_coproduct(t))
print("binary trees per degree:", [len(binary_trees(n)) for n in range(7)])

for reading, report in check_lr_readings(4).items():
    print(reading, "->", report.summary())
