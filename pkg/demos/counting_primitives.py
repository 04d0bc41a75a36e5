"""
Counting primitive elements
===========================

Primitive spaces are exact kernels.  Their dimensions match the
Schröder-number series.
"""

from tridend.primitives import dimension_table, primitive_basis, theta
from tridend.series import codend_series, coass_series, tree_series

table = dimension_table(5)
for n, row in table.items():
    print(n, row)

print("R     :", tree_series(7).integer_coefficients())
print("P     :", codend_series(7).integer_coefficients())
print("P/X-1 :", coass_series(6).integer_coefficients())

# Multiplying a coassociative primitive by Y in the middle gives a
# primitive for both half coproducts.
for v in theta(2, primitive_basis("coass", 2)):
    print("a·Y =", v)
