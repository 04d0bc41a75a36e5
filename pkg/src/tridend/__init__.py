"""Exact computations in the free tridendriform bialgebra on planar trees.

Trees are reduced planar rooted trees written ``|`` (the leaf, unit of the
algebra) and ``(c1,...,ck)``.  The main entry points:

* :mod:`tridend.trees` -- trees, enumeration, comb decompositions
* :mod:`tridend.products` -- the products ``*``, ``≺``, ``·``, ``≻``
* :mod:`tridend.coproduct` -- admissible-cut coproduct and its two halves
* :mod:`tridend.dual` -- lightning coproduct and the dual product
* :mod:`tridend.primitives` -- primitive spaces as exact kernels
* :mod:`tridend.series` -- Schröder numbers and generating series
* :mod:`tridend.quotient` -- the quotient on binary trees
"""
from .trees import LEAF, Y, PlanarTree, enumerate_trees, graft, parse_tree, render_tree
from .vectors import TensorVector, TreeVector, pairing, parse_vector
from .products import left, mid, right, star
from .coproduct import coproduct, reduced_coproduct
from .dual import dual_coproduct, dual_product

__version__ = "0.1.0"

__all__ = [
    "LEAF", "Y", "PlanarTree", "enumerate_trees", "graft", "parse_tree", "render_tree",
    "TensorVector", "TreeVector", "pairing", "parse_vector",
    "star", "left", "mid", "right", "coproduct", "reduced_coproduct",
    "dual_coproduct", "dual_product",
]
