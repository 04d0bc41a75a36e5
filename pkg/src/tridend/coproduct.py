"""Admissible-cut coproduct and its split by the right-most leaf.

A cut removes internal edges, at most one on each root-to-leaf path.  Each
removed subtree leaves a leaf behind in the root component ``P``, and the
fallen subtrees are multiplied with ``*`` from left to right to give ``G``::

    Δ(t) = Σ_cuts G ⊗ P,   Δ(|) = | ⊗ |

The empty cut gives ``| ⊗ t`` and the total cut gives ``t ⊗ |``.  ``Δ←`` keeps
the cuts that separate the right-most leaf from the root (the total cut
included), ``Δ→`` the others (the empty cut included).
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .products import OPS, product, product_vec, star
from .report import Report
from .tensor import tensor_op
from .trees import LEAF, PlanarTree, _node, degree, enumerate_trees
from .vectors import TensorVector, TreeVector

__all__ = [
    "AdmissibleCut", "enumerate_admissible_cuts", "cut_parts", "cuts_rightmost_leaf",
    "coproduct", "reduced_coproduct", "coproduct_left", "coproduct_right",
    "reduced_coproduct_left", "reduced_coproduct_right", "counit",
    "check_bialgebra", "check_32_relations", "three_two_relations",
    "codendriform_identities", "is_primitive_tree",
]

Edge = tuple  # (path of the parent node, child index)


@dataclass(frozen=True)
class AdmissibleCut:
    kind: str  # "empty", "total" or "edges"
    edges: frozenset = frozenset()

    def __str__(self):
        if self.kind != "edges":
            return self.kind
        return "{" + ", ".join(f"{p}/{i}" for p, i in sorted(self.edges)) + "}"


EMPTY_CUT = AdmissibleCut("empty")
TOTAL_CUT = AdmissibleCut("total")


def _subtree(t: PlanarTree, path) -> PlanarTree:
    for i in path:
        t = t[i]
    return t


def _edge_sets(t: PlanarTree, path=()) -> list[frozenset]:
    """Antichains of internal edges inside the subtree at ``path`` (with empty)."""
    per_child = []
    for i, c in enumerate(t):
        if c:
            per_child.append([frozenset([(path, i)])] + _edge_sets(c, path + (i,)))
        else:
            per_child.append([frozenset()])
    return [frozenset().union(*combo) for combo in itertools.product(*per_child)]


def enumerate_admissible_cuts(t: PlanarTree) -> list[AdmissibleCut]:
    """Empty cut, then the edge cuts sorted by size and edges, then the total cut."""
    sets = [s for s in _edge_sets(t) if s]
    sets.sort(key=lambda s: (len(s), sorted(s)))
    return [EMPTY_CUT] + [AdmissibleCut("edges", s) for s in sets] + [TOTAL_CUT]


def _check_cut(t: PlanarTree, cut: AdmissibleCut):
    if cut.kind in ("empty", "total"):
        return
    if cut.kind != "edges" or not cut.edges:
        raise ValueError(f"malformed cut {cut}")
    for path, i in cut.edges:
        try:
            parent = _subtree(t, path)
            child = parent[i]
        except (IndexError, TypeError):
            raise ValueError(f"edge {path}/{i} is not in the tree") from None
        if not child:
            raise ValueError(f"edge {path}/{i} ends at a leaf")
    lower = [path + (i,) for path, i in cut.edges]
    for a in lower:
        for b in lower:
            if a != b and b[:len(a)] == a:
                raise ValueError(f"edges {a} and {b} lie on a common path")


def cut_parts(t: PlanarTree, cut: AdmissibleCut) -> tuple[TreeVector, PlanarTree]:
    """``(G, P)``: product of the fallen subtrees, and the root component."""
    _check_cut(t, cut)
    if cut.kind == "empty":
        return TreeVector.basis(LEAF), t
    if cut.kind == "total":
        return TreeVector.basis(t), LEAF
    lower = sorted(path + (i,) for path, i in cut.edges)  # left to right

    def rebuild(node, path):
        if path in cut_set:
            return LEAF
        if not node:
            return node
        return _node(tuple(rebuild(c, path + (i,)) for i, c in enumerate(node)))

    cut_set = set(lower)
    fallen = [_subtree(t, p) for p in lower]
    return _star_all(fallen), rebuild(t, ())


def cuts_rightmost_leaf(t: PlanarTree, cut: AdmissibleCut) -> bool:
    """Whether the right-most leaf of t ends up on the left of the tensor."""
    if cut.kind == "empty":
        return False
    if cut.kind == "total":
        return True
    for path, i in cut.edges:
        if all(j == len(_subtree(t, path[:n])) - 1 for n, j in enumerate(path)) \
                and i == len(_subtree(t, path)) - 1:
            return True
    return False


def _star_all(trees) -> TreeVector:
    acc = TreeVector.basis(LEAF)
    for s in trees:
        acc = star(acc, s)
    return acc


@functools.lru_cache(maxsize=None)
def _star_tuple(trees: tuple) -> TreeVector:
    if len(trees) == 1:
        return TreeVector.basis(trees[0])
    return star(_star_tuple(trees[:-1]), trees[-1])


@functools.lru_cache(maxsize=None)
def _cut_options(t: PlanarTree) -> tuple:
    """All ways to cut inside t: (fallen trees, remaining tree, right-most leaf cut)."""
    per_child = []
    for c in t:
        if c:
            per_child.append((((c,), LEAF, True),) + _cut_options(c))
        else:
            per_child.append((((), LEAF, False),))
    out = []
    for combo in itertools.product(*per_child):
        fallen = tuple(itertools.chain.from_iterable(o[0] for o in combo))
        out.append((fallen, _node(tuple(o[1] for o in combo)), combo[-1][2]))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _split_coproduct(t: PlanarTree) -> tuple[TensorVector, TensorVector]:
    if not t:
        return TensorVector.zero(), TensorVector.basis((LEAF, LEAF))
    acc = ({(t, LEAF): 1}, {})  # total cut on the left side
    for fallen, rest, right_cut in _cut_options(t):
        side = acc[0] if right_cut else acc[1]
        g = _star_tuple(fallen) if fallen else TreeVector.basis(LEAF)
        for w, c in g._terms.items():
            side[(w, rest)] = side.get((w, rest), 0) + c
    return TensorVector._from_dict(acc[0]), TensorVector._from_dict(acc[1])


def _linear(f, x) -> TensorVector:
    if isinstance(x, PlanarTree):
        return f(x)
    return x.apply(f, TensorVector)


def _coproduct_tree(t):
    l, r = _split_coproduct(t)
    return l + r


def coproduct(x) -> TensorVector:
    """Δ on a tree or a tree vector."""
    return _linear(_coproduct_tree, x)


def coproduct_left(x) -> TensorVector:
    """Δ←: the cuts separating the right-most leaf from the root."""
    return _linear(lambda t: _split_coproduct(t)[0], x)


def coproduct_right(x) -> TensorVector:
    """Δ→: the cuts keeping the right-most leaf with the root."""
    return _linear(lambda t: _split_coproduct(t)[1], x)


def _reject_unit(t):
    if not t:
        raise ValueError("reduced coproducts are defined away from |")


def _reduced_tree(t):
    _reject_unit(t)
    return _coproduct_tree(t) - TensorVector.basis((LEAF, t)) - TensorVector.basis((t, LEAF))


def _reduced_left_tree(t):
    _reject_unit(t)
    return _split_coproduct(t)[0] - TensorVector.basis((t, LEAF))


def _reduced_right_tree(t):
    _reject_unit(t)
    return _split_coproduct(t)[1] - TensorVector.basis((LEAF, t))


def reduced_coproduct(x) -> TensorVector:
    return _linear(_reduced_tree, x)


def reduced_coproduct_left(x) -> TensorVector:
    return _linear(_reduced_left_tree, x)


def reduced_coproduct_right(x) -> TensorVector:
    return _linear(_reduced_right_tree, x)


def counit(x) -> int:
    if isinstance(x, PlanarTree):
        return 1 if not x else 0
    return x[LEAF]


def is_primitive_tree(t: PlanarTree) -> bool:
    return bool(t) and not _reduced_tree(t)


# --- verification ------------------------------------------------------------

def _pairs(max_total_degree, min_degree=1):
    for da in range(min_degree, max_total_degree + 1):
        for db in range(min_degree, max_total_degree - da + 1):
            for a in enumerate_trees(da):
                for b in enumerate_trees(db):
                    yield a, b


def _trees_up_to(max_degree, min_degree=1):
    for d in range(min_degree, max_degree + 1):
        yield from enumerate_trees(d)


def _unit_left(v: TreeVector | PlanarTree) -> TensorVector:
    return TensorVector.tensor(TreeVector.basis(LEAF), _as_vec(v))


def _unit_right(v) -> TensorVector:
    return TensorVector.tensor(_as_vec(v), TreeVector.basis(LEAF))


def _as_vec(v):
    return TreeVector.basis(v) if isinstance(v, PlanarTree) else v


def check_bialgebra(max_degree: int, *, coproduct_=None) -> Report:
    """Coassociativity, counit, Δ as a morphism for ≺ · ≻ *, and the
    formulas for Δ̃ of a product of two trees.
    """
    delta = coproduct_ or coproduct
    report = Report("bialgebra")
    for t in _trees_up_to(max_degree, 0):
        report.cases += 1
        d = delta(t)
        report.compare("coassociativity", t, d.map_factor(0, delta), d.map_factor(1, delta))
        left_counit = TreeVector._from_dict({k[1]: c for k, c in d._terms.items() if not k[0]})
        right_counit = TreeVector._from_dict({k[0]: c for k, c in d._terms.items() if not k[1]})
        report.compare("counit-left", t, left_counit, TreeVector.basis(t))
        report.compare("counit-right", t, right_counit, TreeVector.basis(t))

    def reduced(v):
        return delta(v) - _unit_left(v) - _unit_right(v)

    for a, b in _pairs(max_degree):
        report.cases += 1
        da, db = delta(a), delta(b)
        for op in OPS:
            report.compare(f"morphism-{op}", (a, b), delta(product_vec(op, a, b)), tensor_op(op, da, db))
        ra, rb = reduced(a), reduced(b)
        one_a, one_b = _unit_left(a), _unit_left(b)
        mid_rhs = tensor_op("mid", ra, rb) + tensor_op("mid", one_a, rb) + tensor_op("mid", ra, one_b)
        report.compare("reduced-mid", (a, b), reduced(product_vec("mid", a, b)), mid_rhs)
        left_rhs = (TensorVector.basis((b, a)) + tensor_op("left", one_a, rb) + tensor_op("left", ra, one_b)
                    + tensor_op("star", ra, _unit_right(b)) + tensor_op("left", ra, rb))
        report.compare("reduced-left", (a, b), reduced(product_vec("left", a, b)), left_rhs)
        right_rhs = (TensorVector.basis((a, b)) + tensor_op("right", one_a, rb)
                     + tensor_op("star", _unit_right(a), rb) + tensor_op("right", ra, one_b)
                     + tensor_op("right", ra, rb))
        report.compare("reduced-right", (a, b), reduced(product_vec("right", a, b)), right_rhs)
    return report


def _sweedler(v: TensorVector, f) -> TensorVector:
    """Σ c · f(x1, x2) over the terms c·x1⊗x2 of v."""
    acc = TensorVector.zero()
    for (x1, x2), c in v.items():
        acc = acc + c * f(x1, x2)
    return acc


def _t(x, y) -> TensorVector:
    return TensorVector.tensor(_as_vec(x), _as_vec(y))


def three_two_relations(a: PlanarTree, b: PlanarTree, *, left_of_right_middle="b"):
    """The six compatibilities between ≺ · ≻ and Δ̃←, Δ̃→ as (name, lhs, rhs).

    Sweedler notation: a'⊗a'' = Δ̃(a), b'←⊗b''← = Δ̃←(b), b'→⊗b''→ = Δ̃→(b).
    The middle term of Δ←(a≻b) is b'←⊗a≻b''←.  With
    ``left_of_right_middle="a"`` it is replaced by a'⊗a''≻b, a variant that
    fails and is kept as a negative control.
    """
    ra = reduced_coproduct(a)
    lb = reduced_coproduct_left(b)
    rb = reduced_coproduct_right(b)

    def both(op, bv):
        # a'b'_x ⊗ a'' op b''_x
        return _sweedler(ra, lambda a1, a2: _sweedler(
            bv, lambda b1, b2: _t(star(a1, b1), product_vec(op, a2, b2))))

    def b_side(op, bv):
        # b'_x ⊗ a op b''_x
        return _sweedler(bv, lambda b1, b2: _t(b1, product_vec(op, a, b2)))

    def a_side(op):
        # a' ⊗ a'' op b
        return _sweedler(ra, lambda a1, a2: _t(a1, product_vec(op, a2, b)))

    rels = [
        ("Δ←(a·b)", lambda: reduced_coproduct_left(product_vec("mid", a, b)),
         lambda: both("mid", lb) + b_side("mid", lb)),
        ("Δ→(a·b)", lambda: reduced_coproduct_right(product_vec("mid", a, b)),
         lambda: both("mid", rb) + a_side("mid") + b_side("mid", rb)),
        ("Δ←(a≺b)", lambda: reduced_coproduct_left(product_vec("left", a, b)),
         lambda: both("left", lb) + _sweedler(ra, lambda a1, a2: _t(star(a1, b), a2))
         + b_side("left", lb) + _t(b, a)),
        ("Δ→(a≺b)", lambda: reduced_coproduct_right(product_vec("left", a, b)),
         lambda: both("left", rb) + a_side("left") + b_side("left", rb)),
        ("Δ→(a≻b)", lambda: reduced_coproduct_right(product_vec("right", a, b)),
         lambda: both("right", rb) + a_side("right") + b_side("right", rb)
         + _sweedler(rb, lambda b1, b2: _t(star(a, b1), b2)) + _t(a, b)),
    ]
    a_times_b_left = lambda: _sweedler(lb, lambda b1, b2: _t(star(a, b1), b2))
    if left_of_right_middle == "a":
        rels.append(("Δ←(a≻b)", lambda: reduced_coproduct_left(product_vec("right", a, b)),
                     lambda: both("right", lb) + a_side("right") + a_times_b_left()))
    else:
        rels.append(("Δ←(a≻b)", lambda: reduced_coproduct_left(product_vec("right", a, b)),
                     lambda: both("right", lb) + b_side("right", lb) + a_times_b_left()))
    return rels


def codendriform_identities():
    """The three coassociativity identities of Δ̃←, Δ̃→ as (name, lhs, rhs) maps."""
    L, R, D = reduced_coproduct_left, reduced_coproduct_right, reduced_coproduct
    return [
        ("(Δ̃←⊗Id)Δ̃←", lambda t: L(t).map_factor(0, L), lambda t: L(t).map_factor(1, D)),
        ("(Δ̃→⊗Id)Δ̃←", lambda t: L(t).map_factor(0, R), lambda t: R(t).map_factor(1, L)),
        ("(Δ̃⊗Id)Δ̃→", lambda t: R(t).map_factor(0, D), lambda t: R(t).map_factor(1, R)),
    ]


def check_32_relations(max_total_degree: int) -> Report:
    report = Report("three-two")
    for a, b in _pairs(max_total_degree):
        report.cases += 1
        for name, lhs, rhs in three_two_relations(a, b):
            report.compare(name, (a, b), lhs(), rhs())
    for t in _trees_up_to(max_total_degree):
        report.cases += 1
        report.compare("split", t, coproduct_left(t) + coproduct_right(t), coproduct(t))
        for name, lhs, rhs in codendriform_identities():
            report.compare(name, t, lhs(t), rhs(t))
    return report
