"""The products ``*``, ``≺``, ``·``, ``≻`` on planar trees.

The main implementation sums ladder trees over quasi-shuffles.  A second,
recursive implementation on the grafting decomposition serves as an oracle.

Unit conventions (``|`` is the unit of ``*``)::

    a ≺ | = a = | ≻ a      | ≺ a = 0 = a ≻ |      | · a = 0 = a · |

and ``| ≺ |``, ``| · |``, ``| ≻ |`` are undefined.
"""
from __future__ import annotations

import functools
import itertools
from typing import Callable, NamedTuple

from .trees import (LEAF, Y, PlanarTree, _node, degree, enumerate_trees,
                    left_comb_decomposition, render_tree, right_comb_decomposition)
from .vectors import TreeVector
from .report import Report

__all__ = [
    "OPS", "UndefinedProduct", "QuasiShuffle", "enumerate_qsh", "apply_qsh",
    "star", "left", "mid", "right", "product",
    "star_inductive", "left_inductive", "mid_inductive", "right_inductive",
    "star_vec", "left_vec", "mid_vec", "right_vec", "product_vec",
    "check_tridend_axioms", "tridend_relations",
    "express_in_generator", "evaluate_expression", "render_expression",
]

OPS = ("star", "left", "mid", "right")
SYMBOLS = {"star": "*", "left": "≺", "mid": "·", "right": "≻"}


class UndefinedProduct(ArithmeticError):
    """Raised for ``| ≺ |``, ``| · |`` and ``| ≻ |``."""


class QuasiShuffle(NamedTuple):
    values: tuple[int, ...]
    k: int
    l: int

    @property
    def n(self) -> int:
        return max(self.values)


def _is_qsh(values, k):
    a, b = values[:k], values[k:]
    return (all(x < y for x, y in zip(a, a[1:])) and all(x < y for x, y in zip(b, b[1:]))
            and set(values) == set(range(1, max(values) + 1)))


@functools.lru_cache(maxsize=None)
def _qsh(k: int, l: int) -> tuple[QuasiShuffle, ...]:
    out = []
    for n in range(max(k, l), k + l + 1):
        full = set(range(1, n + 1))
        for a in itertools.combinations(range(1, n + 1), k):
            rest = full.difference(a)
            # the second block must cover what the first misses
            for b in itertools.combinations(range(1, n + 1), l):
                if rest.issubset(b):
                    out.append(QuasiShuffle(a + b, k, l))
    out.sort(key=lambda s: s.values)
    return tuple(out)


def enumerate_qsh(k: int, l: int) -> list[QuasiShuffle]:
    """All (k,l)-quasi-shuffles in lexicographic order of their values."""
    if k < 1 or l < 1:
        raise ValueError("block sizes must be positive")
    return list(_qsh(k, l))


def _ladder(sigma, left_forests, right_forests) -> PlanarTree:
    n = max(sigma)
    lefts = [()] * (n + 1)
    rights = [()] * (n + 1)
    k = len(left_forests)
    for i, f in enumerate(left_forests):
        lefts[sigma[i]] = f
    for i, f in enumerate(right_forests):
        rights[sigma[k + i]] = f
    t = LEAF
    for node in range(n, 0, -1):
        t = _node(lefts[node] + (t,) + rights[node])
    return t


def apply_qsh(sigma: QuasiShuffle | tuple, t: PlanarTree, s: PlanarTree) -> PlanarTree:
    """The ladder tree of ``sigma`` with the comb forests of t and s grafted on.

    Node 1 of the ladder is the root.  Forests from the right comb of t are
    grafted on the left of their nodes, forests from the left comb of s on
    the right.
    """
    if not t or not s:
        raise ValueError("quasi-shuffle action needs two trees different from |")
    ft = right_comb_decomposition(t)
    fs = left_comb_decomposition(s)
    values = tuple(sigma.values if isinstance(sigma, QuasiShuffle) else sigma)
    k = len(ft)
    if isinstance(sigma, QuasiShuffle) and (sigma.k, sigma.l) != (k, len(fs)):
        raise ValueError(f"quasi-shuffle has blocks ({sigma.k},{sigma.l}), trees need ({k},{len(fs)})")
    if len(values) != k + len(fs) or not _is_qsh(values, k):
        raise ValueError(f"{values} is not a ({k},{len(fs)})-quasi-shuffle")
    return _ladder(values, ft, fs)


@functools.lru_cache(maxsize=None)
def _qsh_parts(t: PlanarTree, s: PlanarTree) -> dict[str, TreeVector]:
    ft = right_comb_decomposition(t)
    fs = left_comb_decomposition(s)
    k = len(ft)
    acc = {"left": {}, "mid": {}, "right": {}}
    for sigma in _qsh(k, len(fs)):
        v = sigma.values
        if v[0] == 1 and v[k] == 1:
            part = acc["mid"]
        elif v[0] == 1:
            part = acc["left"]
        else:
            part = acc["right"]
        w = _ladder(v, ft, fs)
        part[w] = part.get(w, 0) + 1
    return {op: TreeVector._from_dict(d) for op, d in acc.items()}


def _unit_case(op, t, s):
    """Result of op on basis trees when one of them is the unit, else None."""
    if t and s:
        return None
    if op == "star":
        return TreeVector.basis(s if not t else t)
    if not t and not s:
        raise UndefinedProduct(f"| {SYMBOLS[op]} | is undefined")
    if op == "left":
        return TreeVector.basis(t) if t else TreeVector.zero()
    if op == "right":
        return TreeVector.basis(s) if s else TreeVector.zero()
    return TreeVector.zero()


@functools.lru_cache(maxsize=None)
def product(op: str, t: PlanarTree, s: PlanarTree) -> TreeVector:
    """``t op s`` on basis trees, op in star/left/mid/right."""
    unit = _unit_case(op, t, s)
    if unit is not None:
        return unit
    parts = _qsh_parts(t, s)
    if op == "star":
        return parts["left"] + parts["mid"] + parts["right"]
    if op not in parts:
        raise ValueError(f"unknown product {op!r}")
    return parts[op]


def _bilinear(f: Callable[[PlanarTree, PlanarTree], TreeVector], x, y) -> TreeVector:
    if isinstance(x, PlanarTree):
        x = TreeVector.basis(x)
    if isinstance(y, PlanarTree):
        y = TreeVector.basis(y)
    acc: dict = {}
    for t, a in x._terms.items():
        for s, b in y._terms.items():
            for w, c in f(t, s)._terms.items():
                acc[w] = acc.get(w, 0) + a * b * c
    return TreeVector._from_dict(acc)


def product_vec(op: str, x, y) -> TreeVector:
    """Bilinear extension of :func:`product` to trees or tree vectors."""
    return _bilinear(lambda t, s: product(op, t, s), x, y)


def star(x, y):
    return product_vec("star", x, y)


def left(x, y):
    return product_vec("left", x, y)


def mid(x, y):
    return product_vec("mid", x, y)


def right(x, y):
    return product_vec("right", x, y)


star_vec, left_vec, mid_vec, right_vec = star, left, mid, right


# --- recursive definitions -------------------------------------------------

def _graft_with(prefix, middle: TreeVector, suffix) -> TreeVector:
    return TreeVector._from_dict({_node(tuple(prefix) + (w,) + tuple(suffix)): c
                                  for w, c in middle._terms.items()})


@functools.lru_cache(maxsize=None)
def _inductive(op: str, x: PlanarTree, y: PlanarTree) -> TreeVector:
    if op == "star":
        unit = _unit_case(op, x, y)
        if unit is not None:
            return unit
        return _inductive("left", x, y) + _inductive("mid", x, y) + _inductive("right", x, y)
    unit = _unit_case(op, x, y)
    if unit is not None:
        return unit
    if op == "left":
        # x0 v ... v (xk * y)
        return _graft_with(x[:-1], _inductive("star", x[-1], y), ())
    if op == "mid":
        # x0 v ... v (xk * y0) v ... v yl
        return _graft_with(x[:-1], _inductive("star", x[-1], y[0]), y[1:])
    if op == "right":
        # (x * y0) v ... v yl
        return _graft_with((), _inductive("star", x, y[0]), y[1:])
    raise ValueError(f"unknown product {op!r}")


def star_inductive(x, y):
    return _bilinear(lambda t, s: _inductive("star", t, s), x, y)


def left_inductive(x, y):
    return _bilinear(lambda t, s: _inductive("left", t, s), x, y)


def mid_inductive(x, y):
    return _bilinear(lambda t, s: _inductive("mid", t, s), x, y)


def right_inductive(x, y):
    return _bilinear(lambda t, s: _inductive("right", t, s), x, y)


# --- axioms ----------------------------------------------------------------

def tridend_relations(left_, mid_, right_, star_):
    """The seven relations as (name, lhs, rhs) callables of (a, b, c).

    Each relation is named after its left-hand side.
    """
    return [
        ("(a≺b)≺c", lambda a, b, c: left_(left_(a, b), c), lambda a, b, c: left_(a, star_(b, c))),
        ("(a≻b)≺c", lambda a, b, c: left_(right_(a, b), c), lambda a, b, c: right_(a, left_(b, c))),
        ("(a*b)≻c", lambda a, b, c: right_(star_(a, b), c), lambda a, b, c: right_(a, right_(b, c))),
        ("(a≻b)·c", lambda a, b, c: mid_(right_(a, b), c), lambda a, b, c: right_(a, mid_(b, c))),
        ("(a≺b)·c", lambda a, b, c: mid_(left_(a, b), c), lambda a, b, c: mid_(a, right_(b, c))),
        ("(a·b)≺c", lambda a, b, c: left_(mid_(a, b), c), lambda a, b, c: mid_(a, left_(b, c))),
        ("(a·b)·c", lambda a, b, c: mid_(mid_(a, b), c), lambda a, b, c: mid_(a, mid_(b, c))),
    ]


def _triples(max_total_degree):
    for da in range(1, max_total_degree - 1):
        for db in range(1, max_total_degree - da):
            for dc in range(1, max_total_degree - da - db + 1):
                for a in enumerate_trees(da):
                    for b in enumerate_trees(db):
                        for c in enumerate_trees(dc):
                            yield a, b, c


def check_tridend_axioms(max_total_degree: int, *, left_=None, mid_=None, right_=None) -> Report:
    """Check the seven relations on all tree triples of degree sum <= bound.

    The products may be replaced, e.g. by a deliberately broken fixture.
    """
    left_ = left_ or left
    mid_ = mid_ or mid
    right_ = right_ or right

    def star_(x, y):
        return left_(x, y) + mid_(x, y) + right_(x, y)

    rels = tridend_relations(left_, mid_, right_, star_)
    report = Report("tri")
    for a, b, c in _triples(max_total_degree):
        report.cases += 1
        for name, lhs, rhs in rels:
            report.compare(name, (a, b, c), lhs(a, b, c), rhs(a, b, c))
    return report


# --- expressions over the generator ----------------------------------------
# An expression is "g" or a triple (op, left, right).

def express_in_generator(t: PlanarTree):
    """Write t as an iterated ≺/·/≻ product of the generator Y."""
    if not t:
        raise ValueError("the unit | is not a product of generators")
    if t == Y:
        return "g"
    if all(not c for c in t):
        # corolla with k+1 leaves = Y · (corolla with k leaves)
        return ("mid", "g", express_in_generator(_node(t[1:])))
    if t[0]:
        return ("right", express_in_generator(t[0]), express_in_generator(_node((LEAF,) + t[1:])))
    if t[-1]:
        return ("left", express_in_generator(_node(t[:-1] + (LEAF,))), express_in_generator(t[-1]))
    i = next(i for i in range(1, len(t) - 1) if t[i])
    return ("mid", express_in_generator(_node(t[:i] + (LEAF,))), express_in_generator(_node(t[i:])))


def evaluate_expression(expr, products=None) -> TreeVector:
    if expr == "g":
        return TreeVector.basis(Y)
    op, a, b = expr
    f = (products or {}).get(op) or {"left": left, "mid": mid, "right": right}[op]
    return f(evaluate_expression(a, products), evaluate_expression(b, products))


def render_expression(expr) -> str:
    if expr == "g":
        return "g"
    op, a, b = expr

    def side(e):
        s = render_expression(e)
        return s if e == "g" else f"({s})"

    return f"{side(a)}{SYMBOLS[op]}{side(b)}"
