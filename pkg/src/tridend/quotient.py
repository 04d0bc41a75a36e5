"""Quotient by the ideal generated by middle products, realized on binary trees.

A tree lies in that ideal exactly when it is not binary, so the projection
simply drops non-binary trees.  Products and coproducts of the quotient are
computed upstairs and projected; the recursive grafting formulas on binary
trees are implemented separately as cross-checks.
"""
from __future__ import annotations

import functools

from .coproduct import coproduct, coproduct_left, coproduct_right
from .products import product, product_vec
from .report import Report
from .tensor import tensor_op
from .trees import LEAF, PlanarTree, _node, degree, enumerate_trees, is_binary
from .vectors import TensorVector, TreeVector

__all__ = [
    "project_lr", "project_lr_tensor", "lr_product", "lr_coproduct",
    "lr_product_recursive", "lr_coproduct_recursive", "binary_trees",
    "catalan", "check_biideal", "check_lr_readings", "LR_READINGS",
]

LR_READINGS = ("swapped", "standard")


def catalan(n: int) -> int:
    """C_0 = 1, C_{n+1} = Σ C_i C_{n-i}."""
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def binary_trees(n: int) -> list[PlanarTree]:
    return [t for t in enumerate_trees(n) if is_binary(t)]


def project_lr(x) -> TreeVector:
    """Drop every non-binary tree."""
    if isinstance(x, PlanarTree):
        x = TreeVector.basis(x)
    return TreeVector._from_dict({t: c for t, c in x._terms.items() if is_binary(t)})


def project_lr_tensor(x: TensorVector) -> TensorVector:
    return TensorVector._from_dict({k: c for k, c in x._terms.items() if all(map(is_binary, k))})


def _require_binary(*trees):
    for t in trees:
        if not is_binary(t):
            raise ValueError(f"{t} is not a binary tree")


def lr_product(t: PlanarTree, s: PlanarTree) -> TreeVector:
    """Product of the quotient: project t * s."""
    _require_binary(t, s)
    return project_lr(product("star", t, s))


def lr_coproduct(t: PlanarTree) -> TensorVector:
    """Coproduct of the quotient: project both sides of Δ(t)."""
    _require_binary(t)
    return project_lr_tensor(coproduct(t))


@functools.lru_cache(maxsize=None)
def _lr_product_rec(reading: str, t: PlanarTree, s: PlanarTree) -> TreeVector:
    if not t:
        return TreeVector.basis(s)
    if not s:
        return TreeVector.basis(t)
    t1, t2 = t
    s1, s2 = s
    if reading == "standard":
        # t1 v (t2 * s)  +  (t * s1) v s2
        first = _lr_product_rec(reading, t2, s)
        firsts = {_node((t1, w)): c for w, c in first._terms.items()}
    elif reading == "swapped":
        # t1 v (s1 * t2)  +  (t * s1) v s2
        first = _lr_product_rec(reading, s1, t2)
        firsts = {_node((t1, w)): c for w, c in first._terms.items()}
    else:
        raise ValueError(f"unknown reading {reading!r}")
    second = _lr_product_rec(reading, t, s1)
    acc = dict(firsts)
    for w, c in second._terms.items():
        k = _node((w, s2))
        acc[k] = acc.get(k, 0) + c
    return TreeVector._from_dict(acc)


def lr_product_recursive(t: PlanarTree, s: PlanarTree, reading: str = "standard") -> TreeVector:
    """Recursive grafting formula for the product of binary trees.

    ``reading="standard"`` is t1 v (t2 * s) + (t * s1) v s2.  The ``"swapped"``
    variant puts s1 * t2 in the first term; it is kept to show that it does
    not agree with the projected product.
    """
    _require_binary(t, s)
    return _lr_product_rec(reading, t, s)


@functools.lru_cache(maxsize=None)
def _lr_coproduct_rec(t: PlanarTree) -> TensorVector:
    if not t:
        return TensorVector.basis((LEAF, LEAF))
    t1, t2 = t
    acc = {(t, LEAF): 1}
    for (a1, b1), c1 in _lr_coproduct_rec(t1)._terms.items():
        for (a2, b2), c2 in _lr_coproduct_rec(t2)._terms.items():
            right = _node((b1, b2))
            for w, c in _lr_product_rec("standard", a1, a2)._terms.items():
                acc[(w, right)] = acc.get((w, right), 0) + c1 * c2 * c
    return TensorVector._from_dict(acc)


def lr_coproduct_recursive(t: PlanarTree) -> TensorVector:
    """Δ(t1 v t2) = Σ (t1' * t2') ⊗ (t1'' v t2'') + t ⊗ |, with full coproducts."""
    _require_binary(t)
    return _lr_coproduct_rec(t)


def check_lr_readings(max_total_degree: int) -> dict[str, Report]:
    """Compare both variants of the recursive product with the projected product."""
    out = {}
    for reading in LR_READINGS:
        report = Report(f"lr-product-{reading}")
        for dt in range(0, max_total_degree + 1):
            for ds in range(0, max_total_degree - dt + 1):
                for t in binary_trees(dt):
                    for s in binary_trees(ds):
                        report.cases += 1
                        report.compare(f"lr-product-{reading}", (t, s),
                                       lr_product_recursive(t, s, reading), lr_product(t, s))
        out[reading] = report
    return out


def _in_ideal_pair(key) -> bool:
    return any(not is_binary(t) for t in key)


def check_biideal(max_degree: int) -> Report:
    """Ideal and coideal properties of non-binary trees, and the quotient bialgebra."""
    report = Report("lr")
    nonbinary = [t for d in range(2, max_degree + 1) for t in enumerate_trees(d) if not is_binary(t)]
    for t in nonbinary:
        report.cases += 1
        for name, f in (("coideal", coproduct), ("coideal-left", coproduct_left),
                        ("coideal-right", coproduct_right)):
            bad = TensorVector._from_dict({k: c for k, c in f(t)._terms.items() if not _in_ideal_pair(k)})
            report.compare(name, t, bad, TensorVector.zero())

    for dx in range(1, max_degree):
        for dy in range(1, max_degree - dx + 1):
            for x in enumerate_trees(dx):
                for y in enumerate_trees(dy):
                    report.cases += 1
                    report.compare("mid-in-ideal", (x, y), project_lr(product("mid", x, y)), TreeVector.zero())
                    report.compare("star-is-left-plus-right", (x, y), project_lr(product("star", x, y)),
                                   project_lr(product("left", x, y) + product("right", x, y)))
                    # ideal: a product with a non-binary factor projects to zero
                    if not is_binary(x) or not is_binary(y):
                        for op in ("star", "left", "right"):
                            report.compare(f"ideal-{op}", (x, y), project_lr(product(op, x, y)),
                                           TreeVector.zero())

    def q_delta(v):
        return project_lr_tensor(coproduct(project_lr(v)))

    for d in range(0, max_degree + 1):
        for t in binary_trees(d):
            report.cases += 1
            dt = lr_coproduct(t)
            lhs = project_lr_tensor(dt.map_factor(0, lr_coproduct))
            rhs = project_lr_tensor(dt.map_factor(1, lr_coproduct))
            report.compare("quotient-coassociativity", t, lhs, rhs)
            report.compare("quotient-coproduct-recursive", t, dt, lr_coproduct_recursive(t))

    for dx in range(0, max_degree + 1):
        for dy in range(0, max_degree - dx + 1):
            for x in binary_trees(dx):
                for y in binary_trees(dy):
                    report.cases += 1
                    for op in ("star", "left", "right"):
                        if op != "star" and not x and not y:
                            continue
                        lhs = q_delta(product(op, x, y))
                        rhs = project_lr_tensor(tensor_op(op, lr_coproduct(x), lr_coproduct(y)))
                        report.compare(f"quotient-morphism-{op}", (x, y), lhs, rhs)
    for d in range(0, max_degree + 1):
        for dx in range(0, d + 1):
            for dy in range(0, d - dx + 1):
                dz = d - dx - dy
                for x in binary_trees(dx):
                    for y in binary_trees(dy):
                        for z in binary_trees(dz):
                            report.cases += 1
                            lhs = project_lr(product_vec("star", lr_product(x, y), z))
                            rhs = project_lr(product_vec("star", x, lr_product(y, z)))
                            report.compare("quotient-associativity", (x, y, z), lhs, rhs)
    return report
