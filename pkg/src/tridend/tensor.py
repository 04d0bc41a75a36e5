"""Tridendriform structure on tensor powers of the augmented algebra.

For two factors, with ``⋉`` one of ≺, ·, ≻::

    (a⊗b) ⋉ (c⊗d) = (a⋉c) ⊗ (b*d)   if b = d = |
                  = (a*c) ⊗ (b⋉d)   otherwise

``*`` acts factorwise.  Longer tensors are handled by grouping them either as
``(first k-1 factors) ⊗ last`` or ``first ⊗ (remaining factors)``; the two
groupings agree, which the tests check.
"""
from __future__ import annotations

import functools
import itertools

from .products import OPS, product, tridend_relations
from .report import Report
from .trees import LEAF, PlanarTree, degree, enumerate_trees
from .vectors import TensorVector, TreeVector

__all__ = ["tensor_op", "tensor_basis_op", "check_tensor_structure", "unit_tensor"]


def unit_tensor(arity: int) -> tuple:
    return (LEAF,) * arity


def _outer(x: dict, y: dict) -> dict:
    """Concatenate keys of two tensor dicts (coefficients multiply)."""
    out: dict = {}
    for k1, c1 in x.items():
        for k2, c2 in y.items():
            k = k1 + k2
            out[k] = out.get(k, 0) + c1 * c2
    return out


def _as_tensor_dict(v: TreeVector) -> dict:
    return {(t,): c for t, c in v._terms.items()}


@functools.lru_cache(maxsize=None)
def _star(a: tuple, b: tuple) -> dict:
    acc = {(): 1}
    for s, t in zip(a, b):
        acc = _outer(acc, _as_tensor_dict(product("star", s, t)))
    return acc


@functools.lru_cache(maxsize=None)
def _basis_op(op: str, a: tuple, b: tuple, grouping: str) -> dict:
    if op == "star":
        return _star(a, b)
    if len(a) == 1:
        return _as_tensor_dict(product(op, a[0], b[0]))
    if grouping == "left":
        head_a, head_b, tail_a, tail_b = a[:-1], b[:-1], a[-1:], b[-1:]
        if not tail_a[0] and not tail_b[0]:
            return _outer(_basis_op(op, head_a, head_b, grouping), {(LEAF,): 1})
        return _outer(_star(head_a, head_b), _basis_op(op, tail_a, tail_b, grouping))
    if grouping == "right":
        head_a, head_b, tail_a, tail_b = a[:1], b[:1], a[1:], b[1:]
        if not any(tail_a) and not any(tail_b):
            return _outer(_basis_op(op, head_a, head_b, grouping), {tail_a: 1})
        return _outer(_star(head_a, head_b), _basis_op(op, tail_a, tail_b, grouping))
    raise ValueError(f"unknown grouping {grouping!r}")


def tensor_basis_op(op: str, a: tuple, b: tuple, grouping: str = "left") -> TensorVector:
    if len(a) != len(b):
        raise ValueError("tensors of different arity")
    return TensorVector._from_dict(dict(_basis_op(op, tuple(a), tuple(b), grouping)))


def tensor_op(op: str, x: TensorVector, y: TensorVector, grouping: str = "left") -> TensorVector:
    """Bilinear extension of the basis rule; op in star/left/mid/right."""
    if op not in OPS:
        raise ValueError(f"unknown product {op!r}")
    acc: dict = {}
    for a, ca in x._terms.items():
        for b, cb in y._terms.items():
            if len(a) != len(b):
                raise ValueError("tensors of different arity")
            for k, c in _basis_op(op, a, b, grouping).items():
                acc[k] = acc.get(k, 0) + ca * cb * c
    return TensorVector._from_dict(acc)


def _tensor_basis(arity: int, max_degree: int, *, units: bool):
    trees = [t for d in range(0 if units else 1, max_degree + 1) for t in enumerate_trees(d)]
    for key in itertools.product(trees, repeat=arity):
        if sum(degree(t) for t in key) <= max_degree:
            yield key


def _try(f, *args):
    try:
        return f(*args)
    except ArithmeticError:
        return None


def check_tensor_structure(max_degree: int = 4) -> Report:
    """Exhaustive checks of the tensor structure.

    * both groupings agree on triple tensors, total degree <= max_degree;
    * ``* = ≺ + · + ≻`` on pairs of two-fold tensors, units included,
      whenever the three parts are defined;
    * the seven relations on unit-free two-fold tensors, total degree
      <= max_degree (at least one per factor).
    """
    report = Report("tensor")
    basis3 = list(_tensor_basis(3, max_degree, units=True))
    for a in basis3:
        for b in basis3:
            if sum(map(degree, a + b)) > max_degree:
                continue
            report.cases += 1
            for op in OPS:
                lhs = _try(tensor_basis_op, op, a, b, "left")
                rhs = _try(tensor_basis_op, op, a, b, "right")
                report.compare(f"grouping-{op}", (a, b), lhs, rhs)

    basis2 = list(_tensor_basis(2, max_degree, units=True))
    for a in basis2:
        for b in basis2:
            if sum(map(degree, a + b)) > max_degree:
                continue
            parts = [_try(tensor_basis_op, op, a, b) for op in ("left", "mid", "right")]
            if any(p is None for p in parts):
                continue
            report.cases += 1
            report.compare("star-split", (a, b), tensor_basis_op("star", a, b), parts[0] + parts[1] + parts[2])

    def op(name):
        return lambda x, y: tensor_op(name, x, y)

    rels = tridend_relations(op("left"), op("mid"), op("right"), op("star"))
    free = [k for k in _tensor_basis(2, max_degree, units=False)]
    vec = {k: TensorVector.basis(k) for k in free}
    for a in free:
        for b in free:
            for c in free:
                if sum(map(degree, a + b + c)) > max_degree:
                    continue
                report.cases += 1
                for name, lhs, rhs in rels:
                    x, y, z = vec[a], vec[b], vec[c]
                    report.compare(name, (a, b, c), lhs(x, y, z), rhs(x, y, z))
    return report
