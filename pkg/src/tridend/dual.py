"""The graded dual: lightning coproduct and transposed product.

Trees form a self-dual basis for the pairing ``<t, s> = δ(t, s)``.  On the
dual side the coproduct of a tree splits it along the path from the root to
each of its leaves, and the product is the transpose of Δ.

A lightning term is sorted into one of three pieces by the first step of the
path: the root's last child gives ``Δ≺``, its first child ``Δ≻``, any other
child ``Δ•``.
"""
from __future__ import annotations

import functools

from .coproduct import coproduct
from .products import product
from .report import Report
from .trees import (LEAF, PlanarTree, degree, enumerate_trees, leaf_count,
                    left_comb, right_comb)
from .vectors import TensorVector, TreeVector

__all__ = [
    "lightning_split", "lightning_piece", "dual_coproduct", "dual_coproduct_prec",
    "dual_coproduct_mid", "dual_coproduct_succ", "dual_pieces", "dual_product",
    "check_dual_structure", "check_dual_adjointness", "check_cotri", "check_compatibilities",
    "cotri_identities", "compatibility_identities",
]

PIECES = ("prec", "mid", "succ")
ADJOINT = {"prec": "left", "mid": "mid", "succ": "right"}


def _path_to_leaf(t: PlanarTree, m: int):
    """Child indices from the root to leaf m (1-based, left to right)."""
    if not 1 <= m <= leaf_count(t):
        raise ValueError(f"leaf index {m} out of range 1..{leaf_count(t)}")
    path = []
    while t:
        for i, c in enumerate(t):
            n = leaf_count(c)
            if m <= n:
                path.append(i)
                t = c
                break
            m -= n
    return path


@functools.lru_cache(maxsize=None)
def lightning_split(t: PlanarTree, m: int) -> tuple[PlanarTree, PlanarTree]:
    """Split t along the path to leaf m into ``(^m t, t^m)``.

    Forests left of the path are assembled as a right comb, forests right of
    it as a left comb, both in root-to-leaf order.
    """
    lefts, rights = [], []
    node = t
    for i in _path_to_leaf(t, m):
        if i > 0:
            lefts.append(tuple(node[:i]))
        if i < len(node) - 1:
            rights.append(tuple(node[i + 1:]))
        node = node[i]
    return right_comb(lefts), left_comb(rights)


def lightning_piece(t: PlanarTree, m: int) -> str:
    """'prec', 'mid' or 'succ' according to the first step towards leaf m."""
    if not t:
        raise ValueError("the leaf has no pieces")
    first = _path_to_leaf(t, m)[0]
    if first == len(t) - 1:
        return "prec"
    if first == 0:
        return "succ"
    return "mid"


@functools.lru_cache(maxsize=None)
def _pieces(t: PlanarTree) -> dict[str, TensorVector]:
    acc = {p: {} for p in PIECES}
    for m in range(1, leaf_count(t) + 1):
        key = lightning_split(t, m)
        side = acc[lightning_piece(t, m)]
        side[key] = side.get(key, 0) + 1
    return {p: TensorVector._from_dict(d) for p, d in acc.items()}


def dual_pieces(t: PlanarTree) -> dict[str, TensorVector]:
    """The three pieces on a tree t != |, units included."""
    if not t:
        raise ValueError("the pieces are defined away from |")
    return _pieces(t)


def _linear(f, x) -> TensorVector:
    if isinstance(x, PlanarTree):
        return f(x)
    return x.apply(f, TensorVector)


def _dual_coproduct_tree(t):
    if not t:
        return TensorVector.basis((LEAF, LEAF))
    return TensorVector._from_dict({lightning_split(t, m): 1 for m in range(1, leaf_count(t) + 1)})


def dual_coproduct(x) -> TensorVector:
    """Σ_m ^m t ⊗ t^m over the leaves m of t."""
    return _linear(_dual_coproduct_tree, x)


def dual_coproduct_prec(x) -> TensorVector:
    return _linear(lambda t: dual_pieces(t)["prec"], x)


def dual_coproduct_mid(x) -> TensorVector:
    return _linear(lambda t: dual_pieces(t)["mid"], x)


def dual_coproduct_succ(x) -> TensorVector:
    return _linear(lambda t: dual_pieces(t)["succ"], x)


@functools.lru_cache(maxsize=None)
def _coproduct_transpose(n: int) -> dict:
    """(s, t) -> {w: <s⊗t, Δ(w)>} over the trees w of degree n."""
    table: dict = {}
    for w in enumerate_trees(n):
        for key, c in coproduct(w)._terms.items():
            table.setdefault(key, {})[w] = c
    return table


def _dual_product_trees(s: PlanarTree, t: PlanarTree) -> TreeVector:
    col = _coproduct_transpose(degree(s) + degree(t)).get((s, t), {})
    return TreeVector._from_dict(dict(col))


def dual_product(x, y) -> TreeVector:
    """Product of the dual: coefficient of w is <x⊗y, Δ(w)>."""
    x = TreeVector.basis(x) if isinstance(x, PlanarTree) else x
    y = TreeVector.basis(y) if isinstance(y, PlanarTree) else y
    acc: dict = {}
    for s, a in x._terms.items():
        for t, b in y._terms.items():
            for w, c in _dual_product_trees(s, t)._terms.items():
                acc[w] = acc.get(w, 0) + a * b * c
    return TreeVector._from_dict(acc)


# --- verification ------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _product_transpose(op: str, n: int) -> dict:
    """w -> {(u, v): <w, u op v>} for deg u + deg v = n, defined cases only."""
    table: dict = {}
    for du in range(n + 1):
        for u in enumerate_trees(du):
            for v in enumerate_trees(n - du):
                if op != "star" and not u and not v:
                    continue
                for w, c in product(op, u, v)._terms.items():
                    table.setdefault(w, {})[(u, v)] = c
    return table


def _trees(max_degree, min_degree):
    for d in range(min_degree, max_degree + 1):
        yield from enumerate_trees(d)


def check_dual_adjointness(max_degree: int, *, pieces=None) -> Report:
    """Δ is the transpose of * and each piece the transpose of its product.

    ``pieces`` may replace :func:`dual_pieces`, e.g. with a broken fixture.
    """
    pieces = pieces or dual_pieces
    report = Report("dual-adjoint")
    for t in _trees(max_degree, 0):
        report.cases += 1
        n = degree(t)
        expected = TensorVector._from_dict(dict(_product_transpose("star", n).get(t, {})))
        report.compare("transpose-star", t, dual_coproduct(t), expected)
        if not t:
            continue
        got = pieces(t)
        for p in PIECES:
            expected = TensorVector._from_dict(dict(_product_transpose(ADJOINT[p], n).get(t, {})))
            report.compare(f"transpose-{ADJOINT[p]}", t, got[p], expected)
        report.compare("pieces-sum", t, got["prec"] + got["mid"] + got["succ"], dual_coproduct(t))
        for m in range(1, leaf_count(t) + 1):
            a, b = lightning_split(t, m)
            if (leaf_count(a), leaf_count(b)) != (m, leaf_count(t) - m + 1):
                report.fail("leaf-count", (t, m), (leaf_count(a), leaf_count(b)),
                            (m, leaf_count(t) - m + 1))
    return report


def cotri_identities(pieces=None):
    """The seven dual relations as (name, lhs, rhs) maps on trees != |, named by lhs."""
    pieces = pieces or dual_pieces

    def piece(name):
        def f(t):
            if not t:
                raise ValueError(f"piece {name} applied to |")
            return pieces(t)[name]
        return f

    P, M, S, D = piece("prec"), piece("mid"), piece("succ"), dual_coproduct
    return [
        ("(Id⊗Δ)Δ≺", lambda t: P(t).map_factor(1, D), lambda t: P(t).map_factor(0, P)),
        ("(Id⊗Δ≺)Δ≻", lambda t: S(t).map_factor(1, P), lambda t: P(t).map_factor(0, S)),
        ("(Δ⊗Id)Δ≻", lambda t: S(t).map_factor(0, D), lambda t: S(t).map_factor(1, S)),
        ("(Id⊗Δ•)Δ≻", lambda t: S(t).map_factor(1, M), lambda t: M(t).map_factor(0, S)),
        ("(Id⊗Δ≻)Δ•", lambda t: M(t).map_factor(1, S), lambda t: M(t).map_factor(0, P)),
        ("(Id⊗Δ≺)Δ•", lambda t: M(t).map_factor(1, P), lambda t: P(t).map_factor(0, M)),
        ("(Id⊗Δ•)Δ•", lambda t: M(t).map_factor(1, M), lambda t: M(t).map_factor(0, M)),
    ]


def check_cotri(max_degree: int) -> Report:
    report = Report("cotri")
    for t in _trees(max_degree, 1):
        report.cases += 1
        for name, lhs, rhs in cotri_identities():
            report.compare(name, t, lhs(t), rhs(t))
    return report


def _factorwise(x: TensorVector, y: TensorVector) -> TensorVector:
    """(x1⊗x2)(y1⊗y2) = x1y1 ⊗ x2y2 with the dual product."""
    acc: dict = {}
    for (x1, x2), a in x._terms.items():
        for (y1, y2), b in y._terms.items():
            p1 = _dual_product_trees(x1, y1)
            p2 = _dual_product_trees(x2, y2)
            for w1, c1 in p1._terms.items():
                for w2, c2 in p2._terms.items():
                    acc[(w1, w2)] = acc.get((w1, w2), 0) + a * b * c1 * c2
    return TensorVector._from_dict(acc)


def compatibility_identities(f: PlanarTree, g: PlanarTree):
    """Δ≺, Δ•, Δ≻ of a dual product fg, expanded in Sweedler terms.

    With f'⊗f'' the reduced coproduct of f and g'⋉⊗g''⋉ the reduced pieces
    of g (their unit terms removed)::

        Δ≺(fg) = fg⊗| + g⊗f + g'≺⊗fg''≺ + fg'≺⊗g''≺ + f'g⊗f'' + f'g'≺⊗f''g''≺
        Δ•(fg) = g'•⊗fg''• + fg'•⊗g''• + f'g'•⊗f''g''•
        Δ≻(fg) = |⊗fg + f⊗g + f'⊗f''g + g'≻⊗fg''≻ + fg'≻⊗g''≻ + f'g'≻⊗f''g''≻

    All three are the expansion of Δ⋉(fg) = Δ(f)·Δ⋉(g) with the factorwise
    product on the right.
    """
    unit = TreeVector.basis(LEAF)
    fv, gv = TreeVector.basis(f), TreeVector.basis(g)
    fg = dual_product(f, g)
    df = dual_coproduct(f)
    rf = df - TensorVector.tensor(unit, fv) - TensorVector.tensor(fv, unit)
    pg = dual_pieces(g)
    rg = {"prec": pg["prec"] - TensorVector.tensor(gv, unit),
          "mid": pg["mid"],
          "succ": pg["succ"] - TensorVector.tensor(unit, gv)}
    one_f = TensorVector.tensor(unit, fv)
    f_one = TensorVector.tensor(fv, unit)
    out = []
    for name, p in (("Δ≺(fg)", "prec"), ("Δ•(fg)", "mid"), ("Δ≻(fg)", "succ")):
        rhs = (_factorwise(one_f, rg[p]) + _factorwise(f_one, rg[p]) + _factorwise(rf, rg[p]))
        if p == "prec":
            rhs = rhs + TensorVector.tensor(fg, unit) + TensorVector.tensor(gv, fv) \
                + _factorwise(rf, TensorVector.tensor(gv, unit))
        if p == "succ":
            rhs = rhs + TensorVector.tensor(unit, fg) + TensorVector.tensor(fv, gv) \
                + _factorwise(rf, TensorVector.tensor(unit, gv))
        lhs = fg.apply(lambda w, p=p: dual_pieces(w)[p], TensorVector)
        out.append((name, lhs, rhs))
    out.append(("Δ(fg)",
                sum((fg.apply(lambda w, p=p: dual_pieces(w)[p], TensorVector) for p in PIECES),
                    TensorVector.zero()),
                _factorwise(df, sum((pg[p] for p in PIECES), TensorVector.zero()))))
    return out


def check_compatibilities(max_degree: int) -> Report:
    report = Report("compatibility")
    for df in range(1, max_degree):
        for dg in range(1, max_degree - df + 1):
            for f in enumerate_trees(df):
                for g in enumerate_trees(dg):
                    report.cases += 1
                    for name, lhs, rhs in compatibility_identities(f, g):
                        report.compare(name, (f, g), lhs, rhs)
    return report


def check_dual_structure(max_degree: int, *, pieces=None) -> Report:
    """Adjointness, the seven dual relations and the three compatibilities."""
    report = Report("dual")
    report.extend(check_dual_adjointness(max_degree, pieces=pieces))
    report.extend(check_cotri(max_degree))
    report.extend(check_compatibilities(max_degree))
    return report
