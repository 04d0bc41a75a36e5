"""Reduced planar rooted trees.

A tree is either the leaf ``|`` or a node with at least two ordered children.
Trees are immutable tuple subclasses: the leaf is the empty tuple and a node is
the tuple of its children.  This keeps hashing and equality at C speed, which
matters because every product and coproduct is memoized on trees.

Text form: the leaf is ``|`` and a node is ``(c1,...,ck)``.
"""
from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

__all__ = [
    "PlanarTree", "LEAF", "Y", "parse_tree", "render_tree", "graft",
    "leaf_count", "degree", "is_binary", "corolla", "enumerate_trees",
    "right_comb_decomposition", "left_comb_decomposition",
    "right_comb", "left_comb", "forest_leaf_count", "sort_key",
]


class PlanarTree(tuple):
    """A reduced planar tree; the children are the tuple items."""

    __slots__ = ()

    def __new__(cls, children: Iterable[PlanarTree] = ()):
        children = tuple(children)
        if len(children) == 1:
            raise ValueError("a node needs at least two children")
        for c in children:
            if not isinstance(c, PlanarTree):
                raise TypeError(f"child {c!r} is not a PlanarTree")
        return tuple.__new__(cls, children)

    @classmethod
    def parse(cls, text: str) -> PlanarTree:
        return parse_tree(text)

    @property
    def is_leaf(self) -> bool:
        return not self

    @property
    def children(self) -> tuple[PlanarTree, ...]:
        return tuple(self)

    @property
    def degree(self) -> int:
        return degree(self)

    def __str__(self) -> str:
        return render_tree(self)

    def __repr__(self) -> str:
        return f"PlanarTree('{render_tree(self)}')"

    # canonical order: degree first, then the text form
    def __lt__(self, other):
        if not isinstance(other, PlanarTree):
            return NotImplemented
        return sort_key(self) < sort_key(other)

    def __le__(self, other):
        if not isinstance(other, PlanarTree):
            return NotImplemented
        return sort_key(self) <= sort_key(other)

    def __gt__(self, other):
        if not isinstance(other, PlanarTree):
            return NotImplemented
        return sort_key(self) > sort_key(other)

    def __ge__(self, other):
        if not isinstance(other, PlanarTree):
            return NotImplemented
        return sort_key(self) >= sort_key(other)

    # tuple.__eq__ / __hash__ are inherited; redefining __lt__ keeps them
    __eq__ = tuple.__eq__
    __ne__ = tuple.__ne__
    __hash__ = tuple.__hash__


def _node(children) -> PlanarTree:
    # unchecked constructor for internal use, children already valid
    return tuple.__new__(PlanarTree, children)


LEAF = _node(())
Y = _node((LEAF, LEAF))


def graft(children: Sequence[PlanarTree]) -> PlanarTree:
    """Graft the trees on a common new root, left to right."""
    if len(children) < 2:
        raise ValueError("grafting needs at least two trees")
    return PlanarTree(children)


def corolla(leaves: int) -> PlanarTree:
    if leaves < 1:
        raise ValueError("a corolla has at least one leaf")
    if leaves == 1:
        return LEAF
    return _node((LEAF,) * leaves)


@functools.lru_cache(maxsize=None)
def leaf_count(t: PlanarTree) -> int:
    if not t:
        return 1
    return sum(leaf_count(c) for c in t)


def degree(t: PlanarTree) -> int:
    """Number of leaves minus one."""
    return leaf_count(t) - 1


def forest_leaf_count(forest: Sequence[PlanarTree]) -> int:
    return sum(leaf_count(t) for t in forest)


@functools.lru_cache(maxsize=None)
def is_binary(t: PlanarTree) -> bool:
    if not t:
        return True
    return len(t) == 2 and is_binary(t[0]) and is_binary(t[1])


@functools.lru_cache(maxsize=None)
def render_tree(t: PlanarTree) -> str:
    if not t:
        return "|"
    return "(" + ",".join(render_tree(c) for c in t) + ")"


@functools.lru_cache(maxsize=None)
def sort_key(t: PlanarTree) -> tuple[int, str]:
    """Key of the canonical total order.

    Plain string comparison is character-code order, and the four symbols
    satisfy ``( < ) < , < |`` in ASCII, which is the required alphabet order.
    """
    return (degree(t), render_tree(t))


def parse_tree(text: str) -> PlanarTree:
    """Parse the text form; whitespace is ignored."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty tree literal")
    pos = 0

    def expect(ch):
        nonlocal pos
        if pos >= len(s) or s[pos] != ch:
            found = s[pos] if pos < len(s) else "end of input"
            raise ValueError(f"expected {ch!r} at position {pos}, found {found!r}")
        pos += 1

    def tree():
        nonlocal pos
        if pos < len(s) and s[pos] == "|":
            pos += 1
            return LEAF
        expect("(")
        kids = [tree()]
        while pos < len(s) and s[pos] == ",":
            pos += 1
            kids.append(tree())
        expect(")")
        if len(kids) < 2:
            raise ValueError(f"node closing at position {pos - 1} has a single child")
        return _node(kids)

    t = tree()
    if pos != len(s):
        raise ValueError(f"trailing characters at position {pos}: {s[pos:]!r}")
    return t


@functools.lru_cache(maxsize=None)
def _trees_with_leaves(n: int) -> tuple[PlanarTree, ...]:
    if n == 1:
        return (LEAF,)
    out = []
    for parts in _compositions(n):
        for kids in itertools.product(*(_trees_with_leaves(p) for p in parts)):
            out.append(_node(kids))
    return tuple(sorted(out, key=sort_key))


def _compositions(n: int):
    """Compositions of n with at least two parts."""
    for cuts in range(1, n):
        for pos in itertools.combinations(range(1, n), cuts):
            bounds = (0,) + pos + (n,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def enumerate_trees(n: int) -> list[PlanarTree]:
    """All reduced planar trees of degree n, in canonical order."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return list(_trees_with_leaves(n + 1))


def right_comb_decomposition(t: PlanarTree) -> list[tuple[PlanarTree, ...]]:
    """Forests hanging to the left of the right-most branch, root first."""
    if not t:
        raise ValueError("the leaf has no comb decomposition")
    forests = []
    while t:
        forests.append(tuple(t[:-1]))
        t = t[-1]
    return forests


def left_comb_decomposition(t: PlanarTree) -> list[tuple[PlanarTree, ...]]:
    """Forests hanging to the right of the left-most branch, root first."""
    if not t:
        raise ValueError("the leaf has no comb decomposition")
    forests = []
    while t:
        forests.append(tuple(t[1:]))
        t = t[0]
    return forests


def right_comb(forests: Sequence[Sequence[PlanarTree]]) -> PlanarTree:
    """Inverse of right_comb_decomposition; the empty list gives the leaf."""
    t = LEAF
    for f in reversed(forests):
        if not f:
            raise ValueError("comb forests must be nonempty")
        t = _node(tuple(f) + (t,))
    return t


def left_comb(forests: Sequence[Sequence[PlanarTree]]) -> PlanarTree:
    """Inverse of left_comb_decomposition; the empty list gives the leaf."""
    t = LEAF
    for f in reversed(forests):
        if not f:
            raise ValueError("comb forests must be nonempty")
        t = _node((t,) + tuple(f))
    return t
