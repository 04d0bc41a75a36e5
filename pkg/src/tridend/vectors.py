"""Finite rational linear combinations of trees and of tensors of trees.

Coefficients are ``int`` or ``fractions.Fraction``; both are exact and compare
equal across types.  Vectors are immutable values: every operation returns a
new vector, which lets memoized results be shared safely.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Callable, Hashable, Iterable, Mapping

from .trees import PlanarTree, parse_tree, render_tree, sort_key

__all__ = ["TreeVector", "TensorVector", "pairing", "parse_vector", "format_coefficient"]


class _LinearCombination:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                self._check_key(key)
                if not isinstance(c, Rational):
                    raise TypeError(f"coefficient {c!r} is not an exact rational")
                acc[key] = acc.get(key, 0) + c
        self._terms = {k: _norm(c) for k, c in acc.items() if c != 0}

    @classmethod
    def _from_dict(cls, acc: dict):
        # trusted constructor: acc is owned by the new vector
        v = object.__new__(cls)
        v._terms = {k: _norm(c) for k, c in acc.items() if c != 0}
        return v

    @classmethod
    def zero(cls):
        return cls._from_dict({})

    @classmethod
    def basis(cls, key, coefficient=1):
        return cls([(key, coefficient)])

    def _check_key(self, key):
        raise NotImplementedError

    def __getitem__(self, key):
        return self._terms.get(key, 0)

    def __contains__(self, key):
        return key in self._terms

    def __iter__(self):
        return iter(self.keys())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def keys(self):
        return sorted(self._terms, key=self._sort_key)

    def items(self):
        return [(k, self._terms[k]) for k in self.keys()]

    def to_dict(self) -> dict:
        return dict(self._terms)

    def _same_kind(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._same_kind(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return type(self)._from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._from_dict({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, Rational):
            return NotImplemented
        return type(self)._from_dict({k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def apply(self, f: Callable, result_type=None):
        """Linear extension of ``f``, which maps a basis key to a vector."""
        acc: dict = {}
        out_type = result_type
        for k, c in self._terms.items():
            image = f(k)
            if out_type is None:
                out_type = type(image)
            for k2, c2 in image._terms.items():
                acc[k2] = acc.get(k2, 0) + c * c2
        if out_type is None:
            out_type = result_type or type(self)
        return out_type._from_dict(acc)

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{format_coefficient(c)}*{self._render_key(k)}" for k, c in self.items())

    def __repr__(self):
        return f"{type(self).__name__}('{self}')"


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def format_coefficient(c) -> str:
    return str(Fraction(c))


class TreeVector(_LinearCombination):
    """Linear combination of planar trees."""

    __slots__ = ()

    @staticmethod
    def _sort_key(t):
        return sort_key(t)

    def _check_key(self, key):
        if not isinstance(key, PlanarTree):
            raise TypeError(f"{key!r} is not a PlanarTree")

    @staticmethod
    def _render_key(t):
        return render_tree(t)

    def homogeneous_part(self, n: int) -> TreeVector:
        from .trees import degree
        return TreeVector._from_dict({t: c for t, c in self._terms.items() if degree(t) == n})


class TensorVector(_LinearCombination):
    """Linear combination of tensors ``t1 ⊗ ... ⊗ tk`` of planar trees.

    Keys are tuples of trees.  All keys of one vector normally share the same
    arity, but that is not enforced.
    """

    __slots__ = ()

    @staticmethod
    def _sort_key(key):
        return tuple(sort_key(t) for t in key)

    def _check_key(self, key):
        if not isinstance(key, tuple) or isinstance(key, PlanarTree) or not key:
            raise TypeError(f"{key!r} is not a tuple of trees")
        for t in key:
            if not isinstance(t, PlanarTree):
                raise TypeError(f"{t!r} is not a PlanarTree")

    @staticmethod
    def _render_key(key):
        return "⊗".join(render_tree(t) for t in key)

    @classmethod
    def tensor(cls, *factors: TreeVector) -> TensorVector:
        """Tensor product of tree vectors."""
        acc = {(): 1}
        for v in factors:
            new = {}
            for k, c in acc.items():
                for t, d in v._terms.items():
                    new[k + (t,)] = new.get(k + (t,), 0) + c * d
            acc = new
        return cls._from_dict(acc)

    def map_factor(self, i: int, f: Callable[[PlanarTree], TensorVector | TreeVector]) -> TensorVector:
        """Apply a linear map to the i-th factor, splicing its output in place.

        ``f`` may return a TreeVector (arity kept) or a TensorVector (arity grows).
        """
        acc: dict = {}
        for key, c in self._terms.items():
            image = f(key[i])
            for k2, c2 in image._terms.items():
                k2 = k2 if isinstance(image, TensorVector) else (k2,)
                new = key[:i] + k2 + key[i + 1:]
                acc[new] = acc.get(new, 0) + c * c2
        return TensorVector._from_dict(acc)


def pairing(x: _LinearCombination, y: _LinearCombination):
    """Bilinear extension of the Kronecker pairing on basis elements."""
    x._same_kind(y)
    small, big = (x, y) if len(x) <= len(y) else (y, x)
    total = 0
    for k, c in small._terms.items():
        d = big._terms.get(k)
        if d is not None:
            total += c * d
    return _norm(Fraction(total))


_TERM = re.compile(
    r"\s*(?P<sign>[+\-−]?)\s*(?:(?P<coef>\d+(?:/\d+)?)\s*\*\s*)?(?P<tree>[(|][()|,\s]*)"
)


def parse_vector(text: str) -> TreeVector:
    """Parse ``c/d*TREE`` terms joined by ``+``/``-``, e.g. ``1*(|,|) + -1/2*|``.

    A bare tree has coefficient 1; ``0`` denotes the zero vector.
    """
    s = text.strip()
    if s == "0":
        return TreeVector.zero()
    if not s:
        raise ValueError("empty vector literal")
    terms = []
    pos = 0
    first = True
    while pos < len(s):
        # between terms: a '+' or '-' connective, optionally followed by a sign
        m = re.compile(r"\s*([+\-−])?").match(s, pos)
        connective = m.group(1)
        if not first and connective is None:
            raise ValueError(f"expected '+' or '-' at position {pos}")
        pos = m.end()
        m = _TERM.match(s, pos)
        if not m:
            raise ValueError(f"cannot parse a term at position {pos}: {s[pos:]!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") in ("-", "−"):
            coef = -coef
        if connective in ("-", "−"):
            coef = -coef
        terms.append((parse_tree(m.group("tree")), coef))
        pos = m.end()
        first = False
    return TreeVector(terms)
