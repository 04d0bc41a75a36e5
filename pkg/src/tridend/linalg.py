"""Exact sparse linear algebra over the rationals."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Sequence

__all__ = ["SparseMatrix", "rref", "kernel_basis", "rank"]


@dataclass
class SparseMatrix:
    """Rows are dicts ``column index -> nonzero coefficient``."""

    ncols: int
    rows: list[dict[int, Fraction]] = field(default_factory=list)
    row_labels: list[Hashable] = field(default_factory=list)
    col_labels: list[Hashable] = field(default_factory=list)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence]) -> SparseMatrix:
        ncols = len(dense[0]) if dense else 0
        rows = [{j: Fraction(x) for j, x in enumerate(r) if x} for r in dense]
        return cls(ncols, rows)

    @classmethod
    def from_linear_map(cls, f: Callable, columns: Sequence[Hashable]) -> SparseMatrix:
        """Matrix of ``f`` on the given basis; ``f(col)`` returns a vector.

        Rows are indexed by the basis keys occurring in the images, in the
        vectors' canonical order.
        """
        images = [f(c) for c in columns]
        if images:
            sort_key = type(images[0])._sort_key
        keys = set()
        for im in images:
            keys.update(im.to_dict())
        row_labels = sorted(keys, key=sort_key) if keys else []
        index = {k: i for i, k in enumerate(row_labels)}
        rows = [dict() for _ in row_labels]
        for j, im in enumerate(images):
            for k, c in im.to_dict().items():
                rows[index[k]][j] = Fraction(c)
        return cls(len(columns), rows, row_labels, list(columns))

    @classmethod
    def stack(cls, *mats: SparseMatrix) -> SparseMatrix:
        ncols = mats[0].ncols
        rows, labels = [], []
        for m in mats:
            if m.ncols != ncols:
                raise ValueError("column counts differ")
            rows.extend(m.rows)
            labels.extend(m.row_labels)
        return cls(ncols, rows, labels, list(mats[0].col_labels))

    def apply(self, v: Sequence) -> list[Fraction]:
        return [sum((c * v[j] for j, c in r.items()), Fraction(0)) for r in self.rows]


def rref(m: SparseMatrix) -> dict[int, dict[int, Fraction]]:
    """Reduced row echelon form as ``pivot column -> normalized row``.

    Rows are inserted one at a time and the echelon form is kept fully
    reduced, so pivots are chosen in increasing column order per row.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in m.rows:
        r = dict(row)
        for p in [j for j in r if j in pivots]:
            c = r.get(p)
            if c:
                for j, x in pivots[p].items():
                    y = r.get(j, 0) - c * x
                    if y:
                        r[j] = y
                    else:
                        r.pop(j, None)
        if not r:
            continue
        p = min(r)
        inv = 1 / Fraction(r[p])
        r = {j: x * inv for j, x in r.items()}
        for q, other in pivots.items():
            c = other.get(p)
            if c:
                for j, x in r.items():
                    y = other.get(j, 0) - c * x
                    if y:
                        other[j] = y
                    else:
                        other.pop(j, None)
        pivots[p] = r
    return pivots


def rank(m: SparseMatrix) -> int:
    return len(rref(m))


def kernel_basis(m: SparseMatrix) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column in column order."""
    pivots = rref(m)
    basis = []
    for j in range(m.ncols):
        if j in pivots:
            continue
        v = [Fraction(0)] * m.ncols
        v[j] = Fraction(1)
        for p, r in pivots.items():
            c = r.get(j)
            if c:
                v[p] = -c
        basis.append(v)
    return basis
