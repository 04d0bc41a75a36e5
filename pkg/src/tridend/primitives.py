"""Primitive elements, computed as exact kernels degree by degree.

Four kinds:

* ``coass``  -- kernel of Δ̃
* ``left``   -- kernel of Δ̃←
* ``right``  -- kernel of Δ̃→
* ``codend`` -- common kernel of Δ̃← and Δ̃→
"""
from __future__ import annotations

import functools
import warnings
from dataclasses import dataclass

from .coproduct import reduced_coproduct, reduced_coproduct_left, reduced_coproduct_right
from .linalg import SparseMatrix, kernel_basis, rank
from .products import product_vec
from .trees import Y, enumerate_trees
from .vectors import TreeVector

__all__ = ["PrimitiveBasis", "primitive_basis", "theta", "dimension_table",
           "coefficient_matrix", "DEFAULT_MAX_DEGREE", "KINDS"]

KINDS = ("coass", "codend", "left", "right")
DEFAULT_MAX_DEGREE = 6

_MAPS = {
    "coass": (reduced_coproduct,),
    "left": (reduced_coproduct_left,),
    "right": (reduced_coproduct_right,),
    "codend": (reduced_coproduct_left, reduced_coproduct_right),
}


@dataclass(frozen=True)
class PrimitiveBasis:
    degree: int
    kind: str
    vectors: tuple[TreeVector, ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)


def _check_degree(n: int, allow_large: bool):
    if n < 1:
        raise ValueError("primitives are computed in degrees >= 1")
    if n > DEFAULT_MAX_DEGREE:
        if not allow_large:
            raise ValueError(f"degree {n} exceeds the default cap {DEFAULT_MAX_DEGREE}; "
                             "pass allow_large=True")
        warnings.warn(f"kernel computation in degree {n} may be slow", RuntimeWarning, stacklevel=3)


@functools.lru_cache(maxsize=None)
def _kernel(kind: str, n: int) -> tuple[TreeVector, ...]:
    trees = enumerate_trees(n)
    m = SparseMatrix.stack(*(SparseMatrix.from_linear_map(f, trees) for f in _MAPS[kind]))
    return tuple(TreeVector(zip(trees, v)) for v in kernel_basis(m))


def primitive_basis(kind: str, n: int, *, allow_large: bool = False) -> PrimitiveBasis:
    """Deterministic exact basis of the primitives of the given kind in degree n."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}, expected one of {KINDS}")
    _check_degree(n, allow_large)
    return PrimitiveBasis(n, kind, _kernel(kind, n))


def coefficient_matrix(vectors, n: int) -> SparseMatrix:
    """Vectors of degree n as the rows of a matrix over the tree basis."""
    index = {t: j for j, t in enumerate(enumerate_trees(n))}
    rows = []
    for v in vectors:
        row = {}
        for t, c in v.items():
            row[index[t]] = c
        rows.append(row)
    return SparseMatrix(len(index), rows)


def theta(n: int, basis: PrimitiveBasis) -> list[TreeVector]:
    """Image a·Y of each coassociative primitive a of degree n."""
    if basis.kind != "coass":
        raise ValueError("theta takes a basis of coassociative primitives")
    if basis.degree != n:
        raise ValueError(f"basis has degree {basis.degree}, expected {n}")
    return [product_vec("mid", a, Y) for a in basis.vectors]


def dimension_table(max_degree: int, *, allow_large: bool = False) -> dict[int, dict[str, int]]:
    """Degree -> dimensions of A_n and of the four primitive spaces."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    table = {}
    for n in range(1, max_degree + 1):
        row = {"dim_A": len(enumerate_trees(n))}
        for kind in ("coass", "codend", "left", "right"):
            row[f"dim_prim_{kind}"] = primitive_basis(kind, n, allow_large=allow_large).dimension
        table[n] = row
    return table


def span_rank(vectors, n: int) -> int:
    return rank(coefficient_matrix(vectors, n))
