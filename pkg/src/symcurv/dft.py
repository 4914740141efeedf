"""Discrete Fourier transform on Q[S_r] via Young's natural representation.

The transform sends an element to one exact-rational matrix per
partition of r; it is a ring isomorphism onto the product of the full
matrix rings of sizes given by the hook dimensions.

Representation convention: with standard tableaux in last-letter order,
D(p) is the transpose of the standard-polytabloid matrix of p^{-1}.
Under this convention the inverse transform carries the rank-one
idempotents of the (2 1) block of Q[S_3] to the xi/eta families with
their expected coefficients; tests pin those coefficients, so the
convention must not drift.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Mapping, Sequence

from . import linalg
from .group_ring import GroupRingElement
from .linalg import Matrix
from .permutation import Permutation, symmetric_group
from .rationals import Rational, as_rational
from .tableaux import (
    Partition,
    YoungTableau,
    hook_dimension,
    partitions_of,
    standard_tableaux,
    validate_partition,
)

Tabloid = tuple[tuple[int, ...], ...]


def _tabloid_of(t: YoungTableau) -> Tabloid:
    return tuple(tuple(sorted(row)) for row in t.rows)


@lru_cache(maxsize=None)
def _tabloid_index(parts: Partition) -> dict[Tabloid, int]:
    r = sum(parts)

    def split(rest: tuple[int, ...], sizes: tuple[int, ...]):
        if not sizes:
            yield ()
            return
        for first in combinations(rest, sizes[0]):
            remaining = tuple(v for v in rest if v not in first)
            for tail in split(remaining, sizes[1:]):
                yield (first, *tail)

    return {tab: i for i, tab in enumerate(split(tuple(range(1, r + 1)), parts))}


def _polytabloid(t: YoungTableau, index: Mapping[Tabloid, int]) -> list[Rational]:
    vec: list[Rational] = [0] * len(index)
    for q in t.vertical_group():
        vec[index[_tabloid_of(t.apply(q))]] += q.sign()
    return vec


@lru_cache(maxsize=None)
def _polytabloid_columns(parts: Partition) -> list[list[Rational]]:
    """Rows of the (tabloids x standard tableaux) expansion matrix."""
    index = _tabloid_index(parts)
    cols = [_polytabloid(t, index) for t in standard_tableaux(parts)]
    return [list(row) for row in zip(*cols)]


@lru_cache(maxsize=None)
def _specht_matrix(parts: Partition, images: tuple[int, ...]) -> Matrix:
    """Matrix of p on standard polytabloids, columns = images of basis."""
    p = Permutation(images)
    index = _tabloid_index(parts)
    basis_rows = _polytabloid_columns(parts)
    image_cols = [_polytabloid(t.apply(p), index) for t in standard_tableaux(parts)]
    image_rows = [list(row) for row in zip(*image_cols)]
    return linalg.matrix(linalg.solve_columns(basis_rows, image_rows))


def natural_rep_matrix(parts: Sequence[int], p: Permutation) -> Matrix:
    """The irreducible matrix of p for this shape, exact and integral."""
    parts = validate_partition(parts)
    if sum(parts) != p.degree:
        raise ValueError(f"shape weight {sum(parts)} != degree {p.degree}")
    if len(parts) == 1:
        return ((1,),)
    if parts[0] == 1:
        return ((p.sign(),),)
    return linalg.mat_transpose(_specht_matrix(parts, p.inverse().images))


class BlockMatrixImage:
    """One matrix per partition of r: the Fourier image of an element."""

    __slots__ = ("degree", "blocks")

    def __init__(self, degree: int, blocks: Sequence[Matrix]):
        shapes = partitions_of(degree)
        blocks = tuple(linalg.matrix(b) for b in blocks)
        if len(blocks) != len(shapes):
            raise ValueError(f"expected {len(shapes)} blocks for degree {degree}")
        for shape, block in zip(shapes, blocks):
            d = hook_dimension(shape)
            if len(block) != d or any(len(row) != d for row in block):
                raise ValueError(f"block for {shape} must be {d}x{d}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, name, value):
        raise AttributeError("BlockMatrixImage is immutable")

    @classmethod
    def zero(cls, degree: int) -> "BlockMatrixImage":
        return cls(degree, [linalg.zero_matrix(hook_dimension(s)) for s in partitions_of(degree)])

    @classmethod
    def one(cls, degree: int) -> "BlockMatrixImage":
        return cls(degree, [linalg.identity_matrix(hook_dimension(s)) for s in partitions_of(degree)])

    @classmethod
    def from_single_block(cls, degree: int, parts: Sequence[int], block: Matrix) -> "BlockMatrixImage":
        parts = validate_partition(parts)
        blocks = [
            linalg.matrix(block) if shape == parts else linalg.zero_matrix(hook_dimension(shape))
            for shape in partitions_of(degree)
        ]
        return cls(degree, blocks)

    def block(self, parts: Sequence[int]) -> Matrix:
        parts = validate_partition(parts)
        shapes = partitions_of(self.degree)
        if parts not in shapes:
            raise ValueError(f"{parts} is not a partition of {self.degree}")
        return self.blocks[shapes.index(parts)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BlockMatrixImage)
            and self.degree == other.degree
            and self.blocks == other.blocks
        )

    def __matmul__(self, other: "BlockMatrixImage") -> "BlockMatrixImage":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return BlockMatrixImage(
            self.degree,
            [linalg.mat_mul(a, b) for a, b in zip(self.blocks, other.blocks)],
        )

    def __repr__(self) -> str:
        sizes = "+".join(str(len(b)) for b in self.blocks)
        return f"<BlockMatrixImage degree={self.degree} blocks {sizes}>"


def fourier_transform(a: GroupRingElement) -> BlockMatrixImage:
    """Blockwise sum of a(p) times the representation matrix of p."""
    shapes = partitions_of(a.degree)
    blocks = [linalg.zero_matrix(hook_dimension(s)) for s in shapes]
    for p, c in a.terms():
        for k, shape in enumerate(shapes):
            blocks[k] = linalg.mat_add(blocks[k], linalg.mat_scale(c, natural_rep_matrix(shape, p)))
    return BlockMatrixImage(a.degree, blocks)


def inverse_fourier(image: BlockMatrixImage) -> GroupRingElement:
    """Exact two-sided inverse of fourier_transform.

    Coefficient at p is the dimension-weighted sum over shapes of
    trace(D(p^{-1}) . block), divided by r!.
    """
    degree = image.degree
    shapes = partitions_of(degree)
    dims = [hook_dimension(s) for s in shapes]
    size = factorial(degree)
    coeffs = []
    for p in symmetric_group(degree):
        pinv = p.inverse()
        total = Fraction(0)
        for shape, d, block in zip(shapes, dims, image.blocks):
            total += d * Fraction(linalg.trace_of_product(natural_rep_matrix(shape, pinv), block))
        coeffs.append(as_rational(total / size))
    return GroupRingElement(degree, coeffs)


def x_matrix(nu: Rational) -> Matrix:
    """The 2x2 idempotent with first column (1, nu) and second column zero."""
    nu = as_rational(nu)
    return ((1, 0), (nu, 0))


def y_matrix() -> Matrix:
    """The 2x2 idempotent supported on the lower-right entry."""
    return ((0, 0), (0, 1))


_TWO_ONE: Partition = (2, 1)


def fourier_xi(nu: Rational) -> GroupRingElement:
    """Primitive idempotent of Q[S_3] from x_matrix(nu) in the (2 1) block.

    The coefficients are affine in nu; nu = 0 recovers one third of the
    Young symmetrizer of the row-filled (2 1) tableau.
    """
    return inverse_fourier(BlockMatrixImage.from_single_block(3, _TWO_ONE, x_matrix(nu)))


def fourier_eta() -> GroupRingElement:
    """Primitive idempotent of Q[S_3] from y_matrix() in the (2 1) block."""
    return inverse_fourier(BlockMatrixImage.from_single_block(3, _TWO_ONE, y_matrix()))


def character(parts: Sequence[int], p: Permutation) -> Rational:
    """Trace of the irreducible matrix of p."""
    m = natural_rep_matrix(parts, p)
    return as_rational(sum(m[i][i] for i in range(len(m))))
