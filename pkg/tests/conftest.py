"""Shared deterministic generators for randomized (seeded) tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations as _words
from math import factorial

from symcurv import DenseTensor, GroupRingElement


def random_element(rng, degree: int, span: int = 3) -> GroupRingElement:
    return GroupRingElement(
        degree,
        [Fraction(rng.randint(-span, span), rng.choice([1, 1, 2, 3]))
         for _ in range(factorial(degree))],
    )


def random_tensor(rng, order: int, dim: int, span: int = 3) -> DenseTensor:
    return DenseTensor(order, dim, [rng.randint(-span, span) for _ in range(dim ** order)])


def random_symmetric2(rng, dim: int, span: int = 4) -> DenseTensor:
    entries = {}
    for i in range(1, dim + 1):
        for j in range(i, dim + 1):
            v = rng.randint(-span, span)
            entries[(i, j)] = v
            entries[(j, i)] = v
    return DenseTensor.from_entries(2, dim, entries)


def random_alternating2(rng, dim: int, span: int = 4) -> DenseTensor:
    entries = {}
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            v = rng.randint(-span, span)
            entries[(i, j)] = v
            entries[(j, i)] = -v
    return DenseTensor.from_entries(2, dim, entries)


def random_symmetric3(rng, dim: int, span: int = 4) -> DenseTensor:
    entries = {}
    for i in range(1, dim + 1):
        for j in range(i, dim + 1):
            for k in range(j, dim + 1):
                v = rng.randint(-span, span)
                for word in set(_words((i, j, k))):
                    entries[word] = v
    return DenseTensor.from_entries(3, dim, entries)


def random_frame(rng, order: int, dim: int, span: int = 3) -> list[list[int]]:
    return [[rng.randint(-span, span) for _ in range(dim)] for _ in range(order)]
