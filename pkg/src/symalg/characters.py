"""Irreducible characters of S_n and the central idempotents they define."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import permutations as _itertools_permutations
from math import factorial

from ._limits import check_degree
from .algebra import GroupAlgebraElement, _inverse_key
from .permutation import Permutation, cycle_type
from .young import Partition, as_partition, dimension, partitions_of


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    parts = tuple(b - (length - 1 - i) for i, b in enumerate(beta))
    return tuple(x for x in parts if x > 0)


@cache
def _mn(shape: Partition, classes: tuple[int, ...]) -> int:
    if not classes:
        return 1 if not shape else 0
    k, rest = classes[0], classes[1:]
    length = len(shape)
    beta = [shape[i] + (length - 1 - i) for i in range(length)]
    members = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in members:
            continue
        # removing a k-rim hook; its leg length counts the beads jumped over
        height = sum(1 for c in beta if target < c < b)
        moved = [target if c == b else c for c in beta]
        total += (-1) ** height * _mn(_from_beta(moved), rest)
    return total


def character(shape: Partition, ct: Partition) -> int:
    """χ_shape evaluated on the conjugacy class of cycle type ``ct`` (Murnaghan–Nakayama)."""
    shape, ct = as_partition(shape), as_partition(ct)
    if sum(shape) != sum(ct):
        raise ValueError(f"size mismatch: {shape} is a partition of {sum(shape)}, {ct} of {sum(ct)}")
    return _mn(shape, tuple(sorted(ct, reverse=True)))


def class_size(ct: Partition) -> int:
    """Number of permutations of cycle type ``ct``."""
    n = sum(ct)
    denom = 1
    for length in set(ct):
        m = ct.count(length)
        denom *= length ** m * factorial(m)
    return factorial(n) // denom


@dataclass(frozen=True)
class CharacterTable:
    n: int
    values: dict[tuple[Partition, Partition], int] = field(repr=False)

    @classmethod
    def build(cls, n: int) -> CharacterTable:
        shapes = partitions_of(n)
        return cls(n, {(lam, ct): character(lam, ct) for lam in shapes for ct in shapes})

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        return self.values[key]

    def to_json(self) -> dict:
        shapes = partitions_of(self.n)
        return {
            "n": self.n,
            "partitions": [list(lam) for lam in shapes],
            "cycle_types": [list(ct) for ct in shapes],
            "values": [[self.values[lam, ct] for ct in shapes] for lam in shapes],
        }

    @classmethod
    def from_json(cls, data) -> CharacterTable:
        shapes = [tuple(s) for s in data["partitions"]]
        cts = [tuple(c) for c in data["cycle_types"]]
        values = {
            (lam, ct): int(v)
            for lam, row in zip(shapes, data["values"])
            for ct, v in zip(cts, row)
        }
        return cls(int(data["n"]), values)


@cache
def central_idempotent(shape: Partition) -> GroupAlgebraElement:
    """e_λ = (χ_λ(id)/n!) Σ_p χ_λ(p) p^{-1}."""
    shape = as_partition(shape)
    n = sum(shape)
    check_degree(n, "central_idempotent")
    scale = Fraction(dimension(shape), factorial(n))
    terms = {}
    for key in _itertools_permutations(range(n)):
        chi = character(shape, cycle_type(Permutation._from_zero_based(key)))
        if chi:
            terms[_inverse_key(key)] = scale * chi
    return GroupAlgebraElement._raw(n, terms)
