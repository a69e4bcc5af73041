"""Permutations of {1..n} in one-line list form.

Composition follows ``(p * q)(i) = p(q(i))``; with this convention the
index-permuting action on tensors is a left action.
"""

from __future__ import annotations

from functools import total_ordering
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence

from ._limits import check_degree


@total_ordering
class Permutation:
    """A bijection of {1, ..., n}, stored as its list of images.

    ``Permutation([2, 3, 1])`` maps 1 -> 2, 2 -> 3, 3 -> 1.  Instances are
    immutable, hashable and ordered lexicographically by their image lists.
    """

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        n = len(images)
        if n == 0:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{n}")
        self._images = images

    @classmethod
    def _from_zero_based(cls, images: Sequence[int]) -> Permutation:
        # trusted internal constructor, skips validation
        obj = cls.__new__(cls)
        obj._images = tuple(i + 1 for i in images)
        return obj

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def zero_based(self) -> tuple[int, ...]:
        return tuple(i - 1 for i in self._images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self._images):
            raise ValueError(f"{i} outside 1..{self.degree}")
        return self._images[i - 1]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images < other._images

    def __hash__(self):
        return hash(self._images)

    def __repr__(self):
        return f"Permutation({list(self._images)})"

    def __iter__(self) -> Iterator[int]:
        return iter(self._images)

    def __len__(self):
        return len(self._images)

    def inverse(self) -> Permutation:
        return inverse(self)

    def sign(self) -> int:
        return sign(self)

    def cycle_type(self) -> tuple[int, ...]:
        return cycle_type(self)

    def to_json(self) -> list[int]:
        return list(self._images)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> Permutation:
        return cls(data)


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError("identity needs n >= 1")
    return Permutation(range(1, n + 1))


def transposition(n: int, i: int, j: int) -> Permutation:
    """The transposition (i j) in S_n."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"({i} {j}) is not a transposition of 1..{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(images)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p∘q, i.e. the permutation i -> p(q(i))."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    pi = p.images
    return Permutation._from_zero_based([pi[j - 1] - 1 for j in q.images])


def inverse(p: Permutation) -> Permutation:
    result = [0] * p.degree
    for i, v in enumerate(p.images):
        result[v - 1] = i
    return Permutation._from_zero_based(result)


def sign(p: Permutation) -> int:
    # parity from the cycle decomposition: each k-cycle contributes k - 1 transpositions
    ct = cycle_type(p)
    return -1 if (p.degree - len(ct)) % 2 else 1


def cycle_type(p: Permutation) -> tuple[int, ...]:
    images = p.images
    seen = [False] * len(images)
    lengths = []
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = images[i] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def all_permutations(n: int) -> list[Permutation]:
    """All n! permutations of degree n in lexicographic order of image lists."""
    if n < 1:
        raise ValueError("n must be >= 1")
    check_degree(n, "all_permutations")
    return [Permutation._from_zero_based(p) for p in _itertools_permutations(range(n))]


def embed(p: Permutation) -> Permutation:
    """[i_1, ..., i_r] -> [i_1, ..., i_r, r+1]."""
    return Permutation._from_zero_based(p.zero_based + (p.degree,))


def adjacent_word(p: Permutation) -> list[int]:
    """A reduced word for p in the adjacent transpositions s_i = (i, i+1).

    Returns indices ``[i_1, ..., i_k]`` with ``p = s_{i_1} * ... * s_{i_k}``.
    """
    images = list(p.images)
    word = []
    # bubble sort p's image list to the identity by right multiplications p*s_i
    changed = True
    while changed:
        changed = False
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                word.append(i + 1)
                changed = True
    # p * s_{w1} * ... * s_{wk} = id  =>  p = s_{wk} * ... * s_{w1}
    return word[::-1]
