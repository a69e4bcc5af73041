"""Partitions, Young tableaux and Young symmetrizers."""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import permutations as _itertools_permutations, product
from math import factorial, prod
from typing import Iterable, Sequence

from ._limits import check_degree
from .algebra import GroupAlgebraElement, _parity
from .permutation import Permutation

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(int(x) for x in parts)
    if not parts or any(x < 1 for x in parts):
        raise ValueError(f"{list(parts)} is not a partition: parts must be positive")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{list(parts)} is not a partition: parts must be weakly decreasing")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1,1"`` (brackets and spaces tolerated)."""
    cleaned = text.strip().strip("[]()")
    try:
        return as_partition(int(x) for x in cleaned.split(",") if x.strip())
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}: {exc}") from None


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n < 1:
        raise ValueError("n must be >= 1")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def conjugate(shape: Partition) -> Partition:
    return tuple(sum(1 for part in shape if part > j) for j in range(shape[0]))


def add_one_box(shape: Partition) -> list[Partition]:
    """Every partition obtained from ``shape`` by adding a single box."""
    shape = as_partition(shape)
    result = []
    for i, part in enumerate(shape):
        if i == 0 or shape[i - 1] > part:
            result.append(shape[:i] + (part + 1,) + shape[i + 1:])
    result.append(shape + (1,))
    return result


def hook_lengths(shape: Partition) -> list[list[int]]:
    conj = conjugate(shape)
    return [[shape[i] - j + conj[j] - i - 1 for j in range(shape[i])] for i in range(len(shape))]


@cache
def dimension(shape: Partition) -> int:
    """Number of standard tableaux of the shape, via the hook length formula."""
    shape = as_partition(shape)
    hooks = prod(h for row in hook_lengths(shape) for h in row)
    return factorial(sum(shape)) // hooks


class Tableau:
    """A bijective filling of a Young frame with 1..n, stored row by row."""

    __slots__ = ("_rows", "_frame")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        frame = as_partition(len(row) for row in rows)
        n = sum(frame)
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, n + 1)):
            raise ValueError(f"tableau entries must be exactly 1..{n}, got {[list(r) for r in rows]}")
        self._rows = rows
        self._frame = frame

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def frame(self) -> Partition:
        return self._frame

    @property
    def n(self) -> int:
        return sum(self._frame)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(row[j] for row in self._rows if len(row) > j) for j in range(self._frame[0])
        )

    @property
    def standard(self) -> bool:
        rows_ok = all(row[j] < row[j + 1] for row in self._rows for j in range(len(row) - 1))
        cols_ok = all(col[i] < col[i + 1] for col in self.columns for i in range(len(col) - 1))
        return rows_ok and cols_ok

    def reading_word(self) -> tuple[int, ...]:
        """Entries in row-major order."""
        return tuple(x for row in self._rows for x in row)

    def relabel(self, p: Permutation) -> Tableau:
        """The tableau p∘t: every entry i is replaced by p(i)."""
        if p.degree != self.n:
            raise ValueError(f"permutation degree {p.degree} does not match tableau size {self.n}")
        return Tableau([[p(x) for x in row] for row in self._rows])

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self._rows]})"

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self._rows)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self._rows]

    @classmethod
    def from_json(cls, data) -> Tableau:
        return cls(data)


def _fill(shape: Partition, word: Sequence[int]) -> Tableau:
    rows, start = [], 0
    for part in shape:
        rows.append(word[start:start + part])
        start += part
    return Tableau(rows)


def lex_compare(t1: Tableau, t2: Tableau) -> int:
    """Compare two fillings of one frame: -1 (less), 0 (equal) or 1 (greater).

    Both tableaux are read row by row, left to right; the first position
    holding different entries decides, the larger entry marking the greater
    tableau.
    """
    if t1.frame != t2.frame:
        raise ValueError(f"frame mismatch: {t1.frame} vs {t2.frame}")
    w1, w2 = t1.reading_word(), t2.reading_word()
    return (w1 > w2) - (w1 < w2)


def all_tableaux(shape: Partition) -> list[Tableau]:
    """All n! fillings of the frame, ordered by reading word."""
    shape = as_partition(shape)
    n = sum(shape)
    check_degree(n, "all_tableaux")
    return [_fill(shape, word) for word in _itertools_permutations(range(1, n + 1))]


def standard_tableaux(shape: Partition) -> list[Tableau]:
    """Standard tableaux of the frame in ascending lexicographic order."""
    shape = as_partition(shape)
    check_degree(sum(shape), "standard_tableaux")
    found = []

    def grow(rows, filled, k, n):
        if k > n:
            found.append(Tableau(rows))
            return
        for i, part in enumerate(shape):
            # k can go at the end of row i if the row has room and the box above is filled
            if filled[i] < part and (i == 0 or filled[i - 1] > filled[i]):
                rows[i].append(k)
                filled[i] += 1
                grow(rows, filled, k + 1, n)
                filled[i] -= 1
                rows[i].pop()

    grow([[] for _ in shape], [0] * len(shape), 1, sum(shape))
    return sorted(found, key=Tableau.reading_word)


def _set_group_keys(blocks: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """Zero-based keys of all permutations preserving each block setwise."""
    choices = [list(_itertools_permutations(block)) for block in blocks]
    keys = []
    for combo in product(*choices):
        images = list(range(n))
        for block, image in zip(blocks, combo):
            for src, dst in zip(block, image):
                images[src - 1] = dst - 1
        keys.append(tuple(images))
    return keys


def horizontal_group(t: Tableau) -> list[Permutation]:
    return [Permutation._from_zero_based(k) for k in _set_group_keys(t.rows, t.n)]


def vertical_group(t: Tableau) -> list[Permutation]:
    return [Permutation._from_zero_based(k) for k in _set_group_keys(t.columns, t.n)]


def young_symmetrizer(t: Tableau) -> GroupAlgebraElement:
    """y_t = sum over p in H_t, q in V_t of sign(q) p∘q."""
    n = t.n
    horizontal = _set_group_keys(t.rows, n)
    vertical = [(q, -1 if _parity(q) else 1) for q in _set_group_keys(t.columns, n)]
    terms = {}
    for p in horizontal:
        pget = p.__getitem__
        for q, s in vertical:
            # H_t ∩ V_t = {id}, so every product p∘q is distinct
            terms[tuple(map(pget, q))] = Fraction(s)
    return GroupAlgebraElement._raw(n, terms)


def normalized_idempotent(t: Tableau) -> GroupAlgebraElement:
    """e_t = (d_λ / n!) · y_t, the idempotent multiple of the Young symmetrizer."""
    factor = Fraction(dimension(t.frame), factorial(t.n))
    return young_symmetrizer(t) * factor
