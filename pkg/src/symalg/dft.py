"""Fourier transform on Q[S_n] through Young's natural representation.

Each irreducible block is realized on the standard polytabloids of the
frame, ordered by :func:`~symalg.young.lex_compare`.  Matrices of adjacent
transpositions are computed from the action on polytabloids; all other
permutations are reached by multiplying along a reduced word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations as _itertools_permutations
from math import factorial, lcm
from typing import Mapping

import flint

from ._limits import check_degree
from .algebra import GroupAlgebraElement, Key, _integer_form, _inverse_key, _parity
from .permutation import Permutation, adjacent_word
from .young import (
    Partition,
    Tableau,
    _set_group_keys,
    as_partition,
    dimension,
    partitions_of,
    standard_tableaux,
)


def _polytabloid(t: Tableau, vertical: list[Key], act: Key | None = None) -> dict[tuple, int]:
    """Coefficients of act·e_t in the tabloid basis; a tabloid is its row-index vector."""
    n = t.n
    rowof = [0] * n
    for i, row in enumerate(t.rows):
        for x in row:
            rowof[x - 1] = i
    result: dict[tuple, int] = {}
    for q in vertical:
        s = -1 if _parity(q) else 1
        # in act∘q∘t the value act(q(x)) occupies the box that holds x in t
        image = [0] * n
        for x in range(n):
            y = q[x] if act is None else act[q[x]]
            image[y] = rowof[x]
        key = tuple(image)
        result[key] = result.get(key, 0) + s
    return result


@cache
def _basis(shape: Partition):
    tableaux = standard_tableaux(shape)
    verticals = [_set_group_keys(t.columns, t.n) for t in tableaux]
    std_keys = []
    for t in tableaux:
        rowof = [0] * t.n
        for i, row in enumerate(t.rows):
            for x in row:
                rowof[x - 1] = i
        std_keys.append(tuple(rowof))
    d = len(tableaux)
    # restriction of the standard polytabloids to standard-tabloid coordinates is invertible
    P = flint.fmpq_mat(d, d)
    for j, (t, vert) in enumerate(zip(tableaux, verticals)):
        poly = _polytabloid(t, vert)
        for i, key in enumerate(std_keys):
            P[i, j] = poly.get(key, 0)
    return tableaux, verticals, std_keys, P.inv()


def _to_fmpz(mat: flint.fmpq_mat) -> flint.fmpz_mat:
    d = mat.nrows()
    out = flint.fmpz_mat(d, mat.ncols())
    for i in range(d):
        for j in range(mat.ncols()):
            v = mat[i, j]
            if v.q != 1:
                raise ArithmeticError("natural representation produced a non-integer entry")
            out[i, j] = v.p
    return out


@cache
def generator_matrix(shape: Partition, i: int) -> flint.fmpz_mat:
    """ρ_shape((i, i+1)) in the standard polytabloid basis."""
    shape = as_partition(shape)
    n = sum(shape)
    if not 1 <= i < n:
        raise ValueError(f"adjacent transposition ({i}, {i + 1}) not in S_{n}")
    tableaux, verticals, std_keys, P_inv = _basis(shape)
    d = len(tableaux)
    act = list(range(n))
    act[i - 1], act[i] = i, i - 1
    act = tuple(act)
    C = flint.fmpq_mat(d, d)
    for j, (t, vert) in enumerate(zip(tableaux, verticals)):
        poly = _polytabloid(t, vert, act)
        for k, key in enumerate(std_keys):
            C[k, j] = poly.get(key, 0)
    return _to_fmpz(P_inv * C)


def natural_representation(shape: Partition, p: Permutation) -> flint.fmpz_mat:
    """Young's natural representation matrix ρ_shape(p), a d_λ × d_λ integer matrix."""
    shape = as_partition(shape)
    n = sum(shape)
    if p.degree != n:
        raise ValueError(f"permutation of degree {p.degree} cannot act on frame {shape} of size {n}")
    table = _table(shape) if n <= _TABLE_DEGREE else None
    if table is not None:
        return table[p.zero_based]
    d = dimension(shape)
    result = flint.fmpz_mat(d, d)
    for k in range(d):
        result[k, k] = 1
    for i in adjacent_word(p):
        result = result * generator_matrix(shape, i)
    return result


# every ρ(p) is tabulated up to this degree (7! matrices per frame at most)
_TABLE_DEGREE = 7


@cache
def _table(shape: Partition) -> dict[Key, flint.fmpz_mat]:
    n = sum(shape)
    d = dimension(shape)
    ident = flint.fmpz_mat(d, d)
    for k in range(d):
        ident[k, k] = 1
    gens = [(i, generator_matrix(shape, i)) for i in range(1, n)]
    start = tuple(range(n))
    table = {start: ident}
    frontier = [start]
    # breadth-first over the Cayley graph: ρ(s_i ∘ p) = ρ(s_i) ρ(p)
    while frontier:
        nxt = []
        for key in frontier:
            mat = table[key]
            for i, g in gens:
                swapped = tuple(i if v == i - 1 else i - 1 if v == i else v for v in key)
                if swapped not in table:
                    table[swapped] = g * mat
                    nxt.append(swapped)
        frontier = nxt
    return table


def _rep(shape: Partition, key: Key) -> flint.fmpz_mat:
    if sum(shape) <= _TABLE_DEGREE:
        return _table(shape)[key]
    return natural_representation(shape, Permutation._from_zero_based(key))


@dataclass(frozen=True)
class FourierImage:
    """Per-frame square rational matrices: the Wedderburn image of an element."""

    n: int
    blocks: Mapping[Partition, flint.fmpq_mat]

    def __post_init__(self):
        expected = set(partitions_of(self.n))
        if set(self.blocks) != expected:
            raise ValueError(f"need exactly one block per partition of {self.n}")
        for shape, block in self.blocks.items():
            d = dimension(shape)
            if block.nrows() != d or block.ncols() != d:
                raise ValueError(
                    f"block {list(shape)} must be {d}x{d}, got {block.nrows()}x{block.ncols()}"
                )

    def __getitem__(self, shape: Partition) -> flint.fmpq_mat:
        return self.blocks[as_partition(shape)]

    def __eq__(self, other):
        if not isinstance(other, FourierImage):
            return NotImplemented
        return self.n == other.n and all(self.blocks[s] == other.blocks[s] for s in self.blocks)

    def __matmul__(self, other: FourierImage) -> FourierImage:
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return FourierImage(self.n, {s: self.blocks[s] * other.blocks[s] for s in self.blocks})

    def __add__(self, other: FourierImage) -> FourierImage:
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return FourierImage(self.n, {s: self.blocks[s] + other.blocks[s] for s in self.blocks})

    @classmethod
    def identity(cls, n: int) -> FourierImage:
        return cls(n, {s: _eye(dimension(s)) for s in partitions_of(n)})

    @classmethod
    def zero(cls, n: int) -> FourierImage:
        return cls(n, {s: flint.fmpq_mat(dimension(s), dimension(s)) for s in partitions_of(n)})

    def only(self, shape: Partition) -> FourierImage:
        """Keep the block at ``shape`` and zero every other block."""
        shape = as_partition(shape)
        blocks = {
            s: (b if s == shape else flint.fmpq_mat(b.nrows(), b.ncols()))
            for s, b in self.blocks.items()
        }
        return FourierImage(self.n, blocks)

    def to_json(self) -> dict:
        blocks = {}
        for shape in partitions_of(self.n):
            b = self.blocks[shape]
            blocks[_shape_key(shape)] = [
                [str(b[i, j]) for j in range(b.ncols())] for i in range(b.nrows())
            ]
        return {"n": self.n, "blocks": blocks}

    @classmethod
    def from_json(cls, data) -> FourierImage:
        try:
            n = int(data["n"])
            blocks = {}
            for key, rows in data["blocks"].items():
                shape = as_partition(int(x) for x in key.strip("[] ").split(",") if x.strip())
                d = len(rows)
                mat = flint.fmpq_mat(d, len(rows[0]) if rows else 0)
                for i, row in enumerate(rows):
                    if len(row) != mat.ncols():
                        raise ValueError(f"block {key} is not rectangular")
                    for j, v in enumerate(row):
                        f = Fraction(str(v))
                        mat[i, j] = flint.fmpq(f.numerator, f.denominator)
                blocks[shape] = mat
        except (KeyError, TypeError, AttributeError, IndexError) as exc:
            raise ValueError(f"malformed Fourier image JSON: {exc}") from None
        return cls(n, blocks)


def _shape_key(shape: Partition) -> str:
    return "[" + ",".join(str(x) for x in shape) + "]"


def _is_zero(mat: flint.fmpq_mat) -> bool:
    return mat == flint.fmpq_mat(mat.nrows(), mat.ncols())


def _eye(d: int) -> flint.fmpq_mat:
    m = flint.fmpq_mat(d, d)
    for k in range(d):
        m[k, k] = 1
    return m


def fourier_block(a: GroupAlgebraElement, shape: Partition) -> flint.fmpq_mat:
    """D_shape(a) = Σ_p a(p) ρ_shape(p)."""
    shape = as_partition(shape)
    if sum(shape) != a.degree:
        raise ValueError(f"frame {shape} does not match degree {a.degree}")
    check_degree(a.degree, "dft")
    d = dimension(shape)
    acc = flint.fmpz_mat(d, d)
    ints, den = _integer_form(a._terms)
    for key, c in ints.items():
        acc += _rep(shape, key) * c
    return flint.fmpq_mat(acc) * flint.fmpq(1, den)


def dft(a: GroupAlgebraElement) -> FourierImage:
    check_degree(a.degree, "dft")
    return FourierImage(a.degree, {s: fourier_block(a, s) for s in partitions_of(a.degree)})


def inverse_dft(image: FourierImage) -> GroupAlgebraElement:
    """a(p) = (1/n!) Σ_λ d_λ · trace(ρ_λ(p^{-1}) · F_λ)."""
    n = image.n
    check_degree(n, "inverse_dft")
    shapes = [s for s in partitions_of(n) if not _is_zero(image.blocks[s])]
    # integer numerators per block so the trace loop stays in fmpz arithmetic
    prepared = []
    for s in shapes:
        block = image.blocks[s]
        d = block.nrows()
        den = lcm(*(int(block[i, j].q) for i in range(d) for j in range(d)))
        num = flint.fmpz_mat(d, d)
        for i in range(d):
            for j in range(d):
                v = block[i, j]
                num[i, j] = v.p * (den // int(v.q))
        prepared.append((s, d, den, num))
    common = lcm(*(den for _, _, den, _ in prepared)) if prepared else 1
    terms = {}
    total = factorial(n) * common
    for key in _itertools_permutations(range(n)):
        inv = _inverse_key(key)
        acc = 0
        for s, d, den, num in prepared:
            prod = _rep(s, inv) * num
            acc += d * (common // den) * sum(int(prod[k, k]) for k in range(d))
        if acc:
            terms[key] = Fraction(acc, total)
    return GroupAlgebraElement._raw(n, terms)


def extract_component(a: GroupAlgebraElement, shape: Partition) -> GroupAlgebraElement:
    """The component of ``a`` in the isotypic two-sided ideal of ``shape``.

    Computed on the Fourier side: keep the single block, invert.  Equals
    ``a * central_idempotent(shape)``.
    """
    shape = as_partition(shape)
    if sum(shape) != a.degree:
        raise ValueError(f"frame {shape} does not match degree {a.degree}")
    blocks = {
        s: (fourier_block(a, s) if s == shape else flint.fmpq_mat(dimension(s), dimension(s)))
        for s in partitions_of(a.degree)
    }
    return inverse_dft(FourierImage(a.degree, blocks))
