"""The rational group algebra Q[S_n].

Elements are sparse maps permutation -> Fraction.  Internally keys are
zero-based image tuples so that composition is a single ``map``; the public
surface speaks :class:`~symalg.permutation.Permutation`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations as _itertools_permutations
from math import lcm
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

import flint

from ._limits import check_degree
from .permutation import Permutation

Key = tuple[int, ...]


def _as_key(p, degree: int | None = None) -> Key:
    if isinstance(p, Permutation):
        key = p.zero_based
    else:
        key = Permutation(p).zero_based
    if degree is not None and len(key) != degree:
        raise ValueError(f"permutation {[k + 1 for k in key]} does not have degree {degree}")
    return key


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    if isinstance(c, flint.fmpq):
        return Fraction(int(c.p), int(c.q))
    if isinstance(c, flint.fmpz):
        return Fraction(int(c))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class GroupAlgebraElement:
    """A formal sum ``sum a(p) p`` over permutations p of a fixed degree."""

    __slots__ = ("_degree", "_terms")

    def __init__(self, degree: int, terms: Mapping | Iterable = ()):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        self._degree = degree
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, Fraction] = {}
        for p, c in items:
            key = _as_key(p, degree)
            acc[key] = acc.get(key, 0) + _as_fraction(c)
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, degree: int, terms: dict[Key, Fraction]) -> GroupAlgebraElement:
        obj = cls.__new__(cls)
        obj._degree = degree
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, n: int) -> GroupAlgebraElement:
        return cls(n)

    @classmethod
    def identity(cls, n: int) -> GroupAlgebraElement:
        return cls._raw(n, {tuple(range(n)): Fraction(1)})

    @classmethod
    def from_permutation(cls, p, coeff=1) -> GroupAlgebraElement:
        key = _as_key(p)
        return cls(len(key), {Permutation._from_zero_based(key): coeff})

    @classmethod
    def group_sum(cls, n: int, signed: bool = False, scale=1) -> GroupAlgebraElement:
        """``scale * sum_p p`` over S_n, or with ``sign(p)`` weights."""
        check_degree(n, "group_sum")
        c = _as_fraction(scale)
        terms = {}
        for key in _itertools_permutations(range(n)):
            terms[key] = -c if signed and _parity(key) else c
        return cls._raw(n, {k: v for k, v in terms.items() if v})

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def terms(self) -> dict[Permutation, Fraction]:
        return {Permutation._from_zero_based(k): v for k, v in self._terms.items()}

    def items(self) -> Iterator[tuple[Permutation, Fraction]]:
        for k in sorted(self._terms):
            yield Permutation._from_zero_based(k), self._terms[k]

    def coefficient(self, p) -> Fraction:
        return self._terms.get(_as_key(p, self._degree), Fraction(0))

    def support(self) -> list[Permutation]:
        return [Permutation._from_zero_based(k) for k in sorted(self._terms)]

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self._degree == other._degree and self._terms == other._terms

    def __hash__(self):
        return hash((self._degree, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"GroupAlgebraElement({self._degree}, 0)"
        parts = [f"{c}*{list(k + 1 for k in key)}" for key, c in sorted(self._terms.items())]
        return f"GroupAlgebraElement({self._degree}, {' + '.join(parts)})"

    def __add__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return multiply(self, other)
        if isinstance(other, Permutation):
            return multiply(self, GroupAlgebraElement.from_permutation(other))
        try:
            return scale(other, self)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Permutation):
            return multiply(GroupAlgebraElement.from_permutation(other), self)
        try:
            return scale(other, self)
        except TypeError:
            return NotImplemented

    def star(self) -> GroupAlgebraElement:
        return star(self)

    def to_json(self) -> dict:
        return {
            "degree": self._degree,
            "terms": [
                {"perm": [k + 1 for k in key], "coeff": str(c)}
                for key, c in sorted(self._terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> GroupAlgebraElement:
        try:
            degree = int(data["degree"])
            terms = [(t["perm"], Fraction(str(t["coeff"]))) for t in data["terms"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed group algebra element JSON: {exc}") from None
        return cls(degree, terms)


def _parity(key: Key) -> int:
    """0 for even, 1 for odd (zero-based image tuple)."""
    seen = [False] * len(key)
    parity = 0
    for start in range(len(key)):
        if seen[start]:
            continue
        i = start
        length = 0
        while not seen[i]:
            seen[i] = True
            i = key[i]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _check_same_degree(a: GroupAlgebraElement, b: GroupAlgebraElement) -> None:
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")


def add(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    _check_same_degree(a, b)
    terms = dict(a._terms)
    for k, v in b._terms.items():
        s = terms.get(k, 0) + v
        if s:
            terms[k] = s
        else:
            terms.pop(k, None)
    return GroupAlgebraElement._raw(a.degree, terms)


def scale(c, a: GroupAlgebraElement) -> GroupAlgebraElement:
    c = _as_fraction(c)
    if not c:
        return GroupAlgebraElement._raw(a.degree, {})
    return GroupAlgebraElement._raw(a.degree, {k: c * v for k, v in a._terms.items()})


def _integer_form(terms: dict[Key, Fraction]) -> tuple[dict[Key, int], int]:
    den = lcm(*(v.denominator for v in terms.values())) if terms else 1
    return {k: v.numerator * (den // v.denominator) for k, v in terms.items()}, den


def multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Convolution product: the coefficient of r is the sum of a(p) b(q) over p∘q = r."""
    _check_same_degree(a, b)
    if not a._terms or not b._terms:
        return GroupAlgebraElement._raw(a.degree, {})
    # accumulate in integers over a common denominator; Fractions only at the end
    ia, da = _integer_form(a._terms)
    ib, db = _integer_form(b._terms)
    acc: dict[Key, int] = {}
    get = acc.get
    b_items = list(ib.items())
    for p, x in ia.items():
        pget = p.__getitem__
        for q, y in b_items:
            r = tuple(map(pget, q))
            acc[r] = get(r, 0) + x * y
    den = da * db
    return GroupAlgebraElement._raw(
        a.degree, {k: Fraction(v, den) for k, v in acc.items() if v}
    )


def _inverse_key(key: Key) -> Key:
    result = [0] * len(key)
    for i, v in enumerate(key):
        result[v] = i
    return tuple(result)


def star(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """The anti-automorphism ``sum a(p) p -> sum a(p) p^-1``."""
    return GroupAlgebraElement._raw(a.degree, {_inverse_key(k): v for k, v in a._terms.items()})


def embed(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """Push an element of Q[S_r] into Q[S_{r+1}] by fixing the point r+1."""
    r = a.degree
    return GroupAlgebraElement._raw(r + 1, {k + (r,): v for k, v in a._terms.items()})


def is_idempotent(a: GroupAlgebraElement) -> bool:
    return multiply(a, a) == a


def rational_rank(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> int:
    """Exact rank over Q of sparse rows given as ``{column: value}`` maps."""
    if not rows or ncols == 0:
        return 0
    mat = flint.fmpz_mat(len(rows), ncols)
    for i, row in enumerate(rows):
        if not row:
            continue
        den = lcm(*(Fraction(v).denominator for v in row.values()))
        for j, v in row.items():
            v = Fraction(v)
            mat[i, j] = v.numerator * (den // v.denominator)
    return mat.rank()


def _left_translates(a: GroupAlgebraElement) -> tuple[list[dict[int, Fraction]], dict[Key, int]]:
    n = a.degree
    check_degree(n, "left ideal rank")
    keys = list(_itertools_permutations(range(n)))
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for p in keys:
        pget = p.__getitem__
        rows.append({index[tuple(map(pget, q))]: v for q, v in a._terms.items()})
    return rows, index


def left_ideal_dimension(a: GroupAlgebraElement) -> int:
    """Dimension of Q[S_n]·a, the rank of the n! translates p·a."""
    rows, index = _left_translates(a)
    return rational_rank(rows, len(index))


def in_left_ideal(x: GroupAlgebraElement, generator: GroupAlgebraElement) -> bool:
    """Whether x lies in the left ideal Q[S_n]·generator (exact rank test)."""
    _check_same_degree(x, generator)
    rows, index = _left_translates(generator)
    base = rational_rank(rows, len(index))
    rows.append({index[k]: v for k, v in x._terms.items()})
    return rational_rank(rows, len(index)) == base


def from_permutations(perms: Iterable[Permutation], coeffs: Iterable | None = None) -> GroupAlgebraElement:
    """Build ``sum c_i p_i``; with no coefficients every permutation gets weight 1."""
    perms = list(perms)
    if not perms:
        raise ValueError("need at least one permutation to fix the degree")
    if coeffs is None:
        coeffs = [1] * len(perms)
    return GroupAlgebraElement(perms[0].degree, zip(perms, coeffs))

