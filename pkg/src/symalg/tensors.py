"""Dense rational tensors and the index-permuting action of Q[S_r].

A group algebra element acts by ``(aT)_{i_1..i_r} = Σ a(p) T_{i_p(1)..i_p(r)}``.
Tensors are indexed from 1 like permutations; ``.array`` exposes the
underlying zero-based numpy object array of Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations as _itertools_permutations
from math import factorial, lcm
from typing import Sequence

import numpy as np

from .algebra import GroupAlgebraElement, _integer_form, _inverse_key, star
from .branching import antisymmetrizer_e_a, h_component, symmetrizer_e_s
from .young import Tableau, young_symmetrizer

MAX_ORDER = 5
MAX_DIM = 6

# the standard tableau whose symmetrizer generates covariant derivative curvature tensors
CDC_TABLEAU = Tableau([[1, 3, 5], [2, 4]])

CDC_IDENTITIES = ("antisym_ij", "antisym_kl", "pair_symmetry", "first_bianchi", "second_bianchi")


def _check_shape(order: int, dim: int) -> None:
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"tensor order must be in 1..{MAX_ORDER}, got {order}")
    if not 1 <= dim <= MAX_DIM:
        raise ValueError(f"tensor dimension must be in 1..{MAX_DIM}, got {dim}")


class DenseTensor:
    """An order-r tensor over a d-dimensional space with exact rational entries."""

    __slots__ = ("_array",)

    def __init__(self, array):
        arr = np.asarray(array, dtype=object)
        if arr.ndim == 0:
            raise ValueError("tensors need order >= 1")
        if len(set(arr.shape)) != 1:
            raise ValueError(f"all axes must have the same dimension, got shape {arr.shape}")
        _check_shape(arr.ndim, arr.shape[0])
        self._array = np.vectorize(Fraction, otypes=[object])(arr)

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> DenseTensor:
        obj = cls.__new__(cls)
        obj._array = arr
        return obj

    @classmethod
    def zeros(cls, order: int, dim: int) -> DenseTensor:
        _check_shape(order, dim)
        arr = np.empty((dim,) * order, dtype=object)
        arr.fill(Fraction(0))
        return cls._wrap(arr)

    @classmethod
    def random(cls, order: int, dim: int, rng: np.random.Generator | int) -> DenseTensor:
        """Integer entries drawn uniformly from [-9, 9]."""
        _check_shape(order, dim)
        if not isinstance(rng, np.random.Generator):
            rng = np.random.default_rng(rng)
        ints = rng.integers(-9, 10, size=(dim,) * order)
        return cls(ints.tolist())

    @property
    def order(self) -> int:
        return self._array.ndim

    @property
    def dim(self) -> int:
        return self._array.shape[0]

    @property
    def array(self) -> np.ndarray:
        return self._array

    def __getitem__(self, index: Sequence[int]) -> Fraction:
        if len(index) != self.order:
            raise IndexError(f"need {self.order} indices, got {len(index)}")
        if any(not 1 <= i <= self.dim for i in index):
            raise IndexError(f"indices run over 1..{self.dim}, got {tuple(index)}")
        return self._array[tuple(i - 1 for i in index)]

    def __eq__(self, other):
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return self._array.shape == other._array.shape and bool(np.all(self._array == other._array))

    def __add__(self, other: DenseTensor) -> DenseTensor:
        self._check_compatible(other)
        return DenseTensor._wrap(self._array + other._array)

    def __sub__(self, other: DenseTensor) -> DenseTensor:
        self._check_compatible(other)
        return DenseTensor._wrap(self._array - other._array)

    def __neg__(self):
        return DenseTensor._wrap(-self._array)

    def __rmul__(self, c):
        return DenseTensor._wrap(self._array * Fraction(c))

    def _check_compatible(self, other: DenseTensor) -> None:
        if self._array.shape != other._array.shape:
            raise ValueError(f"shape mismatch: {self._array.shape} vs {other._array.shape}")

    def is_zero(self) -> bool:
        return not np.any(self._array != 0)

    def __repr__(self):
        return f"DenseTensor(order={self.order}, dim={self.dim})"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "dim": self.dim,
            "entries": [str(v) for v in self._array.ravel()],
        }

    @classmethod
    def from_json(cls, data) -> DenseTensor:
        order, dim = int(data["order"]), int(data["dim"])
        entries = data["entries"]
        if len(entries) != dim ** order:
            raise ValueError(f"expected {dim ** order} entries, got {len(entries)}")
        arr = np.array([Fraction(str(v)) for v in entries], dtype=object).reshape((dim,) * order)
        return cls._wrap(arr)


def apply(a: GroupAlgebraElement, T: DenseTensor) -> DenseTensor:
    """Symmetry operator action of ``a`` on ``T``; a left action, a(bT) = (ab)T."""
    if a.degree != T.order:
        raise ValueError(f"element of degree {a.degree} cannot act on a tensor of order {T.order}")
    coeffs, den = _integer_form(a._terms)
    # accumulate over a common denominator in Python ints, divide once at the end
    entries = T.array.ravel()
    t_den = lcm(*(v.denominator for v in entries))
    nums = np.array([v.numerator * (t_den // v.denominator) for v in entries], dtype=object)
    nums = nums.reshape(T.array.shape)
    acc = np.zeros(T.array.shape, dtype=object)
    for key, c in coeffs.items():
        # R[i] = T[i_p(1), ..., i_p(r)] is the transpose by p^{-1}
        acc = acc + c * np.transpose(nums, _inverse_key(key))
    total = den * t_den
    out = np.array([Fraction(int(v), total) for v in acc.ravel()], dtype=object)
    return DenseTensor._wrap(out.reshape(T.array.shape))


def _evaluate(T: DenseTensor, vectors: Sequence) -> Fraction:
    """T(v_1, ..., v_r) for coordinate vectors or 1-based basis selectors."""
    if all(isinstance(v, (int, np.integer)) for v in vectors):
        return T[tuple(int(v) for v in vectors)]
    arr = T.array
    for v in vectors:
        if isinstance(v, (int, np.integer)):
            arr = arr[int(v) - 1]
            continue
        if len(v) != T.dim:
            raise ValueError(f"vector of length {len(v)} in dimension {T.dim}")
        coords = np.array([Fraction(x) for x in v], dtype=object)
        arr = np.tensordot(coords, arr, axes=(0, 0))
    return Fraction(np.asarray(arr, dtype=object).item())


def group_element_of(T: DenseTensor, b: Sequence) -> GroupAlgebraElement:
    """T_b = Σ_p T(v_p(1), ..., v_p(r)) p for an r-tuple ``b`` of vectors.

    Entries of ``b`` are either 1-based basis indices or coordinate vectors.
    """
    r = T.order
    if len(b) != r:
        raise ValueError(f"need {r} vectors, got {len(b)}")
    terms = {}
    for key in _itertools_permutations(range(r)):
        value = _evaluate(T, [b[key[k]] for k in range(r)])
        if value:
            terms[key] = value
    return GroupAlgebraElement._raw(r, terms)


def symmetrize(T: DenseTensor) -> DenseTensor:
    return apply(GroupAlgebraElement.group_sum(T.order, scale=Fraction(1, factorial(T.order))), T)


def antisymmetrize(T: DenseTensor) -> DenseTensor:
    return apply(
        GroupAlgebraElement.group_sum(T.order, signed=True, scale=Fraction(1, factorial(T.order))), T
    )


def tensor_product(X: DenseTensor, Y: DenseTensor) -> DenseTensor:
    if X.dim != Y.dim:
        raise ValueError(f"dimension mismatch: {X.dim} vs {Y.dim}")
    _check_shape(X.order + Y.order, X.dim)
    return DenseTensor._wrap(np.multiply.outer(X.array, Y.array))


def symmetric_tensor(order: int, dim: int, rng) -> DenseTensor:
    """A random fully symmetric tensor (symmetrized integer draw)."""
    return symmetrize(DenseTensor.random(order, dim, rng))


def alternating_tensor(order: int, dim: int, rng) -> DenseTensor:
    return antisymmetrize(DenseTensor.random(order, dim, rng))


def nabla_surrogate(kind: str, r: int, d: int, seed) -> DenseTensor:
    """An order r+1 tensor with the index symmetry of ∇S (or ∇A) at a point.

    Any order r+1 tensor is the covariant derivative at a point of some tensor
    field, so the symmetry class is swept by projecting a random draw with
    ``e_s*`` (``e_a*``).
    """
    if d < 2:
        raise ValueError("dimension must be >= 2")
    e = _kind_idempotent(kind, r)
    return apply(star(e), DenseTensor.random(r + 1, d, seed))


def _kind_idempotent(kind: str, r: int) -> GroupAlgebraElement:
    if kind == "symmetric":
        return symmetrizer_e_s(r)
    if kind == "alternating":
        return antisymmetrizer_e_a(r)
    raise ValueError(f"kind must be 'symmetric' or 'alternating', got {kind!r}")


def u_tensor(kind: str, d: int, seed) -> DenseTensor:
    """U = h*(∇T): ∇S - sym(∇S) for ``symmetric``, ∇A - dA for ``alternating`` (order 3)."""
    h = h_component(2, signed=(kind == "alternating"))
    return apply(star(h), nabla_surrogate(kind, 2, d, seed))


def build_cdc_candidate(first: DenseTensor, second: DenseTensor) -> DenseTensor:
    """y_{t'}*(first ⊗ second) with t' = [[1,3,5],[2,4]]."""
    if sorted((first.order, second.order)) != [2, 3]:
        raise ValueError(
            f"need one order-2 and one order-3 factor, got orders {first.order} and {second.order}"
        )
    if first.dim < 2:
        raise ValueError("dimension must be >= 2")
    return apply(star(young_symmetrizer(CDC_TABLEAU)), tensor_product(first, second))


def verify_cdc_identities(R: DenseTensor) -> dict[str, bool]:
    """Check the five defining relations of an algebraic covariant derivative curvature tensor.

    Uses indices (i j k l m): R = -R_jiklm = -R_ijlkm = R_klijm,
    R_ijklm + R_iklj m + R_iljkm = 0 and R_ijklm + R_ijlmk + R_ijmkl = 0.
    """
    if R.order != 5:
        raise ValueError(f"need an order-5 tensor, got order {R.order}")
    A = R.array

    def view(*perm):
        # view(a,b,c,d,e)[i,j,k,l,m] = R with index slots (i..m) rearranged as given
        return _slot_view(A, perm)

    zero = lambda x: not np.any(x != 0)
    return {
        "antisym_ij": zero(A + view("j", "i", "k", "l", "m")),
        "antisym_kl": zero(A + view("i", "j", "l", "k", "m")),
        "pair_symmetry": zero(A - view("k", "l", "i", "j", "m")),
        "first_bianchi": zero(A + view("i", "k", "l", "j", "m") + view("i", "l", "j", "k", "m")),
        "second_bianchi": zero(A + view("i", "j", "l", "m", "k") + view("i", "j", "m", "k", "l")),
    }


def _slot_view(A: np.ndarray, letters: Sequence[str]) -> np.ndarray:
    """Array V with V[i,j,k,l,m] = A[letters evaluated at (i,j,k,l,m)]."""
    names = "ijklm"
    # slot s of A receives the free index names.index(letters[s]); V = transpose by the inverse
    src = [names.index(c) for c in letters]
    axes = [0] * 5
    for s, free in enumerate(src):
        axes[free] = s
    return np.transpose(A, axes)


def cdc_candidate(kind: str, dim: int, seed: int, u_kind: str = "symmetric") -> DenseTensor:
    """Build one of the generator types SU, US, AU, UA, SS', S'S from seeded random inputs."""
    rng = np.random.default_rng(seed)
    S = symmetric_tensor(2, dim, rng)
    A = alternating_tensor(2, dim, rng)
    S3 = symmetric_tensor(3, dim, rng)
    U = u_tensor(u_kind, dim, rng)
    factors = {
        "SU": (S, U),
        "US": (U, S),
        "AU": (A, U),
        "UA": (U, A),
        "SS'": (S, S3),
        "S'S": (S3, S),
    }
    if kind not in factors:
        raise ValueError(f"unknown candidate type {kind!r}; choose from {sorted(factors)}")
    return build_cdc_candidate(*factors[kind])
