"""Idempotents of the one-box induction S_r -> S_{r+1}.

``e_s`` / ``e_a`` (anti)symmetrize over the copy of S_r fixing r+1,
``f_s`` / ``f_a`` over all of S_{r+1}, and ``h = e - f`` is the remaining
primitive piece.  :func:`decompose` splits any embedded primitive
idempotent along the frames reachable by adding one box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ._limits import check_degree
from .algebra import (
    GroupAlgebraElement,
    add,
    embed,
    is_idempotent,
    left_ideal_dimension,
    multiply,
)
from .characters import central_idempotent
from .dft import extract_component
from .permutation import transposition
from .young import Partition, add_one_box, as_partition, dimension


def _check_r(r: int) -> None:
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    check_degree(r + 1, "branching idempotents")


def symmetrizer_e_s(r: int) -> GroupAlgebraElement:
    _check_r(r)
    return embed(GroupAlgebraElement.group_sum(r, scale=Fraction(1, factorial(r))))


def antisymmetrizer_e_a(r: int) -> GroupAlgebraElement:
    _check_r(r)
    return embed(GroupAlgebraElement.group_sum(r, signed=True, scale=Fraction(1, factorial(r))))


def full_symmetrizer_f(r: int, signed: bool = False) -> GroupAlgebraElement:
    """f_s (or f_a when ``signed``): the normalized (signed) sum over S_{r+1}."""
    _check_r(r)
    return GroupAlgebraElement.group_sum(r + 1, signed=signed, scale=Fraction(1, factorial(r + 1)))


def h_component(r: int, signed: bool = False) -> GroupAlgebraElement:
    """h_s = e_s - f_s, or h_a = e_a - f_a when ``signed``."""
    e = antisymmetrizer_e_a(r) if signed else symmetrizer_e_s(r)
    return e - full_symmetrizer_f(r, signed)


def idempotent_triple(r: int, signed: bool = False) -> dict[str, GroupAlgebraElement]:
    e = antisymmetrizer_e_a(r) if signed else symmetrizer_e_s(r)
    f = full_symmetrizer_f(r, signed)
    return {"e": e, "f": f, "h": e - f}


def exclusion_idempotent() -> GroupAlgebraElement:
    """f = ½(id - (1 3)) - ⅙ Σ sign(p) p in Q[S_3]; its right ideal is the one
    excluded for the U-type generators of covariant derivative curvature tensors."""
    z = GroupAlgebraElement(3, {(1, 2, 3): Fraction(1, 2), transposition(3, 1, 3): Fraction(-1, 2)})
    return z - GroupAlgebraElement.group_sum(3, signed=True, scale=Fraction(1, 6))


@dataclass(frozen=True)
class BranchingDecomposition:
    source: GroupAlgebraElement
    frames: tuple[Partition, ...]
    components: dict[Partition, GroupAlgebraElement]

    def total(self) -> GroupAlgebraElement:
        acc = GroupAlgebraElement.zero(self.source.degree)
        for mu in self.frames:
            acc = add(acc, self.components[mu])
        return acc

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "frames": [list(mu) for mu in self.frames],
            "components": {
                "[" + ",".join(map(str, mu)) + "]": self.components[mu].to_json()
                for mu in self.frames
            },
        }

    @classmethod
    def from_json(cls, data) -> BranchingDecomposition:
        frames = tuple(as_partition(mu) for mu in data["frames"])
        components = {}
        for key, elem in data["components"].items():
            mu = as_partition(int(x) for x in key.strip("[]").split(","))
            components[mu] = GroupAlgebraElement.from_json(elem)
        return cls(GroupAlgebraElement.from_json(data["source"]), frames, components)


def decompose(e: GroupAlgebraElement, shape: Partition, method: str = "fourier") -> BranchingDecomposition:
    """Split the embedding of a primitive idempotent of type ``shape``.

    The component at μ is ``embed(e) · e_μ``; ``method="fourier"`` computes it
    by the block projection, ``method="characters"`` by the product with the
    central idempotent.  Inputs that are not primitive idempotents of the
    stated type are rejected, since the split is multiplicity-free only then.
    """
    shape = as_partition(shape)
    r = e.degree
    if sum(shape) != r:
        raise ValueError(f"frame {list(shape)} is not a partition of the degree {r}")
    check_degree(r + 1, "decompose")
    if method not in ("fourier", "characters"):
        raise ValueError(f"unknown method {method!r}")
    if not is_idempotent(e):
        raise ValueError("input element is not idempotent")
    dim = left_ideal_dimension(e)
    if dim != dimension(shape):
        raise ValueError(
            f"left ideal of the input has dimension {dim}, a primitive idempotent of "
            f"frame {list(shape)} needs {dimension(shape)}"
        )
    if multiply(e, central_idempotent(shape)) != e:
        raise ValueError(f"input idempotent does not belong to frame {list(shape)}")
    source = embed(e)
    frames = tuple(add_one_box(shape))
    components = {}
    for mu in frames:
        if method == "fourier":
            components[mu] = extract_component(source, mu)
        else:
            components[mu] = multiply(source, central_idempotent(mu))
    return BranchingDecomposition(source, frames, components)
