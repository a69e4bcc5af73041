"""Which Young symmetrizer idempotents reproduce or annihilate a given idempotent.

For an idempotent h and a tableau t the verdict is ``reproduces`` when
h·e_t = h, ``annihilates`` when h·e_t = 0 and ``neither`` otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import Iterable

import flint

from ._limits import check_degree
from .algebra import GroupAlgebraElement, is_idempotent, multiply
from .branching import h_component, exclusion_idempotent
from .dft import fourier_block
from .young import (
    Partition,
    Tableau,
    all_tableaux,
    as_partition,
    normalized_idempotent,
    partitions_of,
    standard_tableaux,
)

REPRODUCES = "reproduces"
ANNIHILATES = "annihilates"
NEITHER = "neither"
STATUSES = (REPRODUCES, ANNIHILATES, NEITHER)

# fillings above this degree are classified through Fourier blocks by default
_DIRECT_MAX_DEGREE = 5


@dataclass(frozen=True)
class TableauVerdict:
    tableau: Tableau
    status: str
    standard: bool

    def to_json(self) -> dict:
        return {"tableau": self.tableau.to_json(), "status": self.status, "standard": self.standard}

    @classmethod
    def from_json(cls, data) -> TableauVerdict:
        if data["status"] not in STATUSES:
            raise ValueError(f"unknown status {data['status']!r}")
        return cls(Tableau(data["tableau"]), data["status"], bool(data["standard"]))


def frame_for(r: int, against: str) -> Partition:
    """(2, 1^{r-1}) for h_a and (r, 1) for h_s."""
    if against == "ha":
        return (2,) + (1,) * (r - 1)
    if against == "hs":
        return (r, 1)
    raise ValueError(f"against must be 'ha' or 'hs', got {against!r}")


def target_idempotent(r: int, against: str) -> GroupAlgebraElement:
    frame_for(r, against)
    return h_component(r, signed=(against == "ha"))


class _FourierClassifier:
    """Decides h·e_t = h and h·e_t = 0 blockwise; D is injective so this is exact."""

    def __init__(self, h: GroupAlgebraElement):
        self.h_blocks = {}
        for s in partitions_of(h.degree):
            block = fourier_block(h, s)
            if block != flint.fmpq_mat(block.nrows(), block.ncols()):
                self.h_blocks[s] = block

    def status(self, e: GroupAlgebraElement) -> str:
        reproduces, annihilates = True, True
        for s, hb in self.h_blocks.items():
            prod = hb * fourier_block(e, s)
            if prod != hb:
                reproduces = False
            if prod != flint.fmpq_mat(prod.nrows(), prod.ncols()):
                annihilates = False
        if reproduces and self.h_blocks:
            return REPRODUCES
        if annihilates:
            return ANNIHILATES
        return NEITHER


def _direct_status(h: GroupAlgebraElement, e: GroupAlgebraElement) -> str:
    prod = multiply(h, e)
    if prod == h:
        return REPRODUCES
    if prod.is_zero():
        return ANNIHILATES
    return NEITHER


def _resolve_method(method: str, n: int) -> str:
    if method == "auto":
        return "direct" if n <= _DIRECT_MAX_DEGREE else "fourier"
    if method not in ("direct", "fourier"):
        raise ValueError(f"method must be 'auto', 'direct' or 'fourier', got {method!r}")
    return method


def classify_tableaux(
    h: GroupAlgebraElement, tableaux: Iterable[Tableau], method: str = "auto"
) -> list[TableauVerdict]:
    method = _resolve_method(method, h.degree)
    fourier = _FourierClassifier(h) if method == "fourier" else None
    verdicts = []
    for t in tableaux:
        if t.n != h.degree:
            raise ValueError(f"tableau of size {t.n} does not match degree {h.degree}")
        e = normalized_idempotent(t)
        status = fourier.status(e) if fourier else _direct_status(h, e)
        verdicts.append(TableauVerdict(t, status, t.standard))
    return verdicts


def classify_frame(h: GroupAlgebraElement, shape: Partition, method: str = "auto") -> list[TableauVerdict]:
    """One verdict for every filling of ``shape``, in :func:`all_tableaux` order."""
    shape = as_partition(shape)
    if sum(shape) != h.degree:
        raise ValueError(f"frame {list(shape)} is not a partition of {h.degree}")
    check_degree(h.degree, "classify_frame")
    if not is_idempotent(h):
        raise ValueError("classification needs an idempotent")
    return classify_tableaux(h, all_tableaux(shape), method)


def group_verdicts(verdicts: Iterable[TableauVerdict]) -> dict[str, list[Tableau]]:
    groups = {s: [] for s in STATUSES}
    for v in verdicts:
        groups[v.status].append(v.tableau)
    return groups


def standard_tableau_theorem_check(r: int, method: str = "auto") -> bool:
    """Exactly the lexicographically greatest standard tableau of (2, 1^{r-1})
    reproduces h_a, and every other standard tableau annihilates it."""
    if r < 2:
        raise ValueError("r must be >= 2")
    shape = frame_for(r, "ha")
    tableaux = standard_tableaux(shape)
    verdicts = classify_tableaux(h_component(r, signed=True), tableaux, method)
    *rest, greatest = verdicts
    return greatest.status == REPRODUCES and all(v.status == ANNIHILATES for v in rest)


def hs_negative_check(r: int, method: str = "auto") -> dict[str, bool]:
    """Scan every filling of (r, 1) for tableaux reproducing or annihilating h_s."""
    if r < 2:
        raise ValueError("r must be >= 2")
    check_degree(r + 1, "hs_negative_check")
    h = h_component(r, signed=False)
    groups = group_verdicts(classify_tableaux(h, all_tableaux((r, 1)), method))
    return {"no_reproducer": not groups[REPRODUCES], "no_annihilator": not groups[ANNIHILATES]}


def admissibility_check(h: GroupAlgebraElement) -> bool:
    """True when f·h ≠ h for the degree-3 idempotent f = ½(id - (1 3)) - ⅙ y."""
    if h.degree != 3:
        raise ValueError(f"admissibility is defined in S_3, got degree {h.degree}")
    return multiply(exclusion_idempotent(), h) != h


# --- reference tables -------------------------------------------------------

_HEADER = re.compile(r"\[r=(\d+) (reproduce|annihilate) count=(\d+)\]")
_CELL = re.compile(r"\{([^}]*)\}")


def parse_tableau_listing(lines: Iterable[str]) -> list[Tableau]:
    """Parse side-by-side tableaux: line k of a block holds row k of each tableau."""
    tableaux = []
    block: list[list[list[int]]] = []

    def flush():
        if not block:
            return
        for column in zip(*block):
            tableaux.append(Tableau(column))
        block.clear()

    for line in lines:
        cells = _CELL.findall(line)
        if not cells:
            flush()
            continue
        rows = [[int(x) for x in c.split(",") if x.strip()] for c in cells]
        # a line of multi-entry rows after a block starts a new block
        if block and len(rows[0]) > 1:
            flush()
        block.append(rows)
    flush()
    return tableaux


def load_appendix() -> dict[tuple[int, str], list[Tableau]]:
    """Reference lists keyed by (r, "reproduce" | "annihilate")."""
    text = resources.files("symalg").joinpath("data/appendix.txt").read_text()
    tables = {}
    current, counts, buffer = None, {}, []
    for line in text.splitlines() + ["[end]"]:
        if line.startswith("#"):
            continue
        m = _HEADER.match(line.strip())
        if m or line == "[end]":
            if current is not None:
                tables[current] = parse_tableau_listing(buffer)
                if len(tables[current]) != counts[current]:
                    raise ValueError(
                        f"appendix table {current} lists {len(tables[current])} tableaux, "
                        f"header says {counts[current]}"
                    )
            buffer = []
            if m:
                current = (int(m.group(1)), m.group(2))
                counts[current] = int(m.group(3))
            continue
        buffer.append(line)
    return tables


@dataclass(frozen=True)
class AppendixComparison:
    r: int
    kind: str
    expected: tuple[Tableau, ...]
    computed: tuple[Tableau, ...]

    @property
    def matches(self) -> bool:
        return set(self.expected) == set(self.computed) and len(self.expected) == len(self.computed)


def compare_with_appendix(r: int, method: str = "auto") -> list[AppendixComparison]:
    reference = load_appendix()
    if (r, "reproduce") not in reference:
        raise ValueError(f"no reference table for r = {r}; available: {sorted({k[0] for k in reference})}")
    h = h_component(r, signed=True)
    groups = group_verdicts(classify_frame(h, frame_for(r, "ha"), method))
    return [
        AppendixComparison(r, "reproduce", tuple(reference[r, "reproduce"]), tuple(groups[REPRODUCES])),
        AppendixComparison(r, "annihilate", tuple(reference[r, "annihilate"]), tuple(groups[ANNIHILATES])),
    ]

