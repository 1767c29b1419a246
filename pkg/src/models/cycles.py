"""
Cycle witnesses and forbidden-family specifications.

A witness certifies a Berge or linear cycle as an alternating sequence of
vertices and edge indices into a host TripleSystem. A FamilySpec lists the
(kind, length) cycles a system must avoid.
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Tuple, Union

from .errors import ValidationError


class CycleKind(Enum):
    """Kinds of hypergraph cycles."""

    BERGE = "berge"
    LINEAR = "linear"

    @property
    def min_length(self) -> int:
        """Shortest admissible cycle of this kind."""
        return 2 if self is CycleKind.BERGE else 3


@dataclass(frozen=True)
class FamilyEntry:
    """One forbidden cycle: its length and kind."""

    length: int
    kind: CycleKind

    def __post_init__(self):
        if self.length < self.kind.min_length:
            raise ValidationError(
                f"{self.kind.value} cycles need length >= {self.kind.min_length}, got {self.length}"
            )

    def __lt__(self, other: "FamilyEntry") -> bool:
        return (self.length, self.kind.value) < (other.length, other.kind.value)

    def __str__(self) -> str:
        return f"{self.kind.value}:{self.length}"


_MACRO = re.compile(r"^c(lin)?(\d+)$", re.IGNORECASE)


@dataclass(frozen=True)
class FamilySpec:
    """
    A family of forbidden cycles.

    Entries are kept sorted by increasing length (Berge before linear at
    equal length) and free of duplicates.
    """

    entries: Tuple[FamilyEntry, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(set(self.entries))))

    @classmethod
    def of(cls, kind: Union[CycleKind, str], lengths: Iterable[int]) -> "FamilySpec":
        """Family with one kind of cycle at the given lengths."""
        kind = CycleKind(kind)
        return cls(tuple(FamilyEntry(int(length), kind) for length in lengths))

    @classmethod
    def berge_upto(cls, k: int) -> "FamilySpec":
        """All Berge cycles of length 2..k with the same parity as k."""
        return cls.of(CycleKind.BERGE, _same_parity(k, CycleKind.BERGE.min_length))

    @classmethod
    def linear_upto(cls, k: int) -> "FamilySpec":
        """All linear cycles of length 3..k with the same parity as k."""
        return cls.of(CycleKind.LINEAR, _same_parity(k, CycleKind.LINEAR.min_length))

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """
        Parse a family specification.

        Grammar: entries separated by ';', each either ``kind:l1,l2,...``
        with kind berge or linear, or a macro ``Ck`` / ``Clink``. The words
        ``none`` and the empty string denote the empty family.

        Raises:
            ValidationError: On unknown kinds, malformed lengths or lengths
                below the kind's minimum
        """
        entries: List[FamilyEntry] = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk or chunk.lower() == "none":
                continue
            macro = _MACRO.match(chunk)
            if macro:
                k = int(macro.group(2))
                family = cls.linear_upto(k) if macro.group(1) else cls.berge_upto(k)
                if not family.entries:
                    raise ValidationError(f"macro {chunk!r} denotes an empty family")
                entries.extend(family.entries)
                continue
            kind_text, sep, lengths_text = chunk.partition(":")
            if not sep:
                raise ValidationError(f"cannot parse family entry {chunk!r}")
            try:
                kind = CycleKind(kind_text.strip().lower())
            except ValueError:
                raise ValidationError(f"unknown cycle kind {kind_text!r}") from None
            try:
                lengths = [int(x) for x in lengths_text.split(",") if x.strip()]
            except ValueError:
                raise ValidationError(f"bad cycle lengths in {chunk!r}") from None
            if not lengths:
                raise ValidationError(f"no lengths given in {chunk!r}")
            entries.extend(FamilyEntry(length, kind) for length in lengths)
        return cls(tuple(entries))

    def format(self) -> str:
        """Inverse of parse, grouping lengths by kind."""
        if not self.entries:
            return "none"
        groups = []
        for kind in CycleKind:
            lengths = [e.length for e in self.entries if e.kind is kind]
            if lengths:
                groups.append(f"{kind.value}:{','.join(str(x) for x in lengths)}")
        return ";".join(groups)

    def union(self, other: "FamilySpec") -> "FamilySpec":
        """Family forbidding everything either family forbids."""
        return FamilySpec(self.entries + other.entries)

    def without(self, kind: CycleKind, length: int) -> "FamilySpec":
        """Family with one entry removed."""
        return FamilySpec(tuple(e for e in self.entries if e != FamilyEntry(length, kind)))

    def __iter__(self) -> Iterator[FamilyEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, entry: object) -> bool:
        return entry in self.entries

    def __str__(self) -> str:
        return self.format()


def _same_parity(k: int, lowest: int) -> List[int]:
    start = lowest if lowest % 2 == k % 2 else lowest + 1
    return list(range(start, k + 1, 2))


@dataclass(frozen=True)
class BergeCycleWitness:
    """
    A Berge cycle v1, h1, v2, h2, ..., vk, hk in a host system.

    Attributes:
        vertices: v1..vk
        edge_indices: h1..hk, indices into the host's canonical edge list
    """

    vertices: Tuple[int, ...]
    edge_indices: Tuple[int, ...]

    kind = CycleKind.BERGE

    def __post_init__(self):
        if len(self.vertices) != len(self.edge_indices):
            raise ValidationError("a cycle needs as many edges as vertices")
        if len(self.vertices) < self.kind.min_length:
            raise ValidationError(
                f"{self.kind.value} cycles need length >= {self.kind.min_length}"
            )

    @property
    def k(self) -> int:
        """Cycle length."""
        return len(self.vertices)


@dataclass(frozen=True)
class LinearCycleWitness(BergeCycleWitness):
    """A linear cycle: consecutive edges meet exactly in the basic vertex."""

    kind = CycleKind.LINEAR


CycleWitness = Union[BergeCycleWitness, LinearCycleWitness]


def make_witness(kind: CycleKind, vertices: Iterable[int], edge_indices: Iterable[int]) -> CycleWitness:
    """Build a witness of the given kind."""
    cls = LinearCycleWitness if kind is CycleKind.LINEAR else BergeCycleWitness
    return cls(tuple(vertices), tuple(edge_indices))
