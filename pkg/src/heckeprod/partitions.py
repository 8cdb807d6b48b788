"""Charged partitions, beta numbers, and row multisegments.

Partitions are stored with parts in weakly *increasing* order; every
formula below indexes parts that way.  A charge is an integer ``a`` at
least the number of parts (and at least 1): the partition is padded with
``a - len(parts)`` leading zero parts, and the padded sequence is encoded
bijectively by its beta numbers ``beta_j = j + lambda_j``, a strictly
increasing row of positive integers.

The rows of the charged Young diagram give the row multisegment: row ``k``
of the padded partition contributes the segment ``[k, k + lambda_k - 1]``
when ``lambda_k >= 1``.  ``content_count`` counts, without building any
diagram, how many of those rows cover a given integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError
from .multisegments import Multisegment, Segment


@dataclass(frozen=True)
class Partition:
    """Weakly increasing positive parts.  Use :func:`make_partition` to
    sort and strip zeros from raw input."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if p < 1:
                raise DomainError(f"partition parts must be positive, got {p}")
        if any(parts[i] > parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"parts must be weakly increasing, got {parts}")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def make_partition(raw: Iterable[int]) -> Partition:
    """Build a partition from arbitrary non-negative integers: zeros are
    stripped, the rest sorted weakly increasing."""
    parts = sorted(int(x) for x in raw)
    if parts and parts[0] < 0:
        raise DomainError(f"partition parts must be non-negative, got {parts[0]}")
    return Partition(tuple(p for p in parts if p > 0))


@dataclass(frozen=True)
class ChargedPartition:
    """A partition together with a charge ``a >= max(1, len(partition))``."""

    partition: Partition
    charge: int

    def __post_init__(self):
        if not isinstance(self.partition, Partition):
            object.__setattr__(self, "partition", Partition(tuple(self.partition)))
        object.__setattr__(self, "charge", int(self.charge))
        if self.charge < 1:
            raise DomainError(f"charge must be positive, got {self.charge}")
        if self.charge < len(self.partition):
            raise DomainError(
                f"charge {self.charge} is below the partition length "
                f"{len(self.partition)}"
            )

    def padded_parts(self) -> tuple[int, ...]:
        """The parts padded with leading zeros to length ``charge``."""
        pad = self.charge - len(self.partition)
        return (0,) * pad + self.partition.parts

    def __str__(self) -> str:
        return f"({self.partition}, a={self.charge})"


@dataclass(frozen=True, order=True)
class BetaRow:
    """Strictly increasing row of positive integers."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if entries and entries[0] < 1:
            raise DomainError(f"beta numbers must be positive, got {entries[0]}")
        if any(entries[i] >= entries[i + 1] for i in range(len(entries) - 1)):
            raise DomainError(f"beta numbers must strictly increase, got {entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def beta_row(cp: ChargedPartition) -> BetaRow:
    """Beta numbers ``beta_j = j + lambda_j`` of the padded partition."""
    return BetaRow(
        tuple(j + part for j, part in enumerate(cp.padded_parts(), start=1))
    )


def from_beta(row: BetaRow | Iterable[int]) -> ChargedPartition:
    """Inverse of :func:`beta_row`: the unique charged partition whose beta
    numbers are ``row``.  The charge is the row length."""
    if not isinstance(row, BetaRow):
        row = BetaRow(tuple(row))
    if len(row) == 0:
        raise DomainError("an empty beta row has no positive charge")
    parts = tuple(e - j for j, e in enumerate(row, start=1))
    return ChargedPartition(Partition(tuple(p for p in parts if p > 0)), len(row))


def content_count(cp: ChargedPartition, j: int) -> int:
    """Number of rows of the charged Young diagram whose cells contain the
    integer ``j``, i.e. the rows ``k`` with ``k <= j <= k + lambda_k - 1``."""
    count = 0
    for k, part in enumerate(cp.padded_parts(), start=1):
        if part >= 1 and k <= j <= k + part - 1:
            count += 1
    return count


def multisegment_of(cp: ChargedPartition) -> Multisegment:
    """Row multisegment of the charged partition: one segment
    ``[k, k + lambda_k - 1]`` per non-empty padded row."""
    return Multisegment(
        tuple(
            Segment(k, k + part - 1)
            for k, part in enumerate(cp.padded_parts(), start=1)
            if part >= 1
        )
    )
