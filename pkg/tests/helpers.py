"""Shared fixtures-by-hand: frozen worked examples and random generators."""

from __future__ import annotations

import random

from heckeprod import (
    ChargedPartition,
    EvaluationModuleSpec,
    Multisegment,
    Partition,
    Segment,
    Symbol,
    make_partition,
    standard_ancestors,
    symbol_of,
)


def mseg(*spans: tuple[int, int]) -> Multisegment:
    return Multisegment(tuple(Segment(a, b) for a, b in spans))


# The worked six-cell/five-cell pair used throughout: partitions (1,4) at
# exponent 2 and (1,2,3) at exponent 4.  Its symbol has four standard
# ancestors; their multisegment labels are frozen below.
E1 = EvaluationModuleSpec(make_partition([1, 4]), 2)
E2 = EvaluationModuleSpec(make_partition([1, 2, 3]), 4)
SIGMA = Symbol((1, 3, 5, 7), (2, 6))

M1 = mseg((1, 1), (2, 5))
M2 = mseg((2, 2), (3, 4), (4, 6))
N1 = mseg((1, 2), (2, 6), (3, 4), (4, 5))
N2 = mseg((1, 2), (2, 5), (3, 4), (4, 6))
N3 = mseg((1, 1), (2, 2), (2, 6), (3, 4), (4, 5))
N4 = mseg((1, 1), (2, 2), (2, 5), (3, 4), (4, 6))

S1 = Symbol((1, 2, 5, 6), (3, 7))
S2 = Symbol((1, 2, 5, 7), (3, 6))
S3 = Symbol((1, 3, 5, 6), (2, 7))
S4 = SIGMA

ANCESTOR_COUNTS = {S1: 2, S2: 1, S3: 1, S4: 0}
ANCESTOR_LABELS = {S1: N1, S2: N2, S3: N3, S4: N4}


def random_partition(rng: random.Random, max_weight: int) -> Partition:
    budget = rng.randint(0, max_weight)
    parts = []
    while budget > 0:
        part = rng.randint(1, budget)
        parts.append(part)
        budget -= part
    return make_partition(parts)


def random_charged_partition(
    rng: random.Random, max_weight: int = 6, max_charge: int = 6
) -> ChargedPartition:
    while True:
        p = random_partition(rng, max_weight)
        if len(p) <= max_charge:
            return ChargedPartition(p, rng.randint(max(1, len(p)), max_charge))


def random_spec_pair(
    rng: random.Random, max_weight: int = 6, max_charge: int = 6
) -> tuple[EvaluationModuleSpec, EvaluationModuleSpec]:
    while True:
        c1 = random_charged_partition(rng, max_weight, max_charge)
        c2 = random_charged_partition(rng, max_weight, max_charge)
        if c1.partition.weight + c2.partition.weight <= max_weight:
            return (
                EvaluationModuleSpec(c1.partition, c1.charge),
                EvaluationModuleSpec(c2.partition, c2.charge),
            )


def random_symbol(rng: random.Random, max_weight: int = 6, max_charge: int = 5) -> Symbol:
    c1 = random_charged_partition(rng, max_weight, max_charge)
    c2 = random_charged_partition(rng, max_weight, max_charge)
    if (c1.charge, c1.partition.parts) > (c2.charge, c2.partition.parts):
        c1, c2 = c2, c1
    return symbol_of(c1, c2)


def random_standard_symbol(rng: random.Random, max_weight: int = 6) -> Symbol:
    """A uniformly-random ancestor of a random symbol; always standard."""
    ancestors = standard_ancestors(random_symbol(rng, max_weight))
    sym, _ = ancestors[rng.randrange(len(ancestors))]
    return sym


def random_multisegment(rng: random.Random, max_segments: int = 5) -> Multisegment:
    spans = []
    for _ in range(rng.randint(0, max_segments)):
        start = rng.randint(1, 6)
        spans.append((start, start + rng.randint(0, 5)))
    return mseg(*spans)
