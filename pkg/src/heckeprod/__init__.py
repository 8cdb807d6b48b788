"""Exact combinatorics of induction products of two evaluation modules.

The package computes, from two charged partitions: the two-row symbol of
the pair, its standard ancestors under pair swaps, the graded expansion of
the corresponding product of quantum flag minors on the dual canonical
basis, the multisegments labelling the composition factors of the
induction product (each of multiplicity one), and the Drinfeld polynomials
of the surviving tensor-product factors over the quantum affine algebra of
a given rank bound.
"""

from .errors import DomainError, IntegrityError
from .multisegments import (
    Multisegment,
    Segment,
    max_segment_length,
    multisegment_of_symbol,
    shift,
)
from .partitions import (
    BetaRow,
    ChargedPartition,
    Partition,
    beta_row,
    content_count,
    from_beta,
    make_partition,
    multisegment_of,
)
from .products import (
    EvaluationModuleSpec,
    Expansion,
    composition_factors,
    expansion,
    is_irreducible,
    normalize_inputs,
)
from .schurweyl import (
    ZERO_MODULE,
    DrinfeldData,
    ZeroModule,
    drinfeld,
    tensor_factors,
)
from .symbols import (
    PairStructure,
    Symbol,
    is_standard,
    n_swaps,
    pair_structure,
    standard_ancestors,
    swap_orbit,
    symbol_of,
)

__version__ = "0.1.0"

__all__ = [
    "BetaRow",
    "ChargedPartition",
    "DomainError",
    "DrinfeldData",
    "EvaluationModuleSpec",
    "Expansion",
    "IntegrityError",
    "Multisegment",
    "PairStructure",
    "Partition",
    "Segment",
    "Symbol",
    "ZERO_MODULE",
    "ZeroModule",
    "beta_row",
    "composition_factors",
    "content_count",
    "drinfeld",
    "expansion",
    "from_beta",
    "is_irreducible",
    "is_standard",
    "make_partition",
    "max_segment_length",
    "multisegment_of",
    "multisegment_of_symbol",
    "n_swaps",
    "normalize_inputs",
    "pair_structure",
    "shift",
    "standard_ancestors",
    "swap_orbit",
    "symbol_of",
    "tensor_factors",
]
