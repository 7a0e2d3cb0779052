"""Exact iterated plethysms of Schur functions, hook+column sequences and the flip."""

from .partitions import (
    HookColumnShape,
    Partition,
    hook_column,
    hook_column_decompose,
    parse_partition,
    partitions_of,
    two_sign,
)
from .symfunc import PSeries, SchurExpansion, p_to_schur, schur_to_p
from .plethysm import PlethysmExpression, chain_of, hc_coefficients, iterated
from .flip import HCSequence, find_offsets, flip, flip_via_tiling, is_flip_symmetric
from .alphabet import eval_chain_on_1mxmy, hc_extract, hc_sequence_alphabet

__version__ = "0.1.0"


def clear_caches():
    """Drop every memo table (for cold-start timings)."""
    from . import alphabet, partitions, plethysm, symfunc

    for fn in (alphabet._eval_p, alphabet._eval_chain, partitions.partition_count,
               plethysm._iterated, symfunc._character, symfunc._schur_to_p,
               symfunc._strips_added):
        fn.cache_clear()
