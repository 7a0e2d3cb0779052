"""Flip-symmetry offsets of small iterated plethysms, extended mode included.

Lists every chain of row and column shapes up to a degree bound whose
hook+column part is nonzero, with its standard and extended offsets and
whether every gamma row is a symmetric sequence.
"""

import argparse
import itertools

from plethy.alphabet import eval_chain_on_1mxmy, hc_extract
from plethy.analytics import is_symmetric
from plethy.flip import find_offsets
from plethy.partitions import hook_column, hook_column_betas
from plethy.plethysm import PlethysmExpression
from plethy.symfunc import SchurExpansion


def shapes(max_part):
    for n in range(2, max_part + 1):
        yield (n,)
        yield (1,) * n


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=16)
    ap.add_argument("--length", type=int, default=3)
    args = ap.parse_args()
    print("chain,degree,offsets,extended_offsets,rows_symmetric")
    for k in range(2, args.length + 1):
        for chain in itertools.product(shapes(args.max_degree // 2 ** (k - 1)), repeat=k):
            expr = PlethysmExpression(chain)
            n = expr.degree
            if n > args.max_degree:
                continue
            table = hc_extract(eval_chain_on_1mxmy(expr), n)
            f = SchurExpansion(n, {hook_column(n, b, g): c for (b, g), c in table.items()})
            if not f.terms:
                continue
            rows = all(is_symmetric([table[(b, g)] for b in hook_column_betas(n, g)])
                       for g in range(n))
            std = find_offsets(f)
            ext = [r for r in find_offsets(f, extended=True) if r < 2]
            print(f'"{expr}",{n},"{std}","{ext}",{rows}')


if __name__ == "__main__":
    main()
