"""How Sigma(s_c o s_b o s_2, 0) settles as c grows, against the guessed limits.

For b = 3 the guess is A000098, for b = 4 it is A058696.  The script prints
the rows, the length of the prefix shared with the next row, and the first
index where the settled prefix leaves the reference sequence.
"""

import argparse

from plethy.alphabet import hc_sequence_alphabet
from plethy.closed_forms import oeis
from plethy.plethysm import chain_of

REFERENCE = {3: "A000098", 4: "A058696"}


def common_prefix(a, b):
    n = 0
    while n < min(len(a), len(b)) and a[n] == b[n]:
        n += 1
    return n


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cmax", type=int, default=12)
    ap.add_argument("--show", type=int, default=12, help="entries printed per row")
    args = ap.parse_args()
    for b, ref_id in REFERENCE.items():
        rows = [tuple(hc_sequence_alphabet(chain_of(c, b, 2), 0)) for c in range(1, args.cmax + 2)]
        ref = oeis(ref_id, args.show)
        print(f"b={b}, reference {ref_id}: {tuple(ref)}")
        for c, (row, nxt) in enumerate(zip(rows, rows[1:]), start=1):
            print(f"  c={c:2}  stable={common_prefix(row, nxt):2}  {row[:args.show]}")
        settled = rows[-2][:common_prefix(rows[-2], rows[-1])]
        split = common_prefix(settled, ref)
        if split < min(len(settled), len(ref)):
            print(f"  settled prefix leaves {ref_id} at index {split}: "
                  f"{settled[split]} vs {ref[split]}")
        else:
            print(f"  settled prefix of length {len(settled)} agrees with {ref_id}")


if __name__ == "__main__":
    main()
