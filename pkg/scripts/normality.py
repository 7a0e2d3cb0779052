"""Histogram CSVs and chi-square fits for Sigma(s_2^k, gamma).

Writes one ``beta,count,expected`` file per (k, gamma) into --out and
prints the fit summary.  Fits need at least four bins after tail merging.
"""

import argparse
from pathlib import Path

from plethy.alphabet import eval_chain_on_1mxmy, hc_extract
from plethy.analytics import FitUnavailable, gaussian_fit, histogram_csv, is_log_concave, is_unimodal
from plethy.partitions import hook_column_betas
from plethy.plethysm import chain_of


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=5)
    ap.add_argument("--gammas", default="0,1,2")
    ap.add_argument("--out", type=Path, default=Path("normality_out"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    print("k,gamma,length,unimodal,log_concave,chi2,dof,p_value")
    for k in range(2, args.kmax + 1):
        n = 2 ** k
        table = hc_extract(eval_chain_on_1mxmy(chain_of(*([2] * k))), n)
        for gamma in (int(g) for g in args.gammas.split(",")):
            if gamma >= n:
                continue
            seq = [table[(b, gamma)] for b in hook_column_betas(n, gamma)]
            if not any(seq):
                continue
            (args.out / f"s2pow{k}_gamma{gamma}.csv").write_text(histogram_csv(seq))
            try:
                fit = gaussian_fit(seq)
                stats = f"{fit.chi_square_statistic:.4f},{fit.degrees_of_freedom},{fit.p_value:.5f}"
            except FitUnavailable:
                stats = ",,"
            print(f"{k},{gamma},{len(seq)},{is_unimodal(seq)},{bool(is_log_concave(seq))},{stats}")


if __name__ == "__main__":
    main()
