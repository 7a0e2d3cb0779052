"""``plethy`` command line.

Exit codes: 0 success, 1 other error, 2 parse error, 3 verification
failure or engine disagreement, 4 capability refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from . import alphabet as alpha
from . import clear_caches
from .analytics import analyze, histogram_csv
from .closed_forms import langley_remmel, thm_s2_sb_sa, thm_sc_s2_sa
from .expr import DegreeError, ParseError, as_chain, parse, to_alphabet, to_pseries
from .flip import HCSequence, find_offsets, hc_sequence
from .partitions import format_partition, hook_column
from .plethysm import PlethysmExpression, _iterated, hc_coefficients, hc_expansion
from .symfunc import SchurExpansion, p_to_schur
from .verify import SUITES, run_suite, worker_count

FULL_EXPANSION_LIMIT = 24
ORACLE_CROSSCHECK_LIMIT = 24

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_VERIFY, EXIT_REFUSED = 0, 1, 2, 3, 4


class Refusal(Exception):
    """Requested computation is outside what the chosen path supports."""


class Mismatch(Exception):
    """Two engines disagree."""


# -- rendering ----------------------------------------------------------------

def render_expansion(f: SchurExpansion, fmt: str) -> str:
    if fmt == "json":
        return f.to_json()
    if fmt == "csv":
        rows = ["partition,coefficient"]
        rows += [f'"{format_partition(lam)}",{c}' for lam, c in f.items()]
        return "\n".join(rows)
    if not f.terms:
        return "0"
    return ", ".join(f"s{format_partition(lam)}:{c}" for lam, c in f.items())


def render_sequence(seq: HCSequence, fmt: str) -> str:
    if fmt == "json":
        return seq.to_json()
    if fmt == "csv":
        return "n,gamma," + ",".join(f"b{i}" for i in range(len(seq))) + "\n" + seq.to_csv_row()
    return "(" + ",".join(str(v) for v in seq) + ")"


# -- engines ------------------------------------------------------------------

def formula_for(chain: Optional[PlethysmExpression]):
    """The closed formula matching a row chain, or None."""
    if chain is None or any(len(lam) != 1 for lam in chain.chain):
        return None
    rows = [lam[0] for lam in chain.chain]
    if len(rows) == 2 and min(rows) >= 2:
        b, a = rows
        return langley_remmel(a, b)
    if len(rows) == 3 and min(rows) >= 2:
        c, b, a = rows
        if c == 2:
            return thm_s2_sb_sa(a, b)
        if b == 2:
            return thm_sc_s2_sa(a, c)
    return None


def sequence_by(engine: str, node, gamma: int) -> HCSequence:
    n = node.degree
    if gamma < 0 or gamma >= max(n, 1):
        raise ValueError(f"gamma must lie in [0, {n - 1}] for degree {n}")
    if engine == "oracle":
        chain = as_chain(node)
        return hc_coefficients(chain if chain is not None else to_pseries(node), gamma)
    if engine == "alphabet":
        return alpha.hc_sequence_from_poly(to_alphabet(node), n, gamma)
    out = formula_for(as_chain(node))
    if out is None:
        raise Refusal("formula engine covers only s_b o s_a, s_2 o s_b o s_a and "
                      "s_c o s_2 o s_a with row parameters >= 2")
    return hc_sequence(out.to_schur(), gamma)


def hc_part_alphabet(node) -> SchurExpansion:
    n = node.degree
    table = alpha.hc_extract(to_alphabet(node), n)
    return SchurExpansion(n, {hook_column(n, b, g): c for (b, g), c in table.items()})


# -- commands -------------------------------------------------------------------

def cmd_expand(args) -> int:
    node = parse(args.expr)
    n = node.degree
    if args.hc_only or args.gamma is not None:
        chain = as_chain(node)
        f = hc_expansion(chain if chain is not None else to_pseries(node), args.gamma)
    else:
        if n > FULL_EXPANSION_LIMIT and not args.force:
            raise Refusal(f"full expansion of degree {n} > {FULL_EXPANSION_LIMIT} "
                          "needs --force (or use --hc-only)")
        f = p_to_schur(to_pseries(node))
    print(render_expansion(f, args.format))
    return EXIT_OK


def cmd_hcseq(args) -> int:
    node = parse(args.expr)
    seq = sequence_by(args.engine, node, args.gamma)
    if args.verify:
        others = ["alphabet"]
        if node.degree <= ORACLE_CROSSCHECK_LIMIT:
            others.append("oracle")
        if formula_for(as_chain(node)) is not None:
            others.append("formula")
        for engine in others:
            if engine == args.engine:
                continue
            other = sequence_by(engine, node, args.gamma)
            if other != seq:
                print(render_sequence(seq, args.format))
                raise Mismatch(f"{args.engine} {tuple(seq)} != {engine} {tuple(other)}")
    print(render_sequence(seq, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = SUITES if "all" in args.suite else args.suite
    failed = total = 0
    for suite in suites:
        for result in run_suite(suite, args.max_degree, args.threads):
            total += 1
            failed += not result.passed
            if args.verbose or not result.passed:
                print(result.line())
    print(f"{total - failed}/{total} cases passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def cmd_stats(args) -> int:
    node = parse(args.expr)
    seq = sequence_by(args.engine, node, args.gamma)
    if args.format == "csv":
        sys.stdout.write(histogram_csv(list(seq)))
        return EXIT_OK
    report = analyze(seq, source=f"{args.expr} gamma={args.gamma}")
    print(report.to_json())
    return EXIT_OK


def bench_chain(degree: int) -> PlethysmExpression:
    """s_2 o ... o s_2 o s_m with degree = 2^t m, m odd."""
    if degree < 2:
        raise ValueError("bench degrees must be >= 2")
    rows, m = [], degree
    while m % 2 == 0:
        rows.append(2)
        m //= 2
    if m > 1:
        rows.append(m)
    return PlethysmExpression((r,) for r in rows)


def bench_one(engine: str, chain: PlethysmExpression) -> dict:
    clear_caches()
    start = time.perf_counter()
    if engine == "oracle":
        f = _iterated(tuple(tuple(lam) for lam in chain.chain))
        part = hc_expansion(f)
        peak = len(f)
    else:
        poly = alpha.eval_chain_on_1mxmy(chain)
        table = alpha.hc_extract(poly, chain.degree)
        part = SchurExpansion(chain.degree, {hook_column(chain.degree, b, g): c
                                             for (b, g), c in table.items()})
        peak = len(poly.coeffs)
    elapsed = time.perf_counter() - start
    return {"engine": engine, "degree": chain.degree, "chain": str(chain),
            "seconds": round(elapsed, 4), "peak_terms": peak, "hc_terms": len(part.terms),
            "hc_digest": hash(tuple(part.items()))}


def cmd_bench(args) -> int:
    engines = [e.strip() for e in args.engines.split(",") if e.strip()]
    for e in engines:
        if e not in ("oracle", "alphabet"):
            raise ValueError(f"unknown engine {e!r}")
    degrees = [int(d) for d in args.degrees.split(",") if d.strip()]
    rows = []
    for d in degrees:
        chain = bench_chain(d)
        results = [bench_one(e, chain) for e in engines]
        if len({r["hc_digest"] for r in results}) > 1:
            raise Mismatch(f"engines disagree at degree {d}")
        rows += results
    for r in rows:
        del r["hc_digest"]
    if args.format == "json":
        print(json.dumps(rows))
    else:
        print("engine,degree,chain,seconds,peak_terms,hc_terms")
        for r in rows:
            print(f'{r["engine"]},{r["degree"]},{r["chain"]},{r["seconds"]},'
                  f'{r["peak_terms"]},{r["hc_terms"]}')
    return EXIT_OK


def cmd_flipcheck(args) -> int:
    node = parse(args.expr)
    f = hc_part_alphabet(node)
    offsets = find_offsets(f, extended=args.extended)
    if args.format == "json":
        print(json.dumps({"expr": args.expr, "offsets": offsets,
                          "extended": [r for r in offsets if r < 2]}))
    else:
        labels = [f"{r} (extended)" if r < 2 else str(r) for r in offsets]
        print("offsets: " + (", ".join(labels) if labels else "none"))
    return EXIT_OK


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plethy", description=(
        "Exact iterated plethysms of Schur functions and their hook+column sequences."))
    parser.add_argument("--threads", type=int, default=None,
                        help="worker cap (default: $PLETHYRS_THREADS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="Schur expansion of an expression")
    p.add_argument("expr")
    p.add_argument("--hc-only", action="store_true", help="hook+column part only")
    p.add_argument("--gamma", type=int, default=None, help="restrict to one gamma (implies --hc-only)")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--force", action="store_true",
                   help=f"allow full expansion above degree {FULL_EXPANSION_LIMIT}")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("hcseq", help="hook+column sequence Sigma(f, gamma)")
    p.add_argument("expr")
    p.add_argument("--gamma", type=int, default=0)
    p.add_argument("--engine", choices=("oracle", "alphabet", "formula"), default="alphabet")
    p.add_argument("--verify", action="store_true", help="cross-check every applicable engine")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.set_defaults(func=cmd_hcseq)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append", choices=SUITES + ("all",), required=True)
    p.add_argument("--max-degree", type=int, default=24)
    p.add_argument("-v", "--verbose", action="store_true", help="print passing cases too")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="shape statistics of a hook+column sequence")
    p.add_argument("expr")
    p.add_argument("--gamma", type=int, default=0)
    p.add_argument("--engine", choices=("oracle", "alphabet", "formula"), default="alphabet")
    p.add_argument("--format", choices=("json", "csv"), default="json",
                   help="json report or histogram csv")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bench", help="time the hook+column engines")
    p.add_argument("--engines", default="oracle,alphabet")
    p.add_argument("--degrees", default="12,16,32")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("flipcheck", help="flip-symmetry offsets of an expression")
    p.add_argument("expr")
    p.add_argument("--extended", action="store_true", help="also try offsets 0 and 1")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_flipcheck)
    return parser


def main(argv=None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    args = build_parser().parse_args(argv)
    args.threads = worker_count(args.threads)
    try:
        return args.func(args)
    except (ParseError, DegreeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Mismatch as exc:
        print(f"engine mismatch: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except Refusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
