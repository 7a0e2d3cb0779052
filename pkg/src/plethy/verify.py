"""Verification sweeps: closed formulas and lemmas against the brute-force oracle.

Every suite yields ``Task`` objects (a module-level function plus its
arguments) so a sweep can be farmed out to worker processes and still be
reported in a fixed order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .alphabet import (
    BivariatePoly,
    eval_on_1mxmy,
    eval_schur_on,
    hook_column_on_1mxmy,
    sub_multiset_count,
)
from .closed_forms import (
    hc_product,
    langley_remmel,
    offset_for,
    p2_hookcolumn,
    thm_s2_sb_sa,
    thm_sc_s2_sa,
)
from .flip import flip, flip_via_tiling, is_flip_symmetric
from .partitions import (
    Partition,
    hook_column_decompose,
    hook_columns_of,
    partitions_of,
    two_sign,
    z_of,
)
from .plethysm import chain_of, hc_coefficients, hc_expansion, iterated, plethysm
from .symfunc import PSeries, SchurExpansion, h_to_p, p_multiply, schur_to_p

SUITES = ("thm13", "thm14", "lr", "p2", "product", "symmetry-thm", "tiling",
          "corollary", "lemmas")


@dataclass(frozen=True)
class Task:
    suite: str
    name: str
    fn: Callable
    args: tuple


@dataclass(frozen=True)
class CaseResult:
    suite: str
    name: str
    passed: bool
    witness: Optional[str] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  witness: {self.witness}" if self.witness else ""
        return f"{status} {self.suite} {self.name}{tail}"


def _diff(expected: SchurExpansion, actual: SchurExpansion) -> Optional[str]:
    """First partition (decreasing lex) where two expansions differ."""
    keys = sorted(expected.support() | actual.support(), reverse=True)
    for lam in keys:
        if expected[lam] != actual[lam]:
            return f"{lam}: expected {expected[lam]}, got {actual[lam]}"
    return None


def _symmetry_witness(f: SchurExpansion, r: int) -> Optional[str]:
    check = is_flip_symmetric(f, r)
    return None if check else f"offset {r} fails at {check.witness}"


# -- case functions (module level so they pickle) ---------------------------

def _case_thm13(a, b):
    formula = thm_s2_sb_sa(a, b).to_schur()
    w = _diff(hc_expansion(chain_of(2, b, a)), formula)
    return w or _symmetry_witness(formula, offset_for(a, b, 2))


def _case_thm14(a, c):
    formula = thm_sc_s2_sa(a, c).to_schur()
    w = _diff(hc_expansion(chain_of(c, 2, a)), formula)
    return w or _symmetry_witness(formula, offset_for(a, 2, c))


def _case_lr(a, b):
    return _diff(hc_expansion(chain_of(b, a)), langley_remmel(a, b).to_schur())


def _case_tail0(a, b):
    seq = hc_coefficients(chain_of(b, a), 0)
    z = (a * b) // 2
    expected = (1,) * b + (0,) * (z - b)
    return None if tuple(seq) == expected else f"{tuple(seq)} != {expected}"


def _case_p2(lam):
    oracle = hc_expansion(plethysm(PSeries.p((2,)), schur_to_p(lam)))
    return _diff(oracle, p2_hookcolumn(lam))


def _case_product(mu, nu):
    n = sum(mu) + sum(nu)
    oracle = hc_expansion(p_multiply(schur_to_p(mu), schur_to_p(nu)))
    return _diff(oracle, hc_product(mu, nu).to_schur()) if n else None


def _case_square(alpha, beta):
    mu = schur_to_p((alpha,) + (2,) * beta)
    p2 = hc_expansion(plethysm(PSeries.p((2,)), mu), 0)
    p11 = hc_expansion(plethysm(PSeries.p((1, 1)), mu), 0)
    return _diff(p2, p11)


def _case_symmetry(a, b, sigma):
    f = iterated(chain_of(b, a))
    r = offset_for(a, b, 1)
    w = _symmetry_witness(hc_expansion(f), r)
    if w:
        return "seed " + w
    return _symmetry_witness(hc_expansion(plethysm(schur_to_p(sigma), f)), 2 * r - 2)


def _case_corollary(sigmas):
    f = iterated(chain_of(3, 2))
    for sigma in reversed(sigmas):
        f = plethysm(schur_to_p(sigma), f)
    k, r = len(sigmas), offset_for(2, 3, 1)
    return _symmetry_witness(hc_expansion(f), 2 ** k * r - 2 ** (k + 1) + 2)


def _case_tiling(n):
    for lam in hook_columns_of(n):
        for r in range(2, lam[0] + 1):
            a, t = flip(r, lam), flip_via_tiling(r, lam)
            if a != t:
                return f"r={r} {lam}: algebraic {a}, tiling {t}"
            if a is None:
                continue
            img = a.image
            if img.weight != n:
                return f"r={r} {lam}: weight changed"
            if hook_column_decompose(img).gamma != hook_column_decompose(lam).gamma:
                return f"r={r} {lam}: gamma changed"
            back = flip(r, img)
            if back is None or back.image != lam:
                return f"r={r} {lam}: not an involution"
            signs = (two_sign(lam), two_sign(img))
            if None not in signs and signs[0] != signs[1]:
                return f"r={r} {lam}: 2-sign changed"
    return None


def _case_alphabet_closed_form(n):
    for lam in hook_columns_of(n):
        shape = hook_column_decompose(lam)
        if shape.alpha < 2:
            continue
        closed = hook_column_on_1mxmy(shape.alpha, shape.beta, shape.gamma)
        if eval_on_1mxmy(schur_to_p(lam)) != closed:
            return f"{lam}"
    return None


def _case_alphabet_vanishing(n):
    for lam in partitions_of(n):
        if len(lam) > 1 and lam[1] >= 3 and eval_on_1mxmy(schur_to_p(lam)):
            return f"{lam} does not vanish"
    return None


def one_minus_both_closed_form(n: int, top: int) -> BivariatePoly:
    """(1-x)(1-y)(1 - (xy)^top)/(1 - xy)."""
    return BivariatePoly({(0, 0): 1, (1, 0): -1}) * BivariatePoly({(0, 0): 1, (0, 1): -1}) \
        * BivariatePoly({(k, k): 1 for k in range(top)})


def _case_one_minus_both(n, top):
    """s_n[1-x-y+xy] against the closed form with exponent ``top``.

    The identity holds with top = n; the printed statement uses n - 1,
    which already fails at n = 2 (s_2 = h_2 gives (1-x)(1-y)(1+xy)).
    """
    alphabet = BivariatePoly({(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1})
    got = eval_schur_on((n,), alphabet)
    if got == one_minus_both_closed_form(n, top):
        return None
    for t in range(n + 2):
        if got == one_minus_both_closed_form(n, t):
            return f"s_{n} matches exponent {t}, not {top}"
    return f"s_{n}: {got}"


def _case_sign_table(n):
    table = {0: 1, 1: -1, 2: -1, 3: 1}
    for lam in hook_columns_of(n):
        gamma = hook_column_decompose(lam).gamma
        sign = two_sign(lam)
        if sign is not None and sign != table[gamma % 4]:
            return f"{lam}: {two_sign(lam)}"
    return None


def _case_character_identity(c, k):
    lhs = PSeries(c)
    for lam in partitions_of(c):
        lhs = lhs + PSeries.p(lam).scale(Fraction(sub_multiset_count(lam, k), z_of(lam)))
    rhs = h_to_p((c - k, k)) if k else h_to_p((c,))
    return None if lhs == rhs else f"c={c}, k={k}"


# -- suites ------------------------------------------------------------------

def _grid(pairs, degree_of, max_degree):
    return [p for p in pairs if degree_of(*p) <= max_degree]


def suite_tasks(suite: str, max_degree: int = 24) -> list[Task]:
    if suite == "thm13":
        pairs = _grid([(a, b) for a in range(2, 13) for b in range(2, 13)],
                      lambda a, b: 2 * a * b, max_degree)
        return [Task(suite, f"s2 o s{b} o s{a}", _case_thm13, (a, b)) for a, b in pairs]
    if suite == "thm14":
        pairs = _grid([(a, c) for a in range(2, 13) for c in range(2, 13)],
                      lambda a, c: 2 * a * c, max_degree)
        return [Task(suite, f"s{c} o s2 o s{a}", _case_thm14, (a, c)) for a, c in pairs]
    if suite == "lr":
        pairs = _grid([(a, b) for a in range(2, 25) for b in range(2, 25)],
                      lambda a, b: a * b, max_degree)
        return [Task(suite, f"s{b} o s{a}", _case_lr, (a, b)) for a, b in pairs]
    if suite == "p2":
        out = []
        for n in range(2, min(10, max_degree // 2) + 1):
            for lam in hook_columns_of(n):
                if lam[0] >= 2:
                    out.append(Task(suite, f"p2 o s{lam}", _case_p2, (lam,)))
        return out
    if suite == "product":
        shapes = [lam for n in range(2, 11) for lam in hook_columns_of(n) if lam[0] >= 2]
        return [Task(suite, f"s{mu} s{nu}", _case_product, (mu, nu))
                for mu in shapes for nu in shapes
                if mu >= nu and sum(mu) + sum(nu) <= min(12, max_degree)]
    if suite == "symmetry-thm":
        out = []
        for a in (2, 3, 4):
            for b in (2, 3):
                if 2 * a * b > max_degree:
                    continue
                for sigma in ((2,), (1, 1)):
                    name = f"s{Partition(sigma)} o s{b} o s{a}"
                    out.append(Task(suite, name, _case_symmetry, (a, b, sigma)))
        return out
    if suite == "corollary":
        out = []
        for k in (1, 2):
            if 6 * 2 ** k > max_degree:
                continue
            for sigmas in _sigma_chains(k):
                name = " o ".join(f"s{Partition(s)}" for s in sigmas) + " o s3 o s2"
                out.append(Task(suite, name, _case_corollary, (sigmas,)))
        return out
    if suite == "tiling":
        return [Task(suite, f"weight {n}", _case_tiling, (n,)) for n in range(1, max_degree + 1)]
    if suite == "lemmas":
        out = [Task(suite, f"hook+column on 1-x-y, weight {n}", _case_alphabet_closed_form, (n,))
               for n in range(2, min(20, max_degree) + 1)]
        out += [Task(suite, f"vanishing for second part >= 3, weight {n}",
                     _case_alphabet_vanishing, (n,)) for n in range(6, min(12, max_degree) + 1)]
        out += [Task(suite, f"s{n} on 1-x-y+xy, exponent n-1 as printed", _case_one_minus_both,
                     (n, n - 1)) for n in range(2, 7)]
        out += [Task(suite, f"s{n} on 1-x-y+xy, exponent n", _case_one_minus_both, (n, n))
                for n in range(2, 7)]
        out += [Task(suite, f"square ({a},2^{b})", _case_square, (a, b))
                for a in range(2, 7) for b in range(0, 4) if 2 * (a + 2 * b) <= max_degree]
        out += [Task(suite, f"tail of zeros s{b} o s{a}", _case_tail0, (a, b))
                for a in range(2, 6) for b in range(2, 6) if a * b <= max_degree]
        out += [Task(suite, f"2-sign table, weight {n}", _case_sign_table, (n,))
                for n in range(2, 31, 2)]
        out += [Task(suite, f"character identity c={c} k={k}", _case_character_identity, (c, k))
                for c in range(1, 7) for k in range(0, c // 2 + 1)]
        return out
    raise KeyError(f"unknown suite {suite!r}")


def _sigma_chains(k: int):
    if k == 0:
        yield ()
        return
    for rest in _sigma_chains(k - 1):
        for sigma in ((2,), (1, 1)):
            yield (sigma,) + rest


def _run(task: Task) -> CaseResult:
    witness = task.fn(*task.args)
    return CaseResult(task.suite, task.name, witness is None, witness)


def worker_count(threads: Optional[int] = None) -> int:
    """``threads`` if given, else PLETHYRS_THREADS, else 1."""
    if threads is None:
        threads = int(os.environ.get("PLETHYRS_THREADS", "1") or 1)
    return max(1, threads)


def run_suite(suite: str, max_degree: int = 24, threads: Optional[int] = None) -> Iterator[CaseResult]:
    tasks = suite_tasks(suite, max_degree)
    workers = worker_count(threads)
    if workers == 1 or len(tasks) < 2:
        for task in tasks:
            yield _run(task)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_run, tasks)  # map keeps task order
