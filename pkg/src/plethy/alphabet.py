"""Symmetric functions evaluated on the signed alphabet 1 - x - y.

For an alpha >= 2 hook+column,

    s_(alpha, 2^beta, 1^gamma)[1-x-y] = (-1)^gamma (xy)^beta (1-x)(1-y) h_gamma(x, y),

every other shape except the single column (1^n) evaluates to zero, so one
bivariate polynomial carries the whole hook+column part of a function.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, lcm
from typing import Mapping

from .flip import HCSequence
from .partitions import (
    Partition,
    hook_column,
    hook_column_betas,
    multiplicities,
    partitions_of,
    z_of,
)
from .plethysm import PlethysmExpression
from .symfunc import PSeries, _character


class InexactDivision(ArithmeticError):
    pass


class BivariatePoly:
    """Sparse polynomial in x, y: {(i, j): coefficient of x^i y^j}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def const(cls, c) -> "BivariatePoly":
        return cls({(0, 0): c})

    @classmethod
    def one_minus_x_minus_y(cls) -> "BivariatePoly":
        return cls({(0, 0): 1, (1, 0): -1, (0, 1): -1})

    @classmethod
    def complete(cls, k: int) -> "BivariatePoly":
        """h_k(x, y) = sum_{i+j=k} x^i y^j."""
        if k < 0:
            return cls()
        return cls({(i, k - i): 1 for i in range(k + 1)})

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivariatePoly.const(other)
        return isinstance(other, BivariatePoly) and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BivariatePoly(out)

    def __neg__(self):
        return BivariatePoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BivariatePoly):
            return BivariatePoly({k: other * v for k, v in self.coeffs.items()})
        out: dict = {}
        for (a, b), u in self.coeffs.items():
            for (c, d), v in other.coeffs.items():
                key = (a + c, b + d)
                out[key] = out.get(key, 0) + u * v
        return BivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = BivariatePoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __getitem__(self, key):
        return self.coeffs.get(key, 0)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*x^{i}*y^{j}" for (i, j), v in sorted(self.coeffs.items()))

    def substitute_power(self, k: int) -> "BivariatePoly":
        """x -> x^k, y -> y^k: the action of p_k on a polynomial alphabet."""
        if k == 1:
            return self
        return BivariatePoly({(k * i, k * j): v for (i, j), v in self.coeffs.items()})

    def at_x_equals_one(self) -> dict:
        out: dict = {}
        for (_, j), v in self.coeffs.items():
            out[j] = out.get(j, 0) + v
        return {j: v for j, v in out.items() if v}

    def divide_exact(self, d) -> "BivariatePoly":
        out = {}
        for key, v in self.coeffs.items():
            q = Fraction(v, d) if isinstance(v, int) else v / d
            if q.denominator != 1:
                raise InexactDivision(f"{v} not divisible by {d}")
            out[key] = int(q)
        return BivariatePoly(out)

    def divide_one_minus(self, var: int) -> "BivariatePoly":
        """Exact quotient by (1 - x) (var=0) or (1 - y) (var=1).

        Synthetic division along ``var``: quotient coefficients are prefix
        sums, and every full sum has to vanish.
        """
        lines: dict = {}
        for (i, j), v in self.coeffs.items():
            e, other = (i, j) if var == 0 else (j, i)
            lines.setdefault(other, {})[e] = v
        out = {}
        for other, line in lines.items():
            running = 0
            for e in range(max(line) + 1):
                running += line.get(e, 0)
                if running:
                    out[(e, other) if var == 0 else (other, e)] = running
            if running:
                raise InexactDivision(f"nonzero remainder dividing by (1 - {'xy'[var]})")
        return BivariatePoly(out)


def eval_p_on_1mxmy(lam) -> BivariatePoly:
    """p_lam[1 - x - y] = prod_i (1 - x^lam_i - y^lam_i)."""
    return _eval_p(tuple(lam))


@lru_cache(maxsize=4096)
def _eval_p(lam: tuple) -> BivariatePoly:
    if not lam:
        return BivariatePoly.const(1)
    return _eval_p(lam[:-1]) * BivariatePoly.one_minus_x_minus_y().substitute_power(lam[-1])


def eval_on_1mxmy(f: PSeries) -> BivariatePoly:
    """f[1 - x - y] for a p-expansion; the total must come out integral."""
    den = 1
    for c in f.terms.values():
        den = lcm(den, Fraction(c).denominator)
    total = BivariatePoly()
    for lam, c in sorted(f.terms.items()):
        total = total + _eval_p(tuple(lam)) * int(c * den)
    return total.divide_exact(den)


def _p_on_alphabet(mu: tuple, alphabet: BivariatePoly, cache: dict) -> BivariatePoly:
    if mu in cache:
        return cache[mu]
    out = _p_on_alphabet(mu[:-1], alphabet, cache) * alphabet.substitute_power(mu[-1])
    cache[mu] = out
    return out


def eval_schur_on(lam, alphabet: BivariatePoly) -> BivariatePoly:
    """s_lam[A] for a polynomial alphabet A, via sum_mu chi^lam(mu)/z_mu p_mu[A]."""
    lam = tuple(lam)
    n = sum(lam)
    cache = {(): BivariatePoly.const(1)}
    total = BivariatePoly()
    for mu in sorted(tuple(m) for m in partitions_of(n)):
        chi = _character(lam, mu)
        if chi:
            total = total + _p_on_alphabet(mu, alphabet, cache) * (chi * (factorial(n) // z_of(mu)))
    return total.divide_exact(factorial(n))


def eval_chain_on_1mxmy(expr: PlethysmExpression) -> BivariatePoly:
    """(s_chain[0] o ... o s_chain[-1])[1 - x - y], innermost first.

    Uses (f o g)[A] = f[g[A]]: each level is evaluated on the polynomial
    produced by the level inside it, so no p-expansion of the full
    plethysm is ever formed.
    """
    return _eval_chain(tuple(tuple(lam) for lam in expr.chain))


@lru_cache(maxsize=64)
def _eval_chain(chain: tuple) -> BivariatePoly:
    inner = (BivariatePoly.one_minus_x_minus_y() if len(chain) == 1
             else _eval_chain(chain[1:]))
    return eval_schur_on(chain[0], inner)


def column_on_1mxmy(n: int) -> BivariatePoly:
    """s_(1^n)[1 - x - y] = (-1)^n h_n(x, y) - (-1)^n h_{n-1}(x, y)."""
    sign = -1 if n % 2 else 1
    return BivariatePoly.complete(n) * sign - BivariatePoly.complete(n - 1) * sign


def hook_column_on_1mxmy(alpha: int, beta: int, gamma: int) -> BivariatePoly:
    """Closed form for alpha >= 2; independent of alpha."""
    if alpha < 2:
        raise ValueError("closed form needs alpha >= 2")
    xy_beta = BivariatePoly({(beta, beta): -1 if gamma % 2 else 1})
    one_minus = BivariatePoly({(0, 0): 1, (1, 0): -1}) * BivariatePoly({(0, 0): 1, (0, 1): -1})
    return xy_beta * one_minus * BivariatePoly.complete(gamma)


def hc_extract(poly: BivariatePoly, n: int) -> dict:
    """All hook+column coefficients of a degree-n function from f[1 - x - y].

    Returns {(beta, gamma): [s_(n-2beta-gamma, 2^beta, 1^gamma)] f} over every
    valid shape.  The column (1^n) is read off first from f[1 - y] (x = 1),
    where it is the only surviving term; the rest is divided exactly by
    (1-x)(1-y) and the coefficient c_{a,b} of x^a y^b telescopes to
    a_{b, a-b} = (-1)^(a+b) (c_{a,b} - c_{a+1,b-1}).
    """
    column = (-1 if n % 2 else 1) * poly.at_x_equals_one().get(n, 0)
    rest = poly - column_on_1mxmy(n) * column
    q = rest.divide_one_minus(0).divide_one_minus(1)
    out = {}
    for gamma in range(n):
        for beta in hook_column_betas(n, gamma):
            if hook_column(n, beta, gamma)[0] == 1:
                out[(beta, gamma)] = column
                continue
            a, b = beta + gamma, beta
            v = q[(a, b)] - q[(a + 1, b - 1)]
            out[(beta, gamma)] = -v if (a + b) % 2 else v
    rebuilt = BivariatePoly()
    for (beta, gamma), v in out.items():
        if v and hook_column(n, beta, gamma)[0] >= 2:
            rebuilt = rebuilt + BivariatePoly({(beta, beta): -v if gamma % 2 else v}) \
                * BivariatePoly.complete(gamma)
    if rebuilt != q:
        raise ValueError("polynomial is not the 1-x-y evaluation of a degree-"
                         f"{n} function")
    return out


def hc_sequence_from_poly(poly: BivariatePoly, n: int, gamma: int) -> HCSequence:
    table = hc_extract(poly, n)
    return HCSequence(n, gamma, tuple(table[(b, gamma)] for b in hook_column_betas(n, gamma)))


def hc_sequence_alphabet(expr: PlethysmExpression, gamma: int) -> HCSequence:
    return hc_sequence_from_poly(eval_chain_on_1mxmy(expr), expr.degree, gamma)


def sub_multiset_count(lam, k: int) -> int:
    """chi^k(lam) = sum_{mu |- k} prod_i binom(m_i(lam), m_i(mu)).

    For k beyond half the weight the value is mirrored, chi^k = chi^(c-k).
    """
    c = sum(lam)
    if k < 0 or k > c:
        return 0
    if k > c // 2:
        k = c - k
    m_lam = multiplicities(lam)
    total = 0
    for mu in partitions_of(k):
        term = 1
        for part, m in multiplicities(mu).items():
            term *= comb(m_lam.get(part, 0), m)
            if not term:
                break
        total += term
    return total
