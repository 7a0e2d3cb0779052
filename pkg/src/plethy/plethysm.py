"""Plethysm on power-sum expansions and the iterated-plethysm driver."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .flip import HCSequence
from .partitions import (
    Partition,
    hook_column,
    hook_column_betas,
    is_hook_column,
)
from .symfunc import PSeries, SchurExpansion, p_multiply, p_to_schur, schur_to_p


def p_compose(n: int, g: PSeries) -> PSeries:
    """p_n o g: every index partition scaled entrywise by n."""
    if n < 1:
        raise ValueError("p_n needs n >= 1")
    if n == 1:
        return g
    return PSeries(g.degree * n,
                   {Partition._trusted(tuple(n * x for x in lam)): c
                    for lam, c in g.terms.items()})


def plethysm(f: PSeries, g: PSeries) -> PSeries:
    """f o g, extending p_n o p_m = p_nm multiplicatively and linearly in f."""
    if g.degree < 1:
        raise ValueError("inner function must be homogeneous of positive degree")
    if not g.terms:
        return PSeries(f.degree * g.degree)
    composed: dict[int, PSeries] = {}
    products: dict[tuple, PSeries] = {(): PSeries.one()}

    def product_for(mu: tuple) -> PSeries:
        # prefix products are shared between index partitions of f
        if mu in products:
            return products[mu]
        head = product_for(mu[:-1])
        k = mu[-1]
        if k not in composed:
            composed[k] = p_compose(k, g)
        products[mu] = p_multiply(head, composed[k])
        return products[mu]

    out: dict = {}
    for mu in sorted(tuple(m) for m in f.terms):
        c = f.terms[Partition._trusted(mu)]
        for lam, v in product_for(mu).terms.items():
            out[lam] = out.get(lam, 0) + c * v
    return PSeries(f.degree * g.degree, out)


@dataclass(frozen=True)
class PlethysmExpression:
    """s_{chain[0]} o s_{chain[1]} o ... o s_{chain[-1]}, outermost first."""

    chain: tuple

    def __init__(self, chain: Iterable):
        parts = tuple(Partition(lam) for lam in chain)
        if not parts:
            raise ValueError("empty plethysm chain")
        object.__setattr__(self, "chain", parts)

    @property
    def degree(self) -> int:
        d = 1
        for lam in self.chain:
            d *= lam.weight
        return d

    def __str__(self):
        return " o ".join("s[" + ",".join(map(str, lam)) + "]" for lam in self.chain)


def chain_of(*rows: int | Iterable[int]) -> PlethysmExpression:
    """Shorthand: ``chain_of(2, 3, 2)`` is s_2 o s_3 o s_2."""
    return PlethysmExpression((r,) if isinstance(r, int) else tuple(r) for r in rows)


@lru_cache(maxsize=64)
def _iterated(chain: tuple) -> PSeries:
    if len(chain) == 1:
        return schur_to_p(chain[0])
    return plethysm(schur_to_p(chain[0]), _iterated(chain[1:]))


def iterated(expr: PlethysmExpression) -> PSeries:
    """p-expansion of the chain, folded right to left; suffixes are cached."""
    return _iterated(tuple(tuple(lam) for lam in expr.chain))


class _ContainedIn:
    """Down-closed predicate: the shape fits inside one of ``targets``."""

    def __init__(self, targets):
        self.targets = [tuple(t) for t in targets]
        self._seen: dict = {}

    def __call__(self, shape) -> bool:
        hit = self._seen.get(shape)
        if hit is None:
            hit = any(len(shape) <= len(t) and all(a <= b for a, b in zip(shape, t))
                      for t in self.targets)
            self._seen[shape] = hit
        return hit


def hc_targets(n: int, gamma: int) -> list[Partition]:
    return [hook_column(n, b, gamma) for b in hook_column_betas(n, gamma)]


def hc_expansion(expr_or_series, gamma: Optional[int] = None) -> SchurExpansion:
    """Hook+column part of an expression (or p-series), projected with restricted targets."""
    f = expr_or_series if isinstance(expr_or_series, PSeries) else iterated(expr_or_series)
    if gamma is None:
        return p_to_schur(f, is_hook_column)
    targets = hc_targets(f.degree, gamma)
    return p_to_schur(f, _ContainedIn(targets)).hc_part(gamma)


def hc_coefficients(expr, gamma: int) -> HCSequence:
    """Sigma(f, gamma) through the full p-basis plethysm: the brute-force oracle."""
    f = expr if isinstance(expr, PSeries) else iterated(expr)
    part = hc_expansion(f, gamma)
    n = f.degree
    return HCSequence(n, gamma, tuple(part[hook_column(n, b, gamma)]
                                      for b in hook_column_betas(n, gamma)))


def schur_plethysm(outer, inner: SchurExpansion) -> SchurExpansion:
    """s_outer o inner as a full Schur expansion (small degrees)."""
    return p_to_schur(plethysm(schur_to_p(outer), inner.to_p()))


def expand(expr: PlethysmExpression, hc_only: bool = False) -> SchurExpansion:
    f = iterated(expr)
    return p_to_schur(f, is_hook_column if hc_only else None)
