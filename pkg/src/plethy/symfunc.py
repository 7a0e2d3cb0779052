"""Sparse exact symmetric functions in the power-sum and Schur bases."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Optional

from .partitions import (
    Partition,
    add_strips,
    conjugate,
    format_partition,
    hook_column_decompose,
    parse_partition,
    partition_union,
    partitions_of,
    remove_strips,
    z_of,
)

Predicate = Callable[[Partition], bool]


class NonIntegralCoefficient(ArithmeticError):
    """A Schur coefficient came out fractional; some upstream step is wrong."""


def _clean(terms: Mapping) -> dict:
    return {k: v for k, v in terms.items() if v}


@dataclass(frozen=True)
class PSeries:
    """Homogeneous element sum_lambda c_lambda p_lambda with rational c."""

    degree: int
    terms: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(self.terms))
        for lam in self.terms:
            if sum(lam) != self.degree:
                raise ValueError(f"p{format_partition(lam)} in a degree-{self.degree} series")

    @classmethod
    def p(cls, lam) -> "PSeries":
        lam = Partition(lam)
        return cls(lam.weight, {lam: Fraction(1)})

    @classmethod
    def one(cls) -> "PSeries":
        return cls(0, {Partition(): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PSeries):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __add__(self, other: "PSeries") -> "PSeries":
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.degree != other.degree:
            raise ValueError("cannot add series of different degrees")
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return PSeries(self.degree, out)

    def __neg__(self):
        return PSeries(self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PSeries":
        c = Fraction(c)
        return PSeries(self.degree, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PSeries):
            return p_multiply(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __repr__(self):
        if not self.terms:
            return "PSeries(0)"
        body = " + ".join(f"{c}*p{format_partition(k)}"
                          for k, c in sorted(self.terms.items(), reverse=True))
        return f"PSeries({body})"


@dataclass(frozen=True)
class SchurExpansion:
    """Homogeneous element sum_lambda a_lambda s_lambda with integer a."""

    degree: int
    terms: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(self.terms))
        for lam in self.terms:
            if sum(lam) != self.degree:
                raise ValueError(f"s{format_partition(lam)} in a degree-{self.degree} expansion")

    def __getitem__(self, lam) -> int:
        return self.terms.get(Partition(lam), 0)

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __add__(self, other):
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.degree != other.degree:
            raise ValueError("cannot add expansions of different degrees")
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SchurExpansion(self.degree, out)

    def __neg__(self):
        return SchurExpansion(self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def support(self) -> set:
        return set(self.terms)

    def items(self):
        """Terms in decreasing lexicographic order."""
        return sorted(self.terms.items(), reverse=True)

    def hc_part(self, gamma: Optional[int] = None) -> "SchurExpansion":
        """Restriction to hook+column shapes, optionally with a fixed gamma."""
        keep = {}
        for lam, c in self.terms.items():
            shape = hook_column_decompose(lam)
            if shape is not None and (gamma is None or shape.gamma == gamma):
                keep[lam] = c
        return SchurExpansion(self.degree, keep)

    def is_schur_positive(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def to_p(self) -> PSeries:
        out = PSeries(self.degree)
        for lam, c in self.terms.items():
            out = out + schur_to_p(lam).scale(c)
        return out

    def to_json(self) -> str:
        body = {format_partition(k): v for k, v in self.items()}
        return json.dumps({"degree": self.degree, "terms": body})

    @classmethod
    def from_json(cls, text: str) -> "SchurExpansion":
        data = json.loads(text)
        return cls(data["degree"], {parse_partition(k): int(v) for k, v in data["terms"].items()})

    def __repr__(self):
        if not self.terms:
            return "SchurExpansion(0)"
        return "SchurExpansion(" + " + ".join(
            f"{c}*s{format_partition(k)}" for k, c in self.items()) + ")"


@lru_cache(maxsize=None)
def _character(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1 if not lam else 0
    total = 0
    for smaller, sign in remove_strips(lam, mu[0]):
        total += sign * _character(tuple(smaller), mu[1:])
    return total


def character(lam, mu) -> int:
    """chi^lam(mu) by the Murnaghan-Nakayama rule, largest part of mu first."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    return _character(tuple(lam), tuple(mu))


@lru_cache(maxsize=None)
def _schur_to_p(lam: tuple) -> PSeries:
    n = sum(lam)
    terms = {}
    for mu in partitions_of(n):
        chi = _character(lam, tuple(mu))
        if chi:
            terms[mu] = Fraction(chi, z_of(mu))
    return PSeries(n, terms)


def schur_to_p(lam) -> PSeries:
    return _schur_to_p(tuple(Partition(lam)))


def h_to_p(lam) -> PSeries:
    out = PSeries.one()
    for part in lam:
        out = p_multiply(out, schur_to_p((part,)))
    return out


def p_multiply(f: PSeries, g: PSeries) -> PSeries:
    out: dict = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            key = partition_union(lam, mu)
            out[key] = out.get(key, 0) + a * b
    return PSeries(f.degree + g.degree, out)


def omega(f: PSeries) -> PSeries:
    return PSeries(f.degree, {lam: (-c if (sum(lam) - len(lam)) % 2 else c)
                              for lam, c in f.terms.items()})


@lru_cache(maxsize=1 << 16)
def _strips_added(shape: tuple, k: int):
    return tuple((tuple(s), sign) for s, sign in add_strips(shape, k))


def _times_pk(vec: dict, k: int, allowed: Predicate) -> dict:
    out: dict = {}
    for shape, c in vec.items():
        for bigger, sign in _strips_added(shape, k):
            if allowed(bigger):
                out[bigger] = out.get(bigger, 0) + sign * c
    return {s: c for s, c in out.items() if c}


def p_to_schur(f: PSeries, restrict: Optional[Predicate] = None) -> SchurExpansion:
    """Schur expansion of ``f``.

    Each p_mu is expanded by repeated Murnaghan-Nakayama strip additions,
    walking the support of ``f`` in sorted order so shared prefixes of the
    index partitions are expanded once.  ``restrict`` keeps only shapes
    passing the predicate; it must be closed under taking sub-diagrams
    (hook+column-ness is), since intermediate shapes are pruned by it too.
    """
    allowed = restrict if restrict is not None else (lambda _: True)
    result: dict = {}
    stack = [{(): 1}]
    prev: tuple = ()
    for mu in sorted(tuple(m) for m in f.terms):
        common = 0
        while common < min(len(prev), len(mu)) and prev[common] == mu[common]:
            common += 1
        del stack[common + 1:]
        for part in mu[common:]:
            stack.append(_times_pk(stack[-1], part, allowed))
        c = f.terms[Partition._trusted(mu)]
        for shape, v in stack[-1].items():
            result[shape] = result.get(shape, 0) + c * v
        prev = mu
    terms = {}
    for shape, c in result.items():
        if c == 0:
            continue
        if c.denominator != 1:
            raise NonIntegralCoefficient(f"[s{format_partition(shape)}] = {c}")
        terms[Partition._trusted(shape)] = int(c)
    return SchurExpansion(f.degree, terms)


def schur_product(a: SchurExpansion, b: SchurExpansion,
                  restrict: Optional[Predicate] = None) -> SchurExpansion:
    """Product of two Schur expansions, routed through the p-basis."""
    return p_to_schur(p_multiply(a.to_p(), b.to_p()), restrict)


def schur(lam) -> SchurExpansion:
    lam = Partition(lam)
    return SchurExpansion(lam.weight, {lam: 1})


def omega_schur(f: SchurExpansion) -> SchurExpansion:
    return SchurExpansion(f.degree, {conjugate(lam): c for lam, c in f.terms.items()})


def linear_combination(pairs: Iterable[tuple[int, SchurExpansion]]) -> SchurExpansion:
    out = None
    for c, f in pairs:
        term = SchurExpansion(f.degree, {k: c * v for k, v in f.terms.items()})
        out = term if out is None else out + term
    return out if out is not None else SchurExpansion(0)
