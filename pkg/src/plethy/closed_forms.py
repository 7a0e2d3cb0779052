"""Closed formulas for hook+column parts, and reference integer sequences."""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import HookColumnShape, Partition, hook_column_decompose, partition_count
from .symfunc import SchurExpansion


@dataclass(frozen=True)
class HCFormulaOutput:
    degree: int
    terms: tuple  # ((Partition, coefficient), ...)
    provenance: str

    def to_schur(self) -> SchurExpansion:
        out: dict = {}
        for lam, c in self.terms:
            out[lam] = out.get(lam, 0) + c
        return SchurExpansion(self.degree, out)


def _hc(first: int, beta: int, ones: int):
    if ones < 0 or beta < 0:
        return None
    if first >= 2 or (first == 1 and beta == 0):
        return Partition._trusted((first,) + (2,) * beta + (1,) * ones)
    return None


def _require(*values, low=2):
    if any(v < low for v in values):
        raise ValueError(f"parameters must be >= {low}: {values}")


def langley_remmel(a: int, b: int) -> HCFormulaOutput:
    """hc(s_b o s_a) = sum_{k<b} s_(ab-2k, 2^k)."""
    _require(a, b)
    n = a * b
    return HCFormulaOutput(n, tuple((_hc(n - 2 * k, k, 0), 1) for k in range(b)),
                           "Langley-Remmel")


def thm_s2_sb_sa(a: int, b: int) -> HCFormulaOutput:
    _require(a, b)
    n = 2 * a * b
    terms = []
    for k in range(2 * b):
        terms.append((_hc(n - 2 * k, k, 0), min(k + 1, 2 * b - k)))
    for k in range(1, 2 * b - 2):
        c = min((k + 1) // 2, (2 * b - 1 - k) // 2)
        if c:
            terms.append((_hc(n - 2 * k - 1, k, 1), c))
    return HCFormulaOutput(n, tuple(terms), "s2 o sb o sa")


def _central_polygonal(k: int) -> int:
    return (k * k + k + 2) // 2


def thm_sc_s2_sa(a: int, c: int) -> HCFormulaOutput:
    _require(a, c)
    n = 2 * a * c
    terms = []
    for k in range(2 * c):
        terms.append((_hc(n - 2 * k, k, 0),
                      min(_central_polygonal(k), _central_polygonal(2 * c - 1 - k))))
    for k in range(1, 2 * c - 2):
        v = min((k + 1) ** 2 // 4, (2 * c - 1 - k) ** 2 // 4)
        if v:
            terms.append((_hc(n - 2 * k - 1, k, 1), v))
    return HCFormulaOutput(n, tuple(terms), "sc o s2 o sa")


def _as_shape(lam) -> HookColumnShape:
    if isinstance(lam, HookColumnShape):
        return lam
    shape = hook_column_decompose(lam)
    if shape is None:
        raise ValueError(f"{lam} is not a hook+column")
    return shape


def p2_hookcolumn(lam) -> SchurExpansion:
    """Signed hook+column part of p_2 o s_lam for alpha >= 2.

    (-1)^gamma hc(p_2 o s_lam) has +-1 entries on three families with first
    rows 2 alpha, 2 alpha - 1 and 2 alpha - 2; the column lengths are fixed
    by the total degree.
    """
    shape = _as_shape(lam)
    if shape.alpha < 2:
        raise ValueError("p2_hookcolumn needs alpha >= 2")
    n2 = 2 * shape.weight
    m2 = shape.beta
    sign = -1 if shape.gamma % 2 else 1
    out: dict = {}

    def put(first, beta, coeff):
        part = _hc(first, beta, n2 - first - 2 * beta)
        if part is not None:
            out[part] = out.get(part, 0) + sign * coeff

    top = 2 * shape.alpha
    for beta in range(2 * m2, n2 // 2 + 1):
        put(top, beta, -1 if beta % 2 else 1)
    put(top - 1, 2 * m2, -1)
    for beta in range(2 * m2 + 1, n2 // 2 + 1):
        put(top - 2, beta, 1 if beta % 2 else -1)
    return SchurExpansion(n2, out)


def hc_product(mu, nu) -> HCFormulaOutput:
    """hc(s_mu s_nu) for hook+columns with first parts >= 2."""
    mu, nu = _as_shape(mu), _as_shape(nu)
    if mu.alpha < 2 or nu.alpha < 2:
        raise ValueError("hc_product needs both first parts >= 2")
    n = mu.weight + nu.weight
    alpha = mu.alpha + nu.alpha
    m2 = mu.beta + nu.beta
    m1 = min(mu.gamma, nu.gamma)
    out: dict = {}

    def put(first, beta, coeff):
        part = _hc(first, beta, n - first - 2 * beta)
        if part is not None:
            out[part] = out.get(part, 0) + coeff

    for beta in range(m2, m2 + m1 + 1):
        put(alpha, beta, 1)
    for beta in range(m2, m2 + m1 + 2):
        put(alpha - 1, beta, 1 if beta in (m2, m2 + m1 + 1) else 2)
    for beta in range(m2 + 1, m2 + m1 + 2):
        put(alpha - 2, beta, 1)
    return HCFormulaOutput(n, tuple(sorted(out.items(), reverse=True)), "hook+column product")


def offset_for(a: int, b: int, c: int) -> int:
    """Flip offset abc - 2(bc - 1) of s_c o s_b o s_a (c = 1 gives s_b o s_a)."""
    return a * b * c - 2 * (b * c - 1)


# -- reference sequences -----------------------------------------------------

def _series_coefficients(factors: dict[int, int], count: int) -> list[int]:
    """Coefficients of prod_i (1 - q^i)^(-e_i), truncated."""
    coeffs = [1] + [0] * (count - 1)
    for part, e in factors.items():
        for _ in range(e):
            for n in range(part, count):
                coeffs[n] += coeffs[n - part]
    return coeffs


def oeis(seq_id: str, count: int) -> list[int]:
    """First ``count`` terms (OEIS offset 0) of a handful of reference sequences."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if seq_id == "A000124":
        return [_central_polygonal(n) for n in range(count)]
    if seq_id == "A002620":
        return [n * n // 4 for n in range(count)]
    if seq_id == "A000098":
        # partitions with two kinds of 1, 2 and 3: prod_{i<=3} (1-q^i)^-2 prod_{i>3} (1-q^i)^-1
        factors = {i: 1 for i in range(1, count)}
        factors.update({1: 2, 2: 2, 3: 2})
        return _series_coefficients(factors, count)
    if seq_id == "A058696":
        return [partition_count(2 * n) for n in range(count)]
    raise KeyError(f"unknown sequence {seq_id}")
