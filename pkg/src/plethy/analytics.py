"""Shape statistics for integer sequences: symmetry, unimodality,
log-concavity and a chi-square Gaussian fit.

This is the only module that uses floating point.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from scipy.stats import chi2


def core(seq: Sequence[int]) -> tuple:
    """The sequence with leading and trailing zeros removed."""
    seq = list(seq)
    lo, hi = 0, len(seq)
    while lo < hi and seq[lo] == 0:
        lo += 1
    while hi > lo and seq[hi - 1] == 0:
        hi -= 1
    return tuple(seq[lo:hi])


def is_symmetric(seq) -> bool:
    c = core(seq)
    return c == c[::-1]


def is_unimodal(seq) -> bool:
    seq = list(seq)
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i >= len(seq) - 1


@dataclass(frozen=True)
class LogConcavity:
    holds: bool
    first_violation: Optional[int] = None  # index into the zero-stripped core

    def __bool__(self):
        return self.holds


def is_log_concave(seq) -> LogConcavity:
    c = core(seq)
    for i in range(1, len(c) - 1):
        if c[i] * c[i] < c[i - 1] * c[i + 1]:
            return LogConcavity(False, i)
    return LogConcavity(True)


class FitUnavailable(ValueError):
    pass


@dataclass(frozen=True)
class GaussianFit:
    mean: float
    variance: float
    chi_square_statistic: float
    degrees_of_freedom: int
    p_value: float


def _normal_cdf(t: float, mean: float, sd: float) -> float:
    return 0.5 * (1.0 + math.erf((t - mean) / (sd * math.sqrt(2.0))))


def index_moments(seq) -> tuple[float, float]:
    """Mean and (population) variance of the index, weighted by the entries."""
    total = sum(seq)
    if total <= 0:
        raise FitUnavailable("sequence has no mass")
    mean = sum(i * a for i, a in enumerate(seq)) / total
    var = sum((i - mean) ** 2 * a for i, a in enumerate(seq)) / total
    return mean, var


def expected_masses(seq) -> list[float]:
    """Matched-Gaussian mass of every index, continuity corrected.

    Indices outside the nonzero core get nothing; the Gaussian tails beyond
    the core are absorbed into its end bins.
    """
    seq = list(seq)
    total = sum(seq)
    mean, var = index_moments(seq)
    sd = math.sqrt(var)
    nz = [i for i, a in enumerate(seq) if a]
    lo, hi = nz[0], nz[-1]
    out = [0.0] * len(seq)
    if sd == 0:
        out[lo] = float(total)
        return out
    for i in range(lo, hi + 1):
        left = 0.0 if i == lo else _normal_cdf(i - 0.5, mean, sd)
        right = 1.0 if i == hi else _normal_cdf(i + 0.5, mean, sd)
        out[i] = total * (right - left)
    return out


def gaussian_fit(seq, min_expected: float = 5.0) -> GaussianFit:
    """Chi-square goodness of fit of the entries against the matched Gaussian.

    Bins run over the nonzero core.  From each tail, a bin whose expected
    count is below ``min_expected`` is merged into its neighbour until the
    end bins reach it; dof = bins - 3.
    """
    seq = list(seq)
    if any(a < 0 for a in seq):
        raise ValueError("entries must be non-negative")
    mean, var = index_moments(seq)
    expected = expected_masses(seq)
    nz = [i for i, a in enumerate(seq) if a]
    obs = [float(a) for a in seq[nz[0]:nz[-1] + 1]]
    exp = expected[nz[0]:nz[-1] + 1]
    while len(exp) > 1 and exp[0] < min_expected:
        e, o = exp.pop(0), obs.pop(0)
        exp[0] += e
        obs[0] += o
    while len(exp) > 1 and exp[-1] < min_expected:
        e, o = exp.pop(), obs.pop()
        exp[-1] += e
        obs[-1] += o
    dof = len(exp) - 3
    if dof < 1:
        raise FitUnavailable(f"only {len(exp)} bins after merging")
    stat = sum((o - e) ** 2 / e for o, e in zip(obs, exp))
    return GaussianFit(mean, var, stat, dof, float(chi2.sf(stat, dof)))


@dataclass(frozen=True)
class SequenceReport:
    source: str
    entries: tuple
    is_symmetric: bool
    is_unimodal: bool
    is_log_concave: bool
    first_log_concavity_violation: Optional[int]
    fit: Optional[GaussianFit]

    def to_json(self) -> str:
        data = asdict(self)
        data["entries"] = list(self.entries)
        return json.dumps(data)


def analyze(seq, source: str = "") -> SequenceReport:
    seq = tuple(int(a) for a in seq)
    lc = is_log_concave(seq)
    uni = is_unimodal(seq)
    if lc and all(a > 0 for a in core(seq)):
        assert uni, "log-concave positive sequence must be unimodal"
    fit = None
    if sum(seq) >= 1 and len(core(seq)) >= 4:
        try:
            fit = gaussian_fit(seq)
        except FitUnavailable:
            fit = None
    return SequenceReport(source, seq, is_symmetric(seq), uni, lc.holds,
                          lc.first_violation, fit)


def histogram_csv(seq) -> str:
    """``beta,count,expected`` rows for plotting against the fitted Gaussian."""
    expected = expected_masses(seq)
    lines = ["beta,count,expected"]
    lines += [f"{i},{a},{e:.6f}" for i, (a, e) in enumerate(zip(seq, expected))]
    return "\n".join(lines) + "\n"
