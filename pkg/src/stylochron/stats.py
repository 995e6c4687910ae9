"""Statistical primitives: Pearson r and its p-value, group summaries,
sigma differences and Welch's t-test.

The Student-t tail probabilities go through a self-contained regularized
incomplete beta function (continued fraction, modified Lentz), so the
module needs nothing beyond the standard library and numpy.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateInput, InsufficientData, ShapeError

_CF_EPS = 1e-16
_CF_TINY = 1e-300
_CF_MAXITER = 100_000


@dataclass(frozen=True)
class CorrelationResult:
    r: float
    n: int
    p_two_tailed: float


@dataclass(frozen=True)
class TTestResult:
    t: float
    df: float
    p_two_tailed: float


@dataclass(frozen=True)
class GroupSummary:
    mean: float
    se: float
    n: int


def _betacf(a: float, b: float, x: float) -> float:
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAXITER):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ArithmeticError(f"incomplete beta continued fraction did not converge (a={a}, b={b}, x={x})")


def betainc(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b) for a, b > 0 and 0 <= x <= 1."""
    if a <= 0 or b <= 0:
        raise ValueError("betainc needs a > 0 and b > 0")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"betainc needs 0 <= x <= 1, got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    log_front = (
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    front = math.exp(log_front)
    # the continued fraction converges fast only on this side of the mean
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def student_t_two_tailed(t: float, df: float) -> float:
    """P(|T| >= |t|) for Student's t with ``df`` degrees of freedom."""
    if df <= 0:
        raise ValueError("df must be positive")
    if math.isinf(t):
        return 0.0
    return min(1.0, betainc(df / 2.0, 0.5, df / (df + t * t)))


def student_t_cdf(t: float, df: float) -> float:
    tail = 0.5 * student_t_two_tailed(t, df)
    return 1.0 - tail if t >= 0 else tail


def _as_vector(xs: Sequence[float], name: str) -> np.ndarray:
    arr = np.asarray(xs, dtype=float)
    if arr.ndim != 1:
        raise ShapeError(f"{name} must be one-dimensional, got shape {arr.shape}")
    return arr


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    x = _as_vector(xs, "xs")
    y = _as_vector(ys, "ys")
    if x.shape != y.shape:
        raise ShapeError(f"length mismatch: {x.size} vs {y.size}")
    if x.size < 2:
        raise InsufficientData("pearson needs at least 2 pairs")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = math.fsum(dx * dx)
    syy = math.fsum(dy * dy)
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateInput("zero variance input to pearson")
    r = math.fsum(dx * dy) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def pearson_pvalue(r: float, n: int) -> float:
    """Two-tailed p of the t = r*sqrt((n-2)/(1-r^2)) statistic with n-2 df."""
    if n < 3:
        raise InsufficientData("a correlation p-value needs n >= 3")
    if abs(r) >= 1.0:
        return 0.0
    df = n - 2
    # df/(df+t^2) simplifies to 1-r^2; factoring keeps precision near |r|=1
    return min(1.0, betainc(df / 2.0, 0.5, (1.0 - r) * (1.0 + r)))


def correlate(xs: Sequence[float], ys: Sequence[float]) -> CorrelationResult:
    r = pearson(xs, ys)
    n = len(xs)
    return CorrelationResult(r=r, n=n, p_two_tailed=pearson_pvalue(r, n))


def group_summary(xs: Sequence[float]) -> GroupSummary:
    x = _as_vector(xs, "xs")
    if x.size == 0:
        raise InsufficientData("group summary of an empty group")
    mean = math.fsum(x) / x.size
    if x.size == 1:
        return GroupSummary(mean=mean, se=0.0, n=1)
    dev = x - mean
    var = math.fsum(dev * dev) / (x.size - 1)
    return GroupSummary(mean=mean, se=math.sqrt(var / x.size), n=int(x.size))


def sigma_difference(x: float, g: GroupSummary) -> float:
    if not g.se > 0:
        raise DegenerateInput("group standard error is zero")
    return abs(x - g.mean) / g.se


def welch_ttest(xs: Sequence[float], ys: Sequence[float]) -> TTestResult:
    x = _as_vector(xs, "xs")
    y = _as_vector(ys, "ys")
    if x.size < 2 or y.size < 2:
        raise InsufficientData("welch t-test needs at least 2 values per group")
    mx = math.fsum(x) / x.size
    my = math.fsum(y) / y.size
    vx = math.fsum((x - mx) ** 2) / (x.size - 1)
    vy = math.fsum((y - my) ** 2) / (y.size - 1)
    ax, ay = vx / x.size, vy / y.size
    se2 = ax + ay
    if se2 == 0.0:
        raise DegenerateInput("both groups have zero variance")
    t = (mx - my) / math.sqrt(se2)
    df = se2 * se2 / (ax * ax / (x.size - 1) + ay * ay / (y.size - 1))
    return TTestResult(t=t, df=df, p_two_tailed=student_t_two_tailed(t, df))
