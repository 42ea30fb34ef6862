"""Closed isoperimetric formulas.

``pmin`` always returns an exact integer. In the hyperbolic regime
``n > p(q-2)`` it is evaluated as ``(p-2)(n - n_k) + P_k - 2m`` where ``m``
comes from the floor formula in :func:`m_closed`; the irrational error term
``epsilon`` is computed separately (:func:`epsilon`) and only used for the
bound checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .context import TessContext, layer_index
from .errors import DomainError, UnsupportedClassError
from .quadfield import QuadExt
from .words import layer_prefix_sums, substitute_degree_word

__all__ = [
    "PerimeterBreakdown",
    "BoundsReport",
    "pmin",
    "pmin_small",
    "pmin_euclidean",
    "pmin_layers",
    "m_closed",
    "m_oracle",
    "phi",
    "epsilon",
    "epsilon_from_pmin",
    "epsilon_center",
    "bound_constants",
    "bounds_report",
]


@dataclass(frozen=True)
class PerimeterBreakdown:
    n: int
    k: int
    j: int
    n_prime: int
    phi_k: QuadExt
    m: int
    epsilon_twice: QuadExt
    p_min: int


# -- Euclidean -----------------------------------------------------------------


def _least(pred, lo: int = 0) -> int:
    """Smallest integer m >= lo with pred(m), for a monotone predicate."""
    hi = max(lo, 1)
    while not pred(hi):
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def pmin_euclidean(ctx: TessContext, n: int) -> int:
    """Minimal perimeter on {3,6}, {4,4}, {6,3}; ceilings via integer predicates."""
    if n < 1:
        raise DomainError("n must be >= 1")
    p, q = ctx.p, ctx.q
    if (p, q) == (4, 4):
        # ceil(2 sqrt n) = min{m : m^2 >= 4n}
        return 2 * _least(lambda m: m * m >= 4 * n)
    if (p, q) == (6, 3):
        return 2 * _least(lambda m: m * m >= 12 * n - 3)
    if (p, q) == (3, 6):
        # ceil((n + sqrt(6n))/2) = min{m : 2m >= n and (2m - n)^2 >= 6n}
        m = _least(lambda m: 2 * m >= n and (2 * m - n) ** 2 >= 6 * n)
        return 2 * m - n
    raise UnsupportedClassError(f"{{{p},{q}}} is not Euclidean")


# -- hyperbolic ------------------------------------------------------------------


def pmin_small(ctx: TessContext, n: int) -> int:
    """Spiral values for 1 <= n <= p(q-2)."""
    p, q = ctx.p, ctx.q
    if not 1 <= n <= p * (q - 2):
        raise DomainError(f"small-n formula covers 1 <= n <= {p * (q - 2)}, got {n}")
    if n < q:
        return p + (p - 2) * (n - 1)
    # the same expression also holds at n = p(q-2) itself
    closed = (n - 2) // (q - 2)
    return p + (p - 2) * (n - 1 - closed) + (p - 4) * closed


def phi(ctx: TessContext, k: int, n_prime: int) -> QuadExt:
    a_k = ctx.alpha_pow(-k)
    a = ctx.alpha
    if ctx.p == 3:
        if n_prime <= ctx.gamma(k + 1) + ctx.gamma(k):
            return a_k * (a - 1)
        return a_k * (a * (a - 1) + 1)
    if ctx.p == 4:
        return a_k * (a - 1)
    return a_k * (a - ctx.beta)


def _layer_terms(ctx: TessContext, n: int):
    if n <= ctx.p * (ctx.q - 2):
        raise DomainError(f"n must exceed p(q-2) = {ctx.p * (ctx.q - 2)}, got {n}")
    k = layer_index(ctx, n)
    nk = ctx.n_k(k)
    lk = ctx.l_k(k)
    j = (n - nk - 1) // lk
    n_prime = n - nk - j * lk
    closing = (n - nk) // (ctx.n_k(k + 1) - nk)
    return k, nk, j, n_prime, closing


def m_closed(ctx: TessContext, n: int) -> PerimeterBreakdown:
    """m(n) from the floor formula, together with every intermediate."""
    ctx.require_hyperbolic()
    k, nk, j, n_prime, closing = _layer_terms(ctx, n)
    phi_k = phi(ctx, k, n_prime)
    inner = (n - nk - phi_k) / ctx.beta - j * ctx.alpha_pow(-k)
    m = inner.floor() + closing
    p_min = (ctx.p - 2) * (n - nk) + ctx.P_k(k) - 2 * m
    eps = _epsilon_terms(ctx, n, k, j, phi_k, closing)
    return PerimeterBreakdown(n, k, j, n_prime, phi_k, m, 2 * eps, p_min)


def m_oracle(ctx: TessContext, n: int, cap: int | None = None) -> int:
    """m(n) by inverting cumulative sums of (q - d_k(i)) over the word d_k."""
    ctx.require_hyperbolic()
    if n < 2:
        raise DomainError("n must be >= 2")
    k = layer_index(ctx, n)
    nk = ctx.n_k(k)
    word = substitute_degree_word(ctx, k, cap)
    sums = layer_prefix_sums(word, ctx.q)
    target = n - nk - 1
    # largest m with sums[m] <= target; sums is non-decreasing
    lo, hi = 0, len(sums) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if sums[mid] <= target:
            lo = mid
        else:
            hi = mid - 1
    m = lo
    if n == ctx.n_k(k + 1):
        m += 1
    return m


def pmin_layers(ctx: TessContext, n: int, cap: int | None = None) -> int:
    """(p-2)(n - n_k) + P_k - 2m with m from the word oracle."""
    k = layer_index(ctx, n)
    return (ctx.p - 2) * (n - ctx.n_k(k)) + ctx.P_k(k) - 2 * m_oracle(ctx, n, cap)


def pmin(ctx: TessContext, n: int) -> int:
    """Minimal perimeter of an n-tile animal on the {p,q} tessellation."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if ctx.is_euclidean:
        return pmin_euclidean(ctx, n)
    ctx.require_hyperbolic()
    if n <= ctx.p * (ctx.q - 2):
        return pmin_small(ctx, n)
    return m_closed(ctx, n).p_min


# -- error term ------------------------------------------------------------------------


def _epsilon_terms(ctx, n, k, j, phi_k, closing) -> QuadExt:
    a, beta, p = ctx.alpha, ctx.beta, ctx.p
    a_k = ctx.alpha_pow(-k)
    inner = (
        1
        + 1 / beta
        + p / (a - 1)
        + p * a_k / (1 / a - 1)
        + phi_k / beta
        + a_k * j
        - n / beta
    )
    # ceiling: the floor-form inner term must be rounded up, since
    # -floor(y) = ceil(-y) when m is moved across
    return 2 * n / beta + 2 * inner.ceil() - 2 * closing


def epsilon(ctx: TessContext, n: int) -> QuadExt:
    """Exact error term: pmin(n) == (p - 2 - 2/beta) n + epsilon(n)."""
    ctx.require_hyperbolic()
    k, nk, j, n_prime, closing = _layer_terms(ctx, n)
    return _epsilon_terms(ctx, n, k, j, phi(ctx, k, n_prime), closing)


def epsilon_from_pmin(ctx: TessContext, n: int, p_min: int) -> QuadExt:
    return p_min - (ctx.p - 2 - 2 / ctx.beta) * n


def epsilon_center(ctx: TessContext) -> QuadExt:
    """2(1 + 1/beta + p/(alpha - 1)), the asymptotic centre of epsilon."""
    return 2 * (1 + 1 / ctx.beta + ctx.p / (ctx.alpha - 1))


# -- bounds ------------------------------------------------------------------------------


def bound_constants(ctx: TessContext) -> dict[str, tuple[QuadExt, QuadExt]]:
    """The constant inequalities as name -> (value, bound), each meaning value < bound.

    phi_2/beta is checked for every phi case that applies to the signature.
    """
    from fractions import Fraction

    ctx.require_hyperbolic()
    a, beta, p = ctx.alpha, ctx.beta, ctx.p
    a2 = ctx.alpha_pow(-2)
    checks = {
        "1/alpha": (1 / a, Fraction(2, 5)),
        "1/beta": (1 / beta, Fraction(7, 5)),
        "p/(alpha-1)": (p / (a - 1), Fraction(22, 5)),
        "p/alpha^2": (p * a2, Fraction(11, 10)),
    }
    if p == 3:
        checks["phi_2/beta"] = (a2 * (a - 1) / beta, Fraction(14, 5))
        checks["phi_2/beta (upper block)"] = (a2 * (a * (a - 1) + 1) / beta, Fraction(14, 5))
    elif p == 4:
        checks["phi_2/beta"] = (a2 * (a - 1) / beta, Fraction(14, 5))
    else:
        checks["phi_2/beta"] = (a2 * (a - beta) / beta, Fraction(14, 5))
    return checks


@dataclass
class BoundsReport:
    p: int
    q: int
    n_max: int
    checked: int = 0
    checked_refined: int = 0
    failures: list = field(default_factory=list)
    eps_min: float | None = None
    eps_max: float | None = None
    refined_max_dev: float | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_counterexample(self):
        return self.failures[0] if self.failures else None


def bounds_report(ctx: TessContext, n_max: int, n_min: int | None = None) -> BoundsReport:
    """Check 0 < eps < 22 on (p(q-2), n_max], the refined band past n_4, and the constants.

    Every comparison is exact; the float fields are summaries for display.
    """
    from fractions import Fraction

    ctx.require_hyperbolic()
    lo = ctx.p * (ctx.q - 2) + 1
    if n_max < lo:
        raise DomainError(f"n_max must exceed p(q-2) = {lo - 1}")
    start = lo if n_min is None else max(lo, n_min)
    report = BoundsReport(ctx.p, ctx.q, n_max)
    for name, (value, bound) in bound_constants(ctx).items():
        if not value < bound:
            report.failures.append(("constant", name, str(value.to_decimal(12))))
    centre = epsilon_center(ctx)
    n4 = ctx.n_k(4)
    band = Fraction(13, 5)
    lo_f = hi_f = dev_f = None
    for n in range(start, n_max + 1):
        eps = epsilon(ctx, n)
        report.checked += 1
        if not (eps > 0 and eps < 22):
            report.failures.append(("0<eps<22", n, str(eps.to_decimal(12))))
        e = float(eps)
        lo_f = e if lo_f is None else min(lo_f, e)
        hi_f = e if hi_f is None else max(hi_f, e)
        if n > n4:
            report.checked_refined += 1
            dev = eps - centre
            if not (dev < band and dev > -band):
                report.failures.append(("|eps-centre|<2.6", n, str(dev.to_decimal(12))))
            d = abs(float(dev))
            dev_f = d if dev_f is None else max(dev_f, d)
    report.eps_min, report.eps_max, report.refined_max_dev = lo_f, hi_f, dev_f
    return report
