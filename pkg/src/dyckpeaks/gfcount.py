"""Exact generating functions for peak and valley counts at a fixed height.

Each function returns a truncated series whose n-th coefficient is the
number of Dyck paths of semilength n with the stated property. All
closed forms here are cross-validated against the enumeration and dynamic
programming oracles in :mod:`dyckpeaks.paths`; the test suite and the
``verify`` CLI command enforce that agreement cell by cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .chebyshev import r_series, u_inv_sq_series
from .paths import StatKind
from .series import Series, catalan_series


def _band_denominator(height_ratio: Series, excursions: Series) -> Series:
    """The factor 1 - x*(R - 1)*C shared by the exact valley formulas."""
    return 1 - ((height_ratio - 1) * excursions).shift(1)


def _one_minus_x2c2(order: int) -> Series:
    """1 - x^2*C(x)^2, the no-peak-at-height-1 denominator."""
    c = catalan_series(order)
    return 1 - (c * c).shift(2)


def valley_gf(k: int, r: int, order: int) -> Series:
    """Series counting paths with exactly r valleys at height k.

    The closed form is delta(r=0)*R_{k+1} plus
    x^r * C^{r+1} * x^{k+1}/q_{k+1}^2 / (1 - x*(R_{k+1}-1)*C)^{r+1},
    where R and q come from the bounded-height layer.
    """
    if k < 0 or r < 0:
        raise ValueError("k and r must be >= 0")
    c = catalan_series(order)
    ratio = r_series(k + 1, order)
    denom_inv = _band_denominator(ratio, c).reciprocal()
    main = c.power(r + 1).shift(r) * u_inv_sq_series(k + 1, order) * denom_inv.power(r + 1)
    if r == 0:
        return ratio + main
    return main


def peak_gf(k: int, r: int, order: int) -> Series:
    """Series counting paths with exactly r peaks at height k.

    Height 0 is degenerate (no path has a peak there), so r = 0 gives the
    full path-counting series and r >= 1 gives zero. Height 1 uses the
    closed form x^r / (1 - x^2*C^2)^{r+1}: a path with exactly r peaks at
    height 1 is r bare up-down arches interleaved with r + 1 possibly empty
    peak-at-1-free blocks, and 1/(1 - x^2*C^2) counts those blocks. For
    k >= 2 the count equals the valley count at height k - 2 (see
    :func:`dyckpeaks.paths.psi` for the certifying involution).
    """
    if k < 0 or r < 0:
        raise ValueError("k and r must be >= 0")
    if k == 0:
        return catalan_series(order) if r == 0 else Series.zero(order)
    if k == 1:
        return _one_minus_x2c2(order).reciprocal().power(r + 1).shift(r)
    return valley_gf(k - 2, r, order)


def stat_gf(kind: StatKind, k: int, r: int, order: int) -> Series:
    """Dispatch to :func:`peak_gf` or :func:`valley_gf`."""
    if kind is StatKind.PEAK:
        return peak_gf(k, r, order)
    return valley_gf(k, r, order)


def peak1_nonempty_blocks_gf(r: int, order: int) -> Series:
    """The height-1 peak series under the all-blocks-nonempty reading.

    Equals delta(r=0) + x^{3r+2} * C^{2r+2} / (1 - x^2*C^2)^{r+1}. For
    r = 0 this matches :func:`peak_gf`; for r >= 1 it undercounts (adjacent
    arches force empty blocks, e.g. the 2-peak path UDUD), and the verify
    report documents the mismatch against the oracle.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    c = catalan_series(order)
    main = _one_minus_x2c2(order).reciprocal().power(r + 1) * c.power(2 * r + 2).shift(3 * r + 2)
    if r == 0:
        return main + 1
    return main


def no_valley_band_gf(k: int, order: int) -> Series:
    """Series counting paths from height k+1 back to height k+1 (floor 0)
    with no valleys at height k, by semilength.

    Closed form C / (1 - x*(R_{k+1} - 1)*C): such a path alternates blocks
    that stay at or above k+1 (counted by C) with nonempty dips into the
    band [0, k] (counted by R_{k+1} - 1), each dip glued on by one
    down-step/up-step pair.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    c = catalan_series(order)
    return c * _band_denominator(r_series(k + 1, order), c).reciprocal()


def catalan_power_coefficient(m: int, j: int) -> int:
    """Coefficient of x^m in the j-th power of the path-counting series.

    Closed form j/(2m+j) * binom(2m+j, m), always an exact integer.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    num = j * comb(2 * m + j, m)
    den = 2 * m + j
    if num % den:
        raise ArithmeticError(f"non-integral coefficient for m={m}, j={j}")
    return num // den


def valley0_closed_count(n: int, r: int) -> int:
    """Number of semilength-n paths with exactly r valleys at height 0.

    Computed as the coefficient of x^{n-r-1} in C^{r+1} (the n >= 1 slice of
    the exact series delta(r=0) + x^{r+1} C^{r+1}); zero when n <= r except
    for the empty-path cell n = 0, r = 0.
    """
    if n < 0 or r < 0:
        raise ValueError("n and r must be >= 0")
    if n == 0:
        return 1 if r == 0 else 0
    if n <= r:
        return 0
    return catalan_power_coefficient(n - r - 1, r + 1)


def valley0_binomial_literal(n: int, r: int) -> Fraction:
    """The printed closed form (r+1)/n * binom(2n-r-1, n+1), evaluated exactly.

    Kept for the discrepancy report: it disagrees with the true count at
    small (n, r) and is not always an integer. Requires n >= 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 0:
        raise ValueError("r must be >= 0")
    top = 2 * n - r - 1
    binom = comb(top, n + 1) if top >= 0 else 0
    return Fraction(r + 1, n) * binom


def peak_k0_via_remark(k: int, order: int) -> Series:
    """No-peaks-at-height-k series (k >= 2) by the direct shifted formula.

    Evaluates R_{k-1} + C * x^{k-1}/q_{k-1}^2 / (1 - x*(R_{k-1}-1)*C),
    which must agree with ``peak_gf(k, 0)``; the tests assert it does.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    c = catalan_series(order)
    ratio = r_series(k - 1, order)
    return ratio + c * u_inv_sq_series(k - 1, order) * _band_denominator(ratio, c).reciprocal()


@dataclass(frozen=True)
class GfQuery:
    """A (statistic, height, occurrence count, truncation order) request."""

    kind: StatKind
    k: int
    r: int
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be >= 0")
        if self.k < 0 or self.r < 0:
            raise ValueError("k and r must be >= 0")

    def evaluate(self) -> Series:
        return stat_gf(self.kind, self.k, self.r, self.order)
