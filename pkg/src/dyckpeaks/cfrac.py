"""Finite-depth evaluation of weighted continued fractions over paths.

The general form assigns every up-step weight 1, every non-peak down-step
from height j weight lambda_j, and every peak down-step from height j weight
mu_j; the weighted path-counting series is then the nested fraction

    1 / (1 - (mu_1 - lambda_1) - lambda_1 / (1 - (mu_2 - lambda_2) - ...))

with one level per height. Evaluation here is bottom-up over ``depth``
levels with an explicit tail: the tail is the value standing in for the
whole fraction below the last level, so a closed-form continuation (such as
the full path series for unmarked lower levels) costs nothing.

Conventions: ``lambdas[i]`` and ``mus[i]`` are the weights for height i + 1
(level 1 is the outermost). The peak-marking fraction uses mu_k = x*z so
that z^r slices are series in semilength, directly comparable with
:func:`dyckpeaks.gfcount.peak_gf`; the raw mark mu_k = z is expressible
through :func:`rv_cfrac` and differs from the counts by a factor x^r.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .chebyshev import r_series
from .series import BivarSeries, NonInvertibleError, Series, catalan_series


@dataclass(frozen=True)
class WeightSpec:
    """Per-height down-step weights, an evaluation depth, and a tail value."""

    lambdas: tuple[BivarSeries, ...]
    mus: tuple[BivarSeries, ...]
    depth: int
    tail: BivarSeries

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        if len(self.lambdas) < self.depth or len(self.mus) < self.depth:
            raise ValueError("need at least `depth` lambda and mu weights")


def rv_cfrac(w: WeightSpec, x_order: int, z_order: int) -> BivarSeries:
    """Evaluate the weighted fraction bottom-up for ``w.depth`` levels.

    When every lambda weight has lowest x-degree >= 1 and depth >= x_order+1,
    coefficients up to x_order are exact regardless of the tail. Raises
    :class:`NonInvertibleError` naming the level whose denominator has a
    vanishing constant term.
    """
    used = list(w.lambdas[: w.depth]) + list(w.mus[: w.depth]) + [w.tail]
    eff_x = min([x_order] + [u.x_order for u in used])
    eff_z = min([z_order] + [u.z_order for u in used])
    value = w.tail.truncate(eff_z, eff_x)
    for level in range(w.depth, 0, -1):
        lam = w.lambdas[level - 1].truncate(eff_z, eff_x)
        mu = w.mus[level - 1].truncate(eff_z, eff_x)
        den = 1 - (mu - lam) - lam * value
        if den.entries[0].coeffs[0] == 0:
            raise NonInvertibleError(f"denominator at level {level} is not invertible")
        value = den.reciprocal()
    return value


def catalan_cfrac(depth: int, order: int) -> Series:
    """Uniform specialization: all weights equal x, tail 1.

    Equals the path-counting series up to ``order`` whenever
    depth >= order + 1.
    """
    x = BivarSeries.monomial(1, 1, 0, 0, order)
    spec = WeightSpec((x,) * depth, (x,) * depth, depth, BivarSeries.one(0, order))
    return rv_cfrac(spec, order, 0).z_slice(0)


def peak_bivar_cfrac(k: int, x_order: int, z_order: int) -> BivarSeries:
    """k-level fraction with the peak mark at height k and a closed tail.

    Down-steps ending a peak at height k carry weight x*z, every other
    down-step carries x, and the continuation below level k is the full
    path-counting series in closed form, so the result is exact at every
    retained order: the z^r slice equals ``peak_gf(k, r)`` and substituting
    z = 1 restores the unmarked path series (given z_order >= x_order).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    x = BivarSeries.monomial(1, 1, 0, z_order, x_order)
    marked = BivarSeries.monomial(1, 1, 1, z_order, x_order)
    tail = BivarSeries.from_series(catalan_series(x_order), z_order)
    spec = WeightSpec((x,) * k, (x,) * (k - 1) + (marked,), k, tail)
    return rv_cfrac(spec, x_order, z_order)


def _z_affine(constant: Series, z_coeff: Series, z_order: int) -> BivarSeries:
    """The bivariate value ``constant + z * z_coeff`` (z_coeff dropped at z_order 0)."""
    zero = Series.zero(constant.order)
    entries = [constant] + [z_coeff if j == 1 else zero for j in range(1, z_order + 1)]
    return BivarSeries(z_order, constant.order, tuple(entries))


def lemma_rhs(k: int, a: Series, x_order: int, z_order: int) -> BivarSeries:
    """Closed form for the k-level fraction whose innermost denominator is
    1 - z - x*A.

    Returns R_k * (1 - z*R_{k-1} - x*A*R_{k-1}) / (1 - z*R_k - x*A*R_k),
    with R the bounded-height ratios. Must coincide with
    :func:`lemma_iterated_cfrac`; the tests and the verify report check the
    two against each other coefficientwise.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    order = min(x_order, a.order)
    a = a.truncate(order)
    r_hi = r_series(k, order)
    r_lo = r_series(k - 1, order)

    def affine(ratio: Series) -> BivarSeries:
        const = 1 - (a * ratio).shift(1)
        return _z_affine(const, -ratio, z_order)

    numerator = affine(r_lo)
    denominator = affine(r_hi)
    return BivarSeries.from_series(r_hi, z_order) * numerator * denominator.reciprocal()


def lemma_iterated_cfrac(k: int, a: Series, x_order: int, z_order: int) -> BivarSeries:
    """Direct bottom-up evaluation of the same k-level fraction.

    Innermost value is 1 / (1 - z - x*A); each outer level wraps it as
    1 / (1 - x * inner).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    order = min(x_order, a.order)
    a = a.truncate(order)
    one = Series.one(order)
    inner_den = _z_affine(one - a.shift(1), -one, z_order)
    value = inner_den.reciprocal()
    x = BivarSeries.monomial(1, 1, 0, z_order, order)
    for _ in range(k - 1):
        value = (1 - x * value).reciprocal()
    return value


# -- JSON weight specifications ------------------------------------------
#
# Grammar per weight expression:
#   integer                          a constant
#   "c*x^a*z^b" (each part optional) a monomial, e.g. "x", "z", "2*x^2*z"
#   "C"                              the path-counting series
#   "xC2"                            x^2 * C(x)^2
#   [expr, expr, ...]                the sum of the parts
# `lambdas` and `mus` may be a single expression (used at every level)
# or a list of per-level expressions of length >= depth.

_MONOMIAL_RE = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?P<coeff>\d+)?\s*"
    r"(?P<xpart>\*?\s*x(?:\^(?P<xp>\d+))?)?\s*"
    r"(?P<zpart>\*?\s*z(?:\^(?P<zp>\d+))?)?\s*$"
)


def _parse_atom(atom: object, z_order: int, x_order: int) -> BivarSeries:
    if isinstance(atom, bool):
        raise ValueError(f"invalid weight expression: {atom!r}")
    if isinstance(atom, int):
        return BivarSeries.monomial(atom, 0, 0, z_order, x_order)
    if not isinstance(atom, str):
        raise ValueError(f"invalid weight expression: {atom!r}")
    text = atom.strip()
    if text == "C":
        return BivarSeries.from_series(catalan_series(x_order), z_order)
    if text == "xC2":
        c = catalan_series(x_order)
        return BivarSeries.from_series((c * c).shift(2), z_order)
    m = _MONOMIAL_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse weight expression {atom!r}")
    has_x = m.group("xpart") is not None
    has_z = m.group("zpart") is not None
    if m.group("coeff") is None and not has_x and not has_z:
        raise ValueError(f"cannot parse weight expression {atom!r}")
    coeff = int(m.group("coeff")) if m.group("coeff") is not None else 1
    if m.group("sign") == "-":
        coeff = -coeff
    xp = int(m.group("xp")) if m.group("xp") else (1 if has_x else 0)
    zp = int(m.group("zp")) if m.group("zp") else (1 if has_z else 0)
    return BivarSeries.monomial(coeff, xp, zp, z_order, x_order)


def _parse_expression(expr: object, z_order: int, x_order: int) -> BivarSeries:
    if isinstance(expr, list):
        total = BivarSeries.zero(z_order, x_order)
        for part in expr:
            total = total + _parse_atom(part, z_order, x_order)
        return total
    return _parse_atom(expr, z_order, x_order)


def _parse_weight_list(
    raw: object, depth: int, z_order: int, x_order: int, field_name: str
) -> tuple[BivarSeries, ...]:
    # a bare expression broadcasts to every level; a list of lists is a list
    # of per-level sums only when the outer list is long enough, so per-level
    # entries must be given as a list when depth levels are spelled out
    if isinstance(raw, list):
        if len(raw) < depth:
            raise ValueError(f"{field_name} has {len(raw)} entries, need >= depth {depth}")
        return tuple(_parse_expression(e, z_order, x_order) for e in raw)
    broadcast = _parse_expression(raw, z_order, x_order)
    return (broadcast,) * depth


def weight_spec_from_json(text: str, x_order: int, z_order: int) -> WeightSpec:
    """Build a :class:`WeightSpec` from its JSON document.

    The document has keys ``depth`` (int), ``lambdas``, ``mus`` (expression
    or list of expressions, at least ``depth`` long) and optional ``tail``
    (expression, default 1).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("weight spec must be a JSON object")
    unknown = set(doc) - {"depth", "lambdas", "mus", "tail"}
    if unknown:
        raise ValueError(f"unknown weight spec keys: {sorted(unknown)}")
    if "depth" not in doc or not isinstance(doc["depth"], int) or isinstance(doc["depth"], bool):
        raise ValueError("weight spec needs an integer `depth`")
    depth = doc["depth"]
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if "lambdas" not in doc or "mus" not in doc:
        raise ValueError("weight spec needs `lambdas` and `mus`")
    lambdas = _parse_weight_list(doc["lambdas"], depth, z_order, x_order, "lambdas")
    mus = _parse_weight_list(doc["mus"], depth, z_order, x_order, "mus")
    tail = _parse_expression(doc.get("tail", 1), z_order, x_order)
    return WeightSpec(lambdas, mus, depth, tail)
