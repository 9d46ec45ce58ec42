"""Truncated formal power series with exact rational coefficients.

Every series carries an explicit truncation order (the highest retained
exponent), supplied by the caller on construction. Operations on operands of
mixed order truncate to the smaller order, so precision loss is always
visible in the result. Coefficients are exact: Python ints, or
:class:`fractions.Fraction` when a denominator survives reduction. No
floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]


class NonInvertibleError(ValueError):
    """Inversion was asked of a series whose constant term is zero."""


class NonIntegralError(ValueError):
    """A series expected to be a counting series has a fractional coefficient."""


def _normalize(value: Rational) -> Rational:
    """Reduce a coefficient: Fractions with unit denominator become ints."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, int):
        return value
    raise TypeError(f"coefficient must be int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True)
class Series:
    """A univariate power series truncated at ``order`` (inclusive).

    ``coeffs[i]`` is the coefficient of the i-th power of the variable;
    there are exactly ``order + 1`` of them. Instances are immutable and
    all operations are pure, so unrestricted concurrent use is safe.
    """

    order: int
    coeffs: tuple[Rational, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be >= 0")
        coeffs = tuple(_normalize(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients for order {self.order}, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Rational], order: int) -> Series:
        """Build from leading coefficients, zero-padded or cut to ``order``."""
        cs = list(coeffs)[: order + 1]
        cs.extend([0] * (order + 1 - len(cs)))
        return cls(order, tuple(cs))

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls.from_coeffs([], order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls.from_coeffs([1], order)

    @classmethod
    def monomial(cls, coeff: Rational, power: int, order: int) -> Series:
        """The single-term series ``coeff * var**power`` at the given order."""
        if power < 0:
            raise ValueError("power must be >= 0")
        cs = [0] * (order + 1)
        if power <= order:
            cs[power] = coeff
        return cls(order, tuple(cs))

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coefficient(self, n: int) -> Rational:
        """Coefficient of the n-th power; ``n`` must be within the order."""
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def as_integer_sequence(self) -> list[int]:
        """Coefficients as arbitrary-precision ints.

        Raises :class:`NonIntegralError` if any coefficient has a surviving
        denominator; for counting series that signals a formula or
        implementation bug upstream.
        """
        out: list[int] = []
        for i, c in enumerate(self.coeffs):
            if isinstance(c, Fraction):
                raise NonIntegralError(f"coefficient of order {i} is non-integral: {c}")
            out.append(c)
        return out

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        if order == self.order:
            return self
        return Series(order, self.coeffs[: order + 1])

    # -- ring operations --------------------------------------------------

    def __add__(self, other: Series | Rational) -> Series:
        if isinstance(other, (int, Fraction)):
            cs = list(self.coeffs)
            cs[0] = cs[0] + other
            return Series(self.order, tuple(cs))
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        return Series(
            order,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
        )

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Series | Rational) -> Series:
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Rational) -> Series:
        return (-self) + other

    def __mul__(self, other: Series | Rational) -> Series:
        if isinstance(other, (int, Fraction)):
            return Series(self.order, tuple(c * other for c in self.coeffs))
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(order + 1):
            acc = 0
            for i in range(n + 1):
                ai = a[i]
                if ai:
                    bj = b[n - i]
                    if bj:
                        acc += ai * bj
            out.append(acc)
        return Series(order, tuple(out))

    __rmul__ = __mul__

    def reciprocal(self) -> Series:
        """Multiplicative inverse up to the truncation order.

        The constant term must be nonzero; otherwise
        :class:`NonInvertibleError` is raised.
        """
        a = self.coeffs
        if a[0] == 0:
            raise NonInvertibleError("series with zero constant term has no reciprocal")
        inv0 = Fraction(1) / a[0]
        out: list[Rational] = [inv0]
        for n in range(1, self.order + 1):
            acc = 0
            for i in range(1, n + 1):
                ai = a[i]
                if ai:
                    acc += ai * out[n - i]
            out.append(-inv0 * acc)
        return Series(self.order, tuple(out))

    def __truediv__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        return self * other.reciprocal()

    def power(self, m: int) -> Series:
        """m-th power by repeated truncated multiplication; ``a.power(0)`` is 1."""
        if m < 0:
            raise ValueError("exponent must be >= 0")
        result = Series.one(self.order)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def shift(self, p: int) -> Series:
        """Multiply by the p-th power of the variable, keeping the order."""
        if p < 0:
            raise ValueError("shift must be >= 0")
        if p == 0:
            return self
        cs = (0,) * min(p, self.order + 1) + self.coeffs[: max(self.order + 1 - p, 0)]
        return Series(self.order, cs)


def catalan_series(order: int) -> Series:
    """Counting series of balanced up/down excursions, indexed by semilength.

    Computed by the convolution recurrence c_0 = 1,
    c_n = sum(c_i * c_{n-1-i} for i < n); all coefficients are positive ints.
    """
    cs = [1]
    for n in range(1, order + 1):
        cs.append(sum(cs[i] * cs[n - 1 - i] for i in range(n)))
    return Series(order, tuple(cs))


@dataclass(frozen=True)
class BivarSeries:
    """Polynomial in a marker variable z, truncated in z, with Series entries.

    ``entries[j]`` is the univariate x-series multiplying the z^j term. All
    entries share ``x_order``. Immutable; operations are pure functions.
    """

    z_order: int
    x_order: int
    entries: tuple[Series, ...]

    def __post_init__(self) -> None:
        if self.z_order < 0:
            raise ValueError("z_order must be >= 0")
        if len(self.entries) != self.z_order + 1:
            raise ValueError(
                f"expected {self.z_order + 1} entries for z_order {self.z_order}, "
                f"got {len(self.entries)}"
            )
        for e in self.entries:
            if e.order != self.x_order:
                raise ValueError("all entries must share the same x_order")

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_series(cls, s: Series, z_order: int) -> BivarSeries:
        """Embed a univariate series as the z^0 entry."""
        zero = Series.zero(s.order)
        return cls(z_order, s.order, (s,) + (zero,) * z_order)

    @classmethod
    def zero(cls, z_order: int, x_order: int) -> BivarSeries:
        return cls.from_series(Series.zero(x_order), z_order)

    @classmethod
    def one(cls, z_order: int, x_order: int) -> BivarSeries:
        return cls.from_series(Series.one(x_order), z_order)

    @classmethod
    def monomial(
        cls, coeff: Rational, x_power: int, z_power: int, z_order: int, x_order: int
    ) -> BivarSeries:
        """The single term ``coeff * x**x_power * z**z_power``."""
        if z_power < 0:
            raise ValueError("z_power must be >= 0")
        entries = [Series.zero(x_order) for _ in range(z_order + 1)]
        if z_power <= z_order:
            entries[z_power] = Series.monomial(coeff, x_power, x_order)
        return cls(z_order, x_order, tuple(entries))

    # -- queries ----------------------------------------------------------

    def z_slice(self, j: int) -> Series:
        """The x-series multiplying z^j."""
        if not 0 <= j <= self.z_order:
            raise ValueError(f"z-degree {j} outside truncation order {self.z_order}")
        return self.entries[j]

    def subs_z_one(self) -> Series:
        """Substitute z = 1: the sum of all entries."""
        total = self.entries[0]
        for e in self.entries[1:]:
            total = total + e
        return total

    def truncate(self, z_order: int, x_order: int) -> BivarSeries:
        if z_order > self.z_order or x_order > self.x_order:
            raise ValueError("cannot extend truncation orders")
        if z_order == self.z_order and x_order == self.x_order:
            return self
        return BivarSeries(
            z_order, x_order, tuple(e.truncate(x_order) for e in self.entries[: z_order + 1])
        )

    # -- ring operations --------------------------------------------------

    def _coerce(self, other: BivarSeries | Series | Rational) -> BivarSeries | None:
        if isinstance(other, BivarSeries):
            return other
        if isinstance(other, Series):
            return BivarSeries.from_series(other, self.z_order)
        if isinstance(other, (int, Fraction)):
            return BivarSeries.from_series(
                Series.monomial(other, 0, self.x_order), self.z_order
            )
        return None

    def _match(self, other: BivarSeries) -> tuple[BivarSeries, BivarSeries]:
        zo = min(self.z_order, other.z_order)
        xo = min(self.x_order, other.x_order)
        return self.truncate(zo, xo), other.truncate(zo, xo)

    def __add__(self, other: BivarSeries | Series | Rational) -> BivarSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._match(rhs)
        return BivarSeries(
            a.z_order,
            a.x_order,
            tuple(x + y for x, y in zip(a.entries, b.entries)),
        )

    __radd__ = __add__

    def __neg__(self) -> BivarSeries:
        return BivarSeries(self.z_order, self.x_order, tuple(-e for e in self.entries))

    def __sub__(self, other: BivarSeries | Series | Rational) -> BivarSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Series | Rational) -> BivarSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: BivarSeries | Series | Rational) -> BivarSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._match(rhs)
        zero = Series.zero(a.x_order)
        out = [zero] * (a.z_order + 1)
        for i, ei in enumerate(a.entries):
            if ei.is_zero:
                continue
            for j in range(a.z_order + 1 - i):
                fj = b.entries[j]
                if fj.is_zero:
                    continue
                out[i + j] = out[i + j] + ei * fj
        return BivarSeries(a.z_order, a.x_order, tuple(out))

    __rmul__ = __mul__

    def reciprocal(self) -> BivarSeries:
        """Multiplicative inverse, truncated in both variables.

        Requires the (z^0, x^0) constant to be nonzero.
        """
        a0 = self.entries[0]
        if a0.coeffs[0] == 0:
            raise NonInvertibleError(
                "bivariate series with zero constant term has no reciprocal"
            )
        inv0 = a0.reciprocal()
        out = [inv0]
        for j in range(1, self.z_order + 1):
            acc = Series.zero(self.x_order)
            for i in range(1, j + 1):
                ai = self.entries[i]
                if not ai.is_zero:
                    acc = acc + ai * out[j - i]
            out.append(-(inv0 * acc))
        return BivarSeries(self.z_order, self.x_order, tuple(out))
