"""Truncated Laurent expansion at s = 0 of symbolic xi-factor expressions.

A factor xi(a + b*s) with a >= 2 contributes a plain Taylor series; a factor
with a = 1 contributes exactly 1/(b*s) plus the Taylor series of the regular
part at 1.  Principal-part coefficients are exact rationals; everything else
is a big float carrying a propagated absolute-error estimate.

Series windows: a series stores a contiguous block of coefficients starting
at min_degree.  Products of series with the same relative length keep that
relative length (the lowest stored orders of the factors determine exactly
that many orders of the product), so an expression with at most q polar
factors expanded at relative order K yields a trustworthy window
[-q, K - q].  Coefficients the window cannot certify are never reported.

Pole-order detection is numeric: a coefficient counts as zero only when it
sits well below the noise floor of 10^3 times its propagated error bound,
and as nonzero only when it sits well above; anything within a decade of the
floor is reported as indeterminate rather than silently classified.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

from .config import ExpansionOrderError, PrecisionConfig
from .kernel import expansion_at

# pole-order detection: coefficients below 10^3 * error are cancellation noise
NOISE_FLOOR_FACTOR = 1e3
# classification margin: one decade on each side of the floor is indeterminate
FLOOR_MARGIN = 10.0


def _is_exact(value):
    return isinstance(value, (Fraction, int))


class LaurentSeries:
    """Finite block of Laurent coefficients with per-coefficient error bounds."""

    __slots__ = ("min_degree", "values", "errors")

    def __init__(self, min_degree, values, errors):
        values = tuple(values)
        errors = tuple(float(e) for e in errors)
        if len(values) != len(errors):
            raise ValueError("values and errors must align")
        if not values:
            raise ValueError("series needs at least one stored coefficient")
        object.__setattr__(self, "min_degree", int(min_degree))
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "errors", errors)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    @classmethod
    def zero(cls, length=1, min_degree=0):
        return cls(min_degree, (Fraction(0),) * length, (0.0,) * length)

    @classmethod
    def unit(cls, length):
        values = (Fraction(1),) + (Fraction(0),) * (length - 1)
        return cls(0, values, (0.0,) * length)

    @property
    def top_degree(self):
        return self.min_degree + len(self.values) - 1

    def degrees(self):
        return range(self.min_degree, self.top_degree + 1)

    def coefficient(self, degree):
        """(value, error) at a degree; degrees below the window are exact zero."""
        if degree < self.min_degree:
            return Fraction(0), 0.0
        if degree > self.top_degree:
            raise IndexError(
                "degree %d above certified window (top %d)" % (degree, self.top_degree)
            )
        idx = degree - self.min_degree
        return self.values[idx], self.errors[idx]

    def noise_floor(self, degree):
        return NOISE_FLOOR_FACTOR * self.coefficient(degree)[1]

    def classify(self, degree):
        """'zero', 'nonzero', or 'indeterminate' for one coefficient."""
        value, error = self.coefficient(degree)
        if error == 0.0:
            return "nonzero" if value != 0 else "zero"
        mag = abs(float(value))
        floor = NOISE_FLOOR_FACTOR * error
        if mag > floor * FLOOR_MARGIN:
            return "nonzero"
        if mag < floor / FLOOR_MARGIN:
            return "zero"
        return "indeterminate"

    @property
    def is_zero_to_precision(self):
        return all(self.classify(d) == "zero" for d in self.degrees())

    def __add__(self, other):
        lo = min(self.min_degree, other.min_degree)
        hi = min(self.top_degree, other.top_degree)
        if hi < lo:
            raise ValueError("windows do not overlap")
        values = []
        errors = []
        for d in range(lo, hi + 1):
            v1, e1 = self.coefficient(d)
            v2, e2 = other.coefficient(d)
            values.append(v1 + v2)
            errors.append(e1 + e2)
        return LaurentSeries(lo, values, errors)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        rel = min(len(self.values), len(other.values))
        lo = self.min_degree + other.min_degree
        values = []
        errors = []
        for j in range(rel):
            acc = Fraction(0)
            err = 0.0
            for i in range(j + 1):
                x = self.values[i]
                ex = self.errors[i]
                y = other.values[j - i]
                ey = other.errors[j - i]
                acc = acc + x * y
                err += abs(float(x)) * ey + abs(float(y)) * ex + ex * ey
            values.append(acc)
            errors.append(err)
        return LaurentSeries(lo, values, errors)

    def scale(self, q):
        q = Fraction(q)
        mag = abs(float(q)) * (1 + 1e-12)
        return LaurentSeries(
            self.min_degree,
            tuple(v * q for v in self.values),
            tuple(e * mag for e in self.errors),
        )

    def __repr__(self):
        return "LaurentSeries(min_degree=%d, %d coeffs)" % (self.min_degree, len(self.values))

    def to_json(self, digits=30):
        report = residue_at_zero(self)
        return {
            "min_degree": self.min_degree,
            "coefficients": [
                {
                    "value": _format_value(v, digits),
                    "error": "%.3e" % e,
                }
                for v, e in zip(self.values, self.errors)
            ],
            "pole_order": report.pole_order,
            "residue": _format_value(report.residue, digits),
        }


def _format_value(value, digits):
    if _is_exact(value):
        value = mpf(value.numerator) / value.denominator if isinstance(value, Fraction) else mpf(value)
    return mpmath.nstr(value, digits, strip_zeros=False)


@dataclass(frozen=True)
class ResidueReport:
    """Pole order and residue of a series at s = 0, with a cancellation audit.

    pole_order is None when some deep coefficient sits within a decade of its
    noise floor and the order cannot be certified.  audit lists, for each
    degree below -pole_order, the coefficient magnitude and its noise floor:
    these are the cancellations the caller may want to inspect.
    """

    pole_order: object  # int or None
    residue: object  # mpf or Fraction
    residue_error: float
    is_zero: bool
    indeterminate_degrees: tuple
    audit: tuple

    @property
    def is_simple_pole(self):
        return self.pole_order == 1

    def to_json(self, digits=30):
        return {
            "pole_order": self.pole_order,
            "residue": _format_value(self.residue, digits),
            "residue_error": "%.3e" % self.residue_error,
            "is_zero": self.is_zero,
            "indeterminate_degrees": list(self.indeterminate_degrees),
            "audit": [
                {"degree": d, "magnitude": "%.3e" % m, "noise_floor": "%.3e" % f}
                for d, m, f in self.audit
            ],
        }


def residue_at_zero(series):
    """Pole order and s^-1 coefficient of an expanded series.

    The pole order is the most negative degree whose coefficient is certified
    nonzero; coefficients below the noise floor count as cancelled.
    """
    indeterminate = []
    pole_order = 0
    for d in series.degrees():
        if d >= 0:
            break
        cls = series.classify(d)
        if cls == "nonzero":
            pole_order = -d
            break
        if cls == "indeterminate":
            indeterminate.append(d)
    if indeterminate:
        pole_order = None

    if -1 >= series.min_degree and -1 <= series.top_degree:
        residue, residue_error = series.coefficient(-1)
    else:
        residue, residue_error = Fraction(0), 0.0

    audit = []
    if pole_order is not None:
        for d in series.degrees():
            if d >= -pole_order:
                break
            value, error = series.coefficient(d)
            audit.append((d, abs(float(value)), NOISE_FLOOR_FACTOR * error))

    return ResidueReport(
        pole_order=pole_order,
        residue=residue,
        residue_error=residue_error,
        is_zero=series.is_zero_to_precision,
        indeterminate_degrees=tuple(indeterminate),
        audit=tuple(audit),
    )


def _factor_series(a, b, config, length):
    """Laurent series of xi(a + b*s) with `length` stored coefficients."""
    table = expansion_at(a, config)
    values = []
    errors = []
    if a == 1:
        values.append(Fraction(1, b))
        errors.append(0.0)
        min_degree = -1
        taylor_needed = length - 1
    else:
        min_degree = 0
        taylor_needed = length
    bpow = mpf(1)
    for k in range(taylor_needed):
        values.append(table.coefficients[k] * bpow)
        errors.append(table.errors[k] * float(bpow))
        bpow *= b
    return LaurentSeries(min_degree, values, errors)


def laurent_expand(expression, config=None):
    """Expand a XiExpression at s = 0 into a LaurentSeries.

    The certified window is [-q, K - q] where q is the largest polar-factor
    count of any monomial and K the configured expansion order; the order
    must exceed q by at least 2 or the expansion is refused outright.
    """
    config = config or PrecisionConfig.default()
    if expression.is_zero:
        return LaurentSeries.zero(length=config.expansion_order + 1, min_degree=0)
    q_max = expression.max_polar_count()
    if config.expansion_order < q_max + 2:
        raise ExpansionOrderError(
            "expansion_order %d cannot cover pole order bound %d plus margin"
            % (config.expansion_order, q_max)
        )
    length = config.expansion_order + 1
    with mp.workdps(config.internal_dps):
        acc = None
        for monomial, coeff in expression.sorted_terms():
            series = LaurentSeries.unit(length)
            for factor in monomial.factors:
                series = series * _factor_series(factor.a, factor.b, config, length)
            series = series.scale(coeff)
            acc = series if acc is None else acc + series
        return acc
