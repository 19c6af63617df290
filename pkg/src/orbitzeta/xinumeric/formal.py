"""Formal certificates that deep pole coefficients cancel identically.

The Taylor coefficients of the regular part of xi at each integer point are
treated as independent indeterminates t[a;k] (k-th coefficient at point a).
A factor xi(1 + b*s) expands to 1/(b*s) + sum_k t[1;k] (b*s)^k with the
principal part exact; a factor xi(a + b*s), a >= 2, expands to
sum_k t[a;k] (b*s)^k.  Expanding an expression with these symbolic
coefficients and checking that every s^-k coefficient with k >= 2 is the
zero polynomial proves the cancellation for every possible value of the
underlying transcendental constants, not merely to working precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FormalPoly:
    """Polynomial with rational coefficients in the indeterminates t[a;k].

    A monomial is a sorted tuple of (a, k) pairs, with repetition.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        merged = {}
        for mono, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                mono = tuple(sorted(mono))
                merged[mono] = merged.get(mono, Fraction(0)) + coeff
        merged = {m: c for m, c in merged.items() if c}
        object.__setattr__(self, "terms", merged)

    def __setattr__(self, name, value):
        raise AttributeError("FormalPoly is immutable")

    @classmethod
    def constant(cls, q):
        return cls({(): Fraction(q)})

    @classmethod
    def variable(cls, a, k, coeff=1):
        return cls({((a, k),): Fraction(coeff)})

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return FormalPoly(out)

    def __mul__(self, other):
        if not isinstance(other, FormalPoly):
            return self.scale(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return FormalPoly(out)

    def scale(self, q):
        q = Fraction(q)
        return FormalPoly({m: c * q for m, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FormalPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(("FormalPoly", tuple(sorted(self.terms.items()))))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in sorted(self.terms.items()):
            vars_text = "*".join(self._var_text(mono))
            if not vars_text:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(vars_text)
            elif coeff == -1:
                pieces.append("-%s" % vars_text)
            else:
                pieces.append("%s*%s" % (coeff, vars_text))
        return " + ".join(pieces).replace("+ -", "- ")

    @staticmethod
    def _var_text(mono):
        out = []
        i = 0
        while i < len(mono):
            j = i
            while j < len(mono) and mono[j] == mono[i]:
                j += 1
            a, k = mono[i]
            base = "t[%d;%d]" % (a, k)
            out.append(base if j - i == 1 else "%s^%d" % (base, j - i))
            i = j
        return out

    def __repr__(self):
        return "FormalPoly(%s)" % self


class _FormalSeries:
    """Laurent series with FormalPoly coefficients on a fixed window."""

    __slots__ = ("min_degree", "coeffs")

    def __init__(self, min_degree, coeffs):
        self.min_degree = min_degree
        self.coeffs = list(coeffs)

    @classmethod
    def unit(cls, length):
        return cls(0, [FormalPoly.constant(1)] + [FormalPoly()] * (length - 1))

    def __mul__(self, other):
        rel = min(len(self.coeffs), len(other.coeffs))
        out = []
        for j in range(rel):
            acc = FormalPoly()
            for i in range(j + 1):
                if self.coeffs[i].is_zero or other.coeffs[j - i].is_zero:
                    continue
                acc = acc + self.coeffs[i] * other.coeffs[j - i]
            out.append(acc)
        return _FormalSeries(self.min_degree + other.min_degree, out)

    def scale(self, q):
        return _FormalSeries(self.min_degree, [c.scale(q) for c in self.coeffs])

    def coefficient(self, degree):
        idx = degree - self.min_degree
        if idx < 0:
            return FormalPoly()
        if idx >= len(self.coeffs):
            raise IndexError("degree %d outside window" % degree)
        return self.coeffs[idx]

    @property
    def top_degree(self):
        return self.min_degree + len(self.coeffs) - 1


def _formal_factor(a, b, length):
    coeffs = []
    min_degree = 0
    if a == 1:
        coeffs.append(FormalPoly.constant(Fraction(1, b)))
        min_degree = -1
        taylor = length - 1
    else:
        taylor = length
    for k in range(taylor):
        coeffs.append(FormalPoly.variable(a, k, Fraction(b) ** k))
    return _FormalSeries(min_degree, coeffs)


@dataclass(frozen=True)
class CancellationReport:
    """Formal verdicts per negative degree of an expanded expression.

    verdicts maps each degree in [-pole_bound, -1] to (is_zero, polynomial
    text).  all_deep_vanish is the headline: every s^-k with k >= 2 is the
    identically-zero polynomial.
    """

    pole_bound: int
    verdicts: tuple  # ((degree, is_zero, poly_text), ...) ascending by degree
    residue_text: str
    residue_is_zero: bool
    formal_pole_order: int
    all_deep_vanish: bool

    def verdict(self, degree):
        for d, ok, text in self.verdicts:
            if d == degree:
                return ok, text
        raise KeyError(degree)

    def to_json(self):
        return {
            "pole_bound": self.pole_bound,
            "verdicts": [
                {"degree": d, "formally_zero": ok, "coefficient": text}
                for d, ok, text in self.verdicts
            ],
            "residue": self.residue_text,
            "formal_pole_order": self.formal_pole_order,
            "all_deep_vanish": self.all_deep_vanish,
        }


def formal_cancellation_check(expression):
    """Certify which negative-degree coefficients vanish identically.

    Expands the expression with symbolic Taylor coefficients and reports, for
    every degree from -pole_bound to -1, whether the coefficient is the zero
    polynomial.  A True verdict holds regardless of the numeric values of
    the symbols; a False verdict names the surviving polynomial.
    """
    q_max = expression.max_polar_count()
    if q_max == 0 or expression.is_zero:
        return CancellationReport(
            pole_bound=0,
            verdicts=(),
            residue_text="0",
            residue_is_zero=True,
            formal_pole_order=0,
            all_deep_vanish=True,
        )
    length = q_max + 2  # window reaches degree -q + length - 1 >= 1 for every term
    acc = None
    for monomial, coeff in expression.sorted_terms():
        series = _FormalSeries.unit(length)
        for factor in monomial.factors:
            series = series * _formal_factor(factor.a, factor.b, length)
        series = series.scale(coeff)
        if acc is None:
            acc = series
        else:
            lo = min(acc.min_degree, series.min_degree)
            hi = min(acc.top_degree, series.top_degree)
            merged = [
                acc.coefficient(d) + series.coefficient(d) for d in range(lo, hi + 1)
            ]
            acc = _FormalSeries(lo, merged)

    verdicts = []
    formal_pole_order = 0
    for degree in range(-q_max, 0):
        poly = acc.coefficient(degree)
        verdicts.append((degree, poly.is_zero, str(poly)))
        if not poly.is_zero and formal_pole_order == 0:
            formal_pole_order = -degree
    residue_poly = acc.coefficient(-1)
    return CancellationReport(
        pole_bound=q_max,
        verdicts=tuple(verdicts),
        residue_text=str(residue_poly),
        residue_is_zero=residue_poly.is_zero,
        formal_pole_order=formal_pole_order,
        all_deep_vanish=all(ok for d, ok, _ in verdicts if d <= -2),
    )
