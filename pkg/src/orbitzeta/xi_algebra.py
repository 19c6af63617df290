"""Exact symbolic algebra of products of completed-zeta factors.

Every object here is a rational linear combination of monomials, a monomial
being a multiset of factors xi(a + b*s) with integer a >= 1, b >= 1.  No
numeric evaluation happens in this module; equality is exact equality of
canonical forms.

The per-orbit product z_orbit attaches one factor per diagram cell, with
a = 1 + arm and b = hook.  The alternating weighted sum h_orbit combines the
z-products of all block-Levi classes inducing the orbit.  orbit_series_log
recomputes the same coefficients through the formal logarithm of the full
orbit sum, which is the identity the two constructions must satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import Partition, enumerate_classes, induce, partitions_of, young_stats


@dataclass(frozen=True, order=True)
class XiFactor:
    """One factor xi(a + b*s); a is the expansion point, b the slope."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("factor requires a >= 1 and b >= 1, got (%r, %r)" % (self.a, self.b))

    @property
    def is_polar(self):
        """True when the factor passes through the pole at argument 1."""
        return self.a == 1

    def __str__(self):
        if self.b == 1:
            return "xi(%d+s)" % self.a
        return "xi(%d+%ds)" % (self.a, self.b)


class XiMonomial:
    """A sorted multiset of XiFactors; the empty monomial is the unit."""

    __slots__ = ("factors",)

    def __init__(self, factors=()):
        factors = tuple(sorted(
            f if isinstance(f, XiFactor) else XiFactor(*f) for f in factors
        ))
        object.__setattr__(self, "factors", factors)

    def __setattr__(self, name, value):
        raise AttributeError("XiMonomial is immutable")

    @property
    def degree(self):
        """Number of factors, counted with multiplicity."""
        return len(self.factors)

    @property
    def polar_count(self):
        """Number of factors with a = 1 (each contributes one pole order)."""
        return sum(1 for f in self.factors if f.is_polar)

    def __mul__(self, other):
        return XiMonomial(self.factors + other.factors)

    def __eq__(self, other):
        return isinstance(other, XiMonomial) and self.factors == other.factors

    def __hash__(self):
        return hash(("XiMonomial", self.factors))

    def __lt__(self, other):
        return self._key() < other._key()

    def _key(self):
        return (len(self.factors), tuple((f.a, f.b) for f in self.factors))

    def __str__(self):
        if not self.factors:
            return "1"
        pieces = []
        i = 0
        while i < len(self.factors):
            j = i
            while j < len(self.factors) and self.factors[j] == self.factors[i]:
                j += 1
            if j - i == 1:
                pieces.append(str(self.factors[i]))
            else:
                pieces.append("%s^%d" % (self.factors[i], j - i))
            i = j
        return "*".join(pieces)

    def __repr__(self):
        return "XiMonomial(%r)" % (self.factors,)


class XiExpression:
    """Rational linear combination of XiMonomials, kept in canonical form."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        merged = {}
        for monomial, coeff in items:
            coeff = Fraction(coeff)
            if coeff:
                merged[monomial] = merged.get(monomial, Fraction(0)) + coeff
        merged = {m: c for m, c in merged.items() if c}
        object.__setattr__(self, "terms", merged)

    def __setattr__(self, name, value):
        raise AttributeError("XiExpression is immutable")

    @classmethod
    def unit(cls):
        return cls({XiMonomial(): Fraction(1)})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, factors, coeff=1):
        return cls({XiMonomial(factors): Fraction(coeff)})

    @property
    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0]._key())

    def coefficient(self, monomial):
        return self.terms.get(monomial, Fraction(0))

    def max_polar_count(self):
        """Largest number of polar factors over all monomials (0 if zero)."""
        return max((m.polar_count for m in self.terms), default=0)

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return XiExpression(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) - c
        return XiExpression(out)

    def __neg__(self):
        return XiExpression({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, XiExpression):
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = m1 * m2
                    out[m] = out.get(m, Fraction(0)) + c1 * c2
            return XiExpression(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, q):
        q = Fraction(q)
        return XiExpression({m: c * q for m, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, XiExpression) and self.terms == other.terms

    def __hash__(self):
        return hash(("XiExpression", tuple(sorted(
            ((tuple((f.a, f.b) for f in m.factors), (c.numerator, c.denominator))
             for m, c in self.terms.items()),
        ))))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for monomial, coeff in self.sorted_terms():
            if coeff == 1 and monomial.factors:
                body = str(monomial)
            elif coeff == -1 and monomial.factors:
                body = "-%s" % monomial
            elif monomial.factors:
                body = "%s*%s" % (coeff, monomial)
            else:
                body = str(coeff)
            pieces.append(body)
        text = " + ".join(pieces)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return "XiExpression(%s)" % self

    def to_json(self):
        return {
            "terms": [
                {
                    "coeff": {"num": c.numerator, "den": c.denominator},
                    "factors": [[f.a, f.b] for f in m.factors],
                }
                for m, c in self.sorted_terms()
            ]
        }


def xi_expr_equal(e1, e2):
    """Exact symbolic equality, no numeric evaluation involved."""
    return e1 == e2


def z_orbit(partition):
    """Product over diagram cells of xi(1 + arm + hook*s), as one monomial."""
    if not isinstance(partition, Partition):
        partition = Partition(partition)
    factors = [XiFactor(a=1 + cell.arm, b=cell.hook) for cell in young_stats(partition)]
    return XiExpression.monomial(factors)


def z_levi(cls):
    """Product of the per-block orbit products of a block-orbit class."""
    out = XiExpression.unit()
    for orbit in cls.orbits:
        out = out * z_orbit(orbit)
    return out


def h_orbit(partition):
    """Weighted alternating sum of z_levi over all classes inducing the orbit."""
    if not isinstance(partition, Partition):
        partition = Partition(partition)
    out = XiExpression.zero()
    for cls in enumerate_classes(partition):
        out = out + z_levi(cls).scale(cls.weight)
    return out


class OrbitSeries:
    """Formal sum of orbits with XiExpression coefficients, truncated by size.

    Multiplication of basis orbits is induction from two blocks: zero-pad,
    add parts componentwise, keep terms of total size <= bound.  The empty
    partition is the unit.
    """

    __slots__ = ("bound", "coeffs")

    def __init__(self, bound, coeffs=None):
        if bound < 0:
            raise ValueError("bound must be >= 0")
        clean = {}
        for p, e in (coeffs or {}).items():
            if not isinstance(p, Partition):
                p = Partition(p)
            if p.n <= bound and not e.is_zero:
                clean[p] = e
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("OrbitSeries is immutable")

    @classmethod
    def unit(cls, bound):
        return cls(bound, {Partition(()): XiExpression.unit()})

    @classmethod
    def zero(cls, bound):
        return cls(bound, {})

    def coefficient(self, partition):
        if not isinstance(partition, Partition):
            partition = Partition(partition)
        return self.coeffs.get(partition, XiExpression.zero())

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for p, e in other.coeffs.items():
            out[p] = out.get(p, XiExpression.zero()) + e
        return OrbitSeries(self.bound, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for p, e in other.coeffs.items():
            out[p] = out.get(p, XiExpression.zero()) - e
        return OrbitSeries(self.bound, out)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for p1, e1 in self.coeffs.items():
            for p2, e2 in other.coeffs.items():
                if p1.n + p2.n > self.bound:
                    continue
                blocks = []
                orbits = []
                if p1.n:
                    blocks.append(p1.n)
                    orbits.append(p1)
                if p2.n:
                    blocks.append(p2.n)
                    orbits.append(p2)
                p = induce(blocks, orbits) if blocks else Partition(())
                out[p] = out.get(p, XiExpression.zero()) + e1 * e2
        return OrbitSeries(self.bound, out)

    def scale(self, q):
        return OrbitSeries(self.bound, {p: e.scale(q) for p, e in self.coeffs.items()})

    def min_size(self):
        """Smallest orbit size carrying a nonzero coefficient (None if zero)."""
        return min((p.n for p in self.coeffs), default=None)

    def __eq__(self, other):
        return (
            isinstance(other, OrbitSeries)
            and self.bound == other.bound
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return "OrbitSeries(bound=%d, %d terms)" % (self.bound, len(self.coeffs))

    def _check(self, other):
        if not isinstance(other, OrbitSeries):
            raise TypeError("expected OrbitSeries")
        if other.bound != self.bound:
            raise ValueError("size bounds differ: %d vs %d" % (self.bound, other.bound))


def z_series(bound):
    """The full orbit sum: unit plus z_orbit(o) * o over all orbits of size <= bound."""
    coeffs = {Partition(()): XiExpression.unit()}
    for n in range(1, bound + 1):
        for p in partitions_of(n):
            coeffs[p] = z_orbit(p)
    return OrbitSeries(bound, coeffs)


def series_log(series):
    """Formal log of a series with unit constant term, truncated at the bound."""
    unit = XiExpression.unit()
    if series.coefficient(Partition(())) != unit:
        raise ValueError("series must have constant coefficient 1")
    x = series - OrbitSeries.unit(series.bound)
    if not x.coeffs:
        return OrbitSeries.zero(series.bound)
    if x.min_size() < 1:
        raise ValueError("log argument must be 1 + higher-order terms")
    out = OrbitSeries.zero(series.bound)
    power = OrbitSeries.unit(series.bound)
    for k in range(1, series.bound + 1):
        power = power * x
        if not power.coeffs:
            break
        out = out + power.scale(Fraction((-1) ** (k - 1), k))
    return out


def series_exp(series):
    """Formal exp of a series with zero constant term, truncated at the bound."""
    if not series.coefficient(Partition(())).is_zero:
        raise ValueError("exp argument must have zero constant coefficient")
    out = OrbitSeries.unit(series.bound)
    power = OrbitSeries.unit(series.bound)
    kfac = 1
    for k in range(1, series.bound + 1):
        power = power * series
        kfac *= k
        if not power.coeffs:
            break
        out = out + power.scale(Fraction(1, kfac))
    return out


def orbit_series_log(bound):
    """Coefficients of log(full orbit sum), truncated at total size <= bound.

    The coefficient of each orbit equals h_orbit of that orbit; computing the
    left side through the formal log gives an independent route to the same
    values, which is what verify-identity checks.
    """
    return series_log(z_series(bound))
