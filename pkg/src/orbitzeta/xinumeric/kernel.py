"""Arbitrary-precision evaluation of the completed zeta function.

The completed function is xi(z) = pi^(-z/2) * Gamma(z/2) * zeta(z).  It is
meromorphic with simple poles at z = 0 and z = 1 only, residues -1 and +1,
and satisfies xi(z) = xi(1 - z).

Routes kept deliberately independent:

- zeta values come from an Euler-Maclaurin summation implemented here (the
  Gamma factor and the underlying big-float arithmetic come from mpmath);
- Taylor coefficients at integer points come from trapezoid quadrature of the
  Cauchy integral on a small circle (spectrally accurate; aliasing estimated
  by comparing against the half-node rule);
- derivative values can be cross-checked through central finite differences
  with Richardson extrapolation, which shares no code with the contour route;
- the finite part at the pole z = 1 can be cross-checked through a direct
  Richardson limit of xi(1+u) - 1/u.

At z = 1 the object expanded is the regular part xi(z) - 1/(z-1); the
principal part 1/(z-1) is carried exactly and never enters the quadrature.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import NamedTuple

import mpmath
from mpmath import mp, mpc, mpf

from .config import ExpansionOrderError, PrecisionConfig, PrecisionError


class ValueWithError(NamedTuple):
    value: object  # mpf
    error: float


def zeta_euler_maclaurin(s, digits):
    """zeta(s) by Euler-Maclaurin summation, with an error estimate.

    Valid for any complex s != 1 (the correction depth adapts; the remainder
    bound requires Re(s) + 2M + 1 > 0, which the loop maintains).  Returns
    (value, error) where error is a conservative absolute estimate.
    """
    with mp.workdps(digits + 10):
        s = mpmath.mpmathify(s)
        if s == 1:
            raise ValueError("zeta has a pole at s = 1")
        target = mpf(10) ** (-(digits + 2))
        cutoff = max(16, int(1.3 * digits) + 8 + int(abs(mpmath.im(s))))
        for _ in range(4):
            got = _euler_maclaurin_once(s, cutoff, target)
            if got is not None:
                return got
            cutoff *= 2
        raise PrecisionError(
            "Euler-Maclaurin did not reach %d digits for s = %s" % (digits, s)
        )


def _euler_maclaurin_once(s, cutoff, target):
    acc = mpc(0)
    for j in range(1, cutoff):
        acc += mpf(j) ** (-s)
    acc += mpf(cutoff) ** (1 - s) / (s - 1)
    acc += mpf(cutoff) ** (-s) / 2

    # correction terms B_2k/(2k)! * s(s+1)...(s+2k-2) * cutoff^(-s-2k+1)
    rising = s
    npow = mpf(cutoff) ** (-s - 1)
    nstep = mpf(cutoff) ** (-2)
    prev_mag = mpf("inf")
    k = 1
    while k < 600:
        term = mpmath.bernoulli(2 * k) / mpmath.factorial(2 * k) * rising * npow
        mag = abs(term)
        if mag >= prev_mag:
            return None  # asymptotic tail started diverging: need larger cutoff
        acc += term
        if mag < target:
            # remainder is bounded by the next term times a geometry factor
            denom = mpmath.re(s) + 2 * k + 1
            if denom <= 0:
                return None
            factor = abs(s + 2 * k + 1) / denom
            return acc, float(mag * factor) + float(target)
        prev_mag = mag
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        npow *= nstep
        k += 1
    return None


def xi_point(z, digits):
    """xi(z) = pi^(-z/2) Gamma(z/2) zeta(z) away from the poles 0 and 1."""
    with mp.workdps(digits + 10):
        z = mpmath.mpmathify(z)
        if z == 0 or z == 1:
            raise ValueError("xi has poles at 0 and 1")
        zeta_val, zeta_err = zeta_euler_maclaurin(z, digits + 5)
        prefactor = mpmath.power(mp.pi, -z / 2) * mpmath.gamma(z / 2)
        value = prefactor * zeta_val
        # prefactor is accurate to working precision; fold both error sources
        err = float(abs(prefactor)) * zeta_err + float(abs(value)) * 10.0 ** (-(digits + 6))
        return value, err


@dataclass(frozen=True)
class XiPointExpansion:
    """Taylor data of the regular part of xi at an integer point.

    coefficients[k] is the k-th Taylor coefficient (derivative / k!) of xi at
    the point when point >= 2, and of xi(z) - 1/(z-1) when point == 1.  The
    principal part at 1 is exact: residue 1, never touched by quadrature.
    """

    point: int
    coefficients: tuple
    errors: tuple
    config: PrecisionConfig

    @property
    def has_principal_part(self):
        return self.point == 1

    @property
    def order(self):
        return len(self.coefficients) - 1


_expansion_cache = {}
_expansion_lock = threading.Lock()


def expansion_at(point, config=None):
    """Cached Taylor expansion of (the regular part of) xi at an integer >= 1."""
    config = config or PrecisionConfig.default()
    if point < 1:
        raise ValueError("expansion point must be an integer >= 1")
    key = (config, point)
    with _expansion_lock:
        hit = _expansion_cache.get(key)
    if hit is not None:
        return hit
    exp = _compute_expansion(point, config)
    with _expansion_lock:
        _expansion_cache[key] = exp
    return exp


def _compute_expansion(point, config):
    digits = config.internal_dps
    order = config.expansion_order
    nodes = config.contour_nodes
    if nodes % 2:
        nodes += 1
    with mp.workdps(digits + 10):
        radius = mpmath.mpmathify(config.contour_radius)
        samples = [None] * nodes
        max_mag = mpf(0)
        eval_err = 0.0
        # the integrand is real-analytic, so nodes in conjugate pairs share a value
        for m in range(nodes // 2 + 1):
            z = point + radius * mpmath.expjpi(mpf(2) * m / nodes)
            val, err = xi_point(z, digits + 5)
            if point == 1:
                val = val - 1 / (z - 1)
            samples[m] = val
            if 0 < m < nodes // 2:
                samples[nodes - m] = mpmath.conj(val)
            eval_err = max(eval_err, err)
            max_mag = max(max_mag, abs(val))

        coeffs = []
        errors = []
        rpow = mpf(1)
        for k in range(order + 1):
            full = mpc(0)
            half = mpc(0)
            for m in range(nodes):
                w = mpmath.expjpi(mpf(-2) * k * m / nodes)
                full += samples[m] * w
                if m % 2 == 0:
                    half += samples[m] * w
            full = full / nodes / rpow
            half = half / (nodes // 2) / rpow
            alias = float(abs(full - half))
            rounding = float(max_mag) / float(rpow) * 10.0 ** (-(digits + 2))
            evals = eval_err / float(rpow)
            imag_leak = float(abs(mpmath.im(full)))
            coeffs.append(mpmath.re(full))
            errors.append(alias + rounding + evals + imag_leak)
            rpow *= radius
        return XiPointExpansion(
            point=point,
            coefficients=tuple(coeffs),
            errors=tuple(errors),
            config=config,
        )


def xi_value(point, derivative_order=0, config=None):
    """Value of the k-th derivative of xi at an integer point >= 2.

    Primary route: Cauchy contour coefficients times k!.  Raises
    PrecisionError when the propagated estimate exceeds the contract bound of
    10^-(working_digits - 2).
    """
    config = config or PrecisionConfig.default()
    if point < 2:
        raise ValueError("xi_value needs point >= 2; use xi_expansion_at_one at the pole")
    if derivative_order < 0:
        raise ValueError("derivative order must be >= 0")
    if derivative_order > config.expansion_order:
        raise ExpansionOrderError(
            "derivative order %d exceeds configured expansion_order %d"
            % (derivative_order, config.expansion_order)
        )
    exp = expansion_at(point, config)
    with mp.workdps(config.internal_dps):
        fac = mpmath.factorial(derivative_order)
        value = exp.coefficients[derivative_order] * fac
        error = exp.errors[derivative_order] * float(fac)
    if error > config.target_abs_error:
        raise PrecisionError(
            "error %.3g exceeds requested bound %.3g at point %d order %d"
            % (error, config.target_abs_error, point, derivative_order)
        )
    return ValueWithError(value=value, error=error)


def xi_expansion_at_one(config=None):
    """Expansion of the regular part xi(z) - 1/(z-1) at z = 1.

    The pole itself is exact data: simple, residue 1.  Only the regular part
    is computed numerically.
    """
    return expansion_at(1, config or PrecisionConfig.default())


# ---------------------------------------------------------------------------
# independent cross-check routes (share no code with the contour quadrature)
# ---------------------------------------------------------------------------

_CENTRAL_STENCILS = {
    1: ((1, mpf(1)), (-1, mpf(-1))),
    2: ((1, mpf(1)), (0, mpf(-2)), (-1, mpf(1))),
    3: ((2, mpf(1)), (1, mpf(-2)), (-1, mpf(2)), (-2, mpf(-1))),
    4: ((2, mpf(1)), (1, mpf(-4)), (0, mpf(6)), (-1, mpf(-4)), (-2, mpf(1))),
}

_CENTRAL_DENOM_POW = {1: 1, 2: 2, 3: 3, 4: 4}
_CENTRAL_DENOM_SCALE = {1: 2, 2: 1, 3: 2, 4: 1}


def xi_value_fd(point, derivative_order, config=None, levels=6):
    """k-th derivative of xi at a real point by central differences.

    Richardson extrapolation over halved steps; the error estimate is the
    last extrapolation increment.  Cross-check route for xi_value.
    """
    config = config or PrecisionConfig.default()
    k = derivative_order
    if k not in _CENTRAL_STENCILS:
        raise ValueError("finite differences implemented for orders 1..4")
    digits = 2 * config.working_digits + 20
    with mp.workdps(digits + 10):
        h0 = mpf(1) / 64
        table = []
        for j in range(levels):
            h = h0 / 2**j
            acc = mpc(0)
            for offset, weight in _CENTRAL_STENCILS[k]:
                val, _ = xi_point(mpf(point) + offset * h, digits)
                acc += weight * val
            denom = _CENTRAL_DENOM_SCALE[k] * h ** _CENTRAL_DENOM_POW[k]
            table.append(acc / denom)
        # central stencils have even-power error expansions: eliminate h^2, h^4, ...
        increment = None
        for m in range(1, levels):
            factor = mpf(4) ** m
            new = []
            for i in range(len(table) - 1):
                new.append((factor * table[i + 1] - table[i]) / (factor - 1))
            increment = abs(new[-1] - table[-1])
            table = new
        value = mpmath.re(table[-1])
        err = float(increment) + float(abs(mpmath.im(table[-1]))) + 10.0 ** (-(digits - 5))
        return ValueWithError(value=value, error=err)


def xi_one_correction_limit(config=None, levels=12):
    """Finite part of xi at 1 by a direct Richardson limit of xi(1+u) - 1/u.

    Cross-check for coefficient 0 of xi_expansion_at_one.  Steps are powers
    of two so 1/u is exact and the subtraction loses only a few digits.
    """
    config = config or PrecisionConfig.default()
    digits = 2 * config.working_digits + 20
    with mp.workdps(digits + 10):
        table = []
        for j in range(levels):
            u = mpf(1) / 2 ** (4 + j)
            val, _ = xi_point(1 + u, digits)
            table.append(val - 1 / u)
        increment = None
        for m in range(1, levels):
            factor = mpf(2) ** m
            new = []
            for i in range(len(table) - 1):
                new.append((factor * table[i + 1] - table[i]) / (factor - 1))
            increment = abs(new[-1] - table[-1])
            table = new
        value = mpmath.re(table[-1])
        err = float(increment) + 10.0 ** (-(digits - 5))
        return ValueWithError(value=value, error=err)
