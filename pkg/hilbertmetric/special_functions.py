# -*- coding: utf-8 -*-

"""
Special functions
=================

The complete elliptic integral of the first kind

.. math::

    \\mathcal{K}(r) = \\int_0^1 \\frac{dx}{\\sqrt{(1-x^2)(1-r^2x^2)}}
                   = \\frac{\\pi}{2\\,\\mathrm{agm}(1, \\sqrt{1-r^2})}

and the functions built on it: the modulus :math:`\\mu(r)` of the Grötzsch
ring, the planar Grötzsch capacity :math:`\\gamma_2`, the distortion function
:math:`\\varphi_K` and the Schwarz lemma constant
:math:`c(K) = 2\\,\\mathrm{arth}(\\varphi_K(\\mathrm{th}\\tfrac12))`.

.. code-block:: python

    >>> import math
    >>> mu(1 / math.sqrt(2)) == math.pi / 2
    True
    >>> c_of_K(1)
    1.0

:py:func:`ell_K_quadrature` and :py:func:`phi_K_via_gamma` are independent
evaluation paths kept as oracles for the AGM and :math:`\\mu` based ones.

----

API
---
"""

import logging
import math
from typing import NamedTuple

import scipy.integrate
import scipy.optimize

from .exceptions import ConvergenceFailure, OutOfDomain
from .geom_core import arch, arth

__all__ = (
    'agm',
    'ell_K',
    'ell_K_quadrature',
    'mu',
    'mu_derivative',
    'mu_inv',
    'gamma2',
    'gamma2_inv',
    'phi_K',
    'phi_K_via_gamma',
    'c_of_K',
    'SchwarzBounds',
    'c_bounds',
    'TH_HALF',
    'U_CONSTANT',
    'V_CONSTANT',
)

log = logging.getLogger('hilbertmetric.special_functions')

TH_HALF = math.tanh(0.5)

#: arch(e) th(arch(e)), slope of the linear lower bound of c(K)
U_CONSTANT = arch(math.e) * math.tanh(arch(math.e))

#: log(2(1 + sqrt(1 - 1/e^2))), slope of the linear upper bound of c(K)
V_CONSTANT = math.log(2.0 * (1.0 + math.sqrt(1.0 - math.exp(-2.0))))

_AGM_MAXITER = 64
_MU_SELF_COMPLEMENTARY = math.pi / 2.0
_MU_ASYMPTOTIC = 40.0


def agm(x: float, y: float) -> float:
    """
    Arithmetic-geometric mean.

    :raises OutOfDomain: ``x`` or ``y`` is not positive
    """
    if not (x > 0 and y > 0):
        raise OutOfDomain('agm needs positive arguments', operation='agm', value=(x, y))
    a, g = float(x), float(y)
    for _ in range(_AGM_MAXITER):
        if abs(a - g) <= 1e-15 * a:
            return 0.5 * (a + g)
        a, g = 0.5 * (a + g), math.sqrt(a * g)
    raise ConvergenceFailure('agm iteration did not converge', operation='agm', value=(x, y))


def _complement(r: float) -> float:
    return math.sqrt((1.0 - r) * (1.0 + r))


def ell_K(r: float) -> float:
    """:math:`\\mathcal{K}(r)` for :math:`0 \\le r < 1`."""
    if not 0.0 <= r < 1.0:
        raise OutOfDomain('modulus must be in [0, 1)', operation='ell_K', value=r)
    return math.pi / (2.0 * agm(1.0, _complement(r)))


def ell_K_quadrature(r: float) -> float:
    """:math:`\\mathcal{K}(r)` by adaptive quadrature of :math:`\\int_0^{\\pi/2} (1-r^2\\sin^2\\theta)^{-1/2}d\\theta`."""
    if not 0.0 <= r < 1.0:
        raise OutOfDomain('modulus must be in [0, 1)', operation='ell_K_quadrature', value=r)
    value, _ = scipy.integrate.quad(lambda theta: 1.0 / math.sqrt(1.0 - (r * math.sin(theta)) ** 2),
                                    0.0, math.pi / 2.0, epsabs=1e-15, epsrel=1e-14, limit=200)
    return value


def mu(r: float) -> float:
    """
    :math:`\\mu(r) = \\frac{\\pi}{2}\\mathcal{K}(r')/\\mathcal{K}(r)`, a
    decreasing homeomorphism of (0, 1) onto (0, inf).
    """
    if not 0.0 < r < 1.0:
        raise OutOfDomain('modulus must be in (0, 1)', operation='mu', value=r)
    return math.pi * agm(1.0, _complement(r)) / (2.0 * agm(1.0, r))


def mu_derivative(r: float) -> float:
    """:math:`\\mu'(r) = -\\pi^2/(4r(1-r^2)\\mathcal{K}(r)^2)`."""
    if not 0.0 < r < 1.0:
        raise OutOfDomain('modulus must be in (0, 1)', operation='mu_derivative', value=r)
    return -math.pi ** 2 / (4.0 * r * (1.0 - r) * (1.0 + r) * ell_K(r) ** 2)


def mu_inv(y: float) -> float:
    """
    The ``r`` in (0, 1) with :math:`\\mu(r) = y`.

    Values below :math:`\\pi/2` go through :math:`\\mu(r)\\mu(r') = \\pi^2/4`.
    Above it, ``r`` is bracketed by :math:`e^{-y} < r < 4e^{-y}`, bisected
    and polished with Newton steps; beyond ``y = 40`` the asymptote
    :math:`4e^{-y}` is exact in double precision.

    :raises OutOfDomain: ``y <= 0``
    :raises ConvergenceFailure: The root search failed
    """
    if not (y > 0 and math.isfinite(y)):
        raise OutOfDomain('mu_inv needs a positive argument', operation='mu_inv', value=y)
    if y == _MU_SELF_COMPLEMENTARY:
        return 1.0 / math.sqrt(2.0)
    if y < _MU_SELF_COMPLEMENTARY:
        return _complement(mu_inv(math.pi ** 2 / (4.0 * y)))
    if y > _MU_ASYMPTOTIC:
        return 4.0 * math.exp(-y)

    def excess(r):
        return mu(r) - y

    low = math.exp(-y)
    high = min(4.0 * math.exp(-y), 1.0 / math.sqrt(2.0))
    try:
        r = scipy.optimize.bisect(excess, low, high, xtol=1e-300, rtol=1e-10, maxiter=200)
        r = scipy.optimize.newton(excess, r, fprime=mu_derivative, tol=0.0, rtol=1e-15, maxiter=20)
    except (RuntimeError, ValueError) as exc:
        raise ConvergenceFailure(str(exc), operation='mu_inv', value=y) from exc
    log.debug('mu_inv(%r) = %r', y, r)
    return float(r)


def gamma2(s: float) -> float:
    """Planar Grötzsch capacity :math:`\\gamma_2(s) = 2\\pi/\\mu(1/s)` for ``s > 1``."""
    if not s > 1.0:
        raise OutOfDomain('gamma2 needs s > 1', operation='gamma2', value=s)
    return 2.0 * math.pi / mu(1.0 / s)


def gamma2_inv(y: float) -> float:
    """The ``s > 1`` with :math:`\\gamma_2(s) = y`."""
    if not y > 0:
        raise OutOfDomain('gamma2_inv needs a positive argument', operation='gamma2_inv', value=y)
    return 1.0 / mu_inv(2.0 * math.pi / y)


def _check_phi_args(K: float, r: float, operation: str):
    if not K > 0:
        raise OutOfDomain('K must be positive', operation=operation, value=K)
    if not 0.0 <= r <= 1.0:
        raise OutOfDomain('r must be in [0, 1]', operation=operation, value=r)


def phi_K(K: float, r: float) -> float:
    """:math:`\\varphi_K(r) = \\mu^{-1}(\\mu(r)/K)` with fixed endpoints 0 and 1."""
    _check_phi_args(K, r, 'phi_K')
    if r == 0.0 or r == 1.0:
        return r
    return mu_inv(mu(r) / K)


def phi_K_via_gamma(K: float, r: float) -> float:
    """:math:`\\varphi_K(r) = 1/\\gamma_2^{-1}(K\\gamma_2(1/r))`."""
    _check_phi_args(K, r, 'phi_K_via_gamma')
    if r == 0.0 or r == 1.0:
        return r
    return 1.0 / gamma2_inv(K * gamma2(1.0 / r))


def c_of_K(K: float) -> float:
    """:math:`c(K) = 2\\,\\mathrm{arth}(\\varphi_K(\\mathrm{th}\\tfrac12))`, with ``c(1) = 1``."""
    if not K >= 1.0:
        raise OutOfDomain('K must be at least 1', operation='c_of_K', value=K)
    return 2.0 * arth(phi_K(K, TH_HALF))


class SchwarzBounds(NamedTuple):
    """
    The chain
    :math:`K \\le u(K-1)+1 \\le \\log\\mathrm{ch}(K\\,\\mathrm{arch}\\,e) \\le c(K) \\le v(K-1)+K`.
    """
    K: float
    linear_lower: float
    log_cosh_lower: float
    c: float
    upper: float

    def margins(self):
        """Consecutive differences of the chain, all nonnegative when it holds."""
        return (self.linear_lower - self.K,
                self.log_cosh_lower - self.linear_lower,
                self.c - self.log_cosh_lower,
                self.upper - self.c)


def c_bounds(K: float) -> SchwarzBounds:
    if not K >= 1.0:
        raise OutOfDomain('K must be at least 1', operation='c_bounds', value=K)
    return SchwarzBounds(K=float(K),
                         linear_lower=U_CONSTANT * (K - 1.0) + 1.0,
                         log_cosh_lower=math.log(math.cosh(K * arch(math.e))),
                         c=c_of_K(K),
                         upper=V_CONSTANT * (K - 1.0) + K)
