# -*- coding: utf-8 -*-

"""
Hyperbolic geometry
===================

The hyperbolic metric :math:`\\rho` of the unit ball and of the upper half
plane, the ideal endpoints of hyperbolic geodesics in the disk, hyperbolic
disks as Euclidean disks, the hyperbolic midpoint, and the intersection of
the tangent lines of a geodesic arc.

.. code-block:: python

    >>> from hilbertmetric.hyperbolic import rho_ball, hyp_midpoint
    >>> rho_ball(0, 0.5)            # log 3
    1.0986122886681098
    >>> hyp_midpoint(0, 0.8)
    array([0.5, 0. ])

Every function that takes points of the ball raises
:py:exc:`~hilbertmetric.exceptions.OutsideDomain` for points outside it and
:py:exc:`~hilbertmetric.exceptions.NearBoundary` for points closer to the
unit sphere than :py:attr:`~hilbertmetric.flags.NumericFlags.eps_bnd`.

----

API
---
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .exceptions import DegenerateInput, NearBoundary, OutOfDomain, OutsideDomain
from .flags import DEFAULT_FLAGS, NumericFlags
from .geom_core import (
    Circle2,
    Line2,
    PointLike,
    as_complex,
    as_points,
    circle_through,
    cross_ratio,
    mobius_T_complex,
    norm2,
    to_point,
)
from .report import MetricReport

__all__ = (
    'GeodesicArcB2',
    'EuclideanDiskImage',
    'rho_ball',
    'rho_half_plane',
    'rho_ball_via_endpoints',
    'geodesic_endpoints_ball',
    'hyp_disk_to_euclidean',
    'a_bracket',
    'midpoint_identity_residual',
    'hyp_midpoint',
    'tangent_meet_center',
    'chord_foot',
    'disk_automorphism',
    'require_in_ball',
    'midpoint_circle_check',
)

log = logging.getLogger('hilbertmetric.hyperbolic')


def require_in_ball(x: np.ndarray, operation: str, flags: NumericFlags = DEFAULT_FLAGS) -> np.ndarray:
    """
    :raises OutsideDomain: ``|x| >= 1``
    :raises NearBoundary: ``1 - |x| < eps_bnd``
    """
    r = float(np.linalg.norm(x))
    if r >= 1.0:
        raise OutsideDomain('point is outside the unit ball', operation=operation, value=tuple(x))
    if 1.0 - r < flags.eps_bnd:
        raise NearBoundary('point is too close to the unit sphere', operation=operation, value=tuple(x))
    return x


def _ball_pair(a: PointLike, b: PointLike, operation: str, flags: NumericFlags):
    a, b = as_points(a, b)
    return require_in_ball(a, operation, flags), require_in_ball(b, operation, flags)


@dataclass(frozen=True)
class GeodesicArcB2:
    """
    Ideal endpoints of the hyperbolic geodesic through two points of the disk,
    ``a_star`` on the side of the first point. ``carrier`` is the circle
    orthogonal to the unit circle that contains the geodesic, or the diameter
    when the geodesic passes through the origin.
    """
    a_star: np.ndarray
    b_star: np.ndarray
    carrier: Union[Circle2, Line2]

    @property
    def is_diameter(self) -> bool:
        return isinstance(self.carrier, Line2)

    @property
    def orthogonality_residual(self) -> float:
        """``| |c|^2 - r^2 - 1 |`` of the carrier circle, 0 for a diameter."""
        if self.is_diameter:
            return 0.0
        return abs(norm2(self.carrier.center) - self.carrier.radius ** 2 - 1.0)


@dataclass(frozen=True)
class EuclideanDiskImage:
    """The hyperbolic disk :math:`B_\\rho(x, M)` seen as the Euclidean disk ``B(center, radius)``."""
    center: np.ndarray
    radius: float
    t: float

    @property
    def circle(self) -> Circle2:
        return Circle2(self.center, self.radius)

    def sample(self, count: int) -> np.ndarray:
        return self.circle.sample(count)


def rho_ball(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """
    Hyperbolic distance in :math:`\\mathbb{B}^n`,
    :math:`2\\,\\mathrm{arsh}(|a-b| / \\sqrt{(1-|a|^2)(1-|b|^2)})`.
    """
    a, b = _ball_pair(a, b, 'rho_ball', flags)
    den = math.sqrt((1.0 - norm2(a)) * (1.0 - norm2(b)))
    return 2.0 * math.asinh(float(np.linalg.norm(a - b)) / den)


def rho_half_plane(a: PointLike, b: PointLike) -> float:
    """
    Hyperbolic distance in the upper half plane,
    :math:`\\mathrm{arch}(1 + |a-b|^2 / (2\\,\\mathrm{Im}\\,a\\,\\mathrm{Im}\\,b))`.

    :raises OutOfDomain: A point is not in the upper half plane
    """
    a = as_complex(a)
    b = as_complex(b)
    if a.imag <= 0 or b.imag <= 0:
        raise OutOfDomain('point is not in the upper half plane', operation='rho_half_plane',
                          value=a if a.imag <= 0 else b)
    # ch r = 1 + 2 sh^2(r/2)
    return 2.0 * math.asinh(abs(a - b) / (2.0 * math.sqrt(a.imag * b.imag)))


def geodesic_endpoints_ball(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> GeodesicArcB2:
    """
    Endpoints on the unit circle of the hyperbolic geodesic through ``a`` and
    ``b``, with ``|a - a_star| <= |b - a_star|``.

    :raises DegenerateInput: ``a = b``
    """
    a_pt, b_pt = _ball_pair(a, b, 'geodesic_endpoints_ball', flags)
    a, b = as_complex(a_pt), as_complex(b_pt)
    if abs(a - b) < flags.eps_deg:
        raise DegenerateInput('geodesic needs two distinct points', operation='geodesic_endpoints_ball')

    if abs((a.conjugate() * b).imag) < flags.eps_deg * abs(a - b):
        d = (b - a) / abs(b - a)
        a_star, b_star = -d, d
        carrier = Line2(a_star, b_star)
    else:
        # the geodesic circle also passes through the inversion of a (or b) in the unit circle
        base = a if abs(a) >= abs(b) else b
        carrier = circle_through(a, b, base / abs(base) ** 2, flags)
        c = as_complex(carrier.center)
        w1 = (1 + 1j * carrier.radius) / c.conjugate()
        w2 = (1 - 1j * carrier.radius) / c.conjugate()
        if abs(a - w1) / abs(b - w1) <= abs(a - w2) / abs(b - w2):
            a_star, b_star = w1, w2
        else:
            a_star, b_star = w2, w1
    return GeodesicArcB2(to_point(a_star), to_point(b_star), carrier)


def rho_ball_via_endpoints(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """:math:`\\rho(a, b) = \\log |a_*, a, b, b_*|` in the disk."""
    arc = geodesic_endpoints_ball(a, b, flags)
    return math.log(cross_ratio(arc.a_star, a, b, arc.b_star, flags))


def hyp_disk_to_euclidean(x: PointLike, M: float, flags: NumericFlags = DEFAULT_FLAGS) -> EuclideanDiskImage:
    """
    Euclidean center and radius of the hyperbolic disk of radius ``M``
    centered at ``x``.

    :raises OutOfDomain: ``x`` outside the ball or ``M <= 0``
    """
    x = require_in_ball(as_points(x, (0.0, 0.0))[0], 'hyp_disk_to_euclidean', flags)
    if not M > 0:
        raise OutOfDomain('hyperbolic radius must be positive', operation='hyp_disk_to_euclidean', value=M)
    t = math.tanh(M / 2.0)
    x2 = norm2(x)
    den = 1.0 - x2 * t * t
    return EuclideanDiskImage(x * (1.0 - t * t) / den, (1.0 - x2) * t / den, t)


def a_bracket(a: PointLike, b: PointLike) -> float:
    """:math:`A[a,b] = \\sqrt{|a-b|^2 + (1-|a|^2)(1-|b|^2)}`."""
    a, b = as_points(a, b)
    return math.sqrt(max(norm2(a - b) + (1.0 - norm2(a)) * (1.0 - norm2(b)), 0.0))


def midpoint_identity_residual(a: PointLike, b: PointLike) -> float:
    """
    Absolute difference of the two sides of
    :math:`|a(1-|b|^2) + b(1-|a|^2)|^2 = (1-|a|^2|b|^2)^2 - (1-|a|^2)(1-|b|^2)A[a,b]^2`.
    """
    a, b = as_points(a, b)
    a2, b2 = norm2(a), norm2(b)
    lhs = norm2(a * (1.0 - b2) + b * (1.0 - a2))
    rhs = (1.0 - a2 * b2) ** 2 - (1.0 - a2) * (1.0 - b2) * a_bracket(a, b) ** 2
    return abs(lhs - rhs)


def _weighted_sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a * (1.0 - norm2(b)) + b * (1.0 - norm2(a))


def hyp_midpoint(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> np.ndarray:
    """The point halving the hyperbolic segment from ``a`` to ``b``."""
    a, b = _ball_pair(a, b, 'hyp_midpoint', flags)
    a2, b2 = norm2(a), norm2(b)
    den = 1.0 - a2 * b2 + math.sqrt((1.0 - a2) * (1.0 - b2)) * a_bracket(a, b)
    return _weighted_sum(a, b) / den


def tangent_meet_center(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> np.ndarray:
    """
    Intersection of the tangent lines at ``a`` and ``b`` of the geodesic
    circle through them. It is the Euclidean center of the hyperbolic circle
    through ``a`` and ``b`` centered at their hyperbolic midpoint.

    :raises DegenerateInput: The denominator :math:`2 - 2a\\cdot b` vanishes
    """
    a, b = _ball_pair(a, b, 'tangent_meet_center', flags)
    den = 2.0 - 2.0 * float(np.dot(a, b))
    if den < flags.eps_deg:
        raise DegenerateInput('tangent lines do not meet', operation='tangent_meet_center')
    return _weighted_sum(a, b) / den


def chord_foot(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> np.ndarray:
    """The point where the line through 0 and ``tangent_meet_center(a, b)`` crosses ``[a, b]``."""
    a, b = _ball_pair(a, b, 'chord_foot', flags)
    return _weighted_sum(a, b) / (2.0 - norm2(a) - norm2(b))


def disk_automorphism(a: PointLike, theta: float = 0.0,
                      flags: NumericFlags = DEFAULT_FLAGS) -> Callable[[PointLike], np.ndarray]:
    """
    The self-map :math:`z \\mapsto e^{i\\theta} T_a(z)` of the disk. ``a = 0``
    gives a rotation.
    """
    a = as_complex(a)
    rotation = complex(math.cos(theta), math.sin(theta))
    if abs(a) < flags.eps_deg:
        return lambda z: to_point(rotation * as_complex(z))
    if abs(a) >= 1.0:
        raise OutOfDomain('automorphism parameter outside the disk', operation='disk_automorphism', value=a)
    return lambda z: to_point(rotation * mobius_T_complex(a, as_complex(z), flags))


def midpoint_circle_check(a: PointLike, b: PointLike, limit: float = 1e-9,
                          flags: NumericFlags = DEFAULT_FLAGS) -> MetricReport:
    """
    Check that the hyperbolic midpoint ``m`` of ``a`` and ``b`` also halves
    the hyperbolic segment between :py:func:`tangent_meet_center` and
    :py:func:`chord_foot`, and that the Euclidean circle centered at
    ``tangent_meet_center(a, b)`` through ``a`` is the hyperbolic circle of
    radius :math:`\\rho(a,b)/2` about ``m``.

    :raises DegenerateInput: ``a = b``
    """
    a, b = _ball_pair(a, b, 'midpoint_circle_check', flags)
    if norm2(a - b) < flags.eps_deg ** 2:
        raise DegenerateInput('points must be distinct', operation='midpoint_circle_check')

    cen = tangent_meet_center(a, b, flags)
    p = chord_foot(a, b, flags)
    m = hyp_midpoint(a, b, flags)
    rho = rho_ball(a, b, flags)
    image = hyp_disk_to_euclidean(m, rho / 2.0, flags)

    report = MetricReport('midpoint_circle', anchor='hyperbolic midpoint of the segment',
                          statement='the hyperbolic midpoint halves [tangent meet, chord foot]')
    report.add_metric('rho(a,b)', rho)
    report.add_metric('rho(cen,m)', rho_ball(cen, m, flags))
    report.add_metric('rho(m,p)', rho_ball(m, p, flags))
    report.add_residual('midpoint of [cen,p]', abs(report.metrics['rho(cen,m)'] - report.metrics['rho(m,p)']), limit)
    disk_residual = float(np.linalg.norm(image.center[:a.size] - cen)) + abs(image.radius - float(np.linalg.norm(cen - a)))
    report.add_residual('circle equals hyperbolic disk', disk_residual, limit)

    s = _weighted_sum(a, b)
    if norm2(s) > flags.eps_deg:
        direction = s / math.sqrt(norm2(s))
        angle_residual = max(float(np.linalg.norm(v / math.sqrt(norm2(v)) - direction)) for v in (cen, p, m))
        report.add_residual('common direction', angle_residual, limit)
    return report
