# -*- coding: utf-8 -*-

"""
Hilbert metric
==============

The Hilbert distance of a bounded convex domain :math:`D` is

.. math::

    h_D(a, b) = \\log |u, a, b, v|

where :math:`u, v` are the endpoints of the chord of :math:`D` through
:math:`a` and :math:`b`, ordered so that u, a, b, v follow each other.
:py:func:`h_chord` evaluates this definition on any
:py:class:`~hilbertmetric.domain.ConvexDomain`; :py:func:`h_ball` is the
closed form on the unit ball.

.. code-block:: python

    >>> from hilbertmetric.domain import UnitBall, PolygonDomain
    >>> from hilbertmetric.polygon import preset_polygon
    >>> h_chord(UnitBall(2), 0, 0.5)
    1.0986122886681098
    >>> h_chord(PolygonDomain(preset_polygon('square')), (0, 0), (0.5, 0))
    1.0986122886681098

The planar constructions of this module (chordal projections, tangency
points, second intersections, the midpoint configuration) work with points of
the unit circle in complex form and return numpy arrays.

----

API
---
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .domain import ConvexDomain
from .exceptions import DegenerateInput, DomainNotNormalized, OutOfDomain
from .flags import DEFAULT_FLAGS, NumericFlags
from .geom_core import (
    PointLike,
    _require_on_circle,
    as_complex,
    as_points,
    cross_ratio,
    dist_origin_line,
    lis_complex,
    norm2,
    to_point,
)
from .hyperbolic import _ball_pair, rho_ball

__all__ = (
    'h_ball',
    'th2_quarter_h',
    'h_chord',
    'h_interval',
    'geodesic_chord_b2',
    'hilbert_midpoint',
    'tangency_points',
    'tangency_points_visual_angle',
    'chordal_projection',
    'parallel_projection_points',
    'second_intersection',
    'projected_chord_cross_ratio',
    'MidpointConfiguration',
    'midpoint_configuration',
    'functional_identity_residual',
    'hilbert_hyperbolic_sandwich',
    'euclidean_lower_bound_margin',
    'quarter_tanh_chain',
    'monotone_ratio',
    'max_interval_gap',
    'unit_disk_gap_margin',
)

log = logging.getLogger('hilbertmetric.hilbert')


def h_ball(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """
    Hilbert distance of the unit ball,
    :math:`2\\,\\mathrm{arch}\\big((1 - a\\cdot b)/\\sqrt{(1-|a|^2)(1-|b|^2)}\\big)`.

    Evaluated as :math:`2\\,\\mathrm{arsh}(\\sqrt{N}/R)` where
    :math:`N = (1-a\\cdot b)^2 - R^2 = |a-b|^2 - (|a|^2|b-a|^2 - (a\\cdot(b-a))^2)`,
    which keeps full relative accuracy for nearby points.
    """
    a, b = _ball_pair(a, b, 'h_ball', flags)
    diff = b - a
    wedge2 = norm2(a) * norm2(diff) - float(np.dot(a, diff)) ** 2
    num = max(norm2(diff) - max(wedge2, 0.0), 0.0)
    den = math.sqrt((1.0 - norm2(a)) * (1.0 - norm2(b)))
    return 2.0 * math.asinh(math.sqrt(num) / den)


def th2_quarter_h(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """:math:`\\mathrm{th}^2(h/4) = (1 - a\\cdot b - R)/(1 - a\\cdot b + R)` on the unit ball."""
    a, b = _ball_pair(a, b, 'th2_quarter_h', flags)
    R = math.sqrt((1.0 - norm2(a)) * (1.0 - norm2(b)))
    q = 1.0 - float(np.dot(a, b))
    return (q - R) / (q + R)


def h_chord(D: ConvexDomain, a: PointLike, b: PointLike) -> float:
    """
    Hilbert distance from the chord cross-ratio. Equal points give 0.

    :raises OutsideDomain: A point is outside ``D``
    :raises NearBoundary: A point is within ``eps_bnd`` of the boundary
    """
    a = D.require_inside(a, 'h_chord')
    b = D.require_inside(b, 'h_chord')
    if norm2(a - b) < D.flags.eps_deg ** 2:
        return 0.0
    u, v = D.chord(a, b, 'h_chord')
    return math.log(cross_ratio(u, a, b, v, D.flags))


def h_interval(a: float, b: float) -> float:
    """
    Hilbert distance of the interval (-1, 1), :math:`|\\log |-1, a, b, 1||`.

    :raises OutOfDomain: A point is outside (-1, 1)
    """
    for x in (a, b):
        if not -1.0 < x < 1.0:
            raise OutOfDomain('point outside (-1, 1)', operation='h_interval', value=x)
    return abs(math.log1p(b) + math.log1p(-a) - math.log1p(-b) - math.log1p(a))


def geodesic_chord_b2(a: PointLike, b: PointLike,
                      flags: NumericFlags = DEFAULT_FLAGS) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Chord ``(u, v)`` of the unit circle carrying the Hilbert geodesic through
    ``a`` and ``b``, and the foot ``c`` of the perpendicular from the origin.

    :raises DegenerateInput: ``a = b``
    """
    a_pt, b_pt = _ball_pair(a, b, 'geodesic_chord_b2', flags)
    a, b = as_complex(a_pt), as_complex(b_pt)
    if abs(a - b) < flags.eps_deg:
        raise DegenerateInput('chord needs two distinct points', operation='geodesic_chord_b2')
    c = lis_complex(a, b, 0j, 1j * (b - a), flags)
    d = (b - a) / abs(b - a)
    half = math.sqrt(max(1.0 - abs(c) ** 2, 0.0))
    return to_point(c - d * half), to_point(c + d * half), to_point(c)


def hilbert_midpoint(D: ConvexDomain, a: PointLike, b: PointLike) -> np.ndarray:
    """
    The point ``p`` of ``[a, b]`` with :math:`h_D(a, p) = h_D(p, b)`.

    With ``x`` the distance from ``u`` along the chord of length ``L``, the
    cross-ratios are ratios of :math:`g(x) = x/(L-x)`, so the midpoint solves
    :math:`g(x)^2 = g(|a-u|)\\,g(|b-u|)`.
    """
    a = D.require_inside(a, 'hilbert_midpoint')
    b = D.require_inside(b, 'hilbert_midpoint')
    if norm2(a - b) < D.flags.eps_deg ** 2:
        return a.copy()
    u, v = D.chord(a, b, 'hilbert_midpoint')
    length = float(np.linalg.norm(v - u))
    alpha = float(np.linalg.norm(a - u))
    beta = float(np.linalg.norm(b - u))
    G = math.sqrt(alpha / (length - alpha) * beta / (length - beta))
    x = length * G / (1.0 + G)
    return u + (v - u) * (x / length)


def tangency_points(a: PointLike, b: PointLike,
                    flags: NumericFlags = DEFAULT_FLAGS) -> Tuple[np.ndarray, np.ndarray]:
    """
    The two points ``w`` of the unit circle for which the circle through
    ``a``, ``b`` and ``w`` is internally tangent to the unit circle. They lie
    on opposite sides of L[a, b].

    :raises DegenerateInput: ``a = b``
    """
    a_pt, b_pt = _ball_pair(a, b, 'tangency_points', flags)
    a, b = as_complex(a_pt), as_complex(b_pt)
    k = (a - b) * a.conjugate() * b.conjugate() + a.conjugate() - b.conjugate()
    if abs(a - b) < flags.eps_deg or abs(k) < flags.eps_deg:
        raise DegenerateInput('tangency points need two distinct points', operation='tangency_points')
    real = abs(a) ** 2 - abs(b) ** 2
    imag = abs(a - b) * math.sqrt((1.0 - abs(a) ** 2) * (1.0 - abs(b) ** 2))
    return to_point((real + 1j * imag) / k), to_point((real - 1j * imag) / k)


def tangency_points_visual_angle(a: PointLike, b: PointLike,
                                 flags: NumericFlags = DEFAULT_FLAGS) -> Tuple[np.ndarray, np.ndarray]:
    """
    The tangency points from :math:`(1 \\pm i\\sqrt{|c|^2-1})/\\bar{c}` with
    :math:`c = (a(1-|b|^2) - b(1-|a|^2))/(|a|^2-|b|^2)`, the intersection of
    L[a, b] with the line through the inversions of ``a`` and ``b``. Only
    defined for :math:`|a| \\ne |b|`; the pair is unordered.

    :raises DegenerateInput: ``|a| = |b|``
    """
    a_pt, b_pt = _ball_pair(a, b, 'tangency_points_visual_angle', flags)
    a, b = as_complex(a_pt), as_complex(b_pt)
    gap = abs(a) ** 2 - abs(b) ** 2
    if abs(gap) < flags.eps_deg:
        raise DegenerateInput('points have equal modulus', operation='tangency_points_visual_angle')
    c = (a * (1.0 - abs(b) ** 2) - b * (1.0 - abs(a) ** 2)) / gap
    s = math.sqrt(max(abs(c) ** 2 - 1.0, 0.0))
    return to_point((1 + 1j * s) / c.conjugate()), to_point((1 - 1j * s) / c.conjugate())


def chordal_projection(u: PointLike, v: PointLike, w: PointLike, z: PointLike,
                       flags: NumericFlags = DEFAULT_FLAGS) -> np.ndarray:
    """
    :math:`F(z) = \\mathrm{LIS}[u, v, z, w]` for ``z`` on the unit circle, in
    the Möbius form :math:`((uv - uw - vw)z + uvw)/(uv - wz)`.

    :raises NotOnCircle: An argument is not on the unit circle
    :raises DegenerateInput: ``w`` coincides with ``u`` or ``v``, or ``z = uv/w``
    """
    u, v, w, z = (as_complex(p) for p in (u, v, w, z))
    for q in (u, v, w, z):
        _require_on_circle(q, 'chordal_projection', flags)
    if abs(w - u) < flags.eps_deg or abs(w - v) < flags.eps_deg:
        raise DegenerateInput('projection center is an endpoint of the chord', operation='chordal_projection')
    den = u * v - w * z
    if abs(den) < flags.eps_deg:
        raise DegenerateInput('line L[z, w] is parallel to the chord', operation='chordal_projection')
    return to_point(((u * v - u * w - v * w) * z + u * v * w) / den)


def parallel_projection_points(u: PointLike, v: PointLike, c: PointLike, d: PointLike, w: PointLike,
                               flags: NumericFlags = DEFAULT_FLAGS) -> Tuple[np.ndarray, np.ndarray]:
    """
    Closed forms of ``a = LIS[u, v, c, w]`` and ``b = LIS[u, v, d, w]`` when
    the chords [u, v] and [c, d] are parallel (so that ``uv = cd``):
    :math:`a = ((u+v-d)w - cd)/(w-d)`, :math:`b = ((u+v-c)w - cd)/(w-c)`.

    :raises DegenerateInput: The chords are not parallel or ``w`` equals ``c`` or ``d``
    """
    u, v, c, d, w = (as_complex(p) for p in (u, v, c, d, w))
    for q in (u, v, c, d, w):
        _require_on_circle(q, 'parallel_projection_points', flags)
    if abs(u * v - c * d) > flags.eps_circle:
        raise DegenerateInput('chords [u,v] and [c,d] are not parallel', operation='parallel_projection_points')
    if abs(w - c) < flags.eps_deg or abs(w - d) < flags.eps_deg:
        raise DegenerateInput('projection center coincides with c or d', operation='parallel_projection_points')
    return to_point(((u + v - d) * w - c * d) / (w - d)), to_point(((u + v - c) * w - c * d) / (w - c))


def second_intersection(p: PointLike, z: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> np.ndarray:
    """
    The point where the line through ``p`` and ``z`` meets the unit circle
    again, :math:`f_p(z) = -(z-p)/(1-\\bar{p}z)`.

    :raises OutOfDomain: ``p`` is outside the disk
    :raises NotOnCircle: ``z`` is not on the unit circle
    """
    p = as_complex(p)
    z = as_complex(z)
    if abs(p) >= 1.0:
        raise OutOfDomain('point outside the unit disk', operation='second_intersection', value=p)
    _require_on_circle(z, 'second_intersection', flags)
    return to_point(-(z - p) / (1.0 - p.conjugate() * z))


def projected_chord_cross_ratio(a: PointLike, b: PointLike, c: PointLike, d: PointLike,
                               flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """
    :math:`|(a-c)(b-d)/((a-d)(b-c))|` for points of the unit circle. It
    equals :math:`\\exp h(a_2, b_2)` for the projections
    :math:`a_2 = \\mathrm{LIS}[a,b,u,d]`, :math:`b_2 = \\mathrm{LIS}[a,b,u,c]`
    from any ``u`` on the arc between ``a`` and ``b`` away from ``c``, ``d``.
    """
    a, b, c, d = (as_complex(p) for p in (a, b, c, d))
    for q in (a, b, c, d):
        _require_on_circle(q, 'projected_chord_cross_ratio', flags)
    den = abs((a - d) * (b - c))
    if den < flags.eps_deg:
        raise DegenerateInput('points must be distinct', operation='projected_chord_cross_ratio')
    return abs((a - c) * (b - d)) / den


@dataclass(frozen=True)
class MidpointConfiguration:
    """
    Points of the Hilbert midpoint construction in the disk: the chord
    ``(u, v)`` through ``a`` and ``b``, a tangency point ``w``, the second
    intersections ``c``, ``d`` of L[w, a] and L[w, b] with the unit circle,
    the midpoint ``m`` of the arc cut off by [c, d] away from ``w``, and
    ``p = LIS[u, v, w, m]``.
    """
    a: np.ndarray
    b: np.ndarray
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray
    c: np.ndarray
    d: np.ndarray
    m: np.ndarray
    p: np.ndarray

    @property
    def parallel_residual(self) -> float:
        """Sine of the angle between L[a, b] and L[c, d]."""
        ab = as_complex(self.b) - as_complex(self.a)
        cd = as_complex(self.d) - as_complex(self.c)
        return abs((ab.conjugate() * cd).imag) / (abs(ab) * abs(cd))


def midpoint_configuration(a: PointLike, b: PointLike, which: int = 0,
                           flags: NumericFlags = DEFAULT_FLAGS) -> MidpointConfiguration:
    """
    Build the midpoint configuration from an arbitrary pair of the disk.
    ``which`` selects one of the two tangency points.
    """
    u, v, _ = geodesic_chord_b2(a, b, flags)
    w = tangency_points(a, b, flags)[which]
    a_pt, b_pt = as_points(a, b, (0.0, 0.0))[:2]
    c = second_intersection(a_pt, w, flags)
    d = second_intersection(b_pt, w, flags)
    cz, dz, wz = as_complex(c), as_complex(d), as_complex(w)
    m = (cz + dz) / abs(cz + dz)
    # m must lie across L[c, d] from w
    side_w = ((dz - cz).conjugate() * (wz - cz)).imag
    side_m = ((dz - cz).conjugate() * (m - cz)).imag
    if side_w * side_m > 0:
        m = -m
    p = lis_complex(as_complex(u), as_complex(v), wz, m, flags)
    return MidpointConfiguration(a_pt, b_pt, u, v, w, c, d, to_point(m), to_point(p))


def functional_identity_residual(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """:math:`|\\mathrm{sh}(h/2) - \\sqrt{1-m^2}\\,\\mathrm{sh}(\\rho/2)|` with ``m`` the distance from 0 to L[a, b]."""
    a, b = as_points(a, b)
    if norm2(a - b) < flags.eps_deg ** 2:
        return 0.0
    m = dist_origin_line(a, b, flags)
    return abs(math.sinh(h_ball(a, b, flags) / 2.0) - math.sqrt(1.0 - m * m) * math.sinh(rho_ball(a, b, flags) / 2.0))


def hilbert_hyperbolic_sandwich(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> Tuple[float, float]:
    """Margins of :math:`h \\le \\rho \\le h/\\sqrt{1-m^2}`."""
    a, b = as_points(a, b)
    h = h_ball(a, b, flags)
    rho = rho_ball(a, b, flags)
    if norm2(a - b) < flags.eps_deg ** 2:
        return 0.0, 0.0
    m = dist_origin_line(a, b, flags)
    return rho - h, h / math.sqrt(1.0 - m * m) - rho


def euclidean_lower_bound_margin(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """Margin of :math:`\\mathrm{th}(h/4) \\ge |a-b|/\\sqrt{4-|a+b|^2}` in the unit ball."""
    a, b = as_points(a, b)
    return math.tanh(h_ball(a, b, flags) / 4.0) - math.sqrt(norm2(a - b)) / math.sqrt(4.0 - norm2(a + b))


def quarter_tanh_chain(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> Tuple[float, float]:
    """
    Margins of :math:`\\mathrm{th}(\\rho/4) \\ge \\mathrm{th}(h/4) \\ge |a-b|/\\sqrt{4-|a+b|^2}`,
    both zero when ``a = -b``.
    """
    a, b = as_points(a, b)
    th_h = math.tanh(h_ball(a, b, flags) / 4.0)
    th_rho = math.tanh(rho_ball(a, b, flags) / 4.0)
    return th_rho - th_h, euclidean_lower_bound_margin(a, b, flags)


def monotone_ratio(c: float, t: float) -> float:
    """:math:`2\\,\\mathrm{arsh}(c\\,\\mathrm{sh}(t/2))/(ct)`, monotone in ``t`` with limits 1 and 1/c."""
    if not (c > 0 and t > 0):
        raise OutOfDomain('c and t must be positive', operation='monotone_ratio', value=(c, t))
    return 2.0 * math.asinh(c * math.sinh(t / 2.0)) / (c * t)


def max_interval_gap(h: float) -> float:
    """
    Largest :math:`|a-b|` over pairs of (-1, 1) at Hilbert distance ``h``,
    :math:`2\\,\\mathrm{th}(h/4)`, attained at :math:`a = -b = -\\mathrm{th}(h/4)`.
    """
    if h < 0:
        raise OutOfDomain('distance must be nonnegative', operation='max_interval_gap', value=h)
    return 2.0 * math.tanh(h / 4.0)


def unit_disk_gap_margin(D: ConvexDomain, a: PointLike, b: PointLike) -> float:
    """
    Margin of :math:`|a-b| \\le 2\\,\\mathrm{th}(h_D(a,b)/4)` for a domain
    inside the closed unit disk.

    :raises DomainNotNormalized: ``D`` is not contained in the closed unit disk
    """
    if not D.within_unit_disk():
        raise DomainNotNormalized('domain must lie in the closed unit disk', operation='unit_disk_gap_margin')
    a = D.point(a)
    b = D.point(b)
    return 2.0 * math.tanh(h_chord(D, a, b) / 4.0) - math.sqrt(norm2(a - b))
