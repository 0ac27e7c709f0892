# -*- coding: utf-8 -*-

"""
Hilbert spheres and balls
=========================

In the unit ball the Hilbert sphere :math:`S_h(c, R)` is an ellipsoid of
revolution whose minor semi-axis points along ``c``;
:py:func:`hilbert_sphere_ellipsoid` returns its center and semi-axes in
closed form. In a general convex domain the Hilbert circle is traced
numerically by :py:func:`hilbert_ball_boundary`, one root per ray from the
center.

.. code-block:: python

    >>> import math
    >>> spec = hilbert_sphere_ellipsoid((0.5, 0), math.log(3))
    >>> spec.center, spec.a_min, spec.a_max
    (array([0.4, 0. ]), 0.4, 0.4472135954999579)

    >>> from hilbertmetric.domain import PolygonDomain
    >>> from hilbertmetric.polygon import preset_polygon
    >>> triangle = PolygonDomain(preset_polygon('triangle'))
    >>> circle = hilbert_ball_boundary(triangle, (0.1, 0), 1.0, 720)
    >>> circle.is_convex()
    True

----

API
---
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import scipy.linalg
import scipy.optimize

from .domain import ConvexDomain, PolygonDomain
from .exceptions import ConvergenceFailure, NearBoundary, OutOfDomain, UsageError
from .flags import DEFAULT_FLAGS, NumericFlags
from .geom_core import PointLike, as_point, norm2
from .hyperbolic import require_in_ball
from .json import format_float

__all__ = (
    'EllipsoidSpec',
    'Polyline',
    'hilbert_sphere_ellipsoid',
    'hilbert_sphere_axes',
    'hilbert_ball_boundary',
    'polygon_spoke_fit',
)

log = logging.getLogger('hilbertmetric.balls')

MIN_DIRECTIONS = 8


@dataclass(frozen=True)
class EllipsoidSpec:
    """
    The Hilbert sphere :math:`S_h(c, R)` of the unit ball.

    :param center: Center of the ellipsoid, on the ray from 0 through ``c``
    :param axis: Unit vector along ``c`` carrying the minor semi-axis
    :param a_min: Minor semi-axis
    :param a_max: Every other semi-axis
    :param c: Hilbert center of the sphere
    :param R: Hilbert radius
    """
    center: np.ndarray
    axis: np.ndarray
    a_min: float
    a_max: float
    c: np.ndarray
    R: float

    @property
    def n(self) -> int:
        return self.center.size

    def sample(self, rng: np.random.Generator, count: int) -> np.ndarray:
        """Points of the ellipsoid surface, shape ``(count, n)``."""
        y = rng.standard_normal((count, self.n))
        y /= np.linalg.norm(y, axis=1, keepdims=True)
        points = self.center + self.a_min * y[:, :1] * self.axis
        if self.n > 1:
            complement = scipy.linalg.null_space(self.axis[None, :])
            points = points + self.a_max * y[:, 1:] @ complement.T
        return points

    def nsc_residual(self, x: PointLike) -> float:
        """
        :math:`|(1 - c\\cdot x)^2 - \\mathrm{ch}^2(R/2)(1-|c|^2)(1-|x|^2)|`,
        zero exactly on the sphere.
        """
        x = as_point(x)
        lhs = (1.0 - float(np.dot(self.c, x))) ** 2
        rhs = math.cosh(self.R / 2.0) ** 2 * (1.0 - norm2(self.c)) * (1.0 - norm2(x))
        return abs(lhs - rhs)


def hilbert_sphere_ellipsoid(c: PointLike, R: float, flags: NumericFlags = DEFAULT_FLAGS) -> EllipsoidSpec:
    """
    With :math:`s = |c|` and :math:`k = \\mathrm{th}(R/2)`: center
    :math:`(1-k^2)c/(1-s^2k^2)`, minor semi-axis :math:`k(1-s^2)/(1-s^2k^2)`
    and major semi-axes :math:`k\\sqrt{1-s^2}/\\sqrt{1-s^2k^2}`. For
    ``c = 0`` this is the sphere of radius ``th(R/2)`` about 0.

    :raises OutOfDomain: ``c`` outside the ball or ``R <= 0``
    """
    c = require_in_ball(as_point(c), 'hilbert_sphere_ellipsoid', flags)
    if not R > 0:
        raise OutOfDomain('Hilbert radius must be positive', operation='hilbert_sphere_ellipsoid', value=R)
    s2 = norm2(c)
    k = math.tanh(R / 2.0)
    if s2 == 0.0:
        axis = np.zeros(c.size)
        axis[0] = 1.0
        return EllipsoidSpec(np.zeros(c.size), axis, k, k, c, R)
    den = 1.0 - s2 * k * k
    return EllipsoidSpec(center=(1.0 - k * k) * c / den,
                         axis=c / math.sqrt(s2),
                         a_min=k * (1.0 - s2) / den,
                         a_max=k * math.sqrt(1.0 - s2) / math.sqrt(den),
                         c=c,
                         R=R)


def hilbert_sphere_axes(c: PointLike, R: float, flags: NumericFlags = DEFAULT_FLAGS):
    """
    The same center and semi-axes from the hyperbolic function form
    :math:`c' = c/(\\mathrm{ch}^2 - |c|^2\\mathrm{sh}^2)`,
    :math:`a_{min} = \\tfrac12(1-|c|^2)\\mathrm{sh}R/(\\mathrm{ch}^2 - |c|^2\\mathrm{sh}^2)`,
    :math:`a_{max} = \\mathrm{sh}\\sqrt{1-|c|^2}/\\sqrt{\\mathrm{ch}^2 - |c|^2\\mathrm{sh}^2}`,
    with ch and sh taken at ``R/2``.
    """
    c = require_in_ball(as_point(c), 'hilbert_sphere_axes', flags)
    ch2 = math.cosh(R / 2.0) ** 2
    sh2 = math.sinh(R / 2.0) ** 2
    s2 = norm2(c)
    den = ch2 - s2 * sh2
    return c / den, 0.5 * (1.0 - s2) * math.sinh(R) / den, math.sqrt(sh2 * (1.0 - s2) / den)


@dataclass
class Polyline:
    """
    :param points: Vertices, shape ``(k, 2)``
    :param closed: Whether the last point connects back to the first
    :param thetas: Direction angle of every point, when traced from a center
    """
    points: np.ndarray
    closed: bool = True
    thetas: Optional[np.ndarray] = field(default=None)

    def __len__(self):
        return len(self.points)

    def is_convex(self, tol: float = -1e-12) -> bool:
        """All turns of the closed polyline have the same orientation."""
        edges = np.roll(self.points, -1, axis=0) - self.points
        prev = np.roll(edges, 1, axis=0)
        turns = prev[:, 0] * edges[:, 1] - prev[:, 1] * edges[:, 0]
        return bool(np.all(turns >= tol) or np.all(turns <= -tol))

    def radii(self, center: PointLike) -> np.ndarray:
        return np.linalg.norm(self.points - as_point(center), axis=1)

    def to_csv(self) -> str:
        """``theta,x,y`` rows with 12 significant digits."""
        lines = ['theta,x,y']
        thetas = self.thetas if self.thetas is not None else np.full(len(self.points), float('nan'))
        for theta, (x, y) in zip(thetas, self.points):
            lines.append(','.join(format_float(float(v)) for v in (theta, x, y)))
        return '\n'.join(lines) + '\n'


def _ray_root(D: ConvexDomain, z: np.ndarray, d: np.ndarray, t: float) -> float:
    """
    Distance ``s`` along the unit vector ``d`` with :math:`h_D(z, z + sd) = t`.

    On the chord through ``z`` in direction ``d`` the Hilbert distance to the
    point at ``s`` is :math:`\\log((s_b + s)s_f / (s_b(s_f - s)))` with
    ``s_f``, ``s_b`` the forward and backward exit distances.
    """
    flags = D.flags
    forward = D.ray_exit(z, d)
    backward = D.ray_exit(z, -d)

    def excess(s):
        return math.log((backward + s) * forward / (backward * (forward - s))) - t

    upper = forward - flags.eps_bnd
    if upper <= 0 or excess(upper) < 0:
        raise NearBoundary('Hilbert ball reaches the boundary', operation='hilbert_ball_boundary', value=t)
    try:
        s = scipy.optimize.bisect(excess, 0.0, upper, xtol=1e-15, maxiter=flags.bisect_maxiter)
    except (RuntimeError, ValueError) as exc:
        raise ConvergenceFailure(str(exc), operation='hilbert_ball_boundary', value=t) from exc
    return s


def hilbert_ball_boundary(D: ConvexDomain, z: PointLike, t: float, ndirs: int) -> Polyline:
    """
    Points of the Hilbert circle :math:`\\{x : h_D(z, x) = t\\}` in ``ndirs``
    equally spaced directions, found by bisection along each ray.

    :raises UsageError: ``ndirs`` below 8
    :raises OutOfDomain: ``t <= 0`` or ``z`` not inside ``D``
    :raises NearBoundary: The circle comes closer than ``eps_bnd`` to the boundary
    :raises ConvergenceFailure: Bisection did not converge
    """
    if D.dim != 2:
        raise OutOfDomain('Hilbert circles are traced in planar domains', operation='hilbert_ball_boundary', value=D.dim)
    if ndirs < MIN_DIRECTIONS:
        raise UsageError('at least {0} directions are needed'.format(MIN_DIRECTIONS),
                         operation='hilbert_ball_boundary', value=ndirs)
    if not t > 0:
        raise OutOfDomain('Hilbert radius must be positive', operation='hilbert_ball_boundary', value=t)
    z = D.require_inside(z, 'hilbert_ball_boundary')
    thetas = 2.0 * np.pi * np.arange(ndirs) / ndirs
    points = np.empty((ndirs, 2))
    for i, theta in enumerate(thetas):
        d = np.array([math.cos(theta), math.sin(theta)])
        points[i] = z + _ray_root(D, z, d, t) * d
    log.debug('traced Hilbert circle of radius %g about %s with %d directions', t, z, ndirs)
    return Polyline(points, closed=True, thetas=thetas)


def _distance_to_closed_path(points: np.ndarray, path: np.ndarray) -> np.ndarray:
    starts = path
    edges = np.roll(path, -1, axis=0) - path
    rel = points[:, None, :] - starts[None, :, :]
    along = np.einsum('pki,ki->pk', rel, edges)
    length2 = np.broadcast_to(np.einsum('ki,ki->k', edges, edges), along.shape)
    # a zero-length edge projects onto its start point
    t = np.clip(np.divide(along, length2, out=np.zeros_like(along), where=length2 > 0), 0.0, 1.0)
    foot = starts[None, :, :] + t[..., None] * edges[None, :, :]
    return np.min(np.linalg.norm(points[:, None, :] - foot, axis=2), axis=1)


def polygon_spoke_fit(D: PolygonDomain, z: PointLike, t: float, polyline: Polyline) -> float:
    """
    Largest distance from the points of ``polyline`` to the polygon whose
    vertices are the points of the Hilbert circle about ``z`` on the lines
    through ``z`` and the vertices of ``D``. For a triangle that polygon is
    a hexagon.
    """
    z = D.require_inside(z, 'polygon_spoke_fit')
    spokes = D.polygon.vertices - z
    spokes /= np.linalg.norm(spokes, axis=1, keepdims=True)
    directions = np.vstack((spokes, -spokes))
    angles = np.arctan2(directions[:, 1], directions[:, 0])
    order = np.argsort(angles)
    # opposite vertices can share a spoke, also across the cut at -pi = pi
    distinct = np.concatenate(([True], np.diff(angles[order]) > D.flags.eps_deg))
    kept = np.flatnonzero(distinct)
    if angles[order][0] + 2.0 * np.pi - angles[order][kept[-1]] <= D.flags.eps_deg:
        distinct[kept[-1]] = False
    corners = np.array([z + _ray_root(D, z, d, t) * d for d in directions[order][distinct]])
    return float(np.max(_distance_to_closed_path(polyline.points, corners)))
