# -*- coding: utf-8 -*-

"""
Geometric primitives
====================

Points of :math:`\\mathbb{R}^n` are accepted in any of the forms a caller
is likely to have at hand: a sequence or numpy array of coordinates, a
complex number (a point of the plane) or a bare real number (a point of the
real axis). Planar operations work in complex form internally and return
numpy arrays of length two.

.. code-block:: python

    >>> from hilbertmetric.geom_core import cross_ratio, lis
    >>> cross_ratio(-1, 0, 0.5, 1)
    3.0
    >>> lis((0, 0), (1, 1), (1, 0), (0, 1))
    array([0.5, 0.5])

Points given with different dimensions are padded with zero coordinates, so
``cross_ratio(0, (0.5, 0), ...)`` is well defined.

----

API
---
"""

import logging
import math
from dataclasses import dataclass
from numbers import Complex, Real
from typing import Callable, Sequence, Tuple, Union

import numpy as np

from .exceptions import (
    CollinearPoints,
    DegenerateInput,
    NotOnCircle,
    OutOfDomain,
    ParallelLines,
)
from .flags import DEFAULT_FLAGS, NumericFlags

__all__ = (
    'PointLike',
    'Line2',
    'Circle2',
    'as_point',
    'as_points',
    'as_complex',
    'to_point',
    'cross_ratio',
    'lis',
    'lis_unit_circle',
    'circle_through',
    'mobius_T',
    'dist_origin_line',
    'chord_endpoints',
)

log = logging.getLogger('hilbertmetric.geom_core')

PointLike = Union[Sequence[float], np.ndarray, complex, float]


def as_point(p: PointLike) -> np.ndarray:
    """
    Convert ``p`` to a one dimensional float array.

    :raises DegenerateInput: A coordinate is not finite
    """
    if isinstance(p, np.ndarray) and p.ndim == 1 and p.dtype.kind == 'f':
        arr = p
    elif isinstance(p, Real):
        arr = np.array([float(p)])
    elif isinstance(p, Complex):
        arr = np.array([p.real, p.imag])
    else:
        arr = np.asarray(p)
        if arr.dtype.kind == 'c':
            if arr.ndim != 0:
                raise DegenerateInput('complex arrays are not points', operation='as_point', value=p)
            arr = np.array([arr.real, arr.imag])
        arr = np.atleast_1d(arr.astype(float))
    if arr.ndim != 1 or arr.size == 0:
        raise DegenerateInput('a point needs one or more coordinates', operation='as_point', value=p)
    if not np.all(np.isfinite(arr)):
        raise DegenerateInput('coordinates must be finite', operation='as_point', value=p)
    return arr


def as_points(*points: PointLike) -> list:
    """
    Convert several points at once, padding lower dimensional ones with
    zeros to the largest dimension among them.
    """
    arrays = [as_point(p) for p in points]
    n = max(a.size for a in arrays)
    return [a if a.size == n else np.concatenate([a, np.zeros(n - a.size)]) for a in arrays]


def as_complex(p: PointLike) -> complex:
    """Identify a point of the plane (or the real axis) with a complex number."""
    if isinstance(p, Complex) and not isinstance(p, np.ndarray):
        return complex(p)
    arr = as_point(p)
    if arr.size == 1:
        return complex(arr[0], 0.0)
    if arr.size == 2:
        return complex(arr[0], arr[1])
    raise DegenerateInput('expected a planar point', operation='as_complex', value=p)


def to_point(z: complex) -> np.ndarray:
    return np.array([z.real, z.imag])


@dataclass(frozen=True)
class Line2:
    """The line L[p, q] through two distinct planar points."""
    p: complex
    q: complex

    def __post_init__(self):
        if abs(self.p - self.q) < DEFAULT_FLAGS.eps_deg:
            raise DegenerateInput('a line needs two distinct points', operation='Line2')

    @property
    def direction(self) -> complex:
        d = self.q - self.p
        return d / abs(d)

    def side(self, z: PointLike) -> float:
        """Signed area test: positive when ``z`` is to the left of p -> q."""
        w = as_complex(z)
        return ((self.q - self.p).conjugate() * (w - self.p)).imag

    def distance(self, z: PointLike) -> float:
        return abs(self.side(z)) / abs(self.q - self.p)

    def __repr__(self):
        return '<Line2 through {0} and {1}>'.format(self.p, self.q)


@dataclass(frozen=True)
class Circle2:
    """A circle of the plane; ``center`` is a length two array."""
    center: np.ndarray
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise DegenerateInput('circle radius must be positive', operation='Circle2', value=self.radius)

    def contains_point(self, z: PointLike, tol: float = 1e-10) -> bool:
        return abs(float(np.linalg.norm(as_point(z) - self.center)) - self.radius) <= tol * max(1.0, self.radius)

    def sample(self, count: int) -> np.ndarray:
        theta = np.linspace(0.0, 2.0 * np.pi, count, endpoint=False)
        return self.center + self.radius * np.column_stack((np.cos(theta), np.sin(theta)))

    def __repr__(self):
        return '<Circle2 center=({0:.12g}, {1:.12g}) radius={2:.12g}>'.format(self.center[0], self.center[1], self.radius)


def cross_ratio(u: PointLike, a: PointLike, b: PointLike, v: PointLike,
                flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """
    The absolute cross-ratio :math:`|u,a,b,v| = |u-b||a-v| / (|u-a||b-v|)`.

    :raises DegenerateInput: ``u = a`` or ``b = v`` within tolerance
    """
    u, a, b, v = as_points(u, a, b, v)
    ua = float(np.linalg.norm(u - a))
    bv = float(np.linalg.norm(b - v))
    if ua < flags.eps_deg or bv < flags.eps_deg:
        raise DegenerateInput('cross-ratio denominator vanishes', operation='cross_ratio')
    return float(np.linalg.norm(u - b)) * float(np.linalg.norm(a - v)) / (ua * bv)


def lis(a: PointLike, b: PointLike, c: PointLike, d: PointLike,
        flags: NumericFlags = DEFAULT_FLAGS) -> np.ndarray:
    """
    Intersection point of the lines L[a, b] and L[c, d].

    :raises DegenerateInput: ``a = b`` or ``c = d``
    :raises ParallelLines: The lines do not meet
    """
    return to_point(lis_complex(as_complex(a), as_complex(b), as_complex(c), as_complex(d), flags))


def lis_complex(a: complex, b: complex, c: complex, d: complex,
                flags: NumericFlags = DEFAULT_FLAGS) -> complex:
    ab = a - b
    cd = c - d
    if abs(ab) < flags.eps_deg or abs(cd) < flags.eps_deg:
        raise DegenerateInput('a line needs two distinct points', operation='lis')
    den = ab.conjugate() * cd - ab * cd.conjugate()
    # relative: den is 2i|a-b||c-d| sin of the angle between the lines
    if abs(den) < flags.eps_deg * abs(ab) * abs(cd):
        raise ParallelLines('lines L[a,b] and L[c,d] are parallel', operation='lis')
    num = (a.conjugate() * b - a * b.conjugate()) * cd - ab * (c.conjugate() * d - c * d.conjugate())
    return num / den


def _require_on_circle(z: complex, operation: str, flags: NumericFlags):
    if abs(abs(z) - 1.0) >= flags.eps_circle:
        raise NotOnCircle('point is not on the unit circle', operation=operation, value=z)


def lis_unit_circle(a: PointLike, b: PointLike, c: PointLike, d: PointLike,
                    flags: NumericFlags = DEFAULT_FLAGS) -> np.ndarray:
    """
    Intersection of the chords L[a, b] and L[c, d] of the unit circle, from
    the simplified formula that holds when all four points are unimodular.

    :raises NotOnCircle: One of the points is off the unit circle
    :raises ParallelLines: The chords are parallel
    """
    a, b, c, d = (as_complex(p) for p in (a, b, c, d))
    for z in (a, b, c, d):
        _require_on_circle(z, 'lis_unit_circle', flags)
    den = a * b - c * d
    if abs(den) < flags.eps_deg:
        raise ParallelLines('chords are parallel', operation='lis_unit_circle')
    return to_point((a * b * (c + d) - c * d * (a + b)) / den)


def circle_through(a: PointLike, b: PointLike, c: PointLike,
                   flags: NumericFlags = DEFAULT_FLAGS) -> Circle2:
    """
    The unique circle C[a, b, c]. Its center is the intersection of two
    perpendicular bisectors.

    :raises CollinearPoints: The points are collinear or not distinct
    """
    a, b, c = (as_complex(p) for p in (a, b, c))
    area = 0.5 * abs(((b - a).conjugate() * (c - a)).imag)
    if area < flags.eps_deg:
        raise CollinearPoints('no circle through collinear points', operation='circle_through')
    m1 = 0.5 * (a + b)
    m2 = 0.5 * (b + c)
    center = lis_complex(m1, m1 + 1j * (b - a), m2, m2 + 1j * (c - b), flags)
    return Circle2(to_point(center), abs(center - a))


def mobius_T(a: PointLike, z: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> np.ndarray:
    """
    The disk automorphism :math:`T_a(z) = (z-a)/(1-\\bar{a}z)`.

    :raises OutOfDomain: ``|a| >= 1``, ``a = 0`` or ``z`` outside the closed disk
    """
    a = as_complex(a)
    z = as_complex(z)
    return to_point(mobius_T_complex(a, z, flags))


def mobius_T_complex(a: complex, z: complex, flags: NumericFlags = DEFAULT_FLAGS) -> complex:
    if abs(a) >= 1.0 or abs(a) < flags.eps_deg:
        raise OutOfDomain('parameter must satisfy 0 < |a| < 1', operation='mobius_T', value=a)
    if abs(z) > 1.0 + flags.eps_circle:
        raise OutOfDomain('point outside the closed unit disk', operation='mobius_T', value=z)
    return (z - a) / (1.0 - a.conjugate() * z)


def dist_origin_line(a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """
    Euclidean distance from the origin to L[a, b], in any dimension.

    :raises DegenerateInput: ``a = b``
    """
    a, b = as_points(a, b)
    diff = b - a
    length = float(np.linalg.norm(diff))
    if length < flags.eps_deg:
        raise DegenerateInput('a line needs two distinct points', operation='dist_origin_line')
    d = diff / length
    m = float(np.linalg.norm(a - np.dot(a, d) * d))
    return 0.0 if m < flags.eps_deg else m


def chord_endpoints(a: np.ndarray, b: np.ndarray, ray_exit: Callable[[np.ndarray, np.ndarray], float],
                    operation: str, flags: NumericFlags = DEFAULT_FLAGS) -> Tuple[np.ndarray, np.ndarray]:
    """
    Endpoints ``(u, v)`` of the chord through the interior points ``a`` and
    ``b`` of a convex set, in the order u, a, b, v along the line.
    ``ray_exit(p, d)`` is the distance from ``p`` to the boundary along the
    unit vector ``d``.

    :raises DegenerateInput: ``a = b``
    """
    diff = b - a
    length = float(np.linalg.norm(diff))
    if length < flags.eps_deg:
        raise DegenerateInput('chord needs two distinct points', operation=operation)
    d = diff / length
    return a - ray_exit(a, -d) * d, b + ray_exit(b, d) * d


def unit(z: complex) -> complex:
    return z / abs(z)


def norm2(p: np.ndarray) -> float:
    return float(np.dot(p, p))


def arch(x: float, flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """arch with rounding below 1 clamped."""
    if x < 1.0:
        if x < 1.0 - flags.clamp * 10:
            raise OutOfDomain('arch argument below 1', operation='arch', value=x)
        x = 1.0
    return math.acosh(x)


def arth(x: float, flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """arth on the open interval (-1, 1)."""
    if abs(x) >= 1.0:
        raise OutOfDomain('arth argument outside (-1, 1)', operation='arth', value=x)
    return math.atanh(x)
