# -*- coding: utf-8 -*-

"""
Convex domains
==============

Every metric of this library is evaluated on a :py:class:`ConvexDomain`.
Two kinds exist: the unit ball :math:`\\mathbb{B}^n` and a convex planar
polygon.

.. code-block:: python

    >>> from hilbertmetric.domain import UnitBall, PolygonDomain
    >>> from hilbertmetric.polygon import preset_polygon
    >>> disk = UnitBall(2)
    >>> square = PolygonDomain(preset_polygon('square'))

Both answer the same questions: the signed distance of a point to the
boundary, the exit distance of a ray and the endpoints of the chord through
two interior points.

----

API
---
"""

import abc
import logging
import math
from typing import Tuple

import numpy as np

from .exceptions import DegenerateInput, NearBoundary, OutsideDomain
from .flags import DEFAULT_FLAGS, NumericFlags
from .geom_core import PointLike, as_point, chord_endpoints
from .polygon import ConvexPolygon

__all__ = (
    'ConvexDomain',
    'UnitBall',
    'PolygonDomain',
)


class ConvexDomain(abc.ABC):
    """
    Base class of bounded convex domains.
    """

    log = logging.getLogger('hilbertmetric.domain')

    def __init__(self, flags: NumericFlags = DEFAULT_FLAGS):
        self.flags = flags

    @property
    @abc.abstractmethod
    def dim(self) -> int:
        pass

    @property
    @abc.abstractmethod
    def name(self) -> str:
        pass

    @abc.abstractmethod
    def contains(self, x: PointLike) -> float:
        """Signed distance to the boundary, positive inside."""
        pass

    @abc.abstractmethod
    def ray_exit(self, p: np.ndarray, d: np.ndarray) -> float:
        """Distance from the interior point ``p`` to the boundary along the unit vector ``d``."""
        pass

    @abc.abstractmethod
    def within_unit_disk(self) -> bool:
        """Whether the domain lies in the closed unit ball."""
        pass

    def point(self, x: PointLike) -> np.ndarray:
        p = as_point(x)
        if p.size < self.dim:
            p = np.concatenate([p, np.zeros(self.dim - p.size)])
        elif p.size > self.dim:
            raise OutsideDomain('point has {0} coordinates, domain has {1}'.format(p.size, self.dim),
                                operation='ConvexDomain', value=tuple(p))
        return p

    def require_inside(self, x: PointLike, operation: str) -> np.ndarray:
        """
        :raises OutsideDomain: ``x`` is not inside the domain
        :raises NearBoundary: ``x`` is within ``eps_bnd`` of the boundary
        """
        p = self.point(x)
        margin = self.contains(p)
        if margin <= 0:
            raise OutsideDomain('point is outside the {0}'.format(self.name), operation=operation, value=tuple(p))
        if margin < self.flags.eps_bnd:
            raise NearBoundary('point is too close to the boundary of the {0}'.format(self.name),
                               operation=operation, value=tuple(p))
        return p

    def chord(self, a: PointLike, b: PointLike, operation: str = 'chord') -> Tuple[np.ndarray, np.ndarray]:
        """
        Endpoints ``(u, v)`` of the chord through ``a`` and ``b``, in the
        order u, a, b, v along the line.

        :raises DegenerateInput: ``a = b``
        """
        a = self.require_inside(a, operation)
        b = self.require_inside(b, operation)
        return chord_endpoints(a, b, self.ray_exit, operation, self.flags)

    def __repr__(self):
        return '<{0} {1}>'.format(self.__class__.__name__, self.name)


class UnitBall(ConvexDomain):
    """
    The open unit ball of :math:`\\mathbb{R}^n`.

    :param n: Dimension, at least 1
    """

    def __init__(self, n: int = 2, flags: NumericFlags = DEFAULT_FLAGS):
        super().__init__(flags)
        if n < 1:
            raise DegenerateInput('ball dimension must be at least 1', operation='UnitBall', value=n)
        self.n = n

    @property
    def dim(self) -> int:
        return self.n

    @property
    def name(self) -> str:
        return 'unit ball B^{0}'.format(self.n)

    def contains(self, x: PointLike) -> float:
        return 1.0 - float(np.linalg.norm(self.point(x)))

    def ray_exit(self, p: np.ndarray, d: np.ndarray) -> float:
        pd = float(np.dot(p, d))
        # larger root of s^2 + 2 (p.d) s + |p|^2 - 1 = 0, written without cancellation
        q = 1.0 - float(np.dot(p, p))
        disc = math.sqrt(pd * pd + q)
        if pd > 0:
            return q / (pd + disc)
        return disc - pd

    def within_unit_disk(self) -> bool:
        return True

    def boundary_points(self, theta) -> np.ndarray:
        """Points of the unit circle at angles ``theta`` (planar ball only)."""
        theta = np.asarray(theta, dtype=float)
        return np.stack((np.cos(theta), np.sin(theta)), axis=-1)


class PolygonDomain(ConvexDomain):
    """
    A convex polygon as a domain.

    :param polygon: Validated polygon
    :param label: Name used in reports and error messages
    """

    def __init__(self, polygon: ConvexPolygon, label: str = 'polygon'):
        super().__init__(polygon.flags)
        self.polygon = polygon
        self.label = label

    @property
    def dim(self) -> int:
        return 2

    @property
    def name(self) -> str:
        return self.label

    def contains(self, x: PointLike) -> float:
        return self.polygon.contains(self.point(x))

    def ray_exit(self, p: np.ndarray, d: np.ndarray) -> float:
        return self.polygon.ray_exit(p, d)

    def within_unit_disk(self) -> bool:
        return self.polygon.max_vertex_norm <= 1.0 + self.flags.eps_deg

    def boundary_points(self, s) -> np.ndarray:
        return self.polygon.boundary_points(s)
