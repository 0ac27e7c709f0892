# -*- coding: utf-8 -*-

"""
Hölder bound for quasiregular maps
==================================

A K-quasiregular map :math:`f` of the unit disk onto a convex bounded
domain :math:`D` satisfies

.. math::

    h_D(f(a), f(b)) \\le \\frac{2c(K)}{\\sqrt{1-m^2}}
        \\max\\{h(a,b), h(a,b)^{1/K}\\}

where :math:`h` is the Hilbert distance of the disk and :math:`m` the
distance from the origin to the line through ``a`` and ``b``.
:py:func:`holder_rhs` evaluates the right hand side; :py:func:`holder_verify`
checks the inequality on random pairs for the maps of a small catalog, all of
which map the disk onto itself:

==================  =====================================  ===
name                map                                    K
==================  =====================================  ===
``identity``        :math:`z`                              1
``mobius``          :math:`(z-a)/(1-\\bar{a}z)`             1
``power``           :math:`z^m`                            1
``radial-stretch``  :math:`z|z|^{K-1}`                     K
==================  =====================================  ===

.. code-block:: python

    >>> report = holder_verify(QCMapSpec('radial-stretch', 2.0), K=2.0, pairs=1000, seed=7)
    >>> report.ok
    True

----

API
---
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import numpy as np
import rich.progress

from .exceptions import DegenerateInput, OutOfDomain, UsageError
from .flags import DEFAULT_FLAGS, NumericFlags
from .geom_core import PointLike, as_complex, as_points, dist_origin_line, mobius_T_complex, norm2, to_point
from .hilbert import h_ball
from .hyperbolic import _ball_pair, rho_ball
from .report import MetricReport, console
from .sampling import ball_pairs, rng_for
from .special_functions import c_of_K

__all__ = (
    'HolderBoundInput',
    'QCMapSpec',
    'MAP_NAMES',
    'holder_rhs',
    'schwarz_rho_bound',
    'qc_map_eval',
    'holder_verify',
    'default_catalog',
)

log = logging.getLogger('hilbertmetric.holder')

MAP_NAMES = ('identity', 'mobius', 'power', 'radial-stretch')

#: Pairs are drawn from the disk of this radius
SAMPLE_RADIUS = 0.999


@dataclass(frozen=True)
class HolderBoundInput:
    """
    :param K: Distortion, at least 1
    :param a: First point of the disk
    :param b: Second point, distinct from ``a``
    """
    K: float
    a: np.ndarray
    b: np.ndarray

    @classmethod
    def create(cls, K: float, a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> 'HolderBoundInput':
        """
        :raises OutOfDomain: ``K < 1`` or a point outside the disk
        :raises DegenerateInput: ``a = b``
        """
        if not K >= 1.0:
            raise OutOfDomain('K must be at least 1', operation='holder_rhs', value=K)
        a, b = _ball_pair(as_points(a, (0.0, 0.0))[0], as_points(b, (0.0, 0.0))[0], 'holder_rhs', flags)
        if norm2(a - b) < flags.eps_deg ** 2:
            raise DegenerateInput('points must be distinct', operation='holder_rhs')
        return cls(float(K), a, b)


def holder_rhs(inp: HolderBoundInput, flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """:math:`(2c(K)/\\sqrt{1-m^2})\\max(h, h^{1/K})` with ``h = h_ball(a, b)``."""
    h = h_ball(inp.a, inp.b, flags)
    m = dist_origin_line(inp.a, inp.b, flags)
    return 2.0 * c_of_K(inp.K) / math.sqrt(1.0 - m * m) * max(h, h ** (1.0 / inp.K))


def schwarz_rho_bound(K: float, a: PointLike, b: PointLike, flags: NumericFlags = DEFAULT_FLAGS) -> float:
    """
    :math:`c(K)\\max(\\rho, \\rho^{1/K})`, the bound on
    :math:`\\rho(f(a), f(b))` for a K-quasiregular self-map of the disk.
    """
    rho = rho_ball(a, b, flags)
    return c_of_K(K) * max(rho, rho ** (1.0 / K))


@dataclass(frozen=True)
class QCMapSpec:
    """
    :param name: One of :py:data:`MAP_NAMES`
    :param parameter: ``a`` for ``mobius``, the exponent for ``power``, ``K`` for ``radial-stretch``
    """
    name: str
    parameter: Optional[Union[complex, float, int]] = None

    def __post_init__(self):
        if self.name not in MAP_NAMES:
            raise UsageError('unknown map {0!r}, expected one of {1}'.format(self.name, ', '.join(MAP_NAMES)),
                             operation='QCMapSpec', value=self.name)
        p = self.parameter
        if self.name == 'mobius' and (p is None or not 0 < abs(complex(p)) < 1):
            raise OutOfDomain('mobius parameter must satisfy 0 < |a| < 1', operation='QCMapSpec', value=p)
        if self.name == 'power' and (p is None or int(p) != p or p < 1):
            raise OutOfDomain('power exponent must be a positive integer', operation='QCMapSpec', value=p)
        if self.name == 'radial-stretch' and (p is None or not p >= 1):
            raise OutOfDomain('stretch distortion must be at least 1', operation='QCMapSpec', value=p)

    @property
    def distortion(self) -> float:
        return float(self.parameter) if self.name == 'radial-stretch' else 1.0

    @property
    def label(self) -> str:
        if self.parameter is None:
            return self.name
        if isinstance(self.parameter, complex):
            return '{0}({1:.12g}{2:+.12g}i)'.format(self.name, self.parameter.real, self.parameter.imag)
        return '{0}({1:.12g})'.format(self.name, self.parameter)


def qc_map_eval(spec: QCMapSpec, z: PointLike) -> np.ndarray:
    """
    :raises OutOfDomain: ``z`` is not in the open unit disk
    """
    w = as_complex(z)
    if abs(w) >= 1.0:
        raise OutOfDomain('point outside the unit disk', operation='qc_map_eval', value=w)
    if spec.name == 'identity':
        return to_point(w)
    if spec.name == 'mobius':
        return to_point(mobius_T_complex(complex(spec.parameter), w))
    if spec.name == 'power':
        return to_point(w ** int(spec.parameter))
    return to_point(w * abs(w) ** (float(spec.parameter) - 1.0))


def default_catalog() -> List[Tuple[QCMapSpec, float]]:
    """Catalog maps with the distortion each is verified against."""
    specs = [QCMapSpec('identity'),
             QCMapSpec('mobius', 0.5),
             QCMapSpec('mobius', complex(0.3, 0.4)),
             QCMapSpec('mobius', complex(0.0, -0.9)),
             QCMapSpec('power', 2),
             QCMapSpec('power', 3),
             QCMapSpec('radial-stretch', 1.5),
             QCMapSpec('radial-stretch', 2.0)]
    return [(spec, spec.distortion) for spec in specs]


def holder_verify(spec: QCMapSpec, K: float, pairs: int, seed: Optional[int] = None,
                  tolerance: float = 1e-9, quiet: bool = True,
                  flags: NumericFlags = DEFAULT_FLAGS) -> MetricReport:
    """
    Check the Hölder bound for ``spec`` on ``pairs`` random pairs of the disk.

    The report holds the worst margin of the bound itself and of the
    hyperbolic Schwarz bound. Whether the bound with ``c(K)`` in place of
    ``2c(K)`` also held is recorded as a note only.

    :raises OutOfDomain: ``K`` is below the distortion of the map
    """
    if not K >= spec.distortion:
        raise OutOfDomain('K is below the distortion of {0}'.format(spec.label), operation='holder_verify', value=K)
    c = c_of_K(K)
    rng = rng_for('holder:' + spec.label, seed)
    left, right = ball_pairs(rng, pairs, 2, SAMPLE_RADIUS)

    report = MetricReport('holder:' + spec.label, anchor='K-quasiregular mapping onto a convex bounded domain',
                          statement='h(f(a), f(b)) <= 2c(K) max(h, h^(1/K)) / sqrt(1 - m^2)',
                          seed=seed, samples=pairs)
    report.add_metric('K', K)
    report.add_metric('c(K)', c)
    halved_min = math.inf
    for a, b in rich.progress.track(zip(left, right), total=pairs, description=spec.label, disable=quiet,
                                 console=console):
        if norm2(a - b) < flags.eps_deg ** 2:
            continue
        fa, fb = qc_map_eval(spec, a), qc_map_eval(spec, b)
        h_image = h_ball(fa, fb, flags)
        h = h_ball(a, b, flags)
        m = dist_origin_line(a, b, flags)
        rhs = 2.0 * c / math.sqrt(1.0 - m * m) * max(h, h ** (1.0 / K))
        report.add_margin('hilbert bound', rhs - h_image, tolerance)
        rho = rho_ball(a, b, flags)
        report.add_margin('schwarz bound', c * max(rho, rho ** (1.0 / K)) - rho_ball(fa, fb, flags), tolerance)
        halved_min = min(halved_min, rhs / 2.0 - h_image)
    report.add_note('halved bound min margin', halved_min)
    report.add_note('halved bound held', halved_min >= -tolerance)
    log.info('verified %s with K=%g on %d pairs, worst margin %g', spec.label, K, pairs, report.worst_margin)
    return report
