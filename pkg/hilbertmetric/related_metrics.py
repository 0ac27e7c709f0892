# -*- coding: utf-8 -*-

"""
Apollonian and Möbius metrics
=============================

For a domain :math:`D` with boundary :math:`\\partial D` the Apollonian
metric is

.. math::

    \\alpha_D(a, b) = \\sup_{x, y \\in \\partial D}
        \\log \\frac{|x-b|\\,|y-a|}{|x-a|\\,|y-b|}

and the Möbius metric is
:math:`\\delta_D(a, b) = \\log(1 + \\sup_{u, v \\in \\partial D} |u, a, v, b|)`.
Both coincide with the hyperbolic metric on the unit ball and are computed
in closed form there. On polygons the Apollonian supremum separates into two
boundary maxima, each solved exactly edge by edge; the Möbius supremum is
searched numerically and comes with a :py:class:`MobiusSupremum` certificate.

.. code-block:: python

    >>> from hilbertmetric.domain import PolygonDomain
    >>> from hilbertmetric.polygon import preset_polygon
    >>> square = PolygonDomain(preset_polygon('square'))
    >>> apollonian(square, (0, 0), (0.5, 0))
    1.0986122886681098

----

API
---
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
import scipy.optimize

from .domain import ConvexDomain, PolygonDomain, UnitBall
from .exceptions import ConvergenceFailure, DegenerateInput
from .geom_core import PointLike, norm2
from .hilbert import h_chord
from .hyperbolic import rho_ball
from .report import MetricReport

__all__ = (
    'apollonian',
    'apollonian_grid',
    'h_le_alpha_margin',
    'MobiusSupremum',
    'mobius_supremum',
    'mobius_delta',
    'density_margins_disk',
)

log = logging.getLogger('hilbertmetric.related_metrics')

_MOBIUS_FIRST_GRID = 8
_MOBIUS_SWEEPS = 2


def _edge_ratio_max(D: PolygonDomain, p: np.ndarray, q: np.ndarray) -> float:
    """
    :math:`\\max_{x \\in \\partial D} |x-p|^2/|x-q|^2`.

    Along an edge ``x = A + s e`` both squared distances are monic
    quadratics in ``s`` (up to the factor :math:`|e|^2`), so the numerator of
    the derivative of their ratio is the quadratic
    :math:`2E(\\beta_q-\\beta_p)s^2 + 2E(\\gamma_q-\\gamma_p)s + 2(\\beta_p\\gamma_q-\\gamma_p\\beta_q)`.
    """
    flags = D.flags
    P = D.polygon
    best = 0.0
    for start, edge in zip(P.vertices, P.edges):
        E = float(np.dot(edge, edge))
        beta_p, beta_q = float(np.dot(edge, start - p)), float(np.dot(edge, start - q))
        gamma_p, gamma_q = norm2(start - p), norm2(start - q)
        coefficients = (2.0 * E * (beta_q - beta_p), 2.0 * E * (gamma_q - gamma_p), 2.0 * (beta_p * gamma_q - gamma_p * beta_q))
        candidates = [0.0, 1.0]
        if abs(coefficients[0]) >= flags.apollonian_flat_coefficient:
            candidates.extend(r.real for r in np.roots(coefficients) if abs(r.imag) < flags.eps_deg)
        elif abs(coefficients[1]) >= flags.apollonian_flat_coefficient:
            candidates.append(-coefficients[2] / coefficients[1])
        else:
            candidates.extend(np.linspace(0.0, 1.0, flags.apollonian_fallback_samples))
        s = np.clip(np.asarray(candidates, dtype=float), 0.0, 1.0)
        num = E * s * s + 2.0 * beta_p * s + gamma_p
        den = E * s * s + 2.0 * beta_q * s + gamma_q
        best = max(best, float(np.max(num / den)))
    return best


def apollonian(D: ConvexDomain, a: PointLike, b: PointLike) -> float:
    """
    Apollonian distance. On the unit ball it is :math:`\\rho`; on a polygon
    it is :math:`\\tfrac12\\log\\max|x-b|^2/|x-a|^2 + \\tfrac12\\log\\max|y-a|^2/|y-b|^2`.

    :raises OutsideDomain: A point is not inside ``D``
    """
    a = D.require_inside(a, 'apollonian')
    b = D.require_inside(b, 'apollonian')
    if isinstance(D, UnitBall):
        return rho_ball(a, b, D.flags)
    if norm2(a - b) < D.flags.eps_deg ** 2:
        return 0.0
    return 0.5 * (math.log(_edge_ratio_max(D, b, a)) + math.log(_edge_ratio_max(D, a, b)))


def _boundary_grid(D: ConvexDomain, samples: int) -> np.ndarray:
    s = np.arange(samples) / samples
    if isinstance(D, UnitBall):
        if D.dim != 2:
            raise DegenerateInput('boundary grids are planar', operation='apollonian_grid', value=D.dim)
        return D.boundary_points(2.0 * np.pi * s)
    return D.boundary_points(np.union1d(s, D.polygon.vertex_parameters))


def apollonian_grid(D: ConvexDomain, a: PointLike, b: PointLike, samples: int = 100000) -> float:
    """Apollonian distance by brute force over ``samples`` boundary points and the vertices."""
    a = D.require_inside(a, 'apollonian_grid')
    b = D.require_inside(b, 'apollonian_grid')
    x = _boundary_grid(D, samples)
    da = np.sum((x - a) ** 2, axis=1)
    db = np.sum((x - b) ** 2, axis=1)
    return 0.5 * (math.log(float(np.max(db / da))) + math.log(float(np.max(da / db))))


def h_le_alpha_margin(D: ConvexDomain, a: PointLike, b: PointLike) -> float:
    """Margin :math:`\\alpha_D - h_D` of :math:`h_D \\le \\alpha_D`."""
    return apollonian(D, a, b) - h_chord(D, a, b)


@dataclass(frozen=True)
class MobiusSupremum:
    """
    :param value: :math:`\\delta_D(a, b)`
    :param ratio: Largest cross-ratio :math:`|u, a, v, b|` found
    :param u: Boundary point attaining ``ratio``
    :param v: Boundary point attaining ``ratio``
    :param evaluations: Number of cross-ratio evaluations spent
    :param grid: Side of the finest boundary grid
    """
    value: float
    ratio: float
    u: np.ndarray
    v: np.ndarray
    evaluations: int
    grid: int

    def to_dict(self) -> dict:
        return {'value': self.value, 'ratio': self.ratio, 'u': self.u, 'v': self.v,
                'evaluations': self.evaluations, 'grid': self.grid}


class _CrossRatioObjective(object):
    """Counts evaluations of :math:`|u,a,v,b|` at boundary parameters."""

    def __init__(self, D: ConvexDomain, a: np.ndarray, b: np.ndarray):
        self.D = D
        self.a = a
        self.b = b
        self.ab = math.sqrt(norm2(a - b))
        self.evaluations = 0

    def grid(self, s: np.ndarray) -> np.ndarray:
        x = self.D.boundary_points(s)
        ua = np.linalg.norm(x - self.a, axis=1)
        vb = np.linalg.norm(x - self.b, axis=1)
        uv = np.linalg.norm(x[:, None, :] - x[None, :, :], axis=2)
        self.evaluations += len(s) ** 2
        return uv * self.ab / (ua[:, None] * vb[None, :])

    def __call__(self, s: float, t: float) -> float:
        u, v = self.D.boundary_points(np.array([s, t]))
        self.evaluations += 1
        return float(np.linalg.norm(u - v)) * self.ab / (float(np.linalg.norm(u - self.a)) * float(np.linalg.norm(v - self.b)))


def _refine(objective: _CrossRatioObjective, s: float, t: float, width: float):
    """Coordinate-wise bounded maximization inside the cell around ``(s, t)``."""
    best = objective(s, t)
    for _ in range(_MOBIUS_SWEEPS):
        for axis in (0, 1):
            center = s if axis == 0 else t
            if axis == 0:
                func = lambda x: -objective(x, t)
            else:
                func = lambda x: -objective(s, x)
            result = scipy.optimize.minimize_scalar(func, bounds=(center - width, center + width), method='bounded',
                                                    options={'xatol': 1e-12})
            if not result.success:
                raise ConvergenceFailure(result.message, operation='mobius_delta')
            if -result.fun > best:
                best = -result.fun
                if axis == 0:
                    s = result.x
                else:
                    t = result.x
    return best, s, t


def mobius_supremum(D: ConvexDomain, a: PointLike, b: PointLike, budget: int = 10000) -> MobiusSupremum:
    """
    Möbius distance with its certificate.

    Boundary parameters are searched on nested grids of 8, 16, ... points
    (plus the polygon vertices) while the grid has at most ``budget`` pairs
    and at most ``mobius_grid_max`` points per side. At every level the
    ``mobius_refine_cells`` best grid pairs are refined inside their cells.
    The result is the best value over all levels, so it never decreases
    when ``budget`` grows. On the unit ball the value is :math:`\\rho`.

    :raises OutsideDomain: A point is not inside ``D``
    """
    a = D.require_inside(a, 'mobius_delta')
    b = D.require_inside(b, 'mobius_delta')
    flags = D.flags
    if norm2(a - b) < flags.eps_deg ** 2:
        return MobiusSupremum(0.0, 0.0, a, a, 0, 0)
    if isinstance(D, UnitBall):
        rho = rho_ball(a, b, flags)
        return MobiusSupremum(rho, math.expm1(rho), a, b, 0, 0)

    objective = _CrossRatioObjective(D, a, b)
    best, best_s, best_t = -1.0, 0.0, 0.0
    n = _MOBIUS_FIRST_GRID
    finest = n
    while True:
        s = np.union1d(np.arange(n) / n, D.polygon.vertex_parameters)
        values = objective.grid(s)
        top = np.argsort(values, axis=None)[::-1][:flags.mobius_refine_cells]
        for flat in top:
            i, j = np.unravel_index(flat, values.shape)
            value, si, tj = _refine(objective, s[i], s[j], 1.0 / n)
            if value > best:
                best, best_s, best_t = value, si, tj
        log.debug('Mobius grid %d: best ratio %r after %d evaluations', n, best, objective.evaluations)
        finest = n
        n *= 2
        if n > flags.mobius_grid_max or n * n > budget:
            break
    u, v = D.boundary_points(np.array([best_s, best_t]))
    return MobiusSupremum(math.log1p(best), best, u, v, objective.evaluations, finest)


def mobius_delta(D: ConvexDomain, a: PointLike, b: PointLike, budget: int = 10000) -> float:
    """:math:`\\log(1 + \\sup_{u,v} |u, a, v, b|)`, see :py:func:`mobius_supremum`."""
    return mobius_supremum(D, a, b, budget).value


def density_margins_disk(a: PointLike, b: PointLike) -> MetricReport:
    """
    Margins of :math:`\\alpha/2 \\le \\rho \\le 4\\,\\mathrm{sh}(\\alpha/2)` on
    the disk, where the hyperbolic density metric and the Apollonian metric
    are both :math:`\\rho`.
    """
    disk = UnitBall(2)
    rho = rho_ball(a, b)
    alpha = apollonian(disk, a, b)
    report = MetricReport('density_bounds', anchor='The Apollonian metric alpha_D(a,b) between',
                          statement='alpha/2 <= rho <= 4 sh(alpha/2)')
    report.add_metric('rho', rho)
    report.add_metric('alpha', alpha)
    report.add_margin('alpha/2 <= rho', rho - alpha / 2.0)
    report.add_margin('rho <= 4 sh(alpha/2)', 4.0 * math.sinh(alpha / 2.0) - rho)
    return report
