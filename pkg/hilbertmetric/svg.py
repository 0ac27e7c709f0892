# -*- coding: utf-8 -*-

"""
SVG figures
===========

Figures of Hilbert circles drawn over their domain. The domain boundary is
black, the circles blue, and for polygons the lines through the center and
each vertex are drawn as dashed gray guides; the corners of a Hilbert circle
in a polygon sit on those lines.

Coordinates are divided by a scale factor so that the figure fits the unit
viewBox ``-1 -1 2 2`` and are written with 6 decimals. The factor is
declared on the root element as ``data-scale``; multiply by it to recover
domain coordinates. The y axis points up as usual in the plane.

.. code-block:: python

    >>> from hilbertmetric.balls import hilbert_ball_boundary
    >>> from hilbertmetric.domain import PolygonDomain
    >>> from hilbertmetric.polygon import preset_polygon
    >>> triangle = PolygonDomain(preset_polygon('triangle'))
    >>> circle = hilbert_ball_boundary(triangle, (0, 0), 1.0, 360)
    >>> text = ball_figure(triangle, [circle], center=(0, 0))

----

API
---
"""

import logging
from io import StringIO
from pathlib import Path
from typing import List, Optional

import numpy as np
from mako.lookup import TemplateLookup
from mako.runtime import Context

from .balls import Polyline
from .domain import ConvexDomain, PolygonDomain, UnitBall
from .exceptions import OutOfDomain
from .geom_core import PointLike

__all__ = (
    'ball_figure',
    'FIGURE_SIZE',
)

log = logging.getLogger('hilbertmetric.svg')

#: Width and height of the figure in pixels
FIGURE_SIZE = 600

_MARGIN = 1.05
_STROKE = 0.004

template_folder = Path(__file__).parent / 'svg-templates'


def _coordinate(value: float) -> str:
    text = '{0:.6f}'.format(value)
    return '0.000000' if text == '-0.000000' else text


def _points_attribute(points: np.ndarray, scale: float) -> str:
    return ' '.join('{0},{1}'.format(_coordinate(x / scale), _coordinate(-y / scale)) for x, y in points)


def _guides(D: PolygonDomain, center: np.ndarray) -> List[np.ndarray]:
    """Chords through ``center`` and each vertex, as (vertex, opposite boundary point)."""
    chords = []
    for vertex in D.polygon.vertices:
        d = center - vertex
        length = float(np.linalg.norm(d))
        if length < D.flags.eps_deg:
            continue
        d /= length
        chords.append((vertex, center + D.ray_exit(center, d) * d))
    return chords


def ball_figure(D: ConvexDomain, curves: List[Polyline], center: Optional[PointLike] = None,
                title: str = 'Hilbert circles') -> str:
    """
    SVG document showing ``curves`` inside ``D``.

    :param D: Planar domain, the unit disk or a polygon
    :param curves: Closed polylines to draw, typically from
        :py:func:`~hilbertmetric.balls.hilbert_ball_boundary`
    :param center: Common center of the curves; marked, and for polygons the
        origin of the vertex guides
    :raises OutOfDomain: ``D`` is not planar
    """
    if D.dim != 2:
        raise OutOfDomain('figures are drawn for planar domains', operation='ball_figure', value=D.dim)

    if isinstance(D, UnitBall):
        extent = 1.0
    else:
        extent = D.polygon.max_vertex_norm
    scale = _MARGIN * extent

    boundary_circle = None
    boundary_points = ''
    if isinstance(D, UnitBall):
        boundary_circle = (_coordinate(0.0), _coordinate(0.0), _coordinate(1.0 / scale))
    else:
        boundary_points = _points_attribute(D.polygon.vertices, scale)

    guides = []
    marker = None
    if center is not None:
        center = D.require_inside(center, 'ball_figure')
        marker = (_coordinate(center[0] / scale), _coordinate(-center[1] / scale))
        if isinstance(D, PolygonDomain):
            for start, end in _guides(D, center):
                guides.append((_coordinate(start[0] / scale), _coordinate(-start[1] / scale),
                               _coordinate(end[0] / scale), _coordinate(-end[1] / scale)))

    lookup = TemplateLookup(directories=[str(template_folder)], preprocessor=[lambda x: x.replace('\r\n', '\n')])
    template = lookup.get_template('figure.mako')

    buffer = StringIO()
    context = Context(buffer,
                      size=FIGURE_SIZE,
                      scale=_coordinate(scale),
                      title=title,
                      stroke=_coordinate(_STROKE),
                      dash=_coordinate(4 * _STROKE),
                      marker=_coordinate(2 * _STROKE),
                      boundary_circle=boundary_circle,
                      boundary_points=boundary_points,
                      guides=guides,
                      curves=[_points_attribute(c.points, scale) for c in curves],
                      center=marker)
    template.render_context(context)
    log.debug('rendered figure with %d curves and %d guides', len(curves), len(guides))
    return buffer.getvalue()
