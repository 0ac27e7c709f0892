# -*- coding: utf-8 -*-

"""
Convex polygons
===============

Strictly convex planar polygons, stored counterclockwise together with their
half-plane description :math:`n_i \\cdot x \\le c_i` (outward unit normals).
A polygon can be built from a vertex list, read from a text file or taken
from a named preset:

.. code-block:: python

    >>> from hilbertmetric.polygon import ConvexPolygon, preset_polygon
    >>> square = preset_polygon('square')
    >>> square.chord((0, 0), (0.5, 0))
    (array([-1.,  0.]), array([1., 0.]))


Polygon files
-------------

One vertex per line as two whitespace separated decimal numbers. Lines
starting with ``#`` are comments and blank lines are skipped. The polygon is
closed implicitly from the last vertex back to the first. Vertices may be
listed in either orientation.

.. code-block:: text

    # the square (-1, 1)^2
    -1 -1
     1 -1
     1  1
    -1  1


Presets
-------

======================================  =====================================
``square``                              the square :math:`(-1, 1)^2`
``triangle``                            equilateral triangle inscribed in the
                                        unit circle, vertices at 90, 210 and
                                        330 degrees
``inscribed-square``                    square inscribed in the unit circle
``sector:ANGLE[:SEGMENTS[:TRUNCATE]]``  circular sector of the unit disk with
                                        apex at the origin and opening ANGLE
                                        degrees (at most 180), the arc
                                        replaced by SEGMENTS chords; a
                                        positive TRUNCATE cuts the apex off
                                        at that distance from the origin
======================================  =====================================

----

API
---
"""

import logging
import math
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from .exceptions import (
    InvalidPolygon,
    NearBoundary,
    OutsideDomain,
    PolygonFormatError,
    UsageError,
)
from .flags import DEFAULT_FLAGS, NumericFlags
from .geom_core import PointLike, as_point, chord_endpoints

__all__ = (
    'ConvexPolygon',
    'polygon_chord',
    'polygon_contains',
    'parse_polygon',
    'load_polygon',
    'preset_polygon',
    'PRESET_NAMES',
)

log = logging.getLogger('hilbertmetric.polygon')

PRESET_NAMES = ('square', 'triangle', 'inscribed-square', 'sector:ANGLE[:SEGMENTS[:TRUNCATE]]')


class ConvexPolygon(object):
    """
    :param vertices: Sequence of planar points, either orientation
    :param lines: Optional source line number of every vertex, used in error messages
    :param flags: Tolerances used for validation and later queries
    :raises InvalidPolygon: Fewer than three vertices, a repeated vertex, or a non strictly convex turn
    """

    def __init__(self,
                 vertices: Sequence[PointLike],
                 lines: Optional[Sequence[int]] = None,
                 flags: NumericFlags = DEFAULT_FLAGS):
        self.flags = flags
        pts = np.array([as_point(v) for v in vertices], dtype=float) if len(vertices) else np.zeros((0, 2))
        lines = list(lines) if lines is not None else [None] * len(pts)

        if len(pts) < 3:
            raise InvalidPolygon('a polygon needs at least 3 vertices', operation='ConvexPolygon')
        if pts.shape[1] != 2:
            raise InvalidPolygon('polygon vertices must be planar', operation='ConvexPolygon')

        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if np.linalg.norm(pts[i] - pts[j]) < flags.eps_deg:
                    raise InvalidPolygon('repeated vertex', operation='ConvexPolygon', value=tuple(pts[j]), line=lines[j])

        if self._signed_area(pts) < 0:
            pts = pts[::-1].copy()
            lines = lines[::-1]

        edges = np.roll(pts, -1, axis=0) - pts
        prev_edges = np.roll(edges, 1, axis=0)
        turns = prev_edges[:, 0] * edges[:, 1] - prev_edges[:, 1] * edges[:, 0]
        for i, turn in enumerate(turns):
            if turn <= flags.eps_deg:
                raise InvalidPolygon('polygon is not strictly convex', operation='ConvexPolygon', value=tuple(pts[i]), line=lines[i])

        winding = np.sum(np.arctan2(turns, np.einsum('ij,ij->i', prev_edges, edges)))
        if abs(winding - 2.0 * math.pi) > 1e-6:
            raise InvalidPolygon('polygon boundary is self-intersecting', operation='ConvexPolygon', line=lines[0])

        self.vertices = pts
        self.lines = lines
        self.edges = edges
        self.edge_lengths = np.linalg.norm(edges, axis=1)
        self.normals = np.column_stack((edges[:, 1], -edges[:, 0])) / self.edge_lengths[:, None]
        self.offsets = np.einsum('ij,ij->i', self.normals, pts)
        self.perimeter = float(np.sum(self.edge_lengths))
        self._cumulative = np.concatenate(([0.0], np.cumsum(self.edge_lengths)))

    @staticmethod
    def _signed_area(pts: np.ndarray) -> float:
        x, y = pts[:, 0], pts[:, 1]
        return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))

    @property
    def area(self) -> float:
        return self._signed_area(self.vertices)

    @property
    def max_vertex_norm(self) -> float:
        return float(np.max(np.linalg.norm(self.vertices, axis=1)))

    @property
    def vertex_parameters(self) -> np.ndarray:
        """Arclength parameters in [0, 1) of the vertices."""
        return self._cumulative[:-1] / self.perimeter

    def contains(self, x: PointLike) -> float:
        """
        Signed distance from ``x`` to the boundary, positive inside and
        negative outside.
        """
        p = as_point(x)
        slack = self.offsets - self.normals @ p
        if np.all(slack >= 0):
            return float(np.min(slack))
        return -self._distance_to_boundary(p)

    def _distance_to_boundary(self, p: np.ndarray) -> float:
        rel = p - self.vertices
        t = np.clip(np.einsum('ij,ij->i', rel, self.edges) / self.edge_lengths ** 2, 0.0, 1.0)
        foot = self.vertices + t[:, None] * self.edges
        return float(np.min(np.linalg.norm(p - foot, axis=1)))

    def require_inside(self, x: PointLike, operation: str) -> np.ndarray:
        """
        :raises OutsideDomain: ``x`` is not inside the polygon
        :raises NearBoundary: ``x`` is inside but closer than ``eps_bnd`` to the boundary
        """
        p = as_point(x)
        margin = self.contains(p)
        if margin <= 0:
            raise OutsideDomain('point is outside the polygon', operation=operation, value=tuple(p))
        if margin < self.flags.eps_bnd:
            raise NearBoundary('point is too close to the polygon boundary', operation=operation, value=tuple(p))
        return p

    def ray_exit(self, p: np.ndarray, d: np.ndarray) -> float:
        """
        Distance along the unit vector ``d`` from the interior point ``p`` to
        the boundary.
        """
        speed = self.normals @ d
        forward = speed > 0
        return float(np.min((self.offsets[forward] - self.normals[forward] @ p) / speed[forward]))

    def chord(self, a: PointLike, b: PointLike) -> Tuple[np.ndarray, np.ndarray]:
        """
        Boundary endpoints ``(u, v)`` of the chord through ``a`` and ``b``,
        ordered so that u, a, b, v follow each other along the line.

        :raises OutsideDomain: A point is outside the polygon
        :raises DegenerateInput: ``a = b``
        """
        a = self.require_inside(a, 'polygon_chord')
        b = self.require_inside(b, 'polygon_chord')
        u, v = chord_endpoints(a, b, self.ray_exit, 'polygon_chord', self.flags)
        log.debug('chord through %s and %s ends at %s and %s', a, b, u, v)
        return u, v

    def boundary_points(self, s: Union[float, np.ndarray]) -> np.ndarray:
        """
        Boundary points at arclength parameters ``s`` (taken modulo 1,
        counterclockwise from the first vertex).
        """
        s = np.mod(np.asarray(s, dtype=float), 1.0) * self.perimeter
        closed = np.vstack((self.vertices, self.vertices[:1]))
        x = np.interp(s, self._cumulative, closed[:, 0])
        y = np.interp(s, self._cumulative, closed[:, 1])
        return np.stack((x, y), axis=-1)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return '<ConvexPolygon with {0} vertices>'.format(len(self.vertices))


def polygon_chord(P: ConvexPolygon, a: PointLike, b: PointLike) -> Tuple[np.ndarray, np.ndarray]:
    return P.chord(a, b)


def polygon_contains(P: ConvexPolygon, x: PointLike) -> float:
    return P.contains(x)


def parse_polygon(text: str, flags: NumericFlags = DEFAULT_FLAGS) -> ConvexPolygon:
    """
    :raises PolygonFormatError: A line is not two decimal numbers
    :raises InvalidPolygon: The vertices are not a strictly convex polygon
    """
    vertices = []
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise PolygonFormatError('expected two numbers, got {0!r}'.format(line), operation='parse_polygon', line=lineno)
        try:
            x, y = float(fields[0]), float(fields[1])
        except ValueError:
            raise PolygonFormatError('not a decimal number: {0!r}'.format(line), operation='parse_polygon', line=lineno)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise PolygonFormatError('coordinates must be finite', operation='parse_polygon', line=lineno)
        vertices.append((x, y))
        lines.append(lineno)
    return ConvexPolygon(vertices, lines=lines, flags=flags)


def load_polygon(path: Union[str, Path], flags: NumericFlags = DEFAULT_FLAGS) -> ConvexPolygon:
    path = Path(path)
    log.info('Reading polygon from %s', path)
    with path.open('rt', encoding='utf-8') as fin:
        return parse_polygon(fin.read(), flags=flags)


def _regular(count: int, start_deg: float, radius: float = 1.0) -> list:
    angles = np.radians(start_deg + 360.0 * np.arange(count) / count)
    return list(zip(radius * np.cos(angles), radius * np.sin(angles)))


def _sector(angle_deg: float, segments: int, truncate: float) -> list:
    if not 0 < angle_deg <= 180:
        raise UsageError('sector opening must be in (0, 180] degrees', operation='preset_polygon', value=angle_deg)
    if segments < 1 or (angle_deg == 180 and segments < 2):
        raise UsageError('too few arc segments for the sector', operation='preset_polygon', value=segments)
    half = math.radians(angle_deg) / 2
    if truncate and (angle_deg == 180 or not 0 < truncate < math.cos(half)):
        raise UsageError('sector truncation must lie between the apex and the arc', operation='preset_polygon', value=truncate)
    angles = np.linspace(-half, half, segments + 1)
    arc = list(zip(np.cos(angles), np.sin(angles)))
    if angle_deg == 180:
        return arc
    if not truncate:
        return [(0.0, 0.0)] + arc
    # the apex is cut off by the line x = truncate
    edge = truncate * math.tan(half)
    return [(truncate, -edge)] + arc + [(truncate, edge)]


def preset_polygon(name: str, flags: NumericFlags = DEFAULT_FLAGS) -> ConvexPolygon:
    """
    :raises UsageError: Unknown preset name or bad sector parameters
    """
    if name == 'square':
        return ConvexPolygon([(-1, -1), (1, -1), (1, 1), (-1, 1)], flags=flags)
    if name == 'triangle':
        return ConvexPolygon(_regular(3, 90.0), flags=flags)
    if name == 'inscribed-square':
        return ConvexPolygon(_regular(4, 45.0), flags=flags)
    if name.startswith('sector:'):
        parts = name.split(':')[1:]
        if not 1 <= len(parts) <= 3:
            raise UsageError('sector preset is sector:ANGLE[:SEGMENTS[:TRUNCATE]]', operation='preset_polygon', value=name)
        try:
            angle = float(parts[0])
            segments = int(parts[1]) if len(parts) > 1 else 16
            truncate = float(parts[2]) if len(parts) > 2 else 0.0
        except ValueError:
            raise UsageError('malformed sector preset {0!r}'.format(name), operation='preset_polygon', value=name)
        return ConvexPolygon(_sector(angle, segments, truncate), flags=flags)
    raise UsageError('unknown preset {0!r}, expected one of {1}'.format(name, ', '.join(PRESET_NAMES)),
                     operation='preset_polygon', value=name)
