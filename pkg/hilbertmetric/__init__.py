# -*- coding: utf-8 -*-

version = '0.1.0'

from .domain import ConvexDomain, PolygonDomain, UnitBall
from .exceptions import HilbertMetricError
from .flags import DEFAULT_FLAGS, NumericFlags
from .hilbert import h_ball, h_chord
from .hyperbolic import rho_ball
from .polygon import ConvexPolygon, load_polygon, preset_polygon
from .report import MetricReport
