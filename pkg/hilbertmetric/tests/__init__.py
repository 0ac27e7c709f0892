# -*- coding: utf-8 -*-

import math

from hypothesis import strategies as st

from hilbertmetric.domain import PolygonDomain, UnitBall
from hilbertmetric.polygon import preset_polygon

LOG3 = math.log(3.0)
SQRT3_2 = math.sqrt(3.0) / 2.0

disk = UnitBall(2)
ball3 = UnitBall(3)
square = PolygonDomain(preset_polygon('square'), 'square')
triangle = PolygonDomain(preset_polygon('triangle'), 'triangle')
inscribed_square = PolygonDomain(preset_polygon('inscribed-square'), 'inscribed-square')

TRIANGLE_FILE = '''# regular triangle on the unit circle
0 1

-0.8660254037844386 -0.5
0.8660254037844386 -0.5
'''


@st.composite
def disk_points(draw, radius=0.95):
    """Points of the open disk, bounded away from the unit circle."""
    r = draw(st.floats(min_value=0.0, max_value=radius))
    theta = draw(st.floats(min_value=0.0, max_value=2.0 * math.pi))
    return (r * math.cos(theta), r * math.sin(theta))


@st.composite
def distinct_disk_pairs(draw, radius=0.95, gap=1e-3):
    a = draw(disk_points(radius))
    b = draw(disk_points(radius).filter(lambda p: math.hypot(p[0] - a[0], p[1] - a[1]) > gap))
    return a, b
