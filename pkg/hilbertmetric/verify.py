# -*- coding: utf-8 -*-

"""
Verification suites
===================

Every identity and inequality this library implements is checked here
against independent numeric oracles on seeded random samples. A suite is a
function registered with :py:func:`suite`; it receives a
:py:class:`SuiteContext` and fills a
:py:class:`~hilbertmetric.report.MetricReport` with metrics and margins.

.. code-block:: python

    >>> reports = run_suites(['functional-identity'], seed=7, samples=1000)
    >>> reports[0].ok
    True

Suites draw from their own random stream (see
:py:func:`~hilbertmetric.sampling.rng_for`), so the same seed always gives
byte-identical reports.

----

API
---
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import rich.progress

from .balls import hilbert_ball_boundary, hilbert_sphere_axes, hilbert_sphere_ellipsoid, polygon_spoke_fit
from .domain import PolygonDomain, UnitBall
from .exceptions import HilbertMetricError, UsageError
from .flags import DEFAULT_FLAGS, DEFAULT_SEED, NumericFlags
from .geom_core import (
    Line2,
    as_complex,
    circle_through,
    cross_ratio,
    lis,
    lis_unit_circle,
    mobius_T,
    to_point,
)
from .hilbert import (
    chordal_projection,
    functional_identity_residual,
    h_ball,
    h_chord,
    h_interval,
    hilbert_hyperbolic_sandwich,
    hilbert_midpoint,
    projected_chord_cross_ratio,
    max_interval_gap,
    midpoint_configuration,
    monotone_ratio,
    parallel_projection_points,
    quarter_tanh_chain,
    second_intersection,
    tangency_points,
    tangency_points_visual_angle,
    unit_disk_gap_margin,
)
from .holder import default_catalog, holder_verify
from .hyperbolic import (
    disk_automorphism,
    geodesic_endpoints_ball,
    hyp_disk_to_euclidean,
    hyp_midpoint,
    midpoint_circle_check,
    midpoint_identity_residual,
    rho_ball,
)
from .polygon import preset_polygon
from .related_metrics import apollonian, apollonian_grid, density_margins_disk, h_le_alpha_margin, mobius_supremum
from .report import MetricReport, console
from .sampling import ball_pairs, ball_points, domain_pairs, rng_for
from .special_functions import (
    U_CONSTANT,
    V_CONSTANT,
    c_bounds,
    c_of_K,
    ell_K,
    ell_K_quadrature,
    gamma2,
    gamma2_inv,
    mu,
    mu_inv,
    phi_K,
    phi_K_via_gamma,
)

__all__ = (
    'Suite',
    'SuiteContext',
    'SUITES',
    'suite',
    'find_suite',
    'run_suites',
)

log = logging.getLogger('hilbertmetric.verify')

#: Surface points sampled on each Hilbert sphere of the ellipsoid suite
ELLIPSOID_POINTS = 1000


@dataclass
class SuiteContext:
    """
    :param rng: Random stream of the suite
    :param samples: Sample count, the suite default unless overridden
    :param budget: Evaluation budget of numeric suprema
    :param quiet: Hide progress bars
    """
    rng: np.random.Generator
    samples: int
    budget: int
    flags: NumericFlags = DEFAULT_FLAGS
    quiet: bool = True

    def track(self, sequence: Iterable, total: int, description: str = 'Working...'):
        return rich.progress.track(sequence, total=total, description=description, disable=self.quiet, console=console)


@dataclass(frozen=True)
class Suite:
    """
    :param anchor: Quote naming the checked statement
    :param statement: The checked formula
    :param aliases: Alternative names accepted by :py:func:`find_suite`, any case
    """
    name: str
    anchor: str
    default_samples: int
    func: Callable[[SuiteContext, MetricReport], None]
    statement: str = ''
    aliases: Tuple[str, ...] = ()


SUITES: Dict[str, Suite] = {}


def suite(name: str, anchor: str, samples: int, statement: str = '', aliases: Sequence[str] = ()):
    """Register the decorated function as the suite ``name``."""

    def decorator(func):
        SUITES[name] = Suite(name, anchor, samples, func, statement, tuple(aliases))
        return func

    return decorator


def find_suite(name: str) -> Optional[Suite]:
    """Suite by name or alias, ignoring case."""
    key = name.lower()
    for s in SUITES.values():
        if key == s.name.lower() or key in (alias.lower() for alias in s.aliases):
            return s
    return None


def run_suites(names: Optional[List[str]] = None,
               seed: Optional[int] = None,
               samples: Optional[int] = None,
               budget: int = 10000,
               quiet: bool = True,
               flags: NumericFlags = DEFAULT_FLAGS) -> List[MetricReport]:
    """
    Run the named suites (all of them by default) in registration order.
    Names may be aliases. A suite that raises a
    :py:exc:`~hilbertmetric.exceptions.HilbertMetricError` fails with the
    error recorded as a note.

    :raises UsageError: Unknown suite name
    """
    seed = DEFAULT_SEED if seed is None else seed
    if names:
        found = {n: find_suite(n) for n in names}
        unknown = [n for n, s in found.items() if s is None]
        if unknown:
            raise UsageError('unknown suite {0}, expected one of {1}'.format(', '.join(unknown), ', '.join(SUITES)),
                             operation='verify', value=unknown)
        wanted = {s.name for s in found.values()}
        selected = [s for s in SUITES.values() if s.name in wanted]
    else:
        selected = list(SUITES.values())

    reports = []
    for s in selected:
        count = samples if samples is not None else s.default_samples
        context = SuiteContext(rng_for(s.name, seed), count, budget, flags, quiet)
        report = MetricReport(s.name, anchor=s.anchor, statement=s.statement, seed=seed, budget=budget, samples=count)
        log.info('Running suite %s with %d samples', s.name, count)
        try:
            s.func(context, report)
        except HilbertMetricError as exc:
            log.error('Suite %s raised %s', s.name, exc)
            report.add_note('error', str(exc))
            report.add_margin('completed', -math.inf)
        reports.append(report)
    return reports


def _pairs(ctx: SuiteContext, n: int = 2, radius: float = 0.99):
    left, right = ball_pairs(ctx.rng, ctx.samples, n, radius)
    return ctx.track(zip(left, right), ctx.samples)


def _ordered_circle_points(rng: np.random.Generator, count: int, min_gap: float = 0.1) -> np.ndarray:
    """``count`` counterclockwise points of the unit circle, consecutive angles at least ``min_gap`` apart."""
    while True:
        theta = np.sort(rng.uniform(0.0, 2.0 * np.pi, count))
        gaps = np.diff(np.concatenate((theta, theta[:1] + 2.0 * np.pi)))
        if np.all(gaps >= min_gap):
            return np.exp(1j * theta)


def _arc_point(rng: np.random.Generator, start: complex, end: complex) -> complex:
    """Random point of the counterclockwise arc from ``start`` to ``end``, away from its ends."""
    t0 = math.atan2(start.imag, start.real)
    span = (math.atan2(end.imag, end.real) - t0) % (2.0 * math.pi)
    return complex(np.exp(1j * (t0 + span * rng.uniform(0.1, 0.9))))


@suite('functional-identity', 'the following functional identity holds', 100000,
       statement='sh(h/2) = sqrt(1 - m^2) sh(rho/2) in the disk', aliases=('rveq',))
def _functional_identity(ctx: SuiteContext, report: MetricReport):
    worst = max(functional_identity_residual(a, b, ctx.flags) for a, b in _pairs(ctx))
    report.add_metric('max residual', worst)
    report.add_residual('identity', worst, 1e-9)


@suite('sandwich', 'the following inequality holds', 100000,
       statement='h <= rho <= h / sqrt(1 - m^2) in the disk', aliases=('hrho', 'rhohil'))
def _sandwich(ctx: SuiteContext, report: MetricReport):
    for a, b in _pairs(ctx):
        lower, upper = hilbert_hyperbolic_sandwich(a, b, ctx.flags)
        report.add_margin('h <= rho', lower, 1e-12)
        report.add_margin('rho <= h / sqrt(1 - m^2)', upper, 1e-12)
    for _ in range(1000):
        direction = np.exp(1j * ctx.rng.uniform(0, 2 * np.pi))
        r1, r2 = ctx.rng.uniform(-0.99, 0.99, 2)
        a, b = to_point(r1 * direction), to_point(r2 * direction)
        report.add_residual('h = rho through the origin', abs(h_ball(a, b) - rho_ball(a, b)), 1e-10)


@suite('lower-bounds', 'with equality if a=-b', 100000,
       statement='th(rho/4) >= th(h/4) >= |a-b| / sqrt(4 - |a+b|^2)', aliases=('Est2h', 'mamo1'))
def _lower_bounds(ctx: SuiteContext, report: MetricReport):
    for n in (2, 3):
        for a, b in _pairs(ctx, n):
            first, second = quarter_tanh_chain(a, b, ctx.flags)
            report.add_margin('th(rho/4) >= th(h/4)', first, 1e-12)
            report.add_margin('th(h/4) >= |a-b| / sqrt(4 - |a+b|^2)', second, 1e-12)
        for a in ball_points(ctx.rng, 100, n, 0.99):
            first, second = quarter_tanh_chain(a, -a, ctx.flags)
            report.add_residual('equality at a = -b', max(abs(first), abs(second)), 1e-12)


@suite('unit-disk-gap', 'Here equality holds if D=B^2', 10000,
       statement='|a-b| <= 2 th(h_D(a,b)/4) for D in the unit disk', aliases=('my210',))
def _unit_disk_gap(ctx: SuiteContext, report: MetricReport):
    domains = [UnitBall(2, ctx.flags),
               PolygonDomain(preset_polygon('triangle', ctx.flags), 'triangle'),
               PolygonDomain(preset_polygon('inscribed-square', ctx.flags), 'inscribed-square')]
    for D in domains:
        left, right = domain_pairs(ctx.rng, D, ctx.samples)
        for a, b in ctx.track(zip(left, right), ctx.samples, D.name):
            report.add_margin('gap ' + D.name, unit_disk_gap_margin(D, a, b), 1e-12)
    for a in ball_points(ctx.rng, 100, 2, 0.99):
        report.add_residual('equality at antipodes', abs(unit_disk_gap_margin(domains[0], a, -a)), 1e-12)


@suite('interval-gap', 'method of Lagrange multiplier', 5000,
       statement='max |a-b| at fixed h on (-1, 1) is 2 th(h/4), attained at a = -b', aliases=('lagrange',))
def _interval_gap(ctx: SuiteContext, report: MetricReport):
    for a, b in ctx.rng.uniform(-0.999, 0.999, (ctx.samples, 2)):
        report.add_margin('|a-b| <= 2 th(h/4)', max_interval_gap(h_interval(a, b)) - abs(a - b), 1e-12)
    for h in ctx.rng.uniform(0.01, 10.0, 100):
        x = math.tanh(h / 4.0)
        report.add_residual('maximizer a = -b', abs(h_interval(-x, x) - h), 1e-9)


@suite('monotone-ratio', 'f(t)/g(t): (0,inf) -> (1,1/c) is increasing', 200,
       statement='2 arsh(c sh(t/2)) / (ct) is monotone in t between 1 and 1/c', aliases=('FujiProp',))
def _monotone_ratio(ctx: SuiteContext, report: MetricReport):
    t = np.logspace(-3, 2, ctx.samples)
    for c in np.concatenate((ctx.rng.uniform(0.05, 0.95, 5), ctx.rng.uniform(1.05, 20.0, 5))):
        values = np.array([monotone_ratio(c, x) for x in t])
        steps = np.diff(values) if c < 1 else -np.diff(values)
        report.add_margin('monotone', float(np.min(steps)), 1e-12)
        low, high = (1.0, 1.0 / c) if c < 1 else (1.0 / c, 1.0)
        report.add_margin('within limits', min(float(np.min(values)) - low, high - float(np.max(values))), 1e-12)


@suite('ellipsoid', 'an ellipsoid of revolution, with the center', 100,
       statement='Hilbert spheres of the ball are ellipsoids of revolution', aliases=('Basphere',))
def _ellipsoid(ctx: SuiteContext, report: MetricReport):
    for n in (2, 3, 5):
        for _ in ctx.track(range(ctx.samples), ctx.samples, 'n = {0}'.format(n)):
            c = ball_points(ctx.rng, 1, n, 0.9)[0]
            R = float(ctx.rng.uniform(0.05, 4.0))
            spec = hilbert_sphere_ellipsoid(c, R, ctx.flags)
            center, a_min, a_max = hilbert_sphere_axes(c, R, ctx.flags)
            report.add_residual('closed forms agree',
                                float(np.max(np.abs(center - spec.center))) + abs(a_min - spec.a_min) + abs(a_max - spec.a_max),
                                1e-12)
            for x in spec.sample(ctx.rng, ELLIPSOID_POINTS):
                report.add_residual('h(x, c) = R', abs(h_ball(x, c, ctx.flags) - R), 1e-9)
                report.add_residual('sphere equation', spec.nsc_residual(x), 1e-10)
        for R in ctx.rng.uniform(0.05, 4.0, 10):
            spec = hilbert_sphere_ellipsoid(np.zeros(n), R, ctx.flags)
            report.add_residual('centered sphere radius', abs(spec.a_max - math.tanh(R / 2.0)), 1e-12)


@suite('midpoints', 'p is the Hilbert midpoint of a', 10000,
       statement='hyperbolic and Hilbert midpoints of the disk', aliases=('lemFuji', 'Hilbertmidpoint'))
def _midpoints(ctx: SuiteContext, report: MetricReport):
    disk = UnitBall(2, ctx.flags)
    for a, b in _pairs(ctx, 2, 0.95):
        if np.linalg.norm(a - b) < 1e-3:
            continue
        rho = rho_ball(a, b)
        m = hyp_midpoint(a, b)
        report.add_residual('hyperbolic midpoint halves rho', max(abs(rho_ball(a, m) - rho / 2), abs(rho_ball(m, b) - rho / 2)), 1e-9)
        report.add_residual('identity residual', midpoint_identity_residual(a, b), 1e-11)
        report.merge(midpoint_circle_check(a, b, flags=ctx.flags))
        p_hilbert = hilbert_midpoint(disk, a, b)
        report.add_residual('Hilbert midpoint halves h', abs(h_chord(disk, a, p_hilbert) - h_chord(disk, p_hilbert, b)), 1e-9)
        for which in (0, 1):
            conf = midpoint_configuration(a, b, which, ctx.flags)
            report.add_residual('construction: h(a,p) = h(p,b)', abs(h_ball(a, conf.p) - h_ball(conf.p, b)), 1e-9)
            report.add_residual('construction: rho(a,p) = rho(p,b)', abs(rho_ball(a, conf.p) - rho_ball(conf.p, b)), 1e-9)
            report.add_residual('construction: L[c,d] parallel to L[a,b]', conf.parallel_residual, 1e-9)
            report.add_residual('construction: h = log |u,c,d,v|',
                                abs(math.log(cross_ratio(conf.u, conf.c, conf.d, conf.v)) - h_ball(a, b)), 1e-8)
            report.add_residual('construction equals midpoint', float(np.linalg.norm(conf.p - p_hilbert)), 1e-9)


@suite('tangency', 'points of tangency lie in distinct half-planes', 10000,
       statement='circles through a, b tangent to the unit circle', aliases=('newLem',))
def _tangency(ctx: SuiteContext, report: MetricReport):
    for a, b in _pairs(ctx, 2, 0.95):
        if np.linalg.norm(a - b) < 1e-3:
            continue
        w1, w2 = tangency_points(a, b, ctx.flags)
        line = Line2(as_complex(a), as_complex(b))
        report.add_margin('opposite sides of L[a,b]', -line.side(w1) * line.side(w2))
        for w in (w1, w2):
            report.add_residual('|w| = 1', abs(np.linalg.norm(w) - 1.0), 1e-10)
            circle = circle_through(a, b, w, ctx.flags)
            report.add_residual('internally tangent', abs(np.linalg.norm(circle.center) + circle.radius - 1.0), 1e-9)
        if abs(np.linalg.norm(a) - np.linalg.norm(b)) > 0.05:
            v1, v2 = tangency_points_visual_angle(a, b, ctx.flags)
            distance = min(max(np.linalg.norm(w1 - v1), np.linalg.norm(w2 - v2)),
                           max(np.linalg.norm(w1 - v2), np.linalg.norm(w2 - v1)))
            report.add_residual('visual angle formula agrees', distance, 1e-9)


@suite('cross-ratio-projection', 'The following equality of cross-ratios holds', 500,
       statement='chordal projection preserves cross-ratios', aliases=('LittleThm',))
def _cross_ratio_projection(ctx: SuiteContext, report: MetricReport):
    rng = ctx.rng
    for _ in ctx.track(range(ctx.samples), ctx.samples):
        u, c, d, v, _ = _ordered_circle_points(rng, 5)
        values = []
        for _ in range(20):
            w = _arc_point(rng, v, u)
            a, b = lis(u, v, c, w), lis(u, v, d, w)
            values.append(cross_ratio(to_point(u), a, b, to_point(v)))
            report.add_residual('F(c) = LIS[u,v,c,w]', float(np.linalg.norm(chordal_projection(u, v, w, c) - a)), 1e-10)
        expected = cross_ratio(to_point(u), to_point(c), to_point(d), to_point(v))
        report.add_residual('|u,a,b,v| = |u,c,d,v|', max(abs(x - expected) for x in values) / expected, 1e-10)
        report.add_residual('invariant in w', float(np.std(values) / np.mean(values)), 1e-9)

        a, u, b, c, d = _ordered_circle_points(rng, 5)
        exp_h = projected_chord_cross_ratio(a, b, c, d)
        values = []
        for _ in range(20):
            u = _arc_point(rng, a, b)
            a2, b2 = lis(a, b, u, d), lis(a, b, u, c)
            values.append(math.exp(h_ball(a2, b2)))
        report.add_residual('exp h(a2,b2) closed form', max(abs(x - exp_h) for x in values) / exp_h, 1e-9)
        p = to_point(a + rng.uniform(0.1, 0.9) * (b - a))
        c2, d2 = second_intersection(p, c), second_intersection(p, d)
        report.add_residual('f_p preserves |a,d,c,b|',
                            abs(cross_ratio(to_point(a), c2, d2, to_point(b)) - cross_ratio(to_point(a), to_point(d), to_point(c), to_point(b))),
                            1e-9)
        v = lis(a2, c2, b2, d2)
        report.add_residual('LIS[a2,c2,b2,d2] on the circle', abs(np.linalg.norm(v) - 1.0), 1e-9)

        # parallel chords [u,v] and [c,d]
        rotation = np.exp(1j * rng.uniform(0, 2 * np.pi))
        phi1 = rng.uniform(0.1, 0.6)
        phi2 = rng.uniform(phi1 + 0.2, 1.4)
        u, v = rotation * np.exp(1j * (np.pi + phi1)), rotation * np.exp(-1j * phi1)
        c, d = rotation * np.exp(1j * (np.pi + phi2)), rotation * np.exp(-1j * phi2)
        w = rotation * np.exp(1j * rng.uniform(0.2, np.pi - 0.2))
        a, b = lis(u, v, c, w), lis(u, v, d, w)
        pa, pb = parallel_projection_points(u, v, c, d, w, ctx.flags)
        report.add_residual('parallel closed forms', float(np.linalg.norm(pa - a) + np.linalg.norm(pb - b)), 1e-10)
        circle = circle_through(a, b, to_point(w), ctx.flags)
        report.add_residual('parallel chords give tangency', abs(np.linalg.norm(circle.center) + circle.radius - 1.0), 1e-9)
        report.add_residual('parallel case of the closed form',
                            abs(projected_chord_cross_ratio(u, v, d, c) - abs((u - d) / (u - c)) ** 2), 1e-10)
        exp_h = abs((u - d) / (u - c)) ** 2
        report.add_residual('parallel exp h(a,b) = |u-d|^2 / |u-c|^2', abs(math.exp(h_ball(a, b)) - exp_h) / exp_h, 1e-9)


@suite('special-functions', 'we define the special function', 100,
       statement='K, mu, phi_K and c(K) with K <= u(K-1)+1 <= log ch(K arch e) <= c(K) <= v(K-1)+K')
def _special_functions(ctx: SuiteContext, report: MetricReport):
    grid = np.linspace(0.0, 0.99, ctx.samples)
    report.add_residual('K by agm = K by quadrature', max(abs(ell_K(r) - ell_K_quadrature(r)) for r in grid), 1e-12)
    report.add_residual('mu(1/sqrt 2) = pi/2', abs(mu(1.0 / math.sqrt(2.0)) - math.pi / 2.0), 1e-12)
    inner = grid[1:]
    report.add_margin('mu decreasing', float(np.min(-np.diff([mu(r) for r in inner]))))
    report.add_residual('mu_inv(mu(r)) = r', max(abs(mu_inv(mu(r)) - r) for r in inner), 1e-12)
    report.add_residual('gamma2_inv(gamma2(s)) = s', max(abs(gamma2_inv(gamma2(1.0 / r)) * r - 1.0) for r in inner), 1e-10)
    report.add_residual('phi_1 = identity', max(abs(phi_K(1.0, r) - r) for r in grid), 1e-12)
    for K in (0.5, 1.5, 2.0, 3.0):
        report.add_residual('phi_K by mu = phi_K by gamma2',
                            max(abs(phi_K(K, r) - phi_K_via_gamma(K, r)) for r in inner), 1e-10)
        report.add_residual('phi_K(phi_1/K(r)) = r', max(abs(phi_K(K, phi_K(1.0 / K, r)) - r) for r in inner), 1e-10)
    report.add_residual('c(1) = 1', abs(c_of_K(1.0) - 1.0), 1e-12)
    report.add_metric('u', U_CONSTANT)
    report.add_metric('v', V_CONSTANT)
    report.add_margin('u > 1.5412', U_CONSTANT - 1.5412)
    report.add_margin('v < 1.3507', 1.3507 - V_CONSTANT)
    for K in (1.0, 1.5, 2.0, 3.0, 5.0):
        bounds = c_bounds(K)
        report.add_metric('c({0:g})'.format(K), bounds.c)
        report.add_margin('bound chain', min(bounds.margins()), 1e-12)


@suite('holder', 'K-quasiregular mapping onto a convex bounded domain', 10000,
       statement='h(f(a), f(b)) <= 2c(K) max(h, h^(1/K)) / sqrt(1 - m^2)')
def _holder(ctx: SuiteContext, report: MetricReport):
    for spec, K in default_catalog():
        sub = holder_verify(spec, K, ctx.samples, seed=int(ctx.rng.integers(2 ** 31)), quiet=ctx.quiet, flags=ctx.flags)
        report.merge(sub, prefix=spec.label + ' ')


@suite('hilbert-balls', 'is called the Hilbert disk', 1000,
       statement='Hilbert circles: radius th(t/2) about 0, convex hexagons in a triangle')
def _hilbert_balls(ctx: SuiteContext, report: MetricReport):
    disk = UnitBall(2, ctx.flags)
    for t in ctx.rng.uniform(0.1, 5.0, 5):
        polyline = hilbert_ball_boundary(disk, (0.0, 0.0), t, 360)
        report.add_residual('disk radius th(t/2)', float(np.max(np.abs(polyline.radii((0.0, 0.0)) - math.tanh(t / 2.0)))), 1e-9)
    triangle = PolygonDomain(preset_polygon('triangle', ctx.flags), 'triangle')
    for z, t in (((0.1, -0.05), 1.0), ((-0.2, 0.1), 0.5), ((0.0, 0.2), 2.0)):
        polyline = hilbert_ball_boundary(triangle, z, t, 720)
        report.add_margin('triangle circle convex', 1.0 if polyline.is_convex() else -1.0)
        report.add_residual('hexagon fit', polygon_spoke_fit(triangle, z, t, polyline), 1e-3)
    inner = PolygonDomain(preset_polygon('inscribed-square', ctx.flags), 'inscribed-square')
    outer = PolygonDomain(preset_polygon('square', ctx.flags), 'square')
    left, right = domain_pairs(ctx.rng, inner, ctx.samples)
    for a, b in ctx.track(zip(left, right), ctx.samples):
        report.add_margin('h_inner >= h_outer', h_chord(inner, a, b) - h_chord(outer, a, b), 1e-12)


@suite('apollonian-mobius', 'bounded convex plane domain', 100,
       statement='h <= alpha <= delta <= log(e^alpha + 2), alpha = delta = rho on the disk', aliases=('Bthm',))
def _apollonian_mobius(ctx: SuiteContext, report: MetricReport):
    square = PolygonDomain(preset_polygon('square', ctx.flags), 'square')
    triangle = PolygonDomain(preset_polygon('triangle', ctx.flags), 'triangle')
    for D in (square, triangle):
        left, right = domain_pairs(ctx.rng, D, ctx.samples, 0.05)
        for a, b in ctx.track(zip(left, right), ctx.samples, D.name):
            alpha = apollonian(D, a, b)
            report.add_residual('alpha matches boundary grid', abs(alpha - apollonian_grid(D, a, b)), 1e-6)
            report.add_margin('h <= alpha', h_le_alpha_margin(D, a, b), 1e-12)
            certificate = mobius_supremum(D, a, b, ctx.budget)
            report.add_margin('alpha <= delta', certificate.value - alpha, 1e-4)
            report.add_margin('delta <= log(e^alpha + 2)', math.log(math.exp(alpha) + 2.0) - certificate.value, 1e-4)
    disk = UnitBall(2, ctx.flags)
    alpha_rho_min = math.inf
    for a, b in _pairs(ctx, 2, 0.95):
        rho = rho_ball(a, b)
        alpha = apollonian(disk, a, b)
        alpha_rho_min = min(alpha_rho_min, rho - alpha)
        report.add_residual('disk alpha = rho', abs(alpha - rho), 1e-6)
        report.add_residual('disk delta = rho', abs(mobius_supremum(disk, a, b, ctx.budget).value - rho), 1e-6)
        report.merge(density_margins_disk(a, b))
    report.add_note('disk alpha <= rho min margin', alpha_rho_min)


@suite('oracles', 'the Hilbert distance h_D(a,b) is defined', 100000,
       statement='closed forms agree with independent constructions')
def _oracles(ctx: SuiteContext, report: MetricReport):
    disk = UnitBall(2, ctx.flags)
    for a, b in _pairs(ctx):
        if np.linalg.norm(a - b) < 1e-6:
            continue
        report.add_residual('h_chord = h_ball', abs(h_chord(disk, a, b) - h_ball(a, b)), 1e-9)
        arc = geodesic_endpoints_ball(a, b, ctx.flags)
        rho = rho_ball(a, b)
        report.add_residual('log |a*,a,b,b*| = rho', abs(math.log(cross_ratio(arc.a_star, a, b, arc.b_star)) - rho), 1e-9)
        report.add_residual('geodesic circle orthogonal', arc.orthogonality_residual, 1e-10)
        g = disk_automorphism(ball_points(ctx.rng, 1, 2, 0.9)[0], ctx.rng.uniform(0, 2 * np.pi))
        report.add_residual('rho Mobius invariant', abs(rho_ball(g(a), g(b)) - rho), 1e-9)
    for _ in range(ctx.samples // 10):
        p, q, r, s = _ordered_circle_points(ctx.rng, 4, 0.05)
        report.add_residual('lis_unit_circle = lis', float(np.linalg.norm(lis_unit_circle(p, r, q, s) - lis(p, r, q, s))), 1e-10)
        x = ball_points(ctx.rng, 1, 2, 0.9)[0]
        u, v = to_point(p), to_point(q)
        a, b = to_point(p + 0.3 * (q - p)), to_point(p + 0.6 * (q - p))
        before = cross_ratio(u, a, b, v)
        after = cross_ratio(mobius_T(x, u), mobius_T(x, a), mobius_T(x, b), mobius_T(x, v))
        report.add_residual('cross-ratio Mobius invariant', abs(after - before) / before, 1e-9)
    for x in ball_points(ctx.rng, 100, 2, 0.9):
        M = float(ctx.rng.uniform(0.1, 3.0))
        image = hyp_disk_to_euclidean(x, M, ctx.flags)
        report.add_residual('disk image boundary at distance M',
                            max(abs(rho_ball(x, z) - M) for z in image.sample(16)), 1e-9)
