# -*- coding: utf-8 -*-

"""
Command line
============

The ``hilbertmetric`` command has five subcommands:

=========  ==================================================================
dist       Hilbert, hyperbolic, Apollonian and Möbius distances of two points
ball       Trace the Hilbert circle about a point, as CSV or SVG
sphere     Ellipsoid of a Hilbert sphere of the unit ball
holder     Schwarz constant c(K), its bounds and the Hölder bound of a map
verify     Run the verification suites
=========  ==================================================================

.. code-block:: bash

    $ hilbertmetric dist --ball 2 -a 0,0 -b 0.5,0
    $ hilbertmetric ball --preset triangle -a 0.1,0 -t 1 --format svg -o triangle.svg
    $ hilbertmetric sphere -a 0.5,0 -R 1.0986122886681098
    $ hilbertmetric holder -K 2 --map radial-stretch --pairs 10000
    $ hilbertmetric verify --seed 7 --format json

Points are written ``x,y`` (any number of comma separated coordinates, a
single decimal for points of the real line). The domain is one of
``--ball N``, ``--polygon FILE`` or ``--preset NAME``; without any of them
the unit ball of the dimension of the first point is used.

Exit codes:

==  ===========================================================
0   success
1   a verification margin failed
2   usage error, including unreadable polygon files
3   domain or geometry error, such as a point outside the domain
==  ===========================================================

----

API
---
"""

import argparse
import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

import numpy as np
from rich.logging import RichHandler
from rich.markup import escape

from .balls import MIN_DIRECTIONS, hilbert_ball_boundary, hilbert_sphere_ellipsoid, polygon_spoke_fit
from .domain import ConvexDomain, PolygonDomain, UnitBall
from .exceptions import HilbertMetricError, PolygonFormatError, UsageError
from .flags import DEFAULT_SEED
from .hilbert import h_ball, h_chord, hilbert_hyperbolic_sandwich
from .holder import MAP_NAMES, HolderBoundInput, QCMapSpec, holder_rhs, holder_verify, schwarz_rho_bound
from .hyperbolic import rho_ball
from .polygon import PRESET_NAMES, load_polygon, preset_polygon
from .related_metrics import apollonian, mobius_supremum
from .report import MetricReport, console, reports_to_json, reports_to_table
from .sampling import rng_for
from .special_functions import c_bounds
from .svg import ball_figure
from .verify import SUITES, Suite, run_suites

__all__ = (
    'RunConfig',
    'parse_point',
    'build_parser',
    'make_domain',
    'cmd_dist',
    'cmd_ball',
    'cmd_sphere',
    'cmd_holder',
    'cmd_verify',
    'main',
)

log = logging.getLogger('hilbertmetric.cli')

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

FORMATS = ('text', 'json', 'csv', 'svg')

_COMMAND_FORMATS = {
    'dist': ('text', 'json'),
    'ball': ('csv', 'svg', 'text', 'json'),
    'sphere': ('text', 'json'),
    'holder': ('text', 'json'),
    'verify': ('text', 'json'),
}

DEFAULT_SAMPLES = 1000


def parse_point(text: str) -> np.ndarray:
    """
    Parse ``x,y,...`` into a point.

    :raises argparse.ArgumentTypeError: A coordinate is not a finite decimal
    """
    try:
        coordinates = [float(part) for part in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma separated decimals, got {0!r}'.format(text))
    if not all(math.isfinite(x) for x in coordinates):
        raise argparse.ArgumentTypeError('coordinates must be finite, got {0!r}'.format(text))
    return np.array(coordinates)


@dataclass
class RunConfig:
    """
    The parsed command line.

    :param command: Subcommand name
    :param ball: Dimension of the unit ball domain
    :param polygon: Path of a polygon file
    :param preset: Name of a preset polygon
    :param format: Output format, ``None`` for the subcommand default
    :param output: Output file, ``None`` for stdout
    """
    command: str
    ball: Optional[int] = None
    polygon: Optional[Path] = None
    preset: Optional[str] = None
    a: Optional[np.ndarray] = None
    b: Optional[np.ndarray] = None
    t: Optional[float] = None
    R: Optional[float] = None
    K: Optional[float] = None
    ndirs: int = 360
    budget: int = 10000
    samples: Optional[int] = None
    seed: int = DEFAULT_SEED
    map: Optional[str] = None
    format: Optional[str] = None
    output: Optional[Path] = None
    suites: List[str] = field(default_factory=list)
    list_suites: bool = False
    verbose: int = 0
    quiet: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunConfig':
        values = vars(args)
        return cls(**{name: values[name] for name in cls.__dataclass_fields__ if name in values})

    @property
    def output_format(self) -> str:
        """
        :raises UsageError: The format is not available for the subcommand
        """
        allowed = _COMMAND_FORMATS[self.command]
        fmt = self.format or allowed[0]
        if fmt not in allowed:
            raise UsageError('{0} output is not available for {1}, use one of {2}'.format(fmt, self.command, ', '.join(allowed)),
                             operation=self.command, value=fmt)
        return fmt

    def sample_count(self) -> int:
        return self.samples if self.samples is not None else DEFAULT_SAMPLES


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    domain = common.add_mutually_exclusive_group()
    domain.add_argument('--ball', type=int, metavar='N', help='unit ball of dimension N')
    domain.add_argument('--polygon', type=Path, metavar='FILE', help='convex polygon file, one "x y" vertex per line')
    domain.add_argument('--preset', metavar='NAME', help='preset polygon: {0}'.format(', '.join(PRESET_NAMES)))
    common.add_argument('-a', type=parse_point, metavar='POINT', help='first point, or center')
    common.add_argument('-b', type=parse_point, metavar='POINT', help='second point')
    common.add_argument('-t', type=float, help='Hilbert radius of a circle')
    common.add_argument('-R', type=float, help='Hilbert radius of a sphere')
    common.add_argument('-K', type=float, help='distortion of a quasiregular map')
    common.add_argument('--ndirs', type=int, default=360, help='directions traced by ball (default %(default)s)')
    common.add_argument('--budget', type=int, default=10000,
                        help='grid pairs of the Möbius search: the boundary grid side doubles from 8 '
                             'while side^2 <= BUDGET and side <= 256, so 10000 gives 64x64 and 65536 '
                             'gives 256x256 (default %(default)s)')
    common.add_argument('--samples', '--pairs', dest='samples', type=int, help='random samples or pairs')
    common.add_argument('--seed', type=int, default=DEFAULT_SEED, help='random seed (default %(default)s)')
    common.add_argument('--map', metavar='NAME[:PARAM]', help='map of holder: {0}'.format(', '.join(MAP_NAMES)))
    common.add_argument('--format', choices=FORMATS, help='output format')
    common.add_argument('-o', '--output', type=Path, metavar='PATH', help='write output to PATH instead of stdout')
    common.add_argument('-v', '--verbose', action='count', default=0, help='log more, twice for debug output')
    common.add_argument('-q', '--quiet', action='store_true', help='hide progress bars')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog='hilbertmetric',
                                     description='Hilbert, hyperbolic, Apollonian and Möbius metrics on convex domains')
    commands = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')
    commands.add_parser('dist', parents=[common], help='distances between two points')
    commands.add_parser('ball', parents=[common], help='trace a Hilbert circle')
    commands.add_parser('sphere', parents=[common], help='Hilbert sphere of the unit ball as an ellipsoid')
    commands.add_parser('holder', parents=[common], help='Schwarz constant and Hölder bound')
    verify = commands.add_parser('verify', parents=[common], help='run the verification suites')
    verify.add_argument('--suite', dest='suites', action='append', default=[], metavar='NAME',
                        help='run only this suite, may be repeated')
    verify.add_argument('--list', dest='list_suites', action='store_true', help='list the suites and exit')
    return parser


def make_domain(config: RunConfig) -> ConvexDomain:
    """
    :raises UsageError: Bad ball dimension or preset name
    :raises PolygonFormatError: The polygon file cannot be parsed
    :raises InvalidPolygon: The polygon is not strictly convex
    """
    if config.polygon is not None:
        try:
            polygon = load_polygon(config.polygon)
        except OSError as exc:
            raise UsageError('cannot read polygon file: {0}'.format(exc), operation='make_domain', value=str(config.polygon))
        return PolygonDomain(polygon, config.polygon.stem)
    if config.preset is not None:
        return PolygonDomain(preset_polygon(config.preset), config.preset)
    if config.ball is not None:
        if config.ball < 1:
            raise UsageError('ball dimension must be at least 1', operation='make_domain', value=config.ball)
        return UnitBall(config.ball)
    return UnitBall(config.a.size if config.a is not None else 2)


def _require(config: RunConfig, name: str, flag: str):
    value = getattr(config, name)
    if value is None:
        raise UsageError('{0} needs {1}'.format(config.command, flag), operation=config.command)
    return value


def _emit(config: RunConfig, text: str):
    if config.output is not None:
        config.output.write_text(text, encoding='utf-8')
        log.info('Wrote %s', config.output)
    else:
        sys.stdout.write(text)


def _emit_report(config: RunConfig, report: MetricReport, fmt: str):
    _emit(config, report.to_json() + '\n' if fmt == 'json' else report.to_text())


def _exit_code(report: MetricReport) -> int:
    return EXIT_OK if report.ok else EXIT_VERIFICATION


def cmd_dist(config: RunConfig) -> int:
    """Distances between ``-a`` and ``-b`` and the margins of the inequalities between them."""
    fmt = config.output_format
    D = make_domain(config)
    a = _require(config, 'a', '-a')
    b = _require(config, 'b', '-b')
    report = MetricReport('dist:' + D.name, anchor='the Hilbert distance h_D(a,b) is defined',
                          statement='h <= alpha <= delta <= log(e^alpha + 2)', budget=config.budget)

    h = h_chord(D, a, b)
    report.add_metric('h', h)
    if isinstance(D, UnitBall):
        report.add_metric('rho', rho_ball(a, b))
        lower, upper = hilbert_hyperbolic_sandwich(D.point(a), D.point(b))
        report.add_margin('h <= rho', lower, 1e-12)
        report.add_margin('rho <= h / sqrt(1 - m^2)', upper, 1e-12)
    alpha = apollonian(D, a, b)
    certificate = mobius_supremum(D, a, b, config.budget)
    report.add_metric('alpha', alpha)
    report.add_metric('delta', certificate.value)
    report.add_note('delta evaluations', certificate.evaluations)
    if isinstance(D, PolygonDomain):
        report.add_note('delta method', 'numeric supremum, a lower estimate')
    report.add_margin('h <= alpha', alpha - h, 1e-12)
    # the numeric supremum approaches delta from below
    report.add_margin('alpha <= delta', certificate.value - alpha, 1e-4 if isinstance(D, PolygonDomain) else 1e-12)
    report.add_margin('delta <= log(e^alpha + 2)', math.log(math.exp(alpha) + 2.0) - certificate.value, 1e-12)
    _emit_report(config, report, fmt)
    return _exit_code(report)


def cmd_ball(config: RunConfig) -> int:
    """Hilbert circle of radius ``-t`` about ``-a`` (default the origin)."""
    fmt = config.output_format
    if config.ndirs < MIN_DIRECTIONS:
        raise UsageError('--ndirs must be at least {0}'.format(MIN_DIRECTIONS), operation='ball', value=config.ndirs)
    D = make_domain(config)
    center = D.point(config.a if config.a is not None else np.zeros(D.dim))
    t = _require(config, 't', '-t')
    polyline = hilbert_ball_boundary(D, center, t, config.ndirs)

    report = MetricReport('ball:' + D.name, anchor='is called the Hilbert disk', statement='{x : h(z, x) = t}')
    radii = polyline.radii(center)
    report.add_metric('directions', len(polyline))
    report.add_metric('min radius', float(np.min(radii)))
    report.add_metric('max radius', float(np.max(radii)))
    report.add_margin('convex', 1.0 if polyline.is_convex() else -1.0)
    if isinstance(D, PolygonDomain):
        fit = polygon_spoke_fit(D, center, t, polyline)
        log.info('Hilbert circle lies within %g of the polygon with corners on the vertex lines', fit)
        report.add_residual('vertex line polygon fit', fit, 1e-9)
    elif not np.any(center):
        report.add_residual('radius th(t/2)', float(np.max(np.abs(radii - math.tanh(t / 2.0)))), 1e-9)

    if fmt == 'csv':
        _emit(config, polyline.to_csv())
    elif fmt == 'svg':
        _emit(config, ball_figure(D, [polyline], center=center, title='Hilbert circle of radius {0:.12g}'.format(t)))
    else:
        _emit_report(config, report, fmt)
    return _exit_code(report)


def cmd_sphere(config: RunConfig) -> int:
    """Ellipsoid of the Hilbert sphere about ``-a`` of radius ``-R``, checked on sampled surface points."""
    fmt = config.output_format
    c = _require(config, 'a', '-a')
    R = _require(config, 'R', '-R')
    spec = hilbert_sphere_ellipsoid(c, R)
    count = config.sample_count()
    points = spec.sample(rng_for('sphere', config.seed), count)

    report = MetricReport('sphere', anchor='an ellipsoid of revolution, with the center',
                          statement='(1 - c.x)^2 = ch^2(R/2) (1 - |c|^2)(1 - |x|^2)',
                          seed=config.seed, samples=count)
    for i, value in enumerate(spec.center):
        report.add_metric('center[{0}]'.format(i), value)
    report.add_metric('a_min', spec.a_min)
    report.add_metric('a_max', spec.a_max)
    report.add_residual('h(x, c) = R', max(abs(h_ball(x, spec.c) - R) for x in points), 1e-9)
    report.add_residual('sphere equation', max(spec.nsc_residual(x) for x in points), 1e-10)
    _emit_report(config, report, fmt)
    return _exit_code(report)


def _parse_map(text: str, K: float) -> QCMapSpec:
    """``NAME[:PARAM]``; without a parameter mobius uses 0.5, power 2 and radial-stretch ``K``."""
    name, _, parameter = text.partition(':')
    if name not in MAP_NAMES:
        raise UsageError('unknown map {0!r}, expected one of {1}'.format(name, ', '.join(MAP_NAMES)),
                         operation='holder', value=name)
    try:
        if name == 'identity':
            value = None
        elif name == 'mobius':
            value = complex(parameter.replace('i', 'j')) if parameter else 0.5
            value = value.real if value.imag == 0 else value
        elif name == 'power':
            value = int(parameter) if parameter else 2
        else:
            value = float(parameter) if parameter else K
    except ValueError:
        raise UsageError('bad parameter {0!r} for map {1}'.format(parameter, name), operation='holder', value=text)
    return QCMapSpec(name, value)


def cmd_holder(config: RunConfig) -> int:
    """c(K) with its bounds, the Hölder bound at ``-a``, ``-b`` and the sampled check of ``--map``."""
    fmt = config.output_format
    K = _require(config, 'K', '-K')
    if not K >= 1.0:
        raise UsageError('K must be at least 1', operation='holder', value=K)
    bounds = c_bounds(K)
    report = MetricReport('holder', anchor='K-quasiregular mapping onto a convex bounded domain',
                          statement='h(f(a), f(b)) <= 2c(K) max(h, h^(1/K)) / sqrt(1 - m^2)', seed=config.seed)
    report.add_metric('K', K)
    report.add_metric('c(K)', bounds.c)
    report.add_metric('u(K-1)+1', bounds.linear_lower)
    report.add_metric('log ch(K arch e)', bounds.log_cosh_lower)
    report.add_metric('v(K-1)+K', bounds.upper)
    names = ('K <= u(K-1)+1', 'u(K-1)+1 <= log ch(K arch e)', 'log ch(K arch e) <= c(K)', 'c(K) <= v(K-1)+K')
    for name, margin in zip(names, bounds.margins()):
        report.add_margin(name, margin, 1e-12)

    if config.a is not None and config.b is not None:
        inp = HolderBoundInput.create(K, config.a, config.b)
        report.add_metric('hilbert bound', holder_rhs(inp))
        report.add_metric('schwarz bound', schwarz_rho_bound(K, inp.a, inp.b))

    if config.map is not None:
        spec = _parse_map(config.map, K)
        count = config.sample_count()
        sub = holder_verify(spec, K, count, seed=config.seed, quiet=config.quiet)
        report.samples = count
        report.merge(sub, prefix=spec.label + ' ')
        report.add_metric(spec.label + ' min margin', sub.margins['hilbert bound'])
    _emit_report(config, report, fmt)
    return _exit_code(report)


def _suite_line(s: Suite) -> str:
    names = s.name + (' (' + ', '.join(s.aliases) + ')' if s.aliases else '')
    return '{0}: "{1}" {2}\n'.format(names, s.anchor, s.statement)


def cmd_verify(config: RunConfig) -> int:
    """Run the suites, all of them unless ``--suite`` names some."""
    fmt = config.output_format
    if config.list_suites:
        _emit(config, ''.join(_suite_line(s) for s in SUITES.values()))
        return EXIT_OK
    reports = run_suites(config.suites or None, seed=config.seed, samples=config.samples,
                         budget=config.budget, quiet=config.quiet)
    ok = all(r.ok for r in reports)
    if fmt == 'json':
        _emit(config, reports_to_json(reports, seed=config.seed, budget=config.budget, ok=ok) + '\n')
    else:
        _emit(config, '\n'.join(r.to_text() for r in reports) + '\nresult: {0}\n'.format('pass' if ok else 'FAIL'))
    if not config.quiet:
        console.print(reports_to_table(reports))
    return EXIT_OK if ok else EXIT_VERIFICATION


COMMANDS = {
    'dist': cmd_dist,
    'ball': cmd_ball,
    'sphere': cmd_sphere,
    'holder': cmd_holder,
    'verify': cmd_verify,
}


def _configure_logging(verbose: int):
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format='%(message)s', datefmt='[%X]',
                        handlers=[RichHandler(console=console, show_path=False)], force=True)


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``hilbertmetric`` command, returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    config = RunConfig.from_args(args)
    _configure_logging(config.verbose)
    try:
        return COMMANDS[config.command](config)
    except (UsageError, PolygonFormatError) as exc:
        where = ' (line {0})'.format(exc.line) if getattr(exc, 'line', None) else ''
        console.print('[red]error:[/red] ' + escape('{0}{1}'.format(exc, where)), highlight=False)
        return EXIT_USAGE
    except HilbertMetricError as exc:
        detail = ' (input: {0})'.format(exc.value) if exc.value is not None else ''
        where = ' (line {0})'.format(exc.line) if getattr(exc, 'line', None) else ''
        console.print('[red]error:[/red] ' + escape('{0}{1}{2}'.format(exc, detail, where)), highlight=False)
        return EXIT_DOMAIN
