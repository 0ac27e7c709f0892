# -*- coding: utf-8 -*-

import json
import math
import tempfile
import unittest
from pathlib import Path

from hilbertmetric.cli import main, EXIT_OK, EXIT_VERIFICATION, EXIT_USAGE, EXIT_DOMAIN
from hilbertmetric.tests import TRIANGLE_FILE


class CommandLineTestCase(unittest.TestCase):

    def setUp(self):
        self._folder = tempfile.TemporaryDirectory()
        self.folder = Path(self._folder.name)
        self.output = self.folder / 'out'

    def tearDown(self):
        self._folder.cleanup()

    def run_main(self, *args):
        return main(list(args) + ['-o', str(self.output)])

    def read_json(self):
        return json.loads(self.output.read_text(encoding='utf-8'))


class TestDist(CommandLineTestCase):

    def test_disk_json(self):
        code = self.run_main('dist', '--ball', '2', '-a', '0,0', '-b', '0.5,0', '--format', 'json', '--budget', '256')
        self.assertEqual(code, EXIT_OK)
        document = self.read_json()
        self.assertAlmostEqual(document['metrics']['h'], math.log(3.0), places=10)
        self.assertAlmostEqual(document['metrics']['rho'], math.log(3.0), places=10)
        self.assertAlmostEqual(document['metrics']['delta'], math.log(3.0), places=10)
        self.assertTrue(all(document['pass'].values()))

    def test_polygon_text(self):
        code = self.run_main('dist', '--preset', 'square', '-a', '0,0', '-b', '0.5,0')
        self.assertEqual(code, EXIT_OK)
        text = self.output.read_text(encoding='utf-8')
        self.assertIn('h: 1.09861228867\n', text)
        self.assertIn('margin h <= alpha: ', text)

    def test_point_outside(self):
        self.assertEqual(self.run_main('dist', '-a', '0,0', '-b', '1.5,0'), EXIT_DOMAIN)

    def test_missing_point(self):
        self.assertEqual(self.run_main('dist', '-a', '0,0'), EXIT_USAGE)

    def test_bad_point(self):
        self.assertEqual(self.run_main('dist', '-a', 'x,y', '-b', '0,0'), EXIT_USAGE)

    def test_format_not_available(self):
        self.assertEqual(self.run_main('dist', '-a', '0,0', '-b', '0.5,0', '--format', 'csv'), EXIT_USAGE)

    def test_polygon_file(self):
        path = self.folder / 'triangle.txt'
        path.write_text(TRIANGLE_FILE, encoding='utf-8')
        code = self.run_main('dist', '--polygon', str(path), '-a', '0,0', '-b', '0.2,0.1', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(self.read_json()['name'], 'dist:triangle')

    def test_polygon_file_errors(self):
        path = self.folder / 'bad.txt'
        path.write_text('0 0\n1 zero\n0 1\n', encoding='utf-8')
        self.assertEqual(self.run_main('dist', '--polygon', str(path), '-a', '0.1,0.1', '-b', '0.2,0.1'), EXIT_USAGE)
        path.write_text('0 0\n2 0\n1 0.2\n2 2\n0 2\n', encoding='utf-8')
        self.assertEqual(self.run_main('dist', '--polygon', str(path), '-a', '0.5,1', '-b', '1,1'), EXIT_DOMAIN)
        missing = self.folder / 'missing.txt'
        self.assertEqual(self.run_main('dist', '--polygon', str(missing), '-a', '0,0', '-b', '0.1,0'), EXIT_USAGE)

    def test_exclusive_domains(self):
        self.assertEqual(self.run_main('dist', '--ball', '2', '--preset', 'square', '-a', '0,0', '-b', '0.1,0'),
                         EXIT_USAGE)


class TestBall(CommandLineTestCase):

    def test_csv(self):
        self.assertEqual(self.run_main('ball', '--ball', '2', '-t', '1', '--ndirs', '16'), EXIT_OK)
        lines = self.output.read_text(encoding='utf-8').splitlines()
        self.assertEqual(lines[0], 'theta,x,y')
        self.assertEqual(len(lines), 17)
        x = float(lines[1].split(',')[1])
        self.assertAlmostEqual(x, math.tanh(0.5), places=10)

    def test_triangle_report(self):
        self.assertEqual(self.run_main('ball', '--preset', 'triangle', '-t', '1', '--format', 'json'), EXIT_OK)
        document = self.read_json()
        self.assertEqual(document['metrics']['directions'], 360)
        self.assertIn('vertex line polygon fit', document['margins'])

    def test_svg(self):
        self.assertEqual(self.run_main('ball', '--preset', 'triangle', '-t', '1', '--format', 'svg'), EXIT_OK)
        self.assertIn('<svg', self.output.read_text(encoding='utf-8'))

    def test_diamond_centered(self):
        path = self.folder / 'diamond.txt'
        path.write_text('1 0\n0 1\n-1 0\n0 -1\n', encoding='utf-8')
        code = self.run_main('ball', '--polygon', str(path), '-a=0,0', '-t', '0.5', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(self.read_json()['pass']['vertex line polygon fit'])

    def test_too_few_directions(self):
        self.assertEqual(self.run_main('ball', '-t', '1', '--ndirs', '4'), EXIT_USAGE)

    def test_bad_radius(self):
        self.assertEqual(self.run_main('ball', '-t', '0'), EXIT_DOMAIN)


class TestSphere(CommandLineTestCase):

    def test_ellipsoid(self):
        code = self.run_main('sphere', '-a', '0.5,0', '-R', repr(math.log(3.0)), '--samples', '50', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        metrics = self.read_json()['metrics']
        self.assertAlmostEqual(metrics['center[0]'], 0.4, places=10)
        self.assertAlmostEqual(metrics['a_min'], 0.4, places=10)
        self.assertAlmostEqual(metrics['a_max'], 1.0 / math.sqrt(5.0), places=10)


class TestHolder(CommandLineTestCase):

    def test_conformal(self):
        code = self.run_main('holder', '-K', '1', '-a', '0,0', '-b', '0.5,0', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        metrics = self.read_json()['metrics']
        self.assertAlmostEqual(metrics['c(K)'], 1.0, places=10)
        self.assertAlmostEqual(metrics['hilbert bound'], 2.0 * math.log(3.0), places=10)

    def test_map(self):
        code = self.run_main('holder', '-K', '2', '--map', 'radial-stretch', '--pairs', '200', '-q', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        document = self.read_json()
        self.assertEqual(document['samples'], 200)
        self.assertIn('radial-stretch(2) hilbert bound', document['margins'])

    def test_distortion_below_one(self):
        self.assertEqual(self.run_main('holder', '-K', '0.5'), EXIT_USAGE)

    def test_unknown_map(self):
        self.assertEqual(self.run_main('holder', '-K', '2', '--map', 'shear'), EXIT_USAGE)


class TestVerify(CommandLineTestCase):

    def test_list(self):
        self.assertEqual(self.run_main('verify', '--list'), EXIT_OK)
        listing = self.output.read_text(encoding='utf-8')
        self.assertIn('functional-identity (rveq): "the following functional identity holds" ', listing)
        self.assertIn('ellipsoid (Basphere): ', listing)

    def test_alias(self):
        code = self.run_main('verify', '--suite', 'rveq', '--samples', '200', '-q', '--format', 'json')
        self.assertEqual(code, EXIT_OK)
        report, = self.read_json()['reports']
        self.assertEqual(report['name'], 'functional-identity')
        self.assertEqual(report['anchor'], 'the following functional identity holds')
        self.assertTrue(report['pass']['identity'])

    def test_reproducible(self):
        args = ('verify', '--suite', 'functional-identity', '--suite', 'interval-gap', '--samples', '200',
                '--seed', '7', '-q', '--format', 'json')
        self.assertEqual(self.run_main(*args), EXIT_OK)
        first = self.output.read_bytes()
        self.assertEqual(self.run_main(*args), EXIT_OK)
        self.assertEqual(self.output.read_bytes(), first)
        document = json.loads(first)
        self.assertTrue(document['ok'])
        self.assertEqual([r['name'] for r in document['reports']], ['functional-identity', 'interval-gap'])

    def test_unknown_suite(self):
        self.assertEqual(self.run_main('verify', '--suite', 'nope', '-q'), EXIT_USAGE)

    def test_exit_codes_distinct(self):
        self.assertEqual(len({EXIT_OK, EXIT_VERIFICATION, EXIT_USAGE, EXIT_DOMAIN}), 4)
