import unittest

from cliffcz import CliffordAtlas
from cliffcz.flow import AcceptanceSuite
from cliffcz.flow.acceptance import ring_failures


class TestAcceptanceSuite(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.report = AcceptanceSuite().run(CliffordAtlas.shared())

    def test_overall_pass(self):
        self.assertEqual([], [r.to_text() for r in self.report.failures()])
        self.assertTrue(self.report.overall)

    def test_published_claims_present(self):
        orbit_count = self.report.get('orbit-count')
        self.assertEqual(20, orbit_count.expected)
        self.assertEqual(20, orbit_count.observed)
        for name in ['c1-order', 'lc2-order', 'c2-order', 'graph-weights', 'graph-degrees', 'layer-profile',
                     'figure-isomorphism', 'cnot12-equivalence', 'cnot21-equivalence', 'synthesis-exact-failures']:
            self.assertTrue(self.report.get(name).passed, name)

    def test_report_format(self):
        lines = self.report.to_text().splitlines()
        self.assertEqual('CHECK c1-order expected=192 observed=192 PASS', lines[0])
        self.assertIn('CHECK orbit-count expected=20 observed=20 PASS', lines)
        self.assertEqual('OVERALL PASS', lines[-1])

    def test_deterministic(self):
        again = AcceptanceSuite().run(CliffordAtlas.shared())
        self.assertEqual(self.report.to_text(), again.to_text())

    def test_ring_samples(self):
        self.assertEqual(0, ring_failures(size=100))

    def test_rebuild_matches(self):
        rebuilt = self.report.get('rebuild-differences')
        self.assertEqual([], rebuilt.observed)
        self.assertIn('CHECK rebuild-differences expected=[] observed=[] PASS', self.report.to_text().splitlines())
