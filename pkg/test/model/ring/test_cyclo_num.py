import unittest

import numpy as np

import cliffcz.model.ring as cmr
from cliffcz.model.ring import CycloNum
from cliffcz.util.exception import MatrixFormatError, RingOverflowError


class TestCycloNum(unittest.TestCase):
    def test_half_sum_reduces_to_sqrt2(self):
        self.assertEqual(cmr.SQRT2, cmr.INV_SQRT2 + cmr.INV_SQRT2)
        self.assertEqual((0, 1, 0, -1, 0), (cmr.INV_SQRT2 + cmr.INV_SQRT2).coef)

    def test_reduction_is_unique(self):
        self.assertEqual(cmr.ONE, CycloNum(2, k=2))
        self.assertEqual((1, 0, 0, 0, 2), (cmr.INV_SQRT2 * cmr.INV_SQRT2).coef)
        self.assertEqual(0, CycloNum(0, 0, 0, 0, k=5).k)

    def test_omega_powers(self):
        self.assertEqual(cmr.ONE, cmr.OMEGA_NUM ** 8)
        self.assertEqual(-cmr.ONE, cmr.OMEGA_NUM ** 4)
        self.assertEqual(cmr.I_NUM, cmr.OMEGA_NUM ** 2)
        self.assertEqual(CycloNum(-1), cmr.I_NUM * cmr.I_NUM)

    def test_sqrt2_squared(self):
        self.assertEqual(CycloNum(2), cmr.SQRT2 * cmr.SQRT2)
        self.assertEqual(cmr.ONE, cmr.SQRT2 * cmr.INV_SQRT2)

    def test_conj(self):
        self.assertEqual(CycloNum(0, 0, 0, -1), cmr.OMEGA_NUM.conj())
        self.assertEqual(cmr.ONE, cmr.OMEGA_NUM * cmr.conj(cmr.OMEGA_NUM))
        self.assertEqual(cmr.INV_SQRT2, cmr.INV_SQRT2.conj())

    def test_integers_mix_in(self):
        self.assertEqual(cmr.ONE, 1)
        self.assertEqual(CycloNum(3), 1 + CycloNum(2))
        self.assertEqual(CycloNum(-1), 1 - CycloNum(2))
        self.assertEqual(CycloNum(4, k=1), 4 * cmr.INV_SQRT2)
        self.assertEqual(CycloNum(2), cmr.ONE + np.int64(1))

    def test_to_complex(self):
        self.assertAlmostEqual(2 ** -0.5, cmr.INV_SQRT2.to_complex().real)
        self.assertAlmostEqual(1.0, complex(cmr.I_NUM).imag)
        self.assertAlmostEqual(2 ** 0.5, cmr.to_complex(cmr.SQRT2).real)

    def test_parse(self):
        self.assertEqual(cmr.INV_SQRT2, CycloNum.parse('1,0,0,0/1'))
        self.assertEqual(CycloNum(-1, 2, -3, 4, k=3), CycloNum.parse(str(CycloNum(-1, 2, -3, 4, k=3))))
        self.assertEqual(cmr.ONE, CycloNum.parse('2,0,0,0/2'))
        for text in ['1,0,0/1', 'i', '1,0,0,0/-1', '0.5,0,0,0/0']:
            with self.assertRaises(MatrixFormatError):
                CycloNum.parse(text)

    def test_invalid_exponent(self):
        with self.assertRaises(ValueError):
            CycloNum(1, k=-1)
        with self.assertRaises(ValueError):
            cmr.OMEGA_NUM ** -1

    def test_overflow(self):
        with self.assertRaises(RingOverflowError):
            CycloNum(2 ** 31)
        with self.assertRaises(RingOverflowError):
            CycloNum(2 ** 20) * CycloNum(2 ** 20)

    def test_order_and_hash(self):
        values = [CycloNum(1), CycloNum(0, 1), CycloNum(-1), CycloNum(1, k=1)]
        self.assertEqual([CycloNum(-1), CycloNum(0, 1), CycloNum(1), CycloNum(1, k=1)], sorted(values))
        self.assertEqual(1, len({CycloNum(2, k=2), cmr.ONE}))

    def test_ring_axioms_on_random_values(self):
        rng = np.random.RandomState(7)
        for _ in range(200):
            x, y, z = [CycloNum(*rng.randint(-20, 21, size=4), k=rng.randint(0, 4)) for _ in range(3)]
            self.assertEqual(x * (y + z), x * y + x * z)
            self.assertEqual((x * y) * z, x * (y * z))
            self.assertEqual(x + y, y + x)
            self.assertEqual((x * y).conj(), x.conj() * y.conj())
            self.assertEqual(x, CycloNum.reduce(*x.coef))
            self.assertAlmostEqual(abs(x.to_complex() * y.to_complex() - (x * y).to_complex()), 0, places=6)

    def test_equality_agrees_with_complex_value(self):
        rng = np.random.RandomState(11)
        for _ in range(2000):
            x = CycloNum(*rng.randint(-2, 3, size=4), k=rng.randint(0, 4))
            y = CycloNum(*rng.randint(-2, 3, size=4), k=rng.randint(0, 4))
            self.assertEqual(x == y, abs(x.to_complex() - y.to_complex()) < 1e-9, (x, y))

            rewritten = CycloNum(2 * x.a, 2 * x.b, 2 * x.c, 2 * x.d, k=x.k + 2)
            self.assertEqual(x, rewritten)
            self.assertLess(abs(x.to_complex() - rewritten.to_complex()), 1e-9)
