#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
不变量计算测试

覆盖一般性上下文、极重数、消失 Euler 示性数、Milnor 数及其交叉校验。
"""

import os
import sys
import unittest

# 添加项目根目录到Python路径
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.algebra.matrix import PolyMatrix
from src.algebra.ring import PolynomialRing
from src.errors import CertificateFailureError, CurveExponentsError, GenericityUnstableError, NonIsolatedSingularityError
from src.invariants.genericity import GenericityContext, RandomSource
from src.invariants.milnor import (
    generic_section_milnor,
    milnor_hypersurface,
    milnor_icis_le_greuel,
    milnor_monomial_curve,
    mu_star_sequence,
)
from src.invariants.polar import multiplicity_m0, polar_multiplicity, top_polar_multiplicity
from src.invariants.report import (
    BouquetStatus,
    ConnectivityClass,
    alternating_nu,
    bouquet_status,
    classify_connectivity,
    vanishing_euler,
)
from src.model.determinantal import build_germ

SEED = 20240601


def germ_of(variables, rows, s):
    ring = PolynomialRing(variables)
    return build_germ(PolyMatrix.from_rows([[ring.parse(e) for e in row] for row in rows], ring), s)


class TestGenericityContext(unittest.TestCase):
    """一般性上下文"""

    def test_random_source_is_reproducible(self):
        first = RandomSource(7, "m_1", 0, 50)
        second = RandomSource(7, "m_1", 0, 50)
        self.assertEqual(first.vector(6), second.vector(6))
        other = RandomSource(7, "m_1", 1, 50)
        self.assertNotEqual(RandomSource(7, "m_1", 0, 50).vector(6), other.vector(6))

    def test_rationals_respect_bound(self):
        source = RandomSource(1, "q", 0, 3)
        for value in source.vector(50):
            self.assertNotEqual(value, 0)
            self.assertLessEqual(abs(value.numerator), 3)
            self.assertLessEqual(value.denominator, 3)

    def test_stable_value_records_attempts(self):
        ctx = GenericityContext(SEED, agreeing_draws=2)
        self.assertEqual(ctx.stable_value("常数", lambda source: 5), 5)
        record = ctx.records[0]
        self.assertEqual(record.quantity, "常数")
        self.assertEqual(record.attempts, [0, 1])
        self.assertEqual(record.value, 5)

    def test_stable_value_retries(self):
        ctx = GenericityContext(SEED, agreeing_draws=2, retry_budget=3)
        # 第 0 次抽样“不一般”，其后一致
        self.assertEqual(ctx.stable_value("q", lambda source: 9 if source.attempt == 0 else 4), 4)
        self.assertEqual(ctx.records[0].attempts, [1, 2])

    def test_stable_value_exhausts_budget(self):
        ctx = GenericityContext(SEED, agreeing_draws=2, retry_budget=1)
        with self.assertRaises(GenericityUnstableError) as error:
            ctx.stable_value("q", lambda source: source.attempt)
        self.assertEqual(error.exception.values, [0, 1, 2])
        self.assertEqual(error.exception.exit_code, 3)

    def test_fork_has_empty_records(self):
        ctx = GenericityContext(SEED)
        ctx.stable_value("q", lambda source: 1)
        self.assertEqual(ctx.fork().records, [])
        self.assertEqual(ctx.fork(seed=3).seed, 3)

    def test_invalid_settings(self):
        with self.assertRaises(ValueError):
            GenericityContext(-1)
        with self.assertRaises(ValueError):
            GenericityContext(SEED, coefficient_bound=0)
        with self.assertRaises(ValueError):
            GenericityContext(SEED, agreeing_draws=0)


class TestMilnorNumbers(unittest.TestCase):
    """Milnor 数"""

    def test_hypersurfaces(self):
        cases = {
            "x^2 + y^2 + z^2": (['x', 'y', 'z'], 1),
            "x^3 + y^2 + z^2": (['x', 'y', 'z'], 2),
            "x^2*y - y^3 + z^2": (['x', 'y', 'z'], 4),
            "x^4 + y^2": (['x', 'y'], 3),
            "x^2 + y^2": (['x', 'y'], 1),
            "x^3 + y^2": (['x', 'y'], 2),
            "x^3 + y^4": (['x', 'y'], 6),
        }
        for text, (variables, expected) in cases.items():
            with self.subTest(g=text):
                ring = PolynomialRing(variables)
                self.assertEqual(milnor_hypersurface(ring.parse(text), ring), expected)

    def test_a_k_curves(self):
        ring = PolynomialRing(['x', 'y'])
        for k in range(1, 6):
            with self.subTest(k=k):
                self.assertEqual(milnor_hypersurface(ring.parse(f"y^2 + x^{k + 1}"), ring), k)

    def test_non_isolated(self):
        ring = PolynomialRing(['x', 'y', 'z'])
        with self.assertRaises(NonIsolatedSingularityError):
            milnor_hypersurface(ring.parse("x^2 + y^2"), ring)

    def test_le_greuel(self):
        ring = PolynomialRing(['x', 'y', 'z'])
        self.assertEqual(milnor_icis_le_greuel([ring.parse("x^2 + y^2 + z^2"), ring.parse("x")], ring), 1)
        self.assertEqual(milnor_icis_le_greuel([ring.parse("x^2 + y^3 + z^2"), ring.parse("z")], ring), 2)

    def test_monomial_curves(self):
        self.assertEqual(milnor_monomial_curve([3, 4, 5]), 4)
        self.assertEqual(milnor_monomial_curve([2, 3]), 2)
        for k in range(1, 5):
            self.assertEqual(milnor_monomial_curve([1, k]), 0)
        with self.assertRaises(CurveExponentsError):
            milnor_monomial_curve([2, 4])
        with self.assertRaises(ValueError):
            milnor_monomial_curve([])

    def test_mu_star(self):
        ring = PolynomialRing(['x', 'y', 'z'])
        ctx = GenericityContext(SEED)
        self.assertEqual(mu_star_sequence(ring.parse("x^2 + y^2 + z^2"), ctx, ring), [1, 1, 1])
        self.assertEqual(mu_star_sequence(ring.parse("x^3 + y^2 + z^2"), ctx.fork(), ring), [2, 1, 1])

    def test_generic_section(self):
        ring = PolynomialRing(['x', 'y', 'z'])
        self.assertEqual(generic_section_milnor([ring.parse("x^2 + y^2 + z^2")], GenericityContext(SEED), ring), 1)


class TestVanishingEuler(unittest.TestCase):
    """极重数与消失 Euler 示性数"""

    @classmethod
    def setUpClass(cls):
        cls.ctx = GenericityContext(SEED)
        cls.surface = germ_of(['x', 'y', 'z', 'w'], [["x", "y", "z"], ["y", "z", "w"]], 2)
        cls.surface_report = vanishing_euler(cls.surface, cls.ctx)
        cls.a1 = germ_of(['x', 'y', 'z'], [["x^2 + y^2 + z^2"]], 1)
        cls.a1_report = vanishing_euler(cls.a1, cls.ctx)

    def test_surface_in_c4(self):
        report = self.surface_report
        self.assertEqual(report.m, [3, 4, 3])
        self.assertEqual(report.nu, 1)
        self.assertEqual(report.chi_smoothing, 2)
        self.assertEqual(report.connectivity_class, ConnectivityClass.GENERAL_IDS)
        self.assertEqual(report.bouquet_status, BouquetStatus.UNKNOWN)
        self.assertEqual(report.cw_cell_profile, (3, 4, 3))
        self.assertEqual(report.coefficient_field, "QQ")

    def test_report_serializes_each_value_once(self):
        dumped = self.surface_report.model_dump()
        self.assertNotIn('ids_certificate', dumped)
        self.assertNotIn('seed', dumped)
        self.assertEqual({record['quantity'] for record in dumped['draws']}, {"m_1", "m_2"})

    def test_parallel_matches_sequential(self):
        parallel = vanishing_euler(self.a1, self.ctx, max_workers=3)
        self.assertEqual(parallel.invariants(), self.a1_report.invariants())
        self.assertEqual(parallel.draws, self.a1_report.draws)

    def test_stable_across_seeds(self):
        germs = {
            "A1": self.a1,
            "t^3,t^4,t^5": germ_of(['x', 'y', 'z'], [["x", "y", "z"], ["y", "z", "x^2"]], 2),
        }
        for name, germ in germs.items():
            with self.subTest(germ=name):
                first = vanishing_euler(germ, GenericityContext(SEED))
                second = vanishing_euler(germ, GenericityContext(SEED + 1))
                self.assertEqual(first.invariants(), second.invariants())
                self.assertEqual((first.seed, second.seed), (SEED, SEED + 1))

    def test_monomial_curve(self):
        report = vanishing_euler(germ_of(['x', 'y', 'z'], [["x", "y", "z"], ["y", "z", "x^2"]], 2), self.ctx)
        self.assertEqual(report.m, [3, 6])
        self.assertEqual(report.nu, 4)
        self.assertEqual(report.nu, milnor_monomial_curve([3, 4, 5]))
        self.assertEqual(report.connectivity_class, ConnectivityClass.CURVE)

    def test_smooth_axis(self):
        report = vanishing_euler(germ_of(['x', 'y', 'z'], [["y", "z"]], 1), self.ctx)
        self.assertEqual(report.nu, 0)
        self.assertEqual(report.m[0], 1)

    def test_smooth_plane(self):
        report = vanishing_euler(germ_of(['x', 'y', 'z'], [["x"]], 1), self.ctx)
        self.assertEqual(report.m, [1, 0, 0])
        self.assertEqual(report.nu, 0)

    def test_a1_surface_matches_mu_star(self):
        report = self.a1_report
        self.assertEqual(report.m, [2, 2, 2])
        self.assertEqual(report.nu, 1)
        self.assertEqual(report.connectivity_class, ConnectivityClass.HYPERSURFACE)
        self.assertEqual(report.bouquet_status, BouquetStatus.KNOWN)

    def test_hypersurface_cross_check(self):
        # m_i = mu^(i+1) + mu^(i)，mu^(0) = 1
        ring = PolynomialRing(['x', 'y', 'z'])
        g = ring.parse("x^3 + y^2 + z^2")
        report = vanishing_euler(build_germ(PolyMatrix([[g]], ring), 1), self.ctx)
        mu = [1] + list(reversed(mu_star_sequence(g, self.ctx.fork(), ring)))
        self.assertEqual(report.m, [mu[i + 1] + mu[i] for i in range(3)])
        self.assertEqual(report.nu, milnor_hypersurface(g, ring))

    def test_zero_dimensional(self):
        report = vanishing_euler(germ_of(['x', 'y'], [["x^2", "y"]], 1), self.ctx)
        self.assertEqual(report.d, 0)
        self.assertEqual(report.m, [2])
        self.assertEqual(report.nu, 1)

    def test_multiplicity_m0(self):
        self.assertEqual(multiplicity_m0(self.surface), 3)

    def test_polar_index_range(self):
        with self.assertRaises(ValueError):
            polar_multiplicity(self.surface, 2, self.ctx)

    def test_not_ids(self):
        germ = germ_of(['x', 'y', 'z'], [["x^2 + y^2"]], 1)
        with self.assertRaises(CertificateFailureError) as ctx:
            vanishing_euler(germ, self.ctx)
        self.assertEqual(ctx.exception.exit_code, 2)
        self.assertFalse(ctx.exception.certificate.is_ids)


class TestIcisTopPolar(unittest.TestCase):
    """ICIS 的顶极重数等于 mu(X) + mu(X ∩ H)"""

    CASES = [
        (['x', 'y'], ["x^2 + y^2"]),
        (['x', 'y'], ["x^2 + y^3"]),
        (['x', 'y'], ["x^3 + y^4"]),
        (['x', 'y'], ["x^2*y + y^4"]),
        (['x', 'y', 'z'], ["x^2 + y^2 + z^2"]),
        (['x', 'y', 'z'], ["x^3 + y^2 + z^2"]),
        (['x', 'y', 'z'], ["x^4 + y^2 + z^2"]),
        (['x', 'y', 'z'], ["x^2*y - y^3 + z^2"]),
        (['x', 'y', 'z'], ["x^2 + y^2 + z^2", "x*y"]),
        (['x', 'y', 'z'], ["x^2 + y^3 + z^2", "z"]),
    ]

    def test_top_polar_is_sum_of_milnor_numbers(self):
        for variables, equations in self.CASES:
            with self.subTest(equations=equations):
                germ = germ_of(variables, [equations], 1)
                ring = germ.ring
                generators = [ring.parse(text) for text in equations]
                ctx = GenericityContext(SEED)
                expected = milnor_icis_le_greuel(generators, ring) + generic_section_milnor(generators, ctx, ring)
                self.assertEqual(top_polar_multiplicity(germ, ctx.fork()), expected)


class TestClassification(unittest.TestCase):
    """连通性类别与花束状态"""

    def test_alternating_nu(self):
        self.assertEqual(alternating_nu([3, 4, 3], 2), 1)
        self.assertEqual(alternating_nu([3, 6], 1), 4)
        self.assertEqual(alternating_nu([5], 0), 4)

    def test_classify_connectivity(self):
        self.assertEqual(classify_connectivity(3, 1, 2), ConnectivityClass.CURVE)
        self.assertEqual(classify_connectivity(3, 2, 1), ConnectivityClass.HYPERSURFACE)
        self.assertEqual(classify_connectivity(5, 3, 1), ConnectivityClass.ICIS)
        self.assertEqual(classify_connectivity(4, 2, 2), ConnectivityClass.GENERAL_IDS)

    def test_bouquet_status(self):
        self.assertEqual(bouquet_status(ConnectivityClass.ICIS, 3), BouquetStatus.KNOWN)
        self.assertEqual(bouquet_status(ConnectivityClass.GENERAL_IDS, 2), BouquetStatus.UNKNOWN)
        self.assertEqual(bouquet_status(ConnectivityClass.GENERAL_IDS, 3), BouquetStatus.UNVERIFIED)


if __name__ == '__main__':
    unittest.main()
