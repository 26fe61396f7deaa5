#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
基计算引擎测试

覆盖 Gröbner 基、Mora 局部标准基、维数与重数、消去、交、商理想、
饱和化以及任务截止时间。
"""

import os
import sys
import time
import unittest
from fractions import Fraction
from itertools import product

import numpy as np

# 添加项目根目录到Python路径
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.algebra.ring import PolynomialRing
from src.engine.deadline import check_deadline, run_as_task, task_deadline, time_limit
from src.engine.hilbert import INFINITE, count_standard_monomials
from src.engine.ideal import Ideal
from src.engine.operations import (
    eliminate,
    groebner_basis,
    hilbert_samuel_multiplicity,
    hilbert_series_local,
    ideal_quotient,
    intersect,
    krull_dimension,
    local_quotient_dimension,
    normal_form,
    saturate_by_element,
    saturation,
    vanishes_only_at_origin,
)
from src.engine.orders import GLOBAL_DEGREVLEX, LOCAL_NEGDEGREVLEX
from src.errors import ComputationTimeoutError

SEED = 20240601


def ideal(ring, *texts):
    return Ideal([ring.parse(text) for text in texts], ring)


def random_polynomial(ring, rng, *, min_degree, max_degree):
    """次数介于 min_degree 与 max_degree 之间的稠密随机多项式，系数非零"""
    p = ring.zero
    for exponents in product(range(max_degree + 1), repeat=ring.ngens):
        if min_degree <= sum(exponents) <= max_degree:
            sign = 1 if rng.integers(0, 2) else -1
            coefficient = Fraction(sign * int(rng.integers(1, 10)), int(rng.integers(1, 5)))
            p += ring.monomial(exponents) * ring.constant(coefficient)
    return p


class TestGlobalBases(unittest.TestCase):
    """全局序下的基与正规形式"""

    @classmethod
    def setUpClass(cls):
        cls.ring = PolynomialRing(['x', 'y', 'z'])

    def test_unit_and_zero(self):
        self.assertTrue(ideal(self.ring, "x", "x + 1").is_unit())
        self.assertTrue(Ideal([], self.ring).is_zero())
        self.assertFalse(ideal(self.ring, "x").is_unit())

    def test_membership(self):
        twisted_cubic = ideal(self.ring, "x*z - y^2", "x^3 - y*z")
        self.assertIn(self.ring.parse("x*z^2 - y^2*z"), twisted_cubic)
        self.assertNotIn(self.ring.parse("x"), twisted_cubic)

    def test_normal_form_is_canonical(self):
        i = ideal(self.ring, "x - y")
        self.assertEqual(normal_form(self.ring.parse("x^2"), i), normal_form(self.ring.parse("y^2"), i))

    def test_normal_form_rejects_local_order(self):
        with self.assertRaises(ValueError):
            ideal(self.ring, "x").normal_form(self.ring.parse("x"), LOCAL_NEGDEGREVLEX)

    def test_groebner_basis_reduced(self):
        basis = groebner_basis(ideal(self.ring, "x^2", "x^2 + y"))
        self.assertEqual(set(basis), {self.ring.parse("x^2"), self.ring.parse("y")})

    def test_same_ideal(self):
        self.assertTrue(ideal(self.ring, "x + y", "x - y").same_ideal(ideal(self.ring, "x", "y")))

    def test_reduced_basis_independent_of_generator_order(self):
        texts = ["x*z - y^2", "x^3 - y*z", "x^2*y - z^2", "x + y^3 - z"]
        expected = groebner_basis(ideal(self.ring, *texts))
        rng = np.random.default_rng(SEED)
        for _ in range(5):
            shuffled = [texts[k] for k in rng.permutation(len(texts))]
            with self.subTest(order=shuffled):
                self.assertEqual(groebner_basis(ideal(self.ring, *shuffled)), expected)

    def test_basis_members_reduce_to_zero(self):
        cubic = ideal(self.ring, "x*z - y^2", "x^3 - y*z")
        for g in cubic.generators:
            self.assertEqual(normal_form(g, cubic), self.ring.zero)
        for g in groebner_basis(cubic):
            self.assertEqual(g.LC, 1)


class TestDimensionAndMultiplicity(unittest.TestCase):
    """维数、局部长度与 Hilbert-Samuel 重数"""

    @classmethod
    def setUpClass(cls):
        cls.ring = PolynomialRing(['x', 'y', 'z'])
        cls.plane = PolynomialRing(['x', 'y'])
        cls.line = PolynomialRing(['x'])

    def test_krull_dimension(self):
        self.assertEqual(krull_dimension(ideal(self.ring, "x")), 2)
        self.assertEqual(krull_dimension(ideal(self.ring, "x", "y")), 1)
        self.assertEqual(krull_dimension(ideal(self.ring, "1")), -1)
        self.assertEqual(krull_dimension(Ideal([], self.ring)), 3)

    def test_local_quotient_dimension(self):
        self.assertEqual(local_quotient_dimension(ideal(self.plane, "x^2", "y^3")), 6)
        self.assertEqual(local_quotient_dimension(ideal(self.plane, "x")), INFINITE)

    def test_local_length_ignores_other_points(self):
        # x - x^2 = x(1 - x)，1 - x 在原点可逆
        self.assertEqual(local_quotient_dimension(ideal(self.line, "x - x^2")), 1)
        self.assertEqual(local_quotient_dimension(ideal(self.line, "x^2 + x^3")), 2)

    def test_local_leading_monomials(self):
        i = ideal(self.plane, "x + y^2")
        self.assertEqual(i.leading_monomials(LOCAL_NEGDEGREVLEX), ((1, 0),))
        self.assertEqual(i.leading_monomials(GLOBAL_DEGREVLEX), ((0, 2),))

    def test_hilbert_series_local(self):
        self.assertEqual(hilbert_series_local(ideal(self.plane, "x^2", "y^3")), ([1, 2, 2, 1], 0))

    def test_hilbert_samuel_multiplicity(self):
        self.assertEqual(hilbert_samuel_multiplicity(ideal(self.ring, "x^2 + y^2 + z^2")), 2)
        self.assertEqual(hilbert_samuel_multiplicity(ideal(self.ring, "x*z - y^2", "x^3 - y*z", "x^2*y - z^2")), 3)
        self.assertEqual(hilbert_samuel_multiplicity(ideal(self.ring, "x")), 1)

    def test_multiplicity_off_origin_is_zero(self):
        self.assertEqual(hilbert_samuel_multiplicity(ideal(self.ring, "x - 1")), 0)
        self.assertTrue(ideal(self.ring, "x - 1").is_locally_unit())

    def test_random_hypersurface_multiplicity_is_order(self):
        rng = np.random.default_rng(SEED)
        for _ in range(8):
            order = int(rng.integers(1, 4))
            g = random_polynomial(self.ring, rng, min_degree=order, max_degree=order + 2)
            with self.subTest(g=self.ring.format(g)):
                self.assertEqual(self.ring.lowest_degree(g), order)
                self.assertEqual(hilbert_samuel_multiplicity(Ideal([g], self.ring)), order)

    def test_local_and_global_lengths_agree_for_cones(self):
        # 齐次理想的零点集是锥，零维时只含原点，局部与全局长度相同
        rng = np.random.default_rng(SEED)
        for degrees in [(1, 2, 2), (2, 2, 2), (1, 1, 3), (2, 2, 3)]:
            gens = [random_polynomial(self.ring, rng, min_degree=d, max_degree=d) for d in degrees]
            i = Ideal(gens, self.ring)
            with self.subTest(degrees=degrees):
                global_length = count_standard_monomials(i.leading_monomials(GLOBAL_DEGREVLEX), 3)
                self.assertEqual(global_length, degrees[0] * degrees[1] * degrees[2])
                self.assertEqual(local_quotient_dimension(i), global_length)

    def test_local_length_at_most_global(self):
        rng = np.random.default_rng(SEED + 1)
        for _ in range(4):
            gens = [
                random_polynomial(self.plane, rng, min_degree=2, max_degree=2)
                + random_polynomial(self.plane, rng, min_degree=3, max_degree=3)
                for _ in range(2)
            ]
            i = Ideal(gens, self.plane)
            global_length = count_standard_monomials(i.leading_monomials(GLOBAL_DEGREVLEX), 2)
            self.assertLessEqual(local_quotient_dimension(i), global_length)
            self.assertEqual(local_quotient_dimension(i), 4)


class TestIdealOperations(unittest.TestCase):
    """消去、交、商理想与饱和化"""

    @classmethod
    def setUpClass(cls):
        cls.ring = PolynomialRing(['x', 'y'])

    def test_eliminate(self):
        ring = PolynomialRing(['t', 'x', 'y'])
        result = eliminate(ideal(ring, "x - t", "y - t^2"), ['t'])
        self.assertEqual(result.ring.variables, ('x', 'y'))
        self.assertTrue(result.same_ideal(ideal(result.ring, "y - x^2")))

    def test_eliminate_all_variables(self):
        with self.assertRaises(ValueError):
            eliminate(ideal(self.ring, "x"), ['x', 'y'])

    def test_intersect(self):
        self.assertTrue(intersect(ideal(self.ring, "x"), ideal(self.ring, "y")).same_ideal(ideal(self.ring, "x*y")))

    def test_ideal_quotient(self):
        quotient = ideal_quotient(ideal(self.ring, "x^2", "x*y"), ideal(self.ring, "x"))
        self.assertTrue(quotient.same_ideal(ideal(self.ring, "x", "y")))

    def test_saturate_by_element(self):
        self.assertTrue(saturate_by_element(ideal(self.ring, "x*y"), self.ring.gen('x')).same_ideal(ideal(self.ring, "y")))

    def test_saturation_by_maximal_ideal(self):
        embedded = ideal(self.ring, "x^2", "x*y")
        result = saturation(embedded, Ideal.maximal(self.ring))
        self.assertTrue(result.same_ideal(ideal(self.ring, "x")))

    def test_saturation_is_idempotent(self):
        space = PolynomialRing(['x', 'y', 'z'])
        cases = [
            (ideal(space, "x^2*y", "x*z^3", "y^2 - x*z"), Ideal.maximal(space)),
            (ideal(space, "x*y", "x*z"), ideal(space, "x")),
            (ideal(space, "x^3*y - z^2", "x^2*z"), ideal(space, "x", "z")),
        ]
        for base, divisor in cases:
            with self.subTest(base=base.generators):
                once = saturation(base, divisor)
                self.assertTrue(saturation(once, divisor).same_ideal(once))
                self.assertTrue(all(normal_form(g, once) == space.zero for g in base.generators))

    def test_vanishes_only_at_origin(self):
        self.assertTrue(vanishes_only_at_origin(ideal(self.ring, "x", "y^2")))
        self.assertTrue(vanishes_only_at_origin(ideal(self.ring, "1")))
        self.assertFalse(vanishes_only_at_origin(ideal(self.ring, "x")))

    def test_isolated_at_origin_but_other_point(self):
        # V = {(0,0), (1,0)}
        self.assertFalse(vanishes_only_at_origin(ideal(self.ring, "x^2 - x", "y")))


class TestDeadline(unittest.TestCase):
    """任务截止时间"""

    def test_no_limit(self):
        with time_limit(None):
            with task_deadline():
                time.sleep(0.01)
                check_deadline("测试")

    def test_limit_applies_inside_task(self):
        with time_limit(0.001):
            check_deadline("任务外")
            with task_deadline():
                time.sleep(0.02)
                with self.assertRaises(ComputationTimeoutError) as ctx:
                    check_deadline("测试阶段")
        self.assertEqual(ctx.exception.exit_code, 4)
        self.assertEqual(ctx.exception.stage, "测试阶段")

    def test_each_task_gets_fresh_deadline(self):
        def slow_then_check():
            time.sleep(0.01)
            check_deadline("任务")
            return True

        with time_limit(5):
            self.assertTrue(run_as_task(slow_then_check))
            self.assertTrue(run_as_task(slow_then_check))

    def test_basis_computation_times_out(self):
        ring = PolynomialRing(['x', 'y', 'z', 'w'])
        hard = ideal(ring, "x^7 + y^5*z + w^3", "y^6 - x*z^4 + w", "z^5 - x^3*y*w + y")
        with time_limit(1e-6):
            with self.assertRaises(ComputationTimeoutError):
                hard.standard_basis()

    def test_global_basis_computation_times_out(self):
        ring = PolynomialRing(['x', 'y', 'z', 'w'])
        quintics = ideal(
            ring,
            "x^5 + 3*y^4*z - 2*w^3*x^2 + z*w",
            "y^5 - 5*x^3*z*w + 7*z^4 - x*y",
            "z^5 + 2*x^2*y^2*w - w^4*y + 3*x*z",
            "w^5 - x*y*z^3 + 4*x^4*w - y*z",
        )
        started = time.monotonic()
        with time_limit(0.2):
            with self.assertRaises(ComputationTimeoutError) as ctx:
                quintics.groebner_basis()
        self.assertLess(time.monotonic() - started, 30)
        self.assertEqual(ctx.exception.exit_code, 4)

    def test_global_basis_stops_at_first_pair(self):
        cubic = ideal(PolynomialRing(['x', 'y', 'z']), "x*z - y^2", "x^3 - y*z")
        with time_limit(1e-6):
            with self.assertRaises(ComputationTimeoutError):
                cubic.groebner_basis()
        # 超时的计算不写入缓存
        self.assertEqual(len(cubic.groebner_basis()), 2)


if __name__ == '__main__':
    unittest.main()
