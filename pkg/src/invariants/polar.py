"""极重数模块

计算重数 m_0、Lê-Teissier 极重数 m_1..m_{d-1} 以及由行列式光滑化
定义的顶极重数 m_d。
"""

from typing import List, Sequence

from sympy.polys.rings import PolyElement

from ..algebra.matrix import PolyMatrix, jacobian_matrix, minors_ideal_generators
from ..algebra.ring import PolynomialRing
from ..engine.hilbert import INFINITE
from ..engine.ideal import Ideal
from ..engine.operations import (
    hilbert_samuel_multiplicity,
    krull_dimension,
    local_quotient_dimension,
    saturate_by_element,
)
from ..errors import NonFiniteCriticalSchemeError, WrongPolarDimensionError
from ..model.determinantal import DeterminantalGerm
from ..utils.logger import get_logger
from .genericity import GenericityContext, RandomSource

logger = get_logger(__name__)


def constant_rows(ring: PolynomialRing, rows: Sequence[Sequence]) -> List[List[PolyElement]]:
    return [[ring.constant(value) for value in row] for row in rows]


def critical_minors(
    generators: Sequence[PolyElement],
    ring: PolynomialRing,
    gradient_rows: Sequence[Sequence[PolyElement]],
    size: int,
    variables: Sequence[str] = None
) -> List[PolyElement]:
    """[雅可比矩阵; 梯度行] 的 size 阶子式

    size 超过矩阵较小边时秩条件自动成立，返回空列表。
    """
    jacobian = jacobian_matrix(generators, ring, variables)
    stacked = jacobian.stack(gradient_rows)
    if size > min(stacked.rows, stacked.cols):
        return []
    return stacked.minors(size)


def multiplicity_m0(germ: DeterminantalGerm) -> int:
    """芽的重数 m_0，即子式理想在原点的 Hilbert-Samuel 重数"""
    value = hilbert_samuel_multiplicity(germ.minors_ideal)
    logger.info(f"m_0 = {value}")
    return value


def polar_multiplicity(germ: DeterminantalGerm, i: int, ctx: GenericityContext) -> int:
    """第 i 个极重数 m_i (1 <= i <= d-1)

    一般线性投影 p: C^N -> C^{d-i+1} 在光滑部分上的临界点闭包的重数。
    临界理想关于奇异轨迹饱和化：证书保证奇异轨迹只在原点，
    因此用一般线性型 l 做 C : l^oo 即可去掉落在原点的分支。

    Args:
        germ: 已认证的 IDS
        i: 极重数下标
        ctx: 一般性上下文

    Raises:
        ValueError: i 超出范围
        WrongPolarDimensionError: 极簇维数始终不是 d-i
        GenericityUnstableError: 抽样结果不一致
    """
    if not 1 <= i <= germ.d - 1:
        raise ValueError(f"极重数下标 i={i} 超出范围 1..{germ.d - 1}")
    ring = germ.ring
    ideal = germ.minors_ideal
    expected = germ.d - i

    def compute(source: RandomSource) -> int:
        projection = constant_rows(ring, source.matrix(germ.d - i + 1, germ.N))
        minors = critical_minors(ideal.generators, ring, projection, germ.N - i + 1)
        critical = ideal.with_generators(minors)
        polar = saturate_by_element(critical, source.linear_form(ring))
        dimension = krull_dimension(polar)
        if dimension not in (expected, -1):
            raise WrongPolarDimensionError(f"m_{i}", expected, [dimension])
        return hilbert_samuel_multiplicity(polar)

    value = ctx.stable_value(f"m_{i}", compute)
    logger.info(f"m_{i} = {value}")
    return value


def top_polar_multiplicity(germ: DeterminantalGerm, ctx: GenericityContext) -> int:
    """顶极重数 m_d：一般线性函数在行列式光滑化上的临界点个数

    在增加变量 eps 的环中取 F_eps = f + eps*A_0，临界理想关于 eps 饱和化后
    与 {eps = 0} 在 (x, eps) 原点处的局部相交数即为所求。

    Raises:
        NonFiniteCriticalSchemeError: 局部相交数始终不是有限的
        GenericityUnstableError: 抽样结果不一致
    """
    ring = germ.ring
    eps_name = ring.fresh_name('eps')
    extended = ring.with_variables([eps_name])
    eps = extended.gen(eps_name)

    def compute(source: RandomSource) -> int:
        direction = source.matrix(germ.m, germ.n)
        gradient = constant_rows(extended, [source.vector(germ.N)])
        perturbed = PolyMatrix(
            [
                [extended.embed(germ.matrix.entry(i, j)) + eps * extended.field.from_rational(direction[i][j])
                 for j in range(germ.n)]
                for i in range(germ.m)
            ],
            extended,
        )
        smoothing = Ideal(minors_ideal_generators(perturbed, germ.s), extended)
        minors = critical_minors(
            smoothing.generators, extended, gradient, germ.N - germ.d + 1, ring.variables
        )
        critical = smoothing.with_generators(minors)
        trajectories = saturate_by_element(critical, eps)
        value = local_quotient_dimension(trajectories.with_generators([eps]))
        if value == INFINITE:
            raise NonFiniteCriticalSchemeError(f"m_{germ.d}")
        return int(value)

    value = ctx.stable_value(f"m_{germ.d}", compute)
    logger.info(f"m_{germ.d} = {value}")
    return value
