"""行列式芽模块

表示由 m x n 多项式矩阵的 s 阶子式定义的行列式芽，校验行列式条件
与孤立行列式奇点 (IDS) 条件，并给出奇异轨迹理想与秩下降理想。
"""

from functools import cached_property
from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from ..algebra.matrix import PolyMatrix, jacobian_matrix, minors_ideal_generators
from ..algebra.ring import PolynomialRing
from ..engine.ideal import Ideal
from ..engine.operations import krull_dimension, vanishes_only_at_origin
from ..errors import (
    NegativeExpectedDimensionError,
    NotDeterminantalError,
    OriginNotOnGermError,
    ParameterOrderError,
)
from ..utils.logger import get_logger

logger = get_logger(__name__)


def expected_dimension(N: int, m: int, n: int, s: int) -> int:
    """期望维数 d = N - (m-s+1)(n-s+1)

    Args:
        N: 环境空间维数
        m: 行数
        n: 列数
        s: 子式阶数

    Returns:
        d（可能为负，由调用方拒绝）

    Raises:
        ParameterOrderError: 不满足 0 < s <= m <= n 或 N >= 1
    """
    if not (0 < s <= m <= n) or N < 1:
        raise ParameterOrderError(f"参数不满足 0 < s <= m <= n, N >= 1: N={N}, m={m}, n={n}, s={s}")
    return N - (m - s + 1) * (n - s + 1)


class IdsCertificate(BaseModel):
    """IDS 证书

    三个布尔条件同时成立时芽被认证为孤立行列式奇点；
    ``reducedness_assumed`` 记录雅可比判别法对子式理想既约性的假设。
    """

    model_config = ConfigDict(frozen=True)

    codim_bound_ok: bool
    rank_drop_isolated: bool
    smooth_off_origin: bool
    reducedness_assumed: bool = True

    @property
    def is_ids(self) -> bool:
        return self.codim_bound_ok and self.rank_drop_isolated and self.smooth_off_origin

    def failures(self) -> List[str]:
        names = []
        if not self.codim_bound_ok:
            names.append("余维数界 N < (m-s+2)(n-s+2) 不成立")
        if not self.rank_drop_isolated:
            names.append("秩下降轨迹不是孤立的")
        if not self.smooth_off_origin:
            names.append("原点以外存在奇点")
        return names


class DeterminantalGerm:
    """行列式芽 (X_0, 0) = f^{-1}(M^s_{m,n})

    构造后不可变。请使用 ``build_germ`` 创建，它会校验维数条件。

    Attributes:
        matrix: 矩阵 f（m <= n，元素在原点为零）
        s: 子式阶数
        N: 环境空间维数
        d: 期望维数
        minors_ideal: s 阶子式生成的理想
    """

    def __init__(self, matrix: PolyMatrix, s: int, d: int, minors_ideal: Ideal):
        self.matrix = matrix
        self.s = s
        self.N = matrix.ring.ngens
        self.d = d
        self.minors_ideal = minors_ideal

    @property
    def ring(self) -> PolynomialRing:
        return self.matrix.ring

    @property
    def m(self) -> int:
        return self.matrix.rows

    @property
    def n(self) -> int:
        return self.matrix.cols

    @property
    def is_icis(self) -> bool:
        return self.s == 1

    @property
    def codimension(self) -> int:
        return self.N - self.d

    @cached_property
    def singular_locus(self) -> Ideal:
        return singular_locus_ideal(self)

    def __repr__(self) -> str:
        return f"DeterminantalGerm(type=({self.m},{self.n};{self.s}), N={self.N}, d={self.d})"


def build_germ(matrix: PolyMatrix, s: int) -> DeterminantalGerm:
    """由矩阵和子式阶数构造行列式芽

    Args:
        matrix: 多项式矩阵（行数大于列数时先转置）
        s: 子式阶数

    Returns:
        校验通过的行列式芽

    Raises:
        OriginNotOnGermError: 某个元素在原点不为零
        NegativeExpectedDimensionError: 期望维数为负
        NotDeterminantalError: 子式理想维数与期望维数不一致
    """
    if matrix.rows > matrix.cols:
        matrix = matrix.transpose()
    ring = matrix.ring
    for i in range(matrix.rows):
        for j in range(matrix.cols):
            if not ring.vanishes_at_origin(matrix.entry(i, j)):
                raise OriginNotOnGermError(
                    f"矩阵元素 ({i + 1},{j + 1}) = {ring.format(matrix.entry(i, j))} 在原点不为零"
                )
    d = expected_dimension(ring.ngens, matrix.rows, matrix.cols, s)
    if d < 0:
        raise NegativeExpectedDimensionError(d)
    ideal = Ideal(minors_ideal_generators(matrix, s), ring)
    actual = krull_dimension(ideal)
    if actual != d:
        raise NotDeterminantalError(d, actual)
    logger.info(f"行列式芽构造完成: 类型 ({matrix.rows},{matrix.cols};{s}), N={ring.ngens}, d={d}")
    return DeterminantalGerm(matrix, s, d, ideal)


def singular_locus_ideal(germ: DeterminantalGerm) -> Ideal:
    """奇异轨迹理想: I + 生成元雅可比矩阵的全部 (N-d) 阶子式"""
    ideal = germ.minors_ideal
    size = germ.codimension
    generators = list(ideal.generators)
    if size == 0:
        return Ideal(generators, germ.ring)
    jacobian = jacobian_matrix(generators, germ.ring)
    if size > min(jacobian.rows, jacobian.cols):
        return Ideal(generators, germ.ring)
    return ideal.with_generators(jacobian.minors(size))


def rank_drop_ideal(germ: DeterminantalGerm) -> Optional[Ideal]:
    """(s-1) 阶子式理想；s = 1 时条件是空的，返回 None"""
    if germ.s == 1:
        return None
    return Ideal(minors_ideal_generators(germ.matrix, germ.s - 1), germ.ring)


def verify_ids(germ: DeterminantalGerm) -> IdsCertificate:
    """检验孤立行列式奇点条件

    Returns:
        证书（失败项记录在布尔字段中，不抛出异常）
    """
    codim_ok = germ.s == 1 or germ.N < (germ.m - germ.s + 2) * (germ.n - germ.s + 2)
    drop = rank_drop_ideal(germ)
    rank_ok = True if drop is None else vanishes_only_at_origin(drop)
    smooth_ok = vanishes_only_at_origin(germ.singular_locus)
    certificate = IdsCertificate(
        codim_bound_ok=codim_ok,
        rank_drop_isolated=rank_ok,
        smooth_off_origin=smooth_ok,
        reducedness_assumed=True,
    )
    if certificate.is_ids:
        logger.info("IDS 证书: 全部条件成立")
    else:
        logger.warning(f"IDS 证书失败: {', '.join(certificate.failures())}")
    return certificate
