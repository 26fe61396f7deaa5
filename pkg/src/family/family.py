"""行列式族模块

单参数行列式形变 F(x, t)：保持原点的检验、成员实例化（有理参数值或
一般参数）以及总空间理想。
"""

from fractions import Fraction
from functools import cached_property
from typing import Sequence, Union

from ..algebra.field import CoefficientField
from ..algebra.matrix import PolyMatrix, minors_ideal_generators
from ..algebra.ring import PolynomialRing, specialize_parameter
from ..engine.ideal import Ideal
from ..errors import NotOriginPreservingError, ParameterOrderError
from ..model.determinantal import DeterminantalGerm, build_germ, expected_dimension
from ..utils.logger import get_logger

logger = get_logger(__name__)


class _GenericParameter:
    """一般参数值的哨兵（系数基变换到 QQ(t)）"""

    def __repr__(self) -> str:
        return 'GENERIC'


GENERIC = _GenericParameter()

ParameterValue = Union[Fraction, int, _GenericParameter]


def parameter_label(parameter: str, value: ParameterValue) -> str:
    """成员的显示名称，例如 ``t=0``、``t=1/2``、``generic``"""
    if value is GENERIC:
        return 'generic'
    return f"{parameter}={Fraction(value)}"


class DeterminantalFamily:
    """单参数行列式族

    Attributes:
        matrix: 总空间环 QQ[x, t] 上的矩阵（m <= n）
        s: 子式阶数
        parameter: 参数名 t
        N: 空间维数（不含参数）
        d: 成员的期望维数
        origin_preserving: 全部元素属于 <x>
    """

    def __init__(
        self,
        matrix: PolyMatrix,
        s: int,
        parameter: str,
        enforce_origin_preserving: bool = True
    ):
        """初始化族

        Args:
            matrix: 总空间矩阵（行数大于列数时转置）
            s: 子式阶数
            parameter: 参数变量名，必须是矩阵环中的变量
            enforce_origin_preserving: 为True时拒绝不保持原点的族

        Raises:
            NotOriginPreservingError: 元素不属于 <x>
            ParameterOrderError: 参数不是环变量，或维数参数不合法
        """
        if parameter not in matrix.ring.variables:
            raise ParameterOrderError(f"参数 {parameter} 不是矩阵环中的变量")
        if matrix.rows > matrix.cols:
            matrix = matrix.transpose()
        self.matrix = matrix
        self.s = s
        self.parameter = parameter
        self.N = matrix.ring.ngens - 1
        self.d = expected_dimension(self.N, matrix.rows, matrix.cols, s)
        offending = self._find_offending_entry()
        self.origin_preserving = offending is None
        if enforce_origin_preserving and offending is not None:
            i, j = offending
            raise NotOriginPreservingError(self.total_ring.format(matrix.entry(i, j)), i, j)

    @property
    def total_ring(self) -> PolynomialRing:
        return self.matrix.ring

    @property
    def m(self) -> int:
        return self.matrix.rows

    @property
    def n(self) -> int:
        return self.matrix.cols

    @cached_property
    def space_variables(self) -> Sequence[str]:
        return tuple(v for v in self.total_ring.variables if v != self.parameter)

    @cached_property
    def space_ring(self) -> PolynomialRing:
        """特殊成员所在的环 QQ[x]"""
        return PolynomialRing(self.space_variables)

    @cached_property
    def generic_ring(self) -> PolynomialRing:
        """一般成员所在的环 QQ(t)[x]"""
        return PolynomialRing(self.space_variables, CoefficientField.rational_functions(self.parameter))

    def _find_offending_entry(self):
        position = self.total_ring.index(self.parameter)
        for i in range(self.m):
            for j in range(self.n):
                for monom in self.matrix.entry(i, j).itermonoms():
                    if not any(e for k, e in enumerate(monom) if k != position):
                        return i, j
        return None

    def member_matrix(self, value: ParameterValue) -> PolyMatrix:
        target = self.generic_ring if value is GENERIC else self.space_ring
        specialized = None if value is GENERIC else Fraction(value)
        rows = [
            [
                specialize_parameter(self.matrix.entry(i, j), self.total_ring, self.parameter, target, specialized)
                for j in range(self.n)
            ]
            for i in range(self.m)
        ]
        return PolyMatrix(rows, target)

    def instantiate(self, value: ParameterValue) -> DeterminantalGerm:
        """取族中的成员 X_t

        Args:
            value: 有理参数值，或 ``GENERIC``

        Returns:
            成员的行列式芽

        Raises:
            NotDeterminantalError: 该参数值处维数跳跃
            OriginNotOnGermError: 族不保持原点时成员不过原点
        """
        logger.debug(f"实例化成员 {parameter_label(self.parameter, value)}")
        return build_germ(self.member_matrix(value), self.s)

    @cached_property
    def total_space_ideal(self) -> Ideal:
        """总空间理想 I_s(F) ⊂ QQ[x, t]"""
        return Ideal(minors_ideal_generators(self.matrix, self.s), self.total_ring)

    def __repr__(self) -> str:
        return (
            f"DeterminantalFamily(type=({self.m},{self.n};{self.s}), N={self.N}, "
            f"d={self.d}, param={self.parameter})"
        )
