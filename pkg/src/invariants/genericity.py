"""一般性上下文模块

用可复现的随机有理数实现“一般线性投影”“一般扰动”，并通过独立重抽样
检验结果的稳定性。
"""

import threading
import zlib
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, TypeVar

import numpy as np
from pydantic import BaseModel, ConfigDict
from sympy.polys.rings import PolyElement

from ..algebra.ring import PolynomialRing
from ..errors import CoefficientBoundError, GenericityUnstableError
from ..utils.logger import get_logger

logger = get_logger(__name__)

T = TypeVar('T')

MAX_SEED = 2 ** 64 - 1


class DrawRecord(BaseModel):
    """一次被接受的一般性计算"""

    model_config = ConfigDict(frozen=True)

    quantity: str
    attempts: List[int]
    value: int


class RandomSource:
    """单次抽样的随机有理数流

    Args:
        seed: 全局种子
        quantity: 被计算量的名称（决定独立的子流）
        attempt: 第几次抽样
        bound: 分子、分母的上界
    """

    def __init__(self, seed: int, quantity: str, attempt: int, bound: int):
        self.quantity = quantity
        self.attempt = attempt
        self.bound = bound
        self._rng = np.random.default_rng([seed, zlib.crc32(quantity.encode('utf-8')), attempt])

    def rational(self) -> Fraction:
        """非零有理数，分子分母的绝对值不超过界"""
        numerator = int(self._rng.integers(1, self.bound + 1))
        denominator = int(self._rng.integers(1, self.bound + 1))
        sign = -1 if self._rng.integers(0, 2) else 1
        return Fraction(sign * numerator, denominator)

    def vector(self, length: int) -> List[Fraction]:
        return [self.rational() for _ in range(length)]

    def matrix(self, rows: int, cols: int) -> List[List[Fraction]]:
        return [self.vector(cols) for _ in range(rows)]

    def linear_form(self, ring: PolynomialRing, variables: Optional[Sequence[str]] = None) -> PolyElement:
        """在给定变量上的随机线性型（其余变量系数为零）"""
        names = list(variables) if variables is not None else list(ring.variables)
        coefficients = self.vector(len(names))
        form = ring.zero
        for name, coeff in zip(names, coefficients):
            form += ring.gen(name) * ring.field.from_rational(coeff)
        return form


class GenericityContext:
    """一般性上下文

    相同种子产生完全相同的抽样序列。每个量至少需要 ``agreeing_draws``
    次独立抽样给出相同结果；失败的抽样最多再重试 ``retry_budget`` 次。

    Attributes:
        seed: 64位种子
        coefficient_bound: 随机系数的分子分母上界 B
        retry_budget: 额外抽样次数
        agreeing_draws: 需要一致的抽样次数
    """

    def __init__(self, seed: int, coefficient_bound: int = 50, retry_budget: int = 5, agreeing_draws: int = 2):
        if not 0 <= seed <= MAX_SEED:
            raise CoefficientBoundError(f"种子必须是 0..2^64-1 内的整数: {seed}")
        if coefficient_bound < 1:
            raise CoefficientBoundError(f"系数界必须为正: {coefficient_bound}")
        if retry_budget < 0:
            raise CoefficientBoundError(f"重试次数不能为负: {retry_budget}")
        if agreeing_draws < 1:
            raise CoefficientBoundError(f"一致抽样次数至少为 1: {agreeing_draws}")
        self.seed = seed
        self.coefficient_bound = coefficient_bound
        self.retry_budget = retry_budget
        self.agreeing_draws = agreeing_draws
        self._records: List[DrawRecord] = []
        self._lock = threading.Lock()

    def fork(self, seed: Optional[int] = None) -> 'GenericityContext':
        """相同参数、空记录的新上下文（可替换种子）"""
        return GenericityContext(
            self.seed if seed is None else seed,
            self.coefficient_bound,
            self.retry_budget,
            self.agreeing_draws,
        )

    def source(self, quantity: str, attempt: int) -> RandomSource:
        return RandomSource(self.seed, quantity, attempt, self.coefficient_bound)

    @property
    def records(self) -> List[DrawRecord]:
        with self._lock:
            return sorted(self._records, key=lambda r: r.quantity)

    def stable_value(self, quantity: str, compute: Callable[[RandomSource], int]) -> int:
        """用独立抽样计算一个整数量并检验稳定性

        某次抽样若抛出 GenericityUnstableError 的子类（维数错误、临界概形
        非有限），视为该次抽样不一般，继续重试。

        Args:
            quantity: 量的名称
            compute: 给定随机源计算该量的函数

        Returns:
            得到足够次数一致结果的值

        Raises:
            GenericityUnstableError: 重试预算用完仍无一致结果
        """
        values: List[int] = []
        attempts: List[int] = []
        last_failure: Optional[GenericityUnstableError] = None
        for attempt in range(self.agreeing_draws + self.retry_budget):
            try:
                value = compute(self.source(quantity, attempt))
            except GenericityUnstableError as exc:
                logger.warning(f"{quantity} 第 {attempt} 次抽样不一般: {exc.message}")
                last_failure = exc
                continue
            values.append(value)
            attempts.append(attempt)
            logger.debug(f"{quantity} 第 {attempt} 次抽样得到 {value}")
            if values.count(value) >= self.agreeing_draws:
                accepted = [a for a, v in zip(attempts, values) if v == value]
                with self._lock:
                    self._records.append(DrawRecord(quantity=quantity, attempts=accepted, value=value))
                if len(set(values)) > 1:
                    logger.warning(f"{quantity} 抽样曾出现不一致结果 {values}，采用 {value}")
                return value
        if not values and last_failure is not None:
            raise last_failure
        raise GenericityUnstableError(quantity, values)
