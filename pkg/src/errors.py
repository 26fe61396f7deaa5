"""异常定义模块

集中定义工具内使用的异常层级，每一类异常携带命令行退出码。
"""

from typing import Any, Optional, Sequence


class IdsToolError(Exception):
    """工具异常基类

    所有可预期的失败都从这里派生，命令行根据 ``exit_code`` 退出。
    """

    exit_code = 6

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


# ---------------------------------------------------------------------------
# 输入错误（退出码 1）
# ---------------------------------------------------------------------------

class InputDocumentError(IdsToolError):
    """输入文档格式错误"""

    exit_code = 1

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"第 {line} 行: {message}"
        super().__init__(message)
        self.line = line


class PolynomialSyntaxError(InputDocumentError):
    """多项式表达式语法错误

    Attributes:
        text: 出错的表达式原文
        position: 出错位置（从0开始的字符偏移）
    """

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} (位置 {position}: {text!r})")
        self.text = text
        self.position = position


class UnknownVariableError(InputDocumentError):
    """表达式中出现未声明的变量"""

    def __init__(self, name: str, text: str, position: int):
        super().__init__(f"未声明的变量 '{name}' (位置 {position}: {text!r})")
        self.name = name
        self.text = text
        self.position = position


class NotOriginPreservingError(InputDocumentError):
    """族的矩阵元素不全在 <x1..xN> 中"""

    def __init__(self, entry: str, row: int, col: int):
        super().__init__(f"族不保持原点: 元素 ({row + 1},{col + 1}) = {entry} 不属于理想 <x>")
        self.entry = entry
        self.row = row
        self.col = col


class MatrixIndexError(InputDocumentError, ValueError):
    """矩阵下标越界、行列数不一致或子式阶数超出范围"""


class ParameterOrderError(InputDocumentError, ValueError):
    """(N, m, n, s) 不满足 0 < s <= m <= n, N >= 1"""


class CoefficientBoundError(InputDocumentError, ValueError):
    """随机系数界或种子不合法"""


# ---------------------------------------------------------------------------
# 证书失败（退出码 2）
# ---------------------------------------------------------------------------

class CertificateFailureError(IdsToolError):
    """芽未通过 IDS 证书检验"""

    exit_code = 2

    def __init__(self, certificate: Any):
        failures = ', '.join(certificate.failures()) or '未知'
        super().__init__(f"不是孤立行列式奇点: {failures}")
        self.certificate = certificate


# ---------------------------------------------------------------------------
# 一般性失败（退出码 3）
# ---------------------------------------------------------------------------

class GenericityUnstableError(IdsToolError):
    """独立随机抽样得到的结果在重试预算内始终不一致"""

    exit_code = 3

    def __init__(self, quantity: str, values: Sequence[Any] = ()):
        super().__init__(f"{quantity} 的随机抽样不稳定: 得到 {list(values)}")
        self.quantity = quantity
        self.values = list(values)


class WrongPolarDimensionError(GenericityUnstableError):
    """极簇维数与期望值不符"""

    def __init__(self, quantity: str, expected: int, observed: Sequence[int]):
        IdsToolError.__init__(self, f"{quantity} 的极簇维数应为 {expected}, 实际得到 {list(observed)}")
        self.quantity = quantity
        self.values = list(observed)
        self.expected = expected


class NonFiniteCriticalSchemeError(GenericityUnstableError):
    """临界点概形在原点处的局部长度不是有限的"""

    def __init__(self, quantity: str):
        IdsToolError.__init__(self, f"{quantity} 的临界概形在原点不是零维的")
        self.quantity = quantity
        self.values = []


# ---------------------------------------------------------------------------
# 超时（退出码 4）
# ---------------------------------------------------------------------------

class ComputationTimeoutError(IdsToolError):
    """计算超过了时间限制"""

    exit_code = 4

    def __init__(self, stage: str, limit: float):
        super().__init__(f"计算超时: {stage} (限制 {limit:g} 秒)")
        self.stage = stage
        self.limit = limit


# ---------------------------------------------------------------------------
# 行列式模型错误（退出码 5）
# ---------------------------------------------------------------------------

class DeterminantalModelError(IdsToolError):
    """行列式模型校验失败"""

    exit_code = 5


class NotDeterminantalError(DeterminantalModelError):
    """子式理想的维数与期望维数不一致"""

    def __init__(self, expected: int, actual: int):
        super().__init__(f"不是行列式芽: 期望维数 {expected}, 实际维数 {actual}")
        self.expected = expected
        self.actual = actual


class NegativeExpectedDimensionError(DeterminantalModelError):
    """期望维数为负"""

    def __init__(self, expected: int):
        super().__init__(f"期望维数为负: d = {expected}")
        self.expected = expected


class OriginNotOnGermError(DeterminantalModelError):
    """矩阵元素或多项式在原点不为零"""


# ---------------------------------------------------------------------------
# 计算引擎错误（退出码 6）
# ---------------------------------------------------------------------------

class NonIsolatedSingularityError(IdsToolError):
    """奇点不是孤立的（局部商空间维数无限）"""


class SaturationLimitError(IdsToolError):
    """迭代商在上限次数内没有稳定"""

    def __init__(self, cap: int):
        super().__init__(f"饱和化在 {cap} 次迭代内没有稳定")
        self.cap = cap


class CurveExponentsError(IdsToolError, ValueError):
    """单项式曲线的指数不满足 gcd = 1"""
