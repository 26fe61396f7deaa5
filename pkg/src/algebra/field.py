"""系数域模块

定义精确系数域：有理数域 QQ 或单参数有理函数域 QQ(t)。
"""

from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any, Optional, Union

from sympy import Symbol
from sympy.polys.domains import QQ

Rational = Union[int, Fraction]


class FieldKind(str, Enum):
    """系数域类型"""

    RATIONALS = 'rationals'
    RATIONAL_FUNCTIONS = 'rational_functions'


class CoefficientField:
    """精确系数域

    有理函数域的元素由 sympy 以约化的分子/分母多项式对保存。

    Attributes:
        kind: 域的类型
        parameter: 有理函数域的参数名
    """

    def __init__(self, kind: FieldKind = FieldKind.RATIONALS, parameter: Optional[str] = None):
        if kind == FieldKind.RATIONAL_FUNCTIONS and not parameter:
            raise ValueError("有理函数域需要参数名")
        if kind == FieldKind.RATIONALS and parameter:
            raise ValueError("有理数域不接受参数名")
        self.kind = kind
        self.parameter = parameter

    @classmethod
    def rationals(cls) -> 'CoefficientField':
        return cls(FieldKind.RATIONALS)

    @classmethod
    def rational_functions(cls, parameter: str) -> 'CoefficientField':
        return cls(FieldKind.RATIONAL_FUNCTIONS, parameter)

    @property
    def is_parametric(self) -> bool:
        return self.kind == FieldKind.RATIONAL_FUNCTIONS

    @cached_property
    def domain(self) -> Any:
        """对应的 sympy 域对象"""
        if self.is_parametric:
            return QQ.frac_field(Symbol(self.parameter))
        return QQ

    @property
    def label(self) -> str:
        """报告中使用的域名称"""
        return f"QQ({self.parameter})" if self.is_parametric else "QQ"

    def from_rational(self, value: Rational) -> Any:
        """将 Python 有理数转换为域元素

        Args:
            value: 整数或 Fraction

        Returns:
            sympy 域元素
        """
        value = Fraction(value)
        return self.domain.convert(QQ(value.numerator, value.denominator))

    def parameter_element(self) -> Any:
        """返回参数 t 本身作为域元素"""
        if not self.is_parametric:
            raise ValueError("有理数域没有参数")
        return self.domain.field.gens[0]

    def format_element(self, coeff: Any) -> str:
        """格式化一个系数

        Args:
            coeff: 域元素

        Returns:
            可被解析器重新读入的字符串
        """
        if self.is_parametric:
            numer = self.domain.numer(coeff)
            denom = self.domain.denom(coeff)
            num_text = _format_univariate(numer, self.parameter)
            if denom == 1:
                return num_text
            return f"({num_text})/({_format_univariate(denom, self.parameter)})"
        return format_rational(coeff)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoefficientField):
            return NotImplemented
        return (self.kind, self.parameter) == (other.kind, other.parameter)

    def __hash__(self) -> int:
        return hash((self.kind, self.parameter))

    def __repr__(self) -> str:
        return f"CoefficientField({self.label})"


def format_rational(coeff: Any) -> str:
    """格式化 QQ 元素为 ``p`` 或 ``p/q``"""
    numerator = int(coeff.numerator)
    denominator = int(coeff.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def _format_univariate(poly: Any, name: str) -> str:
    """格式化参数的单变量多项式（仅用于系数显示）"""
    if not poly:
        return "0"
    parts = []
    for (exp,), coeff in sorted(poly.terms(), key=lambda item: -item[0][0]):
        c = format_rational(coeff)
        if exp == 0:
            term = c
        else:
            power = name if exp == 1 else f"{name}^{exp}"
            term = power if c == "1" else f"-{power}" if c == "-1" else f"{c}*{power}"
        parts.append(term)
    text = parts[0]
    for part in parts[1:]:
        text += f" - {part[1:]}" if part.startswith('-') else f" + {part}"
    return text
