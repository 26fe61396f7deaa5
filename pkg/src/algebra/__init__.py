"""精确代数模块

提供系数域、多项式环上下文、表达式解析与多项式矩阵。
"""

from .field import CoefficientField, FieldKind
from .ring import PolynomialRing, specialize_parameter
from .parser import parse_polynomial, format_polynomial
from .matrix import PolyMatrix, jacobian_matrix, minors_ideal_generators

__all__ = [
    "CoefficientField",
    "FieldKind",
    "PolynomialRing",
    "specialize_parameter",
    "parse_polynomial",
    "format_polynomial",
    "PolyMatrix",
    "jacobian_matrix",
    "minors_ideal_generators",
]
