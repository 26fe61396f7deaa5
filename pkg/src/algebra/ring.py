"""多项式环上下文模块

封装 sympy 稀疏多项式环，提供变量名、系数域和单项式序的统一管理。
"""

import re
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from sympy import symbols as make_symbols
from sympy.polys.orderings import MonomialOrder as SympyMonomialOrder
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing

from .field import CoefficientField, Rational

IDENTIFIER = re.compile(r'^[A-Za-z_][A-Za-z_0-9]*$')

Monomial = Tuple[int, ...]


class PolynomialRing:
    """多项式环上下文

    同一个上下文可以按不同的单项式序得到不同的 sympy 环，多项式
    的规范形式总是保存在分次反字典序的基础环中。

    Attributes:
        variables: 有序变量名
        field: 系数域
    """

    def __init__(self, variables: Sequence[str], field: Optional[CoefficientField] = None):
        variables = tuple(variables)
        if not variables:
            raise ValueError("多项式环至少需要一个变量")
        if len(set(variables)) != len(variables):
            raise ValueError(f"变量名重复: {variables}")
        for name in variables:
            if not IDENTIFIER.match(name):
                raise ValueError(f"非法变量名: {name!r}")
        self.field = field or CoefficientField.rationals()
        if self.field.parameter in variables:
            raise ValueError(f"参数 {self.field.parameter} 不能同时作为变量")
        self.variables = variables
        self._symbols = tuple(make_symbols(list(variables)))
        self.base = self.sympy_ring(grevlex)

    @classmethod
    def of(cls, poly: PolyElement) -> 'PolynomialRing':
        """由 sympy 多项式反推环上下文"""
        domain = poly.ring.domain
        names = [str(symbol) for symbol in poly.ring.symbols]
        if getattr(domain, 'is_FractionField', False):
            return cls(names, CoefficientField.rational_functions(str(domain.symbols[0])))
        return cls(names)

    @property
    def ngens(self) -> int:
        return len(self.variables)

    def sympy_ring(self, order: SympyMonomialOrder) -> PolyRing:
        """按给定单项式序返回 sympy 环（sympy 内部缓存同一环）"""
        return PolyRing(self._symbols, self.field.domain, order)

    @property
    def gens(self) -> Tuple[PolyElement, ...]:
        return self.base.gens

    def gen(self, name: str) -> PolyElement:
        return self.base.gens[self.index(name)]

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"环中没有变量 {name}") from None

    @property
    def zero(self) -> PolyElement:
        return self.base.zero

    @property
    def one(self) -> PolyElement:
        return self.base.one

    def constant(self, value: Rational) -> PolyElement:
        return self.base.ground_new(self.field.from_rational(value))

    def monomial(self, exponents: Monomial) -> PolyElement:
        return self.base.term_new(tuple(exponents), self.field.domain.one)

    def linear_form(self, coefficients: Sequence[Rational]) -> PolyElement:
        """由系数向量构造线性型 sum(c_i * x_i)"""
        if len(coefficients) != self.ngens:
            raise ValueError("线性型系数个数与变量个数不一致")
        form = self.zero
        for coeff, gen in zip(coefficients, self.gens):
            form += gen * self.field.from_rational(coeff)
        return form

    def canonical(self, poly: PolyElement) -> PolyElement:
        """把多项式转换到本上下文的基础环"""
        return self.convert(poly, grevlex)

    def convert(self, poly: PolyElement, order: SympyMonomialOrder) -> PolyElement:
        target = self.sympy_ring(order)
        if poly.ring == target:
            return poly
        return poly.set_ring(target)

    def parse(self, text: str) -> PolyElement:
        from .parser import parse_polynomial
        return parse_polynomial(text, self)

    def format(self, poly: PolyElement) -> str:
        from .parser import format_polynomial
        return format_polynomial(poly, self)

    def fresh_name(self, stem: str) -> str:
        """生成一个不与现有变量冲突的辅助变量名"""
        taken = set(self.variables) | {self.field.parameter}
        name = stem
        index = 0
        while name in taken:
            index += 1
            name = f"{stem}{index}"
        return name

    def with_variables(self, names: Iterable[str], front: bool = False) -> 'PolynomialRing':
        """追加辅助变量后的新环上下文

        Args:
            names: 新变量名
            front: 为True时放在原变量之前（用于块消去序）
        """
        names = tuple(names)
        variables = names + self.variables if front else self.variables + names
        return PolynomialRing(variables, self.field)

    def without_variables(self, names: Iterable[str]) -> 'PolynomialRing':
        dropped = set(names)
        return PolynomialRing([v for v in self.variables if v not in dropped], self.field)

    def with_field(self, field: CoefficientField) -> 'PolynomialRing':
        return PolynomialRing(self.variables, field)

    def embed(self, poly: PolyElement) -> PolyElement:
        """把另一个上下文中的多项式按变量名嵌入本环

        多项式中出现的变量必须都是本环变量，系数按需转换到本环系数域。
        """
        return poly.set_ring(self.base)

    def is_constant(self, poly: PolyElement) -> bool:
        return all(sum(monom) == 0 for monom in poly.itermonoms())

    def vanishes_at_origin(self, poly: PolyElement) -> bool:
        return not poly.const()

    def lowest_degree(self, poly: PolyElement) -> int:
        """最低次齐次部分的次数（零多项式返回 -1）"""
        if not poly:
            return -1
        return min(sum(monom) for monom in poly.itermonoms())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolynomialRing):
            return NotImplemented
        return (self.variables, self.field) == (other.variables, other.field)

    def __hash__(self) -> int:
        return hash((self.variables, self.field))

    def __repr__(self) -> str:
        return f"PolynomialRing({', '.join(self.variables)}; {self.field.label})"


def specialize_parameter(
    poly: PolyElement,
    source: PolynomialRing,
    parameter: str,
    target: PolynomialRing,
    value: Union[Rational, None]
) -> PolyElement:
    """把总空间环 QQ[x, t] 中的多项式特化到成员环

    Args:
        poly: QQ[x, t] 中的多项式
        source: 总空间环上下文
        parameter: 参数变量名 t
        target: 成员环上下文；``value`` 为 None 时其系数域须为 QQ(t)
        value: 有理数值；None 表示一般参数（基变换到 QQ(t)）

    Returns:
        目标环中的多项式
    """
    position = source.index(parameter)
    keep = [source.index(name) for name in target.variables]
    domain = target.field.domain
    if value is None:
        t_element = target.field.parameter_element()
    else:
        t_element = target.field.from_rational(Fraction(value))
    terms: Dict[Monomial, object] = {}
    for monom, coeff in poly.iterterms():
        reduced = tuple(monom[i] for i in keep)
        contribution = domain.convert_from(coeff, source.field.domain) * t_element ** monom[position]
        terms[reduced] = terms.get(reduced, domain.zero) + contribution
    return target.base.from_dict({m: c for m, c in terms.items() if c})
