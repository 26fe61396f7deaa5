"""多项式表达式解析与格式化模块

文法：
    expr   := term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := ('+'|'-') unary | power
    power  := atom (('^'|'**') INTEGER)?
    atom   := NUMBER | NAME | '(' expr ')'

除法只允许除以非零常数（有理数或参数域中的元素）。
"""

import re
from typing import List, NamedTuple, Optional

from sympy.polys.rings import PolyElement

from ..errors import PolynomialSyntaxError, UnknownVariableError
from .field import format_rational

TOKEN_PATTERN = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))')


class Token(NamedTuple):
    kind: str
    value: str
    position: int


def tokenize(text: str) -> List[Token]:
    """把表达式切分为记号

    Raises:
        PolynomialSyntaxError: 遇到无法识别的字符
    """
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = TOKEN_PATTERN.match(text, position)
        if not match:
            raise PolynomialSyntaxError(f"无法识别的字符 {text[position]!r}", text, position)
        start = match.start(match.lastindex)
        if match.group(1) is not None:
            tokens.append(Token('number', match.group(1), start))
        elif match.group(2) is not None:
            tokens.append(Token('name', match.group(2), start))
        else:
            op = '^' if match.group(3) == '**' else match.group(3)
            tokens.append(Token('op', op, start))
        position = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


class _Parser:
    """递归下降解析器"""

    def __init__(self, text: str, ring):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept(self, op: str) -> Optional[Token]:
        if self.current.kind == 'op' and self.current.value == op:
            return self._advance()
        return None

    def _fail(self, message: str, position: Optional[int] = None) -> None:
        raise PolynomialSyntaxError(message, self.text, self.current.position if position is None else position)

    def parse(self) -> PolyElement:
        if self.current.kind == 'end':
            self._fail("空表达式")
        result = self._expr()
        if self.current.kind != 'end':
            self._fail(f"多余的记号 {self.current.value!r}")
        return result

    def _expr(self) -> PolyElement:
        result = self._term()
        while True:
            if self._accept('+'):
                result = result + self._term()
            elif self._accept('-'):
                result = result - self._term()
            else:
                return result

    def _term(self) -> PolyElement:
        result = self._unary()
        while True:
            if self._accept('*'):
                result = result * self._unary()
            elif self.current.kind == 'op' and self.current.value == '/':
                position = self._advance().position
                divisor = self._unary()
                if not divisor or not self.ring.is_constant(divisor):
                    self._fail("只能除以非零常数", position)
                result = result.quo_ground(divisor.const())
            else:
                return result

    def _unary(self) -> PolyElement:
        if self._accept('-'):
            return -self._unary()
        if self._accept('+'):
            return self._unary()
        return self._power()

    def _power(self) -> PolyElement:
        base = self._atom()
        if self._accept('^'):
            token = self.current
            if token.kind != 'number':
                self._fail("指数必须是非负整数")
            self._advance()
            return base ** int(token.value)
        return base

    def _atom(self) -> PolyElement:
        token = self.current
        if token.kind == 'number':
            self._advance()
            return self.ring.constant(int(token.value))
        if token.kind == 'name':
            self._advance()
            if token.value in self.ring.variables:
                return self.ring.gen(token.value)
            if token.value == self.ring.field.parameter:
                return self.ring.base.ground_new(self.ring.field.parameter_element())
            raise UnknownVariableError(token.value, self.text, token.position)
        if self._accept('('):
            inner = self._expr()
            if not self._accept(')'):
                self._fail("缺少右括号")
            return inner
        if token.kind == 'end':
            self._fail("表达式意外结束")
        self._fail(f"意外的记号 {token.value!r}")


def parse_polynomial(text: str, ring) -> PolyElement:
    """解析多项式表达式

    Args:
        text: 表达式文本，支持 + - * / ^ ** 与括号
        ring: 多项式环上下文

    Returns:
        规范形式的多项式

    Raises:
        PolynomialSyntaxError: 语法错误（带位置）
        UnknownVariableError: 未声明的变量
    """
    return _Parser(text, ring).parse()


def format_monomial(monom, variables) -> str:
    factors = []
    for name, exp in zip(variables, monom):
        if exp == 1:
            factors.append(name)
        elif exp > 1:
            factors.append(f"{name}^{exp}")
    return '*'.join(factors)


def format_polynomial(poly: PolyElement, ring) -> str:
    """格式化多项式

    项按分次反字典序降序排列；输出可被 ``parse_polynomial`` 读回。
    """
    if not poly:
        return "0"
    poly = ring.canonical(poly)
    pieces = []
    for monom, coeff in poly.terms():
        monomial_text = format_monomial(monom, ring.variables)
        if ring.field.is_parametric:
            coeff_text = ring.field.format_element(coeff)
            negative = False
            if not monomial_text:
                term = f"({coeff_text})" if ' ' in coeff_text else coeff_text
            elif coeff_text == "1":
                term = monomial_text
            elif coeff_text == "-1":
                term = f"-{monomial_text}"
            else:
                wrapped = f"({coeff_text})" if ' ' in coeff_text or '/' in coeff_text else coeff_text
                term = f"{wrapped}*{monomial_text}"
            if term.startswith('-'):
                negative, term = True, term[1:]
        else:
            negative = coeff < 0
            magnitude = format_rational(-coeff if negative else coeff)
            if not monomial_text:
                term = magnitude
            elif magnitude == "1":
                term = monomial_text
            else:
                term = f"{magnitude}*{monomial_text}"
        pieces.append((negative, term))
    first_negative, first = pieces[0]
    text = f"-{first}" if first_negative else first
    for negative, term in pieces[1:]:
        text += f" - {term}" if negative else f" + {term}"
    return text
