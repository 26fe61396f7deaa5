"""输入文档模块

解析分节的纯文本输入格式::

    # 注释
    vars x y z w
    param t
    s 2
    matrix
    x, y, z
    y, z, w + t*x
    options seed=7 bound=50 samples=1/2,1/3 mode=generic

所有错误都带行号。
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..algebra.matrix import PolyMatrix
from ..algebra.parser import parse_polynomial
from ..algebra.ring import IDENTIFIER, PolynomialRing
from ..errors import InputDocumentError, MatrixIndexError
from ..family.family import DeterminantalFamily
from ..model.determinantal import DeterminantalGerm, build_germ

KEYWORDS = ('vars', 'param', 's', 'matrix', 'options')
OPTION_KEYS = ('seed', 'bound', 'samples', 'mode')


class DocumentOptions(BaseModel):
    """文档 options 行中的分析选项（未给出的项为 None）"""

    model_config = ConfigDict(frozen=True)

    seed: Optional[int] = None
    bound: Optional[int] = None
    samples: Optional[List[str]] = None
    mode: Optional[str] = None

    def as_config(self) -> Dict[str, object]:
        """转换为配置键到值的映射，只包含给出的项"""
        keys = {
            'seed': 'analysis.seed',
            'bound': 'analysis.coefficient_bound',
            'samples': 'analysis.samples',
            'mode': 'analysis.mode',
        }
        return {keys[name]: value for name, value in self.model_dump().items() if value is not None}


class InputDocument(BaseModel):
    """解析后的输入文档"""

    model_config = ConfigDict(frozen=True)

    variables: List[str]
    parameter: Optional[str] = None
    s: int
    rows: List[List[str]]
    row_lines: List[int] = Field(default_factory=list)
    options: DocumentOptions = Field(default_factory=DocumentOptions)
    text: str = ''

    @property
    def is_family(self) -> bool:
        return self.parameter is not None


def _split_row(line: str) -> List[str]:
    return [entry.strip() for entry in line.split(',')]


def _parse_options(body: str, line: int) -> DocumentOptions:
    values: Dict[str, object] = {}
    for item in body.split():
        key, sep, value = item.partition('=')
        if not sep or key not in OPTION_KEYS:
            raise InputDocumentError(f"无法识别的选项 {item!r}（可用: {', '.join(OPTION_KEYS)}）", line)
        if key in values:
            raise InputDocumentError(f"选项 {key} 重复", line)
        try:
            if key in ('seed', 'bound'):
                values[key] = int(value)
            elif key == 'samples':
                values[key] = [str(Fraction(v)) for v in value.split(',') if v]
            else:
                if value not in ('generic', 'sampled'):
                    raise ValueError(value)
                values[key] = value
        except (ValueError, ZeroDivisionError):
            raise InputDocumentError(f"选项 {key} 的值无效: {value!r}", line) from None
    return DocumentOptions(**values)


def parse_input_document(text: str) -> InputDocument:
    """解析输入文档文本

    Args:
        text: 文档全文

    Returns:
        输入文档

    Raises:
        InputDocumentError: 结构错误（带行号）
    """
    fields: Dict[str, object] = {}
    rows: List[List[str]] = []
    row_lines: List[int] = []
    in_matrix = False

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        keyword, _, body = line.partition(' ')
        body = body.strip()
        if keyword not in KEYWORDS:
            if not in_matrix:
                raise InputDocumentError(f"无法识别的行: {line!r}", number)
            rows.append(_split_row(line))
            row_lines.append(number)
            continue
        in_matrix = False
        if keyword in fields or (keyword == 'matrix' and rows):
            raise InputDocumentError(f"节 {keyword} 重复", number)
        if keyword == 'vars':
            names = body.split()
            if not names:
                raise InputDocumentError("vars 至少需要一个变量", number)
            for name in names:
                if not IDENTIFIER.match(name):
                    raise InputDocumentError(f"非法变量名 {name!r}", number)
            if len(set(names)) != len(names):
                raise InputDocumentError("变量名重复", number)
            fields['vars'] = names
        elif keyword == 'param':
            if not IDENTIFIER.match(body):
                raise InputDocumentError(f"非法参数名 {body!r}", number)
            fields['param'] = body
        elif keyword == 's':
            try:
                fields['s'] = int(body)
            except ValueError:
                raise InputDocumentError(f"s 必须是整数: {body!r}", number) from None
        elif keyword == 'matrix':
            if body:
                raise InputDocumentError("matrix 行之后逐行给出矩阵", number)
            fields['matrix'] = number
            in_matrix = True
        else:
            fields['options'] = _parse_options(body, number)

    for required in ('vars', 's', 'matrix'):
        if required not in fields:
            raise InputDocumentError(f"缺少 {required} 节")
    if not rows:
        raise InputDocumentError("矩阵没有任何行", fields['matrix'])
    width = len(rows[0])
    for row, number in zip(rows, row_lines):
        if len(row) != width:
            raise InputDocumentError(f"矩阵各行长度不一致（应为 {width} 列，实际 {len(row)} 列）", number)
        if any(not entry for entry in row):
            raise InputDocumentError("矩阵元素不能为空", number)
    parameter = fields.get('param')
    if parameter is not None and parameter in fields['vars']:
        raise InputDocumentError(f"参数 {parameter} 不能同时是变量")

    return InputDocument(
        variables=fields['vars'],
        parameter=parameter,
        s=fields['s'],
        rows=rows,
        row_lines=row_lines,
        options=fields.get('options', DocumentOptions()),
        text=text,
    )


def _check_s(doc: InputDocument, shape: Tuple[int, int]) -> None:
    if not 1 <= doc.s <= min(shape):
        raise MatrixIndexError(f"s = {doc.s} 超出范围 1..{min(shape)}")


def build_matrix(doc: InputDocument) -> PolyMatrix:
    """在声明的变量（及参数）上解析矩阵元素

    Raises:
        InputDocumentError: 元素语法错误或出现未声明变量（带行号）
    """
    names = doc.variables + ([doc.parameter] if doc.parameter else [])
    ring = PolynomialRing(names)
    entries = []
    for row, number in zip(doc.rows, doc.row_lines):
        parsed = []
        for entry in row:
            try:
                parsed.append(parse_polynomial(entry, ring))
            except InputDocumentError as e:
                raise InputDocumentError(e.message, number) from e
        entries.append(parsed)
    matrix = PolyMatrix.from_rows(entries, ring)
    _check_s(doc, matrix.shape)
    return matrix


def load_germ(doc: InputDocument) -> DeterminantalGerm:
    """由无参数文档构造行列式芽

    Raises:
        InputDocumentError: 文档声明了参数
    """
    if doc.is_family:
        raise InputDocumentError("文档声明了参数，请使用 family 子命令")
    return build_germ(build_matrix(doc), doc.s)


def load_family(doc: InputDocument) -> DeterminantalFamily:
    """由带参数文档构造保持原点的行列式族

    Raises:
        InputDocumentError: 文档没有声明参数
        NotOriginPreservingError: 族不保持原点
    """
    if not doc.is_family:
        raise InputDocumentError("文档没有声明参数，请使用 analyze 子命令")
    return DeterminantalFamily(build_matrix(doc), doc.s, doc.parameter, enforce_origin_preserving=True)
