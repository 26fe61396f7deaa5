"""多项式矩阵模块

提供多项式矩阵、子式行列式（无分数 Bareiss 消元，k <= 3 时用 Laplace 展开）
以及雅可比矩阵的构造。
"""

from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement

from ..errors import MatrixIndexError
from ..utils.logger import get_logger
from .ring import PolynomialRing

logger = get_logger(__name__)

LAPLACE_LIMIT = 3


class PolyMatrix:
    """多项式矩阵

    构造后不可变；所有元素共享同一个环上下文。输入矩阵的约定 m <= n
    由 ``from_rows`` 负责（必要时转置），内部构造的雅可比矩阵保留原形状。

    Attributes:
        ring: 环上下文
        rows: 行数
        cols: 列数
    """

    def __init__(self, entries: Sequence[Sequence[PolyElement]], ring: PolynomialRing):
        if not entries or not entries[0]:
            raise MatrixIndexError("矩阵不能为空")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise MatrixIndexError("矩阵各行长度不一致")
        self.ring = ring
        self._entries: Tuple[Tuple[PolyElement, ...], ...] = tuple(
            tuple(ring.canonical(entry) for entry in row) for row in entries
        )
        self.rows = len(self._entries)
        self.cols = width

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence[PolyElement]], ring: PolynomialRing) -> 'PolyMatrix':
        """按输入约定构造矩阵，行数大于列数时转置"""
        matrix = cls(entries, ring)
        if matrix.rows > matrix.cols:
            logger.info(f"输入矩阵为 {matrix.rows}x{matrix.cols}，按 m <= n 约定转置")
            return matrix.transpose()
        return matrix

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def entry(self, i: int, j: int) -> PolyElement:
        return self._entries[i][j]

    def row(self, i: int) -> Tuple[PolyElement, ...]:
        return self._entries[i]

    def to_rows(self) -> List[List[PolyElement]]:
        return [list(row) for row in self._entries]

    def entries(self) -> List[PolyElement]:
        return [entry for row in self._entries for entry in row]

    def transpose(self) -> 'PolyMatrix':
        return PolyMatrix([list(column) for column in zip(*self._entries)], self.ring)

    def stack(self, extra_rows: Sequence[Sequence[PolyElement]]) -> 'PolyMatrix':
        """在下方追加若干行"""
        return PolyMatrix(self.to_rows() + [list(row) for row in extra_rows], self.ring)

    def map(self, fn) -> 'PolyMatrix':
        return PolyMatrix([[fn(entry) for entry in row] for row in self._entries], self.ring)

    def minor_determinant(self, rows: Sequence[int], cols: Sequence[int]) -> PolyElement:
        """选定子矩阵的精确行列式

        Args:
            rows: 行下标（从0开始）
            cols: 列下标（从0开始）

        Returns:
            子式多项式

        Raises:
            MatrixIndexError: 下标越界、重复或行列数不一致
        """
        rows, cols = list(rows), list(cols)
        if len(rows) != len(cols):
            raise MatrixIndexError(f"行数 {len(rows)} 与列数 {len(cols)} 不一致")
        if not rows:
            raise MatrixIndexError("子式阶数必须为正")
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise MatrixIndexError("子式下标重复")
        if any(not 0 <= i < self.rows for i in rows) or any(not 0 <= j < self.cols for j in cols):
            raise MatrixIndexError(f"子式下标越界: rows={rows}, cols={cols}, 形状 {self.shape}")
        block = [[self._entries[i][j] for j in cols] for i in rows]
        if len(block) <= LAPLACE_LIMIT:
            return laplace_determinant(block, self.ring)
        return bareiss_determinant(block, self.ring)

    def minors(self, size: int) -> List[PolyElement]:
        """按行下标、列下标的字典序列出全部 size 阶子式（保留重复）

        Raises:
            MatrixIndexError: size 超出范围
        """
        if not 1 <= size <= min(self.rows, self.cols):
            raise MatrixIndexError(f"子式阶数 {size} 超出范围 1..{min(self.rows, self.cols)}")
        return [
            self.minor_determinant(rows, cols)
            for rows in combinations(range(self.rows), size)
            for cols in combinations(range(self.cols), size)
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.ring == other.ring and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.ring, self._entries))

    def __repr__(self) -> str:
        body = '; '.join(', '.join(self.ring.format(e) for e in row) for row in self._entries)
        return f"PolyMatrix[{body}]"


def laplace_determinant(block: Sequence[Sequence[PolyElement]], ring: PolynomialRing) -> PolyElement:
    """按第一行 Laplace 展开"""
    size = len(block)
    if size == 1:
        return block[0][0]
    if size == 2:
        return block[0][0] * block[1][1] - block[0][1] * block[1][0]
    total = ring.zero
    for j in range(size):
        if not block[0][j]:
            continue
        sub = [[row[k] for k in range(size) if k != j] for row in block[1:]]
        term = block[0][j] * laplace_determinant(sub, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


def bareiss_determinant(block: Sequence[Sequence[PolyElement]], ring: PolynomialRing) -> PolyElement:
    """无分数 Bareiss 消元（sympy DomainMatrix，多项式环上精确整除）"""
    domain = ring.base.to_domain()
    size = len(block)
    matrix = DomainMatrix([list(row) for row in block], (size, size), domain)
    return ring.canonical(matrix.det())


def minors_ideal_generators(matrix: PolyMatrix, s: int) -> List[PolyElement]:
    """s 阶子式生成元

    Args:
        matrix: 多项式矩阵（m <= n）
        s: 子式阶数，1 <= s <= m

    Returns:
        C(m,s)*C(n,s) 个子式，按下标字典序排列，保留重复

    Raises:
        MatrixIndexError: s 超出范围
    """
    if not 1 <= s <= matrix.rows:
        raise MatrixIndexError(f"s = {s} 超出范围 1..{matrix.rows}")
    return matrix.minors(s)


def jacobian_matrix(
    polys: Sequence[PolyElement],
    ring: PolynomialRing,
    variables: Optional[Sequence[str]] = None
) -> PolyMatrix:
    """雅可比矩阵 (d p_i / d x_j)

    Args:
        polys: 多项式列表（作为行）
        ring: 环上下文
        variables: 求导变量，默认全部变量
    """
    names = list(variables) if variables is not None else list(ring.variables)
    gens = [ring.gen(name) for name in names]
    rows = [[ring.canonical(p).diff(gen) for gen in gens] for p in polys]
    return PolyMatrix(rows, ring)
