"""单项式序模块

定义全局分次反字典序、局部负分次反字典序和块消去序，
并给出可被 sympy 环缓存使用的序对象。
"""

from enum import Enum
from typing import Tuple

from sympy.polys.orderings import MonomialOrder as SympyMonomialOrder
from sympy.polys.orderings import grevlex

Monomial = Tuple[int, ...]


class NegDegRevLexOrder(SympyMonomialOrder):
    """局部序 ds：总次数越低越大，同次数按分次反字典序"""

    alias = 'negdegrevlex'
    is_global = False

    def __call__(self, monomial: Monomial):
        return (-sum(monomial), tuple(reversed([-m for m in monomial])))


class BlockEliminationOrder(SympyMonomialOrder):
    """块消去序：前 split 个变量的分次反字典序优先，其余变量的分次反字典序次之"""

    is_global = True

    def __init__(self, split: int):
        self.split = split

    @property
    def alias(self) -> str:
        return f'block({self.split})'

    def __call__(self, monomial: Monomial):
        return (grevlex(monomial[:self.split]), grevlex(monomial[self.split:]))

    def __repr__(self) -> str:
        return f"BlockEliminationOrder({self.split})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BlockEliminationOrder) and other.split == self.split

    def __hash__(self) -> int:
        return hash(('block', self.split))


negdegrevlex = NegDegRevLexOrder()


class OrderKind(str, Enum):
    GLOBAL_DEGREVLEX = 'global_degrevlex'
    LOCAL_NEGDEGREVLEX = 'local_negdegrevlex'
    BLOCK_ELIMINATION = 'block_elimination'


class MonomialOrder:
    """单项式序描述

    Attributes:
        kind: 序的类型
        split: 块消去序中被消去变量的个数
    """

    def __init__(self, kind: OrderKind, split: int = 0):
        if kind == OrderKind.BLOCK_ELIMINATION and split < 1:
            raise ValueError("块消去序需要正的分块位置")
        self.kind = kind
        self.split = split if kind == OrderKind.BLOCK_ELIMINATION else 0

    @property
    def is_global(self) -> bool:
        return self.kind != OrderKind.LOCAL_NEGDEGREVLEX

    @property
    def sympy_order(self) -> SympyMonomialOrder:
        if self.kind == OrderKind.GLOBAL_DEGREVLEX:
            return grevlex
        if self.kind == OrderKind.LOCAL_NEGDEGREVLEX:
            return negdegrevlex
        return BlockEliminationOrder(self.split)

    @classmethod
    def block_elimination(cls, split: int) -> 'MonomialOrder':
        return cls(OrderKind.BLOCK_ELIMINATION, split)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialOrder):
            return NotImplemented
        return (self.kind, self.split) == (other.kind, other.split)

    def __hash__(self) -> int:
        return hash((self.kind, self.split))

    def __repr__(self) -> str:
        return f"MonomialOrder({self.kind.value}{', ' + str(self.split) if self.split else ''})"


GLOBAL_DEGREVLEX = MonomialOrder(OrderKind.GLOBAL_DEGREVLEX)
LOCAL_NEGDEGREVLEX = MonomialOrder(OrderKind.LOCAL_NEGDEGREVLEX)
