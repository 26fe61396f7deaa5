"""理想模块

理想对象保存生成元，并按单项式序缓存 Gröbner 基或局部标准基。
"""

import logging
import threading
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from ..algebra.ring import PolynomialRing
from ..utils.logger import get_logger, log_with_context
from .buchberger import full_reduce, global_groebner_basis
from .deadline import check_deadline, task_deadline
from .mora import local_standard_basis
from .orders import GLOBAL_DEGREVLEX, LOCAL_NEGDEGREVLEX, MonomialOrder

logger = get_logger(__name__)


class Ideal:
    """多项式理想

    生成元在构造时规范化（去零、去重）；基的计算只修改本对象的缓存，
    缓存由锁保护，因此计算完成后可在线程间共享读取。

    Attributes:
        ring: 环上下文
        generators: 生成元（基础环中的多项式）
    """

    def __init__(self, generators: Iterable[PolyElement], ring: PolynomialRing):
        self.ring = ring
        unique = []
        seen = set()
        for g in generators:
            g = ring.embed(g)
            if g and g not in seen:
                seen.add(g)
                unique.append(g)
        self.generators: Tuple[PolyElement, ...] = tuple(unique)
        self._bases: Dict[MonomialOrder, Tuple[PolyElement, ...]] = {}
        self._lock = threading.Lock()

    @classmethod
    def unit(cls, ring: PolynomialRing) -> 'Ideal':
        return cls([ring.one], ring)

    @classmethod
    def maximal(cls, ring: PolynomialRing, variables: Optional[Sequence[str]] = None) -> 'Ideal':
        """由变量生成的理想（默认原点的极大理想）"""
        names = variables if variables is not None else ring.variables
        return cls([ring.gen(name) for name in names], ring)

    def basis(self, order: MonomialOrder = GLOBAL_DEGREVLEX) -> Tuple[PolyElement, ...]:
        """返回给定单项式序下的基（带缓存）

        全局序返回约化 Gröbner 基；局部序返回 Mora 标准基。
        基中的多项式属于该序对应的 sympy 环。
        """
        with self._lock:
            cached = self._bases.get(order)
            if cached is not None:
                return cached
            target = self.ring.sympy_ring(order.sympy_order)
            polys = [g.set_ring(target) for g in self.generators]
            with task_deadline():
                if not polys:
                    result: Tuple[PolyElement, ...] = ()
                elif order.is_global:
                    result = global_groebner_basis(polys)
                else:
                    result = local_standard_basis(polys)
                check_deadline("基计算")
            self._bases[order] = result
        log_with_context(
            logger, logging.DEBUG, "基计算完成",
            order=order.kind.value, vars=self.ring.ngens, gens=len(self.generators), size=len(result)
        )
        return result

    def groebner_basis(self) -> Tuple[PolyElement, ...]:
        return self.basis(GLOBAL_DEGREVLEX)

    def standard_basis(self) -> Tuple[PolyElement, ...]:
        return self.basis(LOCAL_NEGDEGREVLEX)

    def leading_monomials(self, order: MonomialOrder = GLOBAL_DEGREVLEX) -> Tuple[Tuple[int, ...], ...]:
        return tuple(g.LM for g in self.basis(order))

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        basis = self.groebner_basis()
        return len(basis) == 1 and basis[0] == basis[0].ring.one

    def is_locally_unit(self) -> bool:
        """理想在原点处的局部环中是否为单位理想（即 V(I) 不经过原点）"""
        return any(sum(g.LM) == 0 for g in self.standard_basis())

    def normal_form(self, poly: PolyElement, order: MonomialOrder = GLOBAL_DEGREVLEX) -> PolyElement:
        """全局序下关于约化 Gröbner 基的正规形式"""
        if not order.is_global:
            raise ValueError("正规形式只对全局序定义")
        basis = self.basis(order)
        target = self.ring.sympy_ring(order.sympy_order)
        poly = self.ring.embed(poly).set_ring(target)
        if not basis:
            return self.ring.canonical(poly)
        return self.ring.canonical(full_reduce(poly, basis))

    def contains(self, poly: PolyElement) -> bool:
        return not self.normal_form(poly)

    def __contains__(self, poly: PolyElement) -> bool:
        return self.contains(poly)

    def same_ideal(self, other: 'Ideal') -> bool:
        """比较两个理想是否相等（约化 Gröbner 基一致）"""
        if self.ring != other.ring:
            return False
        mine = {self.ring.canonical(g) for g in self.groebner_basis()}
        theirs = {other.ring.canonical(g) for g in other.groebner_basis()}
        return mine == theirs

    def with_generators(self, extra: Iterable[PolyElement]) -> 'Ideal':
        return Ideal(list(self.generators) + list(extra), self.ring)

    def __add__(self, other: 'Ideal') -> 'Ideal':
        if self.ring != other.ring:
            raise ValueError("理想不在同一个环中")
        return self.with_generators(other.generators)

    def __iter__(self) -> Iterator[PolyElement]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        shown = ', '.join(self.ring.format(g) for g in self.generators[:6])
        more = ', ...' if len(self.generators) > 6 else ''
        return f"Ideal<{shown}{more}> in {self.ring!r}"
