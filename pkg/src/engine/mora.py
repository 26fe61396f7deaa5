"""Mora 切锥算法模块

在局部序下计算弱正规形式与标准基，实现原点处局部环中的计算。
"""

import heapq
import logging
from typing import List, Sequence, Tuple

from sympy.polys.rings import PolyElement

from ..utils.logger import get_logger, log_with_context
from .deadline import check_deadline
from .hilbert import divides

logger = get_logger(__name__)


def ecart(poly: PolyElement) -> int:
    """ecart = 总次数 - 首项次数"""
    return max(sum(m) for m in poly.itermonoms()) - sum(poly.LM)


def _reduce_step(h: PolyElement, g: PolyElement) -> PolyElement:
    ring = h.ring
    lm_h, lc_h = h.LT
    lm_g, lc_g = g.LT
    factor = (ring.monomial_div(lm_h, lm_g), ring.domain.quo(lc_h, lc_g))
    return h - g.mul_term(factor)


def mora_normal_form(poly: PolyElement, basis: Sequence[PolyElement]) -> PolyElement:
    """Mora 弱正规形式

    返回 h，使得存在局部单位 u 满足 u*poly - h 属于 basis 生成的理想，
    且 h 为零或其首项不被任何 basis 首项整除。

    Args:
        poly: 局部序环中的多项式
        basis: 同一环中的多项式
    """
    h = poly
    reducers: List[PolyElement] = [g for g in basis if g]
    steps = 0
    while h:
        steps += 1
        if steps % 256 == 0:
            check_deadline("Mora正规形式")
        lm = h.LM
        candidates = [g for g in reducers if divides(g.LM, lm)]
        if not candidates:
            return h
        g = min(candidates, key=ecart)
        if ecart(g) > ecart(h):
            reducers.append(h)
        h = _reduce_step(h, g)
    return h


def _s_polynomial(f: PolyElement, g: PolyElement) -> PolyElement:
    ring = f.ring
    lcm = ring.monomial_lcm(f.LM, g.LM)
    return f.mul_monom(ring.monomial_div(lcm, f.LM)) - g.mul_monom(ring.monomial_div(lcm, g.LM))


def minimal_basis(basis: Sequence[PolyElement]) -> List[PolyElement]:
    """去掉首项被其他元素首项整除的元素"""
    ordered = sorted(basis, key=lambda p: (sum(p.LM), p.LM))
    kept: List[PolyElement] = []
    for p in ordered:
        if not any(divides(q.LM, p.LM) for q in kept):
            kept.append(p)
    return kept


def local_standard_basis(generators: Sequence[PolyElement]) -> Tuple[PolyElement, ...]:
    """局部序下的标准基

    采用 Buchberger 型配对循环，约化使用 Mora 弱正规形式，配对按
    lcm 次数从低到高处理。结果为首一多项式的极小标准基；理想在
    原点局部为单位理想时返回 (1,)。

    Args:
        generators: 局部序 sympy 环中的生成元
    """
    basis: List[PolyElement] = []
    for g in generators:
        if g:
            basis.append(g.monic())
    if not basis:
        return ()
    ring = basis[0].ring
    if any(sum(g.LM) == 0 for g in basis):
        return (ring.one,)

    queue: List[Tuple[int, int, int]] = []

    def push_pairs(new_index: int) -> None:
        for k in range(new_index):
            lcm = ring.monomial_lcm(basis[k].LM, basis[new_index].LM)
            heapq.heappush(queue, (sum(lcm), k, new_index))

    for index in range(1, len(basis)):
        push_pairs(index)

    processed = 0
    while queue:
        processed += 1
        if processed % 16 == 0:
            check_deadline("局部标准基")
        _, i, j = heapq.heappop(queue)
        remainder = mora_normal_form(_s_polynomial(basis[i], basis[j]), basis)
        if not remainder:
            continue
        remainder = remainder.monic()
        if sum(remainder.LM) == 0:
            return (ring.one,)
        basis.append(remainder)
        push_pairs(len(basis) - 1)

    result = tuple(minimal_basis(basis))
    log_with_context(logger, logging.DEBUG, "局部标准基完成", pairs=processed, size=len(result))
    return result
