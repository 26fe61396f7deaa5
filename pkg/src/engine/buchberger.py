"""全局 Buchberger 算法模块

在全局单项式序下计算约化 Gröbner 基。配对循环与约化循环都会检查
当前任务的截止时间，因此 ``--timeout`` 可以中断全局计算。
"""

import heapq
import logging
from typing import List, Sequence, Set, Tuple

from sympy.polys.rings import PolyElement

from ..utils.logger import get_logger, log_with_context
from .deadline import check_deadline
from .hilbert import divides
from .mora import _s_polynomial, minimal_basis

logger = get_logger(__name__)


def full_reduce(poly: PolyElement, basis: Sequence[PolyElement]) -> PolyElement:
    """关于 basis 的完全约化（余式的每一项都不被任何首项整除）

    Args:
        poly: 全局序环中的多项式
        basis: 同一环中的非零多项式
    """
    ring = poly.ring
    remainder = ring.zero
    h = poly
    steps = 0
    while h:
        steps += 1
        if steps % 256 == 0:
            check_deadline("Gröbner约化")
        lm, lc = h.LT
        reducer = next((g for g in basis if divides(g.LM, lm)), None)
        if reducer is None:
            remainder += h.leading_term()
            h = h - h.leading_term()
            continue
        factor = (ring.monomial_div(lm, reducer.LM), ring.domain.quo(lc, reducer.LC))
        h = h - reducer.mul_term(factor)
    return remainder


def _coprime(a: Tuple[int, ...], b: Tuple[int, ...]) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def reduced_basis(basis: Sequence[PolyElement]) -> Tuple[PolyElement, ...]:
    """由 Gröbner 基得到唯一的约化 Gröbner 基（首一，按首项降序）"""
    minimal = [g.monic() for g in minimal_basis(basis)]
    reduced = []
    for index, g in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        reduced.append(full_reduce(g, others).monic())
    reduced.sort(key=lambda p: p.ring.order(p.LM), reverse=True)
    return tuple(reduced)


def global_groebner_basis(generators: Sequence[PolyElement]) -> Tuple[PolyElement, ...]:
    """全局序下的约化 Gröbner 基

    配对按 lcm 次数从低到高处理，使用 Buchberger 的互素判据与链判据
    跳过不必要的 S 多项式。

    Args:
        generators: 全局序 sympy 环中的生成元
    """
    basis: List[PolyElement] = [g.monic() for g in generators if g]
    if not basis:
        return ()
    ring = basis[0].ring
    if any(sum(g.LM) == 0 for g in basis):
        return (ring.one,)

    queue: List[Tuple[int, int, int]] = []
    done: Set[Tuple[int, int]] = set()

    def push_pairs(new_index: int) -> None:
        for k in range(new_index):
            lcm = ring.monomial_lcm(basis[k].LM, basis[new_index].LM)
            heapq.heappush(queue, (sum(lcm), k, new_index))

    def chain_criterion(i: int, j: int, lcm: Tuple[int, ...]) -> bool:
        for k in range(len(basis)):
            if k in (i, j) or not divides(basis[k].LM, lcm):
                continue
            if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
                return True
        return False

    for index in range(1, len(basis)):
        push_pairs(index)

    processed = 0
    skipped = 0
    while queue:
        check_deadline("Gröbner基")
        _, i, j = heapq.heappop(queue)
        lcm = ring.monomial_lcm(basis[i].LM, basis[j].LM)
        if _coprime(basis[i].LM, basis[j].LM) or chain_criterion(i, j, lcm):
            done.add((i, j))
            skipped += 1
            continue
        processed += 1
        done.add((i, j))
        remainder = full_reduce(_s_polynomial(basis[i], basis[j]), basis)
        if not remainder:
            continue
        remainder = remainder.monic()
        if sum(remainder.LM) == 0:
            return (ring.one,)
        basis.append(remainder)
        push_pairs(len(basis) - 1)

    result = reduced_basis(basis)
    log_with_context(logger, logging.DEBUG, "Gröbner基完成", pairs=processed, skipped=skipped, size=len(result))
    return result
