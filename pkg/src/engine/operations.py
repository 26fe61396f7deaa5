"""理想运算模块

提供 Gröbner/标准基入口以及商理想、饱和化、消去、交、Krull 维数、
局部商空间维数、Hilbert 级数与 Hilbert-Samuel 重数。
"""

import logging
from typing import Iterable, List, Sequence, Tuple, Union

from sympy.polys.rings import PolyElement

from ..algebra.ring import PolynomialRing
from ..errors import SaturationLimitError
from ..utils.logger import get_logger, log_with_context
from .deadline import check_deadline
from .hilbert import (
    INFINITE,
    count_standard_monomials,
    hilbert_series,
    monomial_krull_dimension,
    multiplicity_from_leading_ideal,
)
from .ideal import Ideal
from .orders import GLOBAL_DEGREVLEX, MonomialOrder

logger = get_logger(__name__)

SATURATION_CAP = 64

QuotientDimension = Union[int, float]


def groebner_basis(ideal: Ideal, order: MonomialOrder = GLOBAL_DEGREVLEX) -> List[PolyElement]:
    """约化 Gröbner 基（转换回基础环）

    Raises:
        ValueError: 传入局部序
    """
    if not order.is_global:
        raise ValueError("Gröbner 基需要全局序")
    return [ideal.ring.canonical(g) for g in ideal.basis(order)]


def standard_basis_local(ideal: Ideal) -> List[PolyElement]:
    """局部负分次反字典序下的标准基（多项式保留在局部序环中）"""
    return list(ideal.standard_basis())


def normal_form(poly: PolyElement, ideal: Ideal, order: MonomialOrder = GLOBAL_DEGREVLEX) -> PolyElement:
    return ideal.normal_form(poly, order)


def krull_dimension(ideal: Ideal) -> int:
    """V(I) 的维数，单位理想返回 -1"""
    if ideal.is_zero():
        return ideal.ring.ngens
    return monomial_krull_dimension(ideal.leading_monomials(GLOBAL_DEGREVLEX), ideal.ring.ngens)


def local_quotient_dimension(ideal: Ideal) -> QuotientDimension:
    """原点处局部环模理想的向量空间维数，非零维时返回 INFINITE"""
    leading = [g.LM for g in ideal.standard_basis()]
    return count_standard_monomials(leading, ideal.ring.ngens)


def hilbert_series_local(ideal: Ideal) -> Tuple[List[int], int]:
    """局部首项理想的 Hilbert 级数 (Q 的系数, 维数)"""
    leading = [g.LM for g in ideal.standard_basis()]
    return hilbert_series(leading, ideal.ring.ngens)


def hilbert_samuel_multiplicity(ideal: Ideal) -> int:
    """原点处的 Hilbert-Samuel 重数；V(I) 不经过原点时为 0"""
    leading = [g.LM for g in ideal.standard_basis()]
    return multiplicity_from_leading_ideal(leading, ideal.ring.ngens)


def eliminate(ideal: Ideal, variables: Iterable[str]) -> Ideal:
    """消去变量: I 与不含这些变量的子环的交

    采用块消去序，返回剩余变量环中的理想。

    Raises:
        ValueError: 试图消去全部变量
    """
    ring = ideal.ring
    targets = set(variables)
    eliminated = [v for v in ring.variables if v in targets]
    if not eliminated:
        return Ideal(ideal.generators, ring)
    remaining = [v for v in ring.variables if v not in targets]
    if not remaining:
        raise ValueError("不能消去全部变量")
    ordered = PolynomialRing(eliminated + remaining, ring.field)
    lifted = Ideal(ideal.generators, ordered)
    split = len(eliminated)
    basis = lifted.basis(MonomialOrder.block_elimination(split))
    kept = [g for g in basis if all(not any(m[:split]) for m in g.itermonoms())]
    target = ring.without_variables(eliminated)
    return Ideal(kept, target)


def intersect(first: Ideal, second: Ideal) -> Ideal:
    """两个理想的交，通过 t*I + (1-t)*J 消去 t 得到"""
    ring = first.ring
    if first.is_zero() or second.is_zero():
        return Ideal([], ring)
    aux = ring.fresh_name('t_aux')
    extended = ring.with_variables([aux], front=True)
    t = extended.gen(aux)
    generators = [t * extended.embed(f) for f in first.generators]
    generators += [(extended.one - t) * extended.embed(g) for g in second.generators]
    result = eliminate(Ideal(generators, extended), [aux])
    return Ideal(result.generators, ring)


def _quotient_by_element(ideal: Ideal, poly: PolyElement) -> Ideal:
    ring = ideal.ring
    poly = ring.embed(poly)
    meet = intersect(ideal, Ideal([poly], ring))
    return Ideal([g.exquo(poly) for g in meet.generators], ring)


def ideal_quotient(ideal: Ideal, divisor: Ideal) -> Ideal:
    """商理想 I : J = 交_g (I : g)"""
    ring = ideal.ring
    if divisor.is_zero():
        return Ideal.unit(ring)
    result = None
    for g in divisor.generators:
        check_deadline("商理想")
        part = _quotient_by_element(ideal, g)
        result = part if result is None else intersect(result, part)
    return result


def saturate_by_element(ideal: Ideal, poly: PolyElement) -> Ideal:
    """关于单个多项式的饱和化 I : g^oo = (I + <1 - u*g>) 消去 u"""
    ring = ideal.ring
    aux = ring.fresh_name('u_aux')
    extended = ring.with_variables([aux], front=True)
    u = extended.gen(aux)
    generators = [extended.embed(f) for f in ideal.generators]
    generators.append(extended.one - u * extended.embed(poly))
    result = eliminate(Ideal(generators, extended), [aux])
    return Ideal(result.generators, ring)


def saturation(ideal: Ideal, divisor: Ideal, cap: int = SATURATION_CAP) -> Ideal:
    """饱和化 I : J^oo

    主理想直接用 Rabinowitsch 技巧；一般情形迭代商理想直到
    I : J^k 与 I : J^(k+1) 的约化基一致。

    Raises:
        SaturationLimitError: 超过迭代上限
    """
    if len(divisor.generators) == 1:
        return saturate_by_element(ideal, divisor.generators[0])
    current = ideal
    for step in range(cap):
        check_deadline("饱和化")
        following = ideal_quotient(current, divisor)
        if following.same_ideal(current):
            log_with_context(logger, logging.DEBUG, "饱和化稳定", steps=step)
            return current
        current = following
    raise SaturationLimitError(cap)


def vanishes_only_at_origin(ideal: Ideal) -> bool:
    """判定 V(J) 是否包含于 {0}

    要求局部商空间维数有限，且 J 关于原点极大理想的饱和化为单位理想；
    后者按变量逐个检验 J : x_i^oo = <1>。
    """
    if ideal.is_unit():
        return True
    if local_quotient_dimension(ideal) == INFINITE:
        return False
    for gen in ideal.ring.gens:
        if not saturate_by_element(ideal, gen).is_unit():
            return False
    return True


def quotient_dimension_is_finite(value: QuotientDimension) -> bool:
    return value != INFINITE
