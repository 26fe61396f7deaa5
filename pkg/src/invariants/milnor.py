"""Milnor 数模块

超曲面与 ICIS 的 Milnor 数、单项式曲线的 Milnor 数，以及超曲面的
Teissier mu* 序列，用作交叉校验。
"""

from functools import reduce
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from ..algebra.matrix import jacobian_matrix
from ..algebra.ring import PolynomialRing
from ..engine.hilbert import INFINITE
from ..engine.ideal import Ideal
from ..engine.operations import local_quotient_dimension
from ..errors import CurveExponentsError, NonIsolatedSingularityError, OriginNotOnGermError
from ..utils.logger import get_logger
from .genericity import GenericityContext, RandomSource

logger = get_logger(__name__)


def _finite(value, what: str) -> int:
    if value == INFINITE:
        raise NonIsolatedSingularityError(f"{what} 不是孤立奇点（局部商空间维数无限）")
    return int(value)


def milnor_hypersurface(g: PolyElement, ring: Optional[PolynomialRing] = None) -> int:
    """超曲面的 Milnor 数 dim O/<dg/dx_1, ..., dg/dx_N>

    Args:
        g: 在原点为零的多项式
        ring: 环上下文，缺省时由 g 推出

    Raises:
        OriginNotOnGermError: g(0) != 0
        NonIsolatedSingularityError: 奇点不孤立
    """
    ring = ring or PolynomialRing.of(g)
    g = ring.embed(g)
    if not ring.vanishes_at_origin(g):
        raise OriginNotOnGermError(f"多项式在原点不为零: {ring.format(g)}")
    jacobian = Ideal([g.diff(x) for x in ring.gens], ring)
    return _finite(local_quotient_dimension(jacobian), ring.format(g))


def milnor_icis_le_greuel(generators: Sequence[PolyElement], ring: Optional[PolynomialRing] = None) -> int:
    """ICIS 的 Milnor 数（Lê-Greuel 递推）

    mu(g_1..g_c) + mu(g_1..g_{c-1}) = dim O/(<g_1..g_{c-1}> + Jac(g_1..g_c) 的 c 阶子式)

    Raises:
        ValueError: 生成元为空
        NonIsolatedSingularityError: 某一截断不是孤立完全交
    """
    if not generators:
        raise ValueError("ICIS 至少需要一个方程")
    ring = ring or PolynomialRing.of(generators[0])
    gens = [ring.embed(g) for g in generators]
    if len(gens) == 1:
        return milnor_hypersurface(gens[0], ring)
    for g in gens:
        if not ring.vanishes_at_origin(g):
            raise OriginNotOnGermError(f"多项式在原点不为零: {ring.format(g)}")
    c = len(gens)
    jacobian = jacobian_matrix(gens, ring)
    total_ideal = Ideal(gens[:-1], ring).with_generators(jacobian.minors(c))
    total = _finite(local_quotient_dimension(total_ideal), "Lê-Greuel 理想")
    return total - milnor_icis_le_greuel(gens[:-1], ring)


def milnor_monomial_curve(exponents: Sequence[int]) -> int:
    """单项式曲线 t -> (t^a_1, ..., t^a_k) 的 Milnor 数 2 * delta

    delta 为数值半群的空隙个数。

    Raises:
        CurveExponentsError: 指数为空、非正或 gcd != 1
    """
    if not exponents or any(e < 1 for e in exponents):
        raise CurveExponentsError(f"指数必须是正整数: {list(exponents)}")
    if reduce(gcd, exponents) != 1:
        raise CurveExponentsError(f"指数的最大公约数必须为 1: {list(exponents)}")
    smallest = min(exponents)
    members = [True]
    gaps = 0
    run = 0
    n = 0
    while run < smallest:
        n += 1
        member = any(n >= e and members[n - e] for e in exponents)
        members.append(member)
        if member:
            run += 1
        else:
            run = 0
            gaps += 1
    return 2 * gaps


def generic_section_milnor(
    generators: Sequence[PolyElement],
    ctx: GenericityContext,
    ring: Optional[PolynomialRing] = None
) -> int:
    """mu(X ∩ H)，H 为过原点的一般超平面"""
    ring = ring or PolynomialRing.of(generators[0])

    def compute(source: RandomSource) -> int:
        return milnor_icis_le_greuel(list(generators) + [source.linear_form(ring)], ring)

    return ctx.stable_value(f"mu(X∩H) c={len(generators)}", compute)


def restrict_to_subspace(
    g: PolyElement,
    ring: PolynomialRing,
    directions: Sequence[Sequence],
) -> Tuple[PolyElement, PolynomialRing]:
    """把 g 限制到由列向量张成的线性子空间 x = M y

    Args:
        g: 多项式
        ring: g 的环上下文
        directions: N x k 矩阵（行对应 x_i）

    Returns:
        (限制后的多项式, k 变量环上下文)
    """
    k = len(directions[0])
    names = [f"_s{j + 1}" for j in range(k)]
    sub = PolynomialRing(names, ring.field)
    images = []
    for row in directions:
        form = sub.zero
        for coeff, gen in zip(row, sub.gens):
            form += gen * sub.field.from_rational(coeff)
        images.append(form)
    powers: Dict[tuple, PolyElement] = {}
    result = sub.zero
    for monom, coeff in ring.embed(g).iterterms():
        term = sub.base.ground_new(coeff)
        for index, exponent in enumerate(monom):
            if exponent:
                key = (index, exponent)
                if key not in powers:
                    powers[key] = images[index] ** exponent
                term = term * powers[key]
        result += term
    return result, sub


def mu_star_sequence(g: PolyElement, ctx: GenericityContext, ring: Optional[PolynomialRing] = None) -> List[int]:
    """Teissier 序列 (mu^(N), ..., mu^(1))

    mu^(k) 为 g 限制到过原点的一般 k 维线性子空间后的 Milnor 数。
    """
    ring = ring or PolynomialRing.of(g)
    g = ring.embed(g)
    sequence = [milnor_hypersurface(g, ring)]
    for k in range(ring.ngens - 1, 0, -1):
        def compute(source: RandomSource, k: int = k) -> int:
            restricted, sub = restrict_to_subspace(g, ring, source.matrix(ring.ngens, k))
            return milnor_hypersurface(restricted, sub)

        sequence.append(ctx.stable_value(f"mu^({k})", compute))
    logger.info(f"mu* = {tuple(sequence)}")
    return sequence
