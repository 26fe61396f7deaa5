"""单项式理想组合模块

对首项理想（单项式理想）计算 Krull 维数、Hilbert 级数分子和标准单项式计数。
"""

import math
from itertools import combinations, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from .deadline import check_deadline

Monomial = Tuple[int, ...]

INFINITE = math.inf

_U_RING, _u = ring("u", ZZ)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(monomials: Iterable[Monomial]) -> List[Monomial]:
    """去掉被其他生成元整除的单项式，返回极小生成元（已排序）"""
    unique = sorted(set(tuple(m) for m in monomials), key=lambda m: (sum(m), m))
    minimal: List[Monomial] = []
    for mono in unique:
        if not any(divides(kept, mono) for kept in minimal):
            minimal.append(mono)
    return sorted(minimal)


def contains_one(monomials: Sequence[Monomial]) -> bool:
    return any(sum(m) == 0 for m in monomials)


def monomial_krull_dimension(monomials: Sequence[Monomial], nvars: int) -> int:
    """单项式理想的 Krull 维数

    即不含任何生成元支撑的最大变量子集的大小；单位理想返回 -1。
    """
    gens = minimalize(monomials)
    if contains_one(gens):
        return -1
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gens]
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            chosen = set(subset)
            if all(not support <= chosen for support in supports):
                return size
    return 0


def _colon_variable(gens: Sequence[Monomial], index: int, power: int) -> List[Monomial]:
    result = []
    for m in gens:
        reduced = list(m)
        reduced[index] = max(0, reduced[index] - power)
        result.append(tuple(reduced))
    return minimalize(result)


def _numerator(gens: Tuple[Monomial, ...], nvars: int, cache: Dict[Tuple[Monomial, ...], object]):
    """R/L 的 Hilbert 级数分子 K(u)，即 H(u) = K(u)/(1-u)^nvars"""
    if gens in cache:
        return cache[gens]
    check_deadline("Hilbert级数")
    if not gens:
        result = _U_RING.one
    elif contains_one(gens):
        result = _U_RING.zero
    else:
        supports = [frozenset(i for i, e in enumerate(m) if e) for m in gens]
        lonely = next(
            (k for k, support in enumerate(supports)
             if all(not (support & other) for j, other in enumerate(supports) if j != k)),
            None
        )
        if lonely is not None:
            rest = tuple(m for k, m in enumerate(gens) if k != lonely)
            result = (_U_RING.one - _u ** sum(gens[lonely])) * _numerator(rest, nvars, cache)
        else:
            # 以出现次数最多的变量为枢轴: K(L) = K(L + <x^e>) + u^e * K(L : x^e)
            counts = [sum(1 for m in gens if m[i]) for i in range(nvars)]
            pivot = max(range(nvars), key=lambda i: counts[i])
            exponents = sorted(m[pivot] for m in gens if m[pivot])
            power = exponents[(len(exponents) - 1) // 2]
            pure = tuple(power if i == pivot else 0 for i in range(nvars))
            with_pivot = tuple(minimalize(list(gens) + [pure]))
            colon = tuple(_colon_variable(gens, pivot, power))
            result = _numerator(with_pivot, nvars, cache) + _u ** power * _numerator(colon, nvars, cache)
    cache[gens] = result
    return result


def hilbert_series(monomials: Sequence[Monomial], nvars: int) -> Tuple[List[int], int]:
    """单项式理想商环的 Hilbert 级数 H(u) = Q(u)/(1-u)^dim

    Args:
        monomials: 单项式理想的生成元
        nvars: 变量个数

    Returns:
        (Q 的系数列表（按 u 的升幂）, dim)；单位理想返回 ([], -1)
    """
    gens = tuple(minimalize(monomials))
    if contains_one(gens):
        return [], -1
    numerator = _numerator(gens, nvars, {})
    dim = nvars
    one_minus_u = _U_RING.one - _u
    while dim > 0 and numerator.evaluate(_u, 1) == 0:
        numerator = numerator.exquo(one_minus_u)
        dim -= 1
    degree = numerator.degree() if numerator else 0
    return [int(numerator.coeff(_u ** k) if k else numerator.const()) for k in range(degree + 1)], dim


def multiplicity_from_leading_ideal(monomials: Sequence[Monomial], nvars: int) -> int:
    """由局部首项理想求 Hilbert-Samuel 重数 Q(1)；单位理想返回 0"""
    coefficients, dim = hilbert_series(monomials, nvars)
    if dim < 0:
        return 0
    return sum(coefficients)


def pure_power_bounds(monomials: Sequence[Monomial], nvars: int) -> Optional[List[int]]:
    """每个变量在理想中出现的最小纯幂次；若某变量没有纯幂则返回 None"""
    bounds: List[Optional[int]] = [None] * nvars
    for m in monomials:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            bounds[i] = m[i] if bounds[i] is None else min(bounds[i], m[i])
    if any(b is None for b in bounds):
        return None
    return bounds


def standard_monomials(monomials: Sequence[Monomial], nvars: int) -> Optional[List[Monomial]]:
    """不属于单项式理想的全部单项式（阶梯）；理想不是零维时返回 None"""
    gens = minimalize(monomials)
    if contains_one(gens):
        return []
    bounds = pure_power_bounds(gens, nvars)
    if bounds is None:
        return None
    staircase = []
    for index, exponent in enumerate(product(*(range(b) for b in bounds))):
        if index % 4096 == 0:
            check_deadline("阶梯计数")
        if not any(divides(g, exponent) for g in gens):
            staircase.append(exponent)
    return staircase


def count_standard_monomials(monomials: Sequence[Monomial], nvars: int):
    """阶梯中单项式的个数；不是零维时返回 INFINITE"""
    staircase = standard_monomials(monomials, nvars)
    if staircase is None:
        return INFINITE
    return len(staircase)
