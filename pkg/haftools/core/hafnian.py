# -*- coding: utf-8 -*-
"""
Hafnian 基准计算模块

按定义枚举配对划分求 hafnian，以及和式展开 Hf(A+B) = Σ Hf(A[α])·Hf(B{α})。
所有快速公式都以这里的结果作为对照。
"""

import logging
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from .matrix import SymmetricMatrix, submatrix_drop, submatrix_keep
from .ring import RingElement, ring_pow
from ..utils.constants import MAX_SUM_EXPANSION_ORDER
from ..utils.exceptions import OrderError

logger = logging.getLogger(__name__)

PairPartition = Tuple[Tuple[int, int], ...]


def _check_even(n: int) -> None:
    if n < 0 or n % 2:
        raise OrderError(f"hafnian 要求非负偶数阶，实际为 {n}")


def _pairings(items: List[int]) -> Iterator[List[Tuple[int, int]]]:
    # 最小的未配对下标总是下一对的第一个元素，每个划分恰好生成一次
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for index, partner in enumerate(rest):
        remaining = rest[:index] + rest[index + 1:]
        for tail in _pairings(remaining):
            yield [(first, partner)] + tail


def enumerate_pairings(n: int, first_partner: Optional[int] = None) -> Iterator[PairPartition]:
    """枚举 {1..n} 的全部无序配对划分

    Args:
        n: 非负偶数
        first_partner: 若给定，只枚举第一对为 (1, first_partner) 的划分；
            first_partner 取遍 2..n 时各片恰好拼成完整的枚举
    """
    _check_even(n)
    items = list(range(1, n + 1))
    if first_partner is None:
        for pairing in _pairings(items):
            yield tuple(pairing)
        return

    if not 2 <= first_partner <= n:
        raise OrderError(f"第一对的另一端必须在 2..{n} 内: {first_partner}")
    rest = [i for i in items[1:] if i != first_partner]
    for tail in _pairings(rest):
        yield ((1, first_partner),) + tuple(tail)


def _pairing_product(m: SymmetricMatrix, pairing: PairPartition) -> RingElement:
    result: RingElement = 1
    for i, j in pairing:
        factor = m.at(i - 1, j - 1)
        if not factor:
            return 0
        result = result * factor
    return result


def hafnian_bruteforce(m: SymmetricMatrix, first_partner: Optional[int] = None) -> RingElement:
    """按定义计算 Hf(M)；空矩阵的 hafnian 为 1"""
    _check_even(m.order)
    total: RingElement = 0
    for pairing in enumerate_pairings(m.order, first_partner):
        term = _pairing_product(m, pairing)
        if term:
            total = total + term
    return total


def hafnian_sum_expansion(a: SymmetricMatrix, b: SymmetricMatrix) -> RingElement:
    """按和式 Σ_k Σ_{α∈Q_{2k,n}} Hf(A[α])·Hf(B{α}) 计算 Hf(A+B)"""
    if a.order != b.order:
        raise OrderError(f"阶数不一致: {a.order} 与 {b.order}")
    n = a.order
    _check_even(n)
    if n > MAX_SUM_EXPANSION_ORDER:
        raise OrderError(f"和式展开枚举 2^n 个子集，阶数上限为 {MAX_SUM_EXPANSION_ORDER}，实际为 {n}")

    total: RingElement = 0
    indices = range(1, n + 1)
    for size in range(0, n + 1, 2):
        for alpha in combinations(indices, size):
            left = hafnian_bruteforce(submatrix_keep(a, alpha))
            if not left:
                continue
            right = hafnian_bruteforce(submatrix_drop(b, alpha))
            if right:
                total = total + left * right
    logger.debug(f"和式展开完成: n={n}")
    return total


def hafnian_scaled(m: SymmetricMatrix, c: RingElement) -> RingElement:
    """Hf(c·M) = c^{n/2}·Hf(M)"""
    _check_even(m.order)
    return ring_pow(c, m.order // 2) * hafnian_bruteforce(m)
