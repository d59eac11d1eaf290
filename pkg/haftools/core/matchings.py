# -*- coding: utf-8 -*-
"""
k 边匹配计数模块

μ_k(Γ(T_n)) 的四条独立计算途径：
• 暴力枚举（任意模板）
• 闭式公式（C_n、D_n）
• 递推（C_n、D_n）
• 生成函数截断级数展开
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import sympy as sp

from .matrix import Template, build_template
from .ring import binomial
from ..utils.constants import Method, TemplateKind
from ..utils.exceptions import BruteForceLimitError, HypothesisViolation, TemplateError
from ..utils.models import OpCounter
from ..utils.utils import ceil_div, floor_div

logger = logging.getLogger(__name__)

SYMBOL_X, SYMBOL_T = sp.symbols("x t")

# 生成函数分母中 t·(…) 的括号部分：{(x 次数, t 次数): 系数}
SERIES_STENCILS: Dict[TemplateKind, Dict[Tuple[int, int], int]] = {
    TemplateKind.C: {(0, 0): 1, (1, 2): 1, (2, 3): 1},               # 1 + x t^2 + x^2 t^3
    TemplateKind.D: {(0, 0): 1, (1, 1): 1, (1, 2): 1, (2, 3): 1},    # 1 + x t + x t^2 + x^2 t^3
}


def _check_named_kind(kind: TemplateKind) -> None:
    if kind not in SERIES_STENCILS:
        raise TemplateError(f"只支持 C 或 D 模板: {kind}")


# ==================== 数据类 ====================

@dataclass(frozen=True)
class MatchingTable:
    """μ_k(Γ(T_n)) 表，按 n 分行，第 n 行长度为 floor(n/2) + 1"""
    kind: TemplateKind
    max_order: int
    values: Tuple[Tuple[int, ...], ...]

    def get(self, n: int, k: int) -> int:
        """k 超出 floor(n/2) 时为 0"""
        if not 0 <= n <= self.max_order or k < 0:
            raise IndexError(f"表中无此位置: n={n}, k={k}")
        row = self.values[n]
        return row[k] if k < len(row) else 0

    def row(self, n: int) -> Tuple[int, ...]:
        return self.values[n]

    def max_k(self) -> int:
        return self.max_order // 2

    def as_grid(self) -> List[List[int]]:
        """行 k，列 n，补零为矩形"""
        return [
            [self.get(n, k) for n in range(self.max_order + 1)]
            for k in range(self.max_k() + 1)
        ]

    def diagonal(self, offset: int = 0) -> List[int]:
        """各行 k 的第 offset+1 个非零位置 n = 2k + offset 处的值"""
        return [
            self.get(2 * k + offset, k)
            for k in range(self.max_k() + 1)
            if 2 * k + offset <= self.max_order
        ]


@dataclass(frozen=True)
class SeriesTruncation:
    """截断到 t 次数 N 的二元幂级数，coefficients[n][k] 为 x^k t^n 的系数"""
    max_degree: int
    coefficients: Tuple[Tuple[int, ...], ...]

    def coefficient(self, n: int, k: int) -> int:
        if not 0 <= n <= self.max_degree:
            raise IndexError(f"超出截断次数: n={n}, N={self.max_degree}")
        row = self.coefficients[n]
        return row[k] if 0 <= k < len(row) else 0

    def to_table(self, kind: TemplateKind) -> MatchingTable:
        return MatchingTable(kind, self.max_degree, tuple(
            tuple(self.coefficient(n, k) for k in range(n // 2 + 1))
            for n in range(self.max_degree + 1)
        ))


# ==================== 暴力枚举 ====================

def matching_counts_bruteforce(t: Template) -> List[int]:
    """一次枚举得到全部 μ_k，下标 k = 0..floor(n/2)"""
    edges = t.edges()
    counts = [0] * (t.order // 2 + 1)

    def visit(start: int, used: int, size: int) -> None:
        counts[size] += 1
        for index in range(start, len(edges)):
            i, j = edges[index]
            mask = (1 << i) | (1 << j)
            if used & mask:
                continue
            visit(index + 1, used | mask, size + 1)

    visit(0, 0, 0)
    return counts


def mu_bruteforce(t: Template, k: int) -> int:
    """k 条两两不相邻的边组成的子集个数；μ_0 = 1"""
    if k < 0:
        return 0
    counts = matching_counts_bruteforce(t)
    return counts[k] if k < len(counts) else 0


# ==================== 闭式公式 ====================

def mu_C_closed(n: int, k: int, counter: Optional[OpCounter] = None,
                strict_bounds: bool = True) -> int:
    """μ_k(Γ(C_n)) 闭式

    k ≤ floor(n/2) 且非 (k 为奇数且 n = 2k) 时为二项式和，否则为 0。
    strict_bounds=False 时 i 取 0..k，依靠二项式越界为 0 的约定。
    """
    if k < 0 or k > floor_div(n, 2) or (k % 2 == 1 and n == 2 * k):
        return 0
    if strict_bounds:
        lower = max(0, ceil_div(3 * k - n, 2))
        upper = floor_div(k, 2)
    else:
        lower, upper = 0, k
    total = 0
    for i in range(lower, upper + 1):
        if n - 2 * k + i < 0:
            continue
        total += binomial(n - 2 * k + i, k - i, counter) * binomial(k - i, i, counter)
    return total


def mu_D_closed(n: int, k: int, counter: Optional[OpCounter] = None) -> int:
    """μ_k(Γ(D_n)) 闭式（二重二项式和）；k > floor(n/2) 时为 0"""
    if k < 0 or k > floor_div(n, 2):
        return 0
    total = 0
    for i in range(0, min(k, floor_div(n - k, 2)) + 1):
        for p in range(max(0, i + 2 * k - n), min(i, k - i) + 1):
            total += (binomial(n - k - i, k - p, counter)
                      * binomial(k - p, i, counter)
                      * binomial(i, p, counter))
    return total


# ==================== 递推 ====================

def _recurrence_table(kind: TemplateKind, max_order: int) -> MatchingTable:
    rows: List[List[int]] = []

    def value(n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n // 2:
            return 0
        return rows[n][k]

    for n in range(max_order + 1):
        row = [0] * (n // 2 + 1)
        row[0] = 1
        if n >= 2:
            row[1] = n - 2 if kind is TemplateKind.C else 2 * n - 3
        for k in range(2, n // 2 + 1):
            if kind is TemplateKind.C:
                # v_{n,k} = v_{n-1,k} + v_{n-3,k-1} + v_{n-4,k-2}
                row[k] = value(n - 1, k) + value(n - 3, k - 1) + value(n - 4, k - 2)
            else:
                # w_{n,k} = w_{n-1,k} + w_{n-2,k-1} + w_{n-3,k-1} + w_{n-4,k-2}
                row[k] = (value(n - 1, k) + value(n - 2, k - 1)
                          + value(n - 3, k - 1) + value(n - 4, k - 2))
        rows.append(row)
    return MatchingTable(kind, max_order, tuple(tuple(row) for row in rows))


def mu_C_recurrence(max_order: int) -> MatchingTable:
    """按递推填 Γ(C_n) 的 μ 表，0 ≤ n ≤ N"""
    return _recurrence_table(TemplateKind.C, max_order)


def mu_D_recurrence(max_order: int) -> MatchingTable:
    """按递推填 Γ(D_n) 的 μ 表，0 ≤ n ≤ N"""
    return _recurrence_table(TemplateKind.D, max_order)


# ==================== 生成函数 ====================

def _truncate(poly: sp.Poly, max_degree: int) -> sp.Poly:
    kept = {mon: c for mon, c in poly.terms() if mon[1] <= max_degree and c != 0}
    if not kept:
        return sp.Poly(0, SYMBOL_X, SYMBOL_T, domain="ZZ")
    return sp.Poly.from_dict(kept, SYMBOL_X, SYMBOL_T, domain="ZZ")


def gf_series(kind: TemplateKind, max_degree: int) -> SeriesTruncation:
    """展开 1/(1 - t·S(x, t)) 到 t 次数 N

    用有限和 Σ_{m=0}^{N} t^m·S^m 的 Horner 形式 1 + tS(1 + tS(…))，每步截断。
    """
    _check_named_kind(kind)
    stencil = sp.Poly.from_dict(SERIES_STENCILS[kind], SYMBOL_X, SYMBOL_T, domain="ZZ")
    step = stencil * sp.Poly(SYMBOL_T, SYMBOL_X, SYMBOL_T, domain="ZZ")
    one = sp.Poly(1, SYMBOL_X, SYMBOL_T, domain="ZZ")

    acc = one
    for _ in range(max_degree):
        acc = _truncate(one + step * acc, max_degree)

    grid = [[0] * (n // 2 + 1) for n in range(max_degree + 1)]
    for (k, n), c in acc.terms():
        if c == 0:
            continue
        if k > n // 2:
            raise ArithmeticError(f"级数系数越界: x^{k} t^{n}")
        grid[n][k] = int(c)
    return SeriesTruncation(max_degree, tuple(tuple(row) for row in grid))


# ==================== 不等式等价 ====================

def prop3_equivalence(n: int, k: int) -> Tuple[bool, bool]:
    """返回 (ceil((3k-n)/2) ≤ floor(k/2), k ≤ floor(n/2))，两者应相等

    要求 n、k 非负，且 k 为奇数时 n ≠ 2k。
    """
    if n < 0 or k < 0:
        raise HypothesisViolation(f"n、k 必须非负: n={n}, k={k}")
    if k % 2 == 1 and n == 2 * k:
        raise HypothesisViolation(f"k 为奇数时要求 n ≠ 2k: n={n}, k={k}")
    return ceil_div(3 * k - n, 2) <= floor_div(k, 2), k <= floor_div(n, 2)


# ==================== 建表 ====================

def closed_table(kind: TemplateKind, max_order: int) -> MatchingTable:
    _check_named_kind(kind)
    mu = mu_C_closed if kind is TemplateKind.C else mu_D_closed
    return MatchingTable(kind, max_order, tuple(
        tuple(mu(n, k) for k in range(n // 2 + 1))
        for n in range(max_order + 1)
    ))


def bruteforce_table(kind: TemplateKind, max_order: int, limit: Optional[int] = None) -> MatchingTable:
    _check_named_kind(kind)
    if limit is not None and max_order > limit:
        raise BruteForceLimitError(f"暴力枚举上限为 n ≤ {limit}，请求为 {max_order}")
    rows = []
    for n in range(max_order + 1):
        rows.append(tuple(matching_counts_bruteforce(build_template(kind, n))))
        logger.debug(f"暴力枚举 {kind.value}_{n} 完成")
    return MatchingTable(kind, max_order, tuple(rows))


def build_table(kind: TemplateKind, max_order: int, method: Method,
                brute_limit: Optional[int] = None) -> MatchingTable:
    """按指定方法构建 μ 表"""
    if max_order < 0:
        raise ValueError(f"最大阶数不能为负: {max_order}")
    _check_named_kind(kind)
    if method is Method.CLOSED:
        return closed_table(kind, max_order)
    if method is Method.RECURRENCE:
        return _recurrence_table(kind, max_order)
    if method is Method.SERIES:
        return gf_series(kind, max_order).to_table(kind)
    if method is Method.BRUTE:
        return bruteforce_table(kind, max_order, brute_limit)
    raise ValueError(f"未知的计算方法: {method}")


def tables_agree(tables: Sequence[MatchingTable]) -> bool:
    """全部表逐格一致"""
    first = tables[0]
    return all(table.values == first.values for table in tables[1:])
