# -*- coding: utf-8 -*-
"""
二参数矩阵 hafnian 模块

T_{2m}(a, b) = J_{2m}(b) + T_{2m}(a-b, 0) 给出一般约化
    Hf(T_{2m}(a, b)) = Σ_{k=0}^{m} (a-b)^{m-k}·b^k·(2k)!/(k!2^k)·μ_{m-k}(Γ(T_{2m}))，
代入 μ 的闭式即得 C 模板（O(m³)）与 D 模板（O(m⁴)）的多项式时间公式。
约定 0^0 = 1。
"""

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Union

from .hafnian import hafnian_bruteforce
from .matchings import matching_counts_bruteforce, mu_D_closed
from .matrix import Template, build_template, chord_template, instantiate
from .ring import RingElement, binomial, pairing_count, ring_pow
from ..utils.constants import HafnianMethod, TemplateKind
from ..utils.exceptions import OrderError, TemplateError
from ..utils.models import OpCounter
from ..utils.utils import ceil_div, floor_div

logger = logging.getLogger(__name__)

MuFunction = Callable[[int], int]


@dataclass(frozen=True)
class TwoParamSpec:
    """二参数矩阵描述：模板类型或自定义模板、半阶数 m、参数 a、b"""
    template: Union[TemplateKind, Template]
    m: int
    a: RingElement
    b: RingElement

    def __post_init__(self):
        if self.m < 0:
            raise OrderError(f"半阶数不能为负: {self.m}")
        if isinstance(self.template, Template) and self.template.order != 2 * self.m:
            raise OrderError(f"模板阶数 {self.template.order} 与 2m = {2 * self.m} 不一致")

    @property
    def order(self) -> int:
        return 2 * self.m

    def build_template(self) -> Template:
        if isinstance(self.template, Template):
            return self.template
        return build_template(self.template, self.order)

    def matrix(self):
        return instantiate(self.build_template(), self.a, self.b)


# ==================== 内部工具 ====================

def _powers(base: RingElement, count: int, counter: Optional[OpCounter]) -> List[RingElement]:
    """base^0 .. base^count，逐次相乘"""
    powers: List[RingElement] = [1]
    for _ in range(count):
        powers.append(powers[-1] * base)
        if counter is not None:
            counter.add_ring_ops()
    return powers


def _reduce(m: int, a: RingElement, b: RingElement, mu: MuFunction,
            counter: Optional[OpCounter] = None, start: int = 0) -> RingElement:
    """Σ_{k=start}^{m} (a-b)^{m-k}·b^k·pc(k)·μ_{m-k}"""
    diff = a - b
    diff_powers = _powers(diff, m, counter)
    b_power: RingElement = 1
    pc = 1
    total: RingElement = 0
    for k in range(0, m + 1):
        if k > 0:
            b_power = b_power * b
            pc *= 2 * k - 1
            if counter is not None:
                counter.add_ring_ops(2)
        if k < start:
            continue
        count = mu(k)
        if not count:
            continue
        term = diff_powers[m - k] * b_power
        if not term:
            continue
        total = total + term * (pc * count)
        if counter is not None:
            counter.add_ring_ops(4)
    return total


# ==================== 一般约化 ====================

def hafnian_two_param_general(t: Template, a: RingElement, b: RingElement,
                              mu: MuFunction) -> RingElement:
    """一般约化公式

    Args:
        t: 偶数阶 2m 的模板
        mu: mu(j) 给出 μ_j(Γ(T_{2m}))，0 ≤ j ≤ m
    """
    if t.order % 2:
        raise OrderError(f"hafnian 要求偶数阶，模板阶数为 {t.order}")
    m = t.order // 2
    return _reduce(m, a, b, lambda k: mu(m - k))


def bruteforce_mu(t: Template) -> MuFunction:
    """由暴力枚举得到的 μ 函数"""
    counts = matching_counts_bruteforce(t)
    return lambda j: counts[j] if 0 <= j < len(counts) else 0


# ==================== C 模板 ====================

def mu_C_inner_sum(m: int, k: int, counter: Optional[OpCounter]) -> int:
    # Σ_i C(2k+i, m-k-i)·C(m-k-i, i)，i 从 max(0, ceil((m-3k)/2)) 到 floor((m-k)/2)
    total = 0
    for i in range(max(0, ceil_div(m - 3 * k, 2)), floor_div(m - k, 2) + 1):
        total += binomial(2 * k + i, m - k - i, counter) * binomial(m - k - i, i, counter)
        if counter is not None:
            counter.add_ring_ops(2)
    return total


def hafnian_C(m: int, a: RingElement, b: RingElement,
              counter: Optional[OpCounter] = None) -> RingElement:
    """Hf(C_{2m}(a, b))，O(m³) 次标量运算

    求和下限 p：m 为偶数时为 0，奇数时为 1。
    """
    if m < 0:
        raise OrderError(f"半阶数不能为负: {m}")
    p = m % 2
    return _reduce(m, a, b, lambda k: mu_C_inner_sum(m, k, counter), counter, start=p)


# ==================== D 模板 ====================

def _mu_d_inner(m: int, k: int, counter: Optional[OpCounter]) -> int:
    # μ_{m-k}(Γ(D_{2m}))
    return mu_D_closed(2 * m, m - k, counter)


def hafnian_D(m: int, a: RingElement, b: RingElement,
              counter: Optional[OpCounter] = None) -> RingElement:
    """Hf(D_{2m}(a, b))，O(m⁴) 次标量运算"""
    if m < 0:
        raise OrderError(f"半阶数不能为负: {m}")
    return _reduce(m, a, b, lambda k: _mu_d_inner(m, k, counter), counter)


# ==================== J 矩阵 ====================

def hafnian_J(m: int, b: RingElement) -> RingElement:
    """Hf(J_{2m}(b)) = b^m·(2m)!/(m!2^m)"""
    if m < 0:
        raise OrderError(f"半阶数不能为负: {m}")
    return ring_pow(b, m) * pairing_count(m)


# ==================== 调度 ====================

def hafnian_two_param(spec: TwoParamSpec,
                      method: HafnianMethod = HafnianMethod.FORMULA) -> RingElement:
    """按模板类型选择公式，或按定义暴力计算"""
    if method is HafnianMethod.BRUTE:
        return hafnian_bruteforce(spec.matrix())

    template = spec.template
    if template is TemplateKind.C:
        return hafnian_C(spec.m, spec.a, spec.b)
    if template is TemplateKind.D:
        return hafnian_D(spec.m, spec.a, spec.b)
    if template is TemplateKind.J:
        # J 模板全为 1，实例即 J_{2m}(a)
        return hafnian_J(spec.m, spec.a)
    if isinstance(template, Template):
        return hafnian_two_param_general(template, spec.a, spec.b, bruteforce_mu(template))
    raise TemplateError(f"不支持的模板: {template}")


def sequence(kind: TemplateKind, m_max: int, a: RingElement, b: RingElement) -> List[RingElement]:
    """[Hf(T_2(a,b)), …, Hf(T_{2·m_max}(a,b))]"""
    if m_max < 1:
        raise ValueError(f"m_max 必须 ≥ 1: {m_max}")
    if kind is TemplateKind.C:
        formula = hafnian_C
    elif kind is TemplateKind.D:
        formula = hafnian_D
    else:
        raise TemplateError(f"序列只支持 C 或 D 模板: {kind}")
    return [formula(m, a, b) for m in range(1, m_max + 1)]


def chord_diagram_count(m: int, forbidden_lengths: Iterable[int]) -> int:
    """m 条弦、弦长均不在 forbidden_lengths 中的线性弦图个数"""
    template = chord_template(2 * m, forbidden_lengths)
    return hafnian_two_param_general(template, 0, 1, bruteforce_mu(template))
