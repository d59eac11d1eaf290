# -*- coding: utf-8 -*-
"""
复杂度基准模块

对 hafnian_C / hafnian_D 计数标量运算并拟合 log-log 斜率，
用于检验 O(m³) 与 O(m⁴) 的增长率。
"""

import logging
import time
from typing import List, Sequence

import numpy as np

from .twoparam import hafnian_C, hafnian_D
from ..utils.constants import TemplateKind
from ..utils.exceptions import TemplateError
from ..utils.models import BenchPoint, OpCounter

logger = logging.getLogger(__name__)

# 基准使用的固定参数（a ≠ b，保证各项都参与运算）
BENCH_A = 2
BENCH_B = 1


def measure(kind: TemplateKind, m: int) -> BenchPoint:
    """计数单个 m 的标量运算并计时"""
    if m < 1:
        raise ValueError(f"m 必须 ≥ 1: {m}")
    if kind is TemplateKind.C:
        formula = hafnian_C
    elif kind is TemplateKind.D:
        formula = hafnian_D
    else:
        raise TemplateError(f"基准只支持 C 或 D 模板: {kind}")

    counter = OpCounter()
    start = time.perf_counter()
    formula(m, BENCH_A, BENCH_B, counter)
    wall_ms = (time.perf_counter() - start) * 1000.0
    logger.info(f"{kind.value} m={m}: {counter.total} 次运算, {wall_ms:.2f} ms")
    return BenchPoint(m=m, ops=counter.total, wall_ms=wall_ms)


def run_bench(kind: TemplateKind, m_values: Sequence[int]) -> List[BenchPoint]:
    return [measure(kind, m) for m in m_values]


def fit_slope(points: Sequence[BenchPoint]) -> float:
    """log(ops) 对 log(m) 的最小二乘斜率；少于两个不同的 m 时返回 nan"""
    usable = [p for p in points if p.ops > 0]
    if len({p.m for p in usable}) < 2:
        return float("nan")
    x = np.log([p.m for p in usable])
    y = np.log([p.ops for p in usable])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
