# -*- coding: utf-8 -*-
"""
工具函数模块
"""

from typing import Iterable, List, Sequence


def floor_div(a: int, b: int) -> int:
    """数学意义上的向下取整除法（b > 0）"""
    q, _ = divmod(a, b)
    return q


def ceil_div(a: int, b: int) -> int:
    """数学意义上的向上取整除法（b > 0），负数不向零截断"""
    q, r = divmod(a, b)
    return q + 1 if r else q


def parse_int_list(text: str) -> List[int]:
    """解析逗号分隔的整数列表，如 "10,20,40" """
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            values.append(int(part))
        except ValueError:
            raise ValueError(f"无效的整数: {part}")
    if not values:
        raise ValueError(f"整数列表为空: {text!r}")
    return values


def format_columns(rows: Iterable[Sequence[object]], widths: Sequence[int]) -> List[str]:
    """按固定列宽右对齐格式化"""
    lines = []
    for row in rows:
        cells = [str(cell).rjust(width) for cell, width in zip(row, widths)]
        lines.append(" ".join(cells))
    return lines


def fibonacci(count: int) -> List[int]:
    """前 count 项 Fibonacci 数 1, 1, 2, 3, 5, …"""
    values: List[int] = []
    a, b = 1, 1
    for _ in range(count):
        values.append(a)
        a, b = b, a + b
    return values
