# -*- coding: utf-8 -*-
"""
μ 表的 CSV/JSON 读写与内置 fixture 加载

CSV 中列为 n，行为 k，零值单元格留空。
"""

import csv
import io
import logging
from pathlib import Path
from typing import Dict, List, Optional

from ..core.matchings import MatchingTable
from .constants import (
    FIXTURES_DIR, SEQUENCE_FIXTURES, TABLE_CORNER, TABLE_FIXTURES, TemplateKind
)
from .exceptions import FixtureMismatch, TemplateError

logger = logging.getLogger(__name__)


def fixtures_path() -> Path:
    """内置 fixture 目录"""
    return Path(__file__).resolve().parent.parent / FIXTURES_DIR


# ==================== CSV ====================

def render_table_csv(table: MatchingTable) -> str:
    """渲染为 CSV 文本（行 k，列 n，零值为空串）"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")

    # 写入表头
    writer.writerow([TABLE_CORNER] + [str(n) for n in range(table.max_order + 1)])

    # 写入数据
    for k, row in enumerate(table.as_grid()):
        writer.writerow([str(k)] + [str(value) if value else "" for value in row])

    return buffer.getvalue()


def parse_table_csv(text: str, kind: TemplateKind) -> MatchingTable:
    """解析 render_table_csv 的输出"""
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows or rows[0][0] != TABLE_CORNER:
        raise TemplateError("CSV 表头缺失")

    try:
        orders = [int(cell) for cell in rows[0][1:]]
        grid: Dict[int, List[int]] = {
            int(row[0]): [int(cell) if cell.strip() else 0 for cell in row[1:]]
            for row in rows[1:]
        }
    except ValueError as e:
        raise TemplateError(f"CSV 单元格不是整数: {e}")

    max_order = len(orders) - 1
    if orders != list(range(max_order + 1)):
        raise TemplateError(f"CSV 列必须为 0..N: {orders}")
    return MatchingTable(kind, max_order, tuple(
        tuple(grid.get(k, [0] * (max_order + 1))[n] for k in range(n // 2 + 1))
        for n in range(max_order + 1)
    ))


# ==================== JSON ====================

def table_payload(table: MatchingTable) -> Dict:
    """JSON 载荷：与 CSV 内容等价，零值显式写出"""
    return {
        "kind": table.kind.value,
        "max_order": table.max_order,
        "rows": table.as_grid(),
    }


def table_from_payload(payload: Dict) -> MatchingTable:
    kind = TemplateKind.from_name(payload["kind"])
    max_order = int(payload["max_order"])
    grid = payload["rows"]
    return MatchingTable(kind, max_order, tuple(
        tuple(int(grid[k][n]) for k in range(n // 2 + 1))
        for n in range(max_order + 1)
    ))


# ==================== 内置 fixture ====================

def load_table_fixture(kind: TemplateKind, base_path: Optional[Path] = None) -> MatchingTable:
    """读取内置 μ 表 fixture"""
    path = (base_path or fixtures_path()) / TABLE_FIXTURES[kind]
    return parse_table_csv(path.read_text(encoding="utf-8"), kind)


def load_sequence_fixture(kind: TemplateKind, base_path: Optional[Path] = None) -> List[int]:
    """读取序列 fixture（m = 1, 2, … 的 hafnian 值）"""
    path = (base_path or fixtures_path()) / SEQUENCE_FIXTURES[kind]
    with open(path, "r", encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        rows = sorted(reader, key=lambda row: int(row["m"]))
    values = [int(row["hafnian"]) for row in rows]
    if [int(row["m"]) for row in rows] != list(range(1, len(values) + 1)):
        raise TemplateError(f"序列 fixture 的 m 必须从 1 连续编号: {path}")
    return values


def check_sequence_against_fixture(kind: TemplateKind, values: List[int]) -> int:
    """与 fixture 比较前 min(len, fixture 长度) 项，返回比较的项数"""
    fixture = load_sequence_fixture(kind)
    count = min(len(values), len(fixture))
    for index in range(count):
        if values[index] != fixture[index]:
            raise FixtureMismatch(
                f"{kind.value} 序列第 {index + 1} 项为 {values[index]}，fixture 为 {fixture[index]}"
            )
    logger.debug(f"{kind.value} 序列与 fixture 一致: 前 {count} 项")
    return count
