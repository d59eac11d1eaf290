# -*- coding: utf-8 -*-
"""
矩阵模块

模板（C_n、D_n、J_n 及自定义对称 0/1 模式）与其二参数实例 T_n(a, b)。
对外下标从 1 开始，与弧图顶点编号一致；内部存储为上三角（对角线恒为 0）。
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .ring import RingElement
from ..utils.constants import TOEPLITZ_LINE_PATTERN, TOEPLITZ_STENCILS, TemplateKind
from ..utils.exceptions import IndexSetError, OrderError, TemplateError

logger = logging.getLogger(__name__)

Bits = Tuple[Tuple[int, ...], ...]


def _triangle_index(n: int, i: int, j: int) -> int:
    """0 起下标 i < j 在上三角扁平数组中的位置"""
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


# ==================== 模板 ====================

@dataclass(frozen=True)
class Template:
    """对称 0/1 模板"""
    kind: TemplateKind
    order: int
    bits: Bits
    first_row: Optional[Tuple[int, ...]] = None

    def bit(self, i: int, j: int) -> int:
        """1 起下标的模板位"""
        return self.bits[i - 1][j - 1]

    def edges(self) -> List[Tuple[int, int]]:
        """弧图 Γ(T) 的边 (i, j)，i < j，按字典序"""
        n = self.order
        return [
            (i + 1, j + 1)
            for i in range(n)
            for j in range(i + 1, n)
            if self.bits[i][j]
        ]

    def to_matrix(self) -> 'SymmetricMatrix':
        """模板本身作为 0/1 矩阵"""
        return SymmetricMatrix.from_function(self.order, lambda i, j: self.bit(i, j))


def _toeplitz_bits(first_row: Sequence[int]) -> Bits:
    n = len(first_row)
    return tuple(
        tuple(first_row[abs(i - j)] for j in range(n))
        for i in range(n)
    )


def _check_bit_values(values: Iterable[int]) -> None:
    for value in values:
        if value not in (0, 1):
            raise TemplateError(f"模板位必须为 0 或 1: {value}")


def _validate_full(bits: Sequence[Sequence[int]]) -> Bits:
    n = len(bits)
    for i, row in enumerate(bits):
        if len(row) != n:
            raise TemplateError(f"模板第 {i + 1} 行长度为 {len(row)}，应为 {n}")
        _check_bit_values(row)
    for i in range(n):
        if bits[i][i] != 0:
            raise TemplateError(f"模板对角线必须为 0: 位置 ({i + 1}, {i + 1})")
        for j in range(i + 1, n):
            if bits[i][j] != bits[j][i]:
                raise TemplateError(f"模板不对称: 位置 ({i + 1}, {j + 1})")
    return tuple(tuple(int(v) for v in row) for row in bits)


def stencil_first_row(offsets: Iterable[int], n: int) -> Tuple[int, ...]:
    """由弧长集合生成 Toeplitz 第一行；超出阶数的偏移量被截断"""
    wanted = set(offsets)
    return tuple(1 if 0 < d and d in wanted else 0 for d in range(n))


def build_template(kind: TemplateKind, n: int,
                   first_row: Optional[Sequence[int]] = None,
                   bits: Optional[Sequence[Sequence[int]]] = None) -> Template:
    """构建并校验模板

    Args:
        kind: 模板类型
        n: 阶数
        first_row: CUSTOM_TOEPLITZ 的第一行（长度 n，首位为 0）
        bits: CUSTOM_FULL 的完整 0/1 矩阵
    """
    if n < 0:
        raise OrderError(f"阶数不能为负: {n}")

    if kind in TOEPLITZ_STENCILS:
        row = stencil_first_row(TOEPLITZ_STENCILS[kind], n)
        return Template(kind, n, _toeplitz_bits(row), row)

    if kind is TemplateKind.J:
        full = tuple(tuple(0 if i == j else 1 for j in range(n)) for i in range(n))
        return Template(kind, n, full)

    if kind is TemplateKind.CUSTOM_TOEPLITZ:
        if first_row is None:
            raise TemplateError("自定义 Toeplitz 模板需要第一行")
        row = tuple(int(v) for v in first_row)
        if len(row) != n:
            raise TemplateError(f"第一行长度为 {len(row)}，应为 {n}")
        _check_bit_values(row)
        if n and row[0] != 0:
            raise TemplateError("Toeplitz 第一行首位必须为 0")
        return Template(kind, n, _toeplitz_bits(row), row)

    if kind is TemplateKind.CUSTOM_FULL:
        if bits is None:
            raise TemplateError("自定义模板需要完整的 0/1 矩阵")
        if len(bits) != n:
            raise TemplateError(f"模板行数为 {len(bits)}，应为 {n}")
        return Template(kind, n, _validate_full(bits))

    raise TemplateError(f"未知的模板类型: {kind}")


def chord_template(n: int, forbidden_lengths: Iterable[int]) -> Template:
    """禁止弧长模板：第一行在给定弧长处为 1

    实例化 T(0, 1) 的完美匹配即不含这些弧长的线性弦图。
    """
    lengths = set(forbidden_lengths)
    if any(d <= 0 for d in lengths):
        raise TemplateError(f"弧长必须为正: {sorted(lengths)}")
    return build_template(TemplateKind.CUSTOM_TOEPLITZ, n, first_row=stencil_first_row(lengths, n))


def template_edges(t: Template) -> List[Tuple[int, int]]:
    return t.edges()


# ==================== 模板文件 ====================

def parse_template(text: str) -> Template:
    """解析模板文本

    第一行为阶数 n，随后为 "toeplitz: 0 0 1 0 ..." 一行，或 n 行 0/1。
    空行与 # 开头的行被忽略。
    """
    lines = [
        line.strip() for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise TemplateError("模板文件为空")

    try:
        n = int(lines[0])
    except ValueError:
        raise TemplateError(f"第一行应为阶数: {lines[0]!r}")
    if n < 0:
        raise TemplateError(f"阶数不能为负: {n}")

    body = lines[1:]
    if len(body) == 1 and TOEPLITZ_LINE_PATTERN.match(body[0]):
        row = _parse_bits(TOEPLITZ_LINE_PATTERN.match(body[0]).group(1))
        return build_template(TemplateKind.CUSTOM_TOEPLITZ, n, first_row=row)

    if n == 0 and not body:
        return build_template(TemplateKind.CUSTOM_FULL, 0, bits=[])
    if len(body) != n:
        raise TemplateError(f"模板应有 {n} 行 0/1，实际为 {len(body)} 行")
    return build_template(TemplateKind.CUSTOM_FULL, n, bits=[_parse_bits(line) for line in body])


def _parse_bits(line: str) -> List[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError:
        raise TemplateError(f"无效的 0/1 行: {line!r}")


def load_template(path: Path) -> Template:
    """读取模板文件"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"读取模板文件失败: {e}")
        raise TemplateError(f"读取模板文件失败: {path}")
    template = parse_template(text)
    logger.info(f"已加载模板 {path}: 阶数 {template.order}，{len(template.edges())} 条边")
    return template


# ==================== 对称矩阵 ====================

@dataclass(frozen=True)
class SymmetricMatrix:
    """零对角线对称矩阵，按上三角存储"""
    order: int
    entries: Tuple[RingElement, ...]

    def __post_init__(self):
        expected = self.order * (self.order - 1) // 2
        if self.order < 0 or len(self.entries) != expected:
            raise OrderError(f"上三角元素个数为 {len(self.entries)}，阶数 {self.order} 需要 {expected}")

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], RingElement]) -> 'SymmetricMatrix':
        """由 fn(i, j)（1 起下标，i < j）生成"""
        return cls(n, tuple(fn(i + 1, j + 1) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RingElement]]) -> 'SymmetricMatrix':
        """由完整矩阵创建，校验对称与零对角线"""
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise OrderError(f"第 {i + 1} 行长度为 {len(row)}，应为 {n}")
            if row[i] != 0:
                raise TemplateError(f"对角线必须为 0: 位置 ({i + 1}, {i + 1})")
            for j in range(i + 1, n):
                if row[j] != rows[j][i]:
                    raise TemplateError(f"矩阵不对称: 位置 ({i + 1}, {j + 1})")
        return cls.from_function(n, lambda i, j: rows[i - 1][j - 1])

    @classmethod
    def empty(cls) -> 'SymmetricMatrix':
        return cls(0, ())

    def entry(self, i: int, j: int) -> RingElement:
        """1 起下标的元素"""
        if not (1 <= i <= self.order and 1 <= j <= self.order):
            raise IndexSetError(f"下标越界: ({i}, {j})，阶数 {self.order}")
        return self.at(i - 1, j - 1)

    def at(self, i: int, j: int) -> RingElement:
        """0 起下标的元素"""
        if i == j:
            return 0
        if i > j:
            i, j = j, i
        return self.entries[_triangle_index(self.order, i, j)]

    def rows(self) -> List[List[RingElement]]:
        n = self.order
        return [[self.at(i, j) for j in range(n)] for i in range(n)]

    def __add__(self, other: 'SymmetricMatrix') -> 'SymmetricMatrix':
        if not isinstance(other, SymmetricMatrix):
            return NotImplemented
        if other.order != self.order:
            raise OrderError(f"阶数不一致: {self.order} 与 {other.order}")
        return SymmetricMatrix(self.order, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def scale(self, c: RingElement) -> 'SymmetricMatrix':
        return SymmetricMatrix(self.order, tuple(c * x for x in self.entries))


def instantiate(t: Template, a: RingElement, b: RingElement) -> SymmetricMatrix:
    """T_n(a, b)：模板位 1 处取 a，非对角 0 处取 b"""
    return SymmetricMatrix.from_function(t.order, lambda i, j: a if t.bit(i, j) else b)


def zero_matrix(n: int) -> SymmetricMatrix:
    return SymmetricMatrix(n, (0,) * (n * (n - 1) // 2))


# ==================== 子矩阵 ====================

def _check_index_set(m: SymmetricMatrix, alpha: Iterable[int]) -> List[int]:
    indices = sorted(set(alpha))
    for index in indices:
        if not 1 <= index <= m.order:
            raise IndexSetError(f"下标 {index} 超出范围 1..{m.order}")
    return indices


def submatrix_keep(m: SymmetricMatrix, alpha: Iterable[int]) -> SymmetricMatrix:
    """A[α]：保留 α 中的行与列"""
    keep = _check_index_set(m, alpha)
    return SymmetricMatrix.from_function(len(keep), lambda i, j: m.entry(keep[i - 1], keep[j - 1]))


def submatrix_drop(m: SymmetricMatrix, alpha: Iterable[int]) -> SymmetricMatrix:
    """A{α}：删去 α 中的行与列"""
    dropped = set(_check_index_set(m, alpha))
    return submatrix_keep(m, [i for i in range(1, m.order + 1) if i not in dropped])
