# -*- coding: utf-8 -*-
"""
常量定义模块
"""

import re
from enum import Enum, IntEnum
from typing import Dict, FrozenSet, List

# ================================ 模板定义 ================================ #

class TemplateKind(Enum):
    """模板类型枚举"""
    C = "C"
    D = "D"
    J = "J"
    CUSTOM_TOEPLITZ = "toeplitz"
    CUSTOM_FULL = "full"

    @classmethod
    def get_named_types(cls) -> List[str]:
        """获取带闭式公式的模板类型"""
        return [cls.C.value, cls.D.value]

    @classmethod
    def from_name(cls, name: str) -> 'TemplateKind':
        """按名称（不区分大小写）解析"""
        for kind in cls:
            if kind.value.lower() == name.strip().lower():
                return kind
        raise ValueError(f"未知的模板类型: {name}")


# Toeplitz 模板第一行中值为 1 的偏移量（弧长）
TOEPLITZ_STENCILS: Dict[TemplateKind, FrozenSet[int]] = {
    TemplateKind.C: frozenset({2}),     # 0 0 1 0 … 0
    TemplateKind.D: frozenset({1, 2}),  # 0 1 1 0 … 0
}

# ================================ 计算方法 ================================ #

class Method(Enum):
    """μ 表的计算方法"""
    CLOSED = "closed"
    RECURRENCE = "recurrence"
    SERIES = "series"
    BRUTE = "brute"

    @classmethod
    def get_all_methods(cls) -> List[str]:
        return [m.value for m in cls]


class HafnianMethod(Enum):
    """单个 hafnian 的计算方法"""
    FORMULA = "formula"
    BRUTE = "brute"


class OutputFormat(Enum):
    """输出格式"""
    CSV = "csv"
    JSON = "json"


class VerifyLevel(Enum):
    """校验级别"""
    QUICK = "quick"
    FULL = "full"


class ExitCode(IntEnum):
    """命令行退出码"""
    OK = 0
    VERIFY_FAILED = 1
    FIXTURE_MISMATCH = 2
    USAGE = 64

# ================================ 限制与默认值 ================================ #

# 暴力枚举默认上限（可由 HAFTOOLS_MAX_BRUTE 覆盖）
DEFAULT_MAX_BRUTE = 14

# 和式展开枚举全部 2^n 个子集，阶数上限
MAX_SUM_EXPANSION_ORDER = 10

# verify 使用的默认随机种子
DEFAULT_SEED = 20210114

DEFAULT_LOG_LEVEL = "WARNING"

# ================================ 环境变量 ================================ #

ENV_MAX_BRUTE = "HAFTOOLS_MAX_BRUTE"
ENV_LOG_LEVEL = "HAFTOOLS_LOG_LEVEL"
ENV_SEED = "HAFTOOLS_SEED"

# ================================ 文件名常量 ================================ #

FIXTURES_DIR = "fixtures"
TABLE_FIXTURES = {
    TemplateKind.C: "table_c.csv",
    TemplateKind.D: "table_d.csv",
}
SEQUENCE_FIXTURES = {
    TemplateKind.C: "sequence_c.csv",
    TemplateKind.D: "sequence_d.csv",
}

# CSV 表头左上角单元格（行 k，列 n）
TABLE_CORNER = "k/n"

# ================================ 正则表达式 ================================ #

# 模板文件中的 Toeplitz 行，如 "toeplitz: 0 0 1 0"
TOEPLITZ_LINE_PATTERN = re.compile(r'^\s*toeplitz\s*:\s*(.*)$', re.IGNORECASE)

# 命令行整数参数
INTEGER_PATTERN = re.compile(r'^[+-]?\d+$')

# 多项式参数允许的字符：整数、a、b、运算符、括号
POLYNOMIAL_PATTERN = re.compile(r'^[0-9ab+\-*^()\s]+$')

# 命令行中代表"本位置形式符号"的写法
SYMBOL_TOKENS = {"sym", "symbol"}
