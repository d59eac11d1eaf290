# -*- coding: utf-8 -*-
"""
haftools - 两参数矩阵的 hafnian 精确计算

功能特性：
• 按定义枚举完美配对计算 hafnian（整数或 a、b 的多项式）
• 数乘与和式展开公式
• 弧图 C_n / D_n 的 k 边匹配数表（闭式、递推、生成函数、暴力枚举）
• Hf(C_2m(a,b)) 的 O(m³) 与 Hf(D_2m(a,b)) 的 O(m⁴) 公式
• 自定义 Toeplitz / 完整模板的一般约化公式
• 内置对照表与序列 fixture，校验套件与复杂度基准
• 命令行：table / hafnian / sequence / verify / bench
"""

from .utils.version_info import version_info
from .core import (
    BiPoly, MatchingTable, Template, SymmetricMatrix, TwoParamSpec,
    build_table, hafnian_bruteforce, hafnian_C, hafnian_D, hafnian_two_param, sequence
)
from .cli import HafToolsCLI

__version__ = version_info["version"]

__all__ = [
    'BiPoly', 'MatchingTable', 'Template', 'SymmetricMatrix', 'TwoParamSpec',
    'build_table', 'hafnian_bruteforce', 'hafnian_C', 'hafnian_D',
    'hafnian_two_param', 'sequence', 'HafToolsCLI'
]
