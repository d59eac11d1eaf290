# -*- coding: utf-8 -*-
"""
异常定义模块

全部继承自 ValueError，调用方按 ValueError 捕获即可。
"""


class HafToolsError(ValueError):
    """工具包异常基类"""


class OrderError(HafToolsError):
    """矩阵阶数不合法（奇数阶、阶数不一致或超出枚举上限）"""


class TemplateError(HafToolsError):
    """模板不合法或模板文件无法解析"""


class IndexSetError(HafToolsError):
    """子矩阵下标越界"""


class HypothesisViolation(HafToolsError):
    """调用条件不满足（k 为奇数且 n = 2k）"""


class BruteForceLimitError(HafToolsError):
    """超出暴力枚举上限"""


class SymbolError(HafToolsError):
    """无法解析为整数或 a、b 的整系数多项式"""


class FixtureMismatch(HafToolsError):
    """计算结果与内置 fixture 不一致"""


class UsageError(HafToolsError):
    """命令行参数错误"""
