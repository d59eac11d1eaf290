# -*- coding: utf-8 -*-
"""Mixin 基类"""

import argparse
import time
from abc import ABC
from typing import Any, TextIO

from ...core.ring import BiPoly, RingElement, normalize, render
from ...utils.constants import INTEGER_PATTERN, SYMBOL_TOKENS, OutputFormat
from ...utils.exceptions import SymbolError
from ...utils.models import OutputRecord
from ...utils.settings import Settings


class MixinBase(ABC):
    """
    Mixin 基类，定义所有命令 Mixin 共用的输出与参数解析。
    属性由命令行主类提供。
    """

    settings: Settings
    stdout: TextIO
    stderr: TextIO
    started: float = 0.0

    # ==================== 输出 ====================

    def emit(self, text: str) -> None:
        """写一行到 stdout（唯一的结果输出通道）"""
        self.stdout.write(text if text.endswith("\n") else text + "\n")

    def emit_error(self, text: str) -> None:
        self.stderr.write(text if text.endswith("\n") else text + "\n")

    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.started) * 1000.0

    def emit_record(self, record: OutputRecord, args: argparse.Namespace) -> None:
        """JSON 输出；只有 --timing 时写入 timing_ms"""
        if getattr(args, "timing", False):
            record.timing_ms = round(self.elapsed_ms(), 3)
        self.emit(record.render())

    @staticmethod
    def wants_json(args: argparse.Namespace) -> bool:
        return getattr(args, "format", OutputFormat.CSV.value) == OutputFormat.JSON.value

    # ==================== 参数解析 ====================

    @staticmethod
    def parse_ring_argument(text: str, position: str) -> RingElement:
        """整数、本位置的形式符号（sym），或 a、b 的整系数多项式

        Args:
            text: 命令行文本
            position: "a" 或 "b"
        """
        token = text.strip()
        if INTEGER_PATTERN.match(token):
            return int(token)
        if token.lower() in SYMBOL_TOKENS:
            return BiPoly.symbol_a() if position == "a" else BiPoly.symbol_b()
        try:
            return normalize(BiPoly.parse(token))
        except SymbolError:
            raise SymbolError(f"参数 {position} 不是整数或 a、b 的多项式: {text!r}")

    @staticmethod
    def result_payload(value: RingElement) -> Any:
        """JSON 中整数保持整数，多项式为规范字符串"""
        value = normalize(value)
        return value if isinstance(value, int) else render(value)
