# -*- coding: utf-8 -*-
"""
命令行主类模块

通过 Mixin 模式将各子命令分散到不同模块。
"""

import argparse
import logging
import sys
import time
from typing import Optional, Sequence, TextIO

from ..utils.constants import ExitCode, OutputFormat
from ..utils.exceptions import FixtureMismatch, HafToolsError, UsageError
from ..utils.settings import Settings
from ..utils.version_info import version_info
from .mixins import BenchMixin, HafnianMixin, SequenceMixin, TableMixin, VerifyMixin

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(levelname)s (%(name)s): %(message)s'
LOG_CHOICES = ["debug", "info", "warning", "error"]


class CommandParser(argparse.ArgumentParser):
    """参数错误抛出 UsageError，由 run() 统一映射为退出码 64"""

    def error(self, message: str):
        raise UsageError(message)


class HafToolsCLI(TableMixin, HafnianMixin, SequenceMixin, VerifyMixin, BenchMixin):
    """命令行主类"""

    def __init__(self, settings: Optional[Settings] = None,
                 stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None):
        self.settings = settings or Settings.from_env()
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.parser = self._build_parser()

    def _build_parser(self) -> CommandParser:
        title = f"{version_info['name']} {version_info['version']}"
        parser = CommandParser(prog="haftools", description=f"{title}: 两参数矩阵的 hafnian 计算")
        parser.add_argument("--version", action="version", version=title)
        parser.add_argument(
            "--log", choices=LOG_CHOICES, type=str.lower,
            help=f"日志级别（默认 {self.settings.log_level.lower()}）"
        )

        # 各子命令共用的输出选项
        common = CommandParser(add_help=False)
        common.add_argument(
            "--format", default=OutputFormat.CSV.value,
            choices=[f.value for f in OutputFormat], help="输出格式（默认 csv）"
        )
        common.add_argument("--timing", action="store_true", help="向 stderr 输出耗时")

        subparsers = parser.add_subparsers(dest="command", parser_class=CommandParser)
        subparsers.required = True
        self.add_table_parser(subparsers, common)
        self.add_hafnian_parser(subparsers, common)
        self.add_sequence_parser(subparsers, common)
        self.add_verify_parser(subparsers, common)
        self.add_bench_parser(subparsers, common)
        return parser

    def _configure_logging(self, level: Optional[str]) -> None:
        """包日志写到本实例的 stderr；替换之前实例挂上的 handler"""
        name = (level or self.settings.log_level).upper()
        package_logger = logging.getLogger("haftools")
        for handler in list(package_logger.handlers):
            if getattr(handler, "haftools_cli", False):
                package_logger.removeHandler(handler)
        handler = logging.StreamHandler(self.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler.haftools_cli = True
        package_logger.addHandler(handler)
        package_logger.setLevel(getattr(logging, name))

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """解析参数并执行子命令，返回退出码"""
        try:
            args = self.parser.parse_args(argv)
        except UsageError as e:
            self.emit_error(f"haftools: 参数错误: {e}")
            return ExitCode.USAGE
        except SystemExit as e:
            # --help / --version
            return int(e.code or 0)

        self._configure_logging(args.log)
        self.started = time.perf_counter()
        try:
            code = int(args.handler(args))
        except FixtureMismatch as e:
            logger.error(f"fixture 不一致: {e}")
            self.emit_error(f"haftools: {e}")
            return ExitCode.FIXTURE_MISMATCH
        except (HafToolsError, ValueError) as e:
            self.emit_error(f"haftools: {e}")
            return ExitCode.USAGE

        if args.timing:
            self.emit_error(f"timing_ms={self.elapsed_ms():.3f}")
        return code
