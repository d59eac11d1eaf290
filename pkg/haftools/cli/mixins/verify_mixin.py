# -*- coding: utf-8 -*-
"""校验命令混入类"""

import argparse

from ...core.verify import VerificationRunner, all_passed
from ...utils.constants import ExitCode, VerifyLevel
from ...utils.models import OutputRecord
from .base import MixinBase


class VerifyMixin(MixinBase):
    """verify 子命令：逐个执行校验套件"""

    def add_verify_parser(self, subparsers, common: argparse.ArgumentParser) -> None:
        levels = [level.value for level in VerifyLevel]
        parser = subparsers.add_parser(
            "verify", parents=[common],
            help="执行校验套件，全部通过时退出码为 0"
        )
        parser.add_argument("level", nargs="?", choices=levels, help="校验级别（默认 quick）")
        parser.add_argument("--level", dest="level_option", choices=levels, help="同位置参数 level")
        parser.set_defaults(handler=self.cmd_verify)

    def cmd_verify(self, args: argparse.Namespace) -> int:
        level = VerifyLevel(args.level or args.level_option or VerifyLevel.QUICK.value)
        results = VerificationRunner(self.settings).run(level)

        if self.wants_json(args):
            self.emit_record(OutputRecord(
                command="verify",
                params={"level": level.value},
                result=[r.to_dict() for r in results]
            ), args)
        else:
            for result in results:
                self.emit(result.get_display_line())

        if all_passed(results):
            return ExitCode.OK
        return ExitCode.VERIFY_FAILED
