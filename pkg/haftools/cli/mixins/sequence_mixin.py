# -*- coding: utf-8 -*-
"""序列命令混入类"""

import argparse

from ...core.ring import render
from ...core.twoparam import sequence
from ...utils.constants import TemplateKind
from ...utils.exceptions import UsageError
from ...utils.models import OutputRecord
from ...utils.table_io import check_sequence_against_fixture
from .base import MixinBase


class SequenceMixin(MixinBase):
    """sequence 子命令：Hf(T_2(a,b)), …, Hf(T_2m_max(a,b))"""

    def add_sequence_parser(self, subparsers, common: argparse.ArgumentParser) -> None:
        parser = subparsers.add_parser(
            "sequence", parents=[common],
            help="逐个 m 输出 hafnian 序列，每行一项"
        )
        parser.add_argument("kind", choices=TemplateKind.get_named_types(), help="模板类型")
        parser.add_argument("m_max", type=int, help="最大 m（≥ 1）")
        parser.add_argument("a", help="参数 a")
        parser.add_argument("b", help="参数 b")
        parser.add_argument(
            "--check-fixture", action="store_true",
            help="与内置的前 10 项比较（仅 a=0, b=1），不一致时退出码为 2"
        )
        parser.set_defaults(handler=self.cmd_sequence)

    def cmd_sequence(self, args: argparse.Namespace) -> int:
        kind = TemplateKind.from_name(args.kind)
        a = self.parse_ring_argument(args.a, "a")
        b = self.parse_ring_argument(args.b, "b")
        if args.check_fixture and (a != 0 or b != 1):
            raise UsageError("--check-fixture 只适用于 a=0, b=1")

        values = sequence(kind, args.m_max, a, b)

        if self.wants_json(args):
            self.emit_record(OutputRecord(
                command="sequence",
                params={"kind": kind.value, "m_max": args.m_max, "a": args.a, "b": args.b},
                result=[self.result_payload(v) for v in values]
            ), args)
        else:
            for value in values:
                self.emit(render(value))

        if args.check_fixture:
            compared = check_sequence_against_fixture(kind, values)
            self.emit_error(f"fixture 一致: 前 {compared} 项")
        return 0
