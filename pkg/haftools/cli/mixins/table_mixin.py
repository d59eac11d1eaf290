# -*- coding: utf-8 -*-
"""μ 表命令混入类"""

import argparse
import logging

from ...core.matchings import build_table
from ...utils.constants import Method, TemplateKind
from ...utils.models import OutputRecord
from ...utils.table_io import render_table_csv, table_payload
from .base import MixinBase

logger = logging.getLogger(__name__)


class TableMixin(MixinBase):
    """table 子命令：输出 μ_k(Γ(C_n)) 或 μ_k(Γ(D_n)) 表"""

    def add_table_parser(self, subparsers, common: argparse.ArgumentParser) -> None:
        parser = subparsers.add_parser(
            "table", parents=[common],
            help="输出 k 边匹配数表（列 n，行 k）"
        )
        parser.add_argument("kind", choices=TemplateKind.get_named_types(), help="模板类型")
        parser.add_argument("n_max", type=int, help="最大阶数 N")
        parser.add_argument(
            "--method", default=Method.CLOSED.value, choices=Method.get_all_methods(),
            help="计算方法（默认 closed）"
        )
        parser.set_defaults(handler=self.cmd_table)

    def cmd_table(self, args: argparse.Namespace) -> int:
        if args.n_max < 0:
            raise ValueError(f"n_max 不能为负: {args.n_max}")
        kind = TemplateKind.from_name(args.kind)
        method = Method(args.method)
        table = build_table(kind, args.n_max, method, brute_limit=self.settings.max_brute)
        logger.info(f"{kind.value} 表已生成: N={args.n_max}, method={method.value}")

        if self.wants_json(args):
            self.emit_record(OutputRecord(
                command="table",
                params={"kind": kind.value, "n_max": args.n_max, "method": method.value},
                result=table_payload(table)
            ), args)
        else:
            self.stdout.write(render_table_csv(table))
        return 0
