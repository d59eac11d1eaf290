# -*- coding: utf-8 -*-
"""基准命令混入类"""

import argparse
import math

from ...core.bench import fit_slope, run_bench
from ...utils.constants import TemplateKind
from ...utils.models import OutputRecord
from ...utils.utils import format_columns, parse_int_list
from .base import MixinBase

COLUMN_WIDTHS = (6, 14, 12)


class BenchMixin(MixinBase):
    """bench 子命令：运算次数表与 log-log 斜率"""

    def add_bench_parser(self, subparsers, common: argparse.ArgumentParser) -> None:
        parser = subparsers.add_parser(
            "bench", parents=[common],
            help="统计 hafnian_C / hafnian_D 的标量运算次数并拟合斜率"
        )
        parser.add_argument("kind", choices=TemplateKind.get_named_types(), help="模板类型")
        parser.add_argument("m_list", type=parse_int_list, help="逗号分隔的 m，如 10,20,40")
        parser.set_defaults(handler=self.cmd_bench)

    def cmd_bench(self, args: argparse.Namespace) -> int:
        kind = TemplateKind.from_name(args.kind)
        if any(m < 1 for m in args.m_list):
            raise ValueError(f"m 必须 ≥ 1: {args.m_list}")
        points = run_bench(kind, args.m_list)
        slope = fit_slope(points)

        if self.wants_json(args):
            point_dicts = [p.to_dict() for p in points]
            if not args.timing:
                for item in point_dicts:
                    item.pop("wall_ms")
            self.emit_record(OutputRecord(
                command="bench",
                params={"kind": kind.value, "m_list": list(args.m_list)},
                result={"points": point_dicts, "slope": None if math.isnan(slope) else round(slope, 6)}
            ), args)
            return 0

        # 墙钟时间不可复现，只在 --timing 时输出
        if args.timing:
            header = ("m", "ops", "wall_ms")
            rows = [(p.m, p.ops, f"{p.wall_ms:.3f}") for p in points]
        else:
            header = ("m", "ops")
            rows = [(p.m, p.ops) for p in points]
        for line in format_columns([header, *rows], COLUMN_WIDTHS):
            self.emit(line)
        self.emit(f"slope={slope:.3f}")
        return 0
