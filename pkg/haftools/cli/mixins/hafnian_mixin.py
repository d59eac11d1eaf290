# -*- coding: utf-8 -*-
"""单个 hafnian 求值命令混入类"""

import argparse
import logging
from pathlib import Path

from ...core.hafnian import hafnian_bruteforce
from ...core.matrix import build_template, instantiate, load_template
from ...core.ring import RingElement, render, normalize
from ...core.twoparam import TwoParamSpec, hafnian_J, hafnian_two_param
from ...utils.constants import HafnianMethod, TemplateKind
from ...utils.exceptions import BruteForceLimitError, OrderError
from ...utils.models import OutputRecord
from .base import MixinBase

logger = logging.getLogger(__name__)


class HafnianMixin(MixinBase):
    """hafnian 子命令：Hf(T_{2m}(a, b))"""

    def add_hafnian_parser(self, subparsers, common: argparse.ArgumentParser) -> None:
        parser = subparsers.add_parser(
            "hafnian", parents=[common],
            help="计算 Hf(T_2m(a,b))；kind 为 C、D、J 或模板文件路径"
        )
        parser.add_argument("kind", help="C、D、J 或自定义模板文件")
        parser.add_argument("m", type=int, help="半阶数 m（矩阵阶数 2m）")
        parser.add_argument("a", help="整数、sym 或 a、b 的多项式")
        parser.add_argument("b", help="整数、sym 或 a、b 的多项式")
        parser.add_argument(
            "--method", default=HafnianMethod.FORMULA.value,
            choices=[m.value for m in HafnianMethod],
            help="formula（默认）或按定义暴力枚举"
        )
        parser.set_defaults(handler=self.cmd_hafnian)

    def cmd_hafnian(self, args: argparse.Namespace) -> int:
        if args.m < 0:
            raise ValueError(f"m 不能为负: {args.m}")
        a = self.parse_ring_argument(args.a, "a")
        b = self.parse_ring_argument(args.b, "b")
        method = HafnianMethod(args.method)

        value = normalize(self._evaluate(args.kind, args.m, a, b, method))

        if self.wants_json(args):
            self.emit_record(OutputRecord(
                command="hafnian",
                params={"kind": args.kind, "m": args.m, "a": args.a, "b": args.b,
                        "method": method.value},
                result=self.result_payload(value)
            ), args)
        else:
            self.emit(render(value))
        return 0

    def _evaluate(self, kind_text: str, m: int, a: RingElement, b: RingElement,
                  method: HafnianMethod) -> RingElement:
        name = kind_text.strip().upper()
        builtin = name == TemplateKind.J.value or name in TemplateKind.get_named_types()
        if method is HafnianMethod.BRUTE and builtin:
            self._check_brute_order(2 * m)
        if name == TemplateKind.J.value:
            # 命令行的 J 指常数矩阵 J_2m(b)
            if method is HafnianMethod.BRUTE:
                return hafnian_bruteforce(instantiate(build_template(TemplateKind.J, 2 * m), b, b))
            return hafnian_J(m, b)
        if name in TemplateKind.get_named_types():
            return hafnian_two_param(TwoParamSpec(TemplateKind(name), m, a, b), method)

        template = load_template(Path(kind_text))
        if template.order % 2:
            raise OrderError(f"自定义模板阶数必须为偶数: {template.order}")
        if template.order != 2 * m:
            raise OrderError(f"自定义模板阶数为 {template.order}，与 2m = {2 * m} 不一致")
        self._check_brute_order(template.order)
        logger.info(f"自定义模板按一般约化公式计算: 阶数 {template.order}")
        return hafnian_two_param(TwoParamSpec(template, m, a, b), method)

    def _check_brute_order(self, order: int) -> None:
        if order > self.settings.max_brute:
            raise BruteForceLimitError(
                f"暴力枚举的阶数上限为 {self.settings.max_brute}，请求为 {order}"
            )
