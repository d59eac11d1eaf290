# -*- coding: utf-8 -*-
"""
校验套件模块

把各模块的不变量组织成可命名的校验套件，供命令行 verify 调用。
quick 级别只做 n ≤ 8 的对照；full 级别覆盖全部验收范围。
"""

import logging
import random
from typing import Callable, Dict, List, Optional, Tuple

from .hafnian import (
    enumerate_pairings, hafnian_bruteforce, hafnian_scaled, hafnian_sum_expansion
)
from .matchings import (
    build_table, matching_counts_bruteforce, mu_C_closed, mu_D_closed,
    prop3_equivalence, tables_agree
)
from .matrix import SymmetricMatrix, build_template, instantiate
from .ring import BiPoly, pairing_count, poly_eval
from .twoparam import (
    mu_C_inner_sum, hafnian_C, hafnian_D, hafnian_two_param_general, sequence
)
from ..utils.constants import Method, TemplateKind, VerifyLevel
from ..utils.models import SuiteResult
from ..utils.settings import Settings
from ..utils.table_io import load_sequence_fixture, load_table_fixture
from ..utils.utils import fibonacci

logger = logging.getLogger(__name__)

# 各级别的规模参数
LEVEL_PARAMS: Dict[VerifyLevel, Dict[str, int]] = {
    VerifyLevel.QUICK: {
        "pairing_n": 8, "scaling_cases": 20, "scaling_n": 6, "sum_cases": 20,
        "bridge_n": 8, "table_n": 8, "prop3_max": 20, "symbolic_m": 3,
        "reduction_m": 8, "homomorphism_m": 4, "parity_m": 20,
    },
    VerifyLevel.FULL: {
        "pairing_n": 12, "scaling_cases": 100, "scaling_n": 8, "sum_cases": 200,
        "bridge_n": 12, "table_n": 14, "prop3_max": 60, "symbolic_m": 5,
        "reduction_m": 20, "homomorphism_m": 8, "parity_m": 60,
    },
}

NAMED_KINDS = (TemplateKind.C, TemplateKind.D)


def _random_matrix(rng: random.Random, n: int, low: int, high: int) -> SymmetricMatrix:
    return SymmetricMatrix.from_function(n, lambda i, j: rng.randint(low, high))


class VerificationRunner:
    """校验套件执行器"""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings.from_env()

    def suites(self) -> List[Tuple[str, Callable[[Dict[str, int], random.Random], Tuple[int, str]]]]:
        """(名称, 套件函数)；套件函数返回 (检查数, 失败说明)，说明为空表示通过"""
        return [
            ("pairing-enumeration", self.check_pairing_enumeration),
            ("scaling", self.check_scaling),
            ("sum-expansion", self.check_sum_expansion),
            ("perfect-matching-bridge", self.check_perfect_matching_bridge),
            ("four-way-agreement", self.check_four_way_agreement),
            ("bound-equivalence", self.check_prop3),
            ("row-one-laws", self.check_row_one_laws),
            ("fibonacci-diagonal", self.check_fibonacci_diagonal),
            ("table-fixtures", self.check_table_fixtures),
            ("sequence-fixtures", self.check_sequence_fixtures),
            ("symbolic-oracle", self.check_symbolic_oracle),
            ("reduction-consistency", self.check_reduction_consistency),
            ("degenerate-collapse", self.check_degenerate_collapse),
            ("evaluation-homomorphism", self.check_evaluation_homomorphism),
            ("parity-offset", self.check_parity_offset),
        ]

    def run(self, level: VerifyLevel) -> List[SuiteResult]:
        """按级别执行全部套件"""
        params = LEVEL_PARAMS[level]
        results = []
        for name, suite in self.suites():
            rng = random.Random(f"{self.settings.seed}:{name}")
            try:
                checked, failure = suite(params, rng)
                result = SuiteResult(name, not failure, checked, failure)
            except Exception as e:
                logger.exception(f"校验套件 {name} 异常")
                result = SuiteResult(name, False, 0, f"异常: {e}")
            logger.info(result.get_display_line())
            results.append(result)
        return results

    # ==================== hafnian 基准 ====================

    def check_pairing_enumeration(self, params, rng) -> Tuple[int, str]:
        checked = 0
        for n in range(0, params["pairing_n"] + 1, 2):
            pairings = list(enumerate_pairings(n))
            checked += 1
            if len(pairings) != pairing_count(n // 2) or len(set(pairings)) != len(pairings):
                return checked, f"n={n}: 划分数 {len(pairings)}"
        return checked, ""

    def check_scaling(self, params, rng) -> Tuple[int, str]:
        for case in range(params["scaling_cases"]):
            n = rng.choice(range(2, params["scaling_n"] + 1, 2))
            m = _random_matrix(rng, n, -3, 3)
            c = rng.randint(-2, 3)
            if hafnian_bruteforce(m.scale(c)) != hafnian_scaled(m, c):
                return case + 1, f"n={n}, c={c}"
        return params["scaling_cases"], ""

    def check_sum_expansion(self, params, rng) -> Tuple[int, str]:
        for case in range(params["sum_cases"]):
            a = _random_matrix(rng, 6, 0, 3)
            b = _random_matrix(rng, 6, 0, 3)
            if hafnian_sum_expansion(a, b) != hafnian_bruteforce(a + b):
                return case + 1, f"第 {case + 1} 组"
        return params["sum_cases"], ""

    def check_perfect_matching_bridge(self, params, rng) -> Tuple[int, str]:
        checked = 0
        for kind in NAMED_KINDS:
            for n in range(0, params["bridge_n"] + 1, 2):
                template = build_template(kind, n)
                checked += 1
                if hafnian_bruteforce(template.to_matrix()) != matching_counts_bruteforce(template)[n // 2]:
                    return checked, f"{kind.value}_{n}"
        return checked, ""

    # ==================== 匹配计数 ====================

    def check_four_way_agreement(self, params, rng) -> Tuple[int, str]:
        # 校验规模由级别决定，不受 HAFTOOLS_MAX_BRUTE 限制
        max_order = params["table_n"]
        for kind in NAMED_KINDS:
            tables = [build_table(kind, max_order, method) for method in Method]
            if not tables_agree(tables):
                return 0, f"{kind.value} 表不一致（N={max_order}）"
        return 2 * (max_order + 1), ""

    def check_prop3(self, params, rng) -> Tuple[int, str]:
        checked = 0
        limit = params["prop3_max"]
        for n in range(limit + 1):
            for k in range(limit + 1):
                if k % 2 == 1 and n == 2 * k:
                    continue
                left, right = prop3_equivalence(n, k)
                checked += 1
                if left != right:
                    return checked, f"n={n}, k={k}"
        return checked, ""

    def check_row_one_laws(self, params, rng) -> Tuple[int, str]:
        for n in range(2, 61):
            if n >= 3 and mu_C_closed(n, 1) != n - 2:
                return n, f"C: n={n}"
            if mu_D_closed(n, 1) != 2 * n - 3:
                return n, f"D: n={n}"
        return 59, ""

    def check_fibonacci_diagonal(self, params, rng) -> Tuple[int, str]:
        expected = fibonacci(13)
        actual = [mu_D_closed(2 * k, k) for k in range(13)]
        if actual != expected:
            return 13, f"{actual}"
        return 13, ""

    def check_table_fixtures(self, params, rng) -> Tuple[int, str]:
        checked = 0
        for kind in NAMED_KINDS:
            fixture = load_table_fixture(kind)
            for method in (Method.CLOSED, Method.RECURRENCE, Method.SERIES):
                checked += 1
                if build_table(kind, fixture.max_order, method).values != fixture.values:
                    return checked, f"{kind.value} / {method.value}"
        return checked, ""

    # ==================== 二参数 hafnian ====================

    def check_sequence_fixtures(self, params, rng) -> Tuple[int, str]:
        for kind in NAMED_KINDS:
            fixture = load_sequence_fixture(kind)
            if sequence(kind, len(fixture), 0, 1) != fixture:
                return 1, f"{kind.value} 序列"
        return 2, ""

    def check_symbolic_oracle(self, params, rng) -> Tuple[int, str]:
        a, b = BiPoly.symbol_a(), BiPoly.symbol_b()
        checked = 0
        for m in range(0, params["symbolic_m"] + 1):
            for kind, formula in ((TemplateKind.C, hafnian_C), (TemplateKind.D, hafnian_D)):
                checked += 1
                oracle = hafnian_bruteforce(instantiate(build_template(kind, 2 * m), a, b))
                if formula(m, a, b) != oracle:
                    return checked, f"{kind.value}, m={m}"
        return checked, ""

    def check_reduction_consistency(self, params, rng) -> Tuple[int, str]:
        checked = 0
        for m in range(params["reduction_m"] + 1):
            a, b = rng.randint(-5, 5), rng.randint(-5, 5)
            pairs = (
                (TemplateKind.C, hafnian_C, mu_C_closed),
                (TemplateKind.D, hafnian_D, mu_D_closed),
            )
            for kind, formula, mu in pairs:
                checked += 1
                template = build_template(kind, 2 * m)
                general = hafnian_two_param_general(template, a, b, lambda j: mu(2 * m, j))
                if formula(m, a, b) != general:
                    return checked, f"{kind.value}, m={m}, a={a}, b={b}"
        return checked, ""

    def check_degenerate_collapse(self, params, rng) -> Tuple[int, str]:
        for m in range(params["reduction_m"] + 1):
            b = rng.randint(-6, 6)
            expected = b ** m * pairing_count(m)
            if not hafnian_C(m, b, b) == hafnian_D(m, b, b) == expected:
                return m + 1, f"m={m}, b={b}"
        return params["reduction_m"] + 1, ""

    def check_evaluation_homomorphism(self, params, rng) -> Tuple[int, str]:
        sym_a, sym_b = BiPoly.symbol_a(), BiPoly.symbol_b()
        checked = 0
        for m in range(params["homomorphism_m"] + 1):
            a, b = rng.randint(-4, 4), rng.randint(-4, 4)
            for formula in (hafnian_C, hafnian_D):
                checked += 1
                if poly_eval(formula(m, sym_a, sym_b), a, b) != formula(m, a, b):
                    return checked, f"{formula.__name__}, m={m}, a={a}, b={b}"
        return checked, ""

    def check_parity_offset(self, params, rng) -> Tuple[int, str]:
        # m 为奇数时 k = 0 项的内层和本身为空
        checked = 0
        for m in range(1, params["parity_m"] + 1, 2):
            checked += 1
            if mu_C_inner_sum(m, 0, None) != 0:
                return checked, f"m={m}"
        return checked, ""


def all_passed(results: List[SuiteResult]) -> bool:
    return all(result.passed for result in results)
