# -*- coding: utf-8 -*-
"""
环模块

环元素为 Python 任意精度整数或 a、b 的整系数二元多项式 BiPoly。
整数可嵌入 BiPoly（(0, 0) 次项），两者混合运算结果为 BiPoly。
全局约定 0^0 = 1。
"""

from math import comb
from typing import Dict, Mapping, Optional, Tuple, Union

import sympy as sp
from sympy.polys.polyerrors import BasePolynomialError

from ..utils.constants import POLYNOMIAL_PATTERN
from ..utils.exceptions import SymbolError
from ..utils.models import OpCounter

SYMBOL_A, SYMBOL_B = sp.symbols("a b")
GENS = (SYMBOL_A, SYMBOL_B)

Monomial = Tuple[int, int]


class BiPoly:
    """a、b 的整系数多项式，封装 sympy.Poly（ZZ 上，稀疏存储）"""

    __slots__ = ("_poly",)

    def __init__(self, poly: sp.Poly):
        self._poly = poly

    # ==================== 构造 ====================

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, int]) -> 'BiPoly':
        """由 {(i, j): c} 创建，表示 Σ c·a^i·b^j"""
        rep = {(int(i), int(j)): int(c) for (i, j), c in terms.items() if c}
        if not rep:
            return cls.zero()
        return cls(sp.Poly.from_dict(rep, *GENS, domain="ZZ"))

    @classmethod
    def constant(cls, value: int) -> 'BiPoly':
        return cls(sp.Poly(int(value), *GENS, domain="ZZ"))

    @classmethod
    def zero(cls) -> 'BiPoly':
        return cls.constant(0)

    @classmethod
    def symbol_a(cls) -> 'BiPoly':
        return cls.from_terms({(1, 0): 1})

    @classmethod
    def symbol_b(cls) -> 'BiPoly':
        return cls.from_terms({(0, 1): 1})

    @classmethod
    def parse(cls, text: str) -> 'BiPoly':
        """解析 a、b 的整系数多项式，如 "2*a**2 + a*b" 或 "a^2-1" """
        source = text.strip()
        if not source:
            raise SymbolError("多项式为空")
        if not POLYNOMIAL_PATTERN.match(source):
            raise SymbolError(f"多项式只能包含整数、a、b 与 + - * ^ ( ): {text!r}")
        source = source.replace("^", "**")
        try:
            expr = sp.sympify(source, locals={"a": SYMBOL_A, "b": SYMBOL_B})
            poly = sp.Poly(expr, *GENS, domain="ZZ")
        except (sp.SympifyError, BasePolynomialError, TypeError, SyntaxError) as e:
            raise SymbolError(f"无法解析多项式 {text!r}: {e}")
        return cls(poly)

    # ==================== 查询 ====================

    def terms(self) -> Dict[Monomial, int]:
        """非零项 {(i, j): c}"""
        return {
            (int(i), int(j)): int(c)
            for (i, j), c in self._poly.terms()
            if c != 0
        }

    @property
    def is_zero(self) -> bool:
        return self._poly.is_zero

    def is_constant(self) -> bool:
        return all(mon == (0, 0) for mon in self.terms())

    def total_degree(self) -> int:
        """总次数；零多项式返回 -1"""
        terms = self.terms()
        return max((i + j for i, j in terms), default=-1)

    def evaluate(self, a: int, b: int) -> int:
        """代入整数值"""
        return sum(c * a ** i * b ** j for (i, j), c in self.terms().items())

    # ==================== 运算 ====================

    @staticmethod
    def _coerce(other: object) -> Optional['BiPoly']:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.constant(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return BiPoly(self._poly + rhs._poly)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return BiPoly(self._poly - rhs._poly)

    def __rsub__(self, other):
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return BiPoly(lhs._poly - self._poly)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return BiPoly(self._poly * rhs._poly)

    __rmul__ = __mul__

    def __neg__(self):
        return BiPoly(-self._poly)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError(f"不支持负指数: {exponent}")
        if exponent == 0:
            return BiPoly.constant(1)
        return BiPoly(self._poly ** exponent)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.terms() == rhs.terms()

    def __hash__(self) -> int:
        terms = self.terms()
        if self.is_constant():
            return hash(terms.get((0, 0), 0))
        return hash(frozenset(terms.items()))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"BiPoly({render(self)!r})"


RingElement = Union[int, BiPoly]


# ==================== 组合数 ====================

def binomial(n: int, k: int, counter: Optional[OpCounter] = None) -> int:
    """二项式系数 C(n, k)；k < 0 或 k > n 时为 0"""
    if n < 0:
        raise ValueError(f"二项式系数要求 n >= 0: n={n}")
    if k < 0 or k > n:
        return 0
    if counter is not None:
        # 乘法公式每步一次乘法、一次整除
        counter.add_binomial_steps(2 * min(k, n - k))
    return comb(n, k)


def pairing_count(k: int) -> int:
    """(2k)!/(k!·2^k) = (2k-1)!!，即 2k 元集合的配对划分数"""
    if k < 0:
        raise ValueError(f"配对数要求 k >= 0: k={k}")
    result = 1
    for odd in range(1, 2 * k, 2):
        result *= odd
    return result


# ==================== 环元素工具 ====================

def ring_pow(x: RingElement, exponent: int) -> RingElement:
    """幂运算，约定 0^0 = 1"""
    if exponent < 0:
        raise ValueError(f"不支持负指数: {exponent}")
    if exponent == 0:
        return 1
    return x ** exponent


def is_zero(x: RingElement) -> bool:
    return not x


def poly_eval(p: RingElement, a: int, b: int) -> int:
    """将形式符号 a、b 代入整数值"""
    if isinstance(p, BiPoly):
        return p.evaluate(a, b)
    return int(p)


def normalize(x: RingElement) -> RingElement:
    """常数多项式化简为整数"""
    if isinstance(x, BiPoly) and x.is_constant():
        return x.terms().get((0, 0), 0)
    return x


def _render_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("a" if i == 1 else f"a^{i}")
    if j:
        parts.append("b" if j == 1 else f"b^{j}")
    return "".join(parts)


def render(x: RingElement) -> str:
    """规范文本：整数按完整十进制；多项式按 (a 的次数, b 的次数) 降序"""
    if not isinstance(x, BiPoly):
        return str(int(x))
    terms = x.terms()
    if not terms:
        return "0"
    ordered = sorted(terms.items(), key=lambda item: (-item[0][0], -item[0][1]))
    pieces = []
    for index, ((i, j), c) in enumerate(ordered):
        monomial = _render_monomial(i, j)
        magnitude = abs(c)
        if monomial:
            body = monomial if magnitude == 1 else f"{magnitude}{monomial}"
        else:
            body = str(magnitude)
        if index == 0:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces)
