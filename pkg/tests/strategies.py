# -*- coding: utf-8 -*-
"""测试用 hypothesis 策略"""

from hypothesis import strategies as st

from haftools.core.matrix import SymmetricMatrix
from haftools.core.ring import BiPoly

small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def symmetric_matrices(draw, orders=(0, 2, 4, 6), elements=small_ints):
    """零对角线对称整数矩阵"""
    n = draw(st.sampled_from(orders))
    entries = draw(st.lists(elements, min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    return SymmetricMatrix(n, tuple(entries))


@st.composite
def matrix_pairs(draw, orders=(0, 2, 4, 6)):
    """同阶的两个矩阵"""
    n = draw(st.sampled_from(orders))
    first = draw(symmetric_matrices(orders=(n,)))
    second = draw(symmetric_matrices(orders=(n,)))
    return first, second


monomials = st.tuples(st.integers(0, 3), st.integers(0, 3))

bipolys = st.dictionaries(monomials, st.integers(-5, 5), max_size=4).map(BiPoly.from_terms)
