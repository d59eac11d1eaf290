# -*- coding: utf-8 -*-
import pytest
from hypothesis import given, settings, strategies as st

from haftools.core.hafnian import (
    enumerate_pairings, hafnian_bruteforce, hafnian_scaled, hafnian_sum_expansion
)
from haftools.core.matchings import matching_counts_bruteforce
from haftools.core.matrix import SymmetricMatrix, build_template, instantiate, zero_matrix
from haftools.core.ring import BiPoly, pairing_count, render
from haftools.utils.constants import TemplateKind
from haftools.utils.exceptions import OrderError

from .strategies import matrix_pairs, symmetric_matrices


class TestEnumeratePairings:
    def test_order_four(self):
        assert list(enumerate_pairings(4)) == [
            ((1, 2), (3, 4)),
            ((1, 3), (2, 4)),
            ((1, 4), (2, 3)),
        ]

    def test_empty(self):
        assert list(enumerate_pairings(0)) == [()]

    @pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
    def test_count_and_uniqueness(self, n):
        pairings = list(enumerate_pairings(n))
        assert len(pairings) == pairing_count(n // 2)
        assert len(set(pairings)) == len(pairings)
        for pairing in pairings:
            assert sorted(i for pair in pairing for i in pair) == list(range(1, n + 1))
            assert all(i < j for i, j in pairing)

    def test_slices_partition_the_enumeration(self):
        full = set(enumerate_pairings(8))
        slices = [set(enumerate_pairings(8, first_partner=p)) for p in range(2, 9)]
        assert sum(len(s) for s in slices) == len(full)
        assert set().union(*slices) == full

    @pytest.mark.parametrize("n", [1, 3, -2])
    def test_odd_or_negative_order(self, n):
        with pytest.raises(OrderError):
            list(enumerate_pairings(n))

    def test_first_partner_range(self):
        with pytest.raises(OrderError):
            list(enumerate_pairings(4, first_partner=5))


class TestBruteForce:
    def test_generic_four_by_four(self):
        # a12·a34 + a13·a24 + a14·a23
        m = SymmetricMatrix.from_rows([
            [0, 2, 3, 5],
            [2, 0, 7, 11],
            [3, 7, 0, 13],
            [5, 11, 13, 0],
        ])
        assert hafnian_bruteforce(m) == 2 * 13 + 3 * 11 + 5 * 7

    def test_empty_matrix(self):
        assert hafnian_bruteforce(SymmetricMatrix.empty()) == 1

    def test_all_ones(self):
        ones = build_template(TemplateKind.J, 4).to_matrix()
        assert hafnian_bruteforce(ones) == 3
        assert hafnian_bruteforce(build_template(TemplateKind.J, 6).to_matrix()) == 15

    def test_symbolic_d4(self):
        a, b = BiPoly.symbol_a(), BiPoly.symbol_b()
        value = hafnian_bruteforce(instantiate(build_template(TemplateKind.D, 4), a, b))
        assert render(value) == "2a^2 + ab"

    def test_zero_matrix(self):
        assert hafnian_bruteforce(zero_matrix(6)) == 0

    def test_odd_order(self):
        with pytest.raises(OrderError):
            hafnian_bruteforce(zero_matrix(3))

    def test_slices_sum_to_whole(self):
        m = SymmetricMatrix.from_function(6, lambda i, j: i * j + 1)
        assert sum(hafnian_bruteforce(m, first_partner=p) for p in range(2, 7)) == hafnian_bruteforce(m)

    @pytest.mark.parametrize("kind", [TemplateKind.C, TemplateKind.D])
    @pytest.mark.parametrize("n", [0, 2, 4, 6, 8, 10])
    def test_perfect_matching_bridge(self, kind, n):
        template = build_template(kind, n)
        assert hafnian_bruteforce(template.to_matrix()) == matching_counts_bruteforce(template)[n // 2]


class TestScaling:
    @settings(max_examples=60, deadline=None)
    @given(symmetric_matrices(), st.integers(-3, 3))
    def test_scaling(self, m, c):
        assert hafnian_bruteforce(m.scale(c)) == c ** (m.order // 2) * hafnian_bruteforce(m)
        assert hafnian_scaled(m, c) == hafnian_bruteforce(m.scale(c))

    def test_symbolic_scalar(self):
        m = build_template(TemplateKind.J, 4).to_matrix()
        a = BiPoly.symbol_a()
        assert render(hafnian_scaled(m, a)) == "3a^2"

    def test_odd_order(self):
        with pytest.raises(OrderError):
            hafnian_scaled(zero_matrix(5), 2)


class TestSumExpansion:
    @settings(max_examples=40, deadline=None)
    @given(matrix_pairs())
    def test_matches_bruteforce(self, pair):
        first, second = pair
        assert hafnian_sum_expansion(first, second) == hafnian_bruteforce(first + second)

    def test_two_param_split(self):
        # T(a, b) = J(b) + T(a - b, 0)
        a, b = BiPoly.symbol_a(), BiPoly.symbol_b()
        template = build_template(TemplateKind.C, 6)
        whole = hafnian_bruteforce(instantiate(template, a, b))
        split = hafnian_sum_expansion(instantiate(template, a - b, 0), instantiate(template, b, b))
        assert split == whole

    def test_order_mismatch(self):
        with pytest.raises(OrderError):
            hafnian_sum_expansion(zero_matrix(2), zero_matrix(4))

    def test_odd_order(self):
        with pytest.raises(OrderError):
            hafnian_sum_expansion(zero_matrix(3), zero_matrix(3))

    def test_order_cap(self):
        with pytest.raises(OrderError):
            hafnian_sum_expansion(zero_matrix(12), zero_matrix(12))
