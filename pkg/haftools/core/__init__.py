# -*- coding: utf-8 -*-
"""
核心模块
"""

from .ring import BiPoly, binomial, pairing_count, poly_eval, render
from .matrix import (
    SymmetricMatrix, Template, build_template, instantiate,
    submatrix_drop, submatrix_keep
)
from .hafnian import (
    enumerate_pairings, hafnian_bruteforce, hafnian_scaled, hafnian_sum_expansion
)
from .matchings import (
    MatchingTable, SeriesTruncation, build_table, gf_series, mu_bruteforce, mu_C_closed,
    mu_C_recurrence, mu_D_closed, mu_D_recurrence, prop3_equivalence
)
from .twoparam import (
    TwoParamSpec, hafnian_C, hafnian_D, hafnian_two_param, hafnian_two_param_general, sequence
)

__all__ = [
    'BiPoly', 'binomial', 'pairing_count', 'poly_eval', 'render',
    'SymmetricMatrix', 'Template', 'build_template', 'instantiate',
    'submatrix_drop', 'submatrix_keep',
    'enumerate_pairings', 'hafnian_bruteforce', 'hafnian_scaled', 'hafnian_sum_expansion',
    'MatchingTable', 'SeriesTruncation', 'build_table', 'gf_series', 'mu_bruteforce', 'mu_C_closed',
    'mu_C_recurrence', 'mu_D_closed', 'mu_D_recurrence', 'prop3_equivalence',
    'TwoParamSpec', 'hafnian_C', 'hafnian_D', 'hafnian_two_param',
    'hafnian_two_param_general', 'sequence'
]
