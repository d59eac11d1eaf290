# -*- coding: utf-8 -*-
"""子命令混入模块"""

from .table_mixin import TableMixin
from .hafnian_mixin import HafnianMixin
from .sequence_mixin import SequenceMixin
from .verify_mixin import VerifyMixin
from .bench_mixin import BenchMixin

__all__ = [
    'TableMixin',
    'HafnianMixin',
    'SequenceMixin',
    'VerifyMixin',
    'BenchMixin'
]
