# -*- coding: utf-8 -*-
"""命令行模块"""

from .app import HafToolsCLI

__all__ = ['HafToolsCLI']
