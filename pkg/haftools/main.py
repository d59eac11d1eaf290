# -*- coding: utf-8 -*-
"""
haftools 主程序入口

用法：
    python -m haftools table C 12
    python -m haftools hafnian D 4 sym sym
    python -m haftools sequence C 10 0 1 --check-fixture
    python -m haftools verify quick
    python -m haftools bench C 10,20,40,80
"""

import sys
from typing import Optional, Sequence

from haftools.cli import HafToolsCLI


def main(argv: Optional[Sequence[str]] = None):
    """主程序入口"""
    sys.exit(HafToolsCLI().run(argv))


if __name__ == "__main__":
    main()
