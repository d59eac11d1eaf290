# -*- coding: utf-8 -*-
import io
from pathlib import Path
from typing import List, NamedTuple, Optional

import pytest

from haftools.cli import HafToolsCLI
from haftools.utils.settings import Settings
from haftools.utils.table_io import fixtures_path


class CliResult(NamedTuple):
    code: int
    out: str
    err: str

    @property
    def lines(self) -> List[str]:
        return self.out.splitlines()


@pytest.fixture
def run_cli():
    """在内存中执行命令行，返回 (退出码, stdout, stderr)"""

    def run(*argv: str, settings: Optional[Settings] = None) -> CliResult:
        stdout, stderr = io.StringIO(), io.StringIO()
        cli = HafToolsCLI(settings=settings or Settings(), stdout=stdout, stderr=stderr)
        code = cli.run(list(argv))
        return CliResult(int(code), stdout.getvalue(), stderr.getvalue())

    return run


@pytest.fixture
def fixture_dir() -> Path:
    return fixtures_path()
