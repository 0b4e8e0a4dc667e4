"""Fixtures for starbench command-line tests."""

import pytest

from starbench.cli import run


@pytest.fixture
def cli(capsys):
    """Run the command line; returns (exit code, stdout lines, stderr)."""

    def invoke(*argv):
        code = run([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out.splitlines(), captured.err

    return invoke
