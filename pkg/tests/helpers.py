"""Shared plumbing for the test suite."""

from __future__ import annotations

import io
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from flowgraphs.cli import main as cli_main

TESTS_DIR = Path(__file__).parent
CORPUS_DIR = TESTS_DIR / "corpus"
GOLDEN_DIR = TESTS_DIR / "golden"

CORPUS = sorted(CORPUS_DIR.glob("*.mj"))


def run_cli(args: list[str], stdin_text: str | None = None) -> tuple[int, str, str]:
    """Run the fg CLI in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    if stdin_text is not None:
        sys.stdin = io.StringIO(stdin_text)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = cli_main(args)
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text()
