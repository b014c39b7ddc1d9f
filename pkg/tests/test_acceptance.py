"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line."""

import pytest

from nadyn.acceptance import CRITERIA, run_criterion

RESULTS = []


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA], ids=lambda n: f"criterion_{n}")
def test_acceptance_criterion(number, capsys):
    result = run_criterion(number)
    RESULTS.append(result)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
