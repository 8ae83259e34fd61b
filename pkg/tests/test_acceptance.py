"""Acceptance suite: every criterion at its stated exact tolerance.

One test per criterion; each prints its PASS/FAIL line.  These are the
binding checks for the build; see the suite module for what each one runs.
"""

import pytest

from cubeiso import acceptance


@pytest.mark.parametrize(
    "number,name,fn",
    acceptance.ALL_CRITERIA,
    ids=[f"criterion_{n:02d}_{name.replace(' ', '_')}" for n, name, _ in acceptance.ALL_CRITERIA],
)
def test_criterion(number, name, fn):
    result = fn(acceptance.DEFAULT_SEED)
    status = "PASS" if result.passed else "FAIL"
    print(f"[{status}] {number:2d}. {name} ({result.elapsed:.1f}s): {result.detail}")
    assert result.passed, result.detail
