"""Acceptance suite: every shipped identity at full scale, zero tolerance.

One test per criterion; each prints its own PASS/FAIL line (run pytest
with -s to watch them stream).  The bounds are the full verification
bounds, not smoke-test bounds, and the three long-running criteria also
assert their wall-clock budgets.
"""

import pytest

from cyclicsieve.selftest import CRITERIA, run_criterion

FULL_SCALE = 12  # every criterion caps itself at its own natural bound

TIME_BUDGETS = {1: 30.0, 2: 60.0, 4: 120.0}


@pytest.mark.parametrize("cid,name", [(cid, name) for cid, name, _ in CRITERIA])
def test_criterion(cid, name):
    result = run_criterion(cid, FULL_SCALE)
    print(result.line())
    assert result.passed, f"criterion {cid} ({name}): {result.detail}"
    if cid in TIME_BUDGETS:
        assert result.seconds < TIME_BUDGETS[cid], (
            f"criterion {cid} took {result.seconds:.1f}s, budget {TIME_BUDGETS[cid]}s"
        )
