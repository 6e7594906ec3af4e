"""One test per acceptance criterion; each prints a PASS/FAIL line."""
import pytest

from qwalk.acceptance import CRITERIA


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    result = CRITERIA[number]()
    with capsys.disabled():
        print()
        print(result.line())
        for d in result.details:
            print(f"    {d}")
    assert result.passed, "; ".join(result.details)
