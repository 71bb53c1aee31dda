"""One test per acceptance criterion; each PASS/FAIL line is echoed in the terminal summary."""
import pytest

from crystaltrees import acceptance

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("check", acceptance.CRITERIA, ids=lambda c: c.__name__)
def test_criterion(check):
    result = check("full")
    print(result.line())
    ACCEPTANCE_LINES.append(result.line())
    assert result.passed, result.line()


if __name__ == "__main__":
    import sys
    results = acceptance.run_all("full")
    sys.exit(0 if all(r.passed for r in results) else 1)
