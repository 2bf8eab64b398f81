"""The ten acceptance criteria; each prints one PASS/FAIL line."""
import pytest

from hopfpairs import acceptance

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("number", [k for k, *_ in acceptance.CRITERIA],
                         ids=[f"{k:02d}-{fn.__name__}" for k, _, fn, _ in acceptance.CRITERIA])
def test_criterion(number):
    outcome = acceptance.run_one(number)
    line = outcome.line()
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert outcome.report.ok, outcome.report.failures[:5]
    assert outcome.seconds < outcome.budget, f"took {outcome.seconds:.1f}s, budget {outcome.budget}s"
