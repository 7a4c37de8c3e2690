import pytest

from grundy_spectral.errors import GraphFormatError
from grundy_spectral.verify import SUITES, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name):
    results = run_suite(name)
    assert results, name
    failures = [r for r in results if not r.passed]
    assert not failures, failures


def test_unknown_suite_rejected():
    with pytest.raises(GraphFormatError):
        run_suite("does-not-exist")
