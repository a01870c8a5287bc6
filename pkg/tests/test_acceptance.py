"""The nine acceptance checks; each prints one PASS/FAIL line (collected again in the run summary)."""

import pytest

from genus_spectra.acceptance import CHECKS

RESULTS = {}


@pytest.mark.parametrize("number", sorted(CHECKS), ids=lambda k: f"criterion_{k}")
def test_criterion(number):
    res = CHECKS[number]()
    RESULTS[number] = res
    print(res.line())
    assert res.passed, "\n".join([res.line(), *res.details])


if __name__ == "__main__":
    for k in sorted(CHECKS):
        print(CHECKS[k]().line(), flush=True)
