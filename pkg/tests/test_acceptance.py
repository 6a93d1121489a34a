"""The ten acceptance criteria, one test each, with a summary line per criterion."""

import pytest

from toroidal_ff.verification import CRITERIA, criterion


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    result = criterion(k)
    with capsys.disabled():
        print(f"\n[acceptance] {result.line()}")
    assert result.passed, result.detail
