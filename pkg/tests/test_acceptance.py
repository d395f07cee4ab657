import pytest

import acceptance

RESULTS = {}


@pytest.mark.parametrize("n", sorted(acceptance.CRITERIA))
def test_criterion(n):
    ok, detail, dt = acceptance.run(n)
    RESULTS[n] = acceptance.line(n, ok, detail, dt)
    print(RESULTS[n])
    assert ok, RESULTS[n]


if __name__ == "__main__":
    for n in sorted(acceptance.CRITERIA):
        print(acceptance.line(n, *acceptance.run(n)))
