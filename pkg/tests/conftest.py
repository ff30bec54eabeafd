import numpy as np
import pytest

from minkqm import profiles


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=list(profiles.FAMILY_SAMPLES))
def table_family(request):
    return profiles.make(request.param)


def random_points(fam, rng, n):
    """``n`` points ``(q1, q2)`` inside the family's domain, at most 3 scale lengths out."""
    lo, hi = fam.profile.domain
    s = fam.profile.scale
    lo = lo + 0.05 * s if np.isfinite(lo) else -3.0 * s
    hi = hi - 0.05 * s if np.isfinite(hi) else lo + 3.0 * s
    return np.column_stack([rng.uniform(-2.0, 2.0, n), rng.uniform(lo, hi, n)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
