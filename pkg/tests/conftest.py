import pytest
from hypothesis import settings

from hyperanimals import new_context

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

REPRESENTATIVES = [(3, 7), (3, 8), (4, 5), (4, 6), (5, 4), (5, 5), (6, 4), (7, 3), (8, 3), (9, 3)]
HYPERBOLIC_12 = [(p, q) for p in range(3, 13) for q in range(3, 13) if (p - 2) * (q - 2) > 4]


@pytest.fixture(params=REPRESENTATIVES, ids=lambda pq: f"{pq[0]}-{pq[1]}")
def rep_ctx(request):
    return new_context(*request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)


def sig_id(pq):
    return f"{pq[0]}-{pq[1]}"
