import pytest
from hypothesis import settings

from hyperquad import GF, RationalFunctionField, SymbolicField

settings.register_profile('default', deadline=None, max_examples=100)
settings.load_profile('default')

ACCEPTANCE_LINES = []


@pytest.fixture
def F11():
    return GF(11)


@pytest.fixture
def K11():
    return RationalFunctionField(11)


@pytest.fixture
def S():
    return SymbolicField()


@pytest.fixture
def sym(S):
    """Name -> SymRat for a, b, c, d and their derivative symbols."""
    return {n: S.var(n) for n in S.variables}


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion."""
    name = request.node.get_closest_marker('criterion').args[0]
    yield
    rep = getattr(request.node, 'rep_call', None)
    status = 'PASS' if rep is not None and rep.passed else 'FAIL'
    ACCEPTANCE_LINES.append(f'{status}  criterion {name}')


def pytest_configure(config):
    config.addinivalue_line('markers', 'criterion(name): acceptance criterion')


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == 'call':
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section('acceptance criteria')
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
