import json

import pytest

from ssmass.arith_data import PELInput


@pytest.fixture
def q7():
    return PELInput.over_Q(m=1, N=3, p=7)


@pytest.fixture
def write_deck(tmp_path):
    def _write(doc, name="deck.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return _write


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.line(n))
