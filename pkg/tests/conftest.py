import pytest

import acceptance_log
from pfrep.corpus import distinct_algebras, generate


@pytest.fixture(scope="session")
def corpus():
    return generate()


@pytest.fixture(scope="session")
def distinct_corpus(corpus):
    return distinct_algebras(corpus)


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, _, line in sorted(acceptance_log.RESULTS):
        terminalreporter.write_line(line)
