import pytest
from hypothesis import settings

from toeplitz_like.corpus import CorpusConfig, corpus

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def symbols():
    return corpus(CorpusConfig())


# acceptance verdicts, filled in by tests/test_acceptance.py
VERDICTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(VERDICTS):
        status, title, detail = VERDICTS[n]
        terminalreporter.write_line(f"{status} criterion {n}: {title} ({detail})")
