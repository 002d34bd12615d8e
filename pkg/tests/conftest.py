import os

from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=200, deadline=None)
settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def words(max_size=8, k=3):
    return st.lists(st.integers(0, k - 1), max_size=max_size).map(tuple)


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
