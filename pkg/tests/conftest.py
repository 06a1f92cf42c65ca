from hypothesis import settings

from acceptance_log import RESULTS

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
