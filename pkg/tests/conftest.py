from hypothesis import settings

settings.register_profile("exhaustive", max_examples=1000, derandomize=True, deadline=None)
settings.register_profile("default", max_examples=200, derandomize=True, deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        status, title = RESULTS[number]
        terminalreporter.write_line(f"{status} criterion {number}: {title}")
