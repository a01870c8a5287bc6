def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        res = RESULTS[k]
        terminalreporter.write_line(f"{res.line()}  [{res.seconds:.1f}s]")
        for d in res.details:
            if not d.startswith("no closed form"):
                terminalreporter.write_line(f"    {d}")
