"""One summary line per acceptance criterion after the run."""

CRITERIA = {
    1: "pure-power examples, exact and under 1 ms",
    2: "(xy, z^2) third power and decomposition",
    3: "two-variable principality example",
    4: "three-variable table, all four rows, under 60 s",
    5: "oracle equivalence on 200 random ideals, n <= 5",
    6: "identity suite on the random corpus",
    7: "containment constants and no-uniform witnesses",
    8: "closure suite and witness certificates",
    9: "CLI goldens, round-trip corpus, (xy^2, x^3) staircase",
}
_results: dict[int, list[bool]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key in report.keywords:
        if key.startswith("criterion_"):
            _results.setdefault(int(key.split("_")[1]), []).append(report.passed)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            item.keywords[f"criterion_{m.args[0]}"] = True


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(CRITERIA):
        runs = _results.get(k)
        if runs is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(runs) else "FAIL"
        tr.write_line(f"criterion {k}: {status:7s} {CRITERIA[k]} ({len(runs or [])} checks)")
