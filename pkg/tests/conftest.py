import pytest

from structswitch import Pattern, SwitchedSystem

SEC5_JSON = '{"n":4,"modes":[{"A":[[1,2]]},{"A":[[3,2]]},{"A":[[4,4]]}]}'


def sec5_system():
    """Three-mode, four-state illustrative system: [A1]_12 = [A2]_32 = [A3]_44 = 1."""
    return SwitchedSystem(
        4,
        (
            Pattern(4, 4, ((1, 2),)),
            Pattern(4, 4, ((3, 2),)),
            Pattern(4, 4, ((4, 4),)),
        ),
    )


def merged_system():
    """Single mode whose dynamics are the union of the three modes above."""
    return SwitchedSystem(4, (Pattern(4, 4, ((1, 2), (3, 2), (4, 4))),))


def with_mode1_inputs(system, pattern):
    n = system.n
    return system.with_inputs([pattern] + [Pattern.zeros(n) for _ in range(system.m - 1)])


@pytest.fixture
def sec5():
    return sec5_system()


@pytest.fixture
def merged():
    return merged_system()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: s.split("  ", 1)[1]):
        terminalreporter.write_line(line)
