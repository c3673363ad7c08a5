import sys

import pytest

from homcount.categories import POSET_KINDS, build_ab_category, build_group_category, build_poset_category


def shipped_categories(max_depth: int = 6):
    """Every builder at every depth up to ``max_depth``, with a display id."""
    out = []
    for k in range(max_depth + 1):
        out.append((f"ab{k}", build_ab_category(k)))
        out.append((f"ab{k}-plain", build_ab_category(k, boundary=False)))
        for kind in POSET_KINDS:
            out.append((f"{kind}{k}", build_poset_category(kind, k)))
    for order in range(1, 7):
        out.append((f"groups{order}", build_group_category(order)))
    return out


@pytest.fixture(scope="session")
def groups6():
    return build_group_category(6)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        title, passed = acceptance.RESULTS[number]
        terminalreporter.write_line(f"criterion {number} ({title}): {'PASS' if passed else 'FAIL'}")
