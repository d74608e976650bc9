from __future__ import annotations

import pytest
from hypothesis import strategies as st

from twostage import Instance

_acceptance_lines: list[str] = []


def jobs_strategy(max_n: int, max_dur: int):
    job = st.tuples(st.integers(0, max_dur), st.integers(0, max_dur))
    return st.lists(job, max_size=max_n)


@st.composite
def instances(draw, max_n=8, max_dur=8, ms=(2, 3)):
    jobs = draw(jobs_strategy(max_n, max_dur))
    return Instance(jobs, draw(st.sampled_from(ms)))


@pytest.fixture
def report():
    def record(name: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
        _acceptance_lines.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
