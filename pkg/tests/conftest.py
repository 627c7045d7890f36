from __future__ import annotations

from hypothesis import strategies as st

from balpha import graph as gr


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9, connected: bool = False):
    """Random simple graphs; with ``connected=True`` a random spanning tree is added first."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = {p for p in pairs if draw(st.booleans())}
    if connected:
        for v in range(1, n):
            u = draw(st.integers(min_value=0, max_value=v - 1))
            chosen.add((u, v))
    return gr.from_edge_list(n, sorted(chosen))


alphas = st.fractions(min_value=0, max_value=1, max_denominator=60)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
