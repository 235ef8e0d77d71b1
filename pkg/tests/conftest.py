import os
import sys
from pathlib import Path

from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from knotledger.algebra import IntMatrix  # noqa: E402
from knotledger.seifert import SeifertMatrix  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "knotledger" / "fixtures"


@st.composite
def symmetric_matrices(draw, max_dim=6, bound=5, min_dim=0):
    n = draw(st.integers(min_dim, max_dim))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = draw(st.integers(-bound, bound))
    return IntMatrix(rows)


@st.composite
def seifert_matrices(draw, max_genus=3, min_genus=0):
    """A + U: A random symmetric, U the upper half of the standard symplectic form."""
    g = draw(st.integers(min_genus, max_genus))
    A = draw(symmetric_matrices(min_dim=2 * g, max_dim=2 * g))
    rows = A.tolist()
    for k in range(g):
        rows[2 * k][2 * k + 1] += 1
    return SeifertMatrix(IntMatrix(rows))


settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, verdict = results[number]
        terminalreporter.write_line("criterion %d: %s  %s" % (number, verdict, title))
