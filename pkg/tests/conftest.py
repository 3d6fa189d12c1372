import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

settings.register_profile("default", deadline=None, max_examples=150, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from moonfill.fillings import Filling  # noqa: E402
from moonfill.partitions import Partition  # noqa: E402
from moonfill.polyomino import rectangle  # noqa: E402


@st.composite
def partitions(draw, max_size=10):
    n = draw(st.integers(0, max_size))
    parts = []
    while n:
        p = draw(st.integers(1, min(n, parts[-1] if parts else n)))
        parts.append(p)
        n -= p
    return Partition(parts)


@st.composite
def rect_fillings(draw, max_w=4, max_h=4, max_entry=2, min_w=1, min_h=1):
    w = draw(st.integers(min_w, max_w))
    h = draw(st.integers(min_h, max_h))
    vals = draw(st.lists(st.integers(0, max_entry), min_size=w * h, max_size=w * h))
    return Filling.of(rectangle(w, h), {(i % w, i // w): m for i, m in enumerate(vals)})


@st.composite
def partial_rect_fillings(draw, max_w=5, max_h=5, min_w=1, min_h=1):
    w = draw(st.integers(min_w, max_w))
    h = draw(st.integers(min_h, max_h))
    cols = draw(st.permutations(range(w)))
    rows = draw(st.permutations(range(h)))
    k = draw(st.integers(0, min(w, h)))
    return Filling.of(rectangle(w, h), {(cols[i], rows[i]): 1 for i in range(k)})


@st.composite
def permutations_(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    return list(draw(st.permutations(range(1, n + 1))))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, note = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {note}")
