"""Rewrite tests/golden/*.out from the current CLI.

Only run this after checking a change by hand; the goldens are the reference
values for the worked examples.
"""

import contextlib
import io
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(HERE, "..", "tests"))

from golden_cases import GOLDEN, GOLDEN_DIR  # noqa: E402

from moonfill.cli import main  # noqa: E402


def render(args):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main([os.path.join(GOLDEN_DIR, a) if a.endswith((".grid", ".chain", ".labels")) else a for a in args])
    if code:
        raise SystemExit(f"{args}: exit {code}")
    return buf.getvalue()


if __name__ == "__main__":
    for name, args in GOLDEN.items():
        with open(os.path.join(GOLDEN_DIR, name + ".out"), "w", encoding="utf-8") as fh:
            fh.write(render(args))
        print("wrote", name)
