"""Parity between the pure-Python scanning kernels and the compiled twin."""

import random
import string

import pytest

from pragmaport import _scan_py

try:
    from pragmaport import _speedups
except ImportError:  # extension not built; the fallback is the only impl
    _speedups = None

IMPLS = [(_scan_py, "pure")]
if _speedups is not None:
    IMPLS.append((_speedups, "compiled"))

TRICKY = [
    "",
    "(a, b)",
    "(a, (b, c)], d",  # mismatched closer
    "'('",
    '"un terminated\nnext line"',
    "f('\\'', \",\")",
    "nested((((x))))",
    "/* not a comment here */ (x)",
    "a\nb\nc",
    "line1 // comment ( \nline2 ) \n/* span\nspan */ tail(',')",
    "'\\\\', x",
]


@pytest.mark.parametrize("impl,label", IMPLS, ids=[label for _, label in IMPLS])
def test_tricky_inputs(impl, label):
    for text in TRICKY:
        assert impl.split_points(text) == _scan_py.split_points(text)
        assert impl.line_table(text) == _scan_py.line_table(text)
        if text.startswith("("):
            assert impl.scan_balanced(text, 0) == _scan_py.scan_balanced(text, 0)


@pytest.mark.skipif(_speedups is None, reason="compiled scanner not built")
def test_random_parity():
    rng = random.Random(1337)
    alphabet = string.ascii_letters + "(),[]{}'\"\\ \n\t/*#,"
    for _ in range(2000):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 120)))
        assert _speedups.split_points(text) == _scan_py.split_points(text), repr(text)
        assert _speedups.line_table(text) == _scan_py.line_table(text), repr(text)
        start = text.find("(")
        if start >= 0:
            assert _speedups.scan_balanced(text, start) == _scan_py.scan_balanced(
                text, start
            ), repr(text)


def test_env_var_selects_pure(tmp_path):
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-c", "from pragmaport.parser import SCAN_IMPL; print(SCAN_IMPL)"],
        capture_output=True,
        text=True,
        env={"PRAGMAPORT_PURE": "1", "PATH": "/usr/bin:/bin"},
    )
    assert out.stdout.strip() == "_scan_py"
