"""Pure-Python character-scanning kernels.

Kept in lockstep with the compiled module `_speedups`; either can serve as
the parser's scanning core. Semantics:

* brackets ``()[]{}`` contribute symmetrically to nesting depth,
* string and character literals (with backslash escapes) never contribute
  to depth and never hold splitting commas; an unterminated literal ends
  at the newline.
"""

from __future__ import annotations

_OPEN = "([{"
_CLOSE = ")]}"


def skip_literal(text: str, i: int) -> int:
    """Return the index just past the literal opening at text[i]."""
    quote = text[i]
    n = len(text)
    i += 1
    while i < n:
        c = text[i]
        if c == "\\":
            i += 2
            continue
        if c == quote:
            return i + 1
        if c == "\n":
            return i
        i += 1
    return n


def scan_balanced(text: str, start: int) -> int:
    """Index just past the ')' matching the '(' at ``start``; -1 if unbalanced.

    Newlines inside the span are allowed, so argument lists may wrap lines.
    """
    n = len(text)
    depth = 0
    i = start
    while i < n:
        c = text[i]
        if c == '"' or c == "'":
            i = skip_literal(text, i)
            continue
        if c in _OPEN:
            depth += 1
        elif c in _CLOSE:
            depth -= 1
            if depth == 0:
                return i + 1 if c == ")" else -1
            if depth < 0:
                return -1
        i += 1
    return -1


def split_points(text: str) -> list[int]:
    """Offsets of top-level commas in the interior of an argument list."""
    points: list[int] = []
    depth = 0
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c == '"' or c == "'":
            i = skip_literal(text, i)
            continue
        if c in _OPEN:
            depth += 1
        elif c in _CLOSE:
            depth -= 1
        elif c == "," and depth == 0:
            points.append(i)
        i += 1
    return points


def line_table(text: str) -> list[tuple[int, bool]]:
    """(start offset, starts-inside-block-comment) for every line of ``text``."""
    table: list[tuple[int, bool]] = [(0, False)]
    n = len(text)
    i = 0
    state = 0  # 0 = code, 1 = line comment, 2 = block comment
    while i < n:
        c = text[i]
        if c == "\n":
            if state == 1:
                state = 0
            table.append((i + 1, state == 2))
            i += 1
            continue
        if state == 0:
            if c == '"' or c == "'":
                # skip_literal stops at a newline, keeping the table aligned.
                i = skip_literal(text, i)
                continue
            if c == "/" and i + 1 < n:
                nxt = text[i + 1]
                if nxt == "/":
                    state = 1
                    i += 2
                    continue
                if nxt == "*":
                    state = 2
                    i += 2
                    continue
        elif state == 2:
            if c == "*" and i + 1 < n and text[i + 1] == "/":
                state = 0
                i += 2
                continue
        i += 1
    return table
