# cython: language_level=3
"""Compiled character-scanning kernels (twin of _scan_py)."""


cdef inline Py_ssize_t _skip_literal(str text, Py_ssize_t i, Py_ssize_t n):
    cdef Py_UCS4 quote = text[i]
    cdef Py_UCS4 c
    i += 1
    while i < n:
        c = text[i]
        if c == u"\\":
            i += 2
            continue
        if c == quote:
            return i + 1
        if c == u"\n":
            return i
        i += 1
    return n


def skip_literal(str text, Py_ssize_t i):
    """Return the index just past the literal opening at text[i]."""
    return _skip_literal(text, i, len(text))


def scan_balanced(str text, Py_ssize_t start):
    """Index just past the ')' matching the '(' at ``start``; -1 if unbalanced."""
    cdef Py_ssize_t n = len(text)
    cdef Py_ssize_t i = start
    cdef Py_ssize_t depth = 0
    cdef Py_UCS4 c
    while i < n:
        c = text[i]
        if c == u'"' or c == u"'":
            i = _skip_literal(text, i, n)
            continue
        if c == u"(" or c == u"[" or c == u"{":
            depth += 1
        elif c == u")" or c == u"]" or c == u"}":
            depth -= 1
            if depth == 0:
                return i + 1 if c == u")" else -1
            if depth < 0:
                return -1
        i += 1
    return -1


def split_points(str text):
    """Offsets of top-level commas in the interior of an argument list."""
    cdef list points = []
    cdef Py_ssize_t n = len(text)
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t depth = 0
    cdef Py_UCS4 c
    while i < n:
        c = text[i]
        if c == u'"' or c == u"'":
            i = _skip_literal(text, i, n)
            continue
        if c == u"(" or c == u"[" or c == u"{":
            depth += 1
        elif c == u")" or c == u"]" or c == u"}":
            depth -= 1
        elif c == u"," and depth == 0:
            points.append(i)
        i += 1
    return points


def line_table(str text):
    """(start offset, starts-inside-block-comment) for every line of ``text``."""
    cdef list table = [(0, False)]
    cdef Py_ssize_t n = len(text)
    cdef Py_ssize_t i = 0
    cdef int state = 0  # 0 = code, 1 = line comment, 2 = block comment
    cdef Py_UCS4 c
    while i < n:
        c = text[i]
        if c == u"\n":
            if state == 1:
                state = 0
            table.append((i + 1, state == 2))
            i += 1
            continue
        if state == 0:
            if c == u'"' or c == u"'":
                i = _skip_literal(text, i, n)
                continue
            if c == u"/" and i + 1 < n:
                if text[i + 1] == u"/":
                    state = 1
                    i += 2
                    continue
                if text[i + 1] == u"*":
                    state = 2
                    i += 2
                    continue
        elif state == 2:
            if c == u"*" and i + 1 < n and text[i + 1] == u"/":
                state = 0
                i += 2
                continue
        i += 1
    return table
