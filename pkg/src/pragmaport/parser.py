"""Lossless scanner for directive invocations embedded in C/C++-like text.

Everything that is not a recognized, line-initial directive invocation is
kept byte-for-byte as verbatim segments (one per line). An invocation may
span several lines when its argument list does; the whole span becomes a
single segment.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass

from .errors import ArgsOnNoArgsAlias, UnbalancedParentheses
from .registry import Arity, ClauseAlias, DirectiveAlias, Registry

if os.environ.get("PRAGMAPORT_PURE"):  # force the fallback kernels
    from . import _scan_py as _scan
else:
    try:
        from . import _speedups as _scan  # type: ignore[no-redef]
    except ImportError:
        from . import _scan_py as _scan  # type: ignore[no-redef]

#: Name of the active scanning-kernel implementation.
SCAN_IMPL = _scan.__name__.rsplit(".", 1)[-1]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Origin:
    line: int  # 1-based
    column: int  # 1-based
    offset: int  # byte offset into the source


@dataclass(frozen=True)
class ArgToken:
    """One top-level comma-separated piece of an argument list."""

    text: str
    clause: ClauseAlias | None = None
    args: str | None = None  # interior of the token's parentheses, if any

    @property
    def is_known(self) -> bool:
        return self.clause is not None


@dataclass(frozen=True)
class Verbatim:
    text: str
    origin: Origin


@dataclass(frozen=True)
class Invocation:
    alias: DirectiveAlias
    args: tuple[ArgToken, ...]
    arg_text: str  # raw interior of the invocation's parentheses
    indent: str
    trailing: str  # text after the closing ')' up to (not incl.) the newline
    newline: str  # "", "\n" or "\r\n"
    raw: str  # the exact original slice, newline included
    origin: Origin


Segment = Verbatim | Invocation


def split_args(arg_text: str, registry: Registry) -> list[ArgToken]:
    """Split an argument-list interior on top-level commas and classify.

    Commas nested in brackets or string/character literals do not split.
    Unknown pieces are preserved verbatim; classification never fails.
    """
    if not arg_text.strip():
        return []
    points = _scan.split_points(arg_text)
    spans = []
    prev = 0
    for point in points:
        spans.append((prev, point))
        prev = point + 1
    spans.append((prev, len(arg_text)))
    return [_classify(arg_text[a:b].strip(), registry) for a, b in spans]


def _classify(piece: str, registry: Registry) -> ArgToken:
    match = _IDENT.match(piece)
    if not match:
        return ArgToken(piece)
    name = match.group(0)
    alias = registry.resolve_clause(name)
    if alias is None:
        return ArgToken(piece)
    rest = piece[match.end() :].lstrip()
    if not rest:
        # Bare identifier: known only for argument-less clause aliases.
        if alias.arity is Arity.NOARGS:
            return ArgToken(piece, alias, None)
        return ArgToken(piece)
    if rest.startswith("(") and alias.arity is not Arity.NOARGS:
        end = _scan.scan_balanced(rest, 0)
        if end == len(rest):
            return ArgToken(piece, alias, rest[1 : end - 1])
    return ArgToken(piece)


def scan(source: str, registry: Registry) -> list[Segment]:
    """Carve ``source`` into verbatim lines and directive invocations.

    Concatenating the segments' original text reproduces the input exactly.
    """
    segments: list[Segment] = []
    table = _scan.line_table(source)
    n = len(source)
    lineno = 0
    while lineno < len(table):
        start, in_comment = table[lineno]
        end = table[lineno + 1][0] if lineno + 1 < len(table) else n
        line = source[start:end]
        if start >= n:
            break
        invocation = None
        if not in_comment:
            invocation = _try_invocation(source, start, end, lineno + 1, registry)
        if invocation is None:
            segments.append(Verbatim(line, Origin(lineno + 1, 1, start)))
            lineno += 1
            continue
        segment, consumed_until = invocation
        segments.append(segment)
        # Skip every line the invocation consumed.
        while lineno + 1 < len(table) and table[lineno + 1][0] < consumed_until:
            lineno += 1
        lineno += 1
    return segments


def _try_invocation(
    source: str, start: int, line_end: int, lineno: int, registry: Registry
) -> tuple[Invocation, int] | None:
    body = source[start:line_end]
    stripped = body.lstrip(" \t")
    indent = body[: len(body) - len(stripped)]
    match = _IDENT.match(stripped)
    if not match:
        return None
    name = match.group(0)
    alias = registry.resolve_directive(name)
    if alias is None:
        return None
    after = stripped[match.end() :]
    name_col = len(indent) + 1

    if alias.arity is Arity.NOARGS:
        if after.lstrip(" \t").startswith("("):
            raise ArgsOnNoArgsAlias(
                f"directive {name!r} takes no argument list", lineno, name_col
            )
        trailing, newline = _split_newline(after)
        raw = source[start:line_end]
        inv = Invocation(
            alias, (), "", indent, trailing, newline, raw, Origin(lineno, name_col, start)
        )
        return inv, line_end

    gap = after[: len(after) - len(after.lstrip(" \t"))]
    rest = after[len(gap) :]
    if not rest.startswith("("):
        return None
    paren_offset = start + len(indent) + len(name) + len(gap)
    close = _scan.scan_balanced(source, paren_offset)
    if close < 0:
        raise UnbalancedParentheses(
            f"unbalanced parentheses in {name!r} invocation",
            lineno,
            paren_offset - start + 1,
        )
    arg_text = source[paren_offset + 1 : close - 1]
    # The segment runs to the end of the line holding the ')'.
    seg_end = source.find("\n", close)
    seg_end = len(source) if seg_end < 0 else seg_end + 1
    tail = source[close:seg_end]
    trailing, newline = _split_newline(tail)
    raw = source[start:seg_end]
    inv = Invocation(
        alias,
        tuple(split_args(arg_text, registry)),
        arg_text,
        indent,
        trailing,
        newline,
        raw,
        Origin(lineno, name_col, start),
    )
    return inv, seg_end


def _split_newline(text: str) -> tuple[str, str]:
    if text.endswith("\r\n"):
        return text[:-2], "\r\n"
    if text.endswith("\n"):
        return text[:-1], "\n"
    return text, ""


def render_verbatim(segments: list[Segment]) -> str:
    """Reassemble the original text (round-trip check helper)."""
    return "".join(s.text if isinstance(s, Verbatim) else s.raw for s in segments)
