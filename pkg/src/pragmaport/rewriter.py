"""Whole-file transpilation: verbatim text passes through untouched, each
directive invocation is replaced by its rendered pragma text."""

from __future__ import annotations

from dataclasses import dataclass, field

from .backends import Backend, PragmaStyle
from .errors import Diagnostic, TranspilerError
from .parser import Invocation, Verbatim, scan
from .lowering import lower, render
from .registry import Registry


@dataclass
class TranspileConfig:
    backend: Backend
    style: PragmaStyle = PragmaStyle.HASH
    passthrough_unknown: str = "off"  # "launch" | "loop" | "off"
    keep_directive_comment: bool = False


@dataclass
class TranspileResult:
    text: str
    diagnostics: list[Diagnostic] = field(default_factory=list)


def transpile(source: str, config: TranspileConfig, registry: Registry) -> TranspileResult:
    """Rewrite ``source`` for the configured backend.

    Output equals the input except that every invocation is replaced by its
    rendered pragma lines at the invocation's indentation; a dropped
    directive contributes no lines at all. Errors raised by the parser or
    the lowering engine carry the source location; nothing is emitted then.
    """
    out: list[str] = []
    diagnostics: list[Diagnostic] = []
    for segment in scan(source, registry):
        if isinstance(segment, Verbatim):
            out.append(segment.text)
            continue
        try:
            plan = lower(
                segment, config.backend, registry, config.passthrough_unknown
            )
        except TranspilerError as err:
            raise err.at(segment.origin.line, segment.origin.column)
        for message in plan.warnings:
            diagnostics.append(
                Diagnostic("warning", message, segment.origin.line, segment.origin.column)
            )
        for item in plan.dropped:
            diagnostics.append(
                Diagnostic(
                    "note",
                    f"{item.label} dropped: {item.reason}",
                    segment.origin.line,
                    segment.origin.column,
                )
            )
        rendered = render(plan, config.style)
        if not rendered:
            continue
        out.append(_emit(rendered, segment, config))
    return TranspileResult("".join(out), diagnostics)


def _emit(rendered: str, segment: Invocation, config: TranspileConfig) -> str:
    lines = rendered.split("\n")
    if config.keep_directive_comment:
        original = f"{segment.alias.name}({segment.arg_text})"
        if segment.alias.arity.value == "noargs":
            original = segment.alias.name
        lines[-1] = f"{lines[-1]}  // from: {' '.join(original.split())}"
    trailing = segment.trailing.rstrip()
    if trailing:
        lines[-1] = f"{lines[-1]} {trailing.lstrip()}"
    newline = segment.newline or "\n"
    body = newline.join(segment.indent + line for line in lines)
    return body + segment.newline
