"""Row-file oracle: checks the lowering engine against a transcription of
every mapping the catalog is supposed to implement.

Row file format (UTF-8, line-oriented):

    row <backend> | <input text> | <expected pragma 1> | <expected pragma 2> ...

An absent expected list means the input must lower to nothing on that
backend. ``<backend>`` accepts the group names from backends.py, expanding
to one row per member. ``#`` starts a comment; a comment of the form
``#[tag]`` labels the rows that follow (reported back on failures).

Comparison is construct-exact and clause-multiset per line: both the
expected text and the produced text are segmented by the same splitter, so
clause order never matters but construct spelling and clause spellings do.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .backends import Backend, expand_backends
from .errors import MalformedRowFile, TranspilerError
from .lowering import lower, split_pragma_text
from .parser import Invocation, scan
from .registry import Registry


@dataclass(frozen=True)
class MappingRow:
    input_text: str
    backend: Backend
    expected: tuple[str, ...]
    source_table: str = ""


@dataclass
class RowResult:
    row: MappingRow
    passed: bool
    actual: tuple[str, ...]
    detail: str = ""


@dataclass
class ConformanceReport:
    results: list[RowResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[RowResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> str:
        passed = sum(r.passed for r in self.results)
        return f"{passed}/{len(self.results)} rows pass ({self.elapsed:.2f}s)"


def load_rows(row_data: str) -> list[MappingRow]:
    """Parse a row file; group backends expand to one row per member."""
    rows: list[MappingRow] = []
    tag = ""
    for lineno, raw in enumerate(row_data.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            note = line[1:].strip()
            if note.startswith("[") and note.endswith("]"):
                tag = note[1:-1]
            continue
        if not line.startswith("row "):
            raise MalformedRowFile(f"row file line {lineno}: unknown record", lineno, 1)
        fields = [f.strip() for f in line[4:].split("|")]
        if len(fields) < 2:
            raise MalformedRowFile(
                f"row file line {lineno}: expected 'row BACKEND | INPUT | ...'",
                lineno,
                1,
            )
        backend_spec, input_text = fields[0], fields[1]
        if not input_text:
            raise MalformedRowFile(f"row file line {lineno}: empty input", lineno, 1)
        expected = tuple(f for f in fields[2:] if f)
        try:
            backends = expand_backends(backend_spec)
        except KeyError as exc:
            raise MalformedRowFile(
                f"row file line {lineno}: unknown backend {exc}", lineno, 1
            ) from exc
        for backend in backends:
            rows.append(MappingRow(input_text, backend, expected, tag))
    if not rows:
        raise MalformedRowFile("row file contains no rows")
    return rows


def verify_all(rows: list[MappingRow], registry: Registry) -> ConformanceReport:
    """Lower every row's input and compare against its expected pragmas."""
    report = ConformanceReport()
    start = time.perf_counter()
    for row in rows:
        report.results.append(_verify_row(row, registry))
    report.elapsed = time.perf_counter() - start
    return report


def _verify_row(row: MappingRow, registry: Registry) -> RowResult:
    try:
        inv = _parse_single(row.input_text, registry)
        plan = lower(inv, row.backend, registry)
    except TranspilerError as err:
        return RowResult(row, False, (), f"error: {err.message}")
    actual = tuple(line.text for line in plan.pragmas)
    if len(actual) != len(row.expected):
        return RowResult(
            row,
            False,
            actual,
            f"expected {len(row.expected)} pragma(s), got {len(actual)}",
        )
    words = registry.bare_clause_words
    for got, want in zip(actual, row.expected):
        got_construct, got_clauses = split_pragma_text(got, words)
        want_construct, want_clauses = split_pragma_text(want, words)
        if got_construct != want_construct:
            return RowResult(
                row,
                False,
                actual,
                f"construct mismatch: got '{' '.join(got_construct)}', "
                f"want '{' '.join(want_construct)}'",
            )
        if Counter(got_clauses) != Counter(want_clauses):
            return RowResult(
                row,
                False,
                actual,
                f"clause mismatch: got {sorted(got_clauses)}, "
                f"want {sorted(want_clauses)}",
            )
    return RowResult(row, True, actual)


def _parse_single(text: str, registry: Registry) -> Invocation:
    segments = scan(text, registry)
    invocations = [s for s in segments if isinstance(s, Invocation)]
    if len(invocations) != 1:
        raise MalformedRowFile(
            f"row input {text!r} does not parse as one invocation"
        )
    return invocations[0]


@lru_cache(maxsize=1)
def default_rows() -> tuple[MappingRow, ...]:
    """Rows bundled with the package."""
    data = resources.files("pragmaport.data").joinpath("conformance.rows").read_text("utf-8")
    return tuple(load_rows(data))
