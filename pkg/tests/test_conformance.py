import re

import pytest

from pragmaport import (
    Backend,
    MalformedRowFile,
    default_registry,
    default_rows,
    load_rows,
    verify_all,
)

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def test_bundled_rows_all_pass(registry):
    report = verify_all(list(default_rows()), registry)
    assert report.ok, "\n".join(
        f"{r.row.backend.value} | {r.row.input_text}: {r.detail} {list(r.actual)}"
        for r in report.failures
    )


def test_row_file_size(registry):
    rows = list(default_rows())
    assert len(rows) >= 400
    assert len({r.input_text for r in rows}) >= 150


def test_full_alias_coverage(registry):
    """Every registered alias appears in the row file; directives on all
    five backends, OpenMP-target clause aliases also in fallback mode."""
    directive_cov: dict[str, set] = {}
    clause_cov: dict[str, set] = {}
    for row in default_rows():
        head = IDENT.match(row.input_text).group(0)
        directive_cov.setdefault(head, set()).add(row.backend)
        for name in set(IDENT.findall(row.input_text)) - {head}:
            if registry.resolve_clause(name) is not None:
                clause_cov.setdefault(name, set()).add(row.backend)

    for name in registry.directives:
        assert directive_cov.get(name) == set(Backend), f"{name} not fully covered"
    for name in registry.clauses:
        assert name in clause_cov, f"clause alias {name} has no row"
        if name.startswith(("OMP_TARGET_CLAUSE_", "OMP_TARGET_PASS")):
            assert Backend.FALLBACK in clause_cov[name], f"{name} lacks fallback row"


def test_report_determinism(registry):
    rows = list(default_rows())
    first = verify_all(rows, registry)
    second = verify_all(rows, registry)
    assert [(r.passed, r.actual, r.detail) for r in first.results] == [
        (r.passed, r.actual, r.detail) for r in second.results
    ]


def test_failing_row_reported(registry):
    rows = load_rows("row acc-kernels | OFFLOAD() | acc serial\n")
    report = verify_all(rows, registry)
    assert not report.ok
    assert "expected 1 pragma(s), got 2" in report.failures[0].detail


def test_clause_comparison_is_per_line_multiset(registry):
    rows = load_rows(
        "row omp-loop | OFFLOAD(NUM_THREADS(128), COLLAPSE(3)) "
        "| omp target teams loop collapse(3) thread_limit(128)\n"
    )
    assert verify_all(rows, registry).ok


def test_construct_comparison_is_exact(registry):
    rows = load_rows("row omp-loop | OFFLOAD() | omp target teams distribute\n")
    report = verify_all(rows, registry)
    assert not report.ok
    assert "construct mismatch" in report.failures[0].detail


def test_disregarded_row(registry):
    rows = load_rows("row omp-loop | PRAGMA_ACC_CACHE(a)\n")
    assert verify_all(rows, registry).ok


def test_malformed_row_file():
    with pytest.raises(MalformedRowFile):
        load_rows("")
    with pytest.raises(MalformedRowFile):
        load_rows("bogus record\n")
    with pytest.raises(MalformedRowFile):
        load_rows("row nowhere | OFFLOAD()\n")
    with pytest.raises(MalformedRowFile):
        load_rows("row acc-kernels |\n")


def test_section_tags_attached():
    rows = load_rows("#[my.section]\nrow acc-kernels | OFFLOAD() | acc kernels | acc loop\n")
    assert rows[0].source_table == "my.section"


def test_non_invocation_input_fails_cleanly(registry):
    rows = load_rows("row acc-kernels | not_a_directive() | acc kernels\n")
    report = verify_all(rows, registry)
    assert not report.ok
    assert "error" in report.failures[0].detail


def test_runtime_budget(registry):
    report = verify_all(list(default_rows()), registry)
    assert report.elapsed < 5.0
