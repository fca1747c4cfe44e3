import pytest

from pragmaport import (
    ArityMismatch,
    Backend,
    PragmaStyle,
    UnknownClause,
    lower,
    lower_acc_alias_on_fallback,
    render,
    scan,
)
from pragmaport.parser import Invocation


def parse_one(text, registry):
    (inv,) = [s for s in scan(text, registry) if isinstance(s, Invocation)]
    return inv


def low(text, backend, registry, **kw):
    return lower(parse_one(text, registry), backend, registry, **kw)


def test_split_distribution(registry):
    plan = low("OFFLOAD(NUM_THREADS(128), COLLAPSE(3))", Backend.ACC_KERNELS, registry)
    assert plan.texts == ["acc kernels vector_length(128)", "acc loop collapse(3)"]

    plan = low("OFFLOAD(NUM_THREADS(128), COLLAPSE(3))", Backend.OMP_LOOP, registry)
    assert plan.texts == ["omp target teams loop thread_limit(128) collapse(3)"]


def test_clause_order_follows_input(registry):
    plan = low("OFFLOAD(COLLAPSE(3), NUM_THREADS(128))", Backend.OMP_LOOP, registry)
    assert plan.texts == ["omp target teams loop collapse(3) thread_limit(128)"]


def test_dropped_directive(registry):
    plan = low("PRAGMA_ACC_LOOP(ACC_CLAUSE_SEQ)", Backend.OMP_LOOP, registry)
    assert plan.texts == []
    assert [d.label for d in plan.dropped] == ["seq"]


def test_fallback_offload(registry):
    plan = low("OFFLOAD()", Backend.FALLBACK, registry)
    assert plan.texts == ["omp parallel for"]


def test_suffix_hoisting(registry):
    plan = low(
        "OFFLOAD(AS_INDEPENDENT, NUM_THREADS(256))", Backend.OMP_DISTRIBUTE, registry
    )
    assert plan.texts == [
        "omp target teams distribute parallel for simd thread_limit(256)"
    ]


def test_suffix_hoisted_from_tail_with_warning(registry):
    plan = low("OFFLOAD(COLLAPSE(3), AS_INDEPENDENT)", Backend.OMP_DISTRIBUTE, registry)
    assert plan.texts == [
        "omp target teams distribute parallel for simd collapse(3)"
    ]
    assert any("place it first" in w for w in plan.warnings)


def test_suffix_dropped_on_loop_style(registry):
    plan = low("OFFLOAD(AS_INDEPENDENT)", Backend.OMP_LOOP, registry)
    assert plan.texts == ["omp target teams loop"]
    assert [d.label for d in plan.dropped] == ["independent"]
    assert any("hint dropped" in w for w in plan.warnings)


def test_no_duplicate_suffix(registry):
    plan = low(
        "PRAGMA_OMP_TARGET_TEAMS_DISTRIBUTE_PARALLEL_FOR_SIMD(AS_INDEPENDENT)",
        Backend.OMP_DISTRIBUTE,
        registry,
    )
    assert plan.texts == ["omp target teams distribute parallel for simd"]


def test_payload_rendering(registry):
    plan = low("MEMCPY_D2H(x[0:n])", Backend.ACC_KERNELS, registry)
    assert plan.texts == ["acc update host(x[0:n])"]
    plan = low("MALLOC_ON_DEVICE(x, y)", Backend.OMP_LOOP, registry)
    assert plan.texts == ["omp target enter data map(alloc: x, y)"]


def test_duplicate_keyword_dropped(registry):
    plan = low("OFFLOAD(NUM_THREADS(128), NUM_THREADS(256))", Backend.OMP_LOOP, registry)
    assert plan.texts == ["omp target teams loop thread_limit(128)"]
    assert [d.reason for d in plan.dropped] == ["duplicate clause keyword 'thread_limit'"]


def test_unknown_clause_is_error_by_default(registry):
    with pytest.raises(UnknownClause):
        low("OFFLOAD(whatever)", Backend.ACC_KERNELS, registry)


def test_unknown_clause_passthrough(registry):
    plan = low(
        "OFFLOAD(whatever(3))", Backend.ACC_KERNELS, registry, passthrough="loop"
    )
    assert plan.texts == ["acc kernels", "acc loop whatever(3)"]
    assert any("passed through" in w for w in plan.warnings)

    plan = low(
        "OFFLOAD(whatever(3))", Backend.ACC_KERNELS, registry, passthrough="launch"
    )
    assert plan.texts == ["acc kernels whatever(3)", "acc loop"]


def test_arity_mismatch(registry):
    with pytest.raises(ArityMismatch):
        low("OFFLOAD(COLLAPSE())", Backend.ACC_KERNELS, registry)


def test_optional_args_render_bare_keyword(registry):
    plan = low("SYNCHRONIZE(AS_ASYNC())", Backend.ACC_KERNELS, registry)
    assert plan.texts == ["acc wait async"]
    plan = low("SYNCHRONIZE(AS_ASYNC(1))", Backend.ACC_KERNELS, registry)
    assert plan.texts == ["acc wait async(1)"]
    plan = low("SYNCHRONIZE(AS_ASYNC(1))", Backend.OMP_LOOP, registry)
    assert plan.texts == ["omp taskwait nowait"]


def test_implied_hint_on_acc(registry):
    plan = low("PRAGMA_OMP_TARGET_PARALLEL_FOR_SIMD()", Backend.ACC_KERNELS, registry)
    assert plan.texts == ["acc kernels", "acc loop independent"]


def test_target_data_warning_on_acc(registry):
    plan = low("PRAGMA_OMP_TARGET_DATA()", Backend.ACC_KERNELS, registry)
    assert plan.texts == ["acc data"]
    assert any("DATA_ACCESS_BY_DEVICE" in w for w in plan.warnings)
    assert low("PRAGMA_OMP_TARGET_DATA()", Backend.OMP_LOOP, registry).warnings == []


def test_acc_alias_on_fallback(registry):
    plan = lower_acc_alias_on_fallback(
        parse_one("PRAGMA_ACC_UPDATE_HOST(x)", registry), registry
    )
    assert plan.texts == []

    plan = lower_acc_alias_on_fallback(
        parse_one("PRAGMA_ACC_PARALLEL_LOOP()", registry), registry
    )
    assert plan.texts == ["omp parallel for"]

    plan = lower_acc_alias_on_fallback(
        parse_one("PRAGMA_ACC_ATOMIC()", registry), registry
    )
    assert plan.texts == ["omp atomic"]

    with pytest.raises(ValueError):
        lower_acc_alias_on_fallback(parse_one("OFFLOAD()", registry), registry)


def test_render_styles(registry):
    plan = low("OFFLOAD()", Backend.ACC_KERNELS, registry)
    assert render(plan, PragmaStyle.HASH) == "#pragma acc kernels\n#pragma acc loop"
    assert (
        render(plan, PragmaStyle.UNDERSCORE)
        == '_Pragma("acc kernels") _Pragma("acc loop")'
    )
    empty = low("DECLARE_OFFLOADED_END", Backend.ACC_KERNELS, registry)
    assert render(empty, PragmaStyle.HASH) == ""


def test_drop_soundness_accounting(registry):
    plan = low(
        "OFFLOAD(AS_INDEPENDENT, COLLAPSE(3), ACC_CLAUSE_PRESENT(f, fn))",
        Backend.OMP_DISTRIBUTE,
        registry,
    )
    assert plan.rendered == ["independent", "collapse"]
    assert [d.label for d in plan.dropped] == ["present"]


def test_determinism(registry):
    inv = parse_one("OFFLOAD(AS_INDEPENDENT, NUM_THREADS(128), COLLAPSE(3))", registry)
    for backend in Backend:
        assert lower(inv, backend, registry) == lower(inv, backend, registry)
