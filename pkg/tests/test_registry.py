import pytest

from pragmaport import (
    DanglingCanonicalId,
    DuplicateAlias,
    IncompleteApplicability,
    MalformedRegistry,
    Notation,
    load_registry,
)
from pragmaport.registry import Arity

# Representative triplets that must share one canonical clause kind.
TRIPLETS = [
    ("AS_INDEPENDENT", "ACC_CLAUSE_INDEPENDENT", "OMP_TARGET_CLAUSE_SIMD"),
    ("NUM_THREADS", "ACC_CLAUSE_VECTOR_LENGTH", "OMP_TARGET_CLAUSE_THREAD_LIMIT"),
    ("NUM_BLOCKS", "ACC_CLAUSE_NUM_WORKERS", "OMP_TARGET_CLAUSE_NUM_TEAMS"),
    ("COLLAPSE", "ACC_CLAUSE_COLLAPSE", "OMP_TARGET_CLAUSE_COLLAPSE"),
    ("REDUCTION", "ACC_CLAUSE_REDUCTION", "OMP_TARGET_CLAUSE_REDUCTION"),
    ("AS_ASYNC", "ACC_CLAUSE_ASYNC", "OMP_TARGET_CLAUSE_NOWAIT"),
    ("ENABLE_IF", "ACC_CLAUSE_IF", "OMP_TARGET_CLAUSE_IF"),
    ("AS_PRIVATE", "ACC_CLAUSE_PRIVATE", "OMP_TARGET_CLAUSE_PRIVATE"),
    ("AS_FIRSTPRIVATE", "ACC_CLAUSE_FIRSTPRIVATE", "OMP_TARGET_CLAUSE_FIRSTPRIVATE"),
    ("AS_DEVICE_PTR", "ACC_CLAUSE_DEVICEPTR", "OMP_TARGET_CLAUSE_IS_DEVICE_PTR"),
    ("COPY_BEFORE_AND_AFTER_EXEC", "ACC_CLAUSE_COPY", "OMP_TARGET_CLAUSE_MAP_TOFROM"),
    ("COPY_H2D_BEFORE_EXEC", "ACC_CLAUSE_COPYIN", "OMP_TARGET_CLAUSE_MAP_TO"),
    ("COPY_D2H_AFTER_EXEC", "ACC_CLAUSE_COPYOUT", "OMP_TARGET_CLAUSE_MAP_FROM"),
]


def test_resolve_directive(registry):
    alias = registry.resolve_directive("OFFLOAD")
    assert alias is not None
    assert alias.kind.id == "offload"
    assert alias.notation is Notation.INTUITIVE

    assert registry.resolve_directive("printf") is None
    # clause-only names are not directives
    assert registry.resolve_directive("AS_INDEPENDENT") is None

    malloc = registry.resolve_directive("MALLOC_ON_DEVICE")
    assert malloc.kind.id == "malloc_on_device"


def test_resolve_clause(registry):
    alias = registry.resolve_clause("AS_INDEPENDENT")
    assert alias.kind.id == "independent"

    nowait = registry.resolve_clause("OMP_TARGET_CLAUSE_NOWAIT")
    assert nowait.kind.id == "async"
    assert nowait.arity is Arity.NOARGS

    assert registry.resolve_clause("foo") is None
    assert registry.resolve_clause("OFFLOAD") is None


@pytest.mark.parametrize("triplet", TRIPLETS, ids=lambda t: t[0])
def test_triplet_coherence(registry, triplet):
    kinds = {registry.resolve_clause(name).kind.id for name in triplet}
    assert len(kinds) == 1


def test_notation_tags(registry):
    assert registry.resolve_directive("PRAGMA_ACC_KERNELS").notation is Notation.ACC_LIKE
    assert registry.resolve_directive("PRAGMA_OMP_TARGET").notation is Notation.OMP_LIKE
    assert registry.resolve_clause("ACC_CLAUSE_SEQ").notation is Notation.ACC_LIKE
    assert registry.resolve_clause("OMP_CLAUSE_SIMD").notation is Notation.OMP_LIKE


def test_empty_file_rejected():
    with pytest.raises(MalformedRegistry):
        load_registry("")
    with pytest.raises(MalformedRegistry):
        load_registry("# only a comment\n\n")


def test_duplicate_alias_rejected():
    data = """
directive OFFLOAD intuitive off
directive OFFLOAD acc off
render off all - | omp parallel for
"""
    with pytest.raises(DuplicateAlias):
        load_registry(data)


def test_shared_namespace_duplicate_rejected():
    data = """
directive OFFLOAD intuitive off
clause OFFLOAD acc off_kind reqargs
render off all - | omp parallel for
crender off_kind all x($ARGS)
"""
    with pytest.raises(DuplicateAlias):
        load_registry(data)


def test_dangling_canonical_rejected():
    data = "directive OFFLOAD intuitive nowhere\n"
    with pytest.raises(DanglingCanonicalId):
        load_registry(data)


def test_missing_backend_coverage_rejected():
    data = """
directive OFFLOAD intuitive off
render off acc acc.kernels | acc kernels
"""
    with pytest.raises(MalformedRegistry):
        load_registry(data)


def test_incomplete_applicability_rejected():
    data = """
directive OFFLOAD intuitive off
clause COLLAPSE intuitive collapse reqargs
render off all omp.parallel | omp parallel
crender collapse all collapse($ARGS)
"""
    with pytest.raises(IncompleteApplicability):
        load_registry(data)


def test_applicability_query_is_total(registry):
    for primitive in registry.primitives:
        for kind_id in registry.clause_kinds:
            # raises IncompleteApplicability if any cell is missing
            registry.applicable(primitive, kind_id)
    with pytest.raises(IncompleteApplicability):
        registry.applicable("acc.kernels", "no_such_kind")


def test_bundled_catalog_size(registry):
    assert len(registry.directives) > 100
    assert len(registry.clauses) > 200
    assert len(registry.applicability) == len(registry.primitives) * len(
        registry.clause_kinds
    )
