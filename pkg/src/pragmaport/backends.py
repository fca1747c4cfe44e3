"""Backend, notation, and output-style enumerations."""

from __future__ import annotations

import enum


class Backend(enum.Enum):
    """Lowering target for one transpilation run."""

    ACC_KERNELS = "acc-kernels"
    ACC_PARALLEL = "acc-parallel"
    OMP_LOOP = "omp-loop"
    OMP_DISTRIBUTE = "omp-distribute"
    FALLBACK = "fallback"

    @property
    def is_acc(self) -> bool:
        return self in (Backend.ACC_KERNELS, Backend.ACC_PARALLEL)

    @property
    def is_omp_target(self) -> bool:
        return self in (Backend.OMP_LOOP, Backend.OMP_DISTRIBUTE)

    def __str__(self) -> str:  # nicer in diagnostics
        return self.value


class Notation(enum.Enum):
    """Which input dialect an alias belongs to (diagnostics only)."""

    INTUITIVE = "intuitive"
    ACC_LIKE = "acc"
    OMP_LIKE = "omp"


class PragmaStyle(enum.Enum):
    HASH = "hash"
    UNDERSCORE = "underscore"


class Dialect(enum.Enum):
    """Dialect of an emitted pragma line; decides how clauses are spelled."""

    ACC = "acc"
    OMP = "omp"
    CPU = "cpu"


ALL_BACKENDS = tuple(Backend)

# Shorthand groups accepted in data files wherever a backend is expected.
BACKEND_GROUPS = {
    "acc-kernels": (Backend.ACC_KERNELS,),
    "acc-parallel": (Backend.ACC_PARALLEL,),
    "omp-loop": (Backend.OMP_LOOP,),
    "omp-distribute": (Backend.OMP_DISTRIBUTE,),
    "fallback": (Backend.FALLBACK,),
    "acc": (Backend.ACC_KERNELS, Backend.ACC_PARALLEL),
    "omp": (Backend.OMP_LOOP, Backend.OMP_DISTRIBUTE),
    "offload": (
        Backend.ACC_KERNELS,
        Backend.ACC_PARALLEL,
        Backend.OMP_LOOP,
        Backend.OMP_DISTRIBUTE,
    ),
    "all": ALL_BACKENDS,
}

DIALECT_GROUPS = {
    "acc": (Dialect.ACC,),
    "omp": (Dialect.OMP,),
    "cpu": (Dialect.CPU,),
    "host": (Dialect.OMP, Dialect.CPU),
    "all": (Dialect.ACC, Dialect.OMP, Dialect.CPU),
}


def expand_backends(spec: str) -> tuple[Backend, ...]:
    """Expand a comma-joined backend/group spec from a data file."""
    out: list[Backend] = []
    for part in spec.split(","):
        group = BACKEND_GROUPS.get(part.strip())
        if group is None:
            raise KeyError(part)
        out.extend(group)
    return tuple(out)


def expand_dialects(spec: str) -> tuple[Dialect, ...]:
    out: list[Dialect] = []
    for part in spec.split(","):
        group = DIALECT_GROUPS.get(part.strip())
        if group is None:
            raise KeyError(part)
        out.extend(group)
    return tuple(out)


def dialect_of(construct_tokens: tuple[str, ...]) -> Dialect:
    """Dialect of one pragma line, inferred from its construct spelling."""
    if construct_tokens and construct_tokens[0] == "acc":
        return Dialect.ACC
    if "target" in construct_tokens:
        return Dialect.OMP
    return Dialect.CPU
