#!/usr/bin/env python3
"""Regenerate the applicability block of src/pragmaport/data/mappings.reg.

The matrix must hold one explicit yes/no cell for every (construct
primitive, clause kind) pair, which is too bulky to maintain by hand, so
the per-primitive *allowed* sets live here and the cross product is
emitted below the marker line in the data file. Sets follow the OpenACC
2.7 and OpenMP 5.2 per-directive clause tables; the bare argument list
(`pass_list`) is accepted everywhere since it is pure argument plumbing.

Usage: python tools/gen_applicability.py [--check]
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "pragmaport" / "data" / "mappings.reg"
MARKER = "# === generated applicability matrix (gen_applicability.py) ==="

ACC_KERNELS = {
    "async", "wait_on", "num_grids", "num_blocks", "num_threads",
    "target_num_threads", "device_type", "enable_if", "if_target", "self",
    "copy", "copyin", "target_copyin", "copyout", "create", "no_create",
    "present", "device_ptr", "has_device_addr", "attach", "default_none",
    "default_present", "acc_default",
}
ACC_PARALLEL = ACC_KERNELS | {"reduction", "private", "firstprivate"}

ALLOWED: dict[str, set[str] | str] = {
    "acc.kernels": ACC_KERNELS,
    "acc.parallel": ACC_PARALLEL,
    "acc.serial": ACC_PARALLEL - {"num_grids", "num_blocks", "num_threads", "target_num_threads"},
    "acc.loop": {
        "collapse", "gang", "worker", "vector", "seq", "auto", "independent",
        "tile_clause", "device_type", "private", "reduction",
    },
    "acc.data": {
        "enable_if", "if_target", "copy", "copyin", "target_copyin",
        "copyout", "create", "no_create", "present", "device_ptr",
        "has_device_addr", "attach", "acc_default", "default_none",
        "default_present",
    },
    "acc.enter_data": {
        "enable_if", "if_target", "async", "wait_on", "copyin",
        "target_copyin", "create", "attach",
    },
    "acc.exit_data": {
        "enable_if", "if_target", "async", "wait_on", "copyout", "delete",
        "map_release", "detach", "finalize",
    },
    "acc.host_data": {
        "use_device", "use_device_addr", "enable_if", "if_target",
        "if_present",
    },
    "acc.update": {
        "async", "wait_on", "device_type", "enable_if", "if_target",
        "if_present", "self", "host", "device_data",
    },
    "acc.atomic": {"read", "write", "update", "capture"},
    "acc.wait": {"async"},
    "acc.routine": {
        "gang", "worker", "vector", "seq", "acc_bind", "device_type",
        "nohost",
    },
    "acc.declare": {
        "copy", "copyin", "target_copyin", "copyout", "create", "present",
        "device_ptr", "has_device_addr", "device_resident", "acc_link",
    },
    # Bare "acc" is the catch-all counterpart of a raw target region; it
    # pastes its arguments with no construct context, so nothing filters.
    "acc.bare": "all",
    "omp.target": {
        "enable_if", "if_target", "omp_device", "num_threads", "private",
        "firstprivate", "in_reduction", "omp_map", "create", "copyin",
        "copyout", "copy", "delete", "map_release", "omp_map_alloc",
        "omp_map_to", "omp_map_from", "omp_map_tofrom", "omp_map_release",
        "omp_map_delete", "device_ptr", "has_device_addr", "defaultmap",
        "default_none", "default_present", "async", "wait_on",
        "omp_depend_in", "depend", "allocate", "uses_allocators",
    },
    "omp.teams": {
        "num_blocks", "omp_num_teams", "num_threads", "omp_thread_limit",
        "default_shared", "default_firstprivate", "default_private",
        "omp_default_none", "omp_default", "private", "firstprivate",
        "shared", "reduction", "allocate",
    },
    "omp.distribute": {
        "private", "firstprivate", "lastprivate", "collapse",
        "dist_schedule", "allocate", "order", "independent", "omp_simd",
    },
    "omp.parallel": {
        "enable_if", "if_target", "omp_num_threads", "target_num_threads",
        "default_shared", "default_firstprivate", "default_private",
        "omp_default_none", "omp_default", "private", "firstprivate",
        "shared", "omp_copyin", "target_copyin", "reduction", "proc_bind",
        "allocate",
    },
    "omp.for": {
        "private", "firstprivate", "lastprivate", "linear", "reduction",
        "schedule", "collapse", "ordered_clause", "nowait_plain", "async",
        "allocate", "order", "independent", "omp_simd",
    },
    "omp.loop": {
        "omp_bind", "collapse", "order", "private", "lastprivate",
        "reduction",
    },
    "omp.simd": {
        "enable_if", "simdlen", "safelen", "linear", "aligned",
        "nontemporal", "private", "lastprivate", "reduction", "collapse",
        "order", "independent", "omp_simd",
    },
    "omp.atomic": {
        "read", "write", "update", "capture", "compare", "fail", "weak",
        "hint", "seq_cst", "acq_rel", "release_cl", "acquire", "relaxed",
    },
    "omp.taskwait": {"depend", "omp_depend_in", "wait_on", "async", "nowait_plain"},
    "omp.declare_target": {"omp_enter", "indirect", "omp_link", "device_type", "nohost"},
    "omp.begin_declare_target": {"omp_enter", "indirect", "omp_link", "device_type", "nohost"},
    "omp.target_data": {
        "enable_if", "if_target", "omp_device", "omp_map", "create",
        "copyin", "copyout", "copy", "delete", "map_release",
        "omp_map_alloc", "omp_map_to", "omp_map_from", "omp_map_tofrom",
        "omp_map_release", "omp_map_delete", "use_device", "use_device_addr",
    },
    "omp.target_enter_data": {
        "enable_if", "if_target", "omp_device", "async", "wait_on",
        "omp_depend_in", "depend", "omp_map", "create", "copyin", "copy",
        "omp_map_alloc", "omp_map_to",
    },
    "omp.target_exit_data": {
        "enable_if", "if_target", "omp_device", "async", "wait_on",
        "omp_depend_in", "depend", "omp_map", "copyout", "delete",
        "map_release", "omp_map_from", "omp_map_release", "omp_map_delete",
    },
    "omp.target_update": {
        "enable_if", "if_target", "omp_device", "async", "wait_on",
        "omp_depend_in", "depend", "host", "device_data", "nowait_plain",
    },
    "omp.scan": {"exclusive", "inclusive"},
    "omp.declare_simd": {
        "simdlen", "aligned", "linear", "uniform", "inbranch", "notinbranch",
    },
    "omp.tile": {"sizes"},
    "omp.unroll": {"full", "partial"},
    "omp.masked": {"filter"},
    "omp.single": {
        "private", "firstprivate", "copyprivate", "nowait_plain", "async",
        "allocate",
    },
    "omp.workshare": {"nowait_plain", "async"},
    "omp.scope": {
        "private", "firstprivate", "reduction", "allocate", "nowait_plain",
        "async",
    },
    "omp.sections": {
        "private", "firstprivate", "lastprivate", "reduction", "allocate",
        "nowait_plain", "async",
    },
    "omp.task": {
        "enable_if", "final", "untied", "omp_default", "default_shared",
        "default_firstprivate", "default_private", "omp_default_none",
        "mergeable", "private", "firstprivate", "shared", "in_reduction",
        "depend", "omp_depend_in", "wait_on", "priority", "allocate",
        "affinity", "omp_detach",
    },
    "omp.taskloop": {
        "enable_if", "shared", "private", "firstprivate", "lastprivate",
        "omp_default", "default_shared", "default_firstprivate",
        "default_private", "omp_default_none", "grainsize", "num_tasks",
        "collapse", "final", "priority", "untied", "mergeable", "nogroup",
        "in_reduction", "reduction", "allocate", "independent", "omp_simd",
    },
    "omp.interop": {
        "init", "use_clause", "destroy", "depend", "omp_depend_in",
        "nowait_plain", "async",
    },
    "omp.critical": {"hint"},
    "omp.taskgroup": {"task_reduction", "allocate"},
    "omp.flush": {"seq_cst", "acq_rel", "release_cl", "acquire"},
    "omp.depobj": {"depend", "omp_depend_in", "destroy"},
    "omp.ordered": {"threads", "omp_simd", "depend", "omp_depend_in", "doacross"},
}

EVERYWHERE = {"pass_list"}


def collect_ids(head: str) -> tuple[list[str], list[str]]:
    primitives: set[str] = set()
    kinds: set[str] = set()
    for line in head.splitlines():
        line = line.strip()
        if line.startswith("render "):
            fields = line.split("|")[0].split()
            if len(fields) >= 4 and fields[3] != "-":
                primitives.update(fields[3].split("+"))
        elif line.startswith("crender "):
            kinds.add(line.split()[1])
    return sorted(primitives), sorted(kinds)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--check", action="store_true",
                        help="verify the generated block is up to date")
    args = parser.parse_args()

    text = DATA.read_text(encoding="utf-8")
    head = text.split(MARKER)[0].rstrip() + "\n"
    primitives, kinds = collect_ids(head)

    unknown = set(ALLOWED) - set(primitives)
    if unknown:
        sys.exit(f"rule table names primitives missing from the data file: {unknown}")
    missing = set(primitives) - set(ALLOWED)
    if missing:
        sys.exit(f"no rule table for primitives: {missing}")
    bad_kinds = {
        k
        for allowed in ALLOWED.values()
        if allowed != "all"
        for k in allowed
    } - set(kinds)
    if bad_kinds:
        sys.exit(f"rule tables name unknown clause kinds: {bad_kinds}")

    lines = [MARKER]
    for primitive in primitives:
        rule = ALLOWED[primitive]
        allowed = set(kinds) if rule == "all" else rule | EVERYWHERE
        for kind in kinds:
            flag = "yes" if kind in allowed else "no"
            lines.append(f"applic {primitive} {kind} {flag}")
    generated = "\n".join(lines) + "\n"

    new_text = head + "\n" + generated
    if args.check:
        if new_text != text:
            sys.exit("applicability block is stale; rerun tools/gen_applicability.py")
        print("applicability block is up to date")
        return 0
    DATA.write_text(new_text, encoding="utf-8")
    cells = sum(1 for l in lines if l.startswith("applic"))
    print(f"wrote {cells} applicability cells "
          f"({len(primitives)} primitives x {len(kinds)} clause kinds)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
