"""Command-line front end.

Subcommands: ``transpile`` (rewrite a file or stdin), ``explain`` (show one
invocation under every backend), ``dump-table`` (export the registry), and
``verify-tables`` (run the conformance rows). Exit status: 0 on success,
1 on transpile/verification failure, 2 on flag misuse.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from .backends import ALL_BACKENDS, Backend, PragmaStyle
from .conformance import default_rows, load_rows, verify_all
from .errors import Diagnostic, TranspilerError
from .lowering import lower, render
from .parser import scan, Invocation
from .registry import Registry, default_registry
from .rewriter import TranspileConfig, transpile


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TranspilerError as err:
        _print_diagnostic(err.to_diagnostic(), getattr(args, "_filename", "<input>"))
        return 1
    except BrokenPipeError:
        # downstream consumer (e.g. `head`) closed the stream
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pragmaport",
        description="Lower unified offload directive macros to OpenACC, "
        "OpenMP target, or host OpenMP pragmas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transpile", help="rewrite a source file for one backend")
    p.add_argument("file", nargs="?", default="-", metavar="FILE",
                   help="input file, or '-' for stdin (default)")
    p.add_argument("--backend", choices=[b.value for b in ALL_BACKENDS],
                   help="select the backend directly (wins over the legacy flags)")
    p.add_argument("--acc", action="store_true",
                   help="OpenACC backend (kernels construct by default)")
    p.add_argument("--acc-parallel", action="store_true",
                   help="with --acc: use the parallel construct instead of kernels")
    p.add_argument("--omp-target", action="store_true",
                   help="OpenMP target backend (loop style by default)")
    p.add_argument("--omp-distribute", action="store_true",
                   help="with --omp-target: distribute style instead of loop")
    p.add_argument("--style", choices=["hash", "underscore"], default="hash",
                   help="emit '#pragma' lines or _Pragma(...) forms")
    p.add_argument("--passthrough-unknown", choices=["launch", "loop"],
                   help="forward unknown arguments verbatim instead of failing")
    p.add_argument("--keep-directive-comment", action="store_true",
                   help="append '// from: ...' with the original invocation")
    p.add_argument("-o", "--output", metavar="OUT", help="output file (default stdout)")
    p.set_defaults(func=_cmd_transpile)

    p = sub.add_parser("explain", help="show one invocation lowered under all backends")
    p.add_argument("invocation", metavar='"DIRECTIVE(...)"')
    p.set_defaults(func=_cmd_explain)

    p = sub.add_parser("dump-table", help="export the loaded mapping catalog")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=_cmd_dump_table)

    p = sub.add_parser("verify-tables", help="check the engine against the row file")
    p.add_argument("rowfile", nargs="?", metavar="ROWFILE",
                   help="row file (default: bundled transcription)")
    p.add_argument("-v", "--verbose", action="store_true",
                   help="print one line per row instead of failures only")
    p.set_defaults(func=_cmd_verify)
    return parser


def _select_backend(args: argparse.Namespace, warnings: list[str]) -> Backend:
    legacy: Backend | None = None
    if args.acc and args.omp_target:
        warnings.append(
            "both --acc and --omp-target given; using the OpenACC backend"
        )
    if args.acc:
        legacy = Backend.ACC_PARALLEL if args.acc_parallel else Backend.ACC_KERNELS
    elif args.omp_target:
        legacy = Backend.OMP_DISTRIBUTE if args.omp_distribute else Backend.OMP_LOOP
    elif args.acc_parallel or args.omp_distribute:
        warnings.append(
            "--acc-parallel/--omp-distribute have no effect without "
            "--acc/--omp-target; falling back to host OpenMP"
        )
    if args.backend:
        chosen = Backend(args.backend)
        if legacy is not None and legacy is not chosen:
            warnings.append(
                f"--backend {chosen} overrides the legacy backend flags"
            )
        return chosen
    return legacy if legacy is not None else Backend.FALLBACK


def _cmd_transpile(args: argparse.Namespace) -> int:
    warnings: list[str] = []
    backend = _select_backend(args, warnings)
    config = TranspileConfig(
        backend=backend,
        style=PragmaStyle(args.style),
        passthrough_unknown=args.passthrough_unknown or "off",
        keep_directive_comment=args.keep_directive_comment,
    )
    filename = "<stdin>" if args.file == "-" else args.file
    args._filename = filename
    source = sys.stdin.read() if args.file == "-" else _read(args.file)
    for message in warnings:
        _print_diagnostic(Diagnostic("warning", message), filename)
    result = transpile(source, config, default_registry())
    for diag in result.diagnostics:
        _print_diagnostic(diag, filename)
    if args.output:
        _write_atomic(args.output, result.text)
    else:
        sys.stdout.write(result.text)
    return 0


def _cmd_explain(args: argparse.Namespace) -> int:
    registry = default_registry()
    text = args.invocation.strip()
    segments = scan(text, registry)
    invocations = [s for s in segments if isinstance(s, Invocation)]
    if len(invocations) != 1:
        raise TranspilerError(f"{text!r} is not a single directive invocation")
    inv = invocations[0]
    for backend in ALL_BACKENDS:
        plan = lower(inv, backend, registry)
        print(f"{backend.value}:")
        rendered = render(plan, PragmaStyle.HASH)
        if rendered:
            for line in rendered.split("\n"):
                print(f"  {line}")
        else:
            print("  (emitted as nothing)")
        for item in plan.dropped:
            print(f"  dropped {item.label}: {item.reason}")
        for message in plan.warnings:
            print(f"  warning: {message}")
    return 0


def _cmd_dump_table(args: argparse.Namespace) -> int:
    registry = default_registry()
    if args.format == "json":
        print(json.dumps(_registry_dict(registry), indent=2, sort_keys=True))
        return 0
    for name, alias in sorted(registry.directives.items()):
        print(f"directive\t{name}\t{alias.notation.value}\t{alias.kind.id}\t"
              f"{alias.arity.value}")
    for name, alias in sorted(registry.clauses.items()):
        print(f"clause\t{name}\t{alias.notation.value}\t{alias.kind.id}\t"
              f"{alias.arity.value}")
    for kind_id, kind in sorted(registry.directive_kinds.items()):
        for backend in ALL_BACKENDS:
            lines = kind.lines[backend]
            spelled = " ; ".join(t.text for t in lines) if lines else "(dropped)"
            print(f"render\t{kind_id}\t{backend.value}\t{spelled}")
    for kind_id, kind in sorted(registry.clause_kinds.items()):
        for dialect, rendered in sorted(kind.renders.items(), key=lambda kv: kv[0].value):
            spelled = "(dropped)" if rendered is None else (
                rendered.keyword + rendered.template + (" [suffix]" if rendered.is_suffix else "")
            )
            print(f"crender\t{kind_id}\t{dialect.value}\t{spelled}")
    for (primitive, kind_id), flag in sorted(registry.applicability.items()):
        print(f"applic\t{primitive}\t{kind_id}\t{'yes' if flag else 'no'}")
    return 0


def _registry_dict(registry: Registry) -> dict:
    return {
        "directives": {
            name: {
                "notation": alias.notation.value,
                "canonical": alias.kind.id,
                "arity": alias.arity.value,
            }
            for name, alias in registry.directives.items()
        },
        "clauses": {
            name: {
                "notation": alias.notation.value,
                "kind": alias.kind.id,
                "arity": alias.arity.value,
            }
            for name, alias in registry.clauses.items()
        },
        "renders": {
            kind_id: {
                backend.value: [t.text for t in kind.lines[backend]]
                for backend in ALL_BACKENDS
            }
            for kind_id, kind in registry.directive_kinds.items()
        },
        "clause_renders": {
            kind_id: {
                dialect.value: (
                    None
                    if rendered is None
                    else {
                        "keyword": rendered.keyword,
                        "template": rendered.template,
                        "suffix": rendered.is_suffix,
                    }
                )
                for dialect, rendered in kind.renders.items()
            }
            for kind_id, kind in registry.clause_kinds.items()
        },
        "applicability": {
            f"{primitive}/{kind_id}": flag
            for (primitive, kind_id), flag in registry.applicability.items()
        },
    }


def _cmd_verify(args: argparse.Namespace) -> int:
    registry = default_registry()
    if args.rowfile:
        rows = load_rows(_read(args.rowfile))
    else:
        rows = list(default_rows())
    report = verify_all(rows, registry)
    if args.verbose:
        for result in report.results:
            mark = "ok  " if result.passed else "FAIL"
            print(f"{mark} [{result.row.backend.value}] {result.row.input_text}")
    for result in report.failures:
        print(
            f"FAIL [{result.row.backend.value}] {result.row.input_text}\n"
            f"     expected: {list(result.row.expected)}\n"
            f"     actual:   {list(result.actual)}\n"
            f"     {result.detail}",
            file=sys.stderr,
        )
    print(report.summary())
    return 0 if report.ok else 1


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".pragmaport-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _print_diagnostic(diag: Diagnostic, filename: str) -> None:
    message = diag.format(filename)
    stream = sys.stderr
    if _use_color(stream):
        colors = {"error": "\x1b[31m", "warning": "\x1b[33m", "note": "\x1b[36m"}
        color = colors.get(diag.severity, "")
        message = message.replace(
            f" {diag.severity}: ", f" {color}{diag.severity}\x1b[0m: ", 1
        )
    print(message, file=stream)


def _use_color(stream) -> bool:
    if os.environ.get("NO_COLOR"):
        return False
    return hasattr(stream, "isatty") and stream.isatty()


if __name__ == "__main__":
    sys.exit(main())
