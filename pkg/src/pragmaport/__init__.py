"""pragmaport: lower unified offload directive macros to OpenACC, OpenMP
target, or host OpenMP pragma text."""

from .backends import Backend, Dialect, Notation, PragmaStyle
from .conformance import (
    ConformanceReport,
    MappingRow,
    default_rows,
    load_rows,
    verify_all,
)
from .errors import (
    ArgsOnNoArgsAlias,
    ArityMismatch,
    DanglingCanonicalId,
    Diagnostic,
    DuplicateAlias,
    IncompleteApplicability,
    MalformedRegistry,
    MalformedRowFile,
    TranspilerError,
    UnbalancedParentheses,
    UnknownClause,
)
from .lowering import (
    DroppedClause,
    LoweringPlan,
    PragmaLine,
    lower,
    lower_acc_alias_on_fallback,
    render,
)
from .parser import ArgToken, Invocation, Verbatim, scan, split_args
from .registry import Registry, default_registry, load_registry
from .rewriter import TranspileConfig, TranspileResult, transpile

__version__ = "0.1.0"

__all__ = [
    "ArgToken",
    "ArgsOnNoArgsAlias",
    "ArityMismatch",
    "Backend",
    "ConformanceReport",
    "DanglingCanonicalId",
    "Diagnostic",
    "Dialect",
    "DroppedClause",
    "DuplicateAlias",
    "IncompleteApplicability",
    "Invocation",
    "LoweringPlan",
    "MalformedRegistry",
    "MalformedRowFile",
    "MappingRow",
    "Notation",
    "PragmaLine",
    "PragmaStyle",
    "Registry",
    "TranspileConfig",
    "TranspileResult",
    "TranspilerError",
    "UnbalancedParentheses",
    "UnknownClause",
    "Verbatim",
    "default_registry",
    "default_rows",
    "load_registry",
    "load_rows",
    "lower",
    "lower_acc_alias_on_fallback",
    "render",
    "scan",
    "split_args",
    "transpile",
    "verify_all",
]
