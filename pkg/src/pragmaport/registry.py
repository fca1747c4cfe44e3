"""Catalog of directive/clause aliases, per-backend renderings, and the
clause-applicability matrix.

Everything the lowering engine knows about concrete directives lives in a
line-oriented data file (see ``data/mappings.reg``); this module only loads
and validates it. Record kinds:

``directive <NAME> <notation> <canonical-id> [noargs]``
    Registers an input alias for a canonical directive.
``clause <NAME> <notation> <kind-id> <noargs|optargs|reqargs>``
    Registers an input alias for a canonical clause kind.
``render <canonical-id> <backends> <primitives|-> | <template>``
    One output pragma line for a directive canonical on those backends
    (repeat for multi-line output; file order is line order). A template
    containing ``$ARGS`` takes the raw argument text verbatim and performs
    no clause processing; such lines must use ``-`` for primitives.
``drop <canonical-id> <backends>``
    The directive is emitted as nothing on those backends.
``crender <kind-id> <dialects> <spelling> [suffix]``
    Clause spelling per output dialect (``acc``/``omp``/``cpu``, groups
    ``host``/``all``); ``-`` means the clause has no counterpart there.
    ``suffix`` marks spellings that extend the construct name itself.
``imply <canonical-id> <backends> <kind-id>``
    Clause kind implicitly prepended when lowering on those backends.
``assign <kind-id> <launch|loop>``
    Which line receives the clause when a split plan accepts it on both.
``warn <canonical-id> <backends> <message>``
    Diagnostic attached whenever the directive lowers on those backends.
``applic <primitive> <kind-id> <yes|no>``
    One applicability cell; the matrix must be total over every primitive
    referenced by a clause-processing render line.

``#`` starts a comment; backend/dialect fields accept comma-joined group
names (see backends.py).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .backends import (
    ALL_BACKENDS,
    Backend,
    Dialect,
    Notation,
    dialect_of,
    expand_backends,
    expand_dialects,
)
from .errors import (
    DanglingCanonicalId,
    DuplicateAlias,
    IncompleteApplicability,
    MalformedRegistry,
)

_NOTATIONS = {
    "intuitive": Notation.INTUITIVE,
    "acc": Notation.ACC_LIKE,
    "omp": Notation.OMP_LIKE,
}


class Arity(enum.Enum):
    NOARGS = "noargs"
    OPTARGS = "optargs"
    REQARGS = "reqargs"
    VARARGS = "varargs"  # directives: any argument list, possibly empty


@dataclass(frozen=True)
class ClauseRender:
    """How one clause kind is spelled in one output dialect."""

    keyword: str
    template: str  # "", "($ARGS)", "(to: $ARGS)", "(none)", ...
    is_suffix: bool = False

    def render(self, args: str | None) -> str:
        if not self.template:
            return self.keyword
        text = self.template
        if "$ARGS" in text:
            value = (args or "").strip()
            if not value and text == "($ARGS)":
                return self.keyword
            text = text.replace("$ARGS", value)
            if not value:
                text = text.replace("( ", "(").replace(" )", ")")
        return self.keyword + text


@dataclass(frozen=True)
class ClauseKind:
    id: str
    renders: dict[Dialect, ClauseRender | None]
    split_side: str = "launch"

    def render_in(self, dialect: Dialect) -> ClauseRender | None:
        return self.renders.get(dialect)


@dataclass(frozen=True)
class ClauseAlias:
    name: str
    notation: Notation
    kind: ClauseKind
    arity: Arity


@dataclass(frozen=True)
class PragmaTemplate:
    """One output line pattern of a directive canonical."""

    primitives: tuple[str, ...]
    text: str

    @property
    def is_payload(self) -> bool:
        return "$ARGS" in self.text

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(self.text.split())

    @property
    def dialect(self) -> Dialect:
        return dialect_of(self.tokens)


@dataclass(frozen=True)
class DirectiveKind:
    id: str
    lines: dict[Backend, tuple[PragmaTemplate, ...]]
    implied: dict[Backend, tuple[str, ...]] = field(default_factory=dict)
    warnings: dict[Backend, tuple[str, ...]] = field(default_factory=dict)

    def dropped_on(self, backend: Backend) -> bool:
        return not self.lines.get(backend, ())


@dataclass(frozen=True)
class DirectiveAlias:
    name: str
    notation: Notation
    kind: DirectiveKind
    arity: Arity


class Registry:
    """Immutable lookup tables; safe for concurrent readers."""

    def __init__(
        self,
        directives: dict[str, DirectiveAlias],
        clauses: dict[str, ClauseAlias],
        directive_kinds: dict[str, DirectiveKind],
        clause_kinds: dict[str, ClauseKind],
        applicability: dict[tuple[str, str], bool],
        primitives: frozenset[str],
    ):
        self.directives = directives
        self.clauses = clauses
        self.directive_kinds = directive_kinds
        self.clause_kinds = clause_kinds
        self.applicability = applicability
        self.primitives = primitives
        self._bare_clause_words = frozenset(
            render.keyword
            for kind in clause_kinds.values()
            for render in kind.renders.values()
            if render is not None and not render.template and render.keyword
        )

    def resolve_directive(self, name: str) -> DirectiveAlias | None:
        return self.directives.get(name)

    def resolve_clause(self, name: str) -> ClauseAlias | None:
        return self.clauses.get(name)

    def applicable(self, primitive: str, kind_id: str) -> bool:
        try:
            return self.applicability[(primitive, kind_id)]
        except KeyError:
            raise IncompleteApplicability(
                f"no applicability entry for ({primitive}, {kind_id})"
            ) from None

    @property
    def bare_clause_words(self) -> frozenset[str]:
        """Keywords that may appear as complete, argument-less clauses."""
        return self._bare_clause_words


def _parse_clause_spelling(text: str) -> ClauseRender | None:
    if text == "-":
        return None
    is_suffix = False
    if text.endswith(" suffix"):
        is_suffix = True
        text = text[: -len(" suffix")].rstrip()
    paren = text.find("(")
    if paren < 0:
        return ClauseRender(text, "", is_suffix)
    return ClauseRender(text[:paren], text[paren:], is_suffix)


def load_registry(mapping_data: str) -> Registry:
    """Parse and validate registry file content (see module docstring)."""
    directive_aliases: dict[str, tuple[Notation, str, Arity]] = {}
    clause_aliases: dict[str, tuple[Notation, str, Arity]] = {}
    render_lines: dict[str, dict[Backend, list[PragmaTemplate]]] = {}
    drops: dict[str, set[Backend]] = {}
    crenders: dict[str, dict[Dialect, ClauseRender | None]] = {}
    implied: dict[str, dict[Backend, list[str]]] = {}
    warnings: dict[str, dict[Backend, list[str]]] = {}
    assigns: dict[str, str] = {}
    applicability: dict[tuple[str, str], bool] = {}

    seen_any = False
    for lineno, raw in enumerate(mapping_data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        seen_any = True
        fields = line.split(None, 1)
        record, rest = fields[0], (fields[1] if len(fields) > 1 else "")

        def bad(msg: str) -> MalformedRegistry:
            return MalformedRegistry(f"registry line {lineno}: {msg}", lineno, 1)

        try:
            if record == "directive":
                parts = rest.split()
                if len(parts) not in (3, 4):
                    raise bad("expected: directive NAME NOTATION ID [noargs]")
                name, notation, canonical = parts[:3]
                arity = Arity.VARARGS
                if len(parts) == 4:
                    if parts[3] != "noargs":
                        raise bad(f"unknown directive flag {parts[3]!r}")
                    arity = Arity.NOARGS
                if name in directive_aliases or name in clause_aliases:
                    raise DuplicateAlias(f"alias {name!r} registered twice", lineno, 1)
                directive_aliases[name] = (_NOTATIONS[notation], canonical, arity)
            elif record == "clause":
                parts = rest.split()
                if len(parts) != 4:
                    raise bad("expected: clause NAME NOTATION KIND ARITY")
                name, notation, kind_id, arity_txt = parts
                if name in clause_aliases or name in directive_aliases:
                    raise DuplicateAlias(f"alias {name!r} registered twice", lineno, 1)
                clause_aliases[name] = (
                    _NOTATIONS[notation],
                    kind_id,
                    Arity(arity_txt),
                )
            elif record == "render":
                head, sep, template = rest.partition("|")
                if not sep:
                    raise bad("render record needs '| template'")
                parts = head.split()
                if len(parts) != 3:
                    raise bad("expected: render ID BACKENDS PRIMS | template")
                canonical, backends_txt, prims_txt = parts
                template = template.strip()
                if not template:
                    raise bad("empty render template")
                prims = () if prims_txt == "-" else tuple(prims_txt.split("+"))
                tmpl = PragmaTemplate(prims, template)
                if tmpl.is_payload and prims:
                    raise bad("payload templates must use '-' primitives")
                for backend in expand_backends(backends_txt):
                    render_lines.setdefault(canonical, {}).setdefault(
                        backend, []
                    ).append(tmpl)
            elif record == "drop":
                canonical, backends_txt = rest.split()
                drops.setdefault(canonical, set()).update(expand_backends(backends_txt))
            elif record == "crender":
                parts = rest.split(None, 2)
                if len(parts) != 3:
                    raise bad("expected: crender KIND DIALECTS SPELLING")
                kind_id, dialects_txt, spelling = parts
                render = _parse_clause_spelling(spelling.strip())
                for dialect in expand_dialects(dialects_txt):
                    slot = crenders.setdefault(kind_id, {})
                    if dialect in slot:
                        raise bad(f"duplicate crender for {kind_id}/{dialect.value}")
                    slot[dialect] = render
            elif record == "imply":
                canonical, backends_txt, kind_id = rest.split()
                for backend in expand_backends(backends_txt):
                    implied.setdefault(canonical, {}).setdefault(backend, []).append(
                        kind_id
                    )
            elif record == "assign":
                kind_id, side = rest.split()
                if side not in ("launch", "loop"):
                    raise bad(f"bad assign side {side!r}")
                assigns[kind_id] = side
            elif record == "warn":
                parts = rest.split(None, 2)
                if len(parts) != 3:
                    raise bad("expected: warn ID BACKENDS MESSAGE")
                canonical, backends_txt, message = parts
                for backend in expand_backends(backends_txt):
                    warnings.setdefault(canonical, {}).setdefault(backend, []).append(
                        message
                    )
            elif record == "applic":
                primitive, kind_id, flag = rest.split()
                if flag not in ("yes", "no"):
                    raise bad(f"bad applicability flag {flag!r}")
                key = (primitive, kind_id)
                if key in applicability:
                    raise bad(f"duplicate applicability entry {key}")
                applicability[key] = flag == "yes"
            else:
                raise bad(f"unknown record kind {record!r}")
        except (ValueError, KeyError) as exc:
            raise MalformedRegistry(
                f"registry line {lineno}: cannot parse ({exc})", lineno, 1
            ) from exc

    if not seen_any:
        raise MalformedRegistry("registry data is empty")

    # Assemble clause kinds and validate dialect coverage.
    clause_kinds: dict[str, ClauseKind] = {}
    for kind_id, renders in crenders.items():
        for dialect in Dialect:
            if dialect not in renders:
                raise MalformedRegistry(
                    f"clause kind {kind_id!r} has no spelling for "
                    f"dialect {dialect.value!r}"
                )
        clause_kinds[kind_id] = ClauseKind(
            kind_id, renders, assigns.get(kind_id, "launch")
        )

    # Assemble directive kinds and validate backend coverage.
    directive_kinds: dict[str, DirectiveKind] = {}
    referenced = set(render_lines) | set(drops)
    for canonical in sorted(referenced):
        lines: dict[Backend, tuple[PragmaTemplate, ...]] = {}
        for backend in ALL_BACKENDS:
            rendered = tuple(render_lines.get(canonical, {}).get(backend, ()))
            dropped = backend in drops.get(canonical, set())
            if rendered and dropped:
                raise MalformedRegistry(
                    f"directive {canonical!r} both rendered and dropped on {backend}"
                )
            if not rendered and not dropped:
                raise MalformedRegistry(
                    f"directive {canonical!r} has no render/drop for {backend}"
                )
            payload = [t.is_payload for t in rendered]
            if any(payload) and not all(payload):
                raise MalformedRegistry(
                    f"directive {canonical!r} mixes payload and clause lines "
                    f"on {backend}"
                )
            lines[backend] = rendered
        directive_kinds[canonical] = DirectiveKind(
            canonical,
            lines,
            {b: tuple(ks) for b, ks in implied.get(canonical, {}).items()},
            {b: tuple(ws) for b, ws in warnings.get(canonical, {}).items()},
        )

    # Resolve aliases against their canonicals.
    directives: dict[str, DirectiveAlias] = {}
    for name, (notation, canonical, arity) in directive_aliases.items():
        kind = directive_kinds.get(canonical)
        if kind is None:
            raise DanglingCanonicalId(
                f"directive alias {name!r} refers to unknown canonical {canonical!r}"
            )
        directives[name] = DirectiveAlias(name, notation, kind, arity)
    clauses: dict[str, ClauseAlias] = {}
    for name, (notation, kind_id, arity) in clause_aliases.items():
        ckind = clause_kinds.get(kind_id)
        if ckind is None:
            raise DanglingCanonicalId(
                f"clause alias {name!r} refers to unknown clause kind {kind_id!r}"
            )
        clauses[name] = ClauseAlias(name, notation, ckind, arity)

    for kind_id in set(implied):
        if kind_id not in directive_kinds:
            raise DanglingCanonicalId(f"imply record for unknown canonical {kind_id!r}")
    for canonical, per_backend in implied.items():
        for kinds in per_backend.values():
            for kind_id in kinds:
                if kind_id not in clause_kinds:
                    raise DanglingCanonicalId(
                        f"implied clause kind {kind_id!r} is not defined"
                    )
    for primitive, kind_id in applicability:
        if kind_id not in clause_kinds:
            raise DanglingCanonicalId(
                f"applicability entry names unknown clause kind {kind_id!r}"
            )

    # The matrix must be total over primitives of clause-processing lines.
    used_primitives: set[str] = set()
    for kind in directive_kinds.values():
        for templates in kind.lines.values():
            for template in templates:
                used_primitives.update(template.primitives)
    for primitive in sorted(used_primitives):
        for kind_id in clause_kinds:
            if (primitive, kind_id) not in applicability:
                raise IncompleteApplicability(
                    f"missing applicability entry for ({primitive}, {kind_id})"
                )

    return Registry(
        directives,
        clauses,
        directive_kinds,
        clause_kinds,
        applicability,
        frozenset(used_primitives),
    )


@lru_cache(maxsize=1)
def default_registry() -> Registry:
    """The bundled mapping catalog."""
    data = resources.files("pragmaport.data").joinpath("mappings.reg").read_text("utf-8")
    return load_registry(data)
