"""Lowering of one directive invocation to backend pragma text.

The pipeline per invocation: canonicalize the alias, pick the backend's
output line templates, then for clause-processing directives filter each
argument clause through the applicability matrix (logical disjunction over
a line's construct primitives), spell it in the line's dialect, keep
construct-suffix tokens adjacent to the construct name, and de-duplicate
clause keywords per line. Arguments of payload-style directives are pasted
verbatim into the template instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .backends import Backend, Notation, PragmaStyle
from .errors import ArityMismatch, UnknownClause
from .parser import ArgToken, Invocation
from .registry import Arity, ClauseKind, PragmaTemplate, Registry


@dataclass(frozen=True)
class PragmaLine:
    construct: tuple[str, ...]
    clauses: tuple[str, ...]

    @property
    def text(self) -> str:
        return " ".join(self.construct + self.clauses)


@dataclass(frozen=True)
class DroppedClause:
    label: str
    reason: str


@dataclass
class LoweringPlan:
    pragmas: list[PragmaLine] = field(default_factory=list)
    dropped: list[DroppedClause] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    #: clause-kind labels actually emitted, in processing order (clause
    #: arguments of payload-style directives are pasted, not tracked here)
    rendered: list[str] = field(default_factory=list)

    @property
    def texts(self) -> list[str]:
        return [p.text for p in self.pragmas]


class _LineDraft:
    __slots__ = ("construct", "clauses", "keywords")

    def __init__(self, template: PragmaTemplate):
        self.construct = list(template.tokens)
        self.clauses: list[str] = []
        self.keywords: set[str] = set()


def lower(
    inv: Invocation,
    backend: Backend,
    registry: Registry,
    passthrough: str = "off",
) -> LoweringPlan:
    """Produce the ordered pragma lines for one invocation on one backend."""
    kind = inv.alias.kind
    plan = LoweringPlan()
    plan.warnings.extend(kind.warnings.get(backend, ()))

    templates = kind.lines.get(backend, ())
    if not templates:
        for token in inv.args:
            plan.dropped.append(
                DroppedClause(
                    _label(token),
                    f"directive has no counterpart on backend {backend}",
                )
            )
        return plan

    if templates[0].is_payload:
        payload = ", ".join(t.text for t in inv.args)
        for template in templates:
            text = template.text.replace("$ARGS", payload)
            tokens = tuple(text.split(" "))
            plan.pragmas.append(PragmaLine(tokens, ()))
        return plan

    drafts = [_LineDraft(t) for t in templates]
    dialect = templates[0].dialect
    launch_at, loop_at = _split_roles(templates)

    entries: list[tuple[int | None, ArgToken | None, str | None]] = []
    for implied_kind in kind.implied.get(backend, ()):
        entries.append((None, None, implied_kind))
    for index, token in enumerate(inv.args):
        entries.append((index, token, None))

    for index, token, implied_kind in entries:
        if implied_kind is not None:
            ckind = registry.clause_kinds[implied_kind]
            args: str | None = None
            label = ckind.id
        elif token is not None and token.is_known:
            ckind = token.clause.kind
            args = token.args
            label = ckind.id
            if token.clause.arity is Arity.REQARGS and not (args or "").strip():
                raise ArityMismatch(
                    f"clause {token.clause.name!r} requires arguments"
                )
        else:
            assert token is not None
            if passthrough in ("launch", "loop"):
                at = loop_at if passthrough == "loop" else launch_at
                drafts[at].clauses.append(token.text)
                plan.rendered.append(token.text)
                plan.warnings.append(
                    f"unknown argument {token.text!r} passed through to the "
                    f"{passthrough} line"
                )
                continue
            raise UnknownClause(
                f"unknown clause {token.text!r} in {inv.alias.name!r}; use "
                "--passthrough-unknown to forward it verbatim"
            )

        render = ckind.render_in(dialect)
        if render is None:
            plan.dropped.append(
                DroppedClause(label, f"no counterpart on backend {backend}")
            )
            continue

        if index is not None and index > 0 and _is_suffix_kind(ckind):
            plan.warnings.append(
                f"{_label(token) if token else label} extends the construct "
                "name; place it first in the argument list for portability"
            )

        applicable = [
            i
            for i, template in enumerate(templates)
            if any(registry.applicable(p, ckind.id) for p in template.primitives)
        ]
        if not applicable:
            construct = " / ".join(t.text for t in templates)
            plan.dropped.append(
                DroppedClause(label, f"not applicable to '{construct}'")
            )
            if render.is_suffix:
                plan.warnings.append(
                    f"'{render.keyword}' has no registered combined form with "
                    f"'{templates[0].text}'; hint dropped"
                )
            continue
        if len(applicable) > 1:
            at = loop_at if ckind.split_side == "loop" else launch_at
            if at not in applicable:
                at = applicable[0]
        else:
            at = applicable[0]
        draft = drafts[at]

        text = render.render(args)
        if not text:
            plan.dropped.append(
                DroppedClause(label, "empty argument list renders nothing")
            )
            continue
        if render.is_suffix:
            if draft.construct[-1] != render.keyword:
                draft.construct.append(render.keyword)
            plan.rendered.append(label)
            continue
        if render.keyword:
            if render.keyword in draft.keywords:
                plan.dropped.append(
                    DroppedClause(label, f"duplicate clause keyword {render.keyword!r}")
                )
                continue
            draft.keywords.add(render.keyword)
        draft.clauses.append(text)
        plan.rendered.append(label)

    for draft in drafts:
        plan.pragmas.append(PragmaLine(tuple(draft.construct), tuple(draft.clauses)))
    return plan


def lower_acc_alias_on_fallback(inv: Invocation, registry: Registry) -> LoweringPlan:
    """Fallback-mode lowering of an OpenACC-like alias.

    These aliases have no dedicated fallback column in the catalog source;
    they are routed through their OpenMP-backend counterpart chain, which
    the bundled data records directly on the fallback backend.
    """
    if inv.alias.notation is not Notation.ACC_LIKE:
        raise ValueError(f"{inv.alias.name!r} is not an OpenACC-like alias")
    return lower(inv, Backend.FALLBACK, registry)


def render(plan: LoweringPlan, style: PragmaStyle) -> str:
    """Serialize a plan: one '#pragma' line each, or juxtaposed _Pragma forms."""
    if not plan.pragmas:
        return ""
    if style is PragmaStyle.HASH:
        return "\n".join(f"#pragma {line.text}" for line in plan.pragmas)
    return " ".join(f'_Pragma("{line.text}")' for line in plan.pragmas)


def split_pragma_text(
    text: str, bare_clause_words: frozenset[str]
) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Split pragma text into (construct tokens, clause chunks).

    Used by the conformance checker on both expected and produced text so
    that the two sides are always segmented identically. A chunk is a
    space-separated token with balanced parentheses glued together; the
    construct is the longest prefix of chunks that are neither
    parenthesized nor known bare clause keywords.
    """
    chunks: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch == " " and depth == 0:
            if current:
                chunks.append("".join(current))
                current = []
            continue
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        current.append(ch)
    if current:
        chunks.append("".join(current))

    construct: list[str] = []
    idx = 0
    for idx, chunk in enumerate(chunks):
        if "(" in chunk or chunk in bare_clause_words:
            break
        construct.append(chunk)
    else:
        idx = len(chunks)
    return tuple(construct), tuple(chunks[idx:])


def _label(token: ArgToken | None) -> str:
    if token is None:
        return "<implied>"
    if token.is_known:
        return token.clause.kind.id
    return repr(token.text)


def _is_suffix_kind(kind: ClauseKind) -> bool:
    return any(r is not None and r.is_suffix for r in kind.renders.values())


def _split_roles(templates: tuple[PragmaTemplate, ...]) -> tuple[int, int]:
    """(launch line index, loop line index) for split plans."""
    loop_at = len(templates) - 1
    for i, template in enumerate(templates):
        if "acc.loop" in template.primitives:
            loop_at = i
            break
    launch_at = 0 if loop_at != 0 else len(templates) - 1
    return launch_at, loop_at
