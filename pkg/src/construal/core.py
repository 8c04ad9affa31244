"""Role/function construal values and their textual notation.

A construal pairs the scene role (what the surrounding predicate or scene
calls for) with the chain of functions contributed by the adposition itself.
The ASCII notation is ``Role~>Function~>Function!m``: a bare role encodes a
null function, extra ``~>`` steps encode a chain of extensions, and the
``!m`` suffix marks a metaphoric use (role read in the target domain,
function in the source domain).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from construal.exceptions import NotationError, UnknownLabelError

if TYPE_CHECKING:  # pragma: no cover
    from construal.hierarchy import SupersenseHierarchy

CHAIN_ARROW = "~>"
METAPHOR_SUFFIX = "!m"

SIMPLIFY_POLICIES = ("keep-first-two", "keep-ends")


@dataclass(frozen=True)
class Construal:
    """An immutable scene-role / function-chain pair.

    ``functions`` of length 0 encodes a null function; length >= 2 encodes a
    chain of construal extensions, most direct extension first.
    """

    role: str
    functions: tuple[str, ...] = ()
    metaphoric: bool = False

    def __post_init__(self) -> None:
        if not self.role or self.role != self.role.strip():
            raise ValueError(f"bad role label: {self.role!r}")
        object.__setattr__(self, "functions", tuple(self.functions))

    @property
    def null_function(self) -> bool:
        return not self.functions

    def notation(self) -> str:
        return format_construal(self)

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.notation()


def make_construal(
    hierarchy: "SupersenseHierarchy",
    role: str,
    functions: Iterable[str] = (),
    metaphoric: bool = False,
) -> Construal:
    """Build a construal validated against ``hierarchy``.

    Reading: the role is realized with an adposition that marks the first
    function, which may itself be construed as each further function in turn.
    """
    chain = tuple(functions)
    if role not in hierarchy:
        raise UnknownLabelError(role, "scene role")
    for fn in chain:
        if fn not in hierarchy:
            raise UnknownLabelError(fn, "function")
    for prev, cur in zip(chain, chain[1:]):
        if prev == cur:
            raise ValueError(f"immediate repetition of {cur!r} in function chain")
    return Construal(role, chain, metaphoric)


def validate_construal(hierarchy: "SupersenseHierarchy", construal: Construal) -> Construal:
    """Re-check an existing construal against ``hierarchy``."""
    return make_construal(hierarchy, construal.role, construal.functions, construal.metaphoric)


def is_congruent(construal: Construal) -> bool:
    """True iff the function chain is exactly the scene role itself."""
    return len(construal.functions) == 1 and construal.functions[0] == construal.role


def parse_construal(text: str) -> Construal:
    """Parse ``Role~>Function~>Function!m`` notation.

    Whitespace around tokens is ignored. Labels are not resolved here; pass
    the result through ``make_construal``/``validate_construal`` to check them
    against a hierarchy.
    """
    raw = text
    stripped = text.strip()
    if not stripped:
        raise NotationError("empty construal", 0)
    metaphoric = False
    if stripped.endswith(METAPHOR_SUFFIX):
        metaphoric = True
        stripped = stripped[: -len(METAPHOR_SUFFIX)]
    offset = 0
    labels: list[str] = []
    for part in stripped.split(CHAIN_ARROW):
        label = part.strip()
        if not label:
            raise NotationError("missing label", raw.index(part, offset) if part else offset)
        if any(ch.isspace() for ch in label):
            raise NotationError(f"label {label!r} contains whitespace", raw.index(label, offset))
        if METAPHOR_SUFFIX in label:
            raise NotationError(
                f"{METAPHOR_SUFFIX!r} is only valid at the end of the notation",
                raw.index(METAPHOR_SUFFIX, offset),
            )
        labels.append(label)
        offset = raw.index(part, offset) + len(part)
    return Construal(labels[0], tuple(labels[1:]), metaphoric)


def format_construal(construal: Construal) -> str:
    """Render a construal in the ASCII notation; inverse of ``parse_construal``."""
    text = CHAIN_ARROW.join((construal.role, *construal.functions))
    if construal.metaphoric:
        text += METAPHOR_SUFFIX
    return text


def simplify_chain(construal: Construal, policy: str) -> Construal:
    """Truncate a multi-step function chain to a single function.

    ``keep-first-two`` keeps the role and the first function; ``keep-ends``
    keeps the role and the last function. Chains of length <= 1 are returned
    unchanged.
    """
    if policy not in SIMPLIFY_POLICIES:
        raise ValueError(f"unknown simplify policy {policy!r}; expected one of {SIMPLIFY_POLICIES}")
    if len(construal.functions) <= 1:
        return construal
    if policy == "keep-first-two":
        kept = (construal.functions[0],)
    else:
        kept = (construal.functions[-1],)
    return Construal(construal.role, kept, construal.metaphoric)
