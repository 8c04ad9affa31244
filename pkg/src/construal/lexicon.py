"""Per-language adposition lexicon: prototypical functions and attested pairs.

File format (UTF-8, record-per-block, blocks terminated by a blank line)::

    entry <language> <form> [kind]
    proto: Function1, Function2
    attested: Role ~> Function ~> Function | example sentence | source
    notes: free text

``kind`` is metadata only (preposition | postposition | case-marker) and
never affects validation. A bare role in an ``attested:`` line records a
null-function attestation. ``#`` begins a comment line; comments before the
first entry are preserved as a header block.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, Mapping

from construal.core import Construal, parse_construal
from construal.exceptions import LexiconError, UnknownLabelError
from construal.hierarchy import SupersenseHierarchy

KINDS = ("preposition", "postposition", "case-marker")


@dataclass(frozen=True)
class Attestation:
    """One attested role/function-chain pair with its example sentence."""

    role: str
    functions: tuple[str, ...]
    example: str
    source: str = ""

    def __post_init__(self) -> None:
        # examples and sources live inside a pipe-delimited line
        for name in ("example", "source"):
            value = getattr(self, name)
            if "|" in value or "\n" in value:
                raise LexiconError(f"attestation {name} must not contain '|' or newlines: {value!r}")

    def construal(self) -> Construal:
        return Construal(self.role, self.functions)


@dataclass(frozen=True)
class AdpositionEntry:
    """Lexicon record for one adposition or case marker in one language."""

    language: str
    form: str
    prototypical_functions: tuple[str, ...]
    attested: tuple[Attestation, ...] = ()
    kind: str = "preposition"
    notes: str = ""
    native: str = ""

    def __post_init__(self) -> None:
        if not self.language or not self.form:
            raise LexiconError(f"entry needs a language and a form: {self.language!r} {self.form!r}")
        if not self.prototypical_functions:
            raise LexiconError(f"entry {self.language}/{self.form}: empty prototypical functions")
        if self.kind not in KINDS:
            raise LexiconError(f"entry {self.language}/{self.form}: unknown kind {self.kind!r}")

    @property
    def key(self) -> tuple[str, str]:
        return (self.language, self.form)


class Lexicon:
    """An immutable collection of adposition entries keyed by (language, form)."""

    def __init__(self, entries: Iterable[AdpositionEntry], header: tuple[str, ...] = ()):
        self.header = tuple(header)
        self._entries: dict[tuple[str, str], AdpositionEntry] = {}
        for entry in entries:
            if entry.key in self._entries:
                raise LexiconError(f"duplicate entry for {entry.language}/{entry.form}")
            self._entries[entry.key] = entry
        self.warnings: tuple[str, ...] = tuple(self._proto_flags())

    def _proto_flags(self) -> Iterator[str]:
        # Single-function attestations outside the prototypical set are
        # flagged but kept: they are exactly the construal extensions the
        # lexicon exists to document.
        for entry in self._entries.values():
            for att in entry.attested:
                if len(att.functions) == 1 and att.functions[0] not in entry.prototypical_functions:
                    yield (
                        f"{entry.language}/{entry.form}: attested function "
                        f"{att.functions[0]!r} is not prototypical"
                    )

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: tuple[str, str]) -> bool:
        return key in self._entries

    def __iter__(self) -> Iterator[AdpositionEntry]:
        return iter(self._entries.values())

    @property
    def entries(self) -> Mapping[tuple[str, str], AdpositionEntry]:
        return dict(self._entries)

    def get(self, language: str, form: str) -> AdpositionEntry | None:
        return self._entries.get((language, form))

    def suggest_functions(self, language: str, form: str, role: str) -> list[tuple[str, ...]]:
        """Ranked function chains for annotating ``role`` under this form.

        Attested chains for the role come first (attestation count, ties by
        file order), then prototypical functions as length-1 chains, then the
        null chain. Unknown entries yield an empty list; use :meth:`get` to
        distinguish a missing entry from one with no suggestions.
        """
        entry = self.get(language, form)
        if entry is None:
            return []
        counts: Counter[tuple[str, ...]] = Counter()
        first_seen: dict[tuple[str, ...], int] = {}
        for index, att in enumerate(entry.attested):
            if att.role != role:
                continue
            counts[att.functions] += 1
            first_seen.setdefault(att.functions, index)
        ranked = sorted(counts, key=lambda chain: (-counts[chain], first_seen[chain]))
        suggestions: list[tuple[str, ...]] = list(ranked)
        for proto in entry.prototypical_functions:
            if (proto,) not in suggestions:
                suggestions.append((proto,))
        if () not in suggestions:
            suggestions.append(())
        return suggestions

    def suggest_construals(self, language: str, form: str) -> list[Construal]:
        """Ranked full construals for a task on this form, role unknown.

        Attested pairs ranked by attestation count then file order, followed
        by congruent readings of the prototypical functions.
        """
        entry = self.get(language, form)
        if entry is None:
            return []
        counts: Counter[Construal] = Counter()
        first_seen: dict[Construal, int] = {}
        for index, att in enumerate(entry.attested):
            construal = att.construal()
            counts[construal] += 1
            first_seen.setdefault(construal, index)
        ranked = sorted(counts, key=lambda c: (-counts[c], first_seen[c]))
        for proto in entry.prototypical_functions:
            congruent = Construal(proto, (proto,))
            if congruent not in ranked:
                ranked.append(congruent)
        return ranked

    def attest(
        self,
        language: str,
        form: str,
        role: str,
        functions: Iterable[str],
        example: str,
        source: str = "",
        hierarchy: SupersenseHierarchy | None = None,
    ) -> "Lexicon":
        """Return a new lexicon with the attestation appended (idempotent)."""
        entry = self.get(language, form)
        if entry is None:
            raise LexiconError(f"no entry for {language}/{form}")
        chain = tuple(functions)
        if hierarchy is not None:
            for label in (role, *chain):
                if label not in hierarchy:
                    raise UnknownLabelError(label, f"attesting {language}/{form}")
        attestation = Attestation(role, chain, example, source)
        if attestation in entry.attested:
            return self
        updated = replace(entry, attested=entry.attested + (attestation,))
        entries = dict(self._entries)
        entries[entry.key] = updated
        return Lexicon(entries.values(), self.header)


# -- file I/O ------------------------------------------------------------


def _parse_attested(value: str, lineno: int) -> Attestation:
    parts = [p.strip() for p in value.split("|")]
    if len(parts) != 3:
        raise LexiconError("expected 'attested: Construal | example | source'", lineno)
    construal = parse_construal(parts[0])
    if construal.metaphoric:
        raise LexiconError("metaphor flags do not belong in lexicon attestations", lineno)
    return Attestation(construal.role, construal.functions, parts[1], parts[2])


def load_lexicon(source: str, hierarchy: SupersenseHierarchy) -> Lexicon:
    """Parse and validate a lexicon file; unresolved labels are hard errors."""
    header: list[str] = []
    entries: list[AdpositionEntry] = []
    current: dict | None = None

    def finish(lineno: int) -> None:
        nonlocal current
        if current is None:
            return
        if current["proto"] is None:
            raise LexiconError(
                f"entry {current['language']}/{current['form']} has no proto: line", lineno
            )
        entries.append(
            AdpositionEntry(
                language=current["language"],
                form=current["form"],
                prototypical_functions=tuple(current["proto"]),
                attested=tuple(current["attested"]),
                kind=current["kind"],
                notes=current["notes"],
                native=current["native"],
            )
        )
        current = None

    for lineno, raw in enumerate(source.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            if not entries and current is None:
                header.append(line)
            continue
        if not line:
            finish(lineno)
            continue
        if line.startswith("entry "):
            finish(lineno)
            tokens = line.split()
            if len(tokens) not in (3, 4):
                raise LexiconError("expected 'entry <language> <form> [kind]'", lineno)
            kind = tokens[3] if len(tokens) == 4 else "preposition"
            current = {
                "language": tokens[1],
                "form": tokens[2],
                "kind": kind,
                "proto": None,
                "attested": [],
                "notes": "",
                "native": "",
            }
        elif current is None:
            raise LexiconError(f"unexpected line outside an entry block: {line!r}", lineno)
        elif line.startswith("proto:"):
            protos = [p.strip() for p in line[len("proto:"):].split(",") if p.strip()]
            if not protos:
                raise LexiconError("empty proto: line", lineno)
            current["proto"] = protos
        elif line.startswith("attested:"):
            current["attested"].append(_parse_attested(line[len("attested:"):], lineno))
        elif line.startswith("notes:"):
            current["notes"] = line[len("notes:"):].strip()
        elif line.startswith("native:"):
            current["native"] = line[len("native:"):].strip()
        else:
            raise LexiconError(f"unrecognized line {line!r}", lineno)
    finish(len(source.splitlines()) + 1)

    lexicon = Lexicon(entries, tuple(header))
    for entry in lexicon:
        for label in entry.prototypical_functions:
            if label not in hierarchy:
                raise UnknownLabelError(label, f"proto of {entry.language}/{entry.form}")
        for att in entry.attested:
            for label in (att.role, *att.functions):
                if label not in hierarchy:
                    raise UnknownLabelError(label, f"attested in {entry.language}/{entry.form}")
    return lexicon


def serialize_lexicon(lexicon: Lexicon) -> str:
    """Canonical text form: entries sorted by (language, form)."""
    blocks: list[str] = []
    for entry in sorted(lexicon, key=lambda e: e.key):
        lines = [f"entry {entry.language} {entry.form} {entry.kind}"]
        lines.append(f"proto: {', '.join(entry.prototypical_functions)}")
        for att in entry.attested:
            chain = " ~> ".join((att.role, *att.functions))
            lines.append(f"attested: {chain} | {att.example} | {att.source}")
        if entry.native:
            lines.append(f"native: {entry.native}")
        if entry.notes:
            lines.append(f"notes: {entry.notes}")
        blocks.append("\n".join(lines))
    text = "\n\n".join(blocks) + "\n" if blocks else ""
    if lexicon.header:
        text = "\n".join(lexicon.header) + "\n" + text
    return text
