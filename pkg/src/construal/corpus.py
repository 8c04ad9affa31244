"""Annotated-corpus data model, TSV I/O, statistics, and revision transforms.

Two companion TSV files describe a corpus:

* documents: ``doc_id  sent_id  language  raw_text  token1 token2 ...``
  (tokens space-joined in the final field);
* annotations: ``doc_id  sent_id  start  end  form  annotator  construal  note``
  (note optional; spans are token indices, end exclusive).

``#`` begins a comment line in either file. Token lists are authoritative:
the toolkit never re-tokenizes. Adjudicated labels are ordinary records under
the reserved annotator id ``gold``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from construal.core import Construal, format_construal, is_congruent, parse_construal, validate_construal
from construal.exceptions import CorpusError, NotationError, UnknownLabelError
from construal.hierarchy import RevisionMap, SupersenseHierarchy
from construal.lexicon import Lexicon

GOLD_ANNOTATOR = "gold"

#: (doc_id, sent_id, start, end): the identity of an annotation target.
TargetKey = tuple[str, str, int, int]


@dataclass(frozen=True)
class Sentence:
    sent_id: str
    text: str
    tokens: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.tokens:
            raise CorpusError(f"sentence {self.sent_id!r} has no tokens")


@dataclass(frozen=True)
class Document:
    doc_id: str
    language: str
    sentences: tuple[Sentence, ...]

    def __post_init__(self) -> None:
        ids = [s.sent_id for s in self.sentences]
        if len(ids) != len(set(ids)):
            raise CorpusError(f"document {self.doc_id!r} has duplicate sentence ids")

    def sentence(self, sent_id: str) -> Sentence:
        for sentence in self.sentences:
            if sentence.sent_id == sent_id:
                return sentence
        raise CorpusError(f"document {self.doc_id!r} has no sentence {sent_id!r}")


@dataclass(frozen=True)
class AnnotationRecord:
    doc_id: str
    sent_id: str
    start: int
    end: int
    form: str
    annotator: str
    construal: Construal
    note: str = ""

    def __post_init__(self) -> None:
        if self.start < 0 or self.end <= self.start:
            raise CorpusError(
                f"bad span ({self.start}, {self.end}) at {self.doc_id}/{self.sent_id}"
            )
        # every text field rides in a TSV line; embedded separators would
        # corrupt exports and the service's append log
        for name in ("doc_id", "sent_id", "form", "annotator", "note"):
            value = getattr(self, name)
            if "\t" in value or "\n" in value:
                raise CorpusError(f"{name} must not contain tabs or newlines: {value!r}")

    @property
    def target(self) -> TargetKey:
        return (self.doc_id, self.sent_id, self.start, self.end)

    @property
    def is_gold(self) -> bool:
        return self.annotator == GOLD_ANNOTATOR


@dataclass
class CorpusStats:
    """Summary statistics over the gold records of a corpus."""

    tokens_annotated: int = 0
    label_histogram: dict[str, dict[str, int]] = field(
        default_factory=lambda: {"role": {}, "function": {}}
    )
    mismatch_rate: float = 0.0
    null_function_rate: float = 0.0
    role_only_labels: tuple[str, ...] = ()
    function_only_labels: tuple[str, ...] = ()


# -- loading -------------------------------------------------------------


def load_documents(source: str) -> dict[str, Document]:
    """Parse a documents TSV into an ordered doc_id -> Document map."""
    sentences: dict[str, list[Sentence]] = {}
    languages: dict[str, str] = {}
    seen: set[tuple[str, str]] = set()
    for lineno, raw in enumerate(source.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        fields = raw.split("\t")
        if len(fields) != 5:
            raise CorpusError(f"expected 5 tab-separated fields, got {len(fields)}", lineno)
        doc_id, sent_id, language, text, token_field = fields
        if (doc_id, sent_id) in seen:
            raise CorpusError(f"duplicate sentence {doc_id}/{sent_id}", lineno)
        seen.add((doc_id, sent_id))
        if languages.setdefault(doc_id, language) != language:
            raise CorpusError(f"document {doc_id!r} mixes languages", lineno)
        tokens = tuple(token_field.split())
        if not tokens:
            raise CorpusError(f"sentence {doc_id}/{sent_id} has no tokens", lineno)
        sentences.setdefault(doc_id, []).append(Sentence(sent_id, text, tokens))
    return {
        doc_id: Document(doc_id, languages[doc_id], tuple(sents))
        for doc_id, sents in sentences.items()
    }


def load_annotations(
    source: str,
    documents: Mapping[str, Document],
    hierarchy: SupersenseHierarchy,
    lexicon: Lexicon | None = None,
    allow_duplicates: bool = False,
) -> tuple[list[AnnotationRecord], list[str]]:
    """Parse an annotations TSV against its documents.

    Structural problems (bad spans, duplicates, unparsable construals,
    unknown labels) are hard errors; construals unattested in the lexicon
    are returned as warnings. ``allow_duplicates`` is for operation logs,
    where a repeated (target, annotator) line supersedes the earlier one.
    """
    records: list[AnnotationRecord] = []
    warnings: list[str] = []
    seen: set[tuple[TargetKey, str]] = set()
    for lineno, raw in enumerate(source.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        fields = raw.split("\t")
        if len(fields) == 7:
            fields.append("")
        if len(fields) != 8:
            raise CorpusError(f"expected 7 or 8 tab-separated fields, got {len(fields)}", lineno)
        doc_id, sent_id, start_s, end_s, form, annotator, notation, note = fields
        try:
            start, end = int(start_s), int(end_s)
        except ValueError:
            raise CorpusError(f"non-integer span {start_s!r}..{end_s!r}", lineno) from None
        document = documents.get(doc_id)
        if document is None:
            raise CorpusError(f"unknown document {doc_id!r}", lineno)
        sentence = None
        for cand in document.sentences:
            if cand.sent_id == sent_id:
                sentence = cand
                break
        if sentence is None:
            raise CorpusError(f"unknown sentence {doc_id}/{sent_id}", lineno)
        if not (0 <= start < end <= len(sentence.tokens)):
            raise CorpusError(
                f"span ({start}, {end}) outside sentence of {len(sentence.tokens)} tokens",
                lineno,
            )
        if not annotator:
            raise CorpusError("empty annotator id", lineno)
        try:
            construal = validate_construal(hierarchy, parse_construal(notation))
        except (NotationError, UnknownLabelError, ValueError) as exc:
            raise CorpusError(f"bad construal {notation!r}: {exc}", lineno) from None
        record = AnnotationRecord(doc_id, sent_id, start, end, form, annotator, construal, note)
        if (record.target, annotator) in seen and not allow_duplicates:
            raise CorpusError(
                f"duplicate record for {doc_id}/{sent_id} span ({start}, {end}) by {annotator!r}",
                lineno,
            )
        seen.add((record.target, annotator))
        if lexicon is not None:
            entry = lexicon.get(document.language, form)
            if entry is None:
                warnings.append(
                    f"line {lineno}: no lexicon entry for {document.language}/{form}"
                )
            elif not any(
                att.role == construal.role and att.functions == construal.functions
                for att in entry.attested
            ):
                warnings.append(
                    f"line {lineno}: construal {format_construal(construal)!r} "
                    f"unattested for {document.language}/{form}"
                )
        records.append(record)
    return records, warnings


def load_corpus(
    documents_source: str,
    annotations_source: str,
    hierarchy: SupersenseHierarchy,
    lexicon: Lexicon | None = None,
) -> tuple[dict[str, Document], list[AnnotationRecord], list[str]]:
    """Load a documents/annotations TSV pair."""
    documents = load_documents(documents_source)
    records, warnings = load_annotations(annotations_source, documents, hierarchy, lexicon)
    return documents, records, warnings


# -- serialization -------------------------------------------------------


def record_sort_key(record: AnnotationRecord) -> tuple:
    return (record.doc_id, record.sent_id, record.start, record.end, record.annotator)


def serialize_documents(documents: Mapping[str, Document]) -> str:
    """Canonical documents TSV, sorted by (doc_id, sent_id)."""
    rows: list[tuple[str, str, str, str, str]] = []
    for document in documents.values():
        for sentence in document.sentences:
            rows.append(
                (document.doc_id, sentence.sent_id, document.language, sentence.text,
                 " ".join(sentence.tokens))
            )
    rows.sort(key=lambda row: (row[0], row[1]))
    return "".join("\t".join(row) + "\n" for row in rows)


def serialize_annotations(records: Iterable[AnnotationRecord]) -> str:
    """Canonical annotations TSV, sorted by (doc_id, sent_id, span, annotator)."""
    lines = []
    for record in sorted(records, key=record_sort_key):
        fields = [
            record.doc_id,
            record.sent_id,
            str(record.start),
            str(record.end),
            record.form,
            record.annotator,
            format_construal(record.construal),
        ]
        if record.note:
            fields.append(record.note)
        lines.append("\t".join(fields) + "\n")
    return "".join(lines)


# -- statistics ----------------------------------------------------------


def compute_stats(records: Sequence[AnnotationRecord], hierarchy: SupersenseHierarchy) -> CorpusStats:
    """Statistics over gold records: mismatch prevalence, label usage, slot-only labels.

    ``mismatch_rate`` is the fraction of gold records whose construal is not
    congruent (the null function counts as non-congruent). ``role_only`` /
    ``function_only`` labels appear in one slot and never in the other,
    considering every chain position a function slot.
    """
    gold = [r for r in records if r.is_gold]
    stats = CorpusStats(tokens_annotated=len(gold))
    if not gold:
        return stats
    role_counts: Counter[str] = Counter()
    function_counts: Counter[str] = Counter()
    mismatches = 0
    nulls = 0
    for record in gold:
        construal = record.construal
        role_counts[construal.role] += 1
        for fn in construal.functions:
            function_counts[fn] += 1
        if not is_congruent(construal):
            mismatches += 1
        if construal.null_function:
            nulls += 1
    stats.label_histogram = {
        "role": dict(sorted(role_counts.items())),
        "function": dict(sorted(function_counts.items())),
    }
    stats.mismatch_rate = mismatches / len(gold)
    stats.null_function_rate = nulls / len(gold)
    roles = set(role_counts)
    functions = set(function_counts)
    stats.role_only_labels = tuple(sorted(roles - functions))
    stats.function_only_labels = tuple(sorted(functions - roles))
    return stats


# -- revision ------------------------------------------------------------


def apply_revision_to_corpus(
    records: Sequence[AnnotationRecord], revision: RevisionMap
) -> list[AnnotationRecord]:
    """Apply a hierarchy revision to annotation records.

    Renamed labels are replaced in both slots. A rewritten label applies to
    single-label annotations (the label as bare role, or as a congruent
    role/function pair); any residual use of a rewritten or dropped label is
    an error listing the offending records.
    """
    revised: list[AnnotationRecord] = []
    offending: list[str] = []
    for record in records:
        construal = record.construal
        rewrite = revision.rewrites.get(construal.role)
        if rewrite is not None and construal.functions in ((), (construal.role,)):
            construal = replace(
                rewrite, metaphoric=construal.metaphoric or rewrite.metaphoric
            )
        else:
            role = revision.renames.get(construal.role, construal.role)
            functions = tuple(revision.renames.get(fn, fn) for fn in construal.functions)
            retired = [
                label
                for label in (role, *functions)
                if label in revision.rewrites or label in revision.dropped
            ]
            if retired:
                offending.append(
                    f"{record.doc_id}/{record.sent_id} ({record.start}, {record.end}) "
                    f"by {record.annotator}: uses retired label(s) {', '.join(sorted(set(retired)))}"
                )
                continue
            deduped: list[str] = []
            for fn in functions:
                if not deduped or deduped[-1] != fn:
                    deduped.append(fn)
            construal = Construal(role, tuple(deduped), construal.metaphoric)
        revised.append(replace(record, construal=construal))
    if offending:
        raise CorpusError(
            "revision leaves retired labels in use:\n  " + "\n  ".join(offending)
        )
    return revised
