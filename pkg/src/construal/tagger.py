"""Most-frequent-sense baseline: (language, form) -> majority gold construal.

The corpus format carries no syntax, so the baseline is deliberately
context-free; it is the documented floor for any future disambiguator.
Unseen forms fall back to the lexicon's top prototypical function, read
congruently. Ties prefer congruent construals, then the lexicographically
first notation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from construal.core import Construal, format_construal, is_congruent
from construal.corpus import AnnotationRecord, Document
from construal.exceptions import TaggingError
from construal.lexicon import Lexicon


@dataclass
class TagModel:
    counts: dict[tuple[str, str], Counter[Construal]] = field(default_factory=dict)
    lexicon: Lexicon | None = None


def train(
    records: Sequence[AnnotationRecord],
    documents: Mapping[str, Document],
    lexicon: Lexicon | None = None,
) -> TagModel:
    """Tally gold construals per (language, form); empty gold is fine."""
    model = TagModel(lexicon=lexicon)
    for record in records:
        if not record.is_gold:
            continue
        document = documents.get(record.doc_id)
        if document is None:
            raise TaggingError(f"record references unknown document {record.doc_id!r}")
        key = (document.language, record.form)
        model.counts.setdefault(key, Counter())[record.construal] += 1
    return model


def tag(model: TagModel, language: str, form: str) -> Construal:
    """Most frequent construal for the form, or the lexicon fallback."""
    counts = model.counts.get((language, form))
    if counts:
        return min(
            counts,
            key=lambda c: (-counts[c], not is_congruent(c), format_construal(c)),
        )
    if model.lexicon is not None:
        entry = model.lexicon.get(language, form)
        if entry is not None:
            proto = entry.prototypical_functions[0]
            return Construal(proto, (proto,))
    raise TaggingError(f"form {language}/{form} unseen in training and absent from lexicon")


def evaluate(
    model: TagModel,
    records: Sequence[AnnotationRecord],
    documents: Mapping[str, Document],
) -> tuple[float, float, float]:
    """(exact, role, function) accuracies of the model against gold records.

    Exact requires the full construal to match; role and function compare
    the respective slots, a null function matching only a null function.
    """
    gold = [r for r in records if r.is_gold]
    if not gold:
        raise TaggingError("evaluation needs at least one gold record")
    exact = role = function = 0
    for record in gold:
        document = documents.get(record.doc_id)
        if document is None:
            raise TaggingError(f"record references unknown document {record.doc_id!r}")
        predicted = tag(model, document.language, record.form)
        actual = record.construal
        if predicted == actual:
            exact += 1
        if predicted.role == actual.role:
            role += 1
        predicted_fn = predicted.functions[:1]
        actual_fn = actual.functions[:1]
        if predicted_fn == actual_fn:
            function += 1
    n = len(gold)
    return exact / n, role / n, function / n


def tag_targets(
    model: TagModel,
    documents: Mapping[str, Document],
    targets: Sequence[tuple[str, str, int, int, str]],
    annotator: str = "mfs-baseline",
) -> list[AnnotationRecord]:
    """Tag (doc_id, sent_id, start, end, form) targets as baseline records."""
    records = []
    for doc_id, sent_id, start, end, form in targets:
        document = documents.get(doc_id)
        if document is None:
            raise TaggingError(f"target references unknown document {doc_id!r}")
        construal = tag(model, document.language, form)
        records.append(
            AnnotationRecord(doc_id, sent_id, start, end, form, annotator, construal)
        )
    return records
