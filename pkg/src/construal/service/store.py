"""Single-writer annotation store with a durable append log.

The log is line-oriented and uses the same TSV record format as corpus
annotation files, making it trivially auditable: replaying it from the top
reproduces the store's state, and a canonical export is just the sorted
records. All mutations are serialized behind one lock and acknowledged only
after the log line is flushed and fsynced.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from construal.agreement import DisagreementItem, disagreement_queue
from construal.core import Construal, validate_construal
from construal.corpus import (
    GOLD_ANNOTATOR,
    AnnotationRecord,
    CorpusStats,
    Document,
    TargetKey,
    compute_stats,
    load_annotations,
    serialize_annotations,
)
from construal.exceptions import AdjudicationError, ConstrualError, CorpusError
from construal.hierarchy import SupersenseHierarchy
from construal.lexicon import Lexicon

STAGES = ("role-only", "function-only", "joint")
ANNOTATORS_PER_TARGET = 2


class StaleTaskError(ConstrualError):
    """The task id is unknown, already closed, or owned by someone else."""


class UnknownAnnotatorError(ConstrualError):
    """The annotator id is empty, reserved, or malformed."""


@dataclass(frozen=True)
class Target:
    doc_id: str
    sent_id: str
    start: int
    end: int
    form: str

    @property
    def key(self) -> TargetKey:
        return (self.doc_id, self.sent_id, self.start, self.end)


@dataclass(frozen=True)
class TaskAssignment:
    task_id: str
    target: Target
    annotator: str
    stage: str
    language: str
    tokens: tuple[str, ...]
    suggested: tuple[Construal, ...]


def _check_annotator(annotator: str) -> str:
    if (
        not annotator
        or annotator != annotator.strip()
        or any(ch.isspace() for ch in annotator)
        or annotator == GOLD_ANNOTATOR
    ):
        raise UnknownAnnotatorError(f"unknown annotator id {annotator!r}")
    return annotator


class CorpusStore:
    """Documents, targets, and annotation records behind a single writer."""

    def __init__(
        self,
        hierarchy: SupersenseHierarchy,
        lexicon: Lexicon,
        documents: Mapping[str, Document],
        targets: Sequence[tuple[str, str, int, int, str]] = (),
        log_path: str | Path | None = None,
        seed_records: Iterable[AnnotationRecord] = (),
    ):
        self.hierarchy = hierarchy
        self.lexicon = lexicon
        self.documents = dict(documents)
        self._lock = threading.Lock()
        self._records: dict[tuple[TargetKey, str], AnnotationRecord] = {}
        self._targets: dict[TargetKey, Target] = {}
        self._assignments: dict[str, TaskAssignment] = {}
        for doc_id, sent_id, start, end, form in targets:
            target = Target(doc_id, sent_id, start, end, form)
            self._validate_target(target)
            self._targets.setdefault(target.key, target)

        self._log_path = Path(log_path) if log_path is not None else None
        self._log_handle = None
        replayed: list[AnnotationRecord] = []
        if self._log_path is not None and self._log_path.exists():
            text = self._log_path.read_text(encoding="utf-8")
            if text.strip():
                # the log is an operation log: a forced re-adjudication
                # appends a second gold line for the target, and later
                # lines supersede earlier ones on replay
                replayed, _ = load_annotations(
                    text, self.documents, hierarchy, allow_duplicates=True
                )
        if self._log_path is not None:
            self._log_handle = open(self._log_path, "a", encoding="utf-8")
        if replayed:
            for record in replayed:
                self._apply(record)
        else:
            for record in seed_records:
                self._commit(record)

    # -- plumbing ---------------------------------------------------------

    def _validate_target(self, target: Target) -> None:
        document = self.documents.get(target.doc_id)
        if document is None:
            raise CorpusError(f"target references unknown document {target.doc_id!r}")
        sentence = document.sentence(target.sent_id)
        if not (0 <= target.start < target.end <= len(sentence.tokens)):
            raise CorpusError(
                f"target span ({target.start}, {target.end}) outside "
                f"{target.doc_id}/{target.sent_id}"
            )

    def _apply(self, record: AnnotationRecord) -> None:
        """Mutate in-memory state; gold records follow last-wins semantics."""
        target = Target(record.doc_id, record.sent_id, record.start, record.end, record.form)
        self._validate_target(target)
        self._targets.setdefault(target.key, target)
        self._records[(record.target, record.annotator)] = record

    def _commit(self, record: AnnotationRecord) -> None:
        """Apply and make durable before acknowledging."""
        self._apply(record)
        if self._log_handle is not None:
            self._log_handle.write(serialize_annotations([record]))
            self._log_handle.flush()
            os.fsync(self._log_handle.fileno())

    def close(self) -> None:
        if self._log_handle is not None:
            self._log_handle.close()
            self._log_handle = None

    # -- queries ------------------------------------------------------------

    @property
    def records(self) -> list[AnnotationRecord]:
        with self._lock:
            return list(self._records.values())

    @property
    def targets(self) -> list[Target]:
        with self._lock:
            return [self._targets[key] for key in sorted(self._targets)]

    def export(self) -> str:
        """Canonical annotations TSV; byte-stable for identical stores."""
        return serialize_annotations(self.records)

    def stats(self) -> CorpusStats:
        return compute_stats(self.records, self.hierarchy)

    def disagreements(self) -> list[DisagreementItem]:
        return disagreement_queue(self.records)

    def language_of(self, doc_id: str) -> str:
        return self.documents[doc_id].language

    def tokens_of(self, doc_id: str, sent_id: str) -> tuple[str, ...]:
        return self.documents[doc_id].sentence(sent_id).tokens

    # -- task assignment ------------------------------------------------------

    def _annotators_of(self, key: TargetKey) -> set[str]:
        return {
            annotator
            for (target_key, annotator) in self._records
            if target_key == key and annotator != GOLD_ANNOTATOR
        }

    def next_task(self, annotator: str, stage: str = "joint") -> TaskAssignment | None:
        """Lowest unannotated target still short of two annotators, or None.

        Calling again before submitting returns the same open assignment.
        """
        _check_annotator(annotator)
        if stage not in STAGES:
            raise ValueError(f"unknown stage {stage!r}; expected one of {STAGES}")
        with self._lock:
            for assignment in self._assignments.values():
                if assignment.annotator == annotator and assignment.stage == stage:
                    return assignment
            for key in sorted(self._targets):
                target = self._targets[key]
                if (key, annotator) in self._records:
                    continue
                claimed = self._annotators_of(key)
                claimed |= {
                    a.annotator for a in self._assignments.values() if a.target.key == key
                }
                claimed.discard(annotator)
                if len(claimed) >= ANNOTATORS_PER_TARGET:
                    continue
                task_id = f"{key[0]}:{key[1]}:{key[2]}-{key[3]}:{stage}:{annotator}"
                assignment = TaskAssignment(
                    task_id=task_id,
                    target=target,
                    annotator=annotator,
                    stage=stage,
                    language=self.language_of(target.doc_id),
                    tokens=self.tokens_of(target.doc_id, target.sent_id),
                    suggested=tuple(
                        self.lexicon.suggest_construals(
                            self.language_of(target.doc_id), target.form
                        )
                    ),
                )
                self._assignments[task_id] = assignment
                return assignment
        return None

    def submit(self, annotator: str, task_id: str, construal: Construal, note: str = "") -> AnnotationRecord:
        """Persist one annotation for an open task; closes the task."""
        _check_annotator(annotator)
        with self._lock:
            assignment = self._assignments.get(task_id)
            if assignment is None or assignment.annotator != annotator:
                raise StaleTaskError(f"no open task {task_id!r} for {annotator!r}")
            validate_construal(self.hierarchy, construal)
            key = assignment.target.key
            if (key, annotator) in self._records:
                raise StaleTaskError(f"{annotator!r} already annotated {key}")
            record = AnnotationRecord(
                doc_id=assignment.target.doc_id,
                sent_id=assignment.target.sent_id,
                start=assignment.target.start,
                end=assignment.target.end,
                form=assignment.target.form,
                annotator=annotator,
                construal=construal,
                note=note,
            )
            self._commit(record)
            del self._assignments[task_id]
            return record

    def adjudicate(
        self, target_key: TargetKey, chosen: Construal, expert_id: str, force: bool = False
    ) -> AnnotationRecord:
        """Record the gold construal for a target; annotator records are kept."""
        with self._lock:
            validate_construal(self.hierarchy, chosen)
            if target_key not in self._targets:
                raise AdjudicationError(f"no such target {target_key}")
            if (target_key, GOLD_ANNOTATOR) in self._records and not force:
                raise AdjudicationError(f"target {target_key} already has a gold record")
            target = self._targets[target_key]
            record = AnnotationRecord(
                doc_id=target.doc_id,
                sent_id=target.sent_id,
                start=target.start,
                end=target.end,
                form=target.form,
                annotator=GOLD_ANNOTATOR,
                construal=chosen,
                note=f"adjudicated by {expert_id}",
            )
            self._commit(record)
            return record
