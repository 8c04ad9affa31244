"""Pydantic request/response models for the annotation service.

JSON field names mirror the library's type field names; construals always
transit as the ASCII notation string (``Role~>Function!m``).
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class SupersenseModel(BaseModel):
    name: str
    parents: list[str]
    definition: str
    hints: list[str]


class HierarchyResponse(BaseModel):
    version: str
    roots: list[str]
    nodes: list[SupersenseModel]


class AttestationModel(BaseModel):
    role: str
    functions: list[str]
    example: str
    source: str


class LexiconEntryResponse(BaseModel):
    language: str
    form: str
    kind: str
    prototypical_functions: list[str]
    attested: list[AttestationModel]
    notes: str = ""
    native: str = ""


class TaskResponse(BaseModel):
    task_id: str
    doc_id: str
    sent_id: str
    span: tuple[int, int]
    form: str
    language: str
    stage: str
    tokens: list[str]
    suggested: list[str] = Field(default_factory=list, description="construal notations, best first")


class AnnotationSubmission(BaseModel):
    task_id: str
    annotator: str
    construal: str
    note: str = ""


class AnnotationAck(BaseModel):
    doc_id: str
    sent_id: str
    span: tuple[int, int]
    form: str
    annotator: str
    construal: str
    note: str = ""


class DisagreementEntry(BaseModel):
    annotator: str
    construal: str


class DisagreementResponse(BaseModel):
    doc_id: str
    sent_id: str
    span: tuple[int, int]
    form: str
    tokens: list[str]
    annotations: list[DisagreementEntry]


class AdjudicationRequest(BaseModel):
    doc_id: str
    sent_id: str
    start: int
    end: int
    construal: str
    expert_id: str
    force: bool = False


class StatsResponse(BaseModel):
    tokens_annotated: int
    label_histogram: dict[str, dict[str, int]]
    mismatch_rate: float
    null_function_rate: float
    role_only_labels: list[str]
    function_only_labels: list[str]
