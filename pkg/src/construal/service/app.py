"""FastAPI application over a corpus store."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse

from construal.core import format_construal, parse_construal
from construal.exceptions import (
    AdjudicationError,
    CorpusError,
    NotationError,
    UnknownLabelError,
)
from construal.service.schemas import (
    AdjudicationRequest,
    AnnotationAck,
    AnnotationSubmission,
    AttestationModel,
    DisagreementEntry,
    DisagreementResponse,
    HierarchyResponse,
    LexiconEntryResponse,
    StatsResponse,
    SupersenseModel,
    TaskResponse,
)
from construal.service.store import (
    STAGES,
    CorpusStore,
    StaleTaskError,
    UnknownAnnotatorError,
)


def create_app(store: CorpusStore) -> FastAPI:
    app = FastAPI(title="construal annotation service", version="0.1.0")
    app.state.store = store
    # the annotation UI is served separately during development
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/hierarchy", response_model=HierarchyResponse)
    def get_hierarchy() -> HierarchyResponse:
        h = store.hierarchy
        return HierarchyResponse(
            version=h.version,
            roots=list(h.roots),
            nodes=[
                SupersenseModel(
                    name=node.name,
                    parents=list(node.parents),
                    definition=node.definition,
                    hints=list(node.hints),
                )
                for node in h.nodes.values()
            ],
        )

    @app.get("/lexicon/{language}/{form}", response_model=LexiconEntryResponse)
    def get_lexicon_entry(language: str, form: str) -> LexiconEntryResponse:
        entry = store.lexicon.get(language, form)
        if entry is None:
            raise HTTPException(status_code=404, detail=f"no entry for {language}/{form}")
        return LexiconEntryResponse(
            language=entry.language,
            form=entry.form,
            kind=entry.kind,
            prototypical_functions=list(entry.prototypical_functions),
            attested=[
                AttestationModel(
                    role=att.role,
                    functions=list(att.functions),
                    example=att.example,
                    source=att.source,
                )
                for att in entry.attested
            ],
            notes=entry.notes,
            native=entry.native,
        )

    @app.get("/tasks/next", response_model=TaskResponse | None)
    def next_task(
        annotator: str = Query(...),
        stage: str = Query("joint"),
    ) -> TaskResponse | Response:
        if stage not in STAGES:
            raise HTTPException(status_code=422, detail=f"unknown stage {stage!r}")
        try:
            assignment = store.next_task(annotator, stage)
        except UnknownAnnotatorError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        if assignment is None:
            return Response(status_code=204)
        return TaskResponse(
            task_id=assignment.task_id,
            doc_id=assignment.target.doc_id,
            sent_id=assignment.target.sent_id,
            span=(assignment.target.start, assignment.target.end),
            form=assignment.target.form,
            language=assignment.language,
            stage=assignment.stage,
            tokens=list(assignment.tokens),
            suggested=[format_construal(c) for c in assignment.suggested],
        )

    @app.post("/annotations", response_model=AnnotationAck, status_code=201)
    def submit_annotation(submission: AnnotationSubmission) -> AnnotationAck:
        try:
            construal = parse_construal(submission.construal)
            record = store.submit(
                submission.annotator, submission.task_id, construal, submission.note
            )
        except (NotationError, UnknownLabelError, UnknownAnnotatorError, CorpusError, ValueError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        except StaleTaskError as exc:
            raise HTTPException(status_code=409, detail=str(exc)) from exc
        return AnnotationAck(
            doc_id=record.doc_id,
            sent_id=record.sent_id,
            span=(record.start, record.end),
            form=record.form,
            annotator=record.annotator,
            construal=format_construal(record.construal),
            note=record.note,
        )

    @app.get("/disagreements", response_model=list[DisagreementResponse])
    def get_disagreements() -> list[DisagreementResponse]:
        return [
            DisagreementResponse(
                doc_id=item.target[0],
                sent_id=item.target[1],
                span=(item.target[2], item.target[3]),
                form=item.form,
                tokens=list(store.tokens_of(item.target[0], item.target[1])),
                annotations=[
                    DisagreementEntry(annotator=annotator, construal=format_construal(c))
                    for annotator, c in item.annotations
                ],
            )
            for item in store.disagreements()
        ]

    @app.post("/adjudications", response_model=AnnotationAck, status_code=201)
    def post_adjudication(request: AdjudicationRequest) -> AnnotationAck:
        target_key = (request.doc_id, request.sent_id, request.start, request.end)
        try:
            chosen = parse_construal(request.construal)
            record = store.adjudicate(target_key, chosen, request.expert_id, request.force)
        except (NotationError, UnknownLabelError, CorpusError, ValueError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        except AdjudicationError as exc:
            status = 409 if "already has a gold record" in str(exc) else 404
            raise HTTPException(status_code=status, detail=str(exc)) from exc
        return AnnotationAck(
            doc_id=record.doc_id,
            sent_id=record.sent_id,
            span=(record.start, record.end),
            form=record.form,
            annotator=record.annotator,
            construal=format_construal(record.construal),
            note=record.note,
        )

    @app.get("/export", response_class=PlainTextResponse)
    def export() -> PlainTextResponse:
        return PlainTextResponse(store.export(), media_type="text/tab-separated-values")

    @app.get("/stats", response_model=StatsResponse)
    def stats() -> StatsResponse:
        s = store.stats()
        return StatsResponse(
            tokens_annotated=s.tokens_annotated,
            label_histogram=s.label_histogram,
            mismatch_rate=s.mismatch_rate,
            null_function_rate=s.null_function_rate,
            role_only_labels=list(s.role_only_labels),
            function_only_labels=list(s.function_only_labels),
        )

    return app
