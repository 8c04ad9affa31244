"""Inter-annotator agreement metrics and the double-annotation workflow.

Pairwise agreement is reported at three granularities: exact construal
(role + full chain + metaphor flag), role slot, and function slot (first
function of the chain; a null function matches only a null function).
Chance correction uses Cohen's kappa over each granularity's categories.
The role slot additionally gets a hierarchy-softened score: the mean over
items of ``2 * depth(lcs) / (depth(a) + depth(b))``, where ``lcs`` is the
deepest lowest common subsumer, 1.0 when both labels are equal roots and
0.0 when the labels share no root.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from construal.core import Construal, format_construal, validate_construal
from construal.corpus import GOLD_ANNOTATOR, AnnotationRecord, TargetKey
from construal.exceptions import AdjudicationError, AgreementError
from construal.hierarchy import SupersenseHierarchy

NULL_FUNCTION = "(null)"


@dataclass
class AgreementReport:
    n_items: int
    exact_construal: float
    role_agreement: float
    function_agreement: float
    kappa_role: float
    kappa_function: float
    kappa_construal: float
    soft_role: float
    disagreements: list[tuple[TargetKey, str, str]] = field(default_factory=list)
    kappa_role_degenerate: bool = False
    kappa_function_degenerate: bool = False
    kappa_construal_degenerate: bool = False


def cohen_kappa(pairs: Sequence[tuple[str, str]]) -> tuple[float, bool]:
    """Cohen's kappa for two annotators' category assignments.

    Returns ``(kappa, degenerate)``; ``degenerate`` is set when expected
    agreement is 1 (a single shared category), in which case kappa is
    reported as 1.0 for perfect observed agreement and 0.0 otherwise.
    """
    if not pairs:
        raise AgreementError("kappa needs at least one item")
    n = len(pairs)
    observed = sum(1 for a, b in pairs if a == b) / n
    marginal_a = Counter(a for a, _ in pairs)
    marginal_b = Counter(b for _, b in pairs)
    expected = sum(
        (marginal_a[cat] / n) * (marginal_b[cat] / n)
        for cat in set(marginal_a) | set(marginal_b)
    )
    if expected == 1.0:
        return (1.0 if observed == 1.0 else 0.0), True
    return (observed - expected) / (1.0 - expected), False


def soft_role_similarity(hierarchy: SupersenseHierarchy, a: str, b: str) -> float:
    """Depth-weighted similarity of two labels in [0, 1]."""
    subsumers = hierarchy.lowest_common_subsumers(a, b)
    if not subsumers:
        return 0.0
    depth_a = hierarchy.depth(a)
    depth_b = hierarchy.depth(b)
    if depth_a == 0 and depth_b == 0:
        return 1.0 if a == b else 0.0
    lcs_depth = max(hierarchy.depth(s) for s in subsumers)
    return (2.0 * lcs_depth) / (depth_a + depth_b)


def _function_slot(construal: Construal) -> str:
    return construal.functions[0] if construal.functions else NULL_FUNCTION


def paired_items(
    records: Sequence[AnnotationRecord], annotator_a: str, annotator_b: str
) -> list[tuple[TargetKey, Construal, Construal]]:
    """Targets annotated by both annotators, in canonical target order."""
    by_target: dict[TargetKey, dict[str, Construal]] = {}
    for record in records:
        if record.annotator in (annotator_a, annotator_b):
            by_target.setdefault(record.target, {})[record.annotator] = record.construal
    items = [
        (target, sides[annotator_a], sides[annotator_b])
        for target, sides in by_target.items()
        if len(sides) == 2
    ]
    items.sort(key=lambda item: item[0])
    return items


def pairwise_agreement(
    records: Sequence[AnnotationRecord],
    annotator_a: str,
    annotator_b: str,
    hierarchy: SupersenseHierarchy,
) -> AgreementReport:
    """Agreement report over all targets both annotators labeled."""
    items = paired_items(records, annotator_a, annotator_b)
    if not items:
        raise AgreementError(
            f"no targets annotated by both {annotator_a!r} and {annotator_b!r}"
        )
    n = len(items)
    exact_pairs = [(format_construal(a), format_construal(b)) for _, a, b in items]
    role_pairs = [(a.role, b.role) for _, a, b in items]
    function_pairs = [(_function_slot(a), _function_slot(b)) for _, a, b in items]

    kappa_role, deg_role = cohen_kappa(role_pairs)
    kappa_function, deg_function = cohen_kappa(function_pairs)
    kappa_construal, deg_construal = cohen_kappa(exact_pairs)
    soft = sum(soft_role_similarity(hierarchy, a, b) for a, b in role_pairs) / n
    disagreements = [
        (target, format_construal(a), format_construal(b))
        for target, a, b in items
        if (a.role, a.functions, a.metaphoric) != (b.role, b.functions, b.metaphoric)
    ]
    return AgreementReport(
        n_items=n,
        exact_construal=sum(1 for a, b in exact_pairs if a == b) / n,
        role_agreement=sum(1 for a, b in role_pairs if a == b) / n,
        function_agreement=sum(1 for a, b in function_pairs if a == b) / n,
        kappa_role=kappa_role,
        kappa_function=kappa_function,
        kappa_construal=kappa_construal,
        soft_role=soft,
        disagreements=disagreements,
        kappa_role_degenerate=deg_role,
        kappa_function_degenerate=deg_function,
        kappa_construal_degenerate=deg_construal,
    )


# -- adjudication --------------------------------------------------------


@dataclass(frozen=True)
class DisagreementItem:
    target: TargetKey
    form: str
    annotations: tuple[tuple[str, Construal], ...]  # (annotator, construal), sorted


def disagreement_queue(records: Sequence[AnnotationRecord]) -> list[DisagreementItem]:
    """Targets needing adjudication, in canonical (doc, sentence, span) order.

    A target qualifies when at least two distinct non-gold construals exist
    for it and no gold record does.
    """
    by_target: dict[TargetKey, list[AnnotationRecord]] = {}
    has_gold: set[TargetKey] = set()
    for record in records:
        if record.is_gold:
            has_gold.add(record.target)
        else:
            by_target.setdefault(record.target, []).append(record)
    queue: list[DisagreementItem] = []
    for target in sorted(by_target):
        if target in has_gold:
            continue
        annotations = sorted(
            ((r.annotator, r.construal) for r in by_target[target]),
            key=lambda pair: pair[0],
        )
        distinct = {
            (c.role, c.functions, c.metaphoric) for _, c in annotations
        }
        if len(distinct) >= 2:
            queue.append(
                DisagreementItem(target, by_target[target][0].form, tuple(annotations))
            )
    return queue


def adjudicate(
    records: Sequence[AnnotationRecord],
    target: TargetKey,
    chosen: Construal,
    expert_id: str,
    force: bool = False,
    hierarchy: SupersenseHierarchy | None = None,
) -> list[AnnotationRecord]:
    """Append a gold record resolving ``target``; annotator records are kept.

    Refuses to overwrite an existing gold record unless ``force`` is set, in
    which case the old gold record is replaced (never the annotator records).
    When a hierarchy is supplied the chosen construal is validated against it.
    """
    if hierarchy is not None:
        validate_construal(hierarchy, chosen)
    target_records = [r for r in records if r.target == target]
    if not target_records:
        raise AdjudicationError(f"no records for target {target}")
    existing_gold = [r for r in target_records if r.is_gold]
    if existing_gold and not force:
        raise AdjudicationError(f"target {target} already has a gold record")
    result = [r for r in records if not (r.target == target and r.is_gold)]
    gold = AnnotationRecord(
        doc_id=target[0],
        sent_id=target[1],
        start=target[2],
        end=target[3],
        form=target_records[0].form,
        annotator=GOLD_ANNOTATOR,
        construal=chosen,
        note=f"adjudicated by {expert_id}",
    )
    result.append(gold)
    return result
