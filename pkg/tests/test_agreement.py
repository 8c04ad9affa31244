from __future__ import annotations

import random

import pytest

from construal.agreement import (
    adjudicate,
    cohen_kappa,
    disagreement_queue,
    pairwise_agreement,
    soft_role_similarity,
)
from construal.core import Construal, parse_construal
from construal.corpus import AnnotationRecord
from construal.exceptions import AdjudicationError, AgreementError, UnknownLabelError

from oracles import edge_map, kappa_table_oracle, soft_role_brute


def _rec(sent: str, annotator: str, notation: str) -> AnnotationRecord:
    return AnnotationRecord("d1", sent, 0, 1, "at", annotator, parse_construal(notation))


# -- kappa -----------------------------------------------------------------


def test_identical_annotations_score_one(hierarchy) -> None:
    records = []
    for i in range(10):
        notation = "Stimulus~>Topic" if i % 2 else "Time~>Time"
        records.append(_rec(f"s{i:02d}", "a", notation))
        records.append(_rec(f"s{i:02d}", "b", notation))
    report = pairwise_agreement(records, "a", "b", hierarchy)
    assert report.n_items == 10
    assert report.exact_construal == 1.0
    assert report.role_agreement == 1.0
    assert report.function_agreement == 1.0
    assert report.kappa_role == 1.0
    assert report.kappa_function == 1.0
    assert report.kappa_construal == 1.0
    assert report.disagreements == []


def test_balanced_total_disagreement_scores_minus_one(hierarchy) -> None:
    # a labels the first half Stimulus and the second half Topic; b does the
    # reverse: a balanced 2x2 table with an empty diagonal
    records = []
    for i in range(10):
        a_role = "Stimulus" if i < 5 else "Topic"
        b_role = "Topic" if i < 5 else "Stimulus"
        records.append(_rec(f"s{i:02d}", "a", a_role))
        records.append(_rec(f"s{i:02d}", "b", b_role))
    report = pairwise_agreement(records, "a", "b", hierarchy)
    assert report.kappa_role == pytest.approx(-1.0)
    assert report.role_agreement == 0.0


def test_kappa_matches_contingency_oracle_on_random_corpora() -> None:
    rng = random.Random(20260808)
    labels = [f"L{i}" for i in range(10)]
    for _ in range(1000):
        n_labels = rng.randint(2, 10)
        n_items = rng.randint(1, 50)
        pool = labels[:n_labels]
        pairs = [(rng.choice(pool), rng.choice(pool)) for _ in range(n_items)]
        kappa, degenerate = cohen_kappa(pairs)
        assert kappa == pytest.approx(kappa_table_oracle(pairs), abs=1e-12)


def test_kappa_invariant_under_relabeling() -> None:
    rng = random.Random(5)
    pool = ["Stimulus", "Topic", "Location", "Time"]
    pairs = [(rng.choice(pool), rng.choice(pool)) for _ in range(40)]
    mapping = {"Stimulus": "X1", "Topic": "X2", "Location": "X3", "Time": "X4"}
    renamed = [(mapping[a], mapping[b]) for a, b in pairs]
    assert cohen_kappa(pairs)[0] == pytest.approx(cohen_kappa(renamed)[0], abs=1e-12)


def test_kappa_degenerate_single_category() -> None:
    # both annotators using one shared category makes expected agreement 1;
    # the flag marks the conventional fallback value
    kappa, degenerate = cohen_kappa([("Time", "Time")] * 4)
    assert degenerate
    assert kappa == 1.0


def test_kappa_requires_items() -> None:
    with pytest.raises(AgreementError):
        cohen_kappa([])


def test_no_common_targets_is_an_error(hierarchy) -> None:
    records = [_rec("s1", "a", "Time"), _rec("s2", "b", "Time")]
    with pytest.raises(AgreementError):
        pairwise_agreement(records, "a", "b", hierarchy)


def test_exact_agreement_implies_slot_agreement(hierarchy) -> None:
    rng = random.Random(99)
    notations = ["Time~>Time", "Stimulus~>Topic", "Location", "Recipient~>Beneficiary~>Goal"]
    records = []
    for i in range(30):
        records.append(_rec(f"s{i:02d}", "a", rng.choice(notations)))
        records.append(_rec(f"s{i:02d}", "b", rng.choice(notations)))
    report = pairwise_agreement(records, "a", "b", hierarchy)
    assert report.exact_construal <= report.role_agreement + 1e-12
    assert report.exact_construal <= report.function_agreement + 1e-12


def test_null_function_matches_only_null(hierarchy) -> None:
    records = [
        _rec("s1", "a", "Stimulus"),
        _rec("s1", "b", "Stimulus~>Topic"),
        _rec("s2", "a", "Stimulus"),
        _rec("s2", "b", "Stimulus"),
    ]
    report = pairwise_agreement(records, "a", "b", hierarchy)
    assert report.role_agreement == 1.0
    assert report.function_agreement == 0.5


def test_metaphor_flag_breaks_exact_match(hierarchy) -> None:
    records = [
        _rec("s1", "a", "EndState~>Location!m"),
        _rec("s1", "b", "EndState~>Location"),
    ]
    report = pairwise_agreement(records, "a", "b", hierarchy)
    assert report.exact_construal == 0.0
    assert report.role_agreement == 1.0
    assert report.function_agreement == 1.0
    assert len(report.disagreements) == 1


def test_chains_compare_by_first_function_in_slot_metrics(hierarchy) -> None:
    records = [
        _rec("s1", "a", "Stimulus~>Beneficiary~>Goal"),
        _rec("s1", "b", "Stimulus~>Beneficiary"),
    ]
    report = pairwise_agreement(records, "a", "b", hierarchy)
    assert report.function_agreement == 1.0
    assert report.exact_construal == 0.0


# -- soft agreement ----------------------------------------------------------


def test_soft_role_self_similarity_is_one_for_all_labels(hierarchy) -> None:
    for label in hierarchy:
        assert soft_role_similarity(hierarchy, label, label) == 1.0, label


def test_soft_role_symmetric(hierarchy) -> None:
    rng = random.Random(23)
    labels = sorted(hierarchy)
    for _ in range(200):
        a, b = rng.choice(labels), rng.choice(labels)
        assert soft_role_similarity(hierarchy, a, b) == pytest.approx(
            soft_role_similarity(hierarchy, b, a)
        )


def test_soft_role_location_destination_matches_oracle(hierarchy) -> None:
    edges = edge_map(hierarchy)
    expected = soft_role_brute(edges, "Location", "Destination")
    assert soft_role_similarity(hierarchy, "Location", "Destination") == pytest.approx(expected)
    # sanity: the pair is closely related but not identical
    assert 0.0 < expected < 1.0


def test_soft_role_zero_across_roots(hierarchy) -> None:
    assert soft_role_similarity(hierarchy, "Agent", "Manner") == 0.0


def test_soft_role_matches_oracle_on_random_pairs(hierarchy) -> None:
    rng = random.Random(29)
    labels = sorted(hierarchy)
    edges = edge_map(hierarchy)
    for _ in range(150):
        a, b = rng.choice(labels), rng.choice(labels)
        assert soft_role_similarity(hierarchy, a, b) == pytest.approx(
            soft_role_brute(edges, a, b)
        ), (a, b)


def test_report_soft_role_averages_item_similarities(hierarchy) -> None:
    records = [
        _rec("s1", "a", "Location"),
        _rec("s1", "b", "Destination"),
        _rec("s2", "a", "Time"),
        _rec("s2", "b", "Time"),
    ]
    report = pairwise_agreement(records, "a", "b", hierarchy)
    pair = soft_role_similarity(hierarchy, "Location", "Destination")
    assert report.soft_role == pytest.approx((pair + 1.0) / 2)


# -- adjudication ------------------------------------------------------------


def test_agreeing_corpus_has_empty_queue(hierarchy) -> None:
    records = [
        _rec("s1", "a", "Time~>Time"),
        _rec("s1", "b", "Time~>Time"),
    ]
    assert disagreement_queue(records) == []


def test_stimulus_topic_split_queues_one_item() -> None:
    records = [
        _rec("s1", "a", "Stimulus~>Topic"),
        _rec("s1", "b", "Topic~>Topic"),
    ]
    queue = disagreement_queue(records)
    assert len(queue) == 1
    item = queue[0]
    assert item.target == ("d1", "s1", 0, 1)
    assert [annotator for annotator, _ in item.annotations] == ["a", "b"]


def test_target_with_gold_is_excluded() -> None:
    records = [
        _rec("s1", "a", "Stimulus~>Topic"),
        _rec("s1", "b", "Topic~>Topic"),
        _rec("s1", "gold", "Stimulus~>Topic"),
    ]
    assert disagreement_queue(records) == []


def test_queue_is_in_canonical_order() -> None:
    records = []
    for sent in ("s3", "s1", "s2"):
        records.append(_rec(sent, "a", "Stimulus~>Topic"))
        records.append(_rec(sent, "b", "Topic~>Topic"))
    queue = disagreement_queue(records)
    assert [item.target[1] for item in queue] == ["s1", "s2", "s3"]


def test_adjudicate_appends_gold(hierarchy) -> None:
    records = [
        _rec("s1", "a", "Stimulus~>Topic"),
        _rec("s1", "b", "Topic~>Topic"),
    ]
    updated = adjudicate(
        records, ("d1", "s1", 0, 1), Construal("Stimulus", ("Topic",)), "expert-1", hierarchy=hierarchy
    )
    assert len(updated) == 3
    gold = [r for r in updated if r.is_gold]
    assert len(gold) == 1
    assert gold[0].construal == Construal("Stimulus", ("Topic",))
    assert "expert-1" in gold[0].note
    # annotator records survive unmodified
    assert records[0] in updated and records[1] in updated


def test_adjudicate_refuses_second_gold_without_force(hierarchy) -> None:
    records = adjudicate(
        [_rec("s1", "a", "Stimulus~>Topic"), _rec("s1", "b", "Topic~>Topic")],
        ("d1", "s1", 0, 1),
        Construal("Stimulus", ("Topic",)),
        "expert-1",
        hierarchy=hierarchy,
    )
    with pytest.raises(AdjudicationError):
        adjudicate(records, ("d1", "s1", 0, 1), Construal("Topic", ("Topic",)), "expert-2",
                   hierarchy=hierarchy)


def test_adjudicate_force_replaces_gold_only(hierarchy) -> None:
    records = adjudicate(
        [_rec("s1", "a", "Stimulus~>Topic"), _rec("s1", "b", "Topic~>Topic")],
        ("d1", "s1", 0, 1),
        Construal("Stimulus", ("Topic",)),
        "expert-1",
        hierarchy=hierarchy,
    )
    updated = adjudicate(
        records, ("d1", "s1", 0, 1), Construal("Topic", ("Topic",)), "expert-2",
        force=True, hierarchy=hierarchy,
    )
    gold = [r for r in updated if r.is_gold]
    assert len(gold) == 1
    assert gold[0].construal == Construal("Topic", ("Topic",))
    assert len([r for r in updated if not r.is_gold]) == 2


def test_adjudicate_unknown_label_errors(hierarchy) -> None:
    records = [_rec("s1", "a", "Stimulus~>Topic"), _rec("s1", "b", "Topic~>Topic")]
    with pytest.raises(UnknownLabelError):
        adjudicate(records, ("d1", "s1", 0, 1), Construal("Stimulous", ()), "expert-1",
                   hierarchy=hierarchy)


def test_adjudicate_unknown_target_errors(hierarchy) -> None:
    with pytest.raises(AdjudicationError):
        adjudicate([], ("d1", "s9", 0, 1), Construal("Topic", ("Topic",)), "expert-1",
                   hierarchy=hierarchy)
