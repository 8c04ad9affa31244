"""Bipartite role/function supersense annotation toolkit for adpositions."""

from construal.core import (
    Construal,
    format_construal,
    is_congruent,
    make_construal,
    parse_construal,
    simplify_chain,
)
from construal.hierarchy import (
    RevisionMap,
    Supersense,
    SupersenseHierarchy,
    apply_revision,
    load_hierarchy,
    load_revision,
    serialize_hierarchy,
)
from construal.lexicon import AdpositionEntry, Attestation, Lexicon, load_lexicon, serialize_lexicon
from construal.corpus import (
    GOLD_ANNOTATOR,
    AnnotationRecord,
    CorpusStats,
    Document,
    Sentence,
    apply_revision_to_corpus,
    compute_stats,
    load_corpus,
    serialize_annotations,
    serialize_documents,
)
from construal.agreement import (
    AgreementReport,
    adjudicate,
    cohen_kappa,
    disagreement_queue,
    pairwise_agreement,
    soft_role_similarity,
)
from construal.tagger import TagModel, evaluate, tag, tag_targets, train

__version__ = "0.1.0"

__all__ = [
    "AdpositionEntry",
    "AgreementReport",
    "AnnotationRecord",
    "Attestation",
    "Construal",
    "CorpusStats",
    "Document",
    "GOLD_ANNOTATOR",
    "Lexicon",
    "RevisionMap",
    "Sentence",
    "Supersense",
    "SupersenseHierarchy",
    "TagModel",
    "adjudicate",
    "apply_revision",
    "apply_revision_to_corpus",
    "cohen_kappa",
    "compute_stats",
    "disagreement_queue",
    "evaluate",
    "format_construal",
    "is_congruent",
    "load_corpus",
    "load_hierarchy",
    "load_lexicon",
    "load_revision",
    "make_construal",
    "pairwise_agreement",
    "parse_construal",
    "serialize_annotations",
    "serialize_documents",
    "serialize_hierarchy",
    "serialize_lexicon",
    "simplify_chain",
    "soft_role_similarity",
    "tag",
    "tag_targets",
    "train",
    "__version__",
]
