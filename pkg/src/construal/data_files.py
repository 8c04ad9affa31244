"""Locations and loaders for the bundled fixtures.

The ``CONSTRUAL_DATA_DIR`` environment variable overrides the packaged data
directory, letting annotation teams point the CLI and service at their own
fixture root.
"""

from __future__ import annotations

import os
from pathlib import Path

from construal.corpus import AnnotationRecord, Document, load_corpus
from construal.hierarchy import RevisionMap, SupersenseHierarchy, load_hierarchy, load_revision
from construal.lexicon import Lexicon, load_lexicon

HIERARCHY_FILE = "hierarchy-v1.txt"
REVISION_FILE = "revision-default.txt"
LEXICON_FILE = "lexicon.txt"
DOCS_FILE = "examples.docs.tsv"
ANNOTATIONS_FILE = "examples.anno.tsv"
TARGETS_FILE = "examples.targets.tsv"

_PACKAGED = Path(__file__).parent / "data"


def data_dir() -> Path:
    override = os.environ.get("CONSTRUAL_DATA_DIR")
    return Path(override) if override else _PACKAGED


def hierarchy_path() -> Path:
    return data_dir() / HIERARCHY_FILE


def revision_path() -> Path:
    return data_dir() / REVISION_FILE


def lexicon_path() -> Path:
    return data_dir() / LEXICON_FILE


def docs_path() -> Path:
    return data_dir() / DOCS_FILE


def annotations_path() -> Path:
    return data_dir() / ANNOTATIONS_FILE


def targets_path() -> Path:
    return data_dir() / TARGETS_FILE


def load_default_hierarchy() -> SupersenseHierarchy:
    return load_hierarchy(hierarchy_path().read_text(encoding="utf-8"))


def load_default_revision() -> RevisionMap:
    return load_revision(revision_path().read_text(encoding="utf-8"))


def load_default_lexicon(hierarchy: SupersenseHierarchy | None = None) -> Lexicon:
    hierarchy = hierarchy or load_default_hierarchy()
    return load_lexicon(lexicon_path().read_text(encoding="utf-8"), hierarchy)


def load_default_corpus(
    hierarchy: SupersenseHierarchy | None = None,
    lexicon: Lexicon | None = None,
) -> tuple[dict[str, Document], list[AnnotationRecord], list[str]]:
    hierarchy = hierarchy or load_default_hierarchy()
    lexicon = lexicon or load_default_lexicon(hierarchy)
    return load_corpus(
        docs_path().read_text(encoding="utf-8"),
        annotations_path().read_text(encoding="utf-8"),
        hierarchy,
        lexicon,
    )


def load_targets(path: Path) -> list[tuple[str, str, int, int, str]]:
    """Parse a targets TSV: doc_id, sent_id, start, end, form."""
    targets = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        doc_id, sent_id, start, end, form = raw.split("\t")
        targets.append((doc_id, sent_id, int(start), int(end), form))
    return targets
