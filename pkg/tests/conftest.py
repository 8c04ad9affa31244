from __future__ import annotations

import pytest

from construal.data_files import (
    annotations_path,
    docs_path,
    hierarchy_path,
    lexicon_path,
    load_default_corpus,
    load_default_hierarchy,
    load_default_lexicon,
    load_default_revision,
    revision_path,
)


@pytest.fixture(scope="session")
def hierarchy():
    return load_default_hierarchy()


@pytest.fixture(scope="session")
def lexicon(hierarchy):
    return load_default_lexicon(hierarchy)


@pytest.fixture(scope="session")
def revision():
    return load_default_revision()


@pytest.fixture(scope="session")
def corpus(hierarchy, lexicon):
    return load_default_corpus(hierarchy, lexicon)


@pytest.fixture(scope="session")
def documents(corpus):
    return corpus[0]


@pytest.fixture(scope="session")
def gold_records(corpus):
    return corpus[1]


@pytest.fixture(scope="session")
def hierarchy_text():
    return hierarchy_path().read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def lexicon_text():
    return lexicon_path().read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def docs_text():
    return docs_path().read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def annotations_text():
    return annotations_path().read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def revision_text():
    return revision_path().read_text(encoding="utf-8")
