"""Exception types shared across the toolkit."""

from __future__ import annotations


class ConstrualError(Exception):
    """Base class for all toolkit errors."""


class NotationError(ConstrualError):
    """Malformed construal notation. Carries the character offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class UnknownLabelError(ConstrualError):
    """A label does not exist in the governing hierarchy."""

    def __init__(self, label: str, context: str = ""):
        detail = f"unknown label {label!r}"
        if context:
            detail += f" ({context})"
        super().__init__(detail)
        self.label = label


class HierarchyFileError(ConstrualError):
    """Structural problem in a hierarchy file. Carries a line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class RevisionError(ConstrualError):
    """A revision map is invalid or cannot be applied."""


class LexiconError(ConstrualError):
    """Malformed or inconsistent lexicon data."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CorpusError(ConstrualError):
    """Malformed or inconsistent corpus data."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class AgreementError(ConstrualError):
    """Agreement computation is impossible for the given inputs."""


class AdjudicationError(ConstrualError):
    """An adjudication request conflicts with the stored records."""


class TaggingError(ConstrualError):
    """The baseline tagger cannot produce a construal for a query."""
