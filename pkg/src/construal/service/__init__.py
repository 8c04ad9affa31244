"""HTTP annotation service: a FastAPI app over a single-writer corpus store."""

from construal.service.app import create_app
from construal.service.store import CorpusStore, Target, TaskAssignment

__all__ = ["CorpusStore", "Target", "TaskAssignment", "create_app"]
