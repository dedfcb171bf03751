"""On-disk corpus, feature and report formats."""

from .manager import StorageManager
from .models import CorpusManifest, FeatureSchema, SubwindowSchema

__all__ = ["CorpusManifest", "FeatureSchema", "StorageManager", "SubwindowSchema"]
