"""Kernel selection: compiled extension when available, numpy fallback otherwise."""

from __future__ import annotations

try:
    from ._fast import BACKEND, levenshtein_ids
except ImportError:  # pragma: no cover - exercised only without the built ext
    from ._slow import BACKEND, levenshtein_ids

__all__ = ["levenshtein_ids", "BACKEND"]
