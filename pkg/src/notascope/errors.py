"""Exception hierarchy shared across the workbench."""

from __future__ import annotations


class NotascopeError(Exception):
    """Base class for all domain errors."""


class GalleryLoadError(NotascopeError):
    """Raised when a gallery directory fails validation.

    Carries the full list of violations so corpus authors can fix a
    batch of problems in one pass.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("gallery load failed:\n" + "\n".join(f"  - {v}" for v in self.violations))


class InvalidConfig(NotascopeError):
    pass


class MissingSpec(NotascopeError):
    def __init__(self, notation_id: str, example_id: str):
        self.notation_id = notation_id
        self.example_id = example_id
        super().__init__(f"missing spec for notation {notation_id!r}, example {example_id!r}")


class NormalizerFailed(NotascopeError):
    def __init__(self, detail: str, notation_id: str | None = None, example_id: str | None = None):
        self.notation_id = notation_id
        self.example_id = example_id
        self.detail = detail
        where = f" ({notation_id}/{example_id})" if notation_id else ""
        super().__init__(f"normalizer failed{where}: {detail}")


class UnknownTokenizer(NotascopeError):
    pass


class UnknownNotation(NotascopeError):
    pass


class UnknownExample(NotascopeError):
    pass


class UnknownMetric(NotascopeError):
    pass


class LexError(NotascopeError):
    def __init__(self, offset: int, detail: str):
        self.offset = offset
        self.detail = detail
        super().__init__(f"lex error at byte {offset}: {detail}")


class CompressorUnavailable(NotascopeError):
    pass


class DegenerateGallery(NotascopeError):
    pass


class ShapeMismatch(NotascopeError):
    pass
