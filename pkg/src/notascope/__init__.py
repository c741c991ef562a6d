"""notascope: textual usability metrics over multi-notation visualization galleries."""

__version__ = "0.1.0"

from ._kernels import BACKEND as kernel_backend  # noqa: F401
from .gallery import Gallery, load_gallery, normalize  # noqa: F401
from .metrics import (  # noqa: F401
    CompressorConfig,
    DistanceMatrix,
    compression_distance,
    compression_distance_texts,
    distance_matrix,
    median_spec_length,
    remoteness,
    spec_length,
    sprawl,
    token_levenshtein,
)
from .tokenizer import TokenStream, tokenize, vocabulary  # noqa: F401
