import json
import shutil
from pathlib import Path

import pytest

from notascope.gallery import Gallery, load_gallery

SAMPLE_GALLERY = Path(__file__).resolve().parent.parent / "sample_gallery"


@pytest.fixture(scope="session")
def sample_gallery() -> Gallery:
    return load_gallery(SAMPLE_GALLERY)


@pytest.fixture
def gallery_copy(tmp_path) -> Path:
    """Writable copy of the bundled gallery for mutation tests."""
    dest = tmp_path / "gallery"
    shutil.copytree(SAMPLE_GALLERY, dest)
    return dest


def make_tiny_gallery(root: Path, texts: dict[str, dict[str, str]]) -> Path:
    """Write a minimal gallery tree: {notation: {example: text}}."""
    notations = sorted(texts)
    examples = sorted({e for per in texts.values() for e in per})
    config = {
        "dataset_name": "tiny",
        "examples": examples,
        "notations": [
            {
                "id": nid,
                "language_id": "generic",
                "file_extension": "txt",
                "tokenizer_id": "generic",
                "normalizer": {"kind": "none"},
            }
            for nid in notations
        ],
    }
    root.mkdir(parents=True, exist_ok=True)
    (root / "gallery.json").write_text(json.dumps(config))
    for nid, per in texts.items():
        d = root / nid
        d.mkdir(exist_ok=True)
        for eid, text in per.items():
            (d / f"{eid}.txt").write_text(text)
    return root
