import json

import pytest

from notascope.errors import GalleryLoadError, NormalizerFailed
from notascope.gallery import NormalizerSpec, canonicalize, load_gallery, normalize

from .conftest import make_tiny_gallery


def test_cross_product_completeness(tmp_path):
    root = make_tiny_gallery(
        tmp_path / "g",
        {
            "na": {"one": "a\n", "two": "b\n", "three": "c\n"},
            "nb": {"one": "d\n", "two": "e\n", "three": "f\n"},
        },
    )
    g = load_gallery(root)
    assert len(g.specs) == 6
    assert len(g.notation_ids) * len(g.example_ids) == 6


def test_missing_spec_is_load_error(tmp_path):
    root = make_tiny_gallery(
        tmp_path / "g",
        {"na": {"one": "a", "two": "b"}, "nb": {"one": "c", "two": "d"}},
    )
    (root / "nb" / "two.txt").unlink()
    with pytest.raises(GalleryLoadError) as err:
        load_gallery(root)
    assert any("'nb'" in v and "'two'" in v for v in err.value.violations)


def test_all_violations_collected(tmp_path):
    root = make_tiny_gallery(
        tmp_path / "g",
        {"na": {"one": "a", "two": "b"}, "nb": {"one": "c", "two": "d"}},
    )
    (root / "nb" / "two.txt").unlink()
    (root / "na" / "one.txt").unlink()
    with pytest.raises(GalleryLoadError) as err:
        load_gallery(root)
    assert len(err.value.violations) == 2


def test_crlf_normalized_to_lf(tmp_path):
    root = make_tiny_gallery(tmp_path / "g", {"na": {"one": "x = 1\r\ny = 2\r\n"}})
    g = load_gallery(root)
    spec = g.spec("na", "one")
    assert "\r" not in spec.normalized_text
    assert spec.normalized_text == "x = 1\ny = 2\n"
    assert spec.byte_length == len("x = 1\ny = 2\n".encode())


def test_trailing_newline_canonicalization():
    assert canonicalize("a") == "a\n"
    assert canonicalize("a\n\n\n") == "a\n"
    assert canonicalize("a\r\nb\r") == "a\nb\n"


def test_builtin_json_sorts_keys_recursively():
    out = normalize('{"b":1,"a":{"z":0,"y":[1,2]}}', NormalizerSpec("builtin_json"))
    assert out == '{\n  "a": {\n    "y": [\n      1,\n      2\n    ],\n    "z": 0\n  },\n  "b": 1\n}\n'


def test_builtin_json_example():
    assert normalize('{"b":1,"a":2}', NormalizerSpec("builtin_json")) == '{\n  "a": 2,\n  "b": 1\n}\n'


def test_builtin_json_rejects_invalid_json():
    with pytest.raises(NormalizerFailed):
        normalize("{nope", NormalizerSpec("builtin_json"))


def test_builtin_whitespace_strips_trailing():
    assert normalize("x = 1  \n", NormalizerSpec("builtin_whitespace")) == "x = 1\n"


def test_external_command_normalizer():
    out = normalize("b\na\n", NormalizerSpec("external_command", command="sort"))
    assert out == "a\nb\n"


def test_external_command_failure():
    with pytest.raises(NormalizerFailed):
        normalize("x", NormalizerSpec("external_command", command="false"))


@pytest.mark.parametrize("kind", ["builtin_json", "builtin_whitespace", "none"])
def test_normalize_idempotent_on_sample_gallery(sample_gallery, kind):
    spec = NormalizerSpec(kind)
    for s in sample_gallery.specs.values():
        if kind == "builtin_json" and not s.normalized_text.lstrip().startswith(("{", "[")):
            continue
        once = normalize(s.normalized_text, spec)
        assert normalize(once, spec) == once


def test_reload_is_identical(sample_gallery, gallery_copy):
    g2 = load_gallery(gallery_copy)
    assert g2.content_hash == sample_gallery.content_hash
    for key, spec in sample_gallery.specs.items():
        assert g2.specs[key].normalized_text == spec.normalized_text


def test_content_hash_changes_with_content(gallery_copy):
    before = load_gallery(gallery_copy).content_hash
    p = gallery_copy / "r-gg" / "scatter.R"
    p.write_text(p.read_text() + "# changed\n")
    assert load_gallery(gallery_copy).content_hash != before


def test_content_hash_changes_with_ordering(gallery_copy):
    before = load_gallery(gallery_copy).content_hash
    cfg = json.loads((gallery_copy / "gallery.json").read_text())
    cfg["examples"] = cfg["examples"][::-1]
    (gallery_copy / "gallery.json").write_text(json.dumps(cfg))
    assert load_gallery(gallery_copy).content_hash != before


def test_invalid_config_reports_detail(tmp_path):
    root = tmp_path / "g"
    root.mkdir()
    (root / "gallery.json").write_text(json.dumps({"dataset_name": "x", "examples": [], "notations": []}))
    with pytest.raises(GalleryLoadError) as err:
        load_gallery(root)
    assert any("examples" in v for v in err.value.violations)
    assert any("notations" in v for v in err.value.violations)


def test_duplicate_example_rejected(tmp_path):
    root = make_tiny_gallery(tmp_path / "g", {"na": {"one": "a"}})
    cfg = json.loads((root / "gallery.json").read_text())
    cfg["examples"] = ["one", "one"]
    (root / "gallery.json").write_text(json.dumps(cfg))
    with pytest.raises(GalleryLoadError) as err:
        load_gallery(root)
    assert any("duplicate" in v for v in err.value.violations)


def test_unknown_tokenizer_rejected(tmp_path):
    root = make_tiny_gallery(tmp_path / "g", {"na": {"one": "a"}})
    cfg = json.loads((root / "gallery.json").read_text())
    cfg["notations"][0]["tokenizer_id"] = "nope"
    (root / "gallery.json").write_text(json.dumps(cfg))
    with pytest.raises(GalleryLoadError) as err:
        load_gallery(root)
    assert any("tokenizer" in v for v in err.value.violations)


def test_images_loaded(sample_gallery):
    assert "scatter" in sample_gallery.images
    assert sample_gallery.images["scatter"].suffix == ".svg"
    assert "heatmap" not in sample_gallery.images
