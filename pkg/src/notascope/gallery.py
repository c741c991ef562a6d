"""Gallery loading, validation, and text normalization.

A gallery is a directory tree holding one spec file per (notation, example)
pair plus a ``gallery.json`` manifest. Loading validates the cross-product
completeness, normalizes every spec, and freezes the result behind a content
hash so downstream computation is a pure function of the loaded state.
"""

from __future__ import annotations

import hashlib
import json
import os
import subprocess
from dataclasses import dataclass, field
from pathlib import Path

from .errors import GalleryLoadError, NormalizerFailed

EXTERNAL_COMMAND_TIMEOUT = 30.0

NORMALIZER_KINDS = ("builtin_json", "builtin_whitespace", "external_command", "none")

IMAGE_EXTENSIONS = (".png", ".svg")


@dataclass(frozen=True)
class NormalizerSpec:
    kind: str
    command: str | None = None


@dataclass(frozen=True)
class NotationConfig:
    id: str
    language_id: str
    file_extension: str  # stored without leading dot
    tokenizer_id: str
    normalizer: NormalizerSpec


@dataclass(frozen=True)
class GalleryConfig:
    dataset_name: str
    notations: tuple[NotationConfig, ...]
    examples: tuple[str, ...]  # canonical ordering for every matrix index


@dataclass(frozen=True)
class Spec:
    notation_id: str
    example_id: str
    raw_text: str
    normalized_text: str

    @property
    def byte_length(self) -> int:
        return len(self.normalized_text.encode("utf-8"))


@dataclass(frozen=True)
class Gallery:
    config: GalleryConfig
    specs: dict[tuple[str, str], Spec]
    images: dict[str, Path] = field(default_factory=dict)
    content_hash: str = ""
    root_path: Path | None = None

    @property
    def notation_ids(self) -> list[str]:
        return [n.id for n in self.config.notations]

    @property
    def example_ids(self) -> list[str]:
        return list(self.config.examples)

    def notation(self, notation_id: str) -> NotationConfig:
        for n in self.config.notations:
            if n.id == notation_id:
                return n
        from .errors import UnknownNotation

        raise UnknownNotation(notation_id)

    def spec(self, notation_id: str, example_id: str) -> Spec:
        return self.specs[(notation_id, example_id)]

    def notation_specs(self, notation_id: str) -> list[Spec]:
        self.notation(notation_id)
        return [self.specs[(notation_id, e)] for e in self.config.examples]


def canonicalize(text: str) -> str:
    """Force LF line endings and exactly one trailing newline."""
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    return text.rstrip("\n") + "\n"


def normalize(text: str, spec: NormalizerSpec) -> str:
    """Normalize spec text per the configured normalizer, then canonicalize.

    Deterministic by contract: the same input always yields the same output.
    """
    if spec.kind == "builtin_json":
        try:
            parsed = json.loads(text)
        except json.JSONDecodeError as exc:
            raise NormalizerFailed(f"invalid JSON: {exc}") from exc
        text = json.dumps(parsed, indent=2, sort_keys=True, ensure_ascii=False)
    elif spec.kind == "builtin_whitespace":
        text = "\n".join(line.rstrip() for line in text.split("\n"))
    elif spec.kind == "external_command":
        if not spec.command:
            raise NormalizerFailed("external_command normalizer has no command")
        env = {"PATH": os.environ.get("PATH", "/usr/bin:/bin")}
        try:
            proc = subprocess.run(
                spec.command.split(),
                input=text.encode("utf-8"),
                capture_output=True,
                timeout=EXTERNAL_COMMAND_TIMEOUT,
                env=env,
            )
        except (OSError, subprocess.TimeoutExpired) as exc:
            raise NormalizerFailed(str(exc)) from exc
        if proc.returncode != 0:
            raise NormalizerFailed(
                f"command {spec.command!r} exited {proc.returncode}: "
                f"{proc.stderr.decode('utf-8', 'replace').strip()}"
            )
        text = proc.stdout.decode("utf-8")
    elif spec.kind != "none":
        raise NormalizerFailed(f"unknown normalizer kind {spec.kind!r}")
    return canonicalize(text)


def _parse_config(raw: dict, violations: list[str]) -> GalleryConfig | None:
    if not isinstance(raw, dict):
        violations.append("gallery.json root must be an object")
        return None
    dataset_name = raw.get("dataset_name")
    if not isinstance(dataset_name, str) or not dataset_name:
        violations.append("dataset_name must be a non-empty string")
        dataset_name = ""

    examples = raw.get("examples")
    if not isinstance(examples, list) or not examples:
        violations.append("examples must be a non-empty list")
        examples = []
    seen: set[str] = set()
    for e in examples:
        if not isinstance(e, str) or not e:
            violations.append(f"invalid example id: {e!r}")
        elif e in seen:
            violations.append(f"duplicate example id: {e!r}")
        seen.add(e if isinstance(e, str) else str(e))

    notations_raw = raw.get("notations")
    if not isinstance(notations_raw, list) or not notations_raw:
        violations.append("notations must be a non-empty list")
        notations_raw = []
    notations: list[NotationConfig] = []
    seen_n: set[str] = set()
    for i, n in enumerate(notations_raw):
        if not isinstance(n, dict):
            violations.append(f"notations[{i}] must be an object")
            continue
        nid = n.get("id")
        if not isinstance(nid, str) or not nid:
            violations.append(f"notations[{i}].id must be a non-empty string")
            continue
        if nid in seen_n:
            violations.append(f"duplicate notation id: {nid!r}")
            continue
        seen_n.add(nid)
        ext = n.get("file_extension", "")
        if not isinstance(ext, str) or not ext.lstrip("."):
            violations.append(f"notation {nid!r}: file_extension must be non-empty")
            ext = "txt"
        norm_raw = n.get("normalizer", {"kind": "none"})
        kind = norm_raw.get("kind") if isinstance(norm_raw, dict) else None
        if kind not in NORMALIZER_KINDS:
            violations.append(f"notation {nid!r}: unknown normalizer kind {kind!r}")
            kind = "none"
        command = norm_raw.get("command") if isinstance(norm_raw, dict) else None
        if kind == "external_command" and not command:
            violations.append(f"notation {nid!r}: external_command normalizer requires a command")
        notations.append(
            NotationConfig(
                id=nid,
                language_id=str(n.get("language_id", "generic")),
                file_extension=ext.lstrip("."),
                tokenizer_id=str(n.get("tokenizer_id", "generic")),
                normalizer=NormalizerSpec(kind=kind, command=command),
            )
        )
    if violations:
        return None
    return GalleryConfig(
        dataset_name=dataset_name,
        notations=tuple(notations),
        examples=tuple(examples),
    )


def _content_hash(config: GalleryConfig, specs: dict[tuple[str, str], Spec]) -> str:
    h = hashlib.sha256()
    h.update(config.dataset_name.encode("utf-8"))
    for n in config.notations:
        h.update(b"\x00" + n.id.encode("utf-8"))
        for e in config.examples:
            h.update(b"\x01" + e.encode("utf-8") + b"\x02")
            h.update(specs[(n.id, e)].normalized_text.encode("utf-8"))
    return h.hexdigest()


def load_gallery(root_path: str | Path) -> Gallery:
    """Load and validate a gallery directory.

    All violations are collected before raising, so a single failed load
    reports every missing file and config problem at once.
    """
    root = Path(root_path)
    config_path = root / "gallery.json"
    violations: list[str] = []
    if not config_path.is_file():
        raise GalleryLoadError([f"missing {config_path}"])
    try:
        raw = json.loads(config_path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise GalleryLoadError([f"gallery.json is not valid JSON: {exc}"]) from exc

    config = _parse_config(raw, violations)
    if config is None:
        raise GalleryLoadError(violations)

    from .tokenizer import tokenizer_registered

    for n in config.notations:
        if not tokenizer_registered(n.tokenizer_id):
            violations.append(f"notation {n.id!r}: unknown tokenizer {n.tokenizer_id!r}")

    specs: dict[tuple[str, str], Spec] = {}
    for n in config.notations:
        for e in config.examples:
            path = root / n.id / f"{e}.{n.file_extension}"
            if not path.is_file():
                violations.append(f"missing spec for notation {n.id!r}, example {e!r} ({path})")
                continue
            try:
                raw_text = path.read_text(encoding="utf-8")
            except UnicodeDecodeError as exc:
                violations.append(f"{path}: not valid UTF-8: {exc}")
                continue
            try:
                normalized = normalize(raw_text, n.normalizer)
            except NormalizerFailed as exc:
                violations.append(f"normalizer failed for {n.id}/{e}: {exc.detail}")
                continue
            specs[(n.id, e)] = Spec(
                notation_id=n.id, example_id=e, raw_text=raw_text, normalized_text=normalized
            )

    if violations:
        raise GalleryLoadError(violations)

    images: dict[str, Path] = {}
    img_dir = root / "img"
    if img_dir.is_dir():
        for e in config.examples:
            for ext in IMAGE_EXTENSIONS:
                p = img_dir / f"{e}{ext}"
                if p.is_file():
                    images[e] = p
                    break

    return Gallery(
        config=config,
        specs=specs,
        images=images,
        content_hash=_content_hash(config, specs),
        root_path=root,
    )
