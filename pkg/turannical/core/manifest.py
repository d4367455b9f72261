"""
Run manifests for Turannical.

Every CSV written by a scan gets a `<out>.manifest.json` companion with the
resolved configuration, the master seed, timing and the SHA-256 digest of
each output, so an artifact can later be checked against the run that
produced it.
"""

import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from turannical import __version__
from turannical.errors import InputFormatError
from turannical.util.digest import sha256_file

logger = logging.getLogger(__name__)

MANIFEST_SUFFIX = ".manifest.json"


class RunManifest(BaseModel):
    """Provenance record of one command run."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    tool: str = "turannical"
    version: str = __version__
    command: str
    config: Dict[str, Any]
    seed: int = Field(ge=0)
    started_at: str
    wall_time_seconds: float = Field(ge=0)
    outputs: Dict[str, str]


def manifest_path(out: Union[str, Path]) -> Path:
    out = Path(out)
    return out.with_name(out.name + MANIFEST_SUFFIX)


def build_manifest(
    command: str,
    config: Dict[str, Any],
    seed: int,
    started: datetime,
    wall_time: float,
    outputs: Dict[str, Union[str, Path]],
) -> RunManifest:
    """
    Create a manifest, digesting every output file.

    Args:
        command: Subcommand name
        config: Fully resolved configuration
        seed: Master seed
        started: Start time (stored in UTC)
        wall_time: Elapsed seconds
        outputs: Output label -> file path

    Returns:
        RunManifest with label -> sha256 digests
    """
    return RunManifest(
        command=command,
        config=config,
        seed=seed,
        started_at=started.astimezone(timezone.utc).isoformat(),
        wall_time_seconds=wall_time,
        outputs={label: sha256_file(path) for label, path in outputs.items()},
    )


def write_manifest(manifest: RunManifest, out: Union[str, Path]) -> Path:
    """Write the manifest next to `out` and return its path."""
    path = manifest_path(out)
    path.write_text(manifest.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info("Wrote manifest %s", path)
    return path


def read_manifest(path: Union[str, Path]) -> RunManifest:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return RunManifest.model_validate_json(text)
    except ValidationError as e:
        error = e.errors()[0]
        field_path = ".".join(str(part) for part in error["loc"]) or "$"
        raise InputFormatError(f"invalid manifest: {error['msg']}", field_path=field_path)


def verify_manifest(manifest: RunManifest, files: Dict[str, Union[str, Path]]) -> bool:
    """
    Recompute digests and compare them with the manifest.

    Args:
        manifest: Manifest to check
        files: Output label -> current file path

    Returns:
        True if every listed output exists and matches its digest
    """
    for label, digest in manifest.outputs.items():
        path = files.get(label)
        if path is None or not Path(path).exists():
            logger.warning("Output '%s' is missing", label)
            return False
        if sha256_file(path) != digest:
            logger.warning("Output '%s' does not match its recorded digest", label)
            return False
    return True
