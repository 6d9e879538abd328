"""Canonical JSON output, payload schemas, and the result cache.

All numeric results are serialized as decimal strings so that consumers
limited to 64-bit (or 53-bit) integers never silently corrupt a count.
Output is canonical: keys sorted, fixed separators, so equal inputs give
byte-identical bytes.

Cached results are stored one file per cache key; the key is a stable
hash of (command, parameters, tool version), and each manifest stores a
hash of its payload plus the schema name, so corrupted entries are
detected and recomputed.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Optional

import jsonschema

from . import __version__

ENV_CACHE_DIR = "CYCLIC_SIEVE_CACHE"


def dumps_canonical(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def stable_hash(payload: Any) -> str:
    return hashlib.sha256(dumps_canonical(payload).encode("ascii")).hexdigest()


@dataclass(frozen=True)
class RunManifest:
    """One cached run: command, parameters, version, key and payload."""

    command: str
    params: dict
    version: str
    payload: Any

    @property
    def key(self) -> str:
        return stable_hash({"command": self.command, "params": self.params, "version": self.version})

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "version": self.version,
            "key": self.key,
            "payload": self.payload,
            "payload_sha256": stable_hash(self.payload),
        }


def load_schema(name: str) -> dict:
    text = resources.files("cyclicsieve").joinpath(f"schemas/{name}.schema.json").read_text()
    return json.loads(text)


def validate_payload(name: str, payload: Any) -> None:
    jsonschema.validate(payload, load_schema(name))


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "cyclicsieve"


class ResultCache:
    """File-per-key result cache with hash and schema validation on read."""

    def __init__(self, directory: Optional[Path] = None, enabled: bool = True):
        self.directory = Path(directory) if directory else default_cache_dir()
        self.enabled = enabled

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def fetch(self, command: str, params: dict, schema: str, compute: Callable[[], Any]) -> Any:
        """Return the cached payload for (command, params) or compute and store it."""
        if not self.enabled:
            return compute()
        probe = RunManifest(command, params, __version__, None)
        path = self._path(probe.key)
        if path.exists():
            payload = self._read_valid(path, probe.key, command, schema)
            if payload is not None:
                return payload
        payload = compute()
        manifest = RunManifest(command, params, __version__, payload)
        self.directory.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(dumps_canonical(manifest.to_json()))
        tmp.replace(path)
        return payload

    def _read_valid(self, path: Path, key: str, command: str, schema: str) -> Optional[Any]:
        try:
            data = json.loads(path.read_text())
            if data.get("key") != key or data.get("command") != command:
                raise ValueError("cache key mismatch")
            payload = data["payload"]
            if stable_hash(payload) != data.get("payload_sha256"):
                raise ValueError("payload hash mismatch")
            validate_payload(schema, payload)
            return payload
        except (ValueError, KeyError, json.JSONDecodeError, jsonschema.ValidationError) as exc:
            print(
                dumps_canonical({"warning": f"corrupted cache entry {path.name}: {exc}", "action": "recomputing"}),
                file=sys.stderr,
            )
            return None
