"""On-disk result cache: gzip-compressed JSON keyed by a hash of the request."""

from __future__ import annotations

import gzip
import hashlib
import json
import os
from pathlib import Path

from . import __version__

ENV_VAR = "SIEVEKIT_CACHE"


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "sievekit"


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def digest(obj) -> str:
    return hashlib.sha256(canonical(obj).encode()).hexdigest()


def cache_key(command: str, params: dict, version: str = __version__) -> str:
    return digest({"command": command, "params": params, "version": version})


class ResultCache:
    def __init__(self, directory: str | os.PathLike | None = None, enabled: bool = True):
        self.dir = Path(directory) if directory is not None else default_dir()
        self.enabled = enabled

    def _path(self, key: str) -> Path:
        return self.dir / key[:2] / f"{key}.json.gz"

    def load(self, key: str):
        """Stored value, or None when missing, disabled or unreadable."""
        if not self.enabled:
            return None
        path = self._path(key)
        try:
            with gzip.open(path, "rt", encoding="utf-8") as fh:
                record = json.load(fh)
            if record.get("key") != key:
                return None
            return record["value"]
        except (OSError, ValueError, KeyError, EOFError):
            return None

    def store(self, key: str, value) -> None:
        if not self.enabled:
            return
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(f".tmp{os.getpid()}")
        with gzip.open(tmp, "wt", encoding="utf-8") as fh:
            json.dump({"key": key, "value": value}, fh, sort_keys=True)
        os.replace(tmp, path)

    def get_or_compute(self, command: str, params: dict, compute):
        """Return (value, hit)."""
        key = cache_key(command, params)
        value = self.load(key)
        if value is not None:
            return value, True
        value = compute()
        self.store(key, value)
        return value, False
