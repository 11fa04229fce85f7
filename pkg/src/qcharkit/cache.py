"""Content-addressed on-disk cache for computed characters and limits.

Keys are sha256 digests over the engine version plus the canonical JSON of the
request, so identical requests share entries across commands and processes.
Entries are write-once: a second put of the same key is a no-op, and writes go
through an atomic rename so readers never observe a partial file. A corrupt or
version-mismatched entry is treated as a miss.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile

from .version import ENGINE_VERSION

_log = logging.getLogger("qcharkit.cache")

_MAGIC = b"qcharkit-cache/"


def cache_dir() -> str:
    env = os.environ.get("QCHAR_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "qcharkit")


def cache_key(request: dict) -> str:
    payload = {"engine": ENGINE_VERSION, "request": request}
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()


def _path(key: str) -> str:
    return os.path.join(cache_dir(), key + ".bin")


def cache_get(key: str) -> bytes | None:
    path = _path(key)
    try:
        with open(path, "rb") as fh:
            blob = fh.read()
    except OSError:
        return None
    prefix = _MAGIC + ENGINE_VERSION.encode("ascii") + b"\n"
    if not blob.startswith(prefix):
        _log.warning("cache entry %s is corrupt or from another engine version; ignoring", key)
        return None
    return blob[len(prefix):]


def cache_put(key: str, payload: bytes) -> None:
    path = _path(key)
    if os.path.exists(path):
        return
    os.makedirs(cache_dir(), exist_ok=True)
    blob = _MAGIC + ENGINE_VERSION.encode("ascii") + b"\n" + payload
    fd, tmp = tempfile.mkstemp(dir=cache_dir(), prefix=".put-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(blob)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def cache_info() -> dict:
    d = cache_dir()
    entries = 0
    total = 0
    try:
        names = os.listdir(d)
    except OSError:
        names = []
    for name in names:
        if name.endswith(".bin"):
            entries += 1
            try:
                total += os.path.getsize(os.path.join(d, name))
            except OSError:
                pass
    return {"dir": d, "entries": entries, "bytes": total}


def cache_clear() -> int:
    d = cache_dir()
    removed = 0
    try:
        names = os.listdir(d)
    except OSError:
        return 0
    for name in names:
        if name.endswith(".bin"):
            try:
                os.unlink(os.path.join(d, name))
                removed += 1
            except OSError:
                pass
    return removed
