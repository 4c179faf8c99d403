"""On-disk JSON cache for expensive computations.

Keys combine the operation name, its parameters, and a hash of the package
sources, so stale results are never served across code changes.  Writes are
atomic (temp file then rename) and the stored payload is the same JSON the
CLI prints, making cache entries independently inspectable.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from functools import lru_cache
from pathlib import Path


@lru_cache(maxsize=1)
def code_version_hash() -> str:
    pkg_dir = Path(__file__).resolve().parent
    h = hashlib.sha256()
    for path in sorted(pkg_dir.glob("*.py")):
        h.update(path.name.encode())
        h.update(path.read_bytes())
    return h.hexdigest()[:16]


def cache_key(operation: str, params: dict) -> str:
    blob = json.dumps({"op": operation, "params": params,
                       "code": code_version_hash()},
                      sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:24]


class ResultCache:
    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, operation: str, params: dict) -> Path:
        return self.directory / ("%s__%s.json" % (operation, cache_key(operation, params)))

    def get(self, operation: str, params: dict):
        path = self._path(operation, params)
        if not path.exists():
            return None
        with open(path, "r", encoding="utf-8") as fh:
            entry = json.load(fh)
        return entry.get("result")

    def put(self, operation: str, params: dict, result) -> None:
        path = self._path(operation, params)
        payload = {"operation": operation, "params": params,
                   "code": code_version_hash(), "result": result}
        fd, tmp = tempfile.mkstemp(dir=str(self.directory), suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=1)
                fh.write("\n")
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
