"""Content-addressed result cache with atomic writes.

Keys are canonical JSON descriptors; the file name is the SHA-256 of the
descriptor, so identical requests share an entry and differing ones never
collide.  Writes go through a temporary file and an atomic rename; readers
never see partial files.  A stored entry repeats its descriptor, which is
checked on load to catch corruption or hash collisions.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile


class CacheIntegrityError(RuntimeError):
    pass


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def descriptor_hash(descriptor) -> str:
    return hashlib.sha256(canonical_json(descriptor).encode("utf-8")).hexdigest()


class ResultCache:
    def __init__(self, directory):
        self.directory = directory

    def _path(self, descriptor):
        return os.path.join(self.directory, descriptor_hash(descriptor) + ".json")

    def load(self, descriptor):
        path = self._path(descriptor)
        if not os.path.exists(path):
            return None
        try:
            with open(path, "r", encoding="utf-8") as fh:
                obj = json.load(fh)
        except (OSError, ValueError) as exc:
            raise CacheIntegrityError(f"unreadable cache entry {path}: {exc}")
        if obj.get("descriptor") != descriptor:
            raise CacheIntegrityError(f"descriptor mismatch in cache entry {path}")
        return obj.get("payload")

    def store(self, descriptor, payload):
        os.makedirs(self.directory, exist_ok=True)
        path = self._path(descriptor)
        body = canonical_json({"descriptor": descriptor, "payload": payload})
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(body)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path
