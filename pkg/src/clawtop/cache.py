from __future__ import annotations

from pathlib import Path
import json
import sqlite3

from .homology import HomologyProfile
from .time_utils import utc_now_iso


CACHE_FILENAME = "homology.db"


class HomologyCache:
    """Memoized homology profiles keyed by a complex's canonical hash."""

    def __init__(self, path: str):
        self._path = path
        self._conn = sqlite3.connect(self._path, timeout=30)
        self._conn.row_factory = sqlite3.Row

    @classmethod
    def in_directory(cls, directory: str) -> "HomologyCache":
        Path(directory).mkdir(parents=True, exist_ok=True)
        cache = cls(str(Path(directory) / CACHE_FILENAME))
        cache.init_schema()
        return cache

    def close(self) -> None:
        self._conn.close()

    def init_schema(self) -> None:
        cur = self._conn.cursor()
        cur.execute(
            """
            CREATE TABLE IF NOT EXISTS homology (
              complex_key TEXT PRIMARY KEY,
              profile_json TEXT NOT NULL,
              face_count INTEGER NOT NULL,
              created_at TEXT NOT NULL
            )
            """
        )
        self._conn.commit()

    def get(self, complex_key: str) -> HomologyProfile | None:
        cur = self._conn.cursor()
        cur.execute(
            "SELECT profile_json FROM homology WHERE complex_key = ?", (complex_key,)
        )
        row = cur.fetchone()
        if not row:
            return None
        try:
            return HomologyProfile.from_json(json.loads(row["profile_json"]))
        except (ValueError, TypeError, AssertionError):
            return None

    def put(self, complex_key: str, profile: HomologyProfile, face_count: int) -> bool:
        cur = self._conn.cursor()
        cur.execute(
            """
            INSERT OR IGNORE INTO homology (complex_key, profile_json, face_count, created_at)
            VALUES (?, ?, ?, ?)
            """,
            (
                complex_key,
                json.dumps(profile.to_json(), sort_keys=True),
                int(face_count),
                utc_now_iso(),
            ),
        )
        self._conn.commit()
        return cur.rowcount == 1

    def count(self) -> int:
        cur = self._conn.cursor()
        cur.execute("SELECT COUNT(1) FROM homology")
        return int(cur.fetchone()[0])
