from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any
import json
import sys

from .time_utils import utc_now_iso


_THRESHOLDS = {"debug": 10, "info": 20, "warn": 30, "warning": 30, "error": 40}


@dataclass(frozen=True)
class Logger:
    """Event logger writing to stderr; stdout is reserved for reports.

    ``context`` holds fields attached to every event (see ``bind``).
    """

    enabled: bool = True
    json_mode: bool = False
    level: str = "info"
    context: tuple[tuple[str, Any], ...] = ()

    def bind(self, **fields: Any) -> "Logger":
        merged = dict(self.context)
        merged.update(fields)
        return replace(self, context=tuple(merged.items()))

    def _threshold(self) -> int:
        return _THRESHOLDS.get((self.level or "info").strip().lower(), 20)

    def debug(self, event: str, **fields: Any) -> None:
        self._emit("DEBUG", event, fields)

    def info(self, event: str, **fields: Any) -> None:
        self._emit("INFO", event, fields)

    def warn(self, event: str, **fields: Any) -> None:
        self._emit("WARN", event, fields)

    def error(self, event: str, **fields: Any) -> None:
        self._emit("ERROR", event, fields)

    def _emit(self, level: str, event: str, fields: dict[str, Any]) -> None:
        if not self.enabled or _THRESHOLDS[level.lower()] < self._threshold():
            return
        merged = {**dict(self.context), **fields}
        ts = utc_now_iso()
        if self.json_mode:
            line = json.dumps(
                {"ts": ts, "level": level, "event": event, **merged},
                ensure_ascii=False,
                default=str,
            )
        else:
            kv = " ".join(f"{k}={v}" for k, v in merged.items() if v is not None)
            line = f"[{ts}] {level} {event}" + (f" {kv}" if kv else "")
        print(line, file=sys.stderr)


def silent() -> Logger:
    return Logger(enabled=False)
