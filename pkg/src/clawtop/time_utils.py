from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone
import time


def utc_now_iso() -> str:
    return datetime.now(tz=timezone.utc).isoformat(timespec="seconds")


@dataclass
class Stopwatch:
    started: float = field(default_factory=time.perf_counter)

    def elapsed_ms(self) -> int:
        return int(round((time.perf_counter() - self.started) * 1000))

    def elapsed_seconds(self) -> float:
        return time.perf_counter() - self.started
