from __future__ import annotations

from dataclasses import dataclass
import os


DEFAULT_VERTEX_CAP = 30
DEFAULT_FACE_CAP = 200_000
DEFAULT_RETRY_CAP = 10_000
DEFAULT_TIETZE_BUDGET = 10_000
DEFAULT_TIETZE_RELATOR_CAP = 64

OUTPUT_FORMATS = ("json", "csv", "text")


def _parse_bool(value: str | None, default: bool = False) -> bool:
    if value is None:
        return default
    v = value.strip().lower()
    if v in {"1", "true", "t", "yes", "y", "on"}:
        return True
    if v in {"0", "false", "f", "no", "n", "off"}:
        return False
    return default


def _parse_int(value: str | None, default: int) -> int:
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        return default


def _positive(value: int, default: int) -> int:
    return value if value > 0 else default


@dataclass(frozen=True)
class RunConfig:
    command: str = "analyze"

    cap_vertices: int = DEFAULT_VERTEX_CAP
    cap_faces: int = DEFAULT_FACE_CAP

    seed: int = 0
    retry_cap: int = DEFAULT_RETRY_CAP

    tietze_budget: int = DEFAULT_TIETZE_BUDGET
    tietze_relator_cap: int = DEFAULT_TIETZE_RELATOR_CAP

    output_format: str = "json"
    # 0 means "use every available core"
    jobs: int = 0

    # Optional: directory holding the homology memo database
    cache_dir: str | None = None
    # Timings make JSON output run-dependent, so they are opt-in
    record_timings: bool = False

    log_json: bool = False
    log_level: str = "info"

    @property
    def worker_count(self) -> int:
        if self.jobs > 0:
            return self.jobs
        return max(1, os.cpu_count() or 1)

    @classmethod
    def from_env(cls, command: str = "analyze") -> "RunConfig":
        output_format = (os.environ.get("CLAWTOP_FORMAT") or "json").strip().lower()
        if output_format not in OUTPUT_FORMATS:
            output_format = "json"

        return cls(
            command=command,
            cap_vertices=_positive(
                _parse_int(os.environ.get("CLAWTOP_CAP_VERTICES"), DEFAULT_VERTEX_CAP),
                DEFAULT_VERTEX_CAP,
            ),
            cap_faces=_positive(
                _parse_int(os.environ.get("CLAWTOP_CAP_FACES"), DEFAULT_FACE_CAP),
                DEFAULT_FACE_CAP,
            ),
            seed=_parse_int(os.environ.get("CLAWTOP_SEED"), 0),
            retry_cap=_positive(
                _parse_int(os.environ.get("CLAWTOP_RETRY_CAP"), DEFAULT_RETRY_CAP),
                DEFAULT_RETRY_CAP,
            ),
            tietze_budget=_positive(
                _parse_int(
                    os.environ.get("CLAWTOP_TIETZE_BUDGET"), DEFAULT_TIETZE_BUDGET
                ),
                DEFAULT_TIETZE_BUDGET,
            ),
            tietze_relator_cap=_positive(
                _parse_int(
                    os.environ.get("CLAWTOP_TIETZE_RELATOR_CAP"),
                    DEFAULT_TIETZE_RELATOR_CAP,
                ),
                DEFAULT_TIETZE_RELATOR_CAP,
            ),
            output_format=output_format,
            jobs=max(0, _parse_int(os.environ.get("CLAWTOP_JOBS"), 0)),
            cache_dir=(os.environ.get("CLAWTOP_CACHE") or "").strip() or None,
            record_timings=_parse_bool(os.environ.get("CLAWTOP_TIMINGS"), False),
            log_json=_parse_bool(os.environ.get("LOG_JSON"), False),
            log_level=os.environ.get("LOG_LEVEL", "info"),
        )
