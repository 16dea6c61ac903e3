from __future__ import annotations

from pathlib import Path
from typing import Any, Iterable, TextIO
import csv
import io
import json

from .connectivity import format_connectivity
from .harness import VerificationRecord


# measured is an int, "contractible" or "acyclic" (all reduced homology vanishes
# without a contraction); claimed of None is written as "unbounded"
CSV_COLUMNS = ("graph_id", "n", "d", "kind", "bound", "measured", "pi1", "pass", "ms")


def dumps(payload: Any) -> str:
    """Canonical one-line JSON: sorted keys, no spaces."""

    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def record_lines(records: Iterable[VerificationRecord], include_ms: bool = False) -> list[str]:
    return [dumps(r.to_json(include_ms=include_ms)) for r in records]


def write_json_lines(
    out: TextIO,
    records: Iterable[VerificationRecord],
    summary: dict[str, object] | None = None,
    include_ms: bool = False,
) -> None:
    for line in record_lines(records, include_ms=include_ms):
        out.write(line + "\n")
    if summary is not None:
        out.write(dumps(summary) + "\n")


def csv_row(r: VerificationRecord) -> dict[str, object]:
    return {
        "graph_id": r.graph_id,
        "n": r.n,
        "d": r.d,
        "kind": r.kind,
        "bound": format_connectivity(r.claimed),
        "measured": "" if r.measured is None else format_connectivity(r.measured),
        "pi1": r.pi1,
        "pass": "true" if r.passed else "false",
        "ms": r.ms,
    }


def write_csv(out: TextIO, records: Iterable[VerificationRecord]) -> None:
    writer = csv.DictWriter(out, fieldnames=list(CSV_COLUMNS), lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(csv_row(r))


def csv_text(records: Iterable[VerificationRecord]) -> str:
    buf = io.StringIO()
    write_csv(buf, records)
    return buf.getvalue()


def write_text(out: TextIO, records: Iterable[VerificationRecord], summary: dict[str, object]) -> None:
    for r in records:
        bound = format_connectivity(r.claimed)
        measured = "-" if r.measured is None else format_connectivity(r.measured)
        out.write(
            f"{r.status.upper():7} {r.graph_id:<14} {r.check:<24} "
            f"bound={bound} measured={measured} pi1={r.pi1}\n"
        )
    out.write(
        "summary: "
        + " ".join(f"{k}={summary[k]}" for k in ("records", "pass", "fail", "error", "skipped"))
        + "\n"
    )


def save_csv(path: str | Path, records: Iterable[VerificationRecord]) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(csv_text(records), encoding="utf-8")
