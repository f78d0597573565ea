"""Line-oriented batch checking and the JSON-lines report format.

Input is one JSON array per line, either flat ([1,1,2,3,3]) or compact
([[1,1],[75,2],...] with [dimension, multiplicity] pairs), auto-detected.
Output is one JSON object per checked line, in input order, followed by a
summary line. Parse failures become error records and never abort the
batch.
"""

import concurrent.futures
import json
import sys
import time
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Any, TextIO

from .criterion import CriterionVerdict, Mode, check_type
from .fusion import CompactType, FusionType, expand_compact, make_type

VERBOSITIES = ("min", "witness", "full")


@dataclass(frozen=True)
class BatchRecord:
    """Outcome of one input line: a verdict or a parse error."""

    index: int
    input_type: FusionType | None
    verdict: CriterionVerdict | None
    error: str | None
    elapsed_ms: float


def type_from_json(data: Any) -> FusionType:
    """Build a FusionType from decoded JSON, flat or compact, auto-detected."""
    if not isinstance(data, list) or not data:
        raise ValueError("input must be a nonempty JSON array")
    is_pair = [isinstance(x, list) for x in data]
    if all(is_pair):
        pairs = []
        for x in data:
            if len(x) != 2 or not all(
                isinstance(v, int) and not isinstance(v, bool) for v in x
            ):
                raise ValueError(
                    f"compact element {x!r} is not a [dimension, multiplicity] integer pair"
                )
            pairs.append((x[0], x[1]))
        return expand_compact(CompactType(tuple(pairs)))
    if any(is_pair):
        raise ValueError("mixed flat and pair elements")
    return make_type(data)


def parse_input_line(line: str) -> FusionType:
    """Parse one input line (a JSON array) into a FusionType."""
    try:
        data = json.loads(line)
    except json.JSONDecodeError as e:
        raise ValueError(f"malformed JSON: {e}") from None
    return type_from_json(data)


def _check_line(task: tuple[int, str, Mode]) -> BatchRecord:
    index, line, mode = task
    start = time.perf_counter()
    try:
        t = parse_input_line(line)
    except ValueError as e:
        return BatchRecord(index, None, None, f"line {index}: {e}", 0.0)
    verdict = check_type(t, mode)
    elapsed = (time.perf_counter() - start) * 1000.0
    return BatchRecord(index, t, verdict, None, elapsed)


def run_batch(
    lines: Iterable[str], mode: Mode = Mode.PAPER, jobs: int = 1
) -> Iterator[BatchRecord]:
    """Check every nonblank input line; records come back in input order.

    index is the 1-based line number in the input. Whitespace-only lines
    are skipped. jobs > 1 fans the work out to a process pool; the result
    order (and content, timing aside) is identical either way.
    """
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    tasks = ((i, line, mode) for i, line in enumerate(lines, start=1) if line.strip())
    if jobs == 1:
        yield from map(_check_line, tasks)
        return
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_check_line, tasks, chunksize=4)


def record_to_json(rec: BatchRecord, verbosity: str = "witness", timing: bool = True) -> dict:
    """Shape one BatchRecord as a JSON-ready dict.

    min: verdict fields only. witness: adds the exclusion witness on
    excluded records. full: also adds the surviving partitions. Timing is
    dropped when timing=False so reports compare byte for byte.
    """
    if verbosity not in VERBOSITIES:
        raise ValueError(f"unknown verbosity {verbosity!r}")
    if rec.error is not None:
        return {"index": rec.index, "error": rec.error}
    v = rec.verdict
    obj: dict = {
        "index": rec.index,
        "type": list(rec.input_type.dims),
        "survives": v.survives,
        "total_partitions": v.total_partitions,
        "narrowed": v.narrowed,
    }
    if verbosity in ("witness", "full") and v.witness is not None:
        w = v.witness
        obj["witness"] = {
            "x": w.x_dim,
            "p": w.p,
            "best_y": w.best_y,
            "lhs": w.lhs,
            "rhs": w.rhs,
        }
    if verbosity == "full":
        obj["surviving_partitions"] = [
            [list(block) for block in partition] for partition in v.surviving_partitions
        ]
    if timing:
        obj["elapsed_ms"] = round(rec.elapsed_ms, 3)
    return obj


def emit_report(
    records: Iterable[BatchRecord],
    verbosity: str = "witness",
    timing: bool = True,
    out: TextIO | None = None,
) -> dict:
    """Write one JSON line per record plus a trailing summary line.

    Returns the summary dict {checked, survived, excluded, errors}. checked
    counts verdict records only; errors are tallied separately.
    """
    if out is None:
        out = sys.stdout
    checked = survived = excluded = errors = 0
    for rec in records:
        obj = record_to_json(rec, verbosity=verbosity, timing=timing)
        if rec.error is not None:
            errors += 1
        else:
            checked += 1
            if rec.verdict.survives:
                survived += 1
            else:
                excluded += 1
        out.write(json.dumps(obj, separators=(",", ":")) + "\n")
    summary = {
        "checked": checked,
        "survived": survived,
        "excluded": excluded,
        "errors": errors,
    }
    out.write(json.dumps(summary, separators=(",", ":")) + "\n")
    return summary
