"""Golden datasets with known verdicts, shipped as JSON-lines data files.

Every entry is a type (flat or compact JSON array) plus the verdict it must
get in paper mode. The datasets cover the rank-14 case split (7 non-perfect
candidates of which exactly the first two survive, 27 perfect candidates
all excluded), 3 odd-dimensional rank-25 candidates in compact form (all
excluded), 18 rank-15 survivors, and 2 worked examples (a rank-22 survivor
and a rank-14 exclusion).
"""

import json
import sys
from dataclasses import dataclass
from importlib import resources
from typing import TextIO

from .batch import type_from_json
from .criterion import Mode, check_type
from .fusion import FusionType

DATASET_FILES = (
    "rank14_nonperfect.jsonl",
    "rank14_perfect.jsonl",
    "rank25_odd_perfect.jsonl",
    "rank15_survivors.jsonl",
    "worked_examples.jsonl",
)


@dataclass(frozen=True)
class GoldenDataset:
    name: str
    entries: tuple[tuple[FusionType, bool], ...]


def load_golden_datasets() -> list[GoldenDataset]:
    """Load every embedded dataset as (type, expected survives) pairs."""
    datasets = []
    root = resources.files("modsieve.data")
    for fname in DATASET_FILES:
        entries = []
        text = (root / fname).read_text(encoding="utf-8")
        for line in text.splitlines():
            if not line.strip():
                continue
            obj = json.loads(line)
            entries.append((type_from_json(obj["type"]), bool(obj["survives"])))
        datasets.append(GoldenDataset(fname.removesuffix(".jsonl"), tuple(entries)))
    return datasets


def run_golden(out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Recheck every dataset entry in paper mode; return the mismatch count.

    Per-dataset JSON lines go to out; a human-readable tally goes to err.
    """
    if out is None:
        out = sys.stdout
    if err is None:
        err = sys.stderr
    total = mismatched = 0
    for ds in load_golden_datasets():
        bad = []
        for i, (t, expected) in enumerate(ds.entries, start=1):
            got = check_type(t, Mode.PAPER).survives
            if got != expected:
                bad.append({"index": i, "type": list(t.dims), "expected": expected, "got": got})
        total += len(ds.entries)
        mismatched += len(bad)
        out.write(
            json.dumps(
                {"dataset": ds.name, "entries": len(ds.entries), "mismatches": len(bad)},
                separators=(",", ":"),
            )
            + "\n"
        )
        for obj in bad:
            out.write(json.dumps({"dataset": ds.name, **obj}, separators=(",", ":")) + "\n")
        err.write(f"dataset {ds.name}: {len(ds.entries)} entries, {len(bad)} mismatches\n")
    verdict = "OK" if mismatched == 0 else "FAILED"
    err.write(f"golden: {verdict} ({total} entries, {mismatched} mismatches)\n")
    return mismatched
