"""The exclusion test a candidate type must pass to stay alive.

Fix a type with pt unit entries and global dimension d, and a grading
partition of it. The block holding the unit plays the role of the adjoint
part. For every non-unit dimension x in that neutral block and every prime
p dividing x but not pt, there must exist a non-unit dimension y somewhere
in the full type with p not dividing y and

    lcm(x, y)**2 + x*x*pt <= d.

A pair (x, p) with no such partner certifies that no modular category
realizes the partition; a type survives only if some partition admits a
neutral block passing every pair. Primes of x dividing pt impose no
constraint and are skipped.
"""

from dataclasses import dataclass
from enum import Enum

from .arith import lcm, prime_factors
from .fusion import FusionType
from .partitions import Partition, modular_partitions


class Mode(str, Enum):
    """Which blocks of a partition may act as the neutral block."""

    PAPER = "paper"  # only the lexicographically first block
    CONSERVATIVE = "conservative"  # any block containing a unit entry


@dataclass(frozen=True)
class ExclusionWitness:
    """The first (x, p) pair with no qualifying partner, plus context.

    best_y / lhs record the coprime partner minimizing the left-hand side
    (necessarily lhs > rhs, or x would have passed); both are None when no
    partner is even coprime to p. rhs is the global dimension d.
    """

    x_dim: int
    p: int
    best_y: int | None
    lhs: int | None
    rhs: int


@dataclass(frozen=True)
class CriterionVerdict:
    survives: bool
    surviving_partitions: tuple[Partition, ...]
    total_partitions: int
    narrowed: bool
    witness: ExclusionWitness | None
    vacuous: bool


def neutral_failure(
    neutral_unique: tuple[int, ...],
    all_unique: tuple[int, ...],
    pt_primes: set[int],
    pt: int,
    d: int,
) -> ExclusionWitness | None:
    """First failing (x, p) pair of a neutral block, or None if it passes.

    neutral_unique / all_unique are the sorted distinct dimensions of the
    neutral block and of the full type, both starting with the unit. x and
    p are scanned in ascending order, so the returned witness is
    deterministic.
    """
    for x in neutral_unique[1:]:
        x_term = x * x * pt
        for p in sorted(prime_factors(x) - pt_primes):
            best_y = None
            best_lhs = None
            found = False
            for y in all_unique[1:]:
                if y % p == 0:
                    continue
                lhs = lcm(x, y) ** 2 + x_term
                if lhs <= d:
                    found = True
                    break
                if best_lhs is None or lhs < best_lhs:
                    best_y, best_lhs = y, lhs
            if not found:
                return ExclusionWitness(x_dim=x, p=p, best_y=best_y, lhs=best_lhs, rhs=d)
    return None


def check_type(t: FusionType, mode: Mode = Mode.PAPER, *, early_exit: bool = False) -> CriterionVerdict:
    """Run the exclusion test over every grading partition of t.

    PAPER mode tries only the first block of each partition as the neutral
    block; CONSERVATIVE mode lets any block containing a unit vouch for its
    partition, so it can only accept more. The witness always comes from
    the first block of the first failing partition.

    With early_exit=True the scan stops at the first surviving partition;
    surviving_partitions is then truncated to that survivor and narrowed is
    reported False (it needs the full scan).
    """
    pt, d = t.pt, t.d
    pt_primes = prime_factors(pt)
    all_unique = t.unique_dims
    partitions = modular_partitions(t)
    surviving: list[Partition] = []
    witness: ExclusionWitness | None = None
    for partition in partitions:
        if mode is Mode.PAPER:
            candidates = partition[:1]
        else:
            candidates = tuple(dict.fromkeys(b for b in partition if b[0] == 1))
        first_failure = None
        passed = False
        for block in candidates:
            block_unique = tuple(sorted(set(block)))
            failure = neutral_failure(block_unique, all_unique, pt_primes, pt, d)
            if failure is None:
                passed = True
                break
            if first_failure is None:
                first_failure = failure
        if passed:
            surviving.append(partition)
            if early_exit:
                break
        elif witness is None:
            witness = first_failure
    survives = bool(surviving)
    narrowed = (
        not early_exit and survives and len(surviving) < len(partitions) and pt > 1
    )
    return CriterionVerdict(
        survives=survives,
        surviving_partitions=tuple(surviving),
        total_partitions=len(partitions),
        narrowed=narrowed,
        witness=None if survives else witness,
        vacuous=not partitions,
    )
