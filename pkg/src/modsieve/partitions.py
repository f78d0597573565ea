"""Enumeration of candidate grading partitions of a type.

A modular category is faithfully graded by its group of invertibles, which
has order pt, and every graded component has the same total squared
dimension d / pt. At the level of types this leaves a purely combinatorial
shadow: the dimension multiset must split into exactly pt blocks whose
squared entries each sum to d / pt. This module enumerates every such
split, in two stages:

  1. subset-sum search over the squared dimensions finds each candidate
     block (as a multiplicity vector over the distinct dimensions), and
  2. vector-partition search assembles candidate blocks into complete
     partitions of the whole multiset.

No constraint is placed on where the unit entries land; only the square
sums and multiplicities are enforced.
"""

from collections.abc import Iterator, Sequence

from .fusion import FusionType

Part = tuple[int, ...]
Partition = tuple[Part, ...]


def submultisets_with_sum(values: Sequence[int], target: int) -> Iterator[tuple[int, ...]]:
    """Yield each distinct submultiset of values summing to target, once.

    values must be positive ints sorted nonincreasing; submultisets come
    out as nondecreasing tuples. Two rules keep the search exact and fast:
    equal values never branch twice at the same recursion depth (that is
    what deduplicates), and a branch dies as soon as the remaining suffix
    cannot reach the target.
    """
    vals = list(values)
    if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
        raise ValueError("values must be sorted nonincreasing")
    if vals and vals[-1] < 1:
        raise ValueError("values must be positive")
    if target < 0:
        raise ValueError("target must be nonnegative")
    suffix = [0] * (len(vals) + 1)
    for i in range(len(vals) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + vals[i]

    def gen(s: int, i: int) -> Iterator[tuple[int, ...]]:
        if s == 0:
            yield ()
            return
        while i < len(vals) and vals[i] > s:
            i += 1
        prev = 0
        while i < len(vals):
            if suffix[i] < s:
                return
            if vals[i] != prev:
                prev = vals[i]
                for rest in gen(s - vals[i], i + 1):
                    yield rest + (vals[i],)
            i += 1

    return gen(target, 0)


def vector_partitions(
    total: Sequence[int], parts: Sequence[Sequence[int]]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield each multiset of parts with componentwise sum total, once.

    parts must be nonzero, nonnegative and pairwise distinct; repetition
    within a partition is allowed. Enumeration fixes the descending
    lexicographic order on parts and emits only nonincreasing selection
    sequences, so every multiset appears exactly once.
    """
    tot = tuple(total)
    cand = [tuple(p) for p in parts]
    if any(len(p) != len(tot) for p in cand):
        raise ValueError("parts and total must have the same number of coordinates")
    if min(tot, default=0) < 0 or any(min(p, default=0) < 0 for p in cand):
        raise ValueError("vectors must be nonnegative")
    if any(not any(p) for p in cand):
        raise ValueError("parts must be nonzero")
    if len(set(cand)) != len(cand):
        raise ValueError("parts must be pairwise distinct")
    cand.sort(reverse=True)
    n = len(tot)

    def gen(remaining, start):
        if not any(remaining):
            yield ()
            return
        for k in range(start, len(cand)):
            p = cand[k]
            if all(p[c] <= remaining[c] for c in range(n)):
                rest = tuple(remaining[c] - p[c] for c in range(n))
                for tail in gen(rest, k):
                    yield (p,) + tail

    return gen(tot, 0)


def modular_partitions(t: FusionType) -> list[Partition]:
    """All splits of t into pt blocks of equal squared-dimension sum d/pt.

    Returns the canonical sorted list: each block is a nondecreasing tuple,
    blocks are in lexicographic order within a partition, and partitions
    are in lexicographic order. The lexicographically first block of every
    partition starts with a unit entry. Empty when pt does not divide d,
    since no grading can exist then.
    """
    d, pt = t.d, t.pt
    if d % pt != 0:
        return []
    target = d // pt
    unique = t.unique_dims
    squares_desc = [x * x for x in reversed(t.dims)]
    block_vecs = [
        tuple(sub.count(u * u) for u in unique)
        for sub in submultisets_with_sum(squares_desc, target)
    ]
    result: list[Partition] = []
    for choice in vector_partitions(t.multiplicities, block_vecs):
        blocks = tuple(
            sorted(
                tuple(u for u, q in zip(unique, vec) for _ in range(q))
                for vec in choice
            )
        )
        assert len(blocks) == pt
        assert all(sum(x * x for x in b) == target for b in blocks)
        assert sorted(x for b in blocks for x in b) == list(t.dims)
        result.append(blocks)
    result.sort()
    return result
