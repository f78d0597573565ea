import itertools
import random

import pytest

from modsieve import (
    make_type,
    modular_partitions,
    submultisets_with_sum,
    vector_partitions,
)

LEMMA_TYPE = [1, 1, 24, 24, 36, 40, 45, 45, 90, 90, 90, 180, 180, 180]


def brute_submultisets(values, target):
    """Index-subset brute force; collapses equal-value choices by multiset."""
    out = set()
    for r in range(len(values) + 1):
        for combo in itertools.combinations(values, r):
            if sum(combo) == target:
                out.add(tuple(sorted(combo)))
    return out


def brute_vector_partitions(total, parts):
    """Counts-based oracle: choose a count for every part, check the sum."""
    found = set()

    def rec(i, remaining, chosen):
        if i == len(parts):
            if not any(remaining):
                multiset = []
                for p, c in chosen:
                    multiset.extend([tuple(p)] * c)
                found.add(tuple(sorted(multiset, reverse=True)))
            return
        p = parts[i]
        caps = [remaining[c] // p[c] for c in range(len(p)) if p[c] > 0]
        for count in range(min(caps) + 1):
            rec(
                i + 1,
                tuple(remaining[c] - count * p[c] for c in range(len(remaining))),
                chosen + [(p, count)],
            )

    rec(0, tuple(total), [])
    return found


def test_submultisets_examples():
    assert list(submultisets_with_sum([4, 1, 1], 0)) == [()]
    assert list(submultisets_with_sum([4, 1, 1], 5)) == [(1, 4)]
    assert list(submultisets_with_sum([1, 1, 1, 1], 2)) == [(1, 1)]
    assert list(submultisets_with_sum([], 3)) == []
    assert list(submultisets_with_sum([9, 9, 4, 1, 1], 12)) == []


def test_submultisets_preconditions():
    with pytest.raises(ValueError):
        list(submultisets_with_sum([1, 4], 4))  # not nonincreasing
    with pytest.raises(ValueError):
        list(submultisets_with_sum([4, 1], -1))
    with pytest.raises(ValueError):
        list(submultisets_with_sum([4, 0], 4))


def test_submultisets_against_brute_force():
    rng = random.Random(6)
    for _ in range(120):
        size = rng.randint(0, 12)
        values = sorted((rng.randint(1, 30) for _ in range(size)), reverse=True)
        target = rng.randint(0, sum(values) + 2) if values else rng.randint(0, 3)
        got = list(submultisets_with_sum(values, target))
        assert len(got) == len(set(got)), "duplicate submultisets"
        assert set(got) == brute_submultisets(values, target)


def test_vector_partitions_examples():
    assert list(vector_partitions((2,), [(1,)])) == [((1,), (1,))]
    assert list(vector_partitions((1, 1), [(2, 0)])) == []
    got = set(vector_partitions((2, 1), [(1, 0), (0, 1), (1, 1)]))
    assert got == {
        ((1, 1), (1, 0)),
        ((1, 0), (1, 0), (0, 1)),
    }
    # zero total: exactly the empty partition
    assert list(vector_partitions((0, 0), [(1, 0)])) == [()]


def test_vector_partitions_preconditions():
    with pytest.raises(ValueError):
        list(vector_partitions((1, 1), [(1,)]))  # length mismatch
    with pytest.raises(ValueError):
        list(vector_partitions((1,), [(0,)]))  # zero part
    with pytest.raises(ValueError):
        list(vector_partitions((1,), [(1,), (1,)]))  # duplicate part
    with pytest.raises(ValueError):
        list(vector_partitions((-1,), [(1,)]))


def test_vector_partitions_against_brute_force():
    rng = random.Random(7)
    for _ in range(80):
        n = rng.randint(1, 3)
        total = tuple(rng.randint(0, 4) for _ in range(n))
        pool = [
            v
            for v in itertools.product(*(range(c + 1) for c in total))
            if any(v)
        ]
        rng.shuffle(pool)
        parts = pool[: rng.randint(1, min(6, len(pool)))] if pool else []
        if not parts:
            continue
        got = list(vector_partitions(total, parts))
        assert len(got) == len(set(got)), "duplicate partitions"
        normalized = {tuple(sorted(p, reverse=True)) for p in got}
        assert normalized == brute_vector_partitions(total, parts)
        # each emitted partition sums back to total
        for p in got:
            assert tuple(map(sum, zip(*p))) == total if p else not any(total)


def test_modular_partitions_examples():
    assert modular_partitions(make_type([1, 1])) == [((1,), (1,))]
    assert modular_partitions(make_type([1, 1, 2])) == []  # no block sums to 3
    assert modular_partitions(make_type([1])) == [((1,),)]

    got = modular_partitions(make_type(LEMMA_TYPE))
    assert got == [
        (
            (1, 1, 24, 24, 36, 40, 45, 45, 90, 90, 90, 180),
            (180, 180),
        )
    ]


def test_modular_partitions_pointed_types():
    for k in (1, 2, 3, 4, 6):
        t = make_type([1] * k)
        assert modular_partitions(t) == [tuple(((1,) for _ in range(k)))]


def test_modular_partitions_indivisible_is_empty():
    # pt = 2 but d odd
    t = make_type([1, 1, 2, 3])  # d = 15
    assert t.d % t.pt != 0
    assert modular_partitions(t) == []


def brute_modular_partitions(t):
    """Assign every entry to one of pt labeled groups, then canonicalize."""
    target, pt = t.d // t.pt, t.pt
    out = set()
    for assign in itertools.product(range(pt), repeat=t.rank):
        groups = [[] for _ in range(pt)]
        for x, g in zip(t.dims, assign):
            groups[g].append(x)
        if all(sum(v * v for v in g) == target for g in groups):
            out.add(tuple(sorted(tuple(sorted(g)) for g in groups)))
    return sorted(out)


def test_modular_partitions_against_brute_force():
    rng = random.Random(8)
    cases = 0
    while cases < 50:
        rank = rng.randint(1, 7)
        dims = [1] + [rng.randint(1, 4) for _ in range(rank - 1)]
        t = make_type(dims)
        if t.d % t.pt != 0:
            assert modular_partitions(t) == []
            continue
        if t.pt ** t.rank > 100_000:
            continue
        got = modular_partitions(t)
        assert got == brute_modular_partitions(t)
        cases += 1


def test_modular_partitions_canonical_order_and_invariants():
    t = make_type([1, 1, 1, 1, 4, 4, 12, 12, 36, 36, 108, 108, 162, 162, 162])
    partitions = modular_partitions(t)
    assert partitions, "expected at least one partition"
    assert partitions == sorted(partitions)
    target = t.d // t.pt
    for p in partitions:
        assert list(p) == sorted(p)
        assert len(p) == t.pt
        assert p[0][0] == 1  # first block holds a unit
        for block in p:
            assert list(block) == sorted(block)
            assert sum(x * x for x in block) == target
        assert sorted(x for b in p for x in b) == list(t.dims)
    assert len(set(partitions)) == len(partitions)
