"""Canonical model of a candidate type: a multiset of integer dimensions.

A "type" is the multiset of simple-object dimensions of a hypothetical
integral modular fusion category. The unit object always contributes a 1,
so a valid type contains at least one entry equal to 1. Two quantities
drive everything downstream: pt, the number of unit entries (the order of
the group of invertibles), and d, the global dimension (sum of squares).
"""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class FusionType:
    """Sorted multiset of dimensions. Build via make_type / expand_compact.

    dims is nondecreasing, every entry is a positive int, and dims[0] == 1.
    Equality is multiset equality (the sorted tuples compare equal).
    """

    dims: tuple[int, ...]

    @cached_property
    def pt(self) -> int:
        """Number of unit entries (dimension-1 simples)."""
        return self.dims.count(1)

    @cached_property
    def d(self) -> int:
        """Global dimension: sum of squared entries."""
        return sum(x * x for x in self.dims)

    @property
    def rank(self) -> int:
        return len(self.dims)

    @cached_property
    def unique_dims(self) -> tuple[int, ...]:
        """Strictly increasing distinct dimensions, starting with 1."""
        return tuple(sorted(set(self.dims)))

    @cached_property
    def multiplicities(self) -> tuple[int, ...]:
        """Multiplicity of each distinct dimension, aligned with unique_dims."""
        return tuple(self.dims.count(u) for u in self.unique_dims)


@dataclass(frozen=True)
class CompactType:
    """Run-length form of a type: (dimension, multiplicity) pairs."""

    pairs: tuple[tuple[int, int], ...]


def make_type(raw: Iterable[int]) -> FusionType:
    """Canonicalize a dimension multiset into a FusionType.

    Rejects empty input, non-integer or nonpositive entries, and multisets
    with no unit entry.
    """
    entries = list(raw)
    if not entries:
        raise ValueError("type is empty")
    for x in entries:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"dimension {x!r} is not an integer")
        if x < 1:
            raise ValueError(f"dimension {x} is not positive")
    dims = tuple(sorted(entries))
    if dims[0] != 1:
        raise ValueError("no unit entry (dimension 1) in type")
    return FusionType(dims)


def expand_compact(c: CompactType) -> FusionType:
    """Expand (dimension, multiplicity) pairs into a flat canonical type."""
    flat: list[int] = []
    for pair in c.pairs:
        dim, mult = pair
        if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
            raise ValueError(
                f"multiplicity {mult!r} for dimension {dim!r} must be a positive integer"
            )
        flat.extend([dim] * mult)
    return make_type(flat)


def compact_type(t: FusionType) -> CompactType:
    """Run-length regrouping; inverse of expand_compact on canonical input."""
    return CompactType(tuple(zip(t.unique_dims, t.multiplicities)))
