"""Vertex sets as Python ints (bit i set <=> vertex i present)."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex id {v}")
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def size(mask: int) -> int:
    return mask.bit_count()


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def sort_key(mask: int) -> tuple[int, ...]:
    # lexicographic order on sorted member tuples
    return tuple(members(mask))


def minimal_sets(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members, deduplicated, in lexicographic order."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    keep: list[int] = []
    for m in uniq:
        if not any(k & ~m == 0 for k in keep):
            keep.append(m)
    return sorted(keep, key=sort_key)


def maximal_sets(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members, deduplicated, in lexicographic order."""
    uniq = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    keep: list[int] = []
    for m in uniq:
        if not any(m & ~k == 0 for k in keep):
            keep.append(m)
    return sorted(keep, key=sort_key)


def is_antichain(masks: Iterable[int]) -> bool:
    ms = list(masks)
    if len(set(ms)) != len(ms):
        return False
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if a & ~b == 0 or b & ~a == 0:
                return False
    return True


def compress(mask: int, keep: int) -> int:
    """Re-index ``mask`` onto the dense positions of ``keep``.

    Bits of ``mask`` outside ``keep`` are dropped; the j-th smallest member of
    ``keep`` becomes position j.
    """
    out = 0
    j = 0
    for v in members(keep):
        if mask >> v & 1:
            out |= 1 << j
        j += 1
    return out


def expand(mask: int, keep: int) -> int:
    """Inverse of :func:`compress`: position j goes to the j-th member of ``keep``."""
    positions = members(keep)
    out = 0
    for j in members(mask):
        out |= 1 << positions[j]
    return out


def drop_vertex(mask: int, v: int) -> int:
    """Remove vertex ``v`` and shift higher vertices down by one."""
    low = mask & ((1 << v) - 1)
    high = mask >> (v + 1)
    return low | (high << v)


def full(n: int) -> int:
    return (1 << n) - 1
