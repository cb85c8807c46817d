"""Small helpers for permutations stored as tuples of images on ``0..n-1``."""
from __future__ import annotations

from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def compose(a: Sequence[int], b: Sequence[int]) -> Perm:
    """Return ``a o b``, i.e. ``i -> a[b[i]]``."""
    return tuple(a[j] for j in b)


def is_permutation(p: Sequence[int], n: int | None = None) -> bool:
    if n is None:
        n = len(p)
    if len(p) != n:
        return False
    seen = [False] * n
    for j in p:
        if not isinstance(j, int) or j < 0 or j >= n or seen[j]:
            return False
        seen[j] = True
    return True


def cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycle decomposition, each cycle starting at its smallest element."""
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_count(p: Sequence[int]) -> int:
    n = len(p)
    seen = [False] * n
    count = 0
    for i in range(n):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return count


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def from_cycles(n: int, cycs: Iterable[Sequence[int]]) -> Perm:
    """Build a permutation of ``0..n-1`` from disjoint cycles."""
    img = list(range(n))
    for c in cycs:
        for k, i in enumerate(c):
            img[i] = c[(k + 1) % len(c)]
    return tuple(img)


def orbits(n: int, gens: Sequence[Sequence[int]]) -> list[list[int]]:
    """Orbits of the group generated by ``gens`` on ``0..n-1``, sorted by minimum."""
    comp = [-1] * n
    out: list[list[int]] = []
    for s in range(n):
        if comp[s] >= 0:
            continue
        k = len(out)
        comp[s] = k
        orbit = [s]
        idx = 0
        while idx < len(orbit):
            v = orbit[idx]
            idx += 1
            for g in gens:
                w = g[v]
                if comp[w] < 0:
                    comp[w] = k
                    orbit.append(w)
        out.append(sorted(orbit))
    return out
