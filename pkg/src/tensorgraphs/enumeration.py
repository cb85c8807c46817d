"""Isomorphism classes of closed ``D``-colored graphs on ``2p`` vertices.

Color 1 is gauge-fixed to the identity, so a graph is a tuple
``(tau_2, ..., tau_D)`` of permutations up to simultaneous conjugation.
``tau_2`` only needs one representative per cycle type.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from pathlib import Path
from typing import Iterator, Optional

from .graphs import ColoredGraph, canonical_form
from .perm import Perm, from_cycles, identity, orbits

CACHE_ENV = "TENSORGRAPHS_CACHE"
TUPLE_LIMIT = 3_000_000


class InfeasibleRequest(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationRequest:
    rank: int
    half_order: int
    connected_only: bool = True


def partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def class_representative(cycle_type: tuple[int, ...]) -> Perm:
    n = sum(cycle_type)
    cycs, start = [], 0
    for k in cycle_type:
        cycs.append(range(start, start + k))
        start += k
    return from_cycles(n, cycs)


def tuple_count(rank: int, p: int) -> int:
    if rank < 2:
        return 0
    return sum(1 for _ in partitions(p)) * factorial(p) ** (rank - 2)


def check_feasible(req: EnumerationRequest) -> None:
    if req.rank < 2:
        raise InfeasibleRequest(f"rank must be at least 2, got {req.rank}")
    if req.half_order < 1:
        raise InfeasibleRequest(f"half order must be at least 1, got {req.half_order}")
    n = tuple_count(req.rank, req.half_order)
    if n > TUPLE_LIMIT:
        raise InfeasibleRequest(
            f"D={req.rank}, p={req.half_order} needs {n} candidate tuples; limit is {TUPLE_LIMIT}")


def _classes_for(rank: int, p: int, connected_only: bool, tau2: Perm) -> dict:
    found: dict = {}
    ident = identity(p)
    for rest in product(permutations(range(p)), repeat=rank - 2):
        taus = (tau2,) + rest
        if connected_only and len(orbits(p, taus)) != 1:
            continue
        g = ColoredGraph((ident,) + taus)
        cf = canonical_form(g)
        if cf.key not in found:
            found[cf.key] = cf.graph
    return found


def _worker(args):
    return _classes_for(*args)


def enumerate_graphs(req: EnumerationRequest, jobs: int = 1,
                     cache_dir: str | os.PathLike | None = None) -> list[ColoredGraph]:
    """One canonical representative per class, sorted by canonical key."""
    check_feasible(req)
    cache = _cache_path(req, cache_dir)
    if cache is not None and cache.exists():
        from .io import load_graph_list
        return load_graph_list(cache.read_text())
    D, p = req.rank, req.half_order
    tasks = [(D, p, req.connected_only, class_representative(ct)) for ct in partitions(p)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_worker, tasks))
    else:
        parts = [_worker(t) for t in tasks]
    merged: dict = {}
    for part in parts:
        for k, g in part.items():
            merged.setdefault(k, g)
    out = [merged[k] for k in sorted(merged)]
    if cache is not None:
        from .io import dump_graph_list
        cache.parent.mkdir(parents=True, exist_ok=True)
        cache.write_text(dump_graph_list(out))
    return out


def stream_graphs(req: EnumerationRequest) -> Iterator[ColoredGraph]:
    """Yield each class the first time it is met (deterministic order)."""
    check_feasible(req)
    seen = set()
    for ct in partitions(req.half_order):
        for k, g in _classes_for(req.rank, req.half_order, req.connected_only,
                                 class_representative(ct)).items():
            if k not in seen:
                seen.add(k)
                yield g


def count_classes(rank: int, p: int, connected_only: bool = True, jobs: int = 1) -> int:
    return len(enumerate_graphs(EnumerationRequest(rank, p, connected_only), jobs=jobs))


def _cache_path(req: EnumerationRequest, cache_dir) -> Path | None:
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV)
    if not cache_dir:
        return None
    kind = "connected" if req.connected_only else "all"
    return Path(cache_dir) / f"D{req.rank}-p{req.half_order}-{kind}.json"


def multiset_transform(connected: list[int]) -> list[int]:
    """Counts of multisets from counts of connected objects by size.

    ``connected[k-1]`` is the number of connected classes of size ``k``; the
    result lists the number of all classes for sizes ``0..len(connected)``.
    """
    n = len(connected)
    a = [0] + list(connected)
    c = [0] * (n + 1)
    for k in range(1, n + 1):
        c[k] = sum(d * a[d] for d in range(1, k + 1) if k % d == 0)
    b = [1] + [0] * n
    for m in range(1, n + 1):
        b[m] = sum(c[k] * b[m - k] for k in range(1, m + 1)) // m
    return b


def count_correlation_functions(rank: int, p: int) -> int:
    """Number of classes of possibly disconnected graphs with ``2p`` vertices."""
    connected = [count_classes(rank, q) for q in range(1, p + 1)]
    return multiset_transform(connected)[p]
