"""Brute-force ground truth for small instances.

Set partitions are enumerated as restricted-growth strings, which lists
every partition exactly once in a canonical order.  These enumerations are
test and CLI tooling only; the sweep engine never calls them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import SizeLimitError
from .graph import Graph
from .partition import Partition
from .rational import positive_fraction

MAX_EXHAUSTIVE = 12

BELL = (1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597)


def set_partitions(n: int) -> Iterator[list[int]]:
    """Yield every assignment of n items to blocks, restricted-growth order."""
    if n <= 0:
        return
    a = [0] * n
    b = [1] * n
    while True:
        yield a.copy()
        i = n - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        nb = b[i] + (1 if a[i] == b[i] else 0)
        for j in range(i + 1, n):
            a[j] = 0
            b[j] = nb


@dataclass(frozen=True)
class OracleResult:
    best_q: float
    best_partition: Partition
    partitions_examined: int


def best_partition(graph: Graph, t) -> OracleResult:
    """Exhaustive optimum of the score at resolution t.

    Ties keep the first maximizer in enumeration order.  Refuses vertex
    counts above MAX_EXHAUSTIVE.
    """
    n = graph.n
    if n > MAX_EXHAUSTIVE:
        raise SizeLimitError(f"exhaustive search limited to {MAX_EXHAUSTIVE} vertices")
    tt = float(positive_fraction(t))
    z = graph.z
    zz = z * z
    deg = graph.deg
    cross = [(u, v, w) for u, v, w in graph.edges() if u != v]
    diag_total = sum(graph.adj[v].get(v, 0) for v in range(n))
    best_q = None
    best_a = None
    count = 0
    for a in set_partitions(n):
        count += 1
        w_int = diag_total
        for u, v, w in cross:
            if a[u] == a[v]:
                w_int += 2 * w
        sums = [0] * (max(a) + 1)
        for v in range(n):
            sums[a[v]] += deg[v]
        deg_sq = sum(s * s for s in sums)
        q = w_int / z - tt * (deg_sq / zz)
        if best_q is None or q > best_q:
            best_q = q
            best_a = a
    return OracleResult(best_q, Partition(best_a), count)


def is_coarsening_optimal(graph: Graph, partition: Partition, t) -> bool:
    """Check, by enumeration, that no coarsening scores higher at t.

    Compares integer-scaled scores, so the verdict is exact.  Refuses
    partitions with more than MAX_EXHAUSTIVE blocks.
    """
    k = len(partition)
    if k > MAX_EXHAUSTIVE:
        raise SizeLimitError(f"exhaustive search limited to {MAX_EXHAUSTIVE} blocks")
    tf = positive_fraction(t)
    tn, td = tf.numerator, tf.denominator
    z = graph.z
    assign = partition.assign
    block_deg = [0] * k
    for v in range(graph.n):
        block_deg[assign[v]] += graph.deg[v]
    intra = 0
    cross: dict[tuple[int, int], int] = {}
    for u, v, w in graph.edges():
        cu, cv = assign[u], assign[v]
        if cu == cv:
            intra += w if u == v else 2 * w
        else:
            key = (cu, cv) if cu < cv else (cv, cu)
            cross[key] = cross.get(key, 0) + w
    cross_items = list(cross.items())

    def scaled_score(rgs: list[int]) -> int:
        # td * z * W - tn * S, an integer proportional to the score
        w_int = intra
        for (a, b), w in cross_items:
            if rgs[a] == rgs[b]:
                w_int += 2 * w
        sums = [0] * (max(rgs) + 1)
        for c in range(k):
            sums[rgs[c]] += block_deg[c]
        return td * z * w_int - tn * sum(s * s for s in sums)

    base = scaled_score(list(range(k)))
    for rgs in set_partitions(k):
        if scaled_score(rgs) > base:
            return False
    return True
