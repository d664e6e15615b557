"""Exact desk-scale Turan and anti-Ramsey oracles.

Both oracles work on the explicit list of pattern copies inside K_n^r, each
copy stored as a bitmask over edge ranks.  Copies are enumerated by a plain
set-based DFS that shares no code with the bitset search in :mod:`._search`.

The search frontier is cut into shards (fixed-length prefixes of the decision
sequence).  Every shard is solved on its own, seeded only with the warm-start
value, so the result does not depend on how shards are spread over workers.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Sequence, Union

from .coloring import EdgeColoring
from .hypergraph import Hypergraph, all_rsets
from .patterns import PatternSpec, classify_sequence

UNATTAINABLE = "unattainable"

EX_EDGE_LIMIT = 40
AR_EDGE_LIMIT = 12


class OracleLimitError(ValueError):
    """Instance too large for exact mode."""


@dataclass
class OracleResult:
    value: Union[int, str]
    witness: object = None
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        w = self.witness
        if isinstance(w, Hypergraph):
            wj = {"kind": "hypergraph", "edges": [[v + 1 for v in e] for e in w.edge_sets()]}
        elif isinstance(w, EdgeColoring):
            wj = {"kind": "coloring", "colors": list(w.color_of)}
        else:
            wj = None
        return {"value": self.value, "witness": wj, "stats": self.stats}


def _compatible(spec, seq, e):
    """Can ``e`` be appended to the partial sequence ``seq`` (closing checked later)?"""
    j = len(seq)
    for i, f in enumerate(seq):
        common = len(e & f)
        if i == j - 1:
            if common == 0 or (spec.linear and common != 1):
                return False
        elif spec.shape == "cycle" and i == 0 and j == spec.k - 1:
            if common == 0 or (spec.linear and common != 1):
                return False
        elif common:
            return False
    return True


def all_copies(n: int, r: int, spec: PatternSpec) -> list[int]:
    """Distinct copies of ``spec`` in K_n^r, as sorted bitmasks over edge ranks."""
    edges = [frozenset(e) for e in all_rsets(n, r)]
    found = set()

    def rec(seq, idx):
        if len(seq) == spec.k:
            if classify_sequence(seq, spec):
                found.add(sum(1 << i for i in idx))
            return
        for i, e in enumerate(edges):
            if i not in idx and _compatible(spec, seq, e):
                rec(seq + [e], idx + [i])

    rec([], [])
    return sorted(found)


def _family_copies(n, r, family):
    copies = set()
    for spec in family:
        copies.update(all_copies(n, r, spec))
    return sorted(copies)


def _map(fn, tasks, workers):
    if workers <= 1:
        return [fn(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*tasks)))


# -- Turan oracle ---------------------------------------------------------------

def _ex_shard(m, by_max, prefix, warm):
    """Max F-free edge set among extensions of ``prefix`` (decisions on edges 0..len-1).

    Returns (best, mask, nodes); best is -1 when nothing beats ``warm``.
    """
    best, best_mask, nodes = warm, None, 0

    def addable(chosen, i):
        for c in by_max[i]:
            if c & ~chosen == 1 << i:
                return False
        return True

    chosen = 0
    for i, take in enumerate(prefix):
        if take:
            if not addable(chosen, i):
                return -1, None, 0
            chosen |= 1 << i

    def rec(i, chosen, size):
        nonlocal best, best_mask, nodes
        nodes += 1
        if i == m:
            if size > best:
                best, best_mask = size, chosen
            return
        if size + (m - i) <= best:
            return
        if addable(chosen, i):
            rec(i + 1, chosen | (1 << i), size + 1)
        rec(i + 1, chosen, size)

    rec(len(prefix), chosen, bin(chosen).count("1"))
    if best_mask is None:
        return -1, None, nodes
    return best, best_mask, nodes


def _prefixes(depth, m):
    depth = min(depth, m - 1)
    out = []
    for bits in range(1 << depth):
        out.append((1,) + tuple((bits >> (depth - 1 - j)) & 1 for j in range(depth)))
    out.sort(reverse=True)  # include-first order
    return out


def _star_mask(n, r, by_max, m):
    """Greedy warm start: all edges through vertex 0, keeping F-freeness edge by edge."""
    chosen = 0
    for i, e in enumerate(all_rsets(n, r)):
        if 0 in e and all(c & ~chosen != 1 << i for c in by_max[i]):
            chosen |= 1 << i
    return chosen


def brute_ex(
    n: int,
    r: int,
    family: Sequence[PatternSpec],
    limit: int = EX_EDGE_LIMIT,
    workers: int = 1,
    split_depth: int = 4,
) -> OracleResult:
    """Exact ex(n, r, family) by branch and bound over edges in rank order.

    Edge 0 is always taken: K_n^r is edge-transitive, so some optimum
    contains it.  Raises :class:`OracleLimitError` above ``limit`` edges.
    """
    m = comb(n, r)
    if m > limit:
        raise OracleLimitError(f"C({n},{r}) = {m} edges exceeds the exact-mode limit {limit}")
    start = time.perf_counter()
    copies = _family_copies(n, r, family)
    by_max = [[] for _ in range(m)]
    for c in copies:
        by_max[c.bit_length() - 1].append(c)
    if not copies or m == 0:
        witness = Hypergraph.complete(n, r)
        return OracleResult(m, witness, {"copies": len(copies), "nodes": 0,
                                         "seconds": time.perf_counter() - start})
    warm_mask = _star_mask(n, r, by_max, m)
    warm = bin(warm_mask).count("1")
    tasks = [(m, by_max, p, warm) for p in _prefixes(split_depth, m)]
    results = _map(_ex_shard, tasks, workers)
    best, best_mask = warm, warm_mask
    for value, mask, _ in results:
        if value > best:
            best, best_mask = value, mask
    ranks = [i for i in range(m) if best_mask >> i & 1]
    return OracleResult(
        best,
        Hypergraph.from_ranks(n, r, ranks),
        {"copies": len(copies), "nodes": sum(x[2] for x in results), "warm_start": warm,
         "shards": len(tasks), "seconds": time.perf_counter() - start},
    )


def brute_ex_graph_paths(n: int, k: int, workers: int = 1) -> OracleResult:
    """Exact maximum edges of an n-vertex graph with no path of k edges (n <= 10)."""
    if n > 10:
        raise OracleLimitError("graph-path oracle supports n <= 10")
    return brute_ex(n, 2, [PatternSpec("path", "loose", k)], limit=comb(10, 2), workers=workers)


# -- anti-Ramsey oracle -----------------------------------------------------------

def _ar_shard(m, by_max, prefix, warm):
    """Max colors over restricted growth strings extending ``prefix`` with no rainbow copy."""
    best, best_colors, nodes = warm, None, 0
    colors = [0] * m
    edge_lists = [[[j for j in range(m) if c >> j & 1] for c in by_max[i]] for i in range(m)]

    def rainbow_done(i):
        for members in edge_lists[i]:
            seen = set()
            for j in members:
                if colors[j] in seen:
                    break
                seen.add(colors[j])
            else:
                return True
        return False

    top = 0
    for i, a in enumerate(prefix):
        if a > top + 1 or (i == 0 and a != 0):
            return -1, None, 0
        colors[i] = a
        if rainbow_done(i):
            return -1, None, 0
        top = max(top, a)

    def rec(i, used):
        nonlocal best, best_colors, nodes
        nodes += 1
        if i == m:
            if used > best:
                best, best_colors = used, list(colors)
            return
        if used + (m - i) <= best:
            return
        for a in range(used, -1, -1):  # new color first
            colors[i] = a
            if not rainbow_done(i):
                rec(i + 1, max(used, a + 1))
        colors[i] = 0

    rec(len(prefix), max(prefix) + 1)
    if best_colors is None:
        return -1, None, nodes
    return best, best_colors, nodes


def _rgs_prefixes(depth, m):
    depth = max(1, min(depth, m))
    out = [(0,)]
    for _ in range(depth - 1):
        out = [p + (a,) for p in out for a in range(max(p) + 2)]
    out.sort(key=lambda p: tuple(-x for x in p))
    return out


def brute_ar(
    n: int,
    r: int,
    family: Sequence[PatternSpec],
    limit: int = AR_EDGE_LIMIT,
    workers: int = 1,
    split_depth: int = 4,
) -> OracleResult:
    """Exact ar(n, r, family) by restricted-growth enumeration of edge partitions.

    Finds the largest number M of colors in a coloring of K_n^r with no rainbow
    family member and returns ``M + 1`` with an M-color witness.  If K_n^r has
    no copy at all the result is ``UNATTAINABLE``.
    """
    m = comb(n, r)
    if m > limit:
        raise OracleLimitError(f"C({n},{r}) = {m} edges exceeds the partition-mode limit {limit}")
    start = time.perf_counter()
    copies = _family_copies(n, r, family)
    if not copies:
        return OracleResult(UNATTAINABLE, None, {"copies": 0, "nodes": 0,
                                                 "seconds": time.perf_counter() - start})
    by_max = [[] for _ in range(m)]
    for c in copies:
        by_max[c.bit_length() - 1].append(c)
    warm, warm_colors = 1, [0] * m  # monochromatic: never rainbow for k >= 2
    tasks = [(m, by_max, p, warm) for p in _rgs_prefixes(split_depth, m)]
    results = _map(_ar_shard, tasks, workers)
    best, best_colors = warm, warm_colors
    for value, cols, _ in results:
        if value > best:
            best, best_colors = value, cols
    return OracleResult(
        best + 1,
        EdgeColoring(n, r, best_colors),
        {"copies": len(copies), "max_rainbow_free_colors": best,
         "nodes": sum(x[2] for x in results), "shards": len(tasks),
         "seconds": time.perf_counter() - start},
    )
