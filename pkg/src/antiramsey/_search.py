"""Bitset depth-first search for loose/linear paths and cycles.

Edges are colex ranks; sets of edges are Python ints used as bitsets.  The
search extends a sequence one edge at a time.  Candidates for the next edge are
``nbr(last) & ~forbid & ~used`` where ``forbid`` collects every edge meeting a
non-adjacent earlier edge and ``used`` every edge sharing a color with a chosen
edge (rainbow mode only).  The final position is resolved with a single bitset
test instead of a loop.

Canonical forms: paths require ``rank(e_1) < rank(e_k)``; cycles put the
minimum-rank edge first and require ``rank(e_2) < rank(e_k)``.  Shards are the
first-edge choices in rank order.  A sequential run over the shards and a
parallel run merged in shard order return the same status, witness and node
count.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import multiprocessing as mp

from .hypergraph import all_rsets, iter_bits, vertex_masks

FOUND, NONE, INDETERMINATE = "found", "none", "indeterminate"


class _BudgetExceeded(Exception):
    pass


class SearchContext:
    """Precomputed bitsets for one host (and optional coloring)."""

    def __init__(self, n, r, host_bits, color_of=None):
        self.n, self.r = n, r
        self.host = host_bits
        masks = vertex_masks(n, r)
        touch = [0] * n
        for i in iter_bits(host_bits):
            m = masks[i]
            while m:
                low = m & -m
                touch[low.bit_length() - 1] |= 1 << i
                m ^= low
        self.touch = touch
        self.rsets = all_rsets(n, r)
        self._meet = {}
        self._lin = {}
        self.color_of = color_of
        self._color_bits = None
        if color_of is not None:
            classes = {}
            for i in iter_bits(host_bits):
                classes[color_of[i]] = classes.get(color_of[i], 0) | (1 << i)
            self._color_bits = classes

    def meet(self, e):
        """Host edges sharing at least one vertex with ``e`` (``e`` included if present)."""
        m = self._meet.get(e)
        if m is None:
            m = 0
            for v in self.rsets[e]:
                m |= self.touch[v]
            self._meet[e] = m
        return m

    def loose_nbr(self, e):
        return self.meet(e) & ~(1 << e)

    def linear_nbr(self, e):
        m = self._lin.get(e)
        if m is None:
            vs = self.rsets[e]
            m = 0
            for v in vs:
                others = 0
                for w in vs:
                    if w != v:
                        others |= self.touch[w]
                m |= self.touch[v] & ~others
            self._lin[e] = m
        return m

    def same_color(self, e):
        if self._color_bits is None:
            return 0
        return self._color_bits[self.color_of[e]]


@dataclass(frozen=True)
class ShardResult:
    shard: int
    status: str
    nodes: int
    sequence: tuple = ()


def _run_path(ctx, k, linear, first, budget):
    nbr = ctx.linear_nbr if linear else ctx.loose_nbr
    meet, same = ctx.meet, ctx.same_color
    above_first = ctx.host & ~((1 << (first + 1)) - 1)
    seq = [first]
    nodes = 0

    def rec(last, forbid, used, depth):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExceeded
        cand = nbr(last) & ~forbid & ~used
        if depth == k - 1:
            cand &= above_first
            if cand:
                seq.append((cand & -cand).bit_length() - 1)
                return True
            return False
        nxt_forbid = forbid | meet(last)
        for e in iter_bits(cand):
            seq.append(e)
            if rec(e, nxt_forbid, used | same(e), depth + 1):
                return True
            seq.pop()
        return False

    try:
        found = rec(first, 0, same(first), 1)
    except _BudgetExceeded:
        return ShardResult(first, INDETERMINATE, nodes)
    return ShardResult(first, FOUND if found else NONE, nodes, tuple(seq) if found else ())


def _run_cycle(ctx, k, linear, first, budget):
    nbr = ctx.linear_nbr if linear else ctx.loose_nbr
    meet, same = ctx.meet, ctx.same_color
    allowed = ctx.host & ~((1 << (first + 1)) - 1)
    first_meet = meet(first)
    closing = nbr(first)
    seq = [first]
    nodes = 0

    def rec(last, forbid, used, depth):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExceeded
        cand = nbr(last) & allowed & ~forbid & ~used
        if depth == k - 1:
            cand &= closing & ~((1 << (seq[1] + 1)) - 1)
            if cand:
                seq.append((cand & -cand).bit_length() - 1)
                return True
            return False
        if depth >= 2:
            cand &= ~first_meet
        nxt_forbid = forbid | meet(last) if depth >= 2 else forbid
        for e in iter_bits(cand):
            seq.append(e)
            if rec(e, nxt_forbid, used | same(e), depth + 1):
                return True
            seq.pop()
        return False

    try:
        found = rec(first, 0, same(first), 1)
    except _BudgetExceeded:
        return ShardResult(first, INDETERMINATE, nodes)
    return ShardResult(first, FOUND if found else NONE, nodes, tuple(seq) if found else ())


def run_shard(ctx, shape, k, linear, first, budget):
    if shape == "path":
        return _run_path(ctx, k, linear, first, budget)
    return _run_cycle(ctx, k, linear, first, budget)


def _run_chunk(ctx, shape, k, linear, shards, budget):
    out = []
    used = 0
    for s in shards:
        res = run_shard(ctx, shape, k, linear, s, budget - used)
        out.append(res)
        used += res.nodes
        if res.status != NONE:
            break
    return out


_WORKER_CTX = None


def _init_worker(args):
    global _WORKER_CTX
    _WORKER_CTX = SearchContext(*args)


def _worker_chunk(shape, k, linear, shards, budget):
    return _run_chunk(_WORKER_CTX, shape, k, linear, shards, budget)


def merge_shards(results, order, budget):
    """Replay shard results in shard order; returns (status, nodes, sequence)."""
    by_shard = {res.shard: res for res in results}
    used = 0
    for s in order:
        res = by_shard[s]
        if res.status == INDETERMINATE or used + res.nodes > budget:
            return INDETERMINATE, budget, ()
        used += res.nodes
        if res.status == FOUND:
            return FOUND, used, res.sequence
    return NONE, used, ()


def search(n, r, host_bits, shape, k, linear, budget, color_of=None, workers=1, ctx=None):
    """Run the sharded search; ``workers > 1`` uses a process pool with strided shards."""
    if ctx is None:
        ctx = SearchContext(n, r, host_bits, color_of)
    shards = list(iter_bits(host_bits))
    if workers <= 1 or len(shards) < 2:
        results = _run_chunk(ctx, shape, k, linear, shards, budget)
    else:
        workers = min(workers, len(shards))
        chunks = [shards[w::workers] for w in range(workers)]
        method = "fork" if "fork" in mp.get_all_start_methods() else None
        with ProcessPoolExecutor(
            max_workers=workers,
            mp_context=mp.get_context(method),
            initializer=_init_worker,
            initargs=((n, r, host_bits, color_of),),
        ) as pool:
            futures = [pool.submit(_worker_chunk, shape, k, linear, c, budget) for c in chunks]
            results = [res for f in futures for res in f.result()]
    return merge_shards(results, shards, budget)


def default_workers():
    return os.cpu_count() or 1
