"""Core/periphery diagnostics and constructive rainbow path extension.

Given a hypergraph ``H`` and a core ``L``, a pair ``(u, v)`` with ``u`` in L
and ``v`` outside is *small* when ``d_H(u, v) <= tau * C(n, r-3)``.  ``S``
holds the non-core vertices in at least one small pair, ``S_bar`` the rest.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

import numpy as np

from .coloring import EdgeColoring, is_rainbow
from .hypergraph import Hypergraph, _rank_table, all_rsets, pair_degree
from .patterns import CopyWitness, PatternSpec, classify_sequence


class StructureError(ValueError):
    pass


class ExtensionPreconditionError(StructureError):
    """The input does not satisfy the hypotheses of the extension."""


class ExtensionFailure(RuntimeError):
    """No admissible edge through some big pair; ``pair`` names it (or is None)."""

    def __init__(self, msg, pair=None):
        super().__init__(msg)
        self.pair = pair


def small_threshold(n: int, r: int, tau: int) -> int:
    if r < 3:
        raise StructureError("small/big pairs need r >= 3")
    return tau * comb(n, r - 3)


def tau_small_pairs(h: Hypergraph, core: Iterable[int], tau: int) -> list[tuple[int, int]]:
    """All (u, v) with u in the core, v outside, and d_H(u, v) <= tau * C(n, r-3)."""
    core = sorted(set(core))
    if tau < 1:
        raise StructureError("tau must be positive")
    limit = small_threshold(h.n, h.r, tau)
    cs = set(core)
    return [(u, v) for u in core for v in range(h.n)
            if v not in cs and pair_degree(h, u, v) <= limit]


def small_degree(h: Hypergraph, core: Iterable[int], tau: int, v: int) -> int:
    """Number of core vertices forming a small pair with ``v``."""
    core = set(core)
    if v in core:
        raise StructureError(f"vertex {v} is in the core")
    limit = small_threshold(h.n, h.r, tau)
    return sum(1 for u in core if pair_degree(h, u, v) <= limit)


@dataclass(frozen=True)
class CoreDecomposition:
    h: Hypergraph
    core: frozenset
    tau: int
    S: frozenset
    S_bar: frozenset

    @property
    def reduced(self) -> Hypergraph:
        """H - L: the edges avoiding the core."""
        return self.h.remove_vertices(self.core)


def decompose(h: Hypergraph, core: Iterable[int], tau: int) -> CoreDecomposition:
    core = frozenset(core)
    small = {v for _, v in tau_small_pairs(h, core, tau)}
    S = frozenset(small)
    S_bar = frozenset(range(h.n)) - core - S
    return CoreDecomposition(h, core, tau, S, S_bar)


@dataclass(frozen=True)
class EdgeClassCounts:
    cross: int
    missing: int
    by_s_bar: tuple  # |E_i| for i = 0..r
    f1: int
    f2plus: int
    reduced_edges: int


@dataclass(frozen=True)
class ShadowSplit:
    f1: frozenset
    f2plus: dict  # (r-1)-set -> degree >= 2
    degree_sum: int

    def bound(self, n: int) -> int:
        """|F_1| + n |F_2+|, an upper bound on |E_1|."""
        return len(self.f1) + n * len(self.f2plus)


def shadow_degree_split(e1: Iterable[Sequence[int]], S: Iterable[int]) -> ShadowSplit:
    """Split the (r-1)-sets ``e & S`` of edges in ``e1`` by how many edges contain them."""
    S = frozenset(S)
    deg = Counter()
    count = 0
    for e in e1:
        inner = tuple(sorted(v for v in e if v in S))
        if len(inner) != len(e) - 1:
            raise StructureError(f"edge {tuple(e)} has {len(e) - len(inner)} vertices outside S, expected 1")
        deg[inner] += 1
        count += 1
    f1 = frozenset(f for f, d in deg.items() if d == 1)
    f2 = {f: d for f, d in deg.items() if d >= 2}
    total = len(f1) + sum(f2.values())
    if total != count:
        raise AssertionError("shadow degree sum does not match |E_1|")
    return ShadowSplit(f1, f2, total)


def edge_class_counts(h: Hypergraph, core: Iterable[int], S_bar: Iterable[int]) -> EdgeClassCounts:
    """Crossing/missing counts w.r.t. the core and the E_i partition of H - L.

    Missing edges are counted by enumerating r-sets with exactly one core
    vertex, so the identity ``cross + missing = |L| C(n-|L|, r-1)`` is a real check.
    """
    core = frozenset(core)
    S_bar = frozenset(S_bar)
    if core & S_bar:
        raise StructureError("core and S_bar overlap")
    if any(not 0 <= v < h.n for v in core | S_bar):
        raise StructureError("vertex outside [0, n)")
    n, r = h.n, h.r
    S = frozenset(range(n)) - core - S_bar
    edges = h.edge_sets()
    cross = sum(1 for e in edges if len(core.intersection(e)) == 1)
    outside = [v for v in range(n) if v not in core]
    table = _rank_table(n, r)
    missing = 0
    for u in sorted(core):
        for rest in combinations(outside, r - 1):
            if table[tuple(sorted(rest + (u,)))] not in h:
                missing += 1
    expected = len(core) * comb(n - len(core), r - 1)
    if cross + missing != expected:
        raise AssertionError(f"cross {cross} + missing {missing} != {expected}")
    reduced = [e for e in edges if not core.intersection(e)]
    by = [0] * (r + 1)
    e1 = []
    for e in reduced:
        i = len(S_bar.intersection(e))
        by[i] += 1
        if i == 1:
            e1.append(e)
    if sum(by) != len(reduced):
        raise AssertionError("E_i partition does not cover H - L")
    split = shadow_degree_split(e1, S)
    return EdgeClassCounts(cross, missing, tuple(by), len(split.f1), len(split.f2plus), len(reduced))


def greedy_core_detect(h: Hypergraph, t: int) -> tuple[int, ...]:
    """Heuristic core: add, t times, the vertex giving the most crossing edges.

    No optimality claim.  Ties go to the lowest vertex.
    """
    if not 0 <= t < h.n:
        raise StructureError(f"need 0 <= t < n, got t={t}")
    masks = [sum(1 << v for v in e) for e in h.edge_sets()]
    core_mask = 0
    chosen = []
    for _ in range(t):
        best, best_v = -1, None
        for v in range(h.n):
            if core_mask >> v & 1:
                continue
            m = core_mask | 1 << v
            score = sum(1 for em in masks if bin(em & m).count("1") == 1)
            if score > best:
                best, best_v = score, v
        chosen.append(best_v)
        core_mask |= 1 << best_v
    return tuple(sorted(chosen))


# -- constructive extension ---------------------------------------------------------

def _edges_through(h: Hypergraph, a: int, b: int):
    sb = set(h.incidence[b])
    return [i for i in h.incidence[a] if i in sb]


def extend_rainbow(
    coloring: EdgeColoring,
    h: Hypergraph,
    core: Sequence[int],
    path: CopyWitness,
    mode: str,
    i: int,
) -> CopyWitness:
    """Extend a rainbow loose path through big pairs at the core.

    ``h`` must be rainbow under ``coloring`` and ``path`` a loose path of
    length l inside ``h - core``.  With t = |core| and tau = r(l + 2t):

    * ``mode="cycle"`` needs an end pair {x, y} in S_bar and returns a rainbow
      loose cycle of length l + 2i, closing the path through
      x, v_1, u_1, ..., u_{i-1}, v_i, y;
    * ``mode="path"`` needs an end point x in S_bar and returns a rainbow loose
      path of length l + 2i ending in x, v_1, u_1, ..., v_i, u_i.

    The u_j are the lowest vertices of S_bar outside the path.  Each big pair
    takes the first edge of ``h`` through it in colex order that avoids all used
    vertices and colors.
    """
    core = tuple(sorted(set(core)))
    t = len(core)
    n, r = h.n, h.r
    spec = path.spec
    ell = spec.k
    if mode not in ("path", "cycle"):
        raise ExtensionPreconditionError(f"unknown mode {mode!r}")
    if not 1 <= i <= t:
        raise ExtensionPreconditionError(f"i must lie in [1, t={t}], got {i}")
    if (coloring.n, coloring.r) != (n, r):
        raise ExtensionPreconditionError("coloring and hypergraph disagree on (n, r)")
    if spec.shape != "path" or spec.tightness != "loose" or not classify_sequence(path.edges, spec):
        raise ExtensionPreconditionError("input is not a loose path")
    if not is_rainbow(coloring, h.edges):
        raise ExtensionPreconditionError("H is not rainbow")
    core_set = set(core)
    for e in path.edges:
        if e not in h:
            raise ExtensionPreconditionError(f"path edge {e} not in H")
        if core_set.intersection(e):
            raise ExtensionPreconditionError(f"path edge {e} meets the core")
    tau = r * (ell + 2 * t)
    dec = decompose(h, core, tau)
    if 2 * len(dec.S) > n:
        raise ExtensionPreconditionError(f"|S| = {len(dec.S)} exceeds n/2")
    edges = list(path.edges)
    degree = Counter(v for e in edges for v in e)
    first_end = sorted(v for v in edges[0] if degree[v] == 1)
    last_end = sorted(v for v in edges[-1] if degree[v] == 1)
    s_bar = dec.S_bar
    if mode == "cycle":
        pair = next(((x, y) for x in first_end for y in last_end if x in s_bar and y in s_bar), None)
        if pair is None:
            raise ExtensionPreconditionError("no end pair inside S_bar")
        x, y = pair
    else:
        ends = sorted(v for v in set(first_end) | set(last_end) if v in s_bar)
        if not ends:
            raise ExtensionPreconditionError("no end point inside S_bar")
        x, y = ends[0], None
        if x in first_end and x not in last_end:
            edges.reverse()
    path_vertices = {v for e in edges for v in e}
    free = [v for v in sorted(s_bar) if v not in path_vertices]
    if len(free) < t:
        raise ExtensionFailure(f"only {len(free)} vertices of S_bar outside the path, need {t}")
    us = free[:t]
    vs = core
    chain = [x]
    for j in range(i):
        chain.append(vs[j])
        if mode == "path" or j < i - 1:
            chain.append(us[j])
    if mode == "cycle":
        chain.append(y)
    pairs = list(zip(chain, chain[1:]))

    used = path_vertices | core_set | {x} | set(us) | ({y} if y is not None else set())
    used_colors = {coloring.color(e) for e in edges}
    rsets = all_rsets(n, r)
    new = []
    for a, b in pairs:
        pick = None
        for idx in _edges_through(h, a, b):
            e = rsets[idx]
            if any(w in used for w in e if w != a and w != b):
                continue
            if coloring.color_of[idx] in used_colors:
                continue
            pick = e
            break
        if pick is None:
            raise ExtensionFailure(f"no admissible edge through big pair {(a, b)}", pair=(a, b))
        new.append(pick)
        used.update(pick)
        used_colors.add(coloring.color(pick))

    if mode == "cycle":
        seq = edges + new[::-1]
        out_spec = PatternSpec("cycle", "loose", ell + 2 * i)
    else:
        seq = edges + new
        out_spec = PatternSpec("path", "loose", ell + 2 * i)
    verdict = classify_sequence(seq, out_spec)
    if not verdict or not is_rainbow(coloring, seq):
        raise AssertionError(f"extension produced an invalid witness: {verdict.reason}")
    return CopyWitness(out_spec, tuple(seq))


# -- planted instances ------------------------------------------------------------

@dataclass(frozen=True)
class PlantedInstance:
    coloring: EdgeColoring
    h: Hypergraph
    core: tuple
    path: CopyWitness
    starved: tuple


def random_loose_path(rng, vertices: Sequence[int], r: int, ell: int) -> list[tuple]:
    """Random loose path of length ``ell`` on ``vertices`` (needs about ell*r of them)."""
    pool = list(vertices)
    rng.shuffle(pool)
    pool = [int(v) for v in pool]
    take = iter(pool)
    first = [next(take) for _ in range(r)]
    edges = [tuple(sorted(first))]
    prev_shared = set()
    for _ in range(ell - 1):
        avail = sorted(set(edges[-1]) - prev_shared)
        s = int(rng.integers(1, len(avail) + 1)) if len(avail) > 1 else 1
        s = min(s, r - 1)
        shared = [avail[j] for j in rng.choice(len(avail), size=s, replace=False)]
        e = tuple(sorted(shared + [next(take) for _ in range(r - s)]))
        edges.append(e)
        prev_shared = set(shared)
    return edges


def planted_instance(n: int, r: int, t: int, ell: int, seed=None, starved: int = 3,
                     noise: int = 40) -> PlantedInstance:
    """Rainbow H containing all core edges except at a few starved pairs, plus a random path.

    Core is ``{0, ..., t-1}``.  ``starved`` random non-core vertices lose every
    edge through them and vertex 0, so they land in S.  The path avoids the core
    and the starved vertices.  H gets distinct colors; the rest of K_n^r is
    colored at random with colors already used by H.
    """
    rng = np.random.default_rng(seed)
    core = tuple(range(t))
    outside = list(range(t, n))
    hungry = sorted(int(v) for v in rng.choice(outside, size=starved, replace=False))
    hungry_set = set(hungry)
    clean = [v for v in outside if v not in hungry_set]
    path_edges = random_loose_path(rng, clean, r, ell)
    rsets = all_rsets(n, r)
    table = _rank_table(n, r)
    ranks = set()
    for idx, e in enumerate(rsets):
        if e[0] < t and not (0 in e and hungry_set.intersection(e)):
            ranks.add(idx)
    ranks.update(table[e] for e in path_edges)
    away = [idx for idx, e in enumerate(rsets) if e[0] >= t]
    for idx in rng.choice(away, size=noise, replace=False):
        ranks.add(int(idx))
    h = Hypergraph.from_ranks(n, r, ranks)
    m = len(h)
    colors = rng.integers(0, m, size=len(rsets))
    perm = rng.permutation(m)
    for c, idx in zip(perm, h.edges):
        colors[idx] = c
    coloring = EdgeColoring(n, r, colors.tolist())
    witness = CopyWitness(PatternSpec("path", "loose", ell), tuple(path_edges))
    return PlantedInstance(coloring, h, core, witness, tuple(hungry))
