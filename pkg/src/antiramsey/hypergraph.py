"""Uniform hypergraph primitives.

Edges are r-subsets of ``range(n)`` represented as strictly increasing tuples
and identified by their colex rank::

    rank({c_1 < ... < c_r}) = sum_i C(c_i, i)

Colex ranks do not depend on ``n``, so a fixed r-set keeps its rank when the
vertex set grows.  A :class:`Hypergraph` keeps both a sorted tuple of ranks and
an integer bitset over ranks; the search code works on the bitsets.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

RSet = tuple  # strictly increasing tuple of vertex ids


class HypergraphError(ValueError):
    """Invalid vertex, edge, or hypergraph input."""


def validate_rset(edge: Iterable[int], n: int, r: int | None = None) -> tuple[int, ...]:
    """Return ``edge`` as a sorted tuple, checking it is a valid r-set over ``n``."""
    vs = tuple(sorted(int(v) for v in edge))
    if r is not None and len(vs) != r:
        raise HypergraphError(f"edge {vs} has {len(vs)} vertices, expected {r}")
    if len(set(vs)) != len(vs):
        raise HypergraphError(f"edge {vs} has a repeated vertex")
    if vs and (vs[0] < 0 or vs[-1] >= n):
        raise HypergraphError(f"edge {vs} has a vertex outside [0, {n})")
    return vs


def rank_rset(edge: Sequence[int], n: int) -> int:
    """Colex rank of an r-set over ``n`` vertices."""
    vs = validate_rset(edge, n)
    return sum(comb(v, i) for i, v in enumerate(vs, start=1))


def unrank_rset(index: int, n: int, r: int) -> tuple[int, ...]:
    """Inverse of :func:`rank_rset`."""
    total = comb(n, r)
    if not 0 <= index < total:
        raise IndexError(f"rank {index} outside [0, {total}) for n={n}, r={r}")
    out = []
    v = n - 1
    for i in range(r, 0, -1):
        while comb(v, i) > index:
            v -= 1
        out.append(v)
        index -= comb(v, i)
        v -= 1
    return tuple(reversed(out))


@lru_cache(maxsize=64)
def all_rsets(n: int, r: int) -> tuple[tuple[int, ...], ...]:
    """Every r-subset of ``range(n)``, indexed by colex rank."""
    if r < 1 or n < 0:
        raise HypergraphError(f"invalid (n, r) = ({n}, {r})")
    # colex order: sort by reversed tuple
    return tuple(sorted(combinations(range(n), r), key=lambda e: e[::-1]))


@lru_cache(maxsize=64)
def _rank_table(n: int, r: int) -> dict:
    return {e: i for i, e in enumerate(all_rsets(n, r))}


@lru_cache(maxsize=64)
def vertex_masks(n: int, r: int) -> tuple[int, ...]:
    """Vertex bitmask of every r-set, indexed by rank."""
    return tuple(sum(1 << v for v in e) for e in all_rsets(n, r))


def _bits(ranks: Iterable[int]) -> int:
    out = 0
    for i in ranks:
        out |= 1 << i
    return out


def iter_bits(x: int):
    """Yield the set bit positions of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Hypergraph:
    """An r-uniform hypergraph on ``range(n)``; immutable after construction.

    ``edges`` holds the colex ranks in increasing order, ``bits`` the same set
    as an integer bitset, and ``incidence[v]`` the sorted ranks of edges
    containing ``v``.
    """

    __slots__ = ("n", "r", "edges", "bits", "incidence", "_edge_set")

    def __init__(self, n: int, r: int, edges: Iterable[Sequence[int]] = ()):
        if r < 1:
            raise HypergraphError(f"uniformity must be positive, got {r}")
        if n < 0:
            raise HypergraphError(f"vertex count must be nonnegative, got {n}")
        table = _rank_table(n, r)
        ranks = set()
        for e in edges:
            vs = validate_rset(e, n, r)
            ranks.add(table[vs])
        self._init_from_ranks(n, r, ranks)

    def _init_from_ranks(self, n, r, ranks):
        self.n = n
        self.r = r
        self.edges = tuple(sorted(ranks))
        self._edge_set = frozenset(self.edges)
        self.bits = _bits(self.edges)
        rsets = all_rsets(n, r)
        inc = [[] for _ in range(n)]
        for i in self.edges:
            for v in rsets[i]:
                inc[v].append(i)
        self.incidence = tuple(tuple(x) for x in inc)

    @classmethod
    def from_ranks(cls, n: int, r: int, ranks: Iterable[int]) -> "Hypergraph":
        total = comb(n, r)
        ranks = set(int(i) for i in ranks)
        for i in ranks:
            if not 0 <= i < total:
                raise HypergraphError(f"rank {i} outside [0, {total})")
        h = cls.__new__(cls)
        h._init_from_ranks(n, r, ranks)
        return h

    @classmethod
    def complete(cls, n: int, r: int) -> "Hypergraph":
        return cls.from_ranks(n, r, range(comb(n, r)))

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge) -> bool:
        if isinstance(edge, int):
            return edge in self._edge_set
        try:
            vs = validate_rset(edge, self.n, self.r)
        except HypergraphError:
            return False
        return _rank_table(self.n, self.r)[vs] in self._edge_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.r, self.edges) == (other.n, other.r, other.edges)

    def __hash__(self):
        return hash((self.n, self.r, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, |E|={len(self.edges)})"

    def edge_sets(self) -> list[tuple[int, ...]]:
        rsets = all_rsets(self.n, self.r)
        return [rsets[i] for i in self.edges]

    def rank(self, edge: Sequence[int]) -> int:
        return _rank_table(self.n, self.r)[validate_rset(edge, self.n, self.r)]

    def issubgraph(self, other: "Hypergraph") -> bool:
        return (self.n, self.r) == (other.n, other.r) and self.bits & ~other.bits == 0

    def remove_vertices(self, vertices: Iterable[int]) -> "Hypergraph":
        """Edges disjoint from ``vertices`` (vertex set unchanged)."""
        drop = set(vertices)
        gone = set()
        for v in drop:
            gone.update(self.incidence[v])
        return Hypergraph.from_ranks(self.n, self.r, self._edge_set - gone)

    def induced(self, vertices: Iterable[int]) -> "Hypergraph":
        keep = set(vertices)
        return self.remove_vertices(set(range(self.n)) - keep)


def shadow(h: Hypergraph) -> Hypergraph:
    """The (r-1)-graph of all (r-1)-sets lying inside some edge of ``h``."""
    if h.r < 2:
        raise HypergraphError("shadow needs r >= 2")
    table = _rank_table(h.n, h.r - 1)
    ranks = set()
    for e in h.edge_sets():
        for f in combinations(e, h.r - 1):
            ranks.add(table[f])
    return Hypergraph.from_ranks(h.n, h.r - 1, ranks)


def pair_degree(h: Hypergraph, u: int, v: int) -> int:
    """Number of edges of ``h`` containing both ``u`` and ``v``."""
    if u == v:
        raise HypergraphError("pair degree needs two distinct vertices")
    for x in (u, v):
        if not 0 <= x < h.n:
            raise HypergraphError(f"vertex {x} outside [0, {h.n})")
    a, b = h.incidence[u], h.incidence[v]
    if len(a) > len(b):
        a, b = b, a
    sb = set(b)
    return sum(1 for i in a if i in sb)


# -- text format ---------------------------------------------------------------

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse "n r" then one edge per line with 1-based vertices."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(0, "empty hypergraph file") from None
    try:
        n, r = (int(x) for x in header.split())
    except ValueError:
        raise ParseError(lineno, f"expected 'n r', got {header!r}") from None
    edges = []
    for lineno, line in lines:
        try:
            edges.append(validate_rset((int(x) - 1 for x in line.split()), n, r))
        except (ValueError, HypergraphError) as exc:
            raise ParseError(lineno, str(exc)) from None
    return Hypergraph(n, r, edges)


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.r}"]
    lines += [" ".join(str(v + 1) for v in e) for e in h.edge_sets()]
    return "\n".join(lines) + "\n"
