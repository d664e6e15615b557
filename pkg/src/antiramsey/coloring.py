"""Edge colorings of the complete r-graph and rainbow search."""
from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import _search
from .hypergraph import Hypergraph, ParseError, _content_lines, _rank_table, all_rsets, validate_rset
from .patterns import DEFAULT_BUDGET, PatternSpec, SearchReport, _report


class ColoringError(ValueError):
    pass


class EdgeColoring:
    """Total, surjective coloring ``rank -> color`` of K_n^r with colors ``0..c-1``."""

    __slots__ = ("n", "r", "color_of", "num_colors", "classes")

    def __init__(self, n: int, r: int, color_of: Sequence[int]):
        total = comb(n, r)
        color_of = tuple(int(c) for c in color_of)
        if len(color_of) != total:
            raise ColoringError(f"coloring covers {len(color_of)} of {total} edges")
        if total == 0:
            raise ColoringError("K_n^r has no edges")
        c = max(color_of) + 1
        if min(color_of) < 0:
            raise ColoringError("negative color id")
        classes = [[] for _ in range(c)]
        for i, col in enumerate(color_of):
            classes[col].append(i)
        empty = [col for col, members in enumerate(classes) if not members]
        if empty:
            raise ColoringError(f"color ids {empty[:5]} unused; colors must be dense 0..c-1")
        self.n, self.r = n, r
        self.color_of = color_of
        self.num_colors = c
        self.classes = tuple(tuple(m) for m in classes)

    @classmethod
    def from_labels(cls, n: int, r: int, labels: Sequence) -> "EdgeColoring":
        """Relabel arbitrary hashable labels to dense ids in first-appearance order."""
        ids = {}
        return cls(n, r, [ids.setdefault(x, len(ids)) for x in labels])

    @classmethod
    def rainbow_all(cls, n: int, r: int) -> "EdgeColoring":
        return cls(n, r, range(comb(n, r)))

    @classmethod
    def monochromatic(cls, n: int, r: int) -> "EdgeColoring":
        return cls(n, r, [0] * comb(n, r))

    @classmethod
    def random(cls, n: int, r: int, num_colors: int, seed=None) -> "EdgeColoring":
        """Uniformly random surjective-by-construction coloring with ``num_colors`` colors."""
        total = comb(n, r)
        if not 1 <= num_colors <= total:
            raise ColoringError(f"need 1 <= colors <= {total}")
        rng = np.random.default_rng(seed)
        colors = np.concatenate([np.arange(num_colors), rng.integers(0, num_colors, total - num_colors)])
        rng.shuffle(colors)
        return cls(n, r, colors.tolist())

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (self.n, self.r, self.color_of) == (other.n, other.r, other.color_of)

    def __hash__(self):
        return hash((self.n, self.r, self.color_of))

    def __repr__(self):
        return f"EdgeColoring(n={self.n}, r={self.r}, colors={self.num_colors})"

    def color(self, edge) -> int:
        if isinstance(edge, int):
            return self.color_of[edge]
        return self.color_of[_rank_table(self.n, self.r)[validate_rset(edge, self.n, self.r)]]

    def class_sizes(self) -> list[int]:
        return [len(m) for m in self.classes]


def is_rainbow(coloring: EdgeColoring, edges: Iterable) -> bool:
    """True iff the given edges (vertex tuples or ranks) carry pairwise distinct colors."""
    colors = [coloring.color(e) for e in edges]
    return len(colors) == len(set(colors))


def find_rainbow_copy(
    coloring: EdgeColoring,
    spec: PatternSpec,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> SearchReport:
    """Search K_n^r for a rainbow copy of ``spec`` under ``coloring``."""
    n, r = coloring.n, coloring.r
    host = (1 << comb(n, r)) - 1
    status, nodes, seq = _search.search(
        n, r, host, spec.shape, spec.k, spec.linear, budget,
        color_of=coloring.color_of, workers=workers,
    )
    return _report(spec, n, r, status, nodes, seq)


def representative_subgraph(coloring: EdgeColoring) -> Hypergraph:
    """One edge per color class, the lowest-ranked one."""
    return Hypergraph.from_ranks(coloring.n, coloring.r, (m[0] for m in coloring.classes))


def parse_coloring(text: str) -> EdgeColoring:
    """Parse "n r c" then "v1 ... vr : color" lines (1-based vertices)."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(0, "empty coloring file") from None
    try:
        n, r, c = (int(x) for x in header.split())
    except ValueError:
        raise ParseError(lineno, f"expected 'n r c', got {header!r}") from None
    table = _rank_table(n, r)
    colors = [None] * comb(n, r)
    for lineno, line in lines:
        try:
            left, right = line.split(":")
            edge = validate_rset((int(x) - 1 for x in left.split()), n, r)
            col = int(right)
        except ValueError as exc:
            raise ParseError(lineno, f"bad coloring line {line!r}: {exc}") from None
        if not 0 <= col < c:
            raise ParseError(lineno, f"color {col} outside [0, {c})")
        i = table[edge]
        if colors[i] is not None:
            raise ParseError(lineno, f"edge {[v + 1 for v in edge]} listed twice")
        colors[i] = col
    missing = [i for i, col in enumerate(colors) if col is None]
    if missing:
        e = all_rsets(n, r)[missing[0]]
        raise ParseError(lineno, f"{len(missing)} edges uncolored, e.g. {[v + 1 for v in e]}")
    col = EdgeColoring(n, r, colors)
    if col.num_colors != c:
        raise ParseError(1, f"header declares {c} colors, file uses {col.num_colors}")
    return col


def format_coloring(coloring: EdgeColoring) -> str:
    lines = [f"{coloring.n} {coloring.r} {coloring.num_colors}"]
    for e, col in zip(all_rsets(coloring.n, coloring.r), coloring.color_of):
        lines.append(" ".join(str(v + 1) for v in e) + f" : {col}")
    return "\n".join(lines) + "\n"
