"""Lower-bound colorings, Turan-type extremal hypergraphs, and search certificates."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence, Union

from .coloring import EdgeColoring, find_rainbow_copy
from .formulas import ar_t, turan_t
from .hypergraph import Hypergraph, all_rsets
from .patterns import DEFAULT_BUDGET, FOUND, NONE, PatternSpec, SearchReport, find_copy

CERTIFIED_RAINBOW_FREE = "certified-rainbow-free"
CERTIFIED_FREE = "certified-F-free"
REFUTED = "refuted"
INDETERMINATE = "indeterminate"


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class LBColoring:
    coloring: EdgeColoring
    core: tuple
    parity: str
    colors_used: int


def lb_coloring(n: int, r: int, k: int) -> LBColoring:
    """Coloring of K_n^r with no rainbow loose P_k or C_k.

    With ``t = k // 2`` and core ``L = {0, ..., t-2}``, every edge meeting L gets
    its own color (in rank order).  The remaining edges share one color when k
    is even.  When k is odd they are split in two: edges containing vertex
    ``t-1`` and the rest.
    """
    if k < 4:
        raise ConstructionError(f"k >= 4 required, got {k}")
    t = ar_t(k)
    if n < r + t:
        raise ConstructionError(f"n={n} too small: need n >= r + t = {r + t}")
    core = tuple(range(t - 1))
    core_mask = (1 << (t - 1)) - 1
    pivot = 1 << (t - 1)
    colors = []
    remaining = []
    nxt = 0
    for i, e in enumerate(all_rsets(n, r)):
        m = sum(1 << v for v in e)
        if m & core_mask:
            colors.append(nxt)
            nxt += 1
        else:
            colors.append(None)
            remaining.append((i, m))
    odd = k % 2 == 1
    for i, m in remaining:
        colors[i] = nxt + (1 if odd and not m & pivot else 0)
    coloring = EdgeColoring(n, r, colors)
    return LBColoring(coloring, core, "odd" if odd else "even", coloring.num_colors)


def turan_extremal_loose(n: int, r: int, k: int, shape: str = "path") -> Hypergraph:
    """All edges meeting ``{0, ..., t-1}`` (t = (k-1)//2), plus one extra edge for even k.

    The extra edge is the colex-smallest r-set avoiding the core.
    """
    if k < 4:
        raise ConstructionError(f"k >= 4 required, got {k}")
    if shape == "cycle" and k == 4:
        raise ConstructionError("extremal loose C_4 family depends on an unresolved parameter")
    if shape not in ("path", "cycle"):
        raise ConstructionError(f"unknown shape {shape!r}")
    t = turan_t(k)
    if n < 2 * r + t:
        raise ConstructionError(f"n={n} too small: need n >= 2r + t = {2 * r + t}")
    ranks = [i for i, e in enumerate(all_rsets(n, r)) if any(v < t for v in e)]
    if k % 2 == 0:
        extra = tuple(range(t, t + r))
        ranks.append(all_rsets(n, r).index(extra))
    return Hypergraph.from_ranks(n, r, ranks)


@dataclass
class Certificate:
    kind: str  # "coloring" | "hypergraph"
    n: int
    r: int
    specs: list
    reports: list
    verdict: str
    witness: object = None
    summary: dict = field(default_factory=dict)

    @property
    def nodes_expanded(self) -> int:
        return sum(rep.nodes_expanded for rep in self.reports)

    @property
    def certified(self) -> bool:
        return self.verdict in (CERTIFIED_RAINBOW_FREE, CERTIFIED_FREE)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "r": self.r,
            "summary": self.summary,
            "verdict": self.verdict,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "searches": [
                {"spec": str(s), **rep.to_json()} for s, rep in zip(self.specs, self.reports)
            ],
            "nodes_expanded": self.nodes_expanded,
        }


def verify_construction(
    obj: Union[LBColoring, EdgeColoring, Hypergraph],
    specs: Sequence[PatternSpec],
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> Certificate:
    """Run an exhaustive search per spec and summarize the outcome.

    Colorings are searched for rainbow copies, hypergraphs for plain copies.
    The verdict is certified only if every search completed with ``none``.
    """
    if isinstance(obj, LBColoring):
        obj = obj.coloring
    if isinstance(obj, EdgeColoring):
        kind, good = "coloring", CERTIFIED_RAINBOW_FREE
        run = lambda s: find_rainbow_copy(obj, s, budget, workers)
        summary = {"colors": obj.num_colors, "edges": comb(obj.n, obj.r)}
    elif isinstance(obj, Hypergraph):
        kind, good = "hypergraph", CERTIFIED_FREE
        run = lambda s: find_copy(obj, s, budget, workers)
        summary = {"edges": len(obj)}
    else:
        raise TypeError(f"cannot verify {type(obj).__name__}")
    reports: list[SearchReport] = [run(s) for s in specs]
    witness = next((rep.witness for rep in reports if rep.status == FOUND), None)
    if witness is not None:
        verdict = REFUTED
    elif all(rep.status == NONE for rep in reports):
        verdict = good
    else:
        verdict = INDETERMINATE
    return Certificate(kind, obj.n, obj.r, list(specs), reports, verdict, witness, summary)
