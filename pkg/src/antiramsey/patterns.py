"""Loose and linear paths and cycles: recognition, search, end points."""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

from . import _search
from ._search import FOUND, INDETERMINATE, NONE
from .hypergraph import Hypergraph, HypergraphError, all_rsets, validate_rset

DEFAULT_BUDGET = 10**8


class PatternError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class PatternSpec:
    shape: str  # "path" | "cycle"
    tightness: str  # "loose" | "linear"
    k: int

    def __post_init__(self):
        if self.shape not in ("path", "cycle"):
            raise PatternError(f"unknown shape {self.shape!r}")
        if self.tightness not in ("loose", "linear"):
            raise PatternError(f"unknown tightness {self.tightness!r}")
        if self.k < 2:
            raise PatternError(f"length must be at least 2, got {self.k}")
        if self.shape == "cycle" and self.k < 3:
            raise PatternError("cycles of length 2 are degenerate")

    @classmethod
    def parse(cls, text: str) -> "PatternSpec":
        """Parse ``"loose-path:4"`` / ``"linear-cycle:5"``."""
        try:
            kind, k = text.strip().split(":")
            tightness, shape = kind.split("-")
            return cls(shape, tightness, int(k))
        except ValueError as exc:
            if isinstance(exc, PatternError):
                raise
            raise PatternError(f"cannot parse pattern {text!r}") from None

    def __str__(self):
        return f"{self.tightness}-{self.shape}:{self.k}"

    @property
    def linear(self) -> bool:
        return self.tightness == "linear"

    def to_json(self) -> dict:
        return {"shape": self.shape, "tightness": self.tightness, "k": self.k}

    @classmethod
    def from_json(cls, d: dict) -> "PatternSpec":
        return cls(d["shape"], d["tightness"], int(d["k"]))


def loose_path(k):
    return PatternSpec("path", "loose", k)


def loose_cycle(k):
    return PatternSpec("cycle", "loose", k)


@dataclass(frozen=True)
class Classification:
    accepted: bool
    reason: Optional[str] = None

    def __bool__(self):
        return self.accepted


def classify_sequence(edges: Sequence[Sequence[int]], spec: PatternSpec) -> Classification:
    """Check an ordered edge sequence against the intersection rules of ``spec``.

    Consecutive edges (cyclically, for cycles) must meet: in at least one
    vertex for loose patterns, in exactly one for linear ones.  All other pairs,
    including the two end edges of a path with k >= 3, must be disjoint.
    """
    sets = [frozenset(e) for e in edges]
    k = spec.k
    if not sets:
        return Classification(False, "empty sequence")
    if len(sets) != k:
        return Classification(False, f"length {len(sets)} != {k}")
    if len(set(sets)) != k:
        return Classification(False, "repeated edge")
    cyclic = spec.shape == "cycle"
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = j == i + 1 or (cyclic and i == 0 and j == k - 1)
            common = len(sets[i] & sets[j])
            if adjacent:
                if common == 0:
                    return Classification(False, f"e{i + 1} and e{j + 1} are disjoint")
                if spec.linear and common != 1:
                    return Classification(False, f"|e{i + 1} & e{j + 1}| = {common} != 1")
            elif common:
                return Classification(False, f"e{i + 1} and e{j + 1} intersect")
    return Classification(True)


@dataclass(frozen=True)
class CopyWitness:
    spec: PatternSpec
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(sorted(e)) for e in self.edges))

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "edges": [[v + 1 for v in e] for e in self.edges],
        }

    @classmethod
    def from_json(cls, d: dict) -> "CopyWitness":
        return cls(PatternSpec.from_json(d["spec"]), tuple(tuple(v - 1 for v in e) for e in d["edges"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class SearchReport:
    status: str
    witness: Optional[CopyWitness] = None
    nodes_expanded: int = 0

    @property
    def found(self):
        return self.status == FOUND

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": self.witness.to_json() if self.witness else None,
            "nodes_expanded": self.nodes_expanded,
        }


def _report(spec, n, r, status, nodes, seq):
    witness = None
    if status == FOUND:
        rsets = all_rsets(n, r)
        witness = CopyWitness(spec, tuple(rsets[i] for i in seq))
    return SearchReport(status, witness, nodes)


def find_copy(
    h: Hypergraph,
    spec: PatternSpec,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> SearchReport:
    """Search ``h`` for a copy of ``spec``.

    Status ``none`` is only reported after the whole space was explored;
    running out of ``budget`` node expansions gives ``indeterminate``.
    """
    status, nodes, seq = _search.search(
        h.n, h.r, h.bits, spec.shape, spec.k, spec.linear, budget, workers=workers
    )
    return _report(spec, h.n, h.r, status, nodes, seq)


def naive_copies(h: Hypergraph, spec: PatternSpec):
    """Every ordered k-tuple of distinct edges of ``h`` accepted by :func:`classify_sequence`.

    No pruning at all; meant as a reference for tiny hosts.
    """
    for seq in permutations(h.edge_sets(), spec.k):
        if classify_sequence(seq, spec):
            yield seq


@dataclass(frozen=True)
class EndData:
    end_points: frozenset
    end_pairs: frozenset  # of sorted 2-tuples


def end_data(w: CopyWitness) -> EndData:
    """End points and end pairs of a path witness."""
    if w.spec.shape != "path":
        raise PatternError("cycles have no end edges")
    degree = {}
    for e in w.edges:
        for v in e:
            degree[v] = degree.get(v, 0) + 1
    first = [v for v in w.edges[0] if degree[v] == 1]
    last = [v for v in w.edges[-1] if degree[v] == 1]
    pairs = frozenset(tuple(sorted((u, v))) for u in first for v in last)
    return EndData(frozenset(first) | frozenset(last), pairs)


def check_witness(w: CopyWitness, h: Hypergraph) -> Classification:
    """Witness is pattern-valid and all its edges lie in ``h``."""
    for e in w.edges:
        try:
            validate_rset(e, h.n, h.r)
        except HypergraphError as exc:
            return Classification(False, str(exc))
        if e not in h:
            return Classification(False, f"edge {e} not in host")
    return classify_sequence(w.edges, w.spec)


__all__ = [
    "FOUND",
    "NONE",
    "INDETERMINATE",
    "PatternSpec",
    "PatternError",
    "Classification",
    "classify_sequence",
    "CopyWitness",
    "SearchReport",
    "find_copy",
    "naive_copies",
    "EndData",
    "end_data",
    "check_witness",
    "loose_path",
    "loose_cycle",
]
