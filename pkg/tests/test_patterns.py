import json
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antiramsey.hypergraph import Hypergraph
from antiramsey.patterns import (
    FOUND, INDETERMINATE, NONE, CopyWitness, PatternError, PatternSpec, check_witness,
    classify_sequence, end_data, find_copy, loose_path, naive_copies,
)
from antiramsey.structure import random_loose_path

# smallest n with a copy in K_n^3, from naive enumeration over ordered tuples
MIN_HOST = {
    "loose-path:2": 4,
    "loose-path:3": 6,
    "loose-path:4": 7,
    "loose-cycle:3": 4,
    "loose-cycle:4": 6,
    "linear-path:3": 7,
    "linear-cycle:3": 6,
    "linear-cycle:4": 8,
}


def shift(*edges):
    """1-based edge literals to 0-based tuples."""
    return [tuple(v - 1 for v in e) for e in edges]


def test_spec_validation():
    with pytest.raises(PatternError):
        PatternSpec("cycle", "loose", 2)
    with pytest.raises(PatternError):
        PatternSpec("path", "tight", 3)
    assert PatternSpec.parse("linear-cycle:5") == PatternSpec("cycle", "linear", 5)
    assert str(PatternSpec.parse("loose-path:3")) == "loose-path:3"


def test_classify_examples():
    seq = shift((1, 2, 3), (3, 4, 5), (5, 6, 7))
    assert classify_sequence(seq, PatternSpec("path", "loose", 3))
    assert classify_sequence(seq, PatternSpec("path", "linear", 3))
    bad = classify_sequence(shift((1, 2, 3), (2, 3, 4)), PatternSpec("path", "linear", 2))
    assert not bad and "!= 1" in bad.reason
    assert classify_sequence(shift((1, 2, 3), (3, 4, 5), (5, 6, 1)), PatternSpec("cycle", "linear", 3))
    assert "length" in classify_sequence(seq, loose_path(4)).reason


def test_path_end_edges_must_be_disjoint():
    # e1 and e3 meet: not a loose path of length 3
    seq = shift((1, 2, 3), (3, 4, 5), (5, 6, 1))
    assert not classify_sequence(seq, loose_path(3))


def test_find_copy_examples(k63):
    rep = find_copy(k63, loose_path(3))
    assert rep.status == FOUND
    assert check_witness(rep.witness, k63)
    assert find_copy(Hypergraph.complete(5, 3), loose_path(3)).status == NONE


@pytest.mark.parametrize("spec", sorted(MIN_HOST))
def test_min_host_sweep(spec):
    s = PatternSpec.parse(spec)
    n = next(n for n in range(3, 12) if find_copy(Hypergraph.complete(n, 3), s).found)
    assert n == MIN_HOST[spec]


def test_budget_is_indeterminate_not_none():
    rep = find_copy(Hypergraph.complete(5, 3), loose_path(3), budget=10)
    assert rep.status == INDETERMINATE
    assert rep.nodes_expanded == 10
    assert rep.witness is None


def test_witness_is_canonical():
    rep = find_copy(Hypergraph.complete(7, 3), PatternSpec("cycle", "loose", 4))
    h = Hypergraph.complete(7, 3)
    ranks = [h.rank(e) for e in rep.witness.edges]
    assert ranks[0] == min(ranks) and ranks[1] < ranks[-1]
    rep = find_copy(h, loose_path(4))
    ranks = [h.rank(e) for e in rep.witness.edges]
    assert ranks[0] < ranks[-1]


def test_parallel_matches_serial():
    h = Hypergraph.complete(8, 3)
    for spec in (loose_path(4), PatternSpec("cycle", "linear", 4)):
        assert find_copy(h, spec, workers=1) == find_copy(h, spec, workers=2)
    h = Hypergraph.complete(6, 3)
    assert find_copy(h, loose_path(4), workers=3) == find_copy(h, loose_path(4))


def test_parallel_budget_agrees():
    h = Hypergraph.complete(6, 3)
    for budget in (5, 50, 500, 5000):
        assert find_copy(h, PatternSpec("path", "linear", 3), budget) == \
            find_copy(h, PatternSpec("path", "linear", 3), budget, workers=2)


def test_witness_json_round_trip():
    w = find_copy(Hypergraph.complete(6, 3), loose_path(3)).witness
    data = json.loads(w.dumps())
    assert data["edges"][0] == [v + 1 for v in w.edges[0]]
    assert CopyWitness.from_json(data) == w


def test_end_data_examples():
    ed = end_data(CopyWitness(loose_path(2), shift((1, 2, 3), (3, 4, 5))))
    assert ed.end_points == {0, 1, 3, 4}
    assert ed.end_pairs == {(0, 3), (0, 4), (1, 3), (1, 4)}
    ed = end_data(CopyWitness(loose_path(3), shift((1, 2, 3), (3, 4, 5), (5, 6, 7))))
    assert ed.end_points == {0, 1, 5, 6}
    with pytest.raises(PatternError):
        end_data(CopyWitness(PatternSpec("cycle", "loose", 3), shift((1, 2, 3), (3, 4, 5), (5, 6, 1))))


@pytest.mark.parametrize("r", [3, 4, 5])
def test_end_pairs_of_linear_paths(r):
    rng = np.random.default_rng(r)
    for k in range(2, 6):
        # consecutive edges share exactly one vertex
        verts = [int(v) for v in rng.permutation(k * r)]
        edges, pos = [], 0
        for _ in range(k):
            edges.append(tuple(sorted(verts[pos:pos + r])))
            pos += r - 1
        w = CopyWitness(PatternSpec("path", "linear", k), edges)
        assert classify_sequence(w.edges, w.spec)
        ed = end_data(w)
        first = [v for v in edges[0] if sum(v in e for e in edges) == 1]
        last = [v for v in edges[-1] if sum(v in e for e in edges) == 1]
        assert len(ed.end_pairs) == len(first) * len(last) == (r - 1) ** 2


@st.composite
def hosts(draw, n_max=10):
    n = draw(st.integers(4, n_max))
    m = comb(n, 3)
    density = draw(st.floats(0.05, 0.9))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    return Hypergraph.from_ranks(n, 3, np.flatnonzero(rng.random(m) < density).tolist())


specs = st.builds(
    PatternSpec,
    st.sampled_from(["path", "cycle"]),
    st.sampled_from(["loose", "linear"]),
    st.integers(3, 5),
)


@settings(max_examples=80, deadline=None)
@given(hosts(), specs)
def test_soundness(h, spec):
    rep = find_copy(h, spec, budget=200_000)
    if rep.found:
        assert check_witness(rep.witness, h)
        if spec.linear:
            assert classify_sequence(rep.witness.edges, PatternSpec(spec.shape, "loose", spec.k))


@settings(max_examples=40, deadline=None)
@given(hosts(n_max=8), st.sampled_from(["loose-path:2", "loose-path:3", "loose-cycle:3", "linear-path:3",
                                       "loose-cycle:4", "linear-cycle:3"]))
def test_completeness_small(h, spec):
    s = PatternSpec.parse(spec)
    if len(h) > 24:
        h = Hypergraph.from_ranks(h.n, h.r, h.edges[:24])
    naive = next(naive_copies(h, s), None) is not None
    assert find_copy(h, s).found == naive


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_loose_path_vertex_span(k):
    rng = np.random.default_rng(k)
    for _ in range(30):
        edges = random_loose_path(rng, range(20), 3, k)
        assert classify_sequence(edges, loose_path(k))
        span = len(set().union(*map(set, edges)))
        lo = MIN_HOST.get(f"loose-path:{k}", 0)
        assert lo <= span <= k * 3 - (k - 1)
