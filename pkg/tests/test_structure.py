from itertools import combinations
from math import comb

import numpy as np
import pytest

from antiramsey.coloring import EdgeColoring, is_rainbow
from antiramsey.constructions import turan_extremal_loose
from antiramsey.hypergraph import Hypergraph, pair_degree
from antiramsey.patterns import classify_sequence, end_data
from antiramsey.structure import (
    ExtensionPreconditionError, ShadowSplit, StructureError, decompose, edge_class_counts,
    extend_rainbow, greedy_core_detect, planted_instance, shadow_degree_split, small_degree,
    tau_small_pairs,
)


def test_empty_host_all_small():
    h = Hypergraph(9, 3)
    assert len(tau_small_pairs(h, [0, 1], 1)) == 2 * 7


def test_all_big_sweep():
    # K_n^3, core {0}, tau = 15: first n with every pair big
    n = next(n for n in range(5, 40) if not tau_small_pairs(Hypergraph.complete(n, 3), [0], 15))
    assert n == 18


def test_small_degree():
    n = 12
    h = Hypergraph(n, 3, [e for e in combinations(range(n), 3) if not {0, 5} <= set(e)])
    assert small_degree(h, [0], 1, 5) == 1
    assert small_degree(h, [0], 1, 6) == 0
    assert small_degree(Hypergraph(n, 3), [0, 1], 1, 4) == 2
    with pytest.raises(StructureError):
        small_degree(h, [0], 1, 0)


def test_small_degree_matches_pairs_and_S():
    rng = np.random.default_rng(11)
    for _ in range(10):
        h = Hypergraph.from_ranks(10, 3, np.flatnonzero(rng.random(120) < 0.3).tolist())
        core = [0, 1]
        pairs = tau_small_pairs(h, core, 2)
        dec = decompose(h, core, 2)
        for v in range(2, 10):
            d = small_degree(h, core, 2, v)
            assert d == sum(1 for _, w in pairs if w == v)
            assert (d == 0) == (v in dec.S_bar)


def test_counts_star():
    h = Hypergraph(5, 3, [e for e in combinations(range(5), 3) if 0 in e])
    c = edge_class_counts(h, [0], [])
    assert (c.cross, c.missing) == (6, 0)


@pytest.mark.parametrize("t", [2, 3, 4])
def test_counts_complete(t):
    n, r = 10, 3
    c = edge_class_counts(Hypergraph.complete(n, r), range(t - 1), [])
    assert c.missing == 0
    assert c.cross == (t - 1) * comb(n - t + 1, r - 1)


def test_counts_random_200_edges():
    rng = np.random.default_rng(2)
    for _ in range(5):
        ranks = rng.choice(120, size=200 - 80, replace=False).tolist()
        h = Hypergraph.from_ranks(10, 3, ranks)
        core = sorted(rng.choice(10, size=2, replace=False).tolist())
        dec = decompose(h, core, 1)
        c = edge_class_counts(h, core, dec.S_bar)
        naive_missing = sum(1 for e in combinations(range(10), 3)
                            if len(set(core) & set(e)) == 1 and e not in h)
        assert c.missing == naive_missing
        assert c.cross + c.missing == 2 * comb(8, 2)
        assert sum(c.by_s_bar) == c.reduced_edges == len(dec.reduced)


def test_shadow_split_examples():
    s = shadow_degree_split([(0, 1, 5)], {0, 1})
    assert s.f1 == {(0, 1)} and not s.f2plus
    s = shadow_degree_split([(0, 1, 5), (0, 1, 6)], {0, 1, 2})
    assert not s.f1 and s.f2plus == {(0, 1): 2}
    with pytest.raises(StructureError):
        shadow_degree_split([(0, 5, 6)], {0, 1})


def test_e1_bound_random():
    rng = np.random.default_rng(4)
    for _ in range(20):
        n = 11
        h = Hypergraph.from_ranks(n, 3, np.flatnonzero(rng.random(comb(n, 3)) < 0.5).tolist())
        S = set(rng.choice(n, size=6, replace=False).tolist())
        e1 = [e for e in h.edge_sets() if len(S & set(e)) == 2]
        split = shadow_degree_split(e1, S)
        assert isinstance(split, ShadowSplit)
        assert len(e1) <= split.bound(n)
        assert split.degree_sum == len(e1)


def _check(inst, mode, i):
    w = extend_rainbow(inst.coloring, inst.h, inst.core, inst.path, mode, i)
    assert classify_sequence(w.edges, w.spec)
    assert is_rainbow(inst.coloring, w.edges)
    assert w.spec.k == inst.path.spec.k + 2 * i
    assert w.spec.shape == mode
    return w


def test_extend_path_and_cycle():
    inst = planted_instance(40, 3, 1, 3, seed=0)
    assert _check(inst, "path", 1).spec.k == 5
    assert _check(inst, "cycle", 1).spec.k == 5


def test_extend_keeps_original_path():
    inst = planted_instance(40, 3, 2, 4, seed=5)
    for i in (1, 2):
        w = _check(inst, "path", i)
        assert set(inst.path.edges) <= set(w.edges)
        assert set(w.edges[-1]) & end_data(inst.path).end_points or set(w.edges[0]) & end_data(inst.path).end_points


def test_extend_rejects_bad_input():
    inst = planted_instance(40, 3, 1, 3, seed=1)
    with pytest.raises(ExtensionPreconditionError):
        extend_rainbow(inst.coloring, inst.h, inst.core, inst.path, "path", 0)
    with pytest.raises(ExtensionPreconditionError):
        extend_rainbow(inst.coloring, inst.h, inst.core, inst.path, "path", 2)
    with pytest.raises(ExtensionPreconditionError):
        extend_rainbow(EdgeColoring.monochromatic(40, 3), inst.h, inst.core, inst.path, "path", 1)


def test_planted_starved_pairs():
    inst = planted_instance(30, 3, 2, 3, seed=3)
    for v in inst.starved:
        assert pair_degree(inst.h, 0, v) == 0
    dec = decompose(inst.h, inst.core, 3 * (3 + 4))
    assert set(inst.starved) <= dec.S


def test_greedy_core():
    n = 9
    star = [e for e in combinations(range(n), 3) if 2 in e]
    assert greedy_core_detect(Hypergraph(n, 3, star + [(4, 5, 6), (6, 7, 8)]), 1) == (2,)
    assert greedy_core_detect(Hypergraph.complete(n, 3), 2) == (0, 1)
    assert greedy_core_detect(turan_extremal_loose(12, 3, 5), 2) == (0, 1)
    assert greedy_core_detect(turan_extremal_loose(12, 3, 7), 3) == (0, 1, 2)
