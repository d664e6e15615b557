from math import comb

import numpy as np
import pytest

from antiramsey.coloring import (
    ColoringError, EdgeColoring, find_rainbow_copy, format_coloring, is_rainbow, parse_coloring,
    representative_subgraph,
)
from antiramsey.constructions import lb_coloring
from antiramsey.hypergraph import Hypergraph, ParseError
from antiramsey.patterns import FOUND, NONE, PatternSpec, classify_sequence, loose_path


def test_is_rainbow_examples():
    col = EdgeColoring.random(7, 3, 5, seed=1)
    assert is_rainbow(col, [(0, 1, 2)])
    mono = EdgeColoring.monochromatic(7, 3)
    assert not is_rainbow(mono, [(0, 1, 2), (3, 4, 5)])
    lb = lb_coloring(10, 3, 4).coloring
    rest = [(1, 2, 3), (4, 5, 6), (2, 5, 9)]  # all avoid the core {0}
    assert len({lb.color(e) for e in rest}) == 1
    assert not is_rainbow(lb, rest[:2])


def test_rainbow_all_finds_copy():
    col = EdgeColoring.rainbow_all(7, 3)
    rep = find_rainbow_copy(col, loose_path(3))
    assert rep.status == FOUND
    assert classify_sequence(rep.witness.edges, rep.witness.spec)
    assert is_rainbow(col, rep.witness.edges)


def test_monochromatic_has_no_rainbow_pair():
    assert find_rainbow_copy(EdgeColoring.monochromatic(7, 3), loose_path(2)).status == NONE


def test_representative_examples():
    col = EdgeColoring(4, 3, [0, 0, 1, 2])
    assert representative_subgraph(col).edges == (0, 2, 3)
    col = EdgeColoring(4, 3, [1, 0, 0, 2])
    assert representative_subgraph(col).edges == (0, 1, 3)
    assert representative_subgraph(EdgeColoring.rainbow_all(6, 3)) == Hypergraph.complete(6, 3)


@pytest.mark.parametrize("n,r,k", [(11, 3, 5), (12, 3, 7), (10, 4, 5), (9, 3, 5)])
def test_representative_size_odd_lb(n, r, k):
    lb = lb_coloring(n, r, k)
    c = comb(n, r) - comb(n - k // 2 + 1, r) + 2
    assert lb.colors_used == c
    assert len(representative_subgraph(lb.coloring)) == c


def test_refinement_keeps_rainbow_copies():
    rng = np.random.default_rng(3)
    spec = PatternSpec("cycle", "loose", 3)
    for trial in range(15):
        coarse = EdgeColoring.random(6, 3, int(rng.integers(2, 5)), seed=trial)
        split = int(rng.integers(coarse.num_colors))
        labels = [(c, int(rng.integers(2))) if c == split else (c, 0) for c in coarse.color_of]
        fine = EdgeColoring.from_labels(6, 3, labels)
        if find_rainbow_copy(coarse, spec).found:
            assert find_rainbow_copy(fine, spec).found


def test_random_is_surjective_and_seeded():
    a = EdgeColoring.random(8, 3, 20, seed=9)
    assert a.num_colors == 20 and min(a.class_sizes()) >= 1
    assert a == EdgeColoring.random(8, 3, 20, seed=9)


def test_density_and_totality():
    with pytest.raises(ColoringError):
        EdgeColoring(4, 3, [0, 2, 2, 0])
    with pytest.raises(ColoringError):
        EdgeColoring(4, 3, [0, 1, 1])


def test_file_round_trip():
    col = EdgeColoring.random(6, 3, 7, seed=4)
    text = format_coloring(col)
    assert text.startswith("6 3 7\n1 2 3 : ")
    assert parse_coloring(text) == col


def test_file_errors():
    good = format_coloring(EdgeColoring(4, 3, [0, 1, 1, 0])).splitlines()
    with pytest.raises(ParseError) as err:
        parse_coloring("\n".join(good[:-1]))
    assert "uncolored" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_coloring("\n".join(good + [good[1]]))
    assert err.value.lineno == 6
    with pytest.raises(ParseError):
        parse_coloring("\n".join(good[:1] + ["1 2 3 : 5"] + good[2:]))
    with pytest.raises(ParseError):
        parse_coloring("4 3 3\n" + "\n".join(good[1:]))
