import random
from itertools import combinations, permutations

import pytest

from generators import random_graph
from ramsey_mindeg import (
    BudgetExceeded,
    EdgeColouring,
    Graph,
    PreconditionError,
    arrows,
    construct_example_tight_n,
    min_degree,
    ramsey_number,
    tightness_sweep,
)
from ramsey_mindeg.census import nonisomorphic_graphs
from ramsey_mindeg.oracle import find_clique


def naive_counterexample(g, r, t):
    """Slow reference: first colouring index with no red K_r and no blue P_t."""
    edges = list(g.edges())
    for index in range(1 << len(edges)):
        red = {e for j, e in enumerate(edges) if index >> j & 1}
        blue = set(edges) - red
        if any(all(tuple(sorted(p)) in red for p in combinations(q, 2)) for q in combinations(range(g.n), r)):
            continue
        if any(
            all(tuple(sorted(p)) in blue for p in zip(seq, seq[1:]))
            for seq in permutations(range(g.n), t)
        ):
            continue
        return index
    return None


def test_arrows_examples():
    v = arrows(Graph.complete(5), 3, 3)
    assert v.arrows and v.colourings_examined == 1 << 10
    v = arrows(Graph.complete(4), 3, 3)
    assert not v.arrows
    red = v.counterexample.red_graph
    assert all(red.degree(u) == 2 for u in range(4)) and len(red.components()) == 1
    blue = v.counterexample.blue_graph
    assert all(blue.degree(u) == 1 for u in range(4))
    assert not arrows(Graph.complete(1), 2, 2).arrows


def test_arrows_budget():
    with pytest.raises(BudgetExceeded, match="witness mode"):
        arrows(Graph.complete(8), 3, 3)
    with pytest.raises(PreconditionError):
        arrows(Graph.complete(3), 0, 3)


def test_arrows_matches_naive_reference():
    rng = random.Random(31)
    for _ in range(120):
        n = rng.randint(1, 6)
        g = random_graph(n, rng.choice([0.4, 0.7, 1.0]), rng)
        if g.num_edges > 11:
            continue
        r, t = rng.randint(2, 4), rng.randint(2, 5)
        v = arrows(g, r, t)
        expected = naive_counterexample(g, r, t)
        assert v.arrows == (expected is None)
        if expected is not None:
            assert v.counterexample_index == expected
            assert v.counterexample == EdgeColouring.from_index(g, expected)


def test_ramsey_number_examples():
    assert ramsey_number(3, 3, 6) == 5
    assert ramsey_number(3, 4, 8) == 7
    for t in range(2, 7):
        assert ramsey_number(2, t, t + 1) == t
    with pytest.raises(BudgetExceeded):
        ramsey_number(3, 3, 4)


def test_parallel_agrees_with_sequential():
    rng = random.Random(32)
    graphs = [Graph.complete(4), Graph.complete(6), construct_example_tight_n(3, 3).graph]
    graphs += [random_graph(6, 0.7, rng) for _ in range(4)]
    for g in graphs:
        seq = arrows(g, 3, 3, threads=1)
        par = arrows(g, 3, 3, threads=2, deterministic=True)
        assert par.arrows == seq.arrows
        assert par.counterexample_index == seq.counterexample_index
        fast = arrows(g, 3, 3, threads=2, deterministic=False)
        assert fast.arrows == seq.arrows


def test_tightness_sweep_exhaustive():
    report = tightness_sweep(3, 3)
    assert report.mode == "exhaustive" and report.confirmed
    assert report.graphs_checked == len(nonisomorphic_graphs(5, 3)) == 3
    assert report.construction_min_degree == 2
    assert report.to_json()["construction"]["arrows"] is False


@pytest.mark.parametrize("r, t", [(3, 4), (4, 3)])
def test_tight_example_does_not_arrow(r, t):
    inst = construct_example_tight_n(r, t)
    assert min_degree(inst.graph) == 4
    v = arrows(inst.graph, r, t)
    assert not v.arrows


def test_sweep_rejects_other_orders():
    with pytest.raises(PreconditionError):
        tightness_sweep(3, 3, 6)


def test_find_clique_agrees_with_brute_force():
    rng = random.Random(33)
    for _ in range(100):
        g = random_graph(rng.randint(1, 8), 0.6, rng)
        r = rng.randint(1, 5)
        q = find_clique(g, r)
        brute = any(all(g.has_edge(a, b) for a, b in combinations(c, 2)) for c in combinations(range(g.n), r))
        assert (q is not None) == brute
        if q is not None:
            assert len(q) == r and all(g.has_edge(a, b) for a, b in combinations(q, 2))
