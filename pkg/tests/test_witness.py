import random

import pytest

from generators import (
    arrow_partition_instance,
    graph_with_min_degree,
    random_colouring,
    triangle_partition_instance,
)
from ramsey_mindeg import (
    EdgeColouring,
    Graph,
    PreconditionError,
    RamseyParams,
    Witness,
    WitnessKind,
    arrow_witness,
    construct_example_large_n,
    construct_example_tight_n,
    triangle_arrow_witness,
    validate_witness,
)
from ramsey_mindeg.census import labelled_graphs
from ramsey_mindeg.oracle import has_red_clique

K5 = Graph.complete(5)
K5_MINUS = Graph.from_edges(5, [e for e in K5.edges() if e != (3, 4)])


def test_validate_examples():
    k3 = Graph.complete(3)
    red = EdgeColouring.all_red(k3)
    assert validate_witness(k3, red, Witness.red_clique([0, 1, 2]), RamseyParams(3, 3))
    assert not validate_witness(k3, red, Witness.blue_path([0, 1, 2]), RamseyParams(3, 3))
    c = EdgeColouring(K5, frozenset(Graph.cycle(5).edges()))
    # complement of the cycle 0-1-2-3-4 is the cycle 0-2-4-1-3
    assert validate_witness(K5, c, Witness.blue_path([0, 2, 4]), RamseyParams(3, 3))
    assert not validate_witness(K5, c, Witness.blue_path([0, 1, 2]), RamseyParams(3, 3))


def test_arrow_witness_examples():
    trace = arrow_witness(K5, EdgeColouring.all_red(K5), 3, 3)
    assert trace.witness.kind is WitnessKind.RED_CLIQUE and len(trace.witness.vertices) == 3

    c = EdgeColouring(K5, frozenset(Graph.cycle(5).edges()))
    trace = arrow_witness(K5, c, 3, 3)
    assert trace.witness.kind is WitnessKind.BLUE_PATH
    assert validate_witness(K5, c, trace.witness, RamseyParams(3, 3))


def test_arrow_witness_on_patched_tight_example():
    inst = construct_example_tight_n(3, 3)
    extra = (inst.parts[1][0], inst.parts[2][0])
    assert not inst.graph.has_edge(*extra)
    g = Graph.from_edges(5, list(inst.graph.edges()) + [extra])
    c = EdgeColouring(g, inst.colouring.red | {extra})
    assert has_red_clique(c, 3)
    trace = arrow_witness(g, c, 3, 3)
    assert trace.witness.kind is WitnessKind.RED_CLIQUE
    assert validate_witness(g, c, trace.witness, RamseyParams(3, 3))


def test_arrow_witness_rejects_outside_hypotheses():
    inst = construct_example_tight_n(3, 4)
    with pytest.raises(PreconditionError, match="degree/size hypothesis not met"):
        arrow_witness(inst.graph, inst.colouring, 3, 4)
    with pytest.raises(PreconditionError):
        arrow_witness(Graph.complete(4), EdgeColouring.all_red(Graph.complete(4)), 3, 3)


def test_triangle_witness_examples():
    trace = triangle_arrow_witness(K5_MINUS, EdgeColouring.all_red(K5_MINUS), 3, 1)
    assert trace.witness.kind is WitnessKind.RED_CLIQUE
    assert validate_witness(K5_MINUS, EdgeColouring.all_red(K5_MINUS), trace.witness, RamseyParams(3, 3))

    star = EdgeColouring(K5_MINUS, frozenset(e for e in K5_MINUS.edges() if 0 in e))
    trace = triangle_arrow_witness(K5_MINUS, star, 3, 1)
    assert trace.witness.kind is WitnessKind.BLUE_PATH
    assert 0 not in trace.witness.vertices
    assert validate_witness(K5_MINUS, star, trace.witness, RamseyParams(3, 3))


def test_triangle_witness_rejects_large_example():
    inst = construct_example_large_n(3, 3, 1, 8)
    u, v = inst.parts[0]
    c = EdgeColouring(inst.graph, inst.colouring.red | {(u, v)})
    with pytest.raises(PreconditionError, match="degree/size hypothesis not met"):
        triangle_arrow_witness(inst.graph, c, 3, 1)


def test_arrow_witness_all_colourings_small():
    params = RamseyParams(3, 3)
    for g in labelled_graphs(5, min_deg=3):
        for index in range(1 << g.num_edges):
            c = EdgeColouring.from_index(g, index)
            w = arrow_witness(g, c, 3, 3).witness
            assert validate_witness(g, c, w, params)


def test_arrow_witness_reaches_transversal_branch():
    rng = random.Random(21)
    reached = 0
    for r, t in [(3, 4), (3, 5), (4, 4), (3, 6)]:
        for _ in range(10):
            made = arrow_partition_instance(r, t, rng, extra=rng.randint(0, 2))
            if made is None:
                continue
            g, c = made
            record = []
            trace = arrow_witness(g, c, r, t, diagnostic=True, record=record)
            assert validate_witness(g, c, trace.witness, RamseyParams(r, t))
            if any(s["step"] == "transversal" for s in trace.steps):
                reached += 1
    assert reached > 0


def test_triangle_witness_reaches_multipartite_branch():
    rng = random.Random(22)
    reached = 0
    for t, k, n in [(4, 1, 9), (5, 1, 9), (8, 1, 21)]:
        for _ in range(5):
            made = triangle_partition_instance(t, k, n, rng)
            if made is None:
                continue
            g, c = made
            trace = triangle_arrow_witness(g, c, t, k, diagnostic=True)
            assert validate_witness(g, c, trace.witness, RamseyParams(3, t, k))
            if trace.steps[-1]["step"] == "multipartite-triangle":
                reached += 1
    assert reached > 0


def test_random_colourings_of_dense_graphs():
    rng = random.Random(23)
    for _ in range(150):
        r, t = rng.choice([(3, 3), (3, 4), (4, 3), (3, 5), (4, 4), (5, 3)])
        n = (r - 1) * (t - 1) + 1 + rng.randint(0, 4)
        delta = n - (t + 1) // 2
        g = graph_with_min_degree(n, delta, rng, p=0.9)
        c = random_colouring(g, rng, p_red=rng.random())
        w = arrow_witness(g, c, r, t).witness
        assert validate_witness(g, c, w, RamseyParams(r, t))


def test_trace_json_shape():
    trace = arrow_witness(K5, EdgeColouring.all_red(K5), 3, 3)
    data = trace.to_json()
    assert data["kind"] == "RedClique" and len(data["vertices"]) == 3
    assert data["steps"] and all("step" in s for s in data["steps"])
