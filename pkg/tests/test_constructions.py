import pytest

from ramsey_mindeg import (
    PreconditionError,
    arrows,
    construct_example_large_n,
    construct_example_tight_n,
    min_degree,
)
from ramsey_mindeg.constructions import large_n_band, large_n_min_degree, verify_not_arrowing
from ramsey_mindeg.oracle import is_counterexample


def _ceil(a, b):
    return -(-a // b)


@pytest.mark.parametrize("r, t, n, delta, sizes", [
    (3, 3, 5, 2, [2, 2, 1]),
    (3, 4, 7, 4, [3, 2, 2]),
    (4, 3, 7, 4, [2, 2, 2, 1]),
])
def test_tight_examples(r, t, n, delta, sizes):
    inst = construct_example_tight_n(r, t)
    assert inst.graph.n == n
    assert min_degree(inst.graph) == delta == inst.claimed_min_degree
    assert [len(p) for p in inst.parts] == sizes
    assert is_counterexample(inst.colouring, r, t)


def test_tight_rejects_dirac_regime():
    with pytest.raises(PreconditionError, match="Dirac regime"):
        construct_example_tight_n(2, 5)


@pytest.mark.parametrize("r", range(3, 9))
@pytest.mark.parametrize("t", range(2, 11))
def test_tight_degree_identity(r, t):
    inst = construct_example_tight_n(r, t)
    n = (r - 1) * (t - 1) + 1
    assert inst.graph.n == n
    assert min_degree(inst.graph) == n - _ceil(t, 2) - 1
    assert min_degree(inst.graph) == (r - 2) * (t - 1) + t // 2 - 1
    if n <= 40:
        assert verify_not_arrowing(inst, r, t)


def test_large_examples():
    inst = construct_example_large_n(3, 3, 1, 8)
    assert min_degree(inst.graph) == 5
    assert all(len(p) == 2 for p in inst.parts)

    inst = construct_example_large_n(3, 3, 1, 5)
    assert min_degree(inst.graph) == 2
    assert [len(grp) for grp in inst.groups] == [3, 2]
    assert [len(p) for p in inst.parts] == [2, 1, 1, 1]

    inst = construct_example_large_n(4, 2, 1, 4)
    assert min_degree(inst.graph) == 2
    assert all(len(p) == 1 for p in inst.parts)
    assert inst.colouring.red == frozenset(inst.graph.edges())
    assert sorted(len(grp) for grp in inst.groups) == [1, 1, 2]


def test_large_band_is_enforced():
    with pytest.raises(PreconditionError):
        construct_example_large_n(3, 3, 1, 4)
    with pytest.raises(PreconditionError):
        construct_example_large_n(3, 3, 1, 9)


def _valid_large(limit):
    for r in range(3, limit + 1):
        for t in range(2, limit + 1):
            for k in range(1, limit + 1):
                for n in large_n_band(r, t, k):
                    if n <= limit:
                        yield r, t, k, n


def test_large_degree_identity_up_to_60():
    count = 0
    for r, t, k, n in _valid_large(60):
        inst = construct_example_large_n(r, t, k, n)
        # ceil(k/(k+1) * ceil(n/(r-1))) in exact integer arithmetic
        expected = n - _ceil(k * _ceil(n, r - 1), k + 1) - 1
        assert min_degree(inst.graph) == expected == large_n_min_degree(r, k, n)
        assert max(len(p) for p in inst.parts) <= t - 1
        count += 1
    assert count > 1000


def test_large_small_instances_do_not_arrow():
    for r, t, k, n in _valid_large(8):
        inst = construct_example_large_n(r, t, k, n)
        assert verify_not_arrowing(inst, r, t)
        assert not arrows(inst.graph, r, t, budget=40).arrows
