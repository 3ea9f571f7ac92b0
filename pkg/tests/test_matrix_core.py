import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dense_adjacency, random_incidence
from plawbg.errors import StructuralInputError
from plawbg.matrix_core import (
    AdjacencyMatrix,
    IncidenceMatrix,
    adjacency_from_edge_list,
    incidence_to_adjacency,
)


def test_empty_incidence():
    a = incidence_to_adjacency(IncidenceMatrix.from_triples(0, 3, []))
    assert a.n_vertices == 3
    assert a.entries == {}
    assert a.total == 0


def test_single_edge():
    a = incidence_to_adjacency(IncidenceMatrix.from_triples(1, 2, [(0, 0, -1), (0, 1, 1)]))
    assert a.entries == {(0, 1): 1}
    assert a[0, 1] == 1 and a[1, 0] == 0


def test_dangling_edges_contribute_nothing():
    e = IncidenceMatrix.from_triples(3, 3, [(0, 0, -1), (1, 2, 1), (2, 1, -1), (2, 2, 1)])
    a = incidence_to_adjacency(e)
    assert a.entries == {(1, 2): 1}
    assert e.complete_edges() == 1


def test_self_loop_and_parallel_edges():
    e = IncidenceMatrix.from_triples(
        3, 2, [(0, 1, -1), (0, 1, 1), (1, 0, -1), (1, 1, 1), (2, 0, -1), (2, 1, 1)]
    )
    assert incidence_to_adjacency(e).entries == {(1, 1): 1, (0, 1): 2}


def test_oracle_equivalence_random():
    rng = np.random.default_rng(20240501)
    for _ in range(100):
        e = random_incidence(rng)
        a = incidence_to_adjacency(e)
        assert a.to_dense().tolist() == dense_adjacency(e)
        assert a.total == e.complete_edges()


@pytest.mark.parametrize(
    "triples, fragment",
    [
        ([(0, 0, 2)], "(0, 0, 2)"),
        ([(0, 0, -1), (0, 1, -1)], "more than one leaving"),
        ([(0, 0, 1), (0, 1, 1)], "more than one entering"),
        ([(0, 0, -1), (0, 0, -1)], "more than one leaving"),
        ([(5, 0, -1)], "edge index"),
        ([(0, 9, -1)], "vertex index"),
    ],
)
def test_invalid_triples_are_named(triples, fragment):
    with pytest.raises(StructuralInputError, match=fragment.replace("(", r"\(").replace(")", r"\)")):
        IncidenceMatrix.from_triples(2, 3, triples)


def test_offending_triple_reported():
    with pytest.raises(StructuralInputError) as info:
        IncidenceMatrix.from_triples(2, 3, [(0, 0, -1), (1, 1, -1), (1, 2, -1)])
    assert "(1, 2, -1)" in str(info.value)


def test_adjacency_rejects_bad_shape():
    with pytest.raises(StructuralInputError):
        AdjacencyMatrix(3, np.zeros((2, 2), dtype=int))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_permutation_equivariance(seed):
    rng = np.random.default_rng(seed)
    e = random_incidence(rng)
    perm = rng.permutation(e.n_vertices)
    relabeled = IncidenceMatrix(e.n_edges, e.n_vertices, e.edge, perm[e.vertex], e.sign)
    a = incidence_to_adjacency(e).to_dense()
    b = incidence_to_adjacency(relabeled).to_dense()
    expected = np.zeros_like(a)
    expected[np.ix_(perm, perm)] = a
    assert (b == expected).all()


def test_edge_list_empty():
    a, index = adjacency_from_edge_list([])
    assert a.n_vertices == 0 and a.entries == {} and index == {}


def test_edge_list_multiplicity():
    a, index = adjacency_from_edge_list([("a", "b"), ("a", "b")])
    assert a[index["a"], index["b"]] == 2
    assert a.nnz == 1


def test_edge_list_interning_order():
    a, index = adjacency_from_edge_list([("a", "b"), ("a", "c"), ("b", "c")])
    assert list(index) == ["a", "b", "c"]
    assert a.entries == {(0, 1): 1, (0, 2): 1, (1, 2): 1}
    assert a.labels == ("a", "b", "c")


def test_incidence_arrays_are_frozen():
    e = IncidenceMatrix.from_triples(1, 2, [(0, 0, -1), (0, 1, 1)])
    with pytest.raises(ValueError):
        e.sign[0] = 1
