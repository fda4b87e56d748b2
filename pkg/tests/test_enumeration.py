import pytest

from dwinv.enumeration import (
    all_graphs,
    attach_even_vertex,
    count_all_graphs,
    count_even_graphs,
    enumerate_even_graphs,
)
from dwinv.errors import DomainError, LimitError
from dwinv.graphs import Graph, is_even_graph


@pytest.mark.parametrize("r, n", [(1, 1), (2, 2), (3, 8), (4, 64), (7, 2097152)])
def test_count_all(r, n):
    assert count_all_graphs(r) == n


@pytest.mark.parametrize("r, n", [(1, 1), (2, 1), (3, 2), (4, 8), (5, 64)])
def test_count_even(r, n):
    assert count_even_graphs(r) == n


def test_counts_are_exact_for_large_r():
    assert count_all_graphs(100) == 2**4950
    assert count_even_graphs(100) * 2**99 == count_all_graphs(100)


def test_bad_r():
    with pytest.raises(DomainError):
        count_all_graphs(0)
    with pytest.raises(DomainError):
        count_even_graphs(0)


def test_enumerate_small():
    assert list(enumerate_even_graphs(3)) == [Graph(3), Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)])]
    assert list(enumerate_even_graphs(2)) == [Graph(2)]
    assert len(list(enumerate_even_graphs(4))) == 8


def test_enumerate_limit():
    with pytest.raises(LimitError):
        list(enumerate_even_graphs(8))
    assert sum(1 for _ in enumerate_even_graphs(8, limit=8, stop=4096)) > 0


def test_enumeration_is_ascending_and_range_splits():
    masks = [g.mask for g in enumerate_even_graphs(5)]
    assert masks == sorted(masks)
    halves = [g.mask for g in enumerate_even_graphs(5, stop=512)] + [
        g.mask for g in enumerate_even_graphs(5, start=512)
    ]
    assert halves == masks


def test_exhaustive_counts_and_ratio():
    for r in range(1, 7):
        n = sum(is_even_graph(g) for g in all_graphs(r))
        assert n == count_even_graphs(r)
        assert n * 2 ** (r - 1) == count_all_graphs(r)


def test_attach_examples():
    assert attach_even_vertex(Graph.from_edges(2, [(1, 2)])) == Graph.from_edges(
        3, [(1, 2), (1, 3), (2, 3)]
    )
    assert attach_even_vertex(Graph(2)) == Graph(3)
    assert attach_even_vertex(Graph.from_edges(3, [(1, 2), (2, 3)])) == Graph.from_edges(
        4, [(1, 2), (2, 3), (1, 4), (3, 4)]
    )


def test_attach_is_bijection():
    for r in range(2, 8):
        image = set()
        for g in all_graphs(r - 1):
            h = attach_even_vertex(g)
            assert h.num_vertices == r
            assert is_even_graph(h)
            image.add(h.mask)
        assert len(image) == count_all_graphs(r - 1) == count_even_graphs(r)
