"""Counting labeled graphs and even graphs on {1, ..., r}."""

from dwinv.errors import DomainError, LimitError
from dwinv.graphs import Graph, is_even_graph, pair_bit, pairs, parity_vector

ENUMERATION_LIMIT = 7


def count_all_graphs(r):
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    return 1 << (r * (r - 1) // 2)


def count_even_graphs(r):
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    return 1 << ((r - 1) * (r - 2) // 2)


def all_graphs(r):
    """Every graph on r vertices in ascending bitmask order."""
    for mask in range(count_all_graphs(r)):
        yield Graph(r, mask)


def enumerate_even_graphs(r, limit=ENUMERATION_LIMIT, start=0, stop=None):
    """Even graphs on r vertices in ascending bitmask order.

    ``start``/``stop`` restrict the scan to a bitmask interval so that
    callers can split the work.
    """
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    if r > limit:
        raise LimitError(f"exhaustive enumeration limited to r <= {limit}, got {r}")
    stop = count_all_graphs(r) if stop is None else stop
    for mask in range(start, stop):
        g = Graph(r, mask)
        if is_even_graph(g):
            yield g


def attach_even_vertex(g):
    """Add vertex r+1 joined to every odd vertex of g; the result is even."""
    r = g.num_vertices + 1
    old_bits = [pair_bit(r, i, j) for i, j in pairs(g.num_vertices)]
    mask = 0
    for k, bit in enumerate(old_bits):
        if g.mask >> k & 1:
            mask |= 1 << bit
    for v, odd in enumerate(parity_vector(g), start=1):
        if odd:
            mask |= 1 << pair_bit(r, v, r)
    return Graph(r, mask)

