"""Labeled simple graphs on the vertex set {1, ..., r}.

A graph is stored as a bitmask over vertex pairs in the fixed order
(1,2), (1,3), ..., (1,r), (2,3), ..., (r-1,r); bit k set means the k-th
pair is an edge. Two graphs on the same vertex count are equal iff their
masks are equal.
"""

import json
import math
from dataclasses import dataclass
from functools import lru_cache

from dwinv.errors import NotEvenError, ValidationError


@lru_cache(maxsize=None)
def pairs(r):
    """Vertex pairs of K_r in bitmask order."""
    return tuple((i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1))


@lru_cache(maxsize=None)
def _pair_bits(r):
    return {p: k for k, p in enumerate(pairs(r))}


@lru_cache(maxsize=None)
def star_masks(r):
    """``star_masks(r)[v - 1]`` has a bit for each pair containing v."""
    stars = [0] * r
    for k, (i, j) in enumerate(pairs(r)):
        stars[i - 1] |= 1 << k
        stars[j - 1] |= 1 << k
    return tuple(stars)


def pair_bit(r, i, j):
    """Bit position of the pair {i, j} in a graph on r vertices."""
    if i > j:
        i, j = j, i
    try:
        return _pair_bits(r)[(i, j)]
    except KeyError:
        raise ValidationError(f"({i}, {j}) is not an edge of K_{r}") from None


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    mask: int = 0

    def __post_init__(self):
        if self.num_vertices < 1:
            raise ValidationError("a graph needs at least one vertex")
        n_pairs = self.num_vertices * (self.num_vertices - 1) // 2
        if self.mask < 0 or self.mask >> n_pairs:
            raise ValidationError(f"mask {self.mask} has bits outside K_{self.num_vertices}")

    @classmethod
    def from_edges(cls, r, edges):
        mask = 0
        for i, j in edges:
            if i == j:
                raise ValidationError(f"self-loop at vertex {i}")
            mask |= 1 << pair_bit(r, i, j)
        return cls(r, mask)

    @classmethod
    def empty(cls, r):
        return cls(r, 0)

    @property
    def edges(self):
        """Edges as sorted (i, j) tuples with i < j."""
        return [p for k, p in enumerate(pairs(self.num_vertices)) if self.mask >> k & 1]

    @property
    def num_edges(self):
        return self.mask.bit_count()

    def has_edge(self, i, j):
        return bool(self.mask >> pair_bit(self.num_vertices, i, j) & 1)

    def neighbors(self, v):
        self._check_vertex(v)
        return [w for w in range(1, self.num_vertices + 1) if w != v and self.has_edge(v, w)]

    def _check_vertex(self, v):
        if not 1 <= v <= self.num_vertices:
            raise IndexError(f"vertex {v} not in 1..{self.num_vertices}")

    def to_json(self):
        return json.dumps(
            {"r": self.num_vertices, "edges": [list(e) for e in self.edges]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls.from_edges(data["r"], [tuple(e) for e in data["edges"]])

    def to_dot(self, labels=None, name="G"):
        """Undirected DOT; vertex i sits at angle 2*pi*(i-1)/r on the unit circle."""
        r = self.num_vertices
        labels = labels or list(range(1, r + 1))
        lines = [f"graph {name} {{", "  layout=neato;", "  node [shape=circle];"]
        for v in range(1, r + 1):
            t = 2 * math.pi * (v - 1) / r
            x, y = _clean(math.cos(t)), _clean(math.sin(t))
            lines.append(f'  {v} [label="{labels[v - 1]}", pos="{x:.6f},{y:.6f}!"];')
        for i, j in self.edges:
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_ascii(self, labels=None):
        labels = labels or list(range(1, self.num_vertices + 1))
        rows = []
        for v in range(1, self.num_vertices + 1):
            nbrs = " ".join(str(labels[w - 1]) for w in self.neighbors(v))
            rows.append(f"{labels[v - 1]}: {nbrs}".rstrip())
        return "\n".join(rows) + "\n"


def _clean(c):
    # avoid printing -0.000000
    return 0.0 if abs(c) < 5e-7 else c


def degree(g, v):
    g._check_vertex(v)
    return (g.mask & star_masks(g.num_vertices)[v - 1]).bit_count()


def degrees(g):
    return [(g.mask & s).bit_count() for s in star_masks(g.num_vertices)]


def parity_vector(g):
    """Degree of each vertex mod 2; equals the sum of b_ij over the edges."""
    return tuple((g.mask & s).bit_count() & 1 for s in star_masks(g.num_vertices))


def is_even_graph(g):
    return all((g.mask & s).bit_count() % 2 == 0 for s in star_masks(g.num_vertices))


def connected_components(g):
    """Vertex sets of the connected components, each sorted, ordered by min vertex."""
    r = g.num_vertices
    adj = _adjacency(g)
    seen = [False] * (r + 1)
    parts = []
    for start in range(1, r + 1):
        if seen[start]:
            continue
        seen[start] = True
        stack, part = [start], []
        while stack:
            v = stack.pop()
            part.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        parts.append(sorted(part))
    return parts


def _adjacency(g):
    adj = {v: [] for v in range(1, g.num_vertices + 1)}
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    return adj


def euler_decomposition(g):
    """One closed circuit per connected component (Hierholzer).

    Each circuit is a vertex tuple starting and ending at the component's
    smallest vertex; a lone vertex v gives ``(v,)``. The walk always takes
    the smallest unused neighbour. Raises NotEvenError for the first odd
    vertex if the graph is not even.
    """
    for v, d in enumerate(degrees(g), start=1):
        if d % 2:
            raise NotEvenError(v, d)
    adj = {v: sorted(ns) for v, ns in _adjacency(g).items()}
    circuits = []
    for comp in connected_components(g):
        start = comp[0]
        stack, circuit = [start], []
        while stack:
            v = stack[-1]
            if adj[v]:
                w = adj[v].pop(0)
                adj[w].remove(v)
                stack.append(w)
            else:
                circuit.append(stack.pop())
        circuits.append(tuple(reversed(circuit)))
    return circuits


def circuit_edges(circuit):
    """Consecutive pairs of a circuit as sorted tuples (with repetition)."""
    return [tuple(sorted(p)) for p in zip(circuit, circuit[1:])]
