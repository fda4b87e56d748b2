"""Z_M for the double cover of S^3 branched over an r-component link.

The link enters only through its mod 2 linking matrix. File format: the
first line is r, followed by r lines of r space-separated 0/1 entries.
"""

from dataclasses import dataclass

from dwinv.dw_invariant import BRUTE_FORCE_LIMIT, DyadicValue, character_sum
from dwinv.errors import ValidationError
from dwinv.graphs import Graph, is_even_graph, pair_bit


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric 0/1 matrix with zero diagonal: lk(K_i, K_j) mod 2."""

    entries: tuple

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        r = len(rows)
        if r < 1:
            raise ValidationError("linking matrix needs at least one component")
        for i, row in enumerate(rows):
            if len(row) != r:
                raise ValidationError(f"row {i + 1} has {len(row)} entries, expected {r}")
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise ValidationError(f"entry ({i + 1}, {j + 1}) = {x} is not 0 or 1")
        for i in range(r):
            if rows[i][i]:
                raise ValidationError(f"diagonal entry ({i + 1}, {i + 1}) must be 0")
            for j in range(i + 1, r):
                if rows[i][j] != rows[j][i]:
                    raise ValidationError(f"matrix is not symmetric at ({i + 1}, {j + 1})")
        object.__setattr__(self, "entries", rows)

    @property
    def r(self):
        return len(self.entries)

    @classmethod
    def from_graph(cls, g):
        r = g.num_vertices
        rows = [[0] * r for _ in range(r)]
        for i, j in g.edges:
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = 1
        return cls(rows)

    @classmethod
    def parse(cls, text):
        lines = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValidationError("empty linking-matrix file")
        try:
            r = int(lines[0][0])
        except ValueError:
            raise ValidationError(f"first line must be r, got {lines[0]!r}") from None
        if len(lines[0]) != 1:
            raise ValidationError("first line must contain only r")
        body = lines[1:]
        if len(body) != r:
            raise ValidationError(f"expected {r} matrix rows, found {len(body)}")
        try:
            rows = [[int(x) for x in row] for row in body]
        except ValueError as exc:
            raise ValidationError(f"non-integer matrix entry: {exc}") from None
        return cls(rows)

    @classmethod
    def read(cls, path):
        with open(path) as fh:
            return cls.parse(fh.read())

    def dumps(self):
        body = "\n".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"{self.r}\n{body}\n"


def build_linking_graph(m):
    """Graph with an edge {i, j} iff lk(K_i, K_j) is odd."""
    mask = 0
    for i in range(m.r):
        for j in range(i + 1, m.r):
            if m.entries[i][j]:
                mask |= 1 << pair_bit(m.r, i + 1, j + 1)
    return Graph(m.r, mask)


def link_invariant_fast(m):
    if is_even_graph(build_linking_graph(m)):
        return DyadicValue.power_of_two(m.r - 2)
    return DyadicValue(0)


def link_hirano_sum(m, limit=BRUTE_FORCE_LIMIT, workers=1):
    """1/2 * sum over rho of exp(pi i sum_{i<j} rho(b_ij) lk(K_i, K_j))."""
    signs = [[-1 if x else 1 for x in row] for row in m.entries]
    return DyadicValue(character_sum(signs, limit, workers), -1)
