"""Quadratic residue graph of a set of primes congruent to 1 mod 4."""

from dataclasses import dataclass
from functools import cached_property

from dwinv.errors import ValidationError
from dwinv.graphs import Graph, pair_bit
from dwinv.number_theory import is_prime, legendre


@dataclass(frozen=True)
class PrimeSet:
    """Distinct primes p_1 < ... < p_r, all = 1 (mod 4).

    Input order does not matter; the primes are stored ascending so that
    vertex i of the residue graph is the i-th smallest prime.
    """

    primes: tuple

    def __init__(self, primes):
        ps = tuple(sorted(int(p) for p in primes))
        if not ps:
            raise ValidationError("a prime set needs at least one prime")
        for a, b in zip(ps, ps[1:]):
            if a == b:
                raise ValidationError(f"duplicate prime {a}")
        for p in ps:
            if p < 0 or p >= 1 << 64 or not is_prime(p):
                raise ValidationError(f"{p} is not a prime")
            if p % 4 != 1:
                raise ValidationError(f"{p} is not congruent to 1 mod 4")
        object.__setattr__(self, "primes", ps)

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    @property
    def r(self):
        return len(self.primes)

    @cached_property
    def symbols(self):
        """``symbols[i][j] = (p_i/p_j)`` (0-based), with 1 on the diagonal."""
        r = self.r
        table = [[1] * r for _ in range(r)]
        for i in range(r):
            for j in range(i + 1, r):
                s = legendre(self.primes[i], self.primes[j])
                table[i][j] = table[j][i] = s
        return table

    @property
    def product(self):
        out = 1
        for p in self.primes:
            out *= p
        return out


def build_qr_graph(s):
    """Graph on r vertices with an edge {i, j} iff (p_i/p_j) = -1."""
    if not isinstance(s, PrimeSet):
        s = PrimeSet(s)
    r = s.r
    mask = 0
    for i in range(r):
        for j in range(i + 1, r):
            if s.symbols[i][j] == -1:
                mask |= 1 << pair_bit(r, i + 1, j + 1)
    return Graph(r, mask)
