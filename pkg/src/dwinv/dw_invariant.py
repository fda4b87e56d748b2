"""The invariant Z_k of Q(sqrt(p_1 ... p_r)) computed three ways.

``hirano_sum`` evaluates the character sum over Hom(T, Z/2Z) term by term,
``product_indicator`` uses the product of (1 + prod_i (p_i/p_j)) over j, and
``invariant_fast`` applies the even-graph criterion to the residue graph.

Hom(T, Z/2Z) is parametrised by vectors c in (Z/2Z)^r with c_1 = 0:
rho(b_ij) = c_i + c_j. Since b_ij = b_1i + b_1j in T, the values on the b_1j
determine rho, and c_1 = 0 picks one representative per homomorphism.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from dwinv.errors import DimensionError, InternalError, LimitError
from dwinv.graphs import is_even_graph, pairs
from dwinv.qr_graph import PrimeSet, build_qr_graph

BRUTE_FORCE_LIMIT = 24


@dataclass(frozen=True, order=False)
class DyadicValue:
    """Exact rational mantissa * 2**exponent in canonical form."""

    mantissa: int
    exponent: int = 0

    def __post_init__(self):
        m, e = self.mantissa, self.exponent
        if m == 0:
            e = 0
        else:
            tz = (m & -m).bit_length() - 1
            m >>= tz
            e += tz
        object.__setattr__(self, "mantissa", m)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def from_fraction(cls, q):
        q = Fraction(q)
        d = q.denominator
        if d & (d - 1):
            raise ValueError(f"{q} is not dyadic")
        return cls(q.numerator, -(d.bit_length() - 1))

    @classmethod
    def power_of_two(cls, e):
        return cls(1, e)

    def to_fraction(self):
        if self.exponent >= 0:
            return Fraction(self.mantissa << self.exponent)
        return Fraction(self.mantissa, 1 << -self.exponent)

    def __float__(self):
        return float(self.to_fraction())

    def __add__(self, other):
        other = _as_dyadic(other)
        e = min(self.exponent, other.exponent)
        return DyadicValue(
            (self.mantissa << (self.exponent - e)) + (other.mantissa << (other.exponent - e)), e
        )

    __radd__ = __add__

    def __mul__(self, other):
        other = _as_dyadic(other)
        return DyadicValue(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DyadicValue.from_fraction(other)
        if not isinstance(other, DyadicValue):
            return NotImplemented
        return (self.mantissa, self.exponent) == (other.mantissa, other.exponent)

    def __hash__(self):
        return hash(self.to_fraction())

    def __str__(self):
        if self.exponent >= 0:
            return str(self.mantissa << self.exponent)
        return f"{self.mantissa}/{1 << -self.exponent}"

    def __repr__(self):
        return f"DyadicValue({self.mantissa}, {self.exponent})"


def _as_dyadic(x):
    if isinstance(x, DyadicValue):
        return x
    return DyadicValue.from_fraction(x)


@dataclass(frozen=True)
class HomElement:
    """rho in Hom(T, Z/2Z), stored as c = (c_1, ..., c_r) with c_1 = 0."""

    c: tuple

    def __post_init__(self):
        c = tuple(int(x) & 1 for x in self.c)
        if not c:
            raise DimensionError("HomElement needs r >= 1")
        if c[0] != 0:
            raise ValueError("HomElement is normalised by c_1 = 0")
        object.__setattr__(self, "c", c)

    @classmethod
    def from_index(cls, r, n):
        """The element whose bits c_2..c_r are the binary digits of n."""
        return cls((0,) + tuple((n >> k) & 1 for k in range(r - 1)))

    @property
    def r(self):
        return len(self.c)

    def __call__(self, i, j):
        """rho(b_ij) for 1-based i != j."""
        return self.c[i - 1] ^ self.c[j - 1]

    def __add__(self, other):
        if self.r != other.r:
            raise DimensionError(f"cannot add Hom elements of rank {self.r} and {other.r}")
        return HomElement(tuple(a ^ b for a, b in zip(self.c, other.c)))

    def on_vector(self, x):
        """rho(x) for x in T, using rho(x) = sum_i c_i x_i."""
        if len(x) != self.r:
            raise DimensionError("vector length does not match rank")
        if sum(x) % 2:
            raise ValueError("vector is not in T (odd weight)")
        return sum(ci & xi for ci, xi in zip(self.c, x)) & 1


def hom_elements(r):
    """All 2**(r-1) elements of Hom(T, Z/2Z) in counter order."""
    return [HomElement.from_index(r, n) for n in range(1 << (r - 1))]


def _symbols(s):
    if not isinstance(s, PrimeSet):
        s = PrimeSet(s)
    return s, s.symbols


def phi_character(s, rho):
    """phi(rho) = prod_{i<j} (p_i/p_j)^rho(b_ij), a sign."""
    s, sym = _symbols(s)
    if rho.r != s.r:
        raise DimensionError(f"rho has rank {rho.r} but the prime set has {s.r} primes")
    value = 1
    for i, j in pairs(s.r):
        if rho(i, j):
            value *= sym[i - 1][j - 1]
    return value


def _negative_pair_mask(signs):
    r = len(signs)
    mask = 0
    for k, (i, j) in enumerate(pairs(r)):
        if signs[i - 1][j - 1] == -1:
            mask |= 1 << k
    return mask


def _rho_masks(r):
    # toggling c_v flips rho(b_ij) exactly for the pairs containing v
    toggles = [0] * r
    for k, (i, j) in enumerate(pairs(r)):
        toggles[i - 1] |= 1 << k
        toggles[j - 1] |= 1 << k
    return toggles


def character_sum_range(signs, start, stop):
    """Sum of prod_{i<j} signs[i][j]^rho(b_ij) over rho with index in [start, stop).

    rho runs over Hom(T, Z/2Z) in Gray-code order: index n corresponds to
    c_2..c_r = bits of n ^ (n >> 1). Each term is the honest product over
    all pairs, evaluated as the parity of the pairs where the sign is -1
    and rho(b_ij) = 1.
    """
    r = len(signs)
    neg = _negative_pair_mask(signs)
    toggles = _rho_masks(r)
    g = start ^ (start >> 1)
    rho_mask = 0
    for k in range(r - 1):
        if g >> k & 1:
            rho_mask ^= toggles[k + 1]
    total = 0
    for n in range(start, stop):
        total += -1 if (neg & rho_mask).bit_count() & 1 else 1
        # next Gray code differs in the lowest set bit of n + 1
        nxt = n + 1
        k = (nxt & -nxt).bit_length() - 1
        if k < r - 1:
            rho_mask ^= toggles[k + 1]
    return total


def character_sum(signs, limit=BRUTE_FORCE_LIMIT, workers=1):
    """Sum over all of Hom(T, Z/2Z); integer-valued, split across workers if asked."""
    r = len(signs)
    if r > limit:
        raise LimitError(f"brute-force character sum limited to r <= {limit}, got r = {r}")
    n = 1 << (r - 1)
    if workers <= 1 or n < 2 * workers:
        return character_sum_range(signs, 0, n)
    bounds = [n * w // workers for w in range(workers + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(
            character_sum_range, [signs] * workers, bounds[:-1], bounds[1:]
        )
        return sum(parts)


def hirano_sum(s, limit=BRUTE_FORCE_LIMIT, workers=1):
    """Z_k = 1/2 * sum over rho of phi(rho), by brute force."""
    s, sym = _symbols(s)
    return DyadicValue(character_sum(sym, limit, workers), -1)


def indicator_product(signs):
    """prod_j (1 + prod_{i != j} signs[i][j]); always 0 or 2**r."""
    r = len(signs)
    prod = 1
    for j in range(r):
        inner = 1
        for i in range(r):
            if i != j:
                inner *= signs[i][j]
        prod *= 1 + inner
    if prod not in (0, 1 << r):
        raise InternalError(f"indicator product {prod} is neither 0 nor 2^{r}")
    return prod


def product_indicator(s):
    """Z_k as one quarter of the indicator product."""
    s, sym = _symbols(s)
    return DyadicValue(indicator_product(sym), -2)


def invariant_fast(s):
    """Z_k = 2**(r-2) if the residue graph is even, else 0."""
    if not isinstance(s, PrimeSet):
        s = PrimeSet(s)
    if is_even_graph(build_qr_graph(s)):
        return DyadicValue.power_of_two(s.r - 2)
    return DyadicValue(0)


METHODS = {
    "fast": invariant_fast,
    "hirano": hirano_sum,
    "product": product_indicator,
}
