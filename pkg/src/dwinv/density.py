"""Density of r-subsets of primes = 1 (mod 4) whose residue graph is even.

Exhaustive scans walk r-subsets of the prime pool in colexicographic order;
Monte Carlo draws uniform r-subsets by a partial Fisher-Yates shuffle of the
index range. Legendre symbols for the pool are computed once per run.
"""

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from dwinv.errors import BudgetError, DomainError
from dwinv.number_theory import nonresidue_matrix, primes_1_mod_4_up_to

SUBSET_BUDGET = 10**8
_MC_BLOCK = 1 << 16

CSV_HEADER = (
    "r", "x", "mode", "samples", "hits", "empirical",
    "theoretical", "std_error", "seed", "pi41_x",
)


@dataclass(frozen=True)
class DensityReport:
    r: int
    x: int
    mode: str
    samples: int
    hits: int
    pi41_x: int
    std_error: float = None
    seed: int = None
    workers: int = 1

    @property
    def empirical(self):
        return Fraction(self.hits, self.samples) if self.samples else Fraction(0)

    @property
    def theoretical(self):
        return Fraction(1, 1 << (self.r - 1))

    def csv_row(self):
        return [
            self.r,
            self.x,
            self.mode,
            self.samples,
            self.hits,
            f"{float(self.empirical):.10g}",
            f"{float(self.theoretical):.10g}",
            "" if self.std_error is None else f"{self.std_error:.10g}",
            "" if self.seed is None else self.seed,
            self.pi41_x,
        ]


def reports_to_csv(reports):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rep in reports:
        w.writerow(rep.csv_row())
    return buf.getvalue()


class PrimePool:
    """Primes = 1 (mod 4) up to x with their pairwise non-residue table."""

    def __init__(self, x):
        self.x = x
        self.primes = primes_1_mod_4_up_to(x)
        mat = nonresidue_matrix(self.primes).astype(np.uint8)
        # bytes rows: O(1) scalar lookups from pure-Python loops
        self.rows = [row.tobytes() for row in mat]

    def __len__(self):
        return len(self.primes)

    def sign(self, i, j):
        return -1 if self.rows[i][j] else 1


def colex_combinations(n, r):
    """r-subsets of range(n) as ascending tuples, in colexicographic order."""
    if r == 0:
        yield ()
        return
    if r > n:
        return
    c = list(range(r)) + [n]
    while True:
        yield tuple(c[:r])
        i = 0
        while i < r and c[i] + 1 == c[i + 1]:
            c[i] = i
            i += 1
        if i >= r:
            return
        c[i] += 1


def _even(rows, idx):
    for j in idx:
        row = rows[j]
        par = 0
        for i in idx:
            par ^= row[i]
        if par:
            return False
    return True


def _indicator(rows, idx):
    prod = 1
    for j in idx:
        row = rows[j]
        inner = 1
        for i in idx:
            if row[i]:
                inner = -inner
        prod *= 1 + inner
    return prod


_worker_rows = None


def _init_worker(rows):
    global _worker_rows
    _worker_rows = rows


def _count_with_top(args):
    r, tops, kind = args
    rows = _worker_rows
    total = 0
    for t in tops:
        for rest in colex_combinations(t, r - 1):
            idx = rest + (t,)
            if kind == "even":
                total += _even(rows, idx)
            else:
                total += _indicator(rows, idx)
    return total


def _scan(pool, r, kind, workers):
    n = len(pool)
    if workers <= 1:
        total = 0
        if kind == "even":
            for idx in colex_combinations(n, r):
                total += _even(pool.rows, idx)
        else:
            for idx in colex_combinations(n, r):
                total += _indicator(pool.rows, idx)
        return total
    tops = list(range(r - 1, n))
    chunks = [(r, tops[w::workers], kind) for w in range(workers)]
    with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(pool.rows,)) as ex:
        return sum(ex.map(_count_with_top, chunks))


def _check_budget(n, r, budget):
    required = math.comb(n, r)
    if required > budget:
        raise BudgetError(required, budget)
    return required


def _check_r(r):
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")


def exact_density_scan(r, x, budget=SUBSET_BUDGET, workers=1, pool=None):
    """Count every r-subset of the pool whose residue graph is even."""
    _check_r(r)
    pool = PrimePool(x) if pool is None else pool
    samples = _check_budget(len(pool), r, budget)
    hits = _scan(pool, r, "even", workers)
    return DensityReport(r, x, "exhaustive", samples, hits, len(pool), workers=workers)


def indicator_count(r, x, budget=SUBSET_BUDGET, workers=1, pool=None):
    """#S_r(x) = 2^-r * sum over r-subsets of prod_j (1 + prod_{i != j} (p_i/p_j))."""
    _check_r(r)
    pool = PrimePool(x) if pool is None else pool
    _check_budget(len(pool), r, budget)
    total = _scan(pool, r, "indicator", workers)
    count, rem = divmod(total, 1 << r)
    if rem:
        raise DomainError(f"indicator sum {total} not divisible by 2^{r}")  # pragma: no cover
    return count


def _draw_hits(rows, n, r, samples, seed_seq):
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    hits = 0
    done = 0
    while done < samples:
        b = min(_MC_BLOCK, samples - done)
        # step k of the partial shuffle swaps position k with k + U[0, n - k)
        draws = [(k + rng.integers(0, n - k, size=b)).tolist() for k in range(r)]
        for t in range(b):
            moved = {}
            idx = []
            for k in range(r):
                j = draws[k][t]
                idx.append(moved.get(j, j))
                moved[j] = moved.get(k, k)
            hits += _even(rows, idx)
        done += b
    return hits


def _mc_worker(args):
    r, n, samples, seed_seq = args
    return _draw_hits(_worker_rows, n, r, samples, seed_seq)


def monte_carlo_density(r, x, samples, seed, workers=1, pool=None):
    """Estimate the density from ``samples`` independent uniform r-subsets.

    Worker w draws from stream w of ``SeedSequence(seed).spawn(workers)``,
    so a result is reproducible for a fixed (seed, workers) pair.
    """
    _check_r(r)
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    if not 0 <= seed < 1 << 64:
        raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
    workers = max(1, workers)
    pool = PrimePool(x) if pool is None else pool
    n = len(pool)
    if n < r:
        raise DomainError(f"pool of {n} primes is smaller than r = {r}")
    streams = np.random.SeedSequence(seed).spawn(workers)
    shares = [samples // workers + (w < samples % workers) for w in range(workers)]
    if workers == 1:
        hits = _draw_hits(pool.rows, n, r, samples, streams[0])
    else:
        jobs = [(r, n, shares[w], streams[w]) for w in range(workers)]
        with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(pool.rows,)) as ex:
            hits = sum(ex.map(_mc_worker, jobs))
    p = hits / samples
    se = math.sqrt(p * (1 - p) / samples)
    return DensityReport(r, x, "monte_carlo", samples, hits, n, se, seed, workers)


def character_sum_es(r, s, x, budget=SUBSET_BUDGET, pool=None):
    """E_s(x): sum over ordered r-tuples of distinct pool primes of
    ((p_{s+1} ... p_r) / (p_1 ... p_s)).

    By multiplicativity the summand is prod_{a <= s < b} (p_b/p_a). Each
    unordered subset contributes, for every split into s denominator primes
    and r - s numerator primes, s! (r - s)! identical ordered tuples.
    """
    if not 0 < s < r:
        raise DomainError(f"need 0 < s < r, got s = {s}, r = {r}")
    pool = PrimePool(x) if pool is None else pool
    n = len(pool)
    ordered = math.perm(n, r)
    if ordered > budget:
        raise BudgetError(ordered, budget)
    rows = pool.rows
    weight = math.factorial(s) * math.factorial(r - s)
    total = 0
    for idx in colex_combinations(n, r):
        for den in combinations(idx, s):
            num = [b for b in idx if b not in den]
            neg = 0
            for a in den:
                row = rows[a]
                for b in num:
                    neg ^= row[b]
            total += -1 if neg else 1
    return weight * total


def es_decay_table(r, s, xs):
    """Rows (x, pi41(x), E_s(x), |E_s(x)| / pi41(x)^r) for each x."""
    out = []
    for x in xs:
        pool = PrimePool(x)
        e = character_sum_es(r, s, x, pool=pool)
        n = len(pool)
        ratio = Fraction(abs(e), n**r) if n else Fraction(0)
        out.append((x, n, e, ratio))
    return out
