from itertools import combinations

import pytest


def trial_division_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def euler_symbol(a, p):
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else 1


@pytest.fixture(scope="session")
def pool150():
    return [p for p in range(2, 150) if p % 4 == 1 and trial_division_is_prime(p)]


@pytest.fixture(scope="session")
def oracle_subsets(pool150):
    return [s for r in range(1, 6) for s in combinations(pool150, r)]
