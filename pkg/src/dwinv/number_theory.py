"""Primality, sieving and quadratic symbols.

``legendre`` uses Euler's criterion and ``jacobi`` the binary reciprocity
algorithm. The two are independent on purpose so each can check the other.
"""

from math import gcd

import numpy as np

from dwinv.errors import DomainError, LimitError

# Complete for every n < 3.3e24, hence for all 64-bit integers.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_U64 = 1 << 64

SIEVE_LIMIT = 10**8


def is_prime(n):
    """Deterministic Miller-Rabin test for 0 <= n < 2**64."""
    if n < 0 or n >= _U64:
        raise DomainError(f"is_prime expects 0 <= n < 2**64, got {n}")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve(x, limit=SIEVE_LIMIT):
    """Return a bytearray ``flags`` with ``flags[n] == 1`` iff n <= x is prime."""
    if x < 0:
        raise DomainError(f"sieve bound must be non-negative, got {x}")
    if x > limit:
        raise LimitError(f"sieve bound {x} exceeds memory budget {limit}")
    flags = bytearray([1]) * (x + 1)
    flags[: min(2, x + 1)] = bytes(min(2, x + 1))
    i = 2
    while i * i <= x:
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, x + 1, i)))
        i += 1
    return flags


def primes_1_mod_4_up_to(x, limit=SIEVE_LIMIT):
    """All primes p <= x with p = 1 (mod 4), ascending."""
    flags = sieve(x, limit)
    return [p for p in range(5, x + 1, 4) if flags[p]]


def pi41(x, limit=SIEVE_LIMIT):
    """Number of primes p <= x with p = 1 (mod 4)."""
    return len(primes_1_mod_4_up_to(x, limit))


def legendre(a, p):
    """Legendre symbol (a/p) for an odd prime p not dividing a.

    Computed by Euler's criterion a^((p-1)/2) mod p.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    if a % p == 0:
        raise DomainError(f"{p} divides {a}")
    t = pow(a % p, (p - 1) // 2, p)
    if t == 1:
        return 1
    if t == p - 1:
        return -1
    raise DomainError(f"Euler's criterion gave {t} for ({a}/{p})")  # pragma: no cover


def jacobi(a, n):
    """Jacobi symbol (a/n) for odd n > 0 coprime to a."""
    if n <= 0 or n % 2 == 0:
        raise DomainError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    if gcd(a, n) != 1:
        raise DomainError(f"gcd({a}, {n}) != 1")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result


def nonresidue_matrix(primes):
    """Boolean matrix ``M[i, j] = (p_i/p_j) == -1`` for distinct odd primes.

    Euler's criterion, vectorised over the column prime. Only i < j is
    evaluated; the lower triangle is mirrored, which is valid when all
    primes are 1 mod 4 (quadratic reciprocity). Diagonal is False.
    """
    ps = np.asarray(primes, dtype=np.int64)
    n = len(ps)
    if n and int(ps.max()) >= 3_037_000_499:
        raise DomainError("vectorised symbols need primes below sqrt(2**63)")
    out = np.zeros((n, n), dtype=bool)
    for j in range(1, n):
        q = int(ps[j])
        base = ps[:j] % q
        acc = np.ones(j, dtype=np.int64)
        e = (q - 1) // 2
        while e:
            if e & 1:
                acc = acc * base % q
            base = base * base % q
            e >>= 1
        out[:j, j] = acc == q - 1
    return out | out.T
