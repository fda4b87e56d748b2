"""Published numerical examples of Z_k, used as golden values."""

from dwinv.dw_invariant import METHODS, DyadicValue

APPENDIX_ROWS = (
    ((5, 13, 17), 0),
    ((5, 13, 37), 2),
    ((5, 13, 41), 0),
    ((5, 13, 61), 0),
    ((5, 29, 37), 0),
    ((5, 13, 17, 29), 0),
    ((5, 13, 17, 41), 4),
    ((5, 13, 29, 53), 0),
    ((5, 13, 29, 61), 0),
    ((5, 13, 37, 101), 4),
    ((5, 17, 29, 37), 0),
    ((5, 13, 37, 113), 0),
    ((13, 17, 29, 97), 0),
    ((5, 17, 41, 53), 4),
    ((13, 17, 53, 73), 0),
    ((5, 17, 37, 113), 0),
    ((5, 29, 41, 89), 4),
    ((5, 37, 61, 101), 0),
)


def check_table(rows=APPENDIX_ROWS):
    """Recompute each row with every method.

    Returns a list of (primes, expected, {method: value}, ok) tuples.
    """
    if not rows:
        raise ValueError("golden table is empty")
    results = []
    for primes, expected in rows:
        values = {name: fn(primes) for name, fn in METHODS.items()}
        exp = DyadicValue.from_fraction(expected)
        ok = all(v == exp for v in values.values())
        results.append((tuple(primes), exp, values, ok))
    return results
