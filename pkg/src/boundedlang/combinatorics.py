"""Exact combinatorial primitives: binomials, Stirling numbers, binomial periods.

Rationals are plain :class:`fractions.Fraction` values, which are always kept
in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, reduce

from boundedlang.errors import SearchBoundExceeded

STIRLING_TABLE_SIZE = 64


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, vanishing when n < k."""
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


def binomial_poly(x, k: int):
    """The polynomial binomial x(x-1)...(x-k+1)/k! at an arbitrary rational x.

    Unlike :func:`binomial` this does not vanish for x < k; it is the form
    needed when a polynomial identity in x is checked at rational points.
    """
    num = 1
    for j in range(k):
        num *= x - j
    result = Fraction(num) / math.factorial(k)
    return int(result) if result.denominator == 1 else result


@lru_cache(maxsize=None)
def _stirling1_table(size: int) -> tuple[tuple[int, ...], ...]:
    # S(i+1, j) = S(i, j-1) + i*S(i, j), S(0, 0) = 1
    rows = [[1] + [0] * size]
    for i in range(size):
        prev = rows[-1]
        row = [0] * (size + 1)
        for j in range(1, i + 2):
            row[j] = prev[j - 1] + i * prev[j]
        rows.append(row)
    return tuple(tuple(r) for r in rows)


def stirling1_unsigned(i: int, j: int) -> int:
    """Unsigned Stirling number of the first kind [i, j]."""
    if i < 0 or j < 0 or j > i:
        return 0
    size = STIRLING_TABLE_SIZE
    while size < i:
        size *= 2
    return _stirling1_table(size)[i][j]


def factorize(m: int) -> dict[int, int]:
    """Trial-division factorization; fine for the moduli used here."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def _ilog_ceil(p: int, x: int) -> int:
    """Smallest e with p**e >= x."""
    e, power = 0, 1
    while power < x:
        power *= p
        e += 1
    return e


def period_search_cap(k: int, m: int, safety: int = 4) -> int:
    """Upper bound on the period of C(n, k) mod m used to stop the search."""
    parts = [p ** (e + _ilog_ceil(p, k + 1)) for p, e in factorize(m).items()]
    return safety * reduce(math.lcm, parts, 1)


def binomial_column_period(k: int, m: int, cap: int | None = None) -> int:
    """Minimal period of the sequence (C(n, k) mod m) for n >= 0.

    Candidates are tried in increasing order and each is verified over two
    full periods (and at least k + 1 terms). That check is conclusive:
    C(n + p, k) - C(n, k) is an integer-valued polynomial of degree k - 1, so
    vanishing mod m at k consecutive n makes it vanish mod m everywhere.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if m == 1:
        return 1
    if cap is None:
        cap = period_search_cap(k, m)
    seq: list[int] = []
    column = [1] + [0] * k  # C(n, 0..k) mod m for the next n

    def extend(length: int) -> None:
        nonlocal column
        while len(seq) < length:
            seq.append(column[k])
            column = [1] + [(column[j] + column[j - 1]) % m for j in range(1, k + 1)]

    for period in range(1, cap + 1):
        check = max(2 * period, k + 1)
        extend(check + period)
        if all(seq[n] == seq[n + period] for n in range(check)):
            return period
    raise SearchBoundExceeded(f"no period of C(n, {k}) mod {m} found below {cap}")


def lcm_all(values) -> int:
    return reduce(math.lcm, values, 1)
