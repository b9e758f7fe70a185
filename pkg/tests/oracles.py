"""Brute-force reference computations, deliberately independent of the library's formulas."""

from fractions import Fraction
from itertools import product


def pascal_binomial(n, k):
    """C(n, k) by repeated Pascal addition."""
    if k < 0 or n < k:
        return 0
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k]


def rising_factorial_coeffs(i):
    """Coefficients of x(x+1)...(x+i-1), lowest degree first."""
    coeffs = [1]
    for t in range(i):
        # multiply by (x + t)
        nxt = [0] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d] += t * c
            nxt[d + 1] += c
        coeffs = nxt
    return coeffs


def shortlex_words(alphabet, max_len):
    """All words over ``alphabet`` in shortlex order, as strings."""
    for n in range(max_len + 1):
        for letters in product(alphabet, repeat=n):
            yield "".join(letters)


def bounded_words(ell, max_len):
    """Words of a1*...al* (letters 'a', 'b', ...) in shortlex order, by filtering all words."""
    alphabet = "abcdefghijklmnopqrstuvwxyz"[:ell]
    for w in shortlex_words(alphabet, max_len):
        if list(w) == sorted(w):
            yield w


def exponents_of(word, ell):
    return tuple(word.count(ch) for ch in "abcdefghijklmnopqrstuvwxyz"[:ell])


def pascal_column(k, count):
    """[C(0, k), ..., C(count-1, k)] by walking Pascal's triangle row by row."""
    out = []
    row = [1] + [0] * k
    for _ in range(count):
        out.append(row[k])
        row = [1] + [row[j] + row[j - 1] for j in range(1, k + 1)]
    return out


def period_by_scan(seq, max_period):
    window = len(seq)
    for p in range(1, max_period + 1):
        if all(seq[n] == seq[n + p] for n in range(window - p)):
            return p
    return None


def poly_eval(coeffs, x):
    return sum(Fraction(c) * x**d for d, c in enumerate(coeffs))
