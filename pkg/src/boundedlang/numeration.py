"""The numeration system on B_l = a1* a2* ... al* under shortlex order.

Words of B_l are identified with their exponent vectors; a word such as
``b^2223270`` is never materialized as a string.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from boundedlang.combinatorics import binomial
from boundedlang.errors import NegativeExponent, WordSyntaxError

EPSILON = "ε"


def letter_names(ell: int) -> list[str]:
    if ell <= 26:
        return [chr(ord("a") + i) for i in range(ell)]
    return [f"a{i + 1}" for i in range(ell)]


@dataclass(frozen=True)
class BoundedWord:
    """The word a1^n1 a2^n2 ... al^nl, stored as its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if not exps:
            raise ValueError("a bounded word needs at least one letter slot")
        if any(e < 0 for e in exps):
            raise NegativeExponent(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def empty(cls, ell: int) -> BoundedWord:
        return cls((0,) * ell)

    @property
    def ell(self) -> int:
        return len(self.exponents)

    @property
    def length(self) -> int:
        # not __len__: lengths routinely exceed sys.maxsize
        return sum(self.exponents)

    def __str__(self) -> str:
        parts = []
        for name, e in zip(letter_names(self.ell), self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return " ".join(parts) if parts else EPSILON

    def letters(self) -> str:
        """Expanded letter string; only sensible for short words and l <= 26."""
        return "".join(name * e for name, e in zip(letter_names(self.ell), self.exponents))

    def suffix(self) -> BoundedWord:
        """The word over a2..al obtained by erasing the a1's."""
        return BoundedWord(self.exponents[1:])


_TOKEN_SMALL = re.compile(r"([a-z])(?:\^(\d+))?")
_TOKEN_BIG = re.compile(r"a(\d+)(?:\^(\d+))?")


def parse_word(text: str, ell: int) -> BoundedWord:
    """Parse ``a b^2``, ``abb``, ``a^9 b^10`` (or ``a1^3 a2`` for l > 26).

    Letters must appear in nondecreasing alphabet order; ``ε`` or an empty
    string denotes the empty word.
    """
    names = letter_names(ell)
    exps = [0] * ell
    pos = 0
    current = 0
    stripped = text.strip()
    if stripped in ("", EPSILON):
        return BoundedWord(tuple(exps))
    pattern = _TOKEN_BIG if ell > 26 else _TOKEN_SMALL
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] == EPSILON:
            pos += 1
            continue
        m = pattern.match(text, pos)
        if not m:
            raise WordSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if ell > 26:
            idx = int(m.group(1)) - 1
            if not 0 <= idx < ell:
                raise WordSyntaxError(f"letter a{idx + 1} outside alphabet of size {ell}", pos)
        else:
            idx = names.index(m.group(1)) if m.group(1) in names else -1
            if idx < 0:
                raise WordSyntaxError(f"letter {m.group(1)!r} outside alphabet of size {ell}", pos)
        if idx < current:
            raise WordSyntaxError(f"letter {names[idx]} after {names[current]}: word not in B_{ell}", pos)
        current = idx
        exps[idx] += int(m.group(2)) if m.group(2) is not None else 1
        pos = m.end()
    return BoundedWord(tuple(exps))


@dataclass(frozen=True)
class CombinatorialDecomposition:
    """n = C(z_l, l) + ... + C(z_1, 1) with z_l > ... > z_1 >= 0.

    ``z`` is stored from the top: ``z[0]`` is z_l.
    """

    z: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.z)

    @property
    def value(self) -> int:
        ell = self.ell
        return sum(binomial(zi, ell - j) for j, zi in enumerate(self.z))

    def is_strictly_decreasing(self) -> bool:
        return all(a > b for a, b in zip(self.z, self.z[1:])) and self.z[-1] >= 0


def count_length(ell: int, n: int) -> int:
    """Number of words of B_l of length exactly n."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    return binomial(n + ell - 1, ell - 1)


def count_upto(ell: int, n: int) -> int:
    """Number of words of B_l of length at most n."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    return binomial(n + ell, ell)


def value_of(w: BoundedWord) -> int:
    """Shortlex rank of ``w`` in B_l, starting from 0."""
    ell = w.ell
    total = 0
    tail = 0
    # walk from the last letter so suffix sums accumulate
    for j in range(ell - 1, -1, -1):
        tail += w.exponents[j]
        total += binomial(tail + ell - 1 - j, ell - j)
    return total


def _find_t(n: int, i: int) -> int:
    """Largest t with C(t, i) <= n, for n >= 1."""
    # float guess from C(t, i) ~ (t - (i-1)/2)^i / i!, then exact correction
    try:
        guess = math.exp((math.log(n) + math.lgamma(i + 1)) / i) + (i - 1) / 2
        t = max(i, int(guess))
    except OverflowError:
        t = i
    if binomial(t, i) > n:
        step = 1
        while binomial(t, i) > n:
            hi = t
            t = max(i, t - step)
            step *= 2
        lo = t
    else:
        step = 1
        lo = t
        hi = t + step
        while binomial(hi, i) <= n:
            lo = hi
            step *= 2
            hi = lo + step
    # invariant: C(lo, i) <= n < C(hi, i)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binomial(mid, i) <= n:
            lo = mid
        else:
            hi = mid
    return lo


def decompose(n: int, ell: int) -> CombinatorialDecomposition:
    """Greedy combinatorial expansion of n with l terms."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    z = []
    for i in range(ell, 0, -1):
        if n > 0:
            t = _find_t(n, i)
            z.append(t)
            n -= binomial(t, i)
        else:
            z.append(i - 1)
    return CombinatorialDecomposition(tuple(z))


def exponents_from_decomposition(d: CombinatorialDecomposition) -> BoundedWord:
    """Back-substitute n_i + ... + n_l = z_(l-i+1) - l + i."""
    ell = d.ell
    # suffix[i] = n_(i+1) + ... + n_l for 0-based i; z[0] is z_l
    suffix = [d.z[i] - (ell - 1 - i) for i in range(ell)]
    exps = []
    for i in range(ell):
        nxt = suffix[i + 1] if i + 1 < ell else 0
        e = suffix[i] - nxt
        if e < 0:
            raise NegativeExponent(f"decomposition {d.z} is not strictly decreasing")
        exps.append(e)
    return BoundedWord(tuple(exps))


def represent(n: int, ell: int) -> BoundedWord:
    """The (n+1)-st word of B_l in shortlex order."""
    return exponents_from_decomposition(decompose(n, ell))


def length_bounds(ell: int, k: int) -> tuple[int, int]:
    """Inclusive range of values of the words of length k."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    low = binomial(k + ell - 1, ell)
    high = sum(binomial(k + i - 1, i) for i in range(1, ell + 1))
    return low, high


def length_of_value(n: int, ell: int) -> int:
    """|rep_l(n)|, without computing the whole representation."""
    return decompose(n, ell).z[0] - ell + 1


def _words_of_length(ell: int, n: int) -> Iterator[tuple[int, ...]]:
    # lexicographic order with a1 < ... < al: more leading a1's come first
    if ell == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _words_of_length(ell - 1, n - first):
            yield (first,) + rest


def shortlex_enumerate(ell: int, limit: int | None = None) -> Iterator[BoundedWord]:
    """Brute-force shortlex enumeration of B_l (the reference oracle)."""
    produced = 0
    length = 0
    while limit is None or produced < limit:
        for exps in _words_of_length(ell, length):
            if limit is not None and produced >= limit:
                return
            yield BoundedWord(exps)
            produced += 1
        length += 1


def word_from_letters(text: str, alphabet: Sequence[str]) -> BoundedWord:
    """Exponent vector of a literal string such as ``'abb'``, which must lie in B_l."""
    exps = [0] * len(alphabet)
    current = 0
    for pos, ch in enumerate(text):
        if ch not in alphabet:
            raise WordSyntaxError(f"letter {ch!r} outside alphabet", pos)
        idx = alphabet.index(ch)
        if idx < current:
            raise WordSyntaxError("letters out of order", pos)
        current = idx
        exps[idx] += 1
    return BoundedWord(tuple(exps))
