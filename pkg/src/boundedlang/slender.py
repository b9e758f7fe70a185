"""Numeration on slender regular languages (finite unions of single loops x y* z).

Counting is done per loop in closed form, so ranking and unranking only ever
list the handful of words of one length. Periodicity detection for
recognizable sets works inside an explicit window of word lengths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from boundedlang.combinatorics import lcm_all
from boundedlang.errors import CapExceeded

DEFAULT_WINDOW = 256


@dataclass(frozen=True)
class Loop:
    x: str
    y: str
    z: str

    def __post_init__(self):
        if not self.y:
            raise ValueError("loop word y must be nonempty")

    @property
    def offset(self) -> int:
        return len(self.x) + len(self.z)

    def word(self, n: int) -> str:
        return self.x + self.y * n + self.z

    def exponent_for_length(self, length: int) -> int | None:
        rest = length - self.offset
        if rest < 0 or rest % len(self.y):
            return None
        return rest // len(self.y)

    def count_upto(self, length: int) -> int:
        """Words of this loop with length <= ``length``."""
        if length < self.offset:
            return 0
        return (length - self.offset) // len(self.y) + 1

    def __str__(self) -> str:
        y = self.y if len(self.y) == 1 else f"({self.y})"
        return f"{self.x}{y}*{self.z}"


class SlenderLanguage:
    """L = x_1 y_1* z_1 ∪ ... ∪ x_k y_k* z_k ∪ F over an ordered alphabet.

    ``window`` bounds the word lengths handled (default 256); disjointness of
    the pieces is checked for every length inside it.
    """

    def __init__(self, alphabet: str, loops: Iterable[Loop | tuple[str, str, str]], finite_part: Iterable[str] = (), window: int = DEFAULT_WINDOW):
        self.alphabet = alphabet
        # letters remapped to code points in alphabet order so comparisons run in C
        self._table = str.maketrans({ch: chr(i) for i, ch in enumerate(alphabet)})
        self.loops = [lp if isinstance(lp, Loop) else Loop(*lp) for lp in loops]
        self.finite_part = sorted(set(finite_part), key=self.sort_key)
        self.window = window
        self._order = {ch: i for i, ch in enumerate(alphabet)}
        for word in self.finite_part + [lp.x + lp.y + lp.z for lp in self.loops]:
            for ch in word:
                if ch not in self._order:
                    raise ValueError(f"letter {ch!r} not in alphabet {alphabet!r}")
        self._check_disjoint()

    def sort_key(self, word: str):
        return (len(word), word.translate(self._table))

    def _check_disjoint(self) -> None:
        for length in range(self.window + 1):
            words = self._raw_words(length)
            if len(set(words)) != len(words):
                raise ValueError(f"pieces of the language overlap at length {length}")

    def _raw_words(self, length: int) -> list[str]:
        words = [w for w in self.finite_part if len(w) == length]
        for lp in self.loops:
            n = lp.exponent_for_length(length)
            if n is not None:
                words.append(lp.word(n))
        return words

    def words_of_length(self, length: int) -> list[str]:
        return sorted(self._raw_words(length), key=self.sort_key)

    def count_length(self, length: int) -> int:
        """u_L(length)."""
        return len(self._raw_words(length))

    def count_upto(self, length: int) -> int:
        """v_L(length), the number of words of length at most ``length``."""
        if length < 0:
            return 0
        return sum(lp.count_upto(length) for lp in self.loops) + sum(1 for w in self.finite_part if len(w) <= length)

    def profile(self, max_length: int) -> list[int]:
        return [self.count_length(n) for n in range(max_length + 1)]

    @property
    def count_period(self) -> int:
        """C = lcm |y_i|; u_L is ultimately periodic with this period."""
        return lcm_all(len(lp.y) for lp in self.loops)

    def __contains__(self, word: str) -> bool:
        return word in self._raw_words(len(word))

    def value(self, word: str) -> int:
        """Shortlex rank of ``word`` in L."""
        if len(word) > self.window:
            raise CapExceeded(f"word length {len(word)} exceeds the window {self.window}")
        same = self.words_of_length(len(word))
        if word not in same:
            raise ValueError(f"{word!r} is not in the language")
        return self.count_upto(len(word) - 1) + same.index(word)

    def rep(self, n: int) -> str:
        """The (n+1)-st word of L."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n >= self.count_upto(self.window):
            raise CapExceeded(f"rank {n} lies beyond words of length {self.window}")
        lo, hi = 0, self.window  # smallest length with v_L(length) > n
        while lo < hi:
            mid = (lo + hi) // 2
            if self.count_upto(mid) > n:
                hi = mid
            else:
                lo = mid + 1
        return self.words_of_length(lo)[n - self.count_upto(lo - 1)]

    def __str__(self) -> str:
        parts = [str(lp) for lp in self.loops] + list(self.finite_part)
        return " ∪ ".join(parts)


def enumerate_slender(lang: SlenderLanguage, max_length: int) -> list[str]:
    """All words of length <= max_length in shortlex order, by brute force."""
    words = set(lang.finite_part)
    for lp in lang.loops:
        n = 0
        while len(lp.word(n)) <= max_length:
            words.add(lp.word(n))
            n += 1
    return sorted((w for w in words if len(w) <= max_length), key=lang.sort_key)


# --- regular images of arithmetic progressions -------------------------


@dataclass(frozen=True)
class PoweredLoop:
    """x y^start (y^step)* z."""

    x: str
    y: str
    z: str
    start: int
    step: int

    def __str__(self) -> str:
        y = self.y if len(self.y) == 1 else f"({self.y})"
        head = "" if self.start == 0 else (y if self.start == 1 else f"{y}^{self.start}")
        loop = f"{y}*" if self.step == 1 else f"({y}^{self.step})*"
        return f"{self.x}{head}{loop}{self.z}"

    def contains_exponent(self, n: int) -> bool:
        return n >= self.start and (n - self.start) % self.step == 0


@dataclass
class RegularSubset:
    loops: list[PoweredLoop] = field(default_factory=list)
    finite: list[str] = field(default_factory=list)

    def is_empty(self) -> bool:
        return not self.loops and not self.finite

    def __str__(self) -> str:
        parts = [str(p) for p in self.loops] + list(self.finite)
        return " ∪ ".join(parts) if parts else "∅"


def in_progressions(n: int, progressions: Sequence[tuple[int, int]]) -> bool:
    """Membership in a union of q + pN; p == 0 stands for the single value q."""
    for q, p in progressions:
        if p == 0:
            if n == q:
                return True
        elif n >= q and (n - q) % p == 0:
            return True
    return False


def _ultimate_period(bits: Sequence[bool]) -> tuple[int, int] | None:
    """Smallest period, then smallest onset, of ``bits``.

    The periodic part must cover the second half of the window and repeat
    at least twice, so short coincidences at the end are not accepted.
    """
    n = len(bits)
    for period in range(1, n // 4 + 1):
        for onset in range(0, n // 2 + 1):
            if all(bits[i] == bits[i + period] for i in range(onset, n - period)):
                return onset, period
    return None


def slender_recognizable_profile(lang: SlenderLanguage, progressions: Sequence[tuple[int, int]]) -> RegularSubset:
    """rep_L(X) for X a finite union of arithmetic progressions, as powered loops plus a finite set.

    For each loop the membership of x y^n z in rep_L(X) is read along n within
    the window; its ultimate period is certified by at least two repetitions.
    """
    result = RegularSubset()
    if not progressions:
        return result
    finite = set(w for w in lang.finite_part if in_progressions(lang.value(w), progressions))
    for lp in lang.loops:
        n_max = (lang.window - lp.offset) // len(lp.y)
        bits = [in_progressions(lang.value(lp.word(n)), progressions) for n in range(n_max + 1)]
        found = _ultimate_period(bits)
        if found is None:
            raise CapExceeded(f"no ultimate period along {lp} within lengths <= {lang.window}")
        onset, period = found
        for n in range(onset):
            if bits[n]:
                finite.add(lp.word(n))
        for r in range(period):
            if bits[onset + r]:
                result.loops.append(PoweredLoop(lp.x, lp.y, lp.z, onset + r, period))
    result.finite = sorted(finite, key=lang.sort_key)
    return result


def regular_subset_contains(subset: RegularSubset, lang: SlenderLanguage, word: str) -> bool:
    if word in subset.finite:
        return True
    for pl in subset.loops:
        lp = Loop(pl.x, pl.y, pl.z)
        n = lp.exponent_for_length(len(word))
        if n is not None and lp.word(n) == word and pl.contains_exponent(n):
            return True
    return False
