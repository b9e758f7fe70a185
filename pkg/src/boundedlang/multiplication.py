"""Multiplication by a constant on B_l, with the analysis for lambda = beta^l.

Covers the induced map f_lambda, the length gap between a word and its
image, the tail constants c_{l-1}, ..., c_0 and the closed-form image of
a_l^q, and the partition of N into regions R_{i,k}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from boundedlang.combinatorics import binomial, binomial_poly, stirling1_unsigned
from boundedlang.errors import EmptyRegion, NotApplicable, OutOfRegime, QTooSmall
from boundedlang.numeration import BoundedWord, length_bounds, length_of_value, represent, value_of


def multiply(w: BoundedWord, lam: int) -> BoundedWord:
    """f_lambda(w) = rep_l(lambda * val_l(w))."""
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    return represent(lam * value_of(w), w.ell)


def half_gap(beta: int, ell: int) -> int:
    """ceil((beta - 1)(l + 1) / 2), computed on exact rationals."""
    return math.ceil(Fraction((beta - 1) * (ell + 1), 2))


class LengthGap(NamedTuple):
    i: int
    in_regime: bool


def length_gap(n: int, beta: int, ell: int) -> LengthGap:
    """The i in |rep(beta^l n)| = beta |rep(n)| + ceil((beta-1)(l+1)/2) - i.

    ``in_regime`` is false when i falls outside {0, ..., beta} or the word
    is empty (the image of 0 is 0).
    """
    k = length_of_value(n, ell)
    image_len = length_of_value(beta**ell * n, ell)
    i = beta * k + half_gap(beta, ell) - image_len
    return LengthGap(i, n > 0 and 0 <= i <= beta)


@dataclass(frozen=True)
class MultiplierAnalysis:
    beta: int
    ell: int
    c: tuple[Fraction, ...]  # (c_{l-1}, ..., c_0)
    all_integer: bool
    monotone_nonincreasing: bool

    def constant(self, k: int) -> Fraction:
        """c_k."""
        return self.c[self.ell - 1 - k]

    @property
    def applicable(self) -> bool:
        return self.all_integer and self.monotone_nonincreasing

    @property
    def q_min(self) -> int:
        return max(0, math.ceil(-self.constant(0) / self.beta))


def first_stirling_sum(k: int, ell: int) -> Fraction:
    """sum_{i=k}^{l} S1(i, k) / i!, straight from the definition.

    The sum comes from expanding polynomials of degree i >= 1, so the i = 0
    term S1(0, 0) = 1 never enters; for k = 0 it vanishes.
    """
    return sum((Fraction(stirling1_unsigned(i, k), math.factorial(i)) for i in range(max(k, 1), ell + 1)), Fraction(0))


def first_stirling_sum_simplified(k: int, ell: int) -> Fraction:
    """Closed form of :func:`first_stirling_sum`: S1(l+1, k+1)/l! for k >= 1, else 0."""
    if k == 0:
        return Fraction(0)
    return Fraction(stirling1_unsigned(ell + 1, k + 1), math.factorial(ell))


def constants(beta: int, ell: int) -> MultiplierAnalysis:
    """Compute c_{l-1}, ..., c_0 by the downward recursion."""
    if beta < 1 or ell < 1:
        raise ValueError("beta and ell must be >= 1")
    c: dict[int, Fraction] = {}
    for k in range(ell - 1, -1, -1):
        value = math.factorial(k) * (beta ** (ell - k) - 1) * first_stirling_sum_simplified(k, ell)
        for i in range(k + 2, ell + 1):
            for j in range(k + 1, i + 1):
                coef = Fraction(stirling1_unsigned(i, j) * math.factorial(j), math.factorial(i) * math.factorial(j - k))
                value -= coef * c[i - 1] ** (j - k)
        c[k] = value
    ordered = tuple(c[k] for k in range(ell - 1, -1, -1))
    return MultiplierAnalysis(
        beta=beta,
        ell=ell,
        c=ordered,
        all_integer=all(x.denominator == 1 for x in ordered),
        monotone_nonincreasing=all(a >= b for a, b in zip(ordered, ordered[1:])),
    )


def closed_form_tail(beta: int, ell: int, q: int, analysis: MultiplierAnalysis | None = None) -> BoundedWord:
    """rep_l(beta^l val_l(a_l^q)) read off the constants, when they allow it."""
    a = analysis or constants(beta, ell)
    if not a.applicable:
        raise NotApplicable(
            f"beta={beta}, ell={ell}: constants {[str(x) for x in a.c]} are not "
            "nonincreasing integers"
        )
    if q < a.q_min:
        raise QTooSmall(f"q={q} is below the threshold {a.q_min}")
    cs = [int(x) for x in a.c]
    exps = [cs[j] - cs[j + 1] for j in range(ell - 1)]
    exps.append(beta * q + cs[-1])
    return BoundedWord(tuple(exps))


def _eq7_sides(beta: int, ell: int, q: int, c: tuple[Fraction, ...]):
    lhs = beta**ell * sum(binomial(q + k, k + 1) for k in range(ell))
    rhs = sum(binomial_poly(beta * q + c[ell - 1 - k] + k, k + 1) for k in range(ell))
    return lhs, rhs


def eq7_identity_check(beta: int, ell: int, q_max: int | None = None) -> bool:
    """Check beta^l sum_k C(q+k, k+1) == sum_k C(beta q + c_k + k, k+1) for q = 0..q_max.

    Both sides are polynomials of degree l in q, so the default q_max = l
    (l + 1 points) makes this a proof of the identity.
    """
    if q_max is None:
        q_max = ell
    c = constants(beta, ell).c
    for q in range(q_max + 1):
        lhs, rhs = _eq7_sides(beta, ell, q, c)
        if lhs != rhs:
            return False
    return True


def _is_perfect_square(n: int) -> bool:
    r = math.isqrt(n)
    return r * r == n


def preserves_recognizability(lam: int, ell: int) -> bool:
    """Whether multiplication by lam >= 2 maps B_l-recognizable sets to recognizable sets."""
    if lam < 2:
        raise ValueError("lambda must be >= 2")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if ell == 1:
        return True
    if ell == 2:
        return lam % 2 == 1 and _is_perfect_square(lam)
    return False


# --- regions R_{i,k} ----------------------------------------------------


def region_of(n: int, beta: int, ell: int) -> tuple[int, int]:
    """(i, k) with n in R_{i,k}; raises OutOfRegime if i is not in {0..beta}."""
    gap = length_gap(n, beta, ell)
    if not gap.in_regime:
        raise OutOfRegime(f"n={n}: length gap i={gap.i} outside 0..{beta}")
    return gap.i, length_of_value(n, ell)


def image_length(i: int, k: int, beta: int, ell: int) -> int:
    return beta * k + half_gap(beta, ell) - i


def region_threshold(i: int, k: int, beta: int, ell: int) -> int:
    """C_i(k): the value of the first word of the image length for region (i, k)."""
    return binomial(image_length(i, k, beta, ell) + ell - 1, ell)


@dataclass(frozen=True)
class RegionInfo:
    i: int
    k: int
    m: int  # min R_{i,k}
    mu: int  # beta^l m - C_i(k)
    size: int
    beta: int
    ell: int

    @property
    def last(self) -> int:
        return self.m + self.size - 1


def region_bounds(i: int, k: int, beta: int, ell: int) -> tuple[int, int] | None:
    """Inclusive (first, last) of R_{i,k}, or None if the region is empty.

    Image length is nondecreasing in n, so R_{i,k} is an interval cut out of
    the length-k block by the thresholds C_i(k) and C_{i-1}(k).
    """
    lam = beta**ell
    lo_k, hi_k = length_bounds(ell, k)
    first = max(lo_k, -(-region_threshold(i, k, beta, ell) // lam))
    last = min(hi_k, (region_threshold(i - 1, k, beta, ell) - 1) // lam)
    if first > last:
        return None
    return first, last


def region_min_mu(i: int, k: int, beta: int, ell: int) -> RegionInfo:
    """m_{i,k}, mu_i(k) and #R_{i,k}; the minimum is re-validated by direct multiplication."""
    bounds = region_bounds(i, k, beta, ell)
    if bounds is None:
        raise EmptyRegion(f"R_{{{i},{k}}} is empty for beta={beta}, ell={ell}")
    m, last = bounds
    lam = beta**ell
    target = image_length(i, k, beta, ell)
    if length_of_value(m, ell) != k or length_of_value(lam * m, ell) != target:
        raise EmptyRegion(f"candidate minimum {m} does not lie in R_{{{i},{k}}}")
    if m > 0 and length_of_value(m - 1, ell) == k and length_of_value(lam * (m - 1), ell) == target:
        raise EmptyRegion(f"candidate minimum {m} is not minimal in R_{{{i},{k}}}")
    mu = lam * m - region_threshold(i, k, beta, ell)
    return RegionInfo(i=i, k=k, m=m, mu=mu, size=last - m + 1, beta=beta, ell=ell)


def lemma10_congruent(u: int, beta: int, ell: int) -> bool:
    """C(u, l) == C(u + beta^l, l) mod beta^l."""
    lam = beta**ell
    return (binomial(u, ell) - binomial(u + lam, ell)) % lam == 0


def prime_factors_exceed(beta: int, ell: int) -> bool:
    """True when every prime factor of beta is greater than l."""
    n, d = beta, 2
    while d * d <= n:
        if n % d == 0:
            if d <= ell:
                return False
            while n % d == 0:
                n //= d
        d += 1
    return n == 1 or n > ell


class PeriodicityReport(NamedTuple):
    k: int
    k_shifted: int
    image: BoundedWord
    image_shifted: BoundedWord
    holds: bool


def region_periodicity_check(i: int, k: int, beta: int, ell: int) -> PeriodicityReport:
    """Compare f(m_{i,k}) with f(m_{i,k+beta^(l-1)}): a1-count grows by beta^l, the rest agree."""
    lam = beta**ell
    k2 = k + beta ** (ell - 1)
    w1 = represent(lam * region_min_mu(i, k, beta, ell).m, ell)
    w2 = represent(lam * region_min_mu(i, k2, beta, ell).m, ell)
    holds = w2.exponents[0] == w1.exponents[0] + lam and w2.exponents[1:] == w1.exponents[1:]
    return PeriodicityReport(k, k2, w1, w2, holds)


class RegionRow(NamedTuple):
    j: int
    image: tuple[int, ...] | None  # None once m + j leaves the region
    suffix: tuple[int, ...]


def region_table(i: int, k: int, beta: int, ell: int, rows: int) -> list[RegionRow]:
    """Rows j: Parikh vector of f(m_{i,k} + j) beside rep over a2..al of mu + beta^l j.

    Inside the region the image is a1^t followed by that suffix word; this
    is asserted for every row.
    """
    if ell < 2:
        raise ValueError("region tables need ell >= 2")
    info = region_min_mu(i, k, beta, ell)
    lam = beta**ell
    table = []
    for j in range(rows):
        suffix = represent(info.mu + lam * j, ell - 1).exponents
        image = None
        if j < info.size:
            image = represent(lam * (info.m + j), ell).exponents
            if image[1:] != suffix:
                raise AssertionError(f"row {j}: image {image} does not end with {suffix}")
        table.append(RegionRow(j, image, suffix))
    return table
