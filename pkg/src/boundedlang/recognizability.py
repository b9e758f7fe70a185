"""Regular subsets of B_l seen through Parikh vectors.

A regular subset of B_l is a finite union of languages
a1^s1 (a1^t1)* ... al^sl (al^tl)*, i.e. an axis-period semilinear set of
exponent vectors. This module holds that representation, the canonical
automaton for B_l, the images of arithmetic progressions and the residue
grids drawn from them, and a heuristic growth diagnostic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from boundedlang.combinatorics import binomial_column_period, lcm_all
from boundedlang.numeration import BoundedWord, letter_names, value_of


def parikh(w: BoundedWord) -> tuple[int, ...]:
    return w.exponents


def unparikh(v: Sequence[int], ell: int | None = None) -> BoundedWord:
    if ell is not None and len(v) != ell:
        raise ValueError(f"vector of dimension {len(v)} given for ell={ell}")
    return BoundedWord(tuple(v))


# --- the automaton -------------------------------------------------------


@dataclass(frozen=True)
class BoundedDfa:
    """States q1..ql (numbered 1..l), q1 initial, every state final,
    and q_i --a_j--> q_j whenever i <= j."""

    ell: int
    transitions: dict = field(default_factory=dict, compare=False)

    @classmethod
    def build(cls, ell: int) -> BoundedDfa:
        if ell < 1:
            raise ValueError("ell must be >= 1")
        names = letter_names(ell)
        delta = {(i, names[j - 1]): j for i in range(1, ell + 1) for j in range(i, ell + 1)}
        return cls(ell, delta)

    @property
    def states(self) -> list[int]:
        return list(range(1, self.ell + 1))

    @property
    def alphabet(self) -> list[str]:
        return letter_names(self.ell)

    initial = 1

    def run(self, symbols: Iterable[str]) -> int | None:
        state = self.initial
        for s in symbols:
            state = self.transitions.get((state, s))
            if state is None:
                return None
        return state

    def accepts(self, symbols: Iterable[str]) -> bool:
        if isinstance(symbols, str) and self.ell > 26:
            raise TypeError("pass a sequence of letter names when ell > 26")
        return self.run(symbols) is not None

    def to_dot(self) -> str:
        lines = [
            f"digraph B{self.ell} {{",
            "  rankdir=LR;",
            "  node [shape=doublecircle];",
            '  start [shape=point, label=""];',
            "  start -> q1;",
        ]
        for (i, letter), j in sorted(self.transitions.items(), key=lambda kv: (kv[0][0], kv[1])):
            lines.append(f'  q{i} -> q{j} [label="{letter}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_bounded_dfa(ell: int) -> BoundedDfa:
    return BoundedDfa.build(ell)


# --- axis-period semilinear sets ----------------------------------------


@dataclass(frozen=True)
class AxisLinearSet:
    """{base + sum_i n_i periods[i] e_i}; a zero period pins that coordinate."""

    base: tuple[int, ...]
    periods: tuple[int, ...]

    def __post_init__(self):
        if len(self.base) != len(self.periods):
            raise ValueError("base and periods differ in dimension")

    def contains(self, v: Sequence[int]) -> bool:
        for x, s, t in zip(v, self.base, self.periods):
            if t == 0:
                if x != s:
                    return False
            elif x < s or (x - s) % t:
                return False
        return True

    def expression(self, names: Sequence[str] | None = None) -> str:
        names = names or letter_names(len(self.base))
        parts = []
        for name, s, t in zip(names, self.base, self.periods):
            if s:
                parts.append(name if s == 1 else f"{name}^{s}")
            if t:
                parts.append(f"({name})*" if t == 1 else f"({name}^{t})*")
        return " ".join(parts) or "ε"


class AxisSemilinearSet:
    """Finite union of :class:`AxisLinearSet` components.

    Components are indexed by period vector and residue so membership costs
    one lookup per distinct period vector rather than a scan.
    """

    def __init__(self, components: Iterable[AxisLinearSet] = (), dim: int | None = None):
        self.components = list(components)
        if dim is None:
            dim = len(self.components[0].base) if self.components else 0
        self.dim = dim
        self._index: dict[tuple, dict[tuple, list[tuple[int, ...]]]] = {}
        for comp in self.components:
            if len(comp.base) != dim:
                raise ValueError("component dimension mismatch")
            key = _residue(comp.base, comp.periods)
            self._index.setdefault(comp.periods, {}).setdefault(key, []).append(comp.base)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __contains__(self, v) -> bool:
        return axis_membership(v, self)

    def expression(self) -> str:
        if not self.components:
            return "∅"
        return " ∪ ".join(c.expression() for c in self.components)


def _residue(v, periods):
    return tuple(x % t if t else x for x, t in zip(v, periods))


def axis_membership(v: Sequence[int], s: AxisSemilinearSet) -> bool:
    """Whether v lies in some component of s."""
    if len(v) != s.dim:
        raise ValueError(f"vector of dimension {len(v)} tested against a set of dimension {s.dim}")
    v = tuple(v)
    for periods, by_residue in s._index.items():
        for base in by_residue.get(_residue(v, periods), ()):
            if all(x >= b for x, b in zip(v, base)):
                return True
    return False


def ap_period(ell: int, p: int) -> int:
    """P = lcm over columns k = 1..l of the period of C(n, k) mod p."""
    return lcm_all(binomial_column_period(k, p) for k in range(1, ell + 1))


def ap_parikh_image(ell: int, q: int, p: int) -> AxisSemilinearSet:
    """Exponent vectors of rep_l(q + pN) as a union of x + NP e_1 + ... + NP e_l.

    Bases range over the whole box [0, q+P)^l (duplicates modulo P kept).
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    big_p = ap_period(ell, p)
    periods = (big_p,) * ell
    comps = []
    for x in itertools.product(range(q + big_p), repeat=ell):
        val = value_of(BoundedWord(x))
        if val >= q and (val - q) % p == 0:
            comps.append(AxisLinearSet(x, periods))
    return AxisSemilinearSet(comps, dim=ell)


# --- residue grids ------------------------------------------------------


def mod_grid(p: int, size: int) -> list[list[int]]:
    """M[i][j] = val_2(a^i b^j) mod p for 0 <= i, j < size."""
    if size < 1:
        raise ValueError("size must be >= 1")
    if p < 1:
        raise ValueError("p must be >= 1")
    return [[value_of(BoundedWord((i, j))) % p for j in range(size)] for i in range(size)]


def grid_to_csv(grid: list[list[int]]) -> str:
    """Row i holds the residues for a^i b^0, a^i b^1, ..."""
    return "".join(",".join(str(x) for x in row) + "\r\n" for row in grid)


def grid_to_pgm(grid: list[list[int]], p: int) -> bytes:
    """Binary PGM (P5) with the empty word at the lower-left corner.

    Column = number of a's, row from the bottom = number of b's, gray level =
    residue, maxval p - 1 (1 when p == 1, since PGM needs maxval > 0).
    """
    if p > 256:
        raise ValueError("PGM output holds one byte per pixel; use CSV for p > 256")
    size = len(grid)
    maxval = max(p - 1, 1)
    header = f"P5\n{size} {size}\n{maxval}\n".encode("ascii")
    pixels = bytearray()
    for r in range(size):
        j = size - 1 - r
        pixels.extend(grid[i][j] for i in range(size))
    return header + bytes(pixels)


def read_pgm(data: bytes) -> tuple[int, list[list[int]]]:
    """Inverse of :func:`grid_to_pgm`: (maxval, M) with M[i][j] as in :func:`mod_grid`."""
    tokens = data.split(maxsplit=4)
    if tokens[0] != b"P5":
        raise ValueError("not a binary PGM")
    width, height, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
    body = tokens[4]
    if len(body) != width * height:
        raise ValueError("truncated PGM")
    grid = [[0] * height for _ in range(width)]
    for r in range(height):
        for i in range(width):
            grid[i][height - 1 - r] = body[r * width + i]
    return maxval, grid


# --- growth witnesses ---------------------------------------------------


@dataclass(frozen=True)
class GrowthWitness:
    indices: tuple[int, ...]  # 0-based coordinates
    subsequence: tuple[tuple[int, ...], ...]
    block_minima: tuple[int, ...]


def growth_witness(points: Sequence[Sequence[int]], k: int, blocks: int = 4) -> GrowthWitness | None:
    """Look for k+1 coordinates that grow together along the tail of ``points``.

    Heuristic. The tail is the second half of the sequence. A coordinate set
    J qualifies when, at every tail position t, min_J exceeds sqrt(t), and the
    minimum of min_J over consecutive blocks of the tail strictly increases.
    A hit is evidence that the points do not fit a union of k-dimensional
    axis sets; a miss proves nothing.
    """
    if not points:
        return None
    dim = len(points[0])
    if k + 1 > dim:
        return None
    start = len(points) // 2
    tail = [tuple(p) for p in points[start:]]
    if len(tail) < blocks:
        return None
    bounds = [len(tail) * b // blocks for b in range(blocks + 1)]
    for subset in itertools.combinations(range(dim), k + 1):
        mins = [min(v[j] for j in subset) for v in tail]
        if any(m <= math.sqrt(start + t + 1) for t, m in enumerate(mins)):
            continue
        block_min = [min(mins[bounds[b] : bounds[b + 1]]) for b in range(blocks)]
        if all(x < y for x, y in zip(block_min, block_min[1:])):
            return GrowthWitness(subset, tuple(tail), tuple(block_min))
    return None


# --- fitting sequences of points ------------------------------------------


@dataclass(frozen=True)
class ProgressionFit:
    onset: int
    period: int
    prefix: tuple[tuple[int, ...], ...]  # points before the onset, then one base per residue
    steps: tuple[tuple[int, ...], ...]  # per residue class, the axis-aligned increment
    semilinear: AxisSemilinearSet

    def predict(self, n: int) -> tuple[int, ...]:
        if n < self.onset:
            return self.prefix[n]
        r = (n - self.onset) % self.period
        reps = (n - self.onset) // self.period
        return tuple(b + reps * s for b, s in zip(self.prefix[self.onset + r], self.steps[r]))


def _is_axis_step(delta: Sequence[int]) -> bool:
    nonzero = [d for d in delta if d]
    return len(nonzero) <= 1 and all(d >= 0 for d in delta)


def infer_axis_progressions(points: Sequence[Sequence[int]], max_period: int = 16, min_reps: int = 3) -> ProgressionFit | None:
    """Fit x(n) = x(n0 + r) + ((n - n0 - r)/P) s_r for n >= n0 with axis-aligned s_r.

    Returns the fit with the smallest period, then smallest onset, that holds
    on every given point and is supported by at least ``min_reps`` steps per
    residue class; the result is also expressed as an axis semilinear set.
    """
    pts = [tuple(p) for p in points]
    n = len(pts)
    for period in range(1, max_period + 1):
        for onset in range(0, n - period * (min_reps + 1) + 1):
            steps = []
            ok = True
            for r in range(period):
                first = onset + r
                if first + period >= n:
                    ok = False
                    break
                step = tuple(b - a for a, b in zip(pts[first], pts[first + period]))
                if not _is_axis_step(step):
                    ok = False
                    break
                for m in range(first + period, n, period):
                    if tuple(b - a for a, b in zip(pts[m - period], pts[m])) != step:
                        ok = False
                        break
                if not ok:
                    break
                steps.append(step)
            if not ok:
                continue
            comps = [AxisLinearSet(pts[m], (0,) * len(pts[m])) for m in range(onset)]
            comps += [AxisLinearSet(pts[onset + r], tuple(abs(s) for s in steps[r])) for r in range(period)]
            return ProgressionFit(
                onset, period, tuple(pts[: onset + period]), tuple(steps), AxisSemilinearSet(comps, dim=len(pts[0]))
            )
    return None
