"""Folded paths in the extended tree attached to one step w -> w s_i.

A path in the tree is modelled by its image under the retraction centred at
one end (an Upsilon'_w path) together with one coefficient per stable
section of that image.  Retracting from the other end flips a stable
section at its own wall when the running coefficient sum for that wall is
nonzero, and reflects everything before the first minimum at the lowest wall.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

from .errors import DimensionMismatch, NonReducedWord
from .paths import AFFINE, Path, ddim, minimum, sections
from .rootdata import RealRoot, RootDatum, affine_reflection
from .upsilon import upsilon_prime


class Factor(enum.Enum):
    FREE_LINE = "FreeLine"
    PUNCTURED_LINE = "PuncturedLine"


@dataclass(frozen=True)
class Marker:
    interval: tuple
    level: int
    coeff: Q


@dataclass(frozen=True)
class FoldedPath:
    base: Path
    root: RealRoot  # the wall direction -w(alpha)
    markers: tuple

    @property
    def positive_root(self) -> RealRoot:
        return self.root.negate()


@dataclass(frozen=True)
class ParameterSpace:
    count: int
    kinds: tuple

    def sample(self, rng: random.Random, bound: int = 9) -> list:
        out = []
        for kind in self.kinds:
            lo = 1 if kind is Factor.PUNCTURED_LINE else 0
            out.append(Q(rng.randint(lo, bound), rng.randint(1, bound)) * rng.choice((1, -1)))
        return out


def parameter_space(path: Path, word: Sequence[int] = (), datum: RootDatum = AFFINE) -> ParameterSpace:
    """One parameter per wall event counted by ddim; the last wall left by
    the reversed path carries a nonzero parameter."""
    n = ddim(path, word, datum=datum)
    kinds = tuple(Factor.PUNCTURED_LINE if j == 0 else Factor.FREE_LINE for j in range(n))
    return ParameterSpace(n, kinds)


def _step_root(word, i, datum) -> RealRoot:
    if not datum.is_reduced(tuple(word) + (i,)):
        raise NonReducedWord(f"{list(word) + [i]} is not reduced")
    return datum.root_image(tuple(word), datum.simple_root(i))


def stable_sections(path: Path, word: Sequence[int], i: int, datum: RootDatum = AFFINE) -> list:
    base = upsilon_prime(path, word, datum)
    beta = _step_root(word, i, datum)
    return list(sections(base, beta).stable)


def build_folded(path: Path, word: Sequence[int], i: int, coeffs: Sequence, datum: RootDatum = AFFINE) -> FoldedPath:
    beta = _step_root(word, i, datum)
    base = upsilon_prime(path, word, datum)
    secs = sections(base, beta).stable
    if len(coeffs) != len(secs):
        raise DimensionMismatch(f"expected {len(secs)} coefficients, got {len(coeffs)}")
    markers = tuple(Marker(s.interval, int(s.level), Q(c)) for s, c in zip(secs, coeffs))
    return FoldedPath(base, beta.negate(), markers)


def _running_sums(markers: Sequence[Marker]) -> list:
    """Cumulative coefficient per marker, summed backwards from t = 1 within
    each wall level."""
    acc, out = {}, [None] * len(markers)
    for j in range(len(markers) - 1, -1, -1):
        m = markers[j]
        acc[m.level] = acc.get(m.level, Q(0)) + m.coeff
        out[j] = acc[m.level]
    return out


def genericity(coeffs: Sequence, levels: Sequence[int] | None = None) -> bool:
    """Every backwards prefix sum within a level group is nonzero.

    Without levels all coefficients form one group.
    """
    if levels is None:
        levels = [0] * len(coeffs)
    markers = [Marker((0, 0), lv, Q(c)) for c, lv in zip(coeffs, levels)]
    return all(s != 0 for s in _running_sums(markers))


def fold_plus(eta: FoldedPath) -> Path:
    """Retraction of a folded path from the opposite end of the tree."""
    base, wall = eta.base, eta.root
    m, q, _ = minimum(base, eta.positive_root)
    if m.denominator != 1:
        raise ValueError("minimal level is not an integer")
    sums = _running_sums(eta.markers)
    flips = [(mk.interval, mk.level) for mk, s in zip(eta.markers, sums) if s != 0 and mk.interval[0] >= q]
    segs, t = [], Q(0)
    bounds = [((Q(0), q), int(m))] + flips
    for d, dt in base.segments:
        a, b = t, t + dt
        cuts = sorted({a, b} | {c for (x, y), _ in bounds for c in (x, y) if a < c < b})
        for u, v in zip(cuts, cuts[1:]):
            lev = next((lv for (x, y), lv in bounds if x <= u and v <= y), None)
            segs.append((d if lev is None else _linear_part(wall, d), v - u))
        t = b
    start = affine_reflection(wall, m, base.start) if q > 0 else base.start
    return Path(start, tuple(segs), base.shape)


def _linear_part(wall: RealRoot, d):
    return wall.reflect(d)


def retract_step(path: Path, word: Sequence[int], i: int, coeffs: Sequence, datum: RootDatum = AFFINE) -> tuple:
    """(fold_plus(build_folded(...)), genericity of coeffs per wall level)."""
    eta = build_folded(path, word, i, coeffs, datum)
    return fold_plus(eta), genericity([mk.coeff for mk in eta.markers], [mk.level for mk in eta.markers])


def random_coeffs(n: int, rng: random.Random, bound: int = 9) -> list:
    """Random rationals that are positive, hence generic."""
    return [Q(rng.randint(1, bound), rng.randint(1, bound)) for _ in range(n)]
