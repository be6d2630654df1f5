"""Piecewise-linear paths, sections and Littelmann root operators.

A path is a start point plus (direction, duration) segments with exact
rational durations summing to 1.  Levels of a root along a path are
handled through the refined level profile of the kernels module, so every
time at which the level is an integer is an explicit breakpoint.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction as Q
from functools import lru_cache
from typing import Sequence

from . import _kernels
from .errors import CutoffTooSmall, DepthExceeded, NonIntegralLevel, NotDominant, ParseError
from .rootdata import RealRoot, RootDatum, Vector, add, build_affine_sl2, pair, scale, vec

AFFINE = build_affine_sl2()


class Kind(enum.Enum):
    ZERO = "Zero"
    STABLE = "Stable"
    UP = "DirectedUp"
    DOWN = "DirectedDown"


_KIND = {_kernels.ZERO: Kind.ZERO, _kernels.STABLE: Kind.STABLE, _kernels.UP: Kind.UP, _kernels.DOWN: Kind.DOWN}


@dataclass(frozen=True)
class Path:
    start: Vector
    segments: tuple
    shape: Vector
    _hash: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        segs = []
        for d, t in self.segments:
            d, t = vec(d), Q(t)
            if t < 0:
                raise ValueError("negative duration")
            if t == 0:
                continue
            if segs and segs[-1][0] == d:
                segs[-1] = (d, segs[-1][1] + t)
            else:
                segs.append((d, t))
        if sum((t for _, t in segs), Q(0)) != 1:
            raise ValueError("durations must sum to 1")
        object.__setattr__(self, "start", vec(self.start))
        object.__setattr__(self, "shape", vec(self.shape))
        object.__setattr__(self, "segments", tuple(segs))
        object.__setattr__(self, "_hash", hash((self.start, self.segments, self.shape)))

    def __hash__(self):
        return self._hash

    def __call__(self, t) -> Vector:
        return point(self, t)

    @property
    def end(self) -> Vector:
        p = self.start
        for d, t in self.segments:
            p = add(p, scale(t, d))
        return p

    @property
    def directions(self) -> tuple:
        return tuple(d for d, _ in self.segments)

    @property
    def durations(self) -> tuple:
        return tuple(t for _, t in self.segments)

    def breakpoints(self) -> list:
        out, t = [Q(0)], Q(0)
        for _, dt in self.segments:
            t += dt
            out.append(t)
        return out

    def translate(self, v: Vector) -> "Path":
        return Path(add(self.start, v), self.segments, self.shape)

    def map_linear(self, fn) -> "Path":
        """Apply a linear map to start and directions."""
        return Path(fn(self.start), tuple((fn(d), t) for d, t in self.segments), self.shape)


@dataclass(frozen=True)
class Section:
    interval: tuple
    kind: Kind
    level: int


@dataclass(frozen=True)
class SectionPartition:
    root: RealRoot
    sections: tuple

    def of_kind(self, kind: Kind) -> list:
        return [s for s in self.sections if s.kind is kind]

    @property
    def stable(self) -> list:
        return self.of_kind(Kind.STABLE)


def straight_path(lam: Vector, datum: RootDatum = AFFINE) -> Path:
    lam = vec(lam)
    if not datum.is_dominant(lam) or not datum.is_integral(lam):
        raise NotDominant(f"{[str(c) for c in lam]} is not dominant integral")
    return Path(tuple(Q(0) for _ in lam), ((lam, Q(1)),), lam)


def point(path: Path, t) -> Vector:
    t = Q(t)
    if not 0 <= t <= 1:
        raise ValueError(f"time {t} outside [0,1]")
    p, s = path.start, Q(0)
    for d, dt in path.segments:
        if t <= s + dt:
            return add(p, scale(t - s, d))
        p = add(p, scale(dt, d))
        s += dt
    return p


def sample(path: Path, t) -> tuple:
    """(point, left derivative or None, right derivative or None) at t."""
    t = Q(t)
    x = point(path, t)
    left = right = None
    s = Q(0)
    for d, dt in path.segments:
        a, b = s, s + dt
        if a < t <= b:
            left = d
        if a <= t < b:
            right = d
        s = b
    return x, left, right


def concatenate(first: Path, second: Path, weight_first=Q(1, 2)) -> Path:
    """first * second: first runs on [0, w], second (translated) on [w, 1].

    Directions are rescaled so both pieces keep their displacement, and
    the shape becomes first.shape / w (2 lambda for two lambda-paths at 1/2).
    """
    w = Q(weight_first)
    if not 0 < w < 1:
        raise ValueError("weight_first must lie strictly between 0 and 1")
    segs = [(scale(1 / w, d), t * w) for d, t in first.segments]
    segs += [(scale(1 / (1 - w), d), t * (1 - w)) for d, t in second.segments]
    shape = scale(1 / w, first.shape)
    return Path(first.start, tuple(segs), shape)


def is_lambda_path(path: Path, datum: RootDatum = AFFINE) -> bool:
    return all(datum.dominant_representative(d)[0] == path.shape for d in path.directions)


# levels


@lru_cache(maxsize=400000)
def _analysis(path: Path, form: tuple):
    f0 = pair(form, path.start)
    slopes = []
    for d in path.directions:
        s = pair(form, d)
        if s.denominator != 1:
            slopes = None
            break
        slopes.append(int(s))
    if slopes is None:
        # rational slopes: rescale levels by the common denominator is not
        # meaningful for integer walls, so fall back to the plain profile
        return _rational_profile(path, form), NonIntegralLevel("non-integral slope")
    return _kernels.analyze(f0, slopes, path.durations)


def _rational_profile(path: Path, form: tuple) -> list:
    out, t, f = [(Q(0), pair(form, path.start))], Q(0), pair(form, path.start)
    for d, dt in path.segments:
        t += dt
        f += dt * pair(form, d)
        out.append((t, f))
    return out


def level_profile(path: Path, root) -> list:
    """Breakpoints (t, level) of root o path, refined at integer levels."""
    form = root.form if isinstance(root, RealRoot) else tuple(root)
    return _analysis(path, form)[0]


def sections(path: Path, root: RealRoot) -> SectionPartition:
    secs = _analysis(path, root.form)[1]
    if isinstance(secs, Exception):
        raise NonIntegralLevel(str(secs))
    return SectionPartition(root, tuple(Section((a, b), _KIND[k], lev) for a, b, k, lev in secs))


def _min_info(path: Path, form: tuple) -> tuple:
    prof = _analysis(path, form)[0]
    m = min(f for _, f in prof)
    return prof, m


def epsilon(path: Path, root: RealRoot) -> int:
    """Relative depth f(0) - min f of root o path."""
    prof, m = _min_info(path, root.form)
    e = prof[0][1] - m
    if e.denominator != 1 or m.denominator != 1:
        raise NonIntegralLevel(f"minimum {m} is not an integer")
    return int(e)


def phi(path: Path, root: RealRoot) -> int:
    prof, m = _min_info(path, root.form)
    e = prof[-1][1] - m
    if e.denominator != 1 or m.denominator != 1:
        raise NonIntegralLevel(f"minimum {m} is not an integer")
    return int(e)


def minimum(path: Path, root: RealRoot) -> tuple:
    """(min level, first time, last time)."""
    prof, m = _min_info(path, root.form)
    times = [t for t, f in prof if f == m]
    return m, times[0], times[-1]


def reflect_intervals(path: Path, intervals: Sequence[tuple], fn) -> Path:
    """Apply the linear map fn to the directions inside the given intervals."""
    ivs = []
    for a, b in sorted((Q(a), Q(b)) for a, b in intervals):
        if ivs and a <= ivs[-1][1]:
            ivs[-1] = (ivs[-1][0], max(ivs[-1][1], b))
        else:
            ivs.append((a, b))
    images = {}
    out, s, j = [], Q(0), 0
    for d, dt in path.segments:
        e = s + dt
        u = s
        while u < e:
            while j < len(ivs) and ivs[j][1] <= u:
                j += 1
            if j < len(ivs) and ivs[j][0] <= u:
                v = min(e, ivs[j][1])
                if d not in images:
                    images[d] = fn(d)
                out.append((images[d], v - u))
            else:
                v = min(e, ivs[j][0]) if j < len(ivs) else e
                out.append((d, v - u))
            u = v
        s = e
    return Path(path.start, tuple(out), path.shape)


def raise_op(path: Path, root: RealRoot) -> Path | None:
    """e_alpha, or None if undefined."""
    prof, m = _min_info(path, root.form)
    if m.denominator != 1:
        raise NonIntegralLevel(f"minimum {m} is not an integer")
    if m > prof[0][1] - 1:
        return None
    iq = next(j for j, (_, f) in enumerate(prof) if f == m)
    iy = max(j for j in range(iq) if prof[j][1] == m + 1)
    return reflect_intervals(path, [(prof[iy][0], prof[iq][0])], root.reflect)


def lower_op(path: Path, root: RealRoot) -> Path | None:
    """f_alpha, or None if undefined."""
    prof, m = _min_info(path, root.form)
    if m.denominator != 1:
        raise NonIntegralLevel(f"minimum {m} is not an integer")
    if prof[-1][1] - m < 1:
        return None
    ip = max(j for j, (_, f) in enumerate(prof) if f == m)
    ix = next(j for j in range(ip + 1, len(prof)) if prof[j][1] == m + 1)
    return reflect_intervals(path, [(prof[ip][0], prof[ix][0])], root.reflect)


MAX = "max"


def _pitman(path: Path, root: RealRoot, lower: bool) -> Path:
    """All-at-once e^max (lower=False) or f^max (lower=True).

    e^max reflects the decreasing pieces along which the level equals its
    running minimum from the left; f^max reflects the increasing pieces
    along which it equals the running minimum from the right.
    """
    prof, m = _min_info(path, root.form)
    if m.denominator != 1:
        raise NonIntegralLevel(f"minimum {m} is not an integer")
    pieces = []
    n = len(prof)
    if lower:
        future = prof[-1][1]
        for j in range(n - 2, -1, -1):
            (t0, f0), (t1, f1) = prof[j], prof[j + 1]
            future = min(future, f1)
            if f1 > f0 and f1 <= future:
                pieces.append((t0, t1))
    else:
        past = prof[0][1]
        for j in range(n - 1):
            (t0, f0), (t1, f1) = prof[j], prof[j + 1]
            if f1 < f0 and f0 <= past:
                pieces.append((t0, t1))
            past = min(past, f1)
    if not pieces:
        return path
    return reflect_intervals(path, pieces, root.reflect)


def _integral_minima(path: Path, root: RealRoot) -> bool:
    """The closed form for MAX needs every interior local minimum integral."""
    prof = _analysis(path, root.form)[0]
    for (_, a), (_, b), (_, c) in zip(prof, prof[1:], prof[2:]):
        if b < a and b <= c and b.denominator != 1:
            return False
    return True


def apply_power(path: Path, root: RealRoot, op, power) -> Path | None:
    """Apply op `power` times (or as often as possible for MAX)."""
    if power == MAX and op in (raise_op, lower_op) and _integral_minima(path, root):
        return _pitman(path, root, op is lower_op)
    if power == MAX:
        while True:
            nxt = op(path, root)
            if nxt is None:
                return path
            path = nxt
    for _ in range(int(power)):
        path = op(path, root)
        if path is None:
            return None
    return path


def root_operator(path: Path, i: int, direction: str, power=1, datum: RootDatum = AFFINE) -> Path | None:
    """direction is "raise" or "lower"; power is a positive integer or MAX."""
    op = {"raise": raise_op, "lower": lower_op}[direction]
    return apply_power(path, datum.simple_root(i), op, power)


def e(path: Path, i: int, power=1, datum: RootDatum = AFFINE):
    return root_operator(path, i, "raise", power, datum)


def f(path: Path, i: int, power=1, datum: RootDatum = AFFINE):
    return root_operator(path, i, "lower", power, datum)


def e_max(path: Path, i: int, datum: RootDatum = AFFINE) -> Path:
    return root_operator(path, i, "raise", MAX, datum)


def f_max(path: Path, i: int, datum: RootDatum = AFFINE) -> Path:
    return root_operator(path, i, "lower", MAX, datum)


def eps(path: Path, i: int, datum: RootDatum = AFFINE) -> int:
    return epsilon(path, datum.simple_root(i))


def iterate_max(path: Path, root: RealRoot, op) -> Path:
    """op applied until undefined, one step at a time."""
    while True:
        nxt = op(path, root)
        if nxt is None:
            return path
        path = nxt


def flip(path: Path, root: RealRoot) -> Path:
    """Reflect exactly the stable sections by s_alpha."""
    st = sections(path, root).stable
    if not st:
        return path
    return reflect_intervals(path, [s.interval for s in st], root.reflect)


def weight_defect(path: Path, datum: RootDatum = AFFINE) -> tuple:
    """Coroot coordinates of shape - (end - start)."""
    nu = tuple(a - (b - c) for a, b, c in zip(path.shape, path.end, path.start))
    return datum.coroot_coordinates(nu)


def height(path: Path, datum: RootDatum = AFFINE) -> Q:
    return sum(weight_defect(path, datum), Q(0))


# ddim


def _negative_after(datum: RootDatum, word: Sequence[int], root: RealRoot) -> bool:
    """True iff w^{-1}(root) is a negative root."""
    image = datum.weyl_act(tuple(reversed(word)), root.coroot)
    return any(c < 0 for c in datum.coroot_coordinates(image))


def _ddim_at(path: Path, word: Sequence[int], roots, datum: RootDatum) -> int:
    total = 0
    for beta in roots:
        sigma = 1 if _negative_after(datum, word, beta) else -1
        prof = level_profile(path, beta)
        for (_, f0), (_, f1) in zip(prof, prof[1:]):
            if f1.denominator == 1 and f1 != f0 and (f1 > f0) == (sigma > 0):
                total += 1
    return total


def default_cutoff(path: Path, word: Sequence[int] = (), datum: RootDatum = AFFINE) -> int:
    a1 = datum.simple_roots[1]
    level = pair(datum.delta, path.shape)
    steep = max(abs(pair(a1, d)) for d in path.directions)
    return int(max(Q(len(word)), steep / level)) + 1


def ddim(path: Path, word: Sequence[int] = (), root_cutoff: int | None = None, datum: RootDatum = AFFINE) -> int:
    """Number of wall departures of the reverse path, positive w.r.t. w.S_{-infinity}.

    Each pair (beta, t) with beta positive, t in (0,1] and beta(pi(t)) an
    integer counts when the path arrives there moving in the sign that puts
    w.S_{-infinity} on the far side of the wall: decreasing if w^{-1}beta > 0,
    increasing otherwise.  Repeated visits of one wall count separately.
    """
    if not datum.is_affine:
        return _ddim_at(path, word, datum.positive_real_roots(), datum)
    if root_cutoff is None:
        root_cutoff = default_cutoff(path, word, datum)
    a = _ddim_at(path, word, datum.positive_real_roots(root_cutoff), datum)
    b = _ddim_at(path, word, datum.positive_real_roots(root_cutoff + 1), datum)
    if a != b:
        raise CutoffTooSmall(f"ddim changes from {a} to {b} at cutoff {root_cutoff + 1}")
    return a


def rho_defect(path: Path, datum: RootDatum = AFFINE) -> Q:
    nu = tuple(a - (b - c) for a, b, c in zip(path.shape, path.end, path.start))
    return pair(datum.rho, nu)


# crystals


def highest_weight_string(path: Path, datum: RootDatum = AFFINE, limit: int = 10000) -> tuple:
    """Raise to a highest-weight path; returns (top, word) with path = f_word(top).

    The word lists indices in the order the lowering operators are applied.
    """
    word = []
    for _ in range(limit):
        for i in datum.index_set:
            try:
                nxt = e(path, i, 1, datum)
            except NonIntegralLevel:
                return None, None
            if nxt is not None:
                word.append(i)
                path = nxt
                break
        else:
            return path, tuple(reversed(word))
    return None, None


def is_ls_member(path: Path, lam: Vector, depth: int, datum: RootDatum = AFFINE) -> bool:
    lam = vec(lam)
    top = straight_path(lam, datum)
    if path.start != top.start or path.shape != lam:
        return False
    ht = rho_defect(path, datum)
    if ht > depth:
        raise DepthExceeded(f"weight defect {ht} exceeds depth {depth}")
    if not is_lambda_path(path, datum):
        return False
    found, word = highest_weight_string(path, datum)
    if found != top:
        return False
    x = top
    for i in word:
        x = f(x, i, 1, datum)
        if x is None:
            return False
    return x == path


@dataclass(frozen=True)
class Crystal:
    shape: Vector
    depth: int
    levels: tuple  # levels[d] maps path -> lowering word (application order)

    def elements(self, d: int | None = None) -> list:
        if d is None:
            return [p for lev in self.levels for p in lev]
        return list(self.levels[d]) if d < len(self.levels) else []

    def word(self, path: Path) -> tuple:
        for lev in self.levels:
            if path in lev:
                return lev[path]
        raise KeyError("path not in this truncation")

    def __len__(self):
        return sum(len(lev) for lev in self.levels)

    def __contains__(self, path):
        return any(path in lev for lev in self.levels)


@lru_cache(maxsize=32)
def generate_crystal(shape: Vector, depth: int, datum: RootDatum = AFFINE) -> Crystal:
    """All f-words of length <= depth applied to the straight path."""
    top = straight_path(shape, datum)
    levels = [{top: ()}]
    for _ in range(depth):
        nxt = {}
        for p, w in levels[-1].items():
            for i in datum.index_set:
                q = f(p, i, 1, datum)
                if q is not None and q not in nxt:
                    nxt[q] = w + (i,)
        levels.append(nxt)
    return Crystal(vec(shape), depth, tuple(levels))


_FWORD = re.compile(r"^f(\d+)(?:\^(\d+))?$")


def parse_fword(text: str) -> list:
    """'f1^3 f0^2' -> [(1, 3), (0, 2)] in written order."""
    out = []
    for tok in text.replace("*", " ").split():
        m = _FWORD.match(tok)
        if not m:
            raise ParseError(f"bad operator token {tok!r}")
        k = int(m.group(2) or 1)
        if k <= 0:
            raise ParseError(f"exponent must be positive in {tok!r}")
        out.append((int(m.group(1)), k))
    return out


def format_fword(word: Sequence[tuple]) -> str:
    return " ".join(f"f{i}^{k}" if k != 1 else f"f{i}" for i, k in word)


def apply_fword(path: Path, word: Sequence[tuple], datum: RootDatum = AFFINE) -> Path | None:
    """Apply a written word right to left; None if some operator is undefined."""
    for i, k in reversed(list(word)):
        path = f(path, i, k, datum)
        if path is None:
            return None
    return path


def lowering_sequence_to_fword(seq: Sequence[int]) -> list:
    """Application-order indices -> written word (exponent form)."""
    out = []
    for i in reversed(list(seq)):
        if out and out[-1][0] == i:
            out[-1] = (i, out[-1][1] + 1)
        else:
            out.append((i, 1))
    return out
