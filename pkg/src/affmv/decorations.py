"""Zigzags and the partitions decorating the vertical edges of an MV polytope."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction as Q

from .errors import DeltaTopAmbiguous, HypothesisNotMet
from .mvpoly import Partition, genpol_reduce
from .paths import AFFINE, Path, eps, level_profile, point, sections
from .rootdata import pair


@dataclass(frozen=True)
class Zigzag:
    interval: tuple  # (s, v)
    i: int
    k: int
    inner: tuple  # (t, u)


@dataclass(frozen=True)
class ZigzagReport:
    multiplicities: dict = field(default_factory=dict)  # (i, k) -> m_{i,k}
    extra_part: tuple | None = None  # (side, N)

    def partition(self, i: int) -> Partition:
        parts = []
        for (j, k), m in self.multiplicities.items():
            if j == i and k > 0:
                parts += [k] * m
        return Partition(tuple(parts))


def _min_on(path: Path, form, s, v) -> Q:
    times = {s, v} | {t for t in path.breakpoints() if s < t < v}
    return min(pair(form, point(path, t)) for t in times)


def _candidates(path: Path, i: int) -> list:
    ai, aj = AFFINE.simple_root(i), AFFINE.simple_root(1 - i)
    si = [s for s in sections(path, ai).stable if s.level > 0]
    sj = [s for s in sections(path, aj).stable if s.level < 0]
    out = []
    for a in si:
        s, u = a.interval
        k = a.level
        for b in sj:
            t, v = b.interval
            if b.level != -k or not (s <= t < u <= v):
                continue
            if _min_on(path, ai.form, s, v) < k or _min_on(path, aj.form, s, v) < -k:
                continue
            out.append(Zigzag((s, v), i, k, (t, u)))
    return out


def find_zigzags(path: Path, i: int) -> list:
    """alpha_i-zigzags.  Candidates sharing a stable section are one zigzag."""
    cands = _candidates(path, i)
    groups = []
    for z in cands:
        hit = [g for g in groups if any(z.interval[0] == y.interval[0] or z.interval[1] == y.interval[1] for y in g)]
        merged = [z]
        for g in hit:
            groups.remove(g)
            merged += g
        groups.append(merged)
    out = []
    for g in groups:
        s = min(z.interval[0] for z in g)
        v = max(z.interval[1] for z in g)
        t = min(z.inner[0] for z in g)
        u = max(z.inner[1] for z in g)
        out.append(Zigzag((s, v), i, g[0].k, (t, u)))
    return sorted(out, key=lambda z: (z.interval, z.k))


def zigzag_counts(path: Path, i: int) -> Counter:
    return Counter(z.k for z in find_zigzags(path, i))


def _min_inside_stable(path: Path, i: int, n: int) -> bool:
    """Is alpha_{1-i} at its minimum -n, for the last time, inside an
    alpha_i-stable section at n?"""
    other = AFFINE.simple_root(1 - i)
    times = [t for t, f in level_profile(path, other) if f == -n][-1:]
    secs = [s.interval for s in sections(path, AFFINE.simple_root(i)).stable if s.level == n]
    return any(a <= t <= b for t in times for a, b in secs)


def zigzag_report(path: Path) -> ZigzagReport:
    mult = {}
    for i in (0, 1):
        for k, m in zigzag_counts(path, i).items():
            mult[(i, k)] = m
    e0, e1 = eps(path, 0), eps(path, 1)
    extra = None
    if e0 > 0 == e1 and _min_inside_stable(path, 1, e0):
        extra = ("right", e0)
    elif e1 > 0 == e0 and _min_inside_stable(path, 0, e1):
        extra = ("left", e1)
    return ZigzagReport(mult, extra)


def read_partitions(path: Path) -> tuple:
    """(lambdabar, lambda) read from a path with exactly one positive epsilon."""
    e0, e1 = eps(path, 0), eps(path, 1)
    if e0 > 0 == e1:
        lamb = Partition(tuple(k for k, m in zigzag_counts(path, 1).items() for _ in range(m) if k > 0))
        lam = lamb.add(e0) if _min_inside_stable(path, 1, e0) else lamb
        return lamb, lam
    if e1 > 0 == e0:
        lam = Partition(tuple(k for k, m in zigzag_counts(path, 0).items() for _ in range(m) if k > 0))
        lamb = lam.add(e1) if _min_inside_stable(path, 0, e1) else lam
        return lamb, lam
    raise HypothesisNotMet(f"need exactly one of eps0={e0}, eps1={e1} to vanish")


def decorate(path: Path) -> tuple:
    """(lambdabar, lambda) for any path, via its delta-top representative."""
    _, _, _, red = genpol_reduce(path)
    e0, e1 = eps(red, 0), eps(red, 1)
    if e0 == 0 and e1 == 0:
        return Partition(), Partition()
    if e0 > 0 and e1 > 0:
        raise DeltaTopAmbiguous("reduced path has both epsilons positive")
    return read_partitions(red)
