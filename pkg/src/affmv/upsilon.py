"""Theta sequences, the paths Upsilon_w and Upsilon'_w, and bottom vertices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

from .errors import NonReducedWord, StabilizationCapExceeded
from .paths import AFFINE, Path, eps, f_max, minimum, point
from .rootdata import RootDatum, Vector, affine_reflection, pair, sub


def theta_sequence(path: Path, word: Sequence[int], datum: RootDatum = AFFINE) -> list:
    out = [path]
    for i in word:
        out.append(f_max(out[-1], i, datum))
    return out


def _check_reduced(word, datum):
    if not datum.is_reduced(tuple(word)):
        raise NonReducedWord(f"{list(word)} is not reduced")


def upsilon(path: Path, word: Sequence[int], datum: RootDatum = AFFINE, theta: Path | None = None) -> Path:
    """w . f_w^max(path) with the linear Weyl action."""
    word = tuple(word)
    _check_reduced(word, datum)
    if theta is None:
        theta = theta_sequence(path, word, datum)[-1]
    return theta.map_linear(lambda v: datum.weyl_act(word, v))


def upsilon_prime(path: Path, word: Sequence[int], datum: RootDatum = AFFINE, theta: Path | None = None) -> Path:
    """Upsilon_w translated so that it ends at path(1)."""
    u = upsilon(path, word, datum, theta)
    return u.translate(sub(path.end, u.end))


@dataclass(frozen=True)
class BottomData:
    first_index: int
    vertices: tuple  # Upsilon'_{w_k}(pi)(0), k = 0, 1, ...
    multiplicities: tuple  # eps_{i_k}(Theta_{k-1}), k = 1, 2, ...

    @property
    def side(self) -> str:
        return "right" if self.first_index == 1 else "left"

    def support(self) -> dict:
        return {k + 1: a for k, a in enumerate(self.multiplicities) if a}

    def increments(self) -> list:
        return [sub(a, b) for a, b in zip(self.vertices, self.vertices[1:])]


def alternating_word(first_index: int, length: int) -> tuple:
    return tuple((first_index + k) % 2 for k in range(length))


def bottom_vertices(path: Path, first_index: int, cap: int = 40, datum: RootDatum = AFFINE) -> BottomData:
    """Start points of Upsilon'_w along the alternating word starting at first_index.

    The increments are positive coroots whose sum stays below the weight
    defect of the path, so once the height of the next increment root
    exceeds the unused height every later multiplicity vanishes.  The
    iteration runs until that happens and the last two multiplicities are 0.
    """
    theta = path
    verts = [path.start]
    mults = []
    budget = pair(datum.rho, sub(path.shape, sub(path.end, path.start)))
    word = alternating_word(first_index, cap + 1)
    for k in range(1, cap + 1):
        i = word[k - 1]
        a = eps(theta, i, datum)
        root = datum.weyl_act(word[: k - 1], datum.simple_coroots[i])
        budget -= a * pair(datum.rho, root)
        mults.append(a)
        theta = f_max(theta, i, datum)
        verts.append(sub(path.end, datum.weyl_act(word[:k], sub(theta.end, theta.start))))
        nxt = datum.weyl_act(word[:k], datum.simple_coroots[word[k]])
        if k >= 2 and mults[-1] == 0 and mults[-2] == 0 and pair(datum.rho, nxt) > budget:
            return BottomData(first_index, tuple(verts), tuple(mults))
    raise StabilizationCapExceeded(f"bottom vertices did not stabilize within {cap} steps")


def bottom_sequence(path: Path, first_index: int, cap: int = 40, datum: RootDatum = AFFINE) -> tuple:
    """Multiplicities with trailing zeros removed."""
    m = list(bottom_vertices(path, first_index, cap, datum).multiplicities)
    while m and m[-1] == 0:
        m.pop()
    return tuple(m)


def min_level_and_reflection_check(path: Path, word: Sequence[int], i: int, datum: RootDatum = AFFINE) -> tuple:
    """(m, ok): the minimum of w(alpha_i) along Upsilon'_w two ways, and the
    reflection identity Upsilon'_{ws}(t) = s_{-w(alpha),m}(Upsilon'_w(t))
    checked at every breakpoint t up to the first time the minimum is hit.
    """
    word = tuple(word)
    _check_reduced(word + (i,), datum)
    thetas = theta_sequence(path, word + (i,), datum)
    u = upsilon_prime(path, word, datum, thetas[len(word)])
    v = upsilon_prime(path, word + (i,), datum, thetas[-1])
    beta = datum.root_image(word, datum.simple_root(i))
    m_direct, q, _ = minimum(u, beta)
    big_u = upsilon(path, word, datum, thetas[len(word)])
    m_formula = pair(beta.form, sub(path.end, big_u.end)) - eps(thetas[len(word)], i, datum)
    ok = m_direct == m_formula
    wall = beta.negate()
    times = sorted({t for t in u.breakpoints() + v.breakpoints() if t <= q} | {q})
    for t in times:
        if point(v, t) != affine_reflection(wall, m_direct, point(u, t)):
            ok = False
            break
    return int(m_direct), ok
