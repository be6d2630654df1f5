"""Root data on a rational coweight space.

Coweights are tuples of Fractions in a fixed basis of Y.  Linear forms
(roots, weights) are tuples of the same length acting by the dot product.
The affine sl2 datum uses the basis (a0v, a1v, d) of Y.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotInTitsConeInterior

Vector = tuple  # tuple[Q, ...]
Form = tuple


def vec(*coords) -> Vector:
    if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
        coords = coords[0]
    return tuple(Q(c) for c in coords)


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def pair(form: Form, v: Vector) -> Q:
    if len(form) != len(v):
        raise DimensionMismatch(f"form of length {len(form)} against vector of length {len(v)}")
    return sum((a * b for a, b in zip(form, v)), Q(0))


def is_integral_vec(v: Vector) -> bool:
    return all(Q(c).denominator == 1 for c in v)


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", m)
        n = len(m)
        for i in range(n):
            if len(m[i]) != n:
                raise ValueError("Cartan matrix must be square")
            if m[i][i] != 2:
                raise ValueError("Cartan diagonal entries must be 2")
            for j in range(n):
                if i != j and (m[i][j] > 0 or (m[i][j] == 0) != (m[j][i] == 0)):
                    raise ValueError(f"bad off-diagonal entry at ({i},{j})")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


@dataclass(frozen=True)
class RealRoot:
    """A real root with its coroot.

    ``sign`` and ``k`` give the presentation sign*a1 + k*delta and are only
    filled in for the affine sl2 datum.
    """

    form: Form
    coroot: Vector
    sign: int | None = None
    k: int | None = None

    def __call__(self, v: Vector) -> Q:
        return pair(self.form, v)

    def negate(self) -> "RealRoot":
        return RealRoot(
            tuple(-a for a in self.form),
            tuple(-a for a in self.coroot),
            None if self.sign is None else -self.sign,
            None if self.k is None else -self.k,
        )

    def reflect(self, v: Vector) -> Vector:
        """Linear reflection s_alpha."""
        c = pair(self.form, v)
        return tuple(a - c * b for a, b in zip(v, self.coroot))

    def __repr__(self):
        if self.sign is not None:
            s = "+" if self.sign > 0 else "-"
            return f"RealRoot({s}a1{self.k:+d}d)"
        return f"RealRoot(form={[str(x) for x in self.form]})"


@dataclass(frozen=True)
class RootDatum:
    cartan: CartanMatrix
    simple_coroots: tuple
    simple_roots: tuple
    rho: Form
    name: str = ""
    delta: Form | None = None
    null_coroot: Vector | None = None
    _basis_inverse: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        r = self.cartan.rank
        cv = tuple(vec(v) for v in self.simple_coroots)
        rt = tuple(vec(f) for f in self.simple_roots)
        object.__setattr__(self, "simple_coroots", cv)
        object.__setattr__(self, "simple_roots", rt)
        object.__setattr__(self, "rho", vec(self.rho))
        if self.delta is not None:
            object.__setattr__(self, "delta", vec(self.delta))
        if self.null_coroot is not None:
            object.__setattr__(self, "null_coroot", vec(self.null_coroot))
        dims = {len(v) for v in cv} | {len(f) for f in rt} | {len(self.rho)}
        if len(dims) != 1 or len(cv) != r or len(rt) != r:
            raise DimensionMismatch("inconsistent root datum dimensions")
        for i in range(r):
            for j in range(r):
                if pair(rt[j], cv[i]) != self.cartan[i, j]:
                    raise ValueError(f"a_{j}(a_{i}v) differs from the Cartan entry")
            if pair(self.rho, cv[i]) != 1:
                raise ValueError("rho must take value 1 on every simple coroot")
        if _rank_of(cv) != r or _rank_of(rt) != r:
            raise ValueError("simple roots and coroots must be linearly independent")
        object.__setattr__(self, "_basis_inverse", _left_inverse(cv))

    @property
    def dim(self) -> int:
        return len(self.rho)

    @property
    def index_set(self) -> range:
        return range(self.cartan.rank)

    @property
    def is_affine(self) -> bool:
        return self.delta is not None

    # reflections

    def reflect(self, i: int, v: Vector) -> Vector:
        c = pair(self.simple_roots[i], v)
        if c == 0:
            return v
        return tuple(a - c * b for a, b in zip(v, self.simple_coroots[i]))

    def reflect_form(self, i: int, f: Form) -> Form:
        c = pair(f, self.simple_coroots[i])
        if c == 0:
            return f
        return tuple(a - c * b for a, b in zip(f, self.simple_roots[i]))

    def weyl_act(self, word: Sequence[int], v: Vector) -> Vector:
        """Apply s_{i1} ... s_{in} to v (rightmost letter acts first)."""
        for i in reversed(word):
            v = self.reflect(i, v)
        return v

    def weyl_act_form(self, word: Sequence[int], f: Form) -> Form:
        for i in reversed(word):
            f = self.reflect_form(i, f)
        return f

    def simple_root(self, i: int) -> RealRoot:
        root = RealRoot(self.simple_roots[i], self.simple_coroots[i])
        return self.label(root)

    def root_image(self, word: Sequence[int], root: RealRoot) -> RealRoot:
        return self.label(
            RealRoot(self.weyl_act_form(word, root.form), self.weyl_act(word, root.coroot))
        )

    def label(self, root: RealRoot) -> RealRoot:
        """Attach the (sign, k) presentation for the affine sl2 datum."""
        if not self.is_affine or self.cartan.rank != 2:
            return root
        s = pair(root.form, self.simple_coroots[1]) / 2
        k = pair(root.form, self._d_vector())
        return RealRoot(root.form, root.coroot, int(s), int(k))

    def _d_vector(self) -> Vector:
        return tuple(Q(1) if j == self.dim - 1 else Q(0) for j in range(self.dim))

    def coroot_coordinates(self, v: Vector) -> tuple:
        """Coordinates of v in the simple coroot basis (v must lie in the span)."""
        coords = tuple(pair(row, v) for row in self._basis_inverse)
        back = tuple(sum((c * b[j] for c, b in zip(coords, self.simple_coroots)), Q(0)) for j in range(self.dim))
        if back != tuple(v):
            raise ValueError("vector is not in the span of the simple coroots")
        return coords

    def is_positive(self, root: RealRoot) -> bool:
        coords = self.coroot_coordinates(root.coroot)
        return all(c >= 0 for c in coords) and any(c > 0 for c in coords)

    # dominance

    def is_dominant(self, v: Vector) -> bool:
        return all(pair(a, v) >= 0 for a in self.simple_roots)

    def is_integral(self, v: Vector) -> bool:
        """Integral in the sense that every simple root takes an integer value."""
        return all(pair(a, v).denominator == 1 for a in self.simple_roots)

    def dominant_representative(self, v: Vector, max_steps: int = 100000) -> tuple:
        """Return (v_dom, word) with weyl_act(word, v_dom) == v."""
        v = vec(v)
        if self.is_affine:
            level = pair(self.delta, v)
            if level <= 0 and any(pair(a, v) != 0 for a in self.simple_roots):
                raise NotInTitsConeInterior(f"delta(v) = {level} and v is not W-fixed")
        word = []
        for _ in range(max_steps):
            for i in self.index_set:
                if pair(self.simple_roots[i], v) < 0:
                    v = self.reflect(i, v)
                    word.append(i)
                    break
            else:
                return v, word
        raise NotInTitsConeInterior("greedy descent did not terminate")

    def in_orbit(self, v: Vector, shape: Vector) -> bool:
        return self.dominant_representative(v)[0] == tuple(shape)

    # words

    def is_reduced(self, word: Sequence[int]) -> bool:
        """A word is reduced iff w(k-1)(a_{i_k}v) is positive for each k."""
        for n in range(len(word)):
            image = self.weyl_act(word[:n], self.simple_coroots[word[n]])
            if not all(c >= 0 for c in self.coroot_coordinates(image)):
                return False
        return True

    def positive_real_roots(self, cutoff: int | None = None) -> list:
        """Positive real roots; for affine data only those with |k| <= cutoff."""
        if self.is_affine:
            if self.cartan.rank != 2:
                raise NotImplementedError("affine roots are only enumerated for affine sl2")
            if cutoff is None:
                raise ValueError("a cutoff is required for affine data")
            return [affine_root(self, s, k) for k in range(cutoff + 1) for s in (1, -1) if k > 0 or s > 0]
        seen = {}
        queue = deque(self.simple_root(i) for i in self.index_set)
        while queue:
            r = queue.popleft()
            if r.coroot in seen:
                continue
            seen[r.coroot] = r
            for i in self.index_set:
                queue.append(self.root_image([i], r))
        return [r for r in seen.values() if self.is_positive(r)]


def affine_root(datum: RootDatum, sign: int, k: int) -> RealRoot:
    """sign*a1 + k*delta for the affine sl2 datum, with coroot sign*a1v + k*c."""
    a1 = datum.simple_roots[1]
    form = tuple(sign * a + k * b for a, b in zip(a1, datum.delta))
    coroot = tuple(sign * a + k * b for a, b in zip(datum.simple_coroots[1], datum.null_coroot))
    return RealRoot(form, coroot, sign, k)


def affine_reflection(root: RealRoot, k, x: Vector) -> Vector:
    """s_{alpha,k}(x) = x - (alpha(x) + k) alpha^vee."""
    c = pair(root.form, x) + k
    return tuple(a - c * b for a, b in zip(x, root.coroot))


def build_affine_sl2() -> RootDatum:
    return RootDatum(
        cartan=CartanMatrix(((2, -2), (-2, 2))),
        simple_coroots=((1, 0, 0), (0, 1, 0)),
        simple_roots=((2, -2, 1), (-2, 2, 0)),
        rho=(1, 1, 0),
        name="affine-sl2",
        delta=(0, 0, 1),
        null_coroot=(1, 1, 0),
    )


_FINITE = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -2), (-1, 2)),
    "G2": ((2, -1), (-3, 2)),
}


def build_finite(name: str) -> RootDatum:
    """Finite-type datum on Y spanned by the simple coroots."""
    m = _FINITE[name]
    r = len(m)
    coroots = tuple(tuple(1 if a == i else 0 for a in range(r)) for i in range(r))
    roots = tuple(tuple(m[i][j] for i in range(r)) for j in range(r))
    # rho = sum of fundamental weights: the dual basis of the coroots
    return RootDatum(CartanMatrix(m), coroots, roots, (1,) * r, name=name)


def build_from_cartan(entries: Sequence[Sequence[int]], name: str = "") -> RootDatum:
    m = tuple(tuple(row) for row in entries)
    for key, val in _FINITE.items():
        if val == m:
            return build_finite(key)
    if m == ((2, -2), (-2, 2)):
        return build_affine_sl2()
    r = len(m)
    coroots = tuple(tuple(1 if a == i else 0 for a in range(r)) for i in range(r))
    roots = tuple(tuple(m[i][j] for i in range(r)) for j in range(r))
    return RootDatum(CartanMatrix(m), coroots, roots, (1,) * r, name=name)


def finite_weyl_group(datum: RootDatum) -> dict:
    """Map each element (keyed by images of the simple coroots) to one reduced word."""
    if datum.is_affine:
        raise ValueError("the affine Weyl group is infinite")
    ident = tuple(datum.simple_coroots)
    found = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for key in frontier:
            word = found[key]
            for i in datum.index_set:
                w2 = word + (i,)
                k2 = tuple(datum.weyl_act(w2, c) for c in datum.simple_coroots)
                if k2 not in found:
                    found[k2] = w2
                    nxt.append(k2)
        frontier = nxt
    return found


def reduced_words(datum: RootDatum, word: Sequence[int]) -> list:
    """All reduced words of the element represented by a reduced word."""
    target = tuple(datum.weyl_act(word, c) for c in datum.simple_coroots)
    n = len(word)
    out = []

    def key(w):
        return tuple(datum.weyl_act(w, c) for c in datum.simple_coroots)

    def grow(prefix):
        if len(prefix) == n:
            if key(prefix) == target:
                out.append(tuple(prefix))
            return
        for i in datum.index_set:
            cand = prefix + (i,)
            if datum.is_reduced(cand):
                grow(cand)

    grow(())
    return out


def _rank_of(rows: Iterable[Vector]) -> int:
    m = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def _left_inverse(cols: tuple) -> tuple:
    """Rows L with L . cols[j] = e_j, via the normal equations (exact)."""
    r, n = len(cols), len(cols[0])
    gram = [[sum((cols[i][a] * cols[j][a] for a in range(n)), Q(0)) for j in range(r)] for i in range(r)]
    inv = [[Q(int(i == j)) for j in range(r)] for i in range(r)]
    for c in range(r):
        piv = next(k for k in range(c, r) if gram[k][c] != 0)
        gram[c], gram[piv] = gram[piv], gram[c]
        inv[c], inv[piv] = inv[piv], inv[c]
        p = gram[c][c]
        gram[c] = [x / p for x in gram[c]]
        inv[c] = [x / p for x in inv[c]]
        for k in range(r):
            if k != c and gram[k][c] != 0:
                f = gram[k][c]
                gram[k] = [a - f * b for a, b in zip(gram[k], gram[c])]
                inv[k] = [a - f * b for a, b in zip(inv[k], inv[c])]
    return tuple(
        tuple(sum((inv[i][j] * cols[j][a] for j in range(r)), Q(0)) for a in range(n)) for i in range(r)
    )
