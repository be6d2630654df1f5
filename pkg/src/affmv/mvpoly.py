"""Affine sl2 MV polytopes.

Lattice points are pairs (c0, c1) meaning c0*a0 + c1*a1, so delta = (1, 1),
pairing with w0 reads c0 and pairing with w1 reads c1.  A Lusztig datum is
(bottom, partition, top) with bottom[k-1] = a_k and top[k-1] = a^k.

Edge vectors: right bottom a1 + (k-1)delta, left bottom a0 + (k-1)delta,
right top a0 + (k-1)delta, left top a1 + (k-1)delta.  The mirror symmetry
swapping a0 and a1 exchanges the two sides.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    BoundTooSmall,
    ClosureViolation,
    CompletionNotFound,
    CompletionNotUnique,
    DiagonalNotActive,
    MultipleMatches,
    NoMatch,
    ParseError,
    ReductionFailed,
    TheoremViolation,
)

Point = tuple  # (c0, c1)

ORIGIN = (0, 0)
DELTA = (1, 1)


def padd(p, q):
    return (p[0] + q[0], p[1] + q[1])


def psub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def pmul(c, p):
    return (c * p[0], c * p[1])


def swap(p):
    return (p[1], p[0])


def figure_coords(p) -> tuple:
    """Projection a1 -> (1,1), a0 -> (-1,1)."""
    return (p[1] - p[0], p[0] + p[1])


def form_a1(p) -> int:
    """(p, a1) for the symmetric form with (a_i, a_i) = 2, (a0, a1) = -2."""
    return 2 * (p[1] - p[0])


def rb(k):
    return (k - 1, k)


def lb(k):
    return (k, k - 1)


rt = lb
lt = rb


def _trim(seq) -> tuple:
    seq = [int(x) for x in seq]
    while seq and seq[-1] == 0:
        seq.pop()
    if any(x < 0 for x in seq):
        raise ValueError("multiplicities must be nonnegative")
    return tuple(seq)


# partitions


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        p = tuple(sorted((int(x) for x in self.parts), reverse=True))
        if any(x <= 0 for x in p):
            raise ValueError("partition parts must be positive")
        object.__setattr__(self, "parts", p)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def add(self, n: int) -> "Partition":
        return Partition(self.parts + (n,))

    def remove(self, n: int) -> "Partition | None":
        if n not in self.parts:
            return None
        p = list(self.parts)
        p.remove(n)
        return Partition(tuple(p))

    def exponential(self) -> str:
        """(9,2,1^2) style."""
        if not self.parts:
            return "()"
        c = Counter(self.parts)
        items = [f"{k}^{c[k]}" if c[k] > 1 else f"{k}" for k in sorted(c, reverse=True)]
        return "(" + ",".join(items) + ")"

    @classmethod
    def from_exponential(cls, text: str) -> "Partition":
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError(f"bad partition {text!r}")
        body = body[1:-1].strip()
        parts = []
        if body:
            for tok in body.split(","):
                m = re.fullmatch(r"\s*(\d+)(?:\^(\d+))?\s*", tok)
                if not m:
                    raise ParseError(f"bad partition part {tok!r}")
                parts += [int(m.group(1))] * int(m.group(2) or 1)
        return cls(tuple(parts))

    def __repr__(self):
        return f"Partition{self.exponential()}"


def partitions(n: int, largest: int | None = None) -> Iterator[tuple]:
    """Partitions of n as weakly decreasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


# data and polytopes


@dataclass(frozen=True)
class LusztigDatum:
    bottom: tuple = ()
    partition: Partition = field(default_factory=Partition)
    top: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "bottom", _trim(self.bottom))
        object.__setattr__(self, "top", _trim(self.top))
        if not isinstance(self.partition, Partition):
            object.__setattr__(self, "partition", Partition(tuple(self.partition)))

    def a(self, k: int) -> int:
        return self.bottom[k - 1] if 0 < k <= len(self.bottom) else 0

    def b(self, k: int) -> int:
        """Top multiplicity a^k."""
        return self.top[k - 1] if 0 < k <= len(self.top) else 0

    def with_first(self, delta: int) -> "LusztigDatum":
        b = list(self.bottom) or [0]
        b[0] += delta
        return LusztigDatum(tuple(b), self.partition, self.top)

    def is_zero(self) -> bool:
        return not self.bottom and not self.top and not self.partition.parts


def content(datum: LusztigDatum, side: str) -> Point:
    """Total weight of a datum placed on the given side."""
    bot, top = (rb, rt) if side == "right" else (lb, lt)
    p = pmul(datum.partition.size, DELTA)
    for k, a in enumerate(datum.bottom, 1):
        p = padd(p, pmul(a, bot(k)))
    for k, a in enumerate(datum.top, 1):
        p = padd(p, pmul(a, top(k)))
    return p


@dataclass(frozen=True)
class Vertices:
    right_bottom: tuple  # mu_0 .. mu_K
    left_bottom: tuple
    right_top: tuple  # mu^0 .. mu^K (index = k)
    left_top: tuple

    def mu(self, k):
        return self.right_bottom[min(k, len(self.right_bottom) - 1)]

    def mubar(self, k):
        return self.left_bottom[min(k, len(self.left_bottom) - 1)]

    def mu_up(self, k):
        return self.right_top[min(k, len(self.right_top) - 1)]

    def mubar_up(self, k):
        return self.left_top[min(k, len(self.left_top) - 1)]

    @property
    def mu_inf(self):
        return self.right_bottom[-1]

    @property
    def mubar_inf(self):
        return self.left_bottom[-1]

    @property
    def mu_up_inf(self):
        return self.right_top[-1]

    @property
    def mubar_up_inf(self):
        return self.left_top[-1]


def _bottom_chain(base, seq, edge):
    out = [base]
    for k, a in enumerate(seq, 1):
        out.append(padd(out[-1], pmul(a, edge(k))))
    return tuple(out)


def _top_chain(inf, seq, edge):
    """Vertices indexed 0..K from the top vertex chain ending at inf."""
    K = len(seq)
    out = [None] * (K + 1)
    out[K] = inf
    for k in range(K, 0, -1):
        out[k - 1] = padd(out[k], pmul(seq[k - 1], edge(k)))
    return tuple(out)


@dataclass(frozen=True)
class MVPolytope:
    left: LusztigDatum = field(default_factory=LusztigDatum)
    right: LusztigDatum = field(default_factory=LusztigDatum)
    base: Point = ORIGIN

    def __post_init__(self):
        object.__setattr__(self, "base", (int(self.base[0]), int(self.base[1])))

    def raw_vertices(self) -> Vertices:
        rbv = _bottom_chain(self.base, self.right.bottom, rb)
        lbv = _bottom_chain(self.base, self.left.bottom, lb)
        rtv = _top_chain(padd(rbv[-1], pmul(self.right.partition.size, DELTA)), self.right.top, rt)
        ltv = _top_chain(padd(lbv[-1], pmul(self.left.partition.size, DELTA)), self.left.top, lt)
        return Vertices(rbv, lbv, rtv, ltv)

    def vertices(self) -> Vertices:
        v = self.raw_vertices()
        if v.right_top[0] != v.left_top[0]:
            raise ClosureViolation(f"top vertices differ: {v.right_top[0]} vs {v.left_top[0]}")
        return v

    @property
    def weight(self) -> Point:
        return content(self.right, "right")

    @property
    def top_vertex(self) -> Point:
        return padd(self.base, self.weight)

    def mirror(self) -> "MVPolytope":
        return MVPolytope(self.right, self.left, swap(self.base))

    def translate(self, p) -> "MVPolytope":
        return MVPolytope(self.left, self.right, padd(self.base, p))

    def epsilon(self, i: int) -> int:
        return self.right.a(1) if i == 1 else self.left.a(1)

    def outline(self) -> list:
        """Polygon vertices in order: right side upwards, left side downwards."""
        v = self.vertices()
        pts = list(v.right_bottom) + list(reversed(v.right_top)) + list(v.left_top) + list(reversed(v.left_bottom))
        out = []
        for p in pts:
            if not out or out[-1] != p:
                out.append(p)
        if len(out) > 1 and out[-1] == out[0]:
            out.pop()
        return out


def point_polytope(base: Point = ORIGIN) -> MVPolytope:
    return MVPolytope(base=base)


# validation


@dataclass
class ValidationReport:
    closure: bool = True
    cond_i: dict = field(default_factory=dict)
    cond_ii: dict = field(default_factory=dict)
    cond_iii: bool = True
    cond_iv: bool = True
    parallel: bool = False
    n: int = 0
    removed_part: int | None = None
    messages: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.closure
            and all(self.cond_i.values())
            and all(self.cond_ii.values())
            and self.cond_iii
            and self.cond_iv
        )

    def summary(self) -> dict:
        return {
            "ok": self.ok,
            "closure": self.closure,
            "i": all(self.cond_i.values()),
            "ii": all(self.cond_ii.values()),
            "iii": self.cond_iii,
            "iv": self.cond_iv,
            "parallel": self.parallel,
            "n": self.n,
            "removed_part": self.removed_part,
            "failures": list(self.messages),
        }


def _ineq_pair(x, y, sign) -> bool:
    """Both values <= 0 (sign=-1) or >= 0 (sign=+1), at least one zero."""
    if sign < 0:
        return x <= 0 and y <= 0 and (x == 0 or y == 0)
    return x >= 0 and y >= 0 and (x == 0 or y == 0)


def validate(P: MVPolytope) -> ValidationReport:
    rep = ValidationReport()
    v = P.raw_vertices()
    if v.right_top[0] != v.left_top[0]:
        rep.closure = False
        rep.messages.append("closure: mu^0 != mubar^0")
    kb = max(len(P.left.bottom), len(P.right.bottom)) + 2
    for k in range(2, kb + 1):
        x = v.mubar(k)[1] - v.mu(k - 1)[1]
        y = v.mu(k)[0] - v.mubar(k - 1)[0]
        rep.cond_i[k] = _ineq_pair(x, y, -1)
        if not rep.cond_i[k]:
            rep.messages.append(f"(i) fails at k={k}: values {x}, {y}")
    kt = max(len(P.left.top), len(P.right.top)) + 2
    for k in range(2, kt + 1):
        x = v.mubar_up(k)[0] - v.mu_up(k - 1)[0]
        y = v.mu_up(k)[1] - v.mubar_up(k - 1)[1]
        rep.cond_ii[k] = _ineq_pair(x, y, 1)
        if not rep.cond_ii[k]:
            rep.messages.append(f"(ii) fails at k={k}: values {x}, {y}")
    lo = psub(v.mu_inf, v.mubar_inf)
    hi = psub(v.mu_up_inf, v.mubar_up_inf)
    rep.n = n = form_a1(lo) // 2
    rep.parallel = lo[0] * hi[1] - lo[1] * hi[0] == 0
    lam, lamb = P.right.partition, P.left.partition
    if rep.parallel:
        rep.cond_iii = lam == lamb
    elif n > 0 and lam.remove(n) == lamb:
        rep.removed_part = n
    elif n > 0 and lamb.remove(n) == lam:
        rep.removed_part = n
    else:
        rep.cond_iii = False
    if not rep.cond_iii:
        rep.messages.append(f"(iii) fails: lambda={lam.exponential()}, lambdabar={lamb.exponential()}, n={n}")
    rep.cond_iv = lam.largest <= n and lamb.largest <= n
    if not rep.cond_iv:
        rep.messages.append(f"(iv) fails: largest parts {lam.largest}, {lamb.largest} exceed n={n}")
    return rep


def is_valid(P: MVPolytope) -> bool:
    return validate(P).ok


# enumeration


def _edge_multisets(target: Point, edge, bound: int, k: int = 1) -> Iterator[tuple]:
    """Sequences (m_k, m_{k+1}, ...) with sum m_j edge(j) <= target componentwise.

    Yields (sequence, remainder).
    """
    if k > bound:
        yield (), target
        return
    e = edge(k)
    m = 0
    rem = target
    while rem[0] >= 0 and rem[1] >= 0:
        for rest, r in _edge_multisets(rem, edge, bound, k + 1):
            yield (m,) + rest, r
        m += 1
        rem = psub(rem, e)


def lusztig_data(weight: Point, side: str = "right", bound: int | None = None) -> list:
    """All Lusztig data of the given total weight with indices <= bound."""
    if bound is None:
        bound = max(weight) + 1
    bot, top = (rb, rt) if side == "right" else (lb, lt)
    out = []
    for bseq, r1 in _edge_multisets(weight, bot, bound):
        for tseq, r2 in _edge_multisets(r1, top, bound):
            if r2[0] != r2[1]:
                continue
            for lam in partitions(r2[0]):
                out.append(LusztigDatum(bseq, Partition(lam), tseq))
    return out


def _enumerate_brute(weight: Point, bound: int) -> list:
    rights = lusztig_data(weight, "right", bound)
    lefts = lusztig_data(weight, "left", bound)
    out = []
    for r in rights:
        for l in lefts:
            P = MVPolytope(l, r)
            if validate(P).ok:
                out.append(P)
    return out


def enumerate_mv(weight: Point, support_bound: int | None = None, method: str = "brute") -> list:
    """All MV polytopes of the given weight, based at the origin.

    method "brute" pairs every left datum with every right datum and keeps
    the valid pairs; "complete" completes each right datum instead.
    Uniqueness of right and left data is asserted.
    """
    weight = (int(weight[0]), int(weight[1]))
    if weight[0] < 0 or weight[1] < 0:
        return []
    natural = max(weight) + 1
    bound = natural if support_bound is None else support_bound
    if method == "brute":
        out = _enumerate_brute(weight, bound)
        if bound < natural and len(_enumerate_brute(weight, bound + 1)) != len(out):
            raise BoundTooSmall(f"support bound {bound} truncates the enumeration")
    else:
        out = []
        for r in lusztig_data(weight, "right", bound):
            out += complete_left(r)
    if len({P.right for P in out}) != len(out) or len({P.left for P in out}) != len(out):
        raise TheoremViolation("a Lusztig datum occurs in two MV polytopes")
    return out


# completion of the opposite datum


def _tail_ok(x, y):
    return _ineq_pair(x, y, -1)


def _left_bottoms(v_right: Vertices, base: Point, top: Point, kb: int) -> list:
    """All left bottom sequences satisfying (i) against the right bottom chain."""
    X = top[0] - base[0]
    kmax = max(kb + 1, X) + 1
    out = []

    def rec(k, seq, cur):
        if k > kmax:
            out.append((tuple(seq), cur))
            return
        e = lb(k)
        if k == 1:
            options = range(0, X + 1)
        else:
            y = v_right.mu(k)[0] - cur[0]
            if y > 0:
                return
            cap = v_right.mu(k - 1)[1] - cur[1]
            if cap < 0:
                return
            if y == 0:
                options = range(0, cap // (k - 1) + 1)
            elif cap % (k - 1) == 0:
                options = (cap // (k - 1),)
            else:
                return
        for a in options:
            nxt = padd(cur, pmul(a, e))
            if nxt[0] > top[0] or nxt[1] > top[1]:
                break
            seq.append(a)
            rec(k + 1, seq, nxt)
            seq.pop()

    rec(1, [], base)
    return out


def _left_tops(v_right: Vertices, base: Point, top: Point, kt: int) -> list:
    """All left top sequences satisfying (ii) against the right top chain."""
    Y = top[1] - base[1]
    kmax = max(kt + 1, Y) + 1
    out = []

    def rec(k, seq, cur):
        if k > kmax:
            out.append((tuple(seq), cur))
            return
        e = lt(k)
        if k == 1:
            options = range(0, Y + 1)
        else:
            y = v_right.mu_up(k)[1] - cur[1]
            if y < 0:
                return
            cap = cur[0] - v_right.mu_up(k - 1)[0]
            if cap < 0:
                return
            if y == 0:
                options = range(0, cap // (k - 1) + 1)
            elif cap % (k - 1) == 0:
                options = (cap // (k - 1),)
            else:
                return
        for a in options:
            nxt = psub(cur, pmul(a, e))
            if nxt[0] < base[0] or nxt[1] < base[1]:
                break
            seq.append(a)
            rec(k + 1, seq, nxt)
            seq.pop()

    rec(1, [], top)
    return out


def complete_left(right: LusztigDatum, base: Point = ORIGIN) -> list:
    """Every valid polytope with the given right datum (at most one exists)."""
    skeleton = MVPolytope(LusztigDatum(), right, base)
    v = skeleton.raw_vertices()
    top = v.right_top[0]
    bottoms = _left_bottoms(v, base, top, len(right.bottom))
    tops = {}
    for seq, inf in _left_tops(v, base, top, len(right.top)):
        tops.setdefault(inf, []).append(seq)
    lam = right.partition
    out = []
    for bseq, binf in bottoms:
        n = form_a1(psub(v.mu_inf, binf)) // 2
        cands = {lam}
        if n > 0:
            cands.add(lam.add(n))
            r = lam.remove(n)
            if r is not None:
                cands.add(r)
        for lamb in cands:
            want = padd(binf, pmul(lamb.size, DELTA))
            for tseq in tops.get(want, ()):
                P = MVPolytope(LusztigDatum(bseq, lamb, tseq), right, base)
                if validate(P).ok:
                    out.append(P)
    return out


def complete_right(left: LusztigDatum, base: Point = ORIGIN) -> list:
    return [P.mirror() for P in complete_left(left, swap(base))]


def _unique(cands: list, what: str) -> MVPolytope:
    if not cands:
        raise CompletionNotFound(f"no valid completion for {what}")
    if len(cands) > 1:
        raise CompletionNotUnique(f"{len(cands)} completions for {what}")
    return cands[0]


@lru_cache(maxsize=100000)
def polytope_from_right(right: LusztigDatum, base: Point = ORIGIN) -> MVPolytope:
    return _unique(complete_left(right, base), f"right datum {right}")


@lru_cache(maxsize=100000)
def polytope_from_left(left: LusztigDatum, base: Point = ORIGIN) -> MVPolytope:
    return _unique(complete_right(left, base), f"left datum {left}")


# crystal structure


def crystal_f(P: MVPolytope, i: int) -> MVPolytope:
    if i == 1:
        return polytope_from_right(P.right.with_first(1), P.base)
    return polytope_from_left(P.left.with_first(1), P.base)


def crystal_e(P: MVPolytope, i: int) -> MVPolytope | None:
    if P.epsilon(i) == 0:
        return None
    if i == 1:
        return polytope_from_right(P.right.with_first(-1), P.base)
    return polytope_from_left(P.left.with_first(-1), P.base)


def polytope_of_word(seq: Sequence[int]) -> MVPolytope:
    """Apply crystal_f along an application-order index sequence to the point."""
    P = point_polytope()
    for i in seq:
        P = crystal_f(P, i)
    return P


class Classification(enum.Enum):
    TOP = "Top"
    DELTA_TOP = "DeltaTop"
    GENERAL = "General"


def bottom_is_first_only(P: MVPolytope) -> bool:
    """Bottom data vanish except possibly one first entry on one side."""
    if len(P.right.bottom) > 1 or len(P.left.bottom) > 1:
        return False
    return not (P.right.a(1) and P.left.a(1))


def classify(P: MVPolytope) -> Classification:
    if not bottom_is_first_only(P):
        # both first entries nonzero with nothing else cannot happen for a
        # valid polytope since (i) fails at k = 2
        return Classification.GENERAL
    if not P.right.partition.parts and not P.left.partition.parts:
        return Classification.TOP
    return Classification.DELTA_TOP


def is_top(P: MVPolytope) -> bool:
    return classify(P) is Classification.TOP


# cuts


def _seq(values: dict) -> tuple:
    if not values:
        return ()
    n = max(values)
    return tuple(values.get(k, 0) for k in range(1, n + 1))


def _checked(low: MVPolytope, high: MVPolytope):
    for piece in (low, high):
        rep = validate(piece)
        if not rep.ok:
            raise TheoremViolation(f"cut piece is not an MV polytope: {rep.messages}")
    return low, high


def cut_at_active_diagonal(P: MVPolytope, k: int | None = None, side: str = "delta") -> tuple:
    """Cut along an active diagonal; returns (lower piece, upper piece).

    side is "delta" ([mubar_inf, mu_inf]), "top" ([mubar^inf, mu^inf]),
    "bottom" (a diagonal of condition (i) at k) or "upper" (condition (ii)).
    """
    v = P.vertices()
    L, R = P.left, P.right
    E = LusztigDatum()
    if side == "delta":
        d = psub(v.mubar_inf, v.mu_inf)
        if d[1] == 0 and d[0] >= 0:
            t = d[0]
            high = MVPolytope(LusztigDatum((t,), L.partition, L.top), LusztigDatum((), R.partition, R.top), v.mu_inf)
            low = MVPolytope(LusztigDatum(L.bottom), LusztigDatum(R.bottom, (), (t,)), P.base)
        elif d[0] == 0 and d[1] <= 0:
            t = -d[1]
            high = MVPolytope(LusztigDatum((), L.partition, L.top), LusztigDatum((t,), R.partition, R.top), v.mubar_inf)
            low = MVPolytope(LusztigDatum(L.bottom, (), (t,)), LusztigDatum(R.bottom), P.base)
        else:
            raise DiagonalNotActive("the delta diagonal is not parallel to a simple root")
        return _checked(low, high)
    if side == "top":
        d = psub(v.mu_up_inf, v.mubar_up_inf)
        if d[0] == 0 and d[1] >= 0:
            t = d[1]
            high = MVPolytope(LusztigDatum((), (), L.top), LusztigDatum((t,), (), R.top), v.mubar_up_inf)
            low = MVPolytope(LusztigDatum(L.bottom, L.partition, (t,)), LusztigDatum(R.bottom, R.partition), P.base)
        elif d[1] == 0 and d[0] <= 0:
            t = -d[0]
            high = MVPolytope(LusztigDatum((t,), (), L.top), LusztigDatum((), (), R.top), v.mu_up_inf)
            low = MVPolytope(LusztigDatum(L.bottom, L.partition), LusztigDatum(R.bottom, R.partition, (t,)), P.base)
        else:
            raise DiagonalNotActive("the top diagonal is not parallel to a simple root")
        return _checked(low, high)
    if k is None or k < 2:
        raise DiagonalNotActive("k must be at least 2")
    lb_ = {j: L.a(j) for j in range(1, len(L.bottom) + 1)}
    rb_ = {j: R.a(j) for j in range(1, len(R.bottom) + 1)}
    lt_ = {j: L.b(j) for j in range(1, len(L.top) + 1)}
    rt_ = {j: R.b(j) for j in range(1, len(R.top) + 1)}
    if side == "bottom":
        x = v.mubar(k)[1] - v.mu(k - 1)[1]
        y = v.mu(k)[0] - v.mubar(k - 1)[0]
        if not _ineq_pair(x, y, -1):
            raise DiagonalNotActive(f"condition (i) fails at k={k}")
        if x == 0:
            t = v.mubar(k)[0] - v.mu(k - 1)[0]
            low = MVPolytope(
                LusztigDatum(_seq({j: a for j, a in lb_.items() if j <= k})),
                LusztigDatum(_seq({j: a for j, a in rb_.items() if j < k}), (), (t,)),
                P.base,
            )
            hl = {j: a for j, a in lb_.items() if j > k}
            hl[1] = t
            high = MVPolytope(
                LusztigDatum(_seq(hl), L.partition, L.top),
                LusztigDatum(_seq({j: a for j, a in rb_.items() if j >= k}), R.partition, R.top),
                v.mu(k - 1),
            )
        else:
            t = v.mu(k)[1] - v.mubar(k - 1)[1]
            low = MVPolytope(
                LusztigDatum(_seq({j: a for j, a in lb_.items() if j < k}), (), (t,)),
                LusztigDatum(_seq({j: a for j, a in rb_.items() if j <= k})),
                P.base,
            )
            hr = {j: a for j, a in rb_.items() if j > k}
            hr[1] = t
            high = MVPolytope(
                LusztigDatum(_seq({j: a for j, a in lb_.items() if j >= k}), L.partition, L.top),
                LusztigDatum(_seq(hr), R.partition, R.top),
                v.mubar(k - 1),
            )
        return _checked(low, high)
    if side == "upper":
        x = v.mubar_up(k)[0] - v.mu_up(k - 1)[0]
        y = v.mu_up(k)[1] - v.mubar_up(k - 1)[1]
        if not _ineq_pair(x, y, 1):
            raise DiagonalNotActive(f"condition (ii) fails at k={k}")
        if x == 0:
            t = v.mu_up(k - 1)[1] - v.mubar_up(k)[1]
            high = MVPolytope(
                LusztigDatum((), (), _seq({j: a for j, a in lt_.items() if j <= k})),
                LusztigDatum((t,), (), _seq({j: a for j, a in rt_.items() if j < k})),
                v.mubar_up(k),
            )
            ll = {j: a for j, a in lt_.items() if j > k}
            ll[1] = t
            low = MVPolytope(
                LusztigDatum(L.bottom, L.partition, _seq(ll)),
                LusztigDatum(R.bottom, R.partition, _seq({j: a for j, a in rt_.items() if j >= k})),
                P.base,
            )
        else:
            t = v.mubar_up(k - 1)[0] - v.mu_up(k)[0]
            high = MVPolytope(
                LusztigDatum((t,), (), _seq({j: a for j, a in lt_.items() if j < k})),
                LusztigDatum((), (), _seq({j: a for j, a in rt_.items() if j <= k})),
                v.mu_up(k),
            )
            rr = {j: a for j, a in rt_.items() if j > k}
            rr[1] = t
            low = MVPolytope(
                LusztigDatum(L.bottom, L.partition, _seq({j: a for j, a in lt_.items() if j >= k})),
                LusztigDatum(R.bottom, R.partition, _seq(rr)),
                P.base,
            )
        return _checked(low, high)
    raise ValueError(f"unknown side {side!r}")


def delta_top_part(P: MVPolytope) -> MVPolytope:
    """P^{delta-t}, re-based at the origin."""
    high = cut_at_active_diagonal(P, side="delta")[1]
    return high.translate(psub(ORIGIN, high.base))


def top_part(P: MVPolytope) -> MVPolytope:
    """P^t, re-based at the origin."""
    high = cut_at_active_diagonal(P, side="top")[1]
    return high.translate(psub(ORIGIN, high.base))


# bridge to paths


def coroot_to_lattice(v) -> Point:
    """a0v, a1v coordinates (first two entries) to the polytope lattice."""
    c0, c1 = v[0], v[1]
    if c0.denominator != 1 or c1.denominator != 1:
        raise ValueError("not in the coroot lattice")
    return (int(c0), int(c1))


def path_weight(path) -> Point:
    from .paths import weight_defect

    return coroot_to_lattice(weight_defect(path))


def bottom_data_of_path(path, cap: int = 40) -> tuple:
    """(left bottom, right bottom) multiplicity sequences of a path."""
    from .upsilon import bottom_sequence

    return bottom_sequence(path, 0, cap), bottom_sequence(path, 1, cap)


def _bottom_inf(left: tuple, right: tuple) -> tuple:
    mu = ORIGIN
    for k, a in enumerate(right, 1):
        mu = padd(mu, pmul(a, rb(k)))
    mubar = ORIGIN
    for k, a in enumerate(left, 1):
        mubar = padd(mubar, pmul(a, lb(k)))
    return mu, mubar


def delta_top_target(left: tuple, right: tuple, weight: Point) -> tuple:
    """(i0, n, weight of P^{delta-t}) predicted from bottom data alone."""
    mu, mubar = _bottom_inf(left, right)
    d = psub(mubar, mu)
    if d[1] == 0 and d[0] >= 0:
        return 0, d[0], psub(weight, mu)
    if d[0] == 0 and d[1] <= 0:
        return 1, -d[1], psub(weight, mubar)
    raise TheoremViolation(f"bottom data {left}, {right} violate condition (i) at infinity")


def genpol_reduce(path, cap: int = 40) -> tuple:
    """Reduce a path to the representative of its delta-top part.

    Returns (e_word, h, i0, reduced) where e_word lists (index, exponent)
    in application order and reduced = f_{i0}^h e...e(path).
    """
    from .paths import e_max, eps, f

    left, right = bottom_data_of_path(path, cap)
    i0, n, target_w = delta_top_target(left, right, path_weight(path))
    target = ((n,) if n else (), ()) if i0 == 0 else ((), (n,) if n else ())

    def attempt(state):
        w = path_weight(state)
        diff = psub(target_w, w)
        simple = (1, 0) if i0 == 0 else (0, 1)
        h = diff[0] if i0 == 0 else diff[1]
        if h < 0 or diff != pmul(h, simple):
            return None
        cand = f(state, i0, h) if h else state
        if cand is None or bottom_data_of_path(cand, cap) != target:
            return None
        return h, cand

    if (left, right) == target:
        return [], 0, i0, path
    for first in (0, 1):
        state, word, i = path, [], first
        got = attempt(state)
        while got is None:
            k = eps(state, i)
            if k == 0 and eps(state, 1 - i) == 0:
                break
            if k:
                state = e_max(state, i)
                word.append((i, k))
                got = attempt(state)
            i = 1 - i
        if got is not None:
            return word, got[0], i0, got[1]
    raise ReductionFailed("no alternating raising sequence reaches the delta-top part")


def _right_tops(c: Point) -> Iterator[tuple]:
    """Top sequences (a^1, a^2, ...) with sum a^k (k, k-1) == c."""
    r = c[0] - c[1]
    if r < 0 or c[1] < 0:
        return
    for parts in partitions_at_most(c[1], r):
        counts = Counter(parts)
        zeros = r - len(parts)
        seq = {1: zeros} if zeros else {}
        for p, m in counts.items():
            seq[p + 1] = seq.get(p + 1, 0) + m
        yield _seq(seq)


def partitions_at_most(n: int, k: int) -> Iterator[tuple]:
    for p in partitions(n):
        if len(p) <= k:
            yield p


def reconstruct_from_path(path, cap: int = 40) -> MVPolytope:
    """The MV polytope of a path: bottom data, decorations, then completion."""
    from .decorations import decorate

    left, right = bottom_data_of_path(path, cap)
    lamb, lam = decorate(path)
    weight = path_weight(path)
    partial = LusztigDatum(right, lam)
    rest = psub(weight, content(partial, "right"))
    matches = []
    for tseq in _right_tops(rest):
        for P in complete_left(LusztigDatum(right, lam, tseq)):
            if P.left.bottom == left and P.left.partition == lamb:
                matches.append(P)
    if not matches:
        raise NoMatch("no MV polytope has this bottom data, weight and decoration")
    if len(matches) > 1:
        raise MultipleMatches(f"{len(matches)} MV polytopes share this bottom data and decoration")
    P = matches[0]
    if P.epsilon(0) != _eps(path, 0) or P.epsilon(1) != _eps(path, 1):
        raise TheoremViolation("first bottom entries disagree with epsilon")
    return P


def _eps(path, i):
    from .paths import eps

    return eps(path, i)
