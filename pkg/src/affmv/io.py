"""JSON codecs.  Rationals travel as "p/q" strings; floats are rejected."""

from __future__ import annotations

import json
import re
from fractions import Fraction as Q

from .decorations import Zigzag
from .errors import ParseError
from .mvpoly import LusztigDatum, MVPolytope, Partition
from .paths import Path
from .rootdata import CartanMatrix, RealRoot
from .treefold import FoldedPath, Marker
from .upsilon import BottomData

_RAT = re.compile(r"^-?\d+(?:/\d+)?$")


def enc_rat(x) -> str:
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dec_rat(x, ptr: str = "") -> Q:
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"expected a rational string, got {x!r}", ptr)
    if isinstance(x, int):
        return Q(x)
    if not isinstance(x, str) or not _RAT.match(x.strip()):
        raise ParseError(f"expected a rational 'p/q', got {x!r}", ptr)
    try:
        return Q(x.strip())
    except ZeroDivisionError:
        raise ParseError("zero denominator", ptr) from None


def dec_int(x, ptr: str = "") -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"expected an integer, got {x!r}", ptr)
    return x


def enc_vec(v) -> list:
    return [enc_rat(x) for x in v]


def dec_vec(v, ptr: str = "") -> tuple:
    if not isinstance(v, list):
        raise ParseError("expected an array", ptr)
    return tuple(dec_rat(x, f"{ptr}/{j}") for j, x in enumerate(v))


def _obj(d, ptr, keys):
    if not isinstance(d, dict):
        raise ParseError("expected an object", ptr)
    for k in keys:
        if k not in d:
            raise ParseError(f"missing field {k!r}", ptr)
    return d


# paths


def path_to_json(p: Path) -> dict:
    return {
        "start": enc_vec(p.start),
        "segments": [{"dir": enc_vec(d), "dur": enc_rat(t)} for d, t in p.segments],
        "shape": enc_vec(p.shape),
    }


def path_from_json(d, ptr: str = "") -> Path:
    _obj(d, ptr, ("start", "segments", "shape"))
    segs = d["segments"]
    if not isinstance(segs, list):
        raise ParseError("expected an array", f"{ptr}/segments")
    out = []
    for j, s in enumerate(segs):
        sp = f"{ptr}/segments/{j}"
        _obj(s, sp, ("dir", "dur"))
        out.append((dec_vec(s["dir"], f"{sp}/dir"), dec_rat(s["dur"], f"{sp}/dur")))
    try:
        return Path(dec_vec(d["start"], f"{ptr}/start"), tuple(out), dec_vec(d["shape"], f"{ptr}/shape"))
    except ValueError as ex:
        raise ParseError(str(ex), f"{ptr}/segments") from None


# root data


def cartan_to_json(c: CartanMatrix) -> list:
    return [list(row) for row in c.entries]


def cartan_from_json(d, ptr: str = "") -> CartanMatrix:
    if not isinstance(d, list):
        raise ParseError("expected a nested integer array", ptr)
    rows = []
    for i, row in enumerate(d):
        if not isinstance(row, list):
            raise ParseError("expected an array", f"{ptr}/{i}")
        rows.append(tuple(dec_int(x, f"{ptr}/{i}/{j}") for j, x in enumerate(row)))
    try:
        return CartanMatrix(tuple(rows))
    except ValueError as ex:
        raise ParseError(str(ex), ptr) from None


def root_to_json(r: RealRoot) -> dict:
    out = {"form": enc_vec(r.form), "coroot": enc_vec(r.coroot)}
    if r.sign is not None:
        out["label"] = [r.sign, r.k]
    return out


def root_from_json(d, ptr: str = "") -> RealRoot:
    _obj(d, ptr, ("form", "coroot"))
    sign = k = None
    if "label" in d:
        lab = d["label"]
        if not isinstance(lab, list) or len(lab) != 2:
            raise ParseError("label must be [sign, k]", f"{ptr}/label")
        sign, k = (dec_int(x, f"{ptr}/label/{j}") for j, x in enumerate(lab))
    return RealRoot(dec_vec(d["form"], f"{ptr}/form"), dec_vec(d["coroot"], f"{ptr}/coroot"), sign, k)


# polytopes


def _sparse(seq) -> dict:
    return {str(k): a for k, a in enumerate(seq, 1) if a}


def _dense(d, ptr) -> tuple:
    if not isinstance(d, dict):
        raise ParseError("expected a sparse map", ptr)
    vals = {}
    for k, v in d.items():
        if not k.isdigit() or int(k) < 1:
            raise ParseError(f"bad index {k!r}", f"{ptr}/{k}")
        v = dec_int(v, f"{ptr}/{k}")
        if v < 0:
            raise ParseError("multiplicities are nonnegative", f"{ptr}/{k}")
        vals[int(k)] = v
    n = max(vals, default=0)
    return tuple(vals.get(k, 0) for k in range(1, n + 1))


def partition_from_json(d, ptr: str = "") -> Partition:
    if not isinstance(d, list):
        raise ParseError("expected an array", ptr)
    parts = [dec_int(x, f"{ptr}/{j}") for j, x in enumerate(d)]
    if any(x <= 0 for x in parts):
        raise ParseError("partition parts must be positive", ptr)
    return Partition(tuple(parts))


def datum_to_json(L: LusztigDatum) -> dict:
    return {"bottom": _sparse(L.bottom), "partition": list(L.partition.parts), "top": _sparse(L.top)}


def datum_from_json(d, ptr: str = "") -> LusztigDatum:
    _obj(d, ptr, ())
    return LusztigDatum(
        _dense(d.get("bottom", {}), f"{ptr}/bottom"),
        partition_from_json(d.get("partition", []), f"{ptr}/partition"),
        _dense(d.get("top", {}), f"{ptr}/top"),
    )


def polytope_to_json(P: MVPolytope) -> dict:
    return {"base": list(P.base), "left": datum_to_json(P.left), "right": datum_to_json(P.right)}


def polytope_from_json(d, ptr: str = "") -> MVPolytope:
    _obj(d, ptr, ("left", "right"))
    base = d.get("base", [0, 0])
    if not isinstance(base, list) or len(base) != 2:
        raise ParseError("base must be [c0, c1]", f"{ptr}/base")
    base = tuple(dec_int(x, f"{ptr}/base/{j}") for j, x in enumerate(base))
    return MVPolytope(datum_from_json(d["left"], f"{ptr}/left"), datum_from_json(d["right"], f"{ptr}/right"), base)


# bottom data, decorations, folded paths


def bottom_to_json(b: BottomData) -> dict:
    return {
        "first_index": b.first_index,
        "vertices": [enc_vec(v) for v in b.vertices],
        "multiplicities": list(b.multiplicities),
    }


def bottom_from_json(d, ptr: str = "") -> BottomData:
    _obj(d, ptr, ("first_index", "vertices", "multiplicities"))
    verts = tuple(dec_vec(v, f"{ptr}/vertices/{j}") for j, v in enumerate(d["vertices"]))
    mults = tuple(dec_int(x, f"{ptr}/multiplicities/{j}") for j, x in enumerate(d["multiplicities"]))
    return BottomData(dec_int(d["first_index"], f"{ptr}/first_index"), verts, mults)


def zigzag_to_json(z: Zigzag) -> dict:
    return {"i": z.i, "k": z.k, "interval": [enc_rat(x) for x in z.interval], "inner": [enc_rat(x) for x in z.inner]}


def decoration_to_json(lamb: Partition, lam: Partition, zigzags=()) -> dict:
    return {"left": list(lamb.parts), "right": list(lam.parts), "zigzags": [zigzag_to_json(z) for z in zigzags]}


def decoration_from_json(d, ptr: str = "") -> tuple:
    _obj(d, ptr, ("left", "right"))
    return partition_from_json(d["left"], f"{ptr}/left"), partition_from_json(d["right"], f"{ptr}/right")


def folded_to_json(eta: FoldedPath) -> dict:
    return {
        "base": path_to_json(eta.base),
        "root": root_to_json(eta.root),
        "markers": [
            {"interval": [enc_rat(a) for a in m.interval], "level": m.level, "coeff": enc_rat(m.coeff)}
            for m in eta.markers
        ],
    }


def folded_from_json(d, ptr: str = "") -> FoldedPath:
    _obj(d, ptr, ("base", "root", "markers"))
    marks = []
    for j, m in enumerate(d["markers"]):
        mp = f"{ptr}/markers/{j}"
        _obj(m, mp, ("interval", "level", "coeff"))
        iv = tuple(dec_rat(x, f"{mp}/interval/{n}") for n, x in enumerate(m["interval"]))
        marks.append(Marker(iv, dec_int(m["level"], f"{mp}/level"), dec_rat(m["coeff"], f"{mp}/coeff")))
    return FoldedPath(path_from_json(d["base"], f"{ptr}/base"), root_from_json(d["root"], f"{ptr}/root"), tuple(marks))


def loads(text: str):
    """json.loads that refuses float literals."""

    def no_float(s):
        raise ParseError(f"float literal {s} not allowed")

    try:
        return json.loads(text, parse_float=no_float)
    except json.JSONDecodeError as ex:
        raise ParseError(f"invalid JSON: {ex.msg}", f"line {ex.lineno}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
