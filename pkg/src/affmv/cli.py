"""Command line front end.

Exit codes: 0 success, 2 validation failure or rejected input, 3 parse
error, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import random
import re
import sys

from . import io
from .decorations import decorate, find_zigzags
from .errors import AffmvError, ParseError, TheoremViolation, ValidationFailure
from .mvpoly import enumerate_mv, reconstruct_from_path, validate
from .paths import AFFINE, e, f, format_fword, generate_crystal, lowering_sequence_to_fword, straight_path
from .svg import render_svg
from .treefold import random_coeffs, retract_step, stable_sections
from .upsilon import upsilon_prime

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_INTERNAL = 0, 2, 3, 4

_ELEMENT = re.compile(r"^(?P<word>.*?)@\s*Lambda\s*=\s*\[(?P<lam>[^\]]*)\]\s*$")
_OP = re.compile(r"^([ef])(\d+)(?:\^(\d+))?$")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def parse_vector(text: str, ptr: str = "") -> tuple:
    parts = [p for p in re.split(r"[,\s]+", text.strip().strip("[]")) if p]
    return tuple(io.dec_rat(p, ptr) for p in parts)


def parse_ops(text: str) -> list:
    """'f1^3 e0' -> [('f', 1, 3), ('e', 0, 1)] in written order."""
    out = []
    for tok in text.replace("*", " ").split():
        m = _OP.match(tok)
        if not m or int(m.group(2)) not in AFFINE.index_set:
            raise ParseError(f"bad operator token {tok!r}")
        k = int(m.group(3) or 1)
        if k <= 0:
            raise ParseError(f"exponent must be positive in {tok!r}")
        out.append((m.group(1), int(m.group(2)), k))
    return out


def apply_ops(path, ops):
    for kind, i, k in reversed(ops):
        path = (f if kind == "f" else e)(path, i, k)
        if path is None:
            raise ValidationFailure(f"operator {kind}{i}^{k} is undefined on this path")
    return path


def parse_element(text: str):
    """'f1^3 f0^2 @ Lambda=[a,b,c]' -> path."""
    m = _ELEMENT.match(text.strip())
    if not m:
        raise ParseError(f"element must look like 'f1^3 f0^2 @ Lambda=[a,b,c]', got {text!r}")
    lam = parse_vector(m.group("lam"), "Lambda")
    if len(lam) != 3:
        raise ParseError("Lambda needs three coordinates")
    return apply_ops(straight_path(lam), parse_ops(m.group("word")))


def _read_json(name: str):
    try:
        with open(name, encoding="utf-8") as fh:
            return io.loads(fh.read())
    except OSError as ex:
        raise ParseError(f"cannot read {name}: {ex.strerror}") from None


def load_element(args):
    if getattr(args, "element", None):
        return parse_element(args.element)
    if getattr(args, "path", None):
        return io.path_from_json(_read_json(args.path))
    raise ParseError("give --element or --path")


def load_polytope(args):
    if getattr(args, "datum", None):
        return io.polytope_from_json(_read_json(args.datum))
    return reconstruct_from_path(load_element(args))


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _weight(text: str) -> tuple:
    v = parse_vector(text, "weight")
    if len(v) == 1 and v[0] == 0:
        return (0, 0)
    if len(v) != 2 or any(x.denominator != 1 for x in v):
        raise ParseError("weight must be 0 or c0,c1 with integer entries")
    return (int(v[0]), int(v[1]))


# commands


def cmd_crystal_gen(args):
    shape = parse_vector(args.shape, "shape")
    C = generate_crystal(shape, args.depth)
    items = [
        {"depth": d, "word": format_fword(lowering_sequence_to_fword(C.word(p))), "path": io.path_to_json(p)}
        for d in range(args.depth + 1)
        for p in C.elements(d)
    ]
    _emit(args, io.dumps({"shape": io.enc_vec(C.shape), "depth": args.depth, "elements": items}) + "\n")
    return EXIT_OK


def cmd_path_apply(args):
    p = apply_ops(load_element(args), parse_ops(args.op))
    _emit(args, io.dumps(io.path_to_json(p)) + "\n")
    return EXIT_OK


def cmd_polytope_from_path(args):
    P = reconstruct_from_path(load_element(args))
    _emit(args, io.dumps(io.polytope_to_json(P)) + "\n")
    return EXIT_OK


def cmd_polytope_validate(args):
    rep = validate(load_polytope(args))
    _emit(args, io.dumps(rep.summary()) + "\n")
    return EXIT_OK if rep.ok else EXIT_INVALID


def cmd_polytope_enumerate(args):
    polys = enumerate_mv(_weight(args.weight), args.bound)
    _emit(args, io.dumps([io.polytope_to_json(P) for P in polys]) + "\n")
    return EXIT_OK


def cmd_decorate(args):
    path = load_element(args)
    lamb, lam = decorate(path)
    zz = find_zigzags(path, 0) + find_zigzags(path, 1)
    _emit(args, io.dumps(io.decoration_to_json(lamb, lam, zz)) + "\n")
    return EXIT_OK


def cmd_retract_step(args):
    path = load_element(args)
    word = tuple(int(x) for x in parse_vector(args.word, "word")) if args.word else ()
    if args.coeffs is not None:
        coeffs = list(parse_vector(args.coeffs, "coeffs"))
    else:
        n = len(stable_sections(path, word, args.index))
        coeffs = random_coeffs(n, random.Random(args.seed))
    result, generic = retract_step(path, word, args.index, coeffs)
    target = upsilon_prime(path, word + (args.index,))
    if generic and result != target:
        raise TheoremViolation("generic coefficients did not reproduce Upsilon'")
    out = {
        "coeffs": [io.enc_rat(c) for c in coeffs],
        "generic": generic,
        "matches_upsilon": result == target,
        "result": io.path_to_json(result),
    }
    _emit(args, io.dumps(out) + "\n")
    return EXIT_OK


def cmd_render_svg(args):
    P = load_polytope(args)
    rep = validate(P)
    if not rep.ok:
        raise ValidationFailure(f"not an MV polytope: {rep.messages}")
    _emit(args, render_svg(P))
    return EXIT_OK


def _element_args(p, datum=False):
    p.add_argument("--element", help="'f1^3 f0^2 @ Lambda=[a,b,c]'")
    p.add_argument("--path", help="path JSON file")
    if datum:
        p.add_argument("--datum", help="polytope JSON file")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="affmv", description="Affine sl2 MV polytopes from Littelmann paths.")
    ap.add_argument("--out", help="write output to this file instead of stdout")
    sub = ap.add_subparsers(dest="group", required=True, parser_class=_Parser)

    cr = sub.add_parser("crystal").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    g = cr.add_parser("gen")
    g.add_argument("--shape", required=True)
    g.add_argument("--depth", type=int, required=True)
    g.set_defaults(fn=cmd_crystal_gen)

    pa = sub.add_parser("path").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    g = pa.add_parser("apply")
    _element_args(g)
    g.add_argument("--op", required=True, help="operator word such as 'e1 f0^2'")
    g.set_defaults(fn=cmd_path_apply)

    po = sub.add_parser("polytope").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    g = po.add_parser("from-path")
    _element_args(g)
    g.set_defaults(fn=cmd_polytope_from_path)
    g = po.add_parser("validate")
    _element_args(g, datum=True)
    g.set_defaults(fn=cmd_polytope_validate)
    g = po.add_parser("enumerate")
    g.add_argument("--weight", required=True, help="0 or c0,c1")
    g.add_argument("--bound", type=int, default=None)
    g.set_defaults(fn=cmd_polytope_enumerate)

    g = sub.add_parser("decorate")
    _element_args(g)
    g.set_defaults(fn=cmd_decorate)

    re_ = sub.add_parser("retract").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    g = re_.add_parser("step")
    _element_args(g)
    g.add_argument("--word", default="", help="comma separated indices")
    g.add_argument("--index", type=int, required=True)
    grp = g.add_mutually_exclusive_group()
    grp.add_argument("--seed", type=int, default=0)
    grp.add_argument("--coeffs", help="comma separated rationals")
    g.set_defaults(fn=cmd_retract_step)

    rs = sub.add_parser("render").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    g = rs.add_parser("svg")
    _element_args(g, datum=True)
    g.set_defaults(fn=cmd_render_svg)
    return ap


def _normalize(argv):
    # let --out appear anywhere on the line
    argv = list(argv)
    out = []
    j = 0
    lead = []
    while j < len(argv):
        if argv[j] == "--out" and j + 1 < len(argv):
            lead += argv[j : j + 2]
            j += 2
        elif argv[j].startswith("--out="):
            lead.append(argv[j])
            j += 1
        else:
            out.append(argv[j])
            j += 1
    return lead + out


def run(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(_normalize(argv))
        return args.fn(args)
    except ParseError as ex:
        print(f"parse error: {ex}", file=sys.stderr)
        return EXIT_PARSE
    except TheoremViolation as ex:
        print(f"internal check failed: {ex}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValidationFailure, AffmvError, ValueError) as ex:
        print(f"invalid: {ex}", file=sys.stderr)
        return EXIT_INVALID


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
