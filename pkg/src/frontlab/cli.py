"""Command line interface: `frontlab <command> ...`.

Structured output goes to stdout as JSON, diagnostics to stderr.  Exit
codes: 0 ok, 1 domain failure, 2 parse error, 3 I/O or internal error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from . import fixtures as fx
from .algebra import parse_laurent
from .arrangement import CORNER_RULE, CORNER_RULES
from .front import (LEFT, SIDES, SPLIT_LABELING, SPLIT_LABELINGS, FrontParseError,
                    InvalidFrontError, check, cusp_data, double_points, format_rational,
                    from_dict, index, parse, serialize, validate)
from .invariants import (analyze, bennequin, check_split_identities, l_f_plane, lq,
                         s_lambda, sk_polynomial, to_lq, to_s)
from .orbifold import ConeOnFrontError
from .orbifold import report as orbifold_report
from .shadow import render_svg, shadow_of_front
from .shadow import dump as shadow_dump
from .verify import SUITES, run_suite

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_IO = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def default_seed() -> int:
    raw = os.environ.get("FRONTLAB_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"FRONTLAB_SEED is not an integer: {raw!r}", EXIT_IO) from None


def read_front(path: str):
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from None
    if data.lstrip().startswith(b"{"):
        try:
            return from_dict(json.loads(data))
        except json.JSONDecodeError as exc:
            raise FrontParseError(exc.msg, exc.lineno, exc.colno) from None
    return parse(data)


def emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _violations(report):
    return [{"code": v.code, "message": v.message, "where": list(v.where)}
            for v in report.violations]


# -- commands -----------------------------------------------------------------


def cmd_validate(args):
    front = read_front(args.path)
    rep = validate(front, relaxed=args.relaxed)
    emit({"ok": rep.ok, "violations": _violations(rep)})
    return EXIT_OK if rep.ok else EXIT_DOMAIN


def _valid_front(args):
    front = read_front(args.path)
    check(front)
    return front


def cmd_info(args):
    front = _valid_front(args)
    cd = cusp_data(front)
    shadow = shadow_of_front(front)
    emit({
        "vertices": len(front.vertices),
        "ind": index(front),
        "cusps": [{"vertex": c.vertex, "sign": c.sign} for c in cd.cusps],
        "C_plus": format_rational(cd.c_plus),
        "C_minus": format_rational(cd.c_minus),
        "double_points": [
            {"id": dp.id, "x": format_rational(dp.location[0]), "y": format_rational(dp.location[1]),
             "edges": [dp.edge_a, dp.edge_b], "epsilon": dp.epsilon}
            for dp in double_points(front)
        ],
        "regions": shadow_dump(shadow)["regions"],
        "cones": [{"x": format_rational(c.x), "y": format_rational(c.y), "mu": c.mu}
                  for c in front.cones],
    })
    return EXIT_OK


def cmd_shadow(args):
    front = _valid_front(args)
    shadow = shadow_of_front(front, args.corner_rule, args.dev_tamper_gleam)
    try:
        out = shadow_dump(shadow)
    except ArithmeticError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    if args.svg:
        try:
            Path(args.svg).write_text(render_svg(shadow))
        except OSError as exc:
            raise CliError(f"cannot write {args.svg}: {exc.strerror}", EXIT_IO) from None
        out["svg"] = args.svg
    emit(out)
    return EXIT_OK if out["parity"] else EXIT_DOMAIN


def cmd_inv(args):
    front = _valid_front(args)
    a = analyze(front, args.labeling)
    which = args.which
    out = {"ind": a.h, "C_plus": format_rational(a.c_plus), "C_minus": format_rational(a.c_minus)}
    if which in ("all", "l"):
        out["l"] = bennequin(a)
    if which in ("all", "lq"):
        v = lq(a)
        out["l_q"] = v.to_json()
        out["l_q_text"] = str(v)
    if which in ("all", "s"):
        v = s_lambda(a)
        out["S_lambda"] = v.to_json()
        out["S_lambda_text"] = str(v)
    if which in ("all", "lf"):
        out["l_F"] = format_rational(l_f_plane(a))
    if which in ("all", "sk"):
        v = sk_polynomial(a)
        out["S_prime_K"] = [[e, int(c)] for e, c in v.terms()]
        out["S_prime_K_text"] = str(v)
    ident = check_split_identities(a)
    out["identities"] = "pass" if ident.ok else "fail"
    if not ident.ok:
        out["identity_failures"] = list(ident.failures)
    emit(out)
    return EXIT_OK if ident.ok else EXIT_DOMAIN


def cmd_convert(args):
    text = args.polynomial
    if text is None or text == "-":
        text = sys.stdin.read().strip()
    try:
        if args.to_lq:
            result = to_lq(parse_laurent(text, "f"), args.h)
        else:
            result = to_s(parse_laurent(text, "q"), args.h)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    sys.stdout.write(str(result) + "\n")
    return EXIT_OK


def cmd_orbifold(args):
    front = _valid_front(args)
    try:
        out = orbifold_report(front, args.labeling)
    except ConeOnFrontError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    if not front.cones:
        out["note"] = "no cone points: the plane invariant in the group ring of Z"
    emit(out)
    return EXIT_OK


# short names for the families that come in two mirror versions
FIXTURE_ALIASES = {"cusp_birth": "cusp_birth_left"}

FIXTURE_NAMES = ("circle", "saucer", "eight", "sk_example", "lens", "random", "corpus",
                 "wall", "cone_passage") + tuple(fx.FAMILIES) + tuple(FIXTURE_ALIASES)


def _write_fronts(named, out_dir):
    if out_dir is None:
        if len(named) == 1:
            sys.stdout.write(serialize(named[0][1]))
        else:
            emit({name: serialize(f) for name, f in named})
        return
    d = Path(out_dir)
    try:
        d.mkdir(parents=True, exist_ok=True)
        for name, f in named:
            (d / f"{name}.front").write_text(serialize(f))
    except OSError as exc:
        raise CliError(f"cannot write to {out_dir}: {exc.strerror}", EXIT_IO) from None
    emit({"written": [str(d / f"{name}.front") for name, _ in named]})


def cmd_fixtures(args):
    name, p = FIXTURE_ALIASES.get(args.name, args.name), args.params
    seed = args.seed if args.seed is not None else default_seed()

    def ints(k):
        if len(p) < k:
            raise CliError(f"fixture {name} needs {k} integer parameter(s)", EXIT_DOMAIN)
        try:
            return [int(x) for x in p[:k]]
        except ValueError:
            raise CliError(f"fixture parameters must be integers: {p}", EXIT_DOMAIN) from None

    if name == "circle":
        named = [("circle", fx.circle())]
    elif name == "saucer":
        named = [("saucer", fx.saucer())]
    elif name == "eight":
        named = [("eight", fx.eight())]
    elif name == "sk_example":
        named = [("sk_example", fx.sk_example())]
    elif name == "lens":
        vals = ints(min(len(p), 2))
        k = vals[0] if vals else 1
        mu = vals[1] if len(vals) > 1 else 2
        named = [(f"lens_{k}_{mu}", fx.lens(k, mu))]
    elif name == "random":
        corpus = fx.corpus(seed, args.instance + 1, include_named=False)
        named = [corpus[args.instance]]
    elif name == "corpus":
        named = fx.corpus(seed, args.count)
    elif name == "wall":
        w = fx.wall_pair(seed, args.instance)
        named = [("wall_before", w.before), ("wall_after", w.after)]
        sys.stderr.write(f"loop indices: {w.loop_indices[0]} {w.loop_indices[1]}\n")
    elif name == "cone_passage":
        mu = ints(1)[0] if p else 3
        c = fx.cone_pair(mu, args.reverse, args.side, seed)
        named = [(f"cone_{mu}_before", c.before), (f"cone_{mu}_after", c.after)]
    elif name in fx.FAMILIES:
        pair = fx.move_pair(name, seed, args.instance)
        named = [(f"{name}_before", pair.before), (f"{name}_after", pair.after)]
    else:
        raise CliError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}", EXIT_DOMAIN)
    _write_fronts(named, args.out)
    return EXIT_OK


def cmd_verify(args):
    seed = args.seed if args.seed is not None else default_seed()
    reports = run_suite(args.suite, seed, args.count, args.dev_tamper_gleam)
    ok = all(r.ok for r in reports)
    for r in reports:
        for f in r.failures:
            sys.stderr.write(f"FAIL {r.name}: {f.case}: {f.message}\n  repro: {f.repro}\n")
    emit({"suite": args.suite, "seed": seed, "ok": ok, "reports": [r.to_dict() for r in reports]})
    return EXIT_OK if ok else EXIT_DOMAIN


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="frontlab", description="Invariants of cooriented wave fronts.")
    ap.add_argument("--version", action="version", version=f"frontlab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a front")
    p.add_argument("path")
    p.add_argument("--relaxed", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="index, cusps, double points and regions")
    p.add_argument("path")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("shadow", help="gleams of the shadow")
    p.add_argument("path")
    p.add_argument("--svg", metavar="OUT")
    p.add_argument("--corner-rule", choices=CORNER_RULES, default=CORNER_RULE)
    p.add_argument("--dev-tamper-gleam", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("inv", help="plane invariants")
    p.add_argument("path")
    p.add_argument("--which", choices=("all", "l", "lq", "s", "lf", "sk"), default="all")
    p.add_argument("--labeling", choices=SPLIT_LABELINGS, default=SPLIT_LABELING)
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("convert", help="convert between S(lambda) and l_q")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-lq", action="store_true")
    g.add_argument("--to-s", action="store_true")
    p.add_argument("polynomial", nargs="?")
    p.add_argument("--h", type=int, required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("orbifold", help="S(lambda) over an orbifold disk")
    p.add_argument("path")
    p.add_argument("--labeling", choices=SPLIT_LABELINGS, default=SPLIT_LABELING)
    p.set_defaults(func=cmd_orbifold)

    p = sub.add_parser("fixtures", help="emit fixture fronts")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int)
    p.add_argument("--instance", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--side", choices=SIDES, default=LEFT)
    p.add_argument("--reverse", action="store_true")
    p.add_argument("--out", metavar="DIR")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--dev-tamper-gleam", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except FrontParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except InvalidFrontError as exc:
        sys.stderr.write(f"invalid front: {exc}\n")
        return EXIT_DOMAIN
    except BrokenPipeError:
        return EXIT_IO
    except Exception as exc:  # last resort: report, do not dump a traceback
        sys.stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
