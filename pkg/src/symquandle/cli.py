"""Command-line front end.

Exit codes: 0 success, 1 usage or I/O error, 2 mathematical validation failure.
A file argument of the form ``@name`` refers to a bundled data file.
"""

from __future__ import annotations

import argparse
import sys

from . import formats
from .chains import (
    ChainError, Coefficients, NotACocycle, Variant, cocycle_violation, homology,
)
from .diagram import (
    LabelCountError, PDError, PDSyntaxError, build_diagram, enumerate_colorings, parse_pd,
)
from .fixtures import r4_antipodal, read_data
from .groups import (
    XSetError, abelianization, presentation_assoc, presentation_sym, quandle_xset,
    singleton_xset,
)
from .invariants import (
    NotACycle, PreconditionViolated, check_surface_cycle, generate_fn_chain,
    homology_classes, phi, phi_oriented, phi_surface, triple_point_bound,
)
from .quandle import (
    QuandleError, antipodal, enumerate_good_involutions, half_antipodal, identity_map,
    make_dihedral, make_double_cover, make_symmetric, make_trivial, make_conjugation,
    symmetric_group, cyclic_group,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    if path.startswith("@"):
        return read_data(path[1:])
    with open(path) as fh:
        return fh.read()


def _quandle(path):
    return formats.parse_quandle(_read(path))


def _xset(spec, s):
    if spec in (None, "singleton"):
        return singleton_xset(s)
    if spec == "X":
        return quandle_xset(s)
    return formats.parse_xset(_read(spec), s)


def _rho_spec(spec, n):
    if spec in (None, "identity"):
        return identity_map(n)
    if spec == "antipodal":
        return antipodal(n)
    if spec in ("half-even", "half-odd"):
        return half_antipodal(n, 0 if spec == "half-even" else 1)
    try:
        return tuple(int(v) for v in spec.split(","))
    except ValueError:
        raise UsageError(f"bad --rho {spec!r}") from None


# -- subcommands -------------------------------------------------------------

def cmd_quandle(args):
    if args.action == "check":
        s = _quandle(args.file)
        print(f"OK quandle of order {s.n}, good involution {' '.join(map(str, s.rho))}")
    elif args.action == "make-trivial":
        print(formats.write_quandle(make_symmetric(make_trivial(args.n), _rho_spec(args.rho, args.n))), end="")
    elif args.action == "make-dihedral":
        q = make_dihedral(args.n)
        print(formats.write_quandle(make_symmetric(q, _rho_spec(args.rho, args.n))), end="")
    elif args.action == "make-conj":
        kind, _, k = args.group.partition(":")
        if kind not in ("cyclic", "sym") or not k.isdigit():
            raise UsageError("--group must be cyclic:<n> or sym:<k>")
        g = cyclic_group(int(k)) if kind == "cyclic" else symmetric_group(int(k))
        print(formats.write_quandle(make_conjugation(g)), end="")
    elif args.action == "double-cover":
        print(formats.write_quandle(make_double_cover(_quandle(args.file).quandle)), end="")
    elif args.action == "involutions":
        s = _quandle(args.file)
        found = enumerate_good_involutions(s.quandle, cap=args.cap)
        for rho in found:
            print(" ".join(map(str, rho)))
        print(f"# {len(found)} good involutions")
    return 0


def cmd_group(args):
    s = _quandle(args.file)
    p = presentation_sym(s) if args.sym else presentation_assoc(s.quandle)
    if args.action == "present":
        print(formats.write_presentation(p), end="")
    else:
        print(abelianization(p))
    return 0


def cmd_homology(args):
    s = _quandle(args.quandle)
    act = _xset(args.xset, s)
    h = homology(s, act, Variant(args.variant), args.degree, Coefficients.parse(args.coeff))
    print(f"H_{args.degree}^{args.variant} = {h.group}")
    return 0


def cmd_cocycle(args):
    s = _quandle(args.quandle)
    act = _xset(args.xset, s)
    theta = formats.parse_cocycle(_read(args.file), s, act)
    variant = Variant(args.variant) if args.variant else theta.variant
    bad = cocycle_violation(s, act, theta, variant)
    if bad is not None:
        print(f"FAIL {bad}")
        return 2
    print("OK")
    return 0


def _diagram(args):
    pd = parse_pd(_read(args.pd))
    face = None if args.unbounded_face in (None, "auto") else int(args.unbounded_face)
    return build_diagram(pd, face)


def _constraints(args, d):
    out = {}
    if getattr(args, "base_color", None) is not None:
        out[d.unbounded_face] = args.base_color
    for c in getattr(args, "constraint", None) or []:
        f, _, y = c.partition("=")
        try:
            out[int(f)] = int(y)
        except ValueError:
            raise UsageError(f"bad --constraint {c!r}, expected face=y") from None
    return out


def _resolve_y(args, act):
    if getattr(args, "base_color", None) is not None:
        args.base_color = act.index(args.base_color)


def cmd_color(args):
    s = _quandle(args.quandle)
    act = _xset(args.xset, s)
    _resolve_y(args, act)
    d = _diagram(args)
    cols = enumerate_colorings(d, s, act, _constraints(args, d))
    if args.list:
        for c in cols:
            arcs = " ".join(s.quandle.label(x) for x in c.arc_color)
            regions = " ".join(act.label(y) for y in c.region_color)
            print(f"arcs {arcs} | regions {regions}")
    print(f"{len(cols)} colorings")
    return 0


def cmd_invariant(args):
    s = _quandle(args.quandle)
    act = _xset(args.xset, s)
    _resolve_y(args, act)
    d = _diagram(args)
    cons = _constraints(args, d)
    if args.classes:
        print(homology_classes(d, s, act, cons))
        return 0
    theta = formats.parse_cocycle(_read(args.cocycle), s, act)
    if args.orientation:
        flips = tuple(ch == "1" for ch in args.orientation)
        print(phi_oriented(d, s, act, theta, flips, cons))
    else:
        print(phi(d, s, act, theta, cons))
    return 0


def cmd_surface(args):
    if args.quandle:
        s = _quandle(args.quandle)
    else:
        s = r4_antipodal()
    act = _xset(args.xset, s)
    if args.action == "fn":
        x, y = s.quandle.index(args.x), s.quandle.index(args.y)
        print(formats.write_surface(generate_fn_chain(args.n, x, y), s, act), end="")
        return 0
    data = formats.parse_surface(_read(args.chain), s, act)
    if args.action == "check":
        check_surface_cycle(data, s, act)
        print("OK")
        return 0
    theta = formats.parse_cocycle(_read(args.cocycle), s, act)
    if args.action == "eval":
        result = phi_surface(data, theta, s, act)
        # a single coloring group prints as its bare value
        print(result.entries[0][0] if len(data.groups) == 1 else result)
    else:
        check_surface_cycle(data, s, act)
        print(f"t(F) >= {triple_point_bound(theta, data)}")
    return 0


def cmd_repro(args):
    from .repro import run_all

    ok = True
    for name, passed, detail in run_all():
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
    return 0 if ok else 2


# -- parser ------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="symquandle", description="Symmetric quandle cocycle invariants.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("quandle", help="check or construct quandles")
    qs = q.add_subparsers(dest="action", required=True, parser_class=_Parser)
    qs.add_parser("check").add_argument("file")
    for name in ("make-trivial", "make-dihedral"):
        m = qs.add_parser(name)
        m.add_argument("n", type=int)
        m.add_argument("--rho", help="identity, antipodal, half-even, half-odd or a comma list")
    qs.add_parser("make-conj").add_argument("--group", required=True, help="cyclic:<n> or sym:<k>")
    qs.add_parser("double-cover").add_argument("file")
    inv = qs.add_parser("involutions")
    inv.add_argument("file")
    inv.add_argument("--cap", type=int, default=12)
    q.set_defaults(func=cmd_quandle)

    g = sub.add_parser("group", help="associated group presentations")
    g.add_argument("action", choices=["present", "abelianize"])
    g.add_argument("file")
    g.add_argument("--sym", action="store_true", help="use G_(X,rho) instead of G_X")
    g.set_defaults(func=cmd_group)

    def data_args(sp):
        sp.add_argument("--quandle", required=True)
        sp.add_argument("--xset", default="singleton", help="singleton, X, or an xset file")

    h = sub.add_parser("homology", help="homology groups")
    data_args(h)
    h.add_argument("--variant", default="Qrho", choices=[v.value for v in Variant])
    h.add_argument("--degree", type=int, required=True)
    h.add_argument("--coeff", default="Z")
    h.set_defaults(func=cmd_homology)

    c = sub.add_parser("cocycle", help="cocycle condition check")
    c.add_argument("action", choices=["check"])
    c.add_argument("file")
    data_args(c)
    c.add_argument("--variant", choices=[v.value for v in Variant])
    c.set_defaults(func=cmd_cocycle)

    def diagram_args(sp):
        sp.add_argument("--pd", required=True)
        sp.add_argument("--unbounded-face", default="auto")
        sp.add_argument("--base-color", help="Y color of the unbounded region")
        sp.add_argument("--constraint", action="append", help="face=y (repeatable)")

    col = sub.add_parser("color", help="enumerate colorings")
    data_args(col)
    diagram_args(col)
    col.add_argument("--list", action="store_true")
    col.set_defaults(func=cmd_color)

    iv = sub.add_parser("invariant", help="cocycle invariant of a link diagram")
    data_args(iv)
    diagram_args(iv)
    iv.add_argument("--cocycle")
    iv.add_argument("--orientation", help="per-component reversal mask, e.g. 01")
    iv.add_argument("--classes", action="store_true", help="print homology classes instead")
    iv.set_defaults(func=cmd_invariant)

    sf = sub.add_parser("surface", help="colored triple point data")
    sf.add_argument("action", choices=["fn", "check", "eval", "bound"])
    sf.add_argument("--quandle", help="default: R_4 with antipodal rho")
    sf.add_argument("--xset", default="singleton")
    sf.add_argument("--chain", default="-", help="surface data file (default stdin)")
    sf.add_argument("--cocycle")
    sf.add_argument("--n", type=int, default=1)
    sf.add_argument("--x", default="e1")
    sf.add_argument("--y", default="e2")
    sf.set_defaults(func=cmd_surface)

    r = sub.add_parser("repro", help="re-run every worked example")
    r.set_defaults(func=cmd_repro)
    return p


_USAGE_ERRORS = (UsageError, OSError, formats.FormatError, PDSyntaxError, LabelCountError)
_MATH_ERRORS = (QuandleError, XSetError, NotACocycle, NotACycle, PreconditionViolated,
                PDError, ChainError)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "invariant" and not args.classes and not args.cocycle:
        parser.error("invariant needs --cocycle (or --classes)")
    if args.command == "surface" and args.action in ("eval", "bound") and not args.cocycle:
        parser.error(f"surface {args.action} needs --cocycle")
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _MATH_ERRORS as exc:
        print(f"FAIL {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
