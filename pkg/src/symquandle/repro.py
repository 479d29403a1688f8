"""Re-run every worked example and report pass/fail per item."""

from __future__ import annotations

from .chains import Variant, is_cocycle
from .diagram import build_diagram, closed_two_braid, enumerate_colorings, linking_number, mirror
from .fixtures import (
    cocycle_fixtures, link_pds, r4_antipodal, t1, t2_swap,
)
from .groups import abelianization, presentation_assoc, presentation_sym, singleton_xset
from .invariants import (
    ColoredTriplePointData, WeightTerm, check_surface_cycle, generate_fn_chain, phi,
    phi_oriented, phi_surface, triple_point_bound,
)
from .quandle import enumerate_good_involutions, make_dihedral


def _good_involutions():
    counts = {n: len(enumerate_good_involutions(make_dihedral(n))) for n in range(2, 13)}
    want = {n: 1 if n % 2 else (2 if n % 4 == 2 else 4) for n in counts}
    return counts == want, " ".join(f"R{n}:{c}" for n, c in counts.items())


def _groups():
    got = (
        str(abelianization(presentation_sym(t2_swap()))),
        str(abelianization(presentation_assoc(t2_swap().quandle))),
        str(abelianization(presentation_sym(t1()))),
    )
    return got == ("Z", "Z^2", "Z/2"), f"G_(T2,swap)={got[0]} G_T2={got[1]} G_(T1,id)={got[2]}"


def _cocycles():
    bad = [k for k, (s, a, th) in cocycle_fixtures().items() if not is_cocycle(s, a, th, Variant.Qrho)]
    return not bad, "all fixtures are cocycles" if not bad else f"not cocycles: {bad}"


def _trefoil():
    s, a, th = cocycle_fixtures()["mochizuki"]
    out = []
    for pd in (link_pds()["trefoil"], mirror(link_pds()["trefoil"])):
        d = build_diagram(pd)
        out.append(str(phi(d, s, a, th, {d.unbounded_face: 0})))
    return out == ["0:3 1:6", "0:3 2:6"], f"trefoil {out[0]} | mirror {out[1]}"


def _torus_links():
    s, a, th = cocycle_fixtures()["linking"]
    ok, parts = True, []
    for m in (1, 2, 3):
        d = build_diagram(closed_two_braid(2 * m))
        cols = enumerate_colorings(d, s, a)
        got = phi(d, s, a, th).as_dict()
        ok &= len(cols) == 16 and got == {m: 4, -m: 4, 0: 8} and linking_number(d) == m
        parts.append(f"m={m}: {phi(d, s, a, th)}")
    return ok, "; ".join(parts)


def _orientation():
    s, a, th = cocycle_fixtures()["linking"]
    d = build_diagram(link_pds()["hopf"])
    vals = {str(phi_oriented(d, s, a, th, o)) for o in ((0, 0), (0, 1), (1, 0), (1, 1))}
    vals.add(str(phi(d, s, a, th)))
    return len(vals) == 1, f"Hopf link, all orientations: {vals.pop()}"


def _surface():
    s = r4_antipodal()
    a = singleton_xset(s)
    th = cocycle_fixtures()["dihedral4"][2]
    vals = []
    for n in (1, 2, 3):
        data = generate_fn_chain(n, 0, 1)
        check_surface_cycle(data, s, a)
        vals.append((str(phi_surface(data, th, s, a)), triple_point_bound(th, data)))
    ok = vals == [("2:1", 2), ("4:1", 4), ("6:1", 6)]
    return ok, " ".join(f"F^({n}): theta={v.split(':')[0]} t(F)>={b}" for n, (v, b) in zip((1, 2, 3), vals))


def _surface_cocycles():
    fx = cocycle_fixtures()
    out = []
    for name, t in (("triple_linking", (0, 0, 2, 4)), ("mod2_triple", (0, 0, 1, 0))):
        s, a, th = fx[name]
        data = ColoredTriplePointData(((1, (WeightTerm(1, t),)),))
        out.append(str(phi_surface(data, th, s, a)))
    return out == ["1:1", "1:1"], f"(e,e1,e2,e3) on T_6: {out[0]}; (e,e1,e2,e1) on T_2 mod 2: {out[1]}"


CHECKS = [
    ("good involutions of R_n", _good_involutions),
    ("associated groups", _groups),
    ("cocycle fixtures", _cocycles),
    ("trefoil chirality", _trefoil),
    ("torus links and linking number", _torus_links),
    ("orientation independence", _orientation),
    ("surface bounds F^(n)", _surface),
    ("surface 3-cocycles", _surface_cocycles),
]


def run_all():
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # report, don't crash the suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        yield name, ok, detail
