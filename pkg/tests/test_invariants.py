from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symquandle.chains import (
    Chain, Cocycle, NotACocycle, Variant, boundary, chain_in_subgroup, evaluate,
    subcomplex_generators,
)
from symquandle.diagram import (
    add_kink, build_diagram, closed_two_braid, enumerate_colorings, linking_number, mirror,
    parse_pd, reorient,
)
from symquandle.fixtures import (
    HOPF, TREFOIL, cocycle_fixtures, dihedral4_all_primes_pattern, dihedral4_cocycle,
    link_pds, r3_identity, r4_antipodal, trivial_pairing,
)
from symquandle.groups import quandle_xset, singleton_xset
from symquandle.invariants import (
    ColoredTriplePointData, InvariantMultiset, NotACycle, PreconditionViolated, WeightTerm,
    check_surface_cycle, generate_fn_chain, homology_classes, phi, phi_oriented, phi_surface,
    surface_cycle_witness, triple_point_bound, weight_cycle, weights,
)

FIX2 = {k: v for k, v in cocycle_fixtures().items() if v[2].degree == 2}


def _chain(terms):
    return Chain(2, [(t, 1) for t in terms])


def test_multiset_formatting():
    m = InvariantMultiset.of([1, 0, 1, 2, 1])
    assert str(m) == "0:1 1:3 2:1"
    assert len(m) == 5
    assert m.as_dict() == {0: 1, 1: 3, 2: 1}


# -- weight cycles -------------------------------------------------------------

def test_trefoil_weight_chains():
    s = r3_identity()
    act = quandle_xset(s)
    d = build_diagram(parse_pd(TREFOIL))
    dm = build_diagram(mirror(parse_pd(TREFOIL)))
    chains = [weight_cycle(d, c) for c in enumerate_colorings(d, s, act, {d.unbounded_face: 0})]
    assert len(chains) == 9
    patterns = []
    for a, b in product(range(3), repeat=2):
        c = (-a - b) % 3
        patterns.append(_chain([(0, a, b), (0, b, c), (0, c, a)]))
    assert sorted(map(str, chains)) == sorted(map(str, patterns))
    mchains = [weight_cycle(dm, c) for c in enumerate_colorings(dm, s, act, {dm.unbounded_face: 0})]
    assert sorted(map(str, mchains)) == sorted(str(-p) for p in patterns)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_braid_weight_chains(m):
    s = trivial_pairing(2)
    act = singleton_xset(s)
    d = build_diagram(closed_two_braid(2 * m))
    for c in enumerate_colorings(d, s, act):
        ch = weight_cycle(d, c)
        comp_colors = [None, None]
        for e, x in enumerate(c.arc_color):
            comp_colors[d.component[e]] = x
        a, b = comp_colors
        want = Chain(2, [((0, a, b), m), ((0, b, a), m)])
        assert ch == want


def _cycle_cases():
    cases = []
    for name, (s, act, th) in cocycle_fixtures().items():
        if th.degree != 2:
            continue
        for pd_name in ("trefoil", "trefoil4", "figure8", "hopf", "hopf2"):
            cases.append((name, pd_name))
    return cases


@pytest.mark.parametrize("fixture, pd_name", _cycle_cases())
def test_weight_cycles_are_cycles(fixture, pd_name):
    s, act, _ = cocycle_fixtures()[fixture]
    d = build_diagram(link_pds()[pd_name])
    gens = subcomplex_generators(s, act, Variant.Qrho, 1)
    for c in enumerate_colorings(d, s, act):
        assert chain_in_subgroup(boundary(s, act, weight_cycle(d, c)), gens)


def test_weights_read_specified_region():
    s = r4_antipodal()
    act = quandle_xset(s)
    d = build_diagram(parse_pd(TREFOIL))
    for c in enumerate_colorings(d, s, act):
        for k, w in enumerate(weights(d, c)):
            y = c.region_color[d.corner_region[k][d.specified_quadrant(k)]]
            assert w.tuple[0] == y
            assert w.sign == d.signs[k]


# -- phi -----------------------------------------------------------------------

def test_trefoil_chirality():
    s, act, th = cocycle_fixtures()["mochizuki"]
    d = build_diagram(parse_pd(TREFOIL))
    dm = build_diagram(mirror(parse_pd(TREFOIL)))
    assert str(phi(d, s, act, th, {d.unbounded_face: 0})) == "0:3 1:6"
    assert str(phi(dm, s, act, th, {dm.unbounded_face: 0})) == "0:3 2:6"


def test_non_cocycle_rejected():
    s, act, th = cocycle_fixtures()["mochizuki"]
    bad = th.with_entry((0, 1, 2), (th((0, 1, 2)) + 1) % 3)
    d = build_diagram(parse_pd(TREFOIL))
    with pytest.raises(NotACocycle):
        phi(d, s, act, bad)


@pytest.mark.parametrize("pd", [
    parse_pd(HOPF), closed_two_braid(2), closed_two_braid(4), closed_two_braid(6),
    closed_two_braid(-2), closed_two_braid(-4), mirror(parse_pd(HOPF)),
    add_kink(parse_pd(HOPF), 1, 2), parse_pd("L 1 L 2"),
], ids=["hopf", "b2", "b4", "b6", "b-2", "b-4", "hopf-mirror", "hopf-kink", "unlink"])
def test_linking_number_formula(pd):
    s, act, th = cocycle_fixtures()["linking"]
    d = build_diagram(pd)
    lk = sum(d.signs[k] for k, cr in enumerate(d.crossings)
             if d.component[cr[0]] != d.component[cr[1]]) // 2
    assert linking_number(d) == lk
    want = InvariantMultiset.of([lk] * 4 + [-lk] * 4 + [0] * 8)
    assert phi(d, s, act, th) == want


def _all_fixture_pairs():
    for name, (s, act, th) in FIX2.items():
        yield name, s, act, th


@pytest.mark.parametrize("name", sorted(FIX2))
@pytest.mark.parametrize("pd_name", ["trefoil", "trefoil4", "figure8", "hopf", "hopf2",
                                     "unknot", "unlink2"])
def test_orientation_independence(name, pd_name):
    s, act, th = FIX2[name]
    d = build_diagram(link_pds()[pd_name])
    base = phi(d, s, act, th)
    for o in product((0, 1), repeat=d.n_components):
        assert phi_oriented(d, s, act, th, o) == base


def test_orientation_independence_with_constraint():
    s, act, th = cocycle_fixtures()["mochizuki"]
    for pd in (parse_pd(TREFOIL), mirror(parse_pd(TREFOIL))):
        d = build_diagram(pd)
        for y in range(3):
            cons = {d.unbounded_face: y}
            assert phi_oriented(d, s, act, th, (1,), cons) == phi(d, s, act, th, cons)


@pytest.mark.parametrize("a, b", [
    (parse_pd(TREFOIL), add_kink(parse_pd(TREFOIL), 1, 0)),
    (parse_pd(TREFOIL), add_kink(parse_pd(TREFOIL), 3, 1)),
    (parse_pd(TREFOIL), add_kink(parse_pd(TREFOIL), 5, 2)),
    (parse_pd(HOPF), closed_two_braid(2)),
    (parse_pd(HOPF), add_kink(parse_pd(HOPF), 3, 2)),
])
def test_phi_diagram_invariance(a, b):
    da, db = build_diagram(a), build_diagram(b)
    for name, (s, act, th) in FIX2.items():
        assert phi(da, s, act, th) == phi(db, s, act, th)


def test_unknot_phi_is_zero():
    for name, (s, act, th) in FIX2.items():
        d = build_diagram(parse_pd("L 1"))
        assert phi(d, s, act, th).as_dict() == {0: s.n * act.size}


# -- homology classes ----------------------------------------------------------

def test_homology_classes_trefoil():
    s = r3_identity()
    act = quandle_xset(s)
    d = build_diagram(parse_pd(TREFOIL))
    d4 = build_diagram(add_kink(parse_pd(TREFOIL), 1, 0))
    h = homology_classes(d, s, act)
    assert h.entries == homology_classes(d4, s, act).entries
    assert sum(m for _, m in h.entries) == 27
    u = homology_classes(build_diagram(parse_pd("L 1")), s, act)
    assert all(not any(v) for v, _ in u.entries)


def test_homology_classes_reorient():
    s = trivial_pairing(2)
    act = singleton_xset(s)
    from symquandle.chains import homology
    h = homology(s, act, Variant.Qrho, 2)
    d = build_diagram(parse_pd(HOPF))
    for flips in product((False, True), repeat=2):
        d2 = d.with_orientation(flips)
        for c in enumerate_colorings(d, s, act):
            c2 = reorient(c, d, s, flips)
            assert h.class_of(weight_cycle(d, c)) == h.class_of(weight_cycle(d2, c2))


def test_homology_classes_reorient_r4():
    s = r4_antipodal()
    act = quandle_xset(s)
    from symquandle.chains import homology
    h = homology(s, act, Variant.Qrho, 2)
    d = build_diagram(parse_pd(TREFOIL))
    d2 = d.with_orientation((True,))
    for c in enumerate_colorings(d, s, act):
        c2 = reorient(c, d, s, (True,))
        assert h.class_of(weight_cycle(d, c)) == h.class_of(weight_cycle(d2, c2))


# -- surfaces ------------------------------------------------------------------

def test_fn_chain_shape():
    data = generate_fn_chain(1, 0, 1)
    assert data.chain(0) == Chain(3, [((0, 0, 1, 0), 1), ((0, 1, 0, 1), -1)])
    assert generate_fn_chain(2, 0, 1).chain(0) == Chain(3, [((0, 0, 1, 0), 2), ((0, 1, 0, 1), -2)])
    assert sum(len(terms) for _, terms in generate_fn_chain(3, 0, 1).groups) == 6
    with pytest.raises(ValueError):
        generate_fn_chain(0, 0, 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fn_values_and_bounds(n):
    s = r4_antipodal()
    act = singleton_xset(s)
    th = dihedral4_cocycle()
    data = generate_fn_chain(n, 0, 1)
    assert check_surface_cycle(data, s, act)
    assert phi_surface(data, th, s, act).as_dict() == {2 * n: 1}
    assert triple_point_bound(th, data) == 2 * n


def test_fn_degenerate_colors():
    s = r4_antipodal()
    act = singleton_xset(s)
    data = generate_fn_chain(2, 0, 0)
    assert check_surface_cycle(data, s, act)
    assert phi_surface(data, dihedral4_cocycle(), s, act).as_dict() == {0: 1}


def test_single_term_triple_linking():
    s, act, th = cocycle_fixtures()["triple_linking"]
    data = ColoredTriplePointData(((7, (WeightTerm(1, (0, 0, 2, 4)),)),))
    assert check_surface_cycle(data, s, act)
    assert phi_surface(data, th, s, act).as_dict() == {1: 1}


def test_mod2_example():
    s, act, th = cocycle_fixtures()["mod2_triple"]
    data = ColoredTriplePointData(((1, (WeightTerm(1, (0, 0, 1, 0)),)),))
    assert phi_surface(data, th, s, act).as_dict() == {1: 1}


def _flip_first(data):
    cid, terms = data.groups[0]
    terms = (WeightTerm(-terms[0].sign, terms[0].tuple),) + terms[1:]
    return ColoredTriplePointData(((5, terms),))


def test_every_chain_is_a_cycle_over_r4_singleton():
    # with Y a point, D^Q + D^rho over (R_4, antipodal) absorbs every boundary,
    # so no corruption of F^(2) can be detected in that setting
    s = r4_antipodal()
    act = singleton_xset(s)
    for t in product(range(4), repeat=3):
        data = ColoredTriplePointData(((1, (WeightTerm(1, (0,) + t),)),))
        assert check_surface_cycle(data, s, act)
    assert check_surface_cycle(_flip_first(generate_fn_chain(2, 0, 1)), s, act)


def test_corrupted_chain_is_not_a_cycle():
    # the flip changes the chain by 2(e,x,y,x); over (R_4, antipodal) with Y = X
    # that is not absorbed by D^Q + D^rho
    s = r4_antipodal()
    act = quandle_xset(s)
    data = generate_fn_chain(2, 0, 1)
    assert check_surface_cycle(data, s, act)
    bad = _flip_first(data)
    with pytest.raises(NotACycle) as exc:
        check_surface_cycle(bad, s, act)
    assert exc.value.coloring_id == 5
    assert exc.value.residual == boundary(s, act, bad.chain(0))
    assert surface_cycle_witness(bad, s, act) is not None


def test_surface_eval_checks_cycle_first():
    s = r4_antipodal()
    act = quandle_xset(s)
    th = Cocycle(3, dihedral4_cocycle().coefficients, {})
    with pytest.raises(NotACycle):
        phi_surface(_flip_first(generate_fn_chain(2, 0, 1)), th, s, act)


def test_zero_chain():
    s = r4_antipodal()
    act = singleton_xset(s)
    data = ColoredTriplePointData(((1, ()),))
    assert phi_surface(data, dihedral4_cocycle(), s, act).as_dict() == {0: 1}
    assert triple_point_bound(dihedral4_cocycle(), data) == 0


def test_bound_preconditions():
    th = dihedral4_cocycle()
    doubled = Cocycle(3, th.coefficients, {t: 2 * v for t, v in th.table.items()})
    with pytest.raises(PreconditionViolated):
        triple_point_bound(doubled, generate_fn_chain(1, 0, 1))
    _, _, mod2 = cocycle_fixtures()["mod2_triple"]
    with pytest.raises(PreconditionViolated):
        triple_point_bound(mod2, generate_fn_chain(1, 0, 1))


def test_printed_sign_pattern_is_rejected():
    s = r4_antipodal()
    act = singleton_xset(s)
    with pytest.raises(NotACocycle):
        phi_surface(generate_fn_chain(1, 0, 1), dihedral4_all_primes_pattern(), s, act)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.sampled_from([(0, 1), (1, 0), (0, 3), (2, 1), (2, 3), (3, 2)]))
def test_fn_property(n, xy):
    # F^(n) colored by any pair of distinct e1/e2 classes is a cycle with value +-2n
    s = r4_antipodal()
    act = singleton_xset(s)
    data = generate_fn_chain(n, *xy)
    assert check_surface_cycle(data, s, act)
    (value, _), = phi_surface(data, dihedral4_cocycle(), s, act).entries
    assert abs(value) == 2 * n
    assert evaluate(dihedral4_cocycle(), data.chain(0)) == value
