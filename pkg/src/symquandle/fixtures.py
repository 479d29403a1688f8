"""Named symmetric quandles, cocycles and diagrams used by the examples.

Everything here is built directly from its defining formula; the bundled
data files under ``data/`` are serializations of the same objects.
"""

from __future__ import annotations

from importlib import resources

from .chains import Cocycle, Coefficients, Z
from .diagram import add_kink, closed_two_braid, parse_pd
from .groups import quandle_xset, singleton_xset
from .quandle import (
    antipodal, identity_map, make_dihedral, make_symmetric, make_trivial, validate_quandle,
)

# right-handed trefoil; equal to the closure of sigma_1^3
TREFOIL = "X[4,2,5,1] X[6,4,1,3] X[2,6,3,5]"
HOPF = "X[1,3,2,4] X[3,1,4,2]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
UNKNOT = "L 1"
UNLINK2 = "L 1 L 2"


def data_path(name):
    return resources.files("symquandle") / "data" / name


def read_data(name):
    return data_path(name).read_text()


def _relabel(q, labels):
    return validate_quandle(q.op, labels)


def r3_identity():
    return make_symmetric(make_dihedral(3), identity_map(3))


def r4_antipodal():
    """R_4 with 0, 1, 2, 3 named e1, e2, e1', e2'."""
    return make_symmetric(_relabel(make_dihedral(4), ["e1", "e2", "e1'", "e2'"]), antipodal(4))


def trivial_pairing(k):
    """T_{2k} on e1, e1', e2, e2', ... with rho(ei) = ei'."""
    labels = []
    for i in range(1, k + 1):
        labels += [f"e{i}", f"e{i}'"]
    rho = []
    for i in range(k):
        rho += [2 * i + 1, 2 * i]
    return make_symmetric(_relabel(make_trivial(2 * k), labels), rho)


def t2_identity():
    return make_symmetric(_relabel(make_trivial(2), ["e1", "e2"]), identity_map(2))


def t2_swap():
    return make_symmetric(make_trivial(2), (1, 0))


def t1():
    return make_symmetric(make_trivial(1), (0,))


def mochizuki():
    """(x - y)(y - z)^2 z over Z/3 on R_3 with Y = X."""
    table = {(x, y, z): (x - y) * (y - z) ** 2 * z
             for x in range(3) for y in range(3) for z in range(3)}
    return Cocycle(2, Coefficients(3), table)


def _chi_sum(degree, coeff, signed):
    table = {}
    for sign, t in signed:
        key = (0,) + tuple(t)
        table[key] = table.get(key, 0) + sign
    return Cocycle(degree, coeff, table)


# indices in trivial_pairing: ei -> 2(i-1), ei' -> 2(i-1)+1
def _e(i, prime=False):
    return 2 * (i - 1) + int(prime)


def linking_cocycle():
    """Two-component linking cocycle on T_4 with the pairing involution."""
    e1, e1p, e2, e2p = _e(1), _e(1, True), _e(2), _e(2, True)
    return _chi_sum(2, Z, [
        (1, (e1, e2)), (1, (e1p, e2p)), (-1, (e1p, e2)), (-1, (e1, e2p)),
    ])


def triple_linking_cocycle():
    """Triple linking 3-cocycle on T_6 with the pairing involution."""
    a, ap, b, bp, c, cp = (_e(1), _e(1, True), _e(2), _e(2, True), _e(3), _e(3, True))
    return _chi_sum(3, Z, [
        (1, (a, b, c)), (1, (ap, bp, c)), (1, (ap, b, cp)), (1, (a, bp, cp)),
        (-1, (ap, b, c)), (-1, (a, bp, c)), (-1, (a, b, cp)), (-1, (ap, bp, cp)),
    ])


def mod2_triple_cocycle():
    """chi(e, e1, e2, e1) over Z/2 on T_2 with rho = id."""
    return _chi_sum(3, Coefficients(2), [(1, (0, 1, 0))])


def _dihedral4_terms(prime_weight):
    # terms chi(e, x, y, x') with x, x' in {e1, e1'}, y in {e2, e2'} and the
    # mirror block with e1 and e2 swapped; the sign is the block sign times
    # (-1)^(number of primed entries counted by prime_weight)
    e = {"1": 0, "2": 1, "1'": 2, "2'": 3}
    out = []
    for block, (a, b) in ((1, ("1", "2")), (-1, ("2", "1"))):
        for p1 in (0, 1):
            for p2 in (0, 1):
                for p3 in (0, 1):
                    t = (e[a + "'" * p1], e[b + "'" * p2], e[a + "'" * p3])
                    parity = sum(w * p for w, p in zip(prime_weight, (p1, p2, p3)))
                    out.append((block * (-1) ** parity, t))
    return out


def dihedral4_cocycle():
    """The 16-term 3-cocycle on R_4 with the antipodal map.

    e2 and e2' act identically on R_4, so the sign of a term can only depend
    on whether the outer entries are primed.
    """
    return _chi_sum(3, Z, _dihedral4_terms((1, 0, 1)))


def dihedral4_all_primes_pattern():
    """Same support, sign counting all three primes; this is not a cocycle."""
    return _chi_sum(3, Z, _dihedral4_terms((1, 1, 1)))


def cocycle_fixtures():
    """name -> (symmetric quandle, X-set, cocycle)."""
    r3 = r3_identity()
    t4, t6, t2 = trivial_pairing(2), trivial_pairing(3), t2_identity()
    r4 = r4_antipodal()
    return {
        "mochizuki": (r3, quandle_xset(r3), mochizuki()),
        "linking": (t4, singleton_xset(t4), linking_cocycle()),
        "triple_linking": (t6, singleton_xset(t6), triple_linking_cocycle()),
        "mod2_triple": (t2, singleton_xset(t2), mod2_triple_cocycle()),
        "dihedral4": (r4, singleton_xset(r4), dihedral4_cocycle()),
    }


def link_pds():
    """name -> PD code for the bundled classical diagrams."""
    trefoil = parse_pd(TREFOIL)
    return {
        "trefoil": trefoil,
        "trefoil4": add_kink(trefoil, 1, 0),
        "figure8": parse_pd(FIGURE_EIGHT),
        "hopf": parse_pd(HOPF),
        "hopf2": closed_two_braid(2),
        "unknot": parse_pd(UNKNOT),
        "unlink2": parse_pd(UNLINK2),
    }
