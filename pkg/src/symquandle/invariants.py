"""Cocycle invariants of link diagrams and of colored surface-link chain data."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .chains import (
    Chain, ChainError, NotACocycle, Variant, boundary, chain_in_subgroup,
    cocycle_violation, evaluate, homology, subcomplex_generators,
)
from .diagram import build_diagram, enumerate_colorings, reverse_components


class PreconditionViolated(ChainError):
    pass


class NotACycle(ChainError):
    def __init__(self, coloring_id, residual):
        self.coloring_id = coloring_id
        self.residual = residual
        super().__init__(f"coloring {coloring_id}: boundary {residual!r} is not degenerate")


@dataclass(frozen=True)
class WeightTerm:
    sign: int
    tuple: tuple


@dataclass(frozen=True)
class InvariantMultiset:
    """Sorted ``(value, multiplicity)`` pairs."""

    entries: tuple

    @classmethod
    def of(cls, values):
        return cls(tuple(sorted(Counter(values).items())))

    def as_dict(self):
        return dict(self.entries)

    def __len__(self):
        return sum(m for _, m in self.entries)

    def __str__(self):
        return " ".join(f"{v}:{m}" for v, m in self.entries)


@dataclass(frozen=True)
class HomologyClassMultiset:
    entries: tuple
    group: object = None

    def __str__(self):
        return " ".join(f"({','.join(map(str, v))}):{m}" for v, m in self.entries)


def weights(d, c):
    """One signed weight per crossing, read at the specified region."""
    out = []
    for k, cr in enumerate(d.crossings):
        q = d.specified_quadrant(k)
        pu, po = (q, q + 1) if q % 2 == 0 else (q + 1, q)
        y = c.region_color[d.corner_region[k][q]]
        x1 = c.arc_color[cr[pu % 4]]
        x2 = c.arc_color[cr[po % 4]]
        out.append(WeightTerm(d.signs[k], (y, x1, x2)))
    return out


def weight_cycle(d, c):
    return Chain(2, [(w.tuple, w.sign) for w in weights(d, c)])


def _require_cocycle(s, act, theta):
    bad = cocycle_violation(s, act, theta, Variant.Qrho)
    if bad is not None:
        raise NotACocycle(bad)


def phi(d, s, act, theta, constraints=None):
    """Multiset of theta(c_{D,C}) over all colorings."""
    _require_cocycle(s, act, theta)
    return InvariantMultiset.of(
        evaluate(theta, weight_cycle(d, c)) for c in enumerate_colorings(d, s, act, constraints))


def homology_classes(d, s, act, constraints=None):
    h = homology(s, act, Variant.Qrho, 2)
    values = [h.class_of(weight_cycle(d, c)) for c in enumerate_colorings(d, s, act, constraints)]
    return HomologyClassMultiset(tuple(sorted(Counter(values).items())), h.group)


def _corner_faces(d):
    return {(c, k): r for c, row in enumerate(d.corner_region) for k, r in enumerate(row)}


def phi_oriented(d, s, act, theta, orientation, constraints=None):
    """Phi through the oriented diagram D^+ given by reversing ``orientation``.

    The link is re-encoded as a new PD code whose label order follows the
    chosen orientation; colorings of that diagram use normals determined by
    the orientation alone, which is the oriented X_Y-coloring picture.
    Face constraints are carried across through the crossing corners.
    """
    _require_cocycle(s, act, theta)
    flips = tuple(bool(f) for f in orientation)
    pd2 = reverse_components(d.pd, flips)
    # crossing k of pd2 is crossing k of d, rotated by 2 when its under
    # strand was reversed
    flips += (False,) * (d.n_components - len(flips))
    shift = [2 if flips[d.component[cr[0]]] else 0 for cr in d.crossings]

    def new_face(d2, f):
        if not d.crossings:
            return f
        r = d.face_region[f]
        for (c, k), r0 in _corner_faces(d).items():
            if r0 == r:
                r2 = d2.corner_region[c][(k - shift[c]) % 4]
                return d2.face_region.index(r2)
        return f

    probe = build_diagram(pd2)
    unb = new_face(probe, d.unbounded_face)
    d2 = build_diagram(pd2, unb)
    cons2 = {new_face(d2, f): y for f, y in (constraints or {}).items()}
    return InvariantMultiset.of(
        evaluate(theta, weight_cycle(d2, c)) for c in enumerate_colorings(d2, s, act, cons2))


# -- surface-link chain data -------------------------------------------------

@dataclass(frozen=True)
class ColoredTriplePointData:
    """Groups of degree-3 weights, one group per coloring."""

    groups: tuple  # ((coloring id, (WeightTerm, ...)), ...)

    def chain(self, index):
        _, terms = self.groups[index]
        return Chain(3, [(w.tuple, w.sign) for w in terms])

    def chains(self):
        return [(cid, self.chain(i)) for i, (cid, _) in enumerate(self.groups)]


def surface_cycle_witness(data, s, act):
    """First group whose boundary is not in D_2^Q + D_2^rho, as NotACycle; else None."""
    gens = subcomplex_generators(s, act, Variant.Qrho, 2)
    for cid, ch in data.chains():
        for t, _ in ch.items():
            if len(t) != 4 or not 0 <= t[0] < act.size or not all(0 <= x < s.n for x in t[1:]):
                raise ChainError(f"coloring {cid}: invalid tuple {t}")
        db = boundary(s, act, ch)
        if not chain_in_subgroup(db, gens):
            return NotACycle(cid, db)
    return None


def check_surface_cycle(data, s, act):
    bad = surface_cycle_witness(data, s, act)
    if bad is not None:
        raise bad
    return True


def phi_surface(data, theta, s=None, act=None):
    """Multiset of theta over the coloring groups.

    When ``s`` and ``act`` are given, the data and the cocycle are checked
    first.
    """
    if s is not None:
        check_surface_cycle(data, s, act)
        _require_cocycle(s, act, theta)
    return InvariantMultiset.of(evaluate(theta, ch) for _, ch in data.chains())


def triple_point_bound(theta, data):
    """Lower bound for the triple point number: max |theta(c_{D,C})|."""
    if theta.coefficients.modulus:
        raise PreconditionViolated("the bound needs an integer-valued cocycle")
    big = [t for t, v in theta.table.items() if abs(v) > 1]
    if big:
        raise PreconditionViolated(f"|theta{big[0]}| = {abs(theta(big[0]))} > 1")
    return max((abs(evaluate(theta, ch)) for _, ch in data.chains()), default=0)


def generate_fn_chain(n, x, y, e=0):
    """n(e,x,y,x) - n(e,y,x,y) as a single coloring group."""
    if n < 1:
        raise ValueError("n must be positive")
    terms = [WeightTerm(1, (e, x, y, x))] * n + [WeightTerm(-1, (e, y, x, y))] * n
    return ColoredTriplePointData(((1, tuple(terms)),))
