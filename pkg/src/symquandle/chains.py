"""Chain complexes C_*(X)_Y of a symmetric quandle with an (X, rho)-set.

A basis tuple is ``(y, x_1, ..., x_n)``.  Chains are sparse integer
combinations of such tuples.  The four quotient complexes are selected by
:class:`Variant`; homology is computed exactly over Z or Z/m.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import product

from .groups import AbelianGroup
from .lattice import Lattice, kernel, smith_normal_form

DEFAULT_SIZE_CAP = 200_000


class ChainError(ValueError):
    pass


class DegreeMismatch(ChainError):
    pass


class SizeCapExceeded(ChainError):
    pass


def size_cap():
    return int(os.environ.get("SQK_SIZE_CAP", DEFAULT_SIZE_CAP))


class Variant(enum.Enum):
    R = "R"
    Q = "Q"
    Rrho = "Rrho"
    Qrho = "Qrho"

    @property
    def quandle(self):
        return self in (Variant.Q, Variant.Qrho)

    @property
    def symmetric(self):
        return self in (Variant.Rrho, Variant.Qrho)


@dataclass(frozen=True)
class Coefficients:
    """Z when ``modulus`` is 0, else Z/modulus."""

    modulus: int = 0

    def __post_init__(self):
        if self.modulus == 1 or self.modulus < 0:
            raise ChainError("modulus must be 0 (integers) or at least 2")

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == "Z":
            return cls(0)
        if text.startswith("Z/"):
            return cls(int(text[2:]))
        raise ChainError(f"bad coefficient group {text!r}")

    def reduce(self, v):
        return v % self.modulus if self.modulus else v

    def __str__(self):
        return f"Z/{self.modulus}" if self.modulus else "Z"


Z = Coefficients(0)


class Chain:
    """An element of C_n(X)_Y stored as ``{tuple: coefficient}``."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        self.terms = {}
        if terms:
            for t, c in terms.items() if isinstance(terms, dict) else terms:
                self._add(tuple(t), c)

    def _add(self, t, c):
        if len(t) != self.degree + 1:
            raise DegreeMismatch(f"tuple {t} does not have degree {self.degree}")
        v = self.terms.get(t, 0) + c
        if v:
            self.terms[t] = v
        else:
            self.terms.pop(t, None)

    @classmethod
    def unit(cls, t):
        return cls(len(t) - 1, {tuple(t): 1})

    def copy(self):
        out = Chain(self.degree)
        out.terms = dict(self.terms)
        return out

    def __add__(self, other):
        if other.degree != self.degree:
            raise DegreeMismatch("cannot add chains of different degree")
        out = self.copy()
        for t, c in other.terms.items():
            out._add(t, c)
        return out

    def __neg__(self):
        out = Chain(self.degree)
        out.terms = {t: -c for t, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        out = Chain(self.degree)
        if k:
            out.terms = {t: k * c for t, c in self.terms.items()}
        return out

    def __eq__(self, other):
        return isinstance(other, Chain) and self.degree == other.degree and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return f"Chain({self.degree}, 0)"
        body = " ".join(f"{c:+d}*{t}" for t, c in self.items())
        return f"Chain({self.degree}, {body})"


def basis_tuples(ny, nx, n):
    """Lexicographic basis of C_n(X)_Y."""
    return [t for t in product(range(ny), *[range(nx)] * n)]


def tuple_index(t, nx):
    i = t[0]
    for x in t[1:]:
        i = i * nx + x
    return i


def _act_tail(s, act, t, i):
    """(y^{x_i}, x_1^{x_i}, ..., x_{i-1}^{x_i}) for 1-based position i."""
    xi = t[i]
    op = s.op
    return (act.act[t[0]][xi],) + tuple(op[x][xi] for x in t[1:i])


def boundary_tuple(s, act, t):
    """Boundary of a single basis tuple as a dict."""
    out = {}
    n = len(t) - 1
    for i in range(1, n + 1):
        sgn = -1 if i % 2 else 1
        a = t[:i] + t[i + 1:]
        b = _act_tail(s, act, t, i) + t[i + 1:]
        out[a] = out.get(a, 0) + sgn
        out[b] = out.get(b, 0) - sgn
    return {k: v for k, v in out.items() if v}


def boundary(s, act, c):
    if c.degree <= 0:
        return Chain(c.degree - 1)
    out = Chain(c.degree - 1)
    for t, k in c.terms.items():
        for u, v in boundary_tuple(s, act, t).items():
            out._add(u, k * v)
    return out


def rho_partner(s, act, t, i):
    """The tuple paired with ``t`` at position i in the D^rho generators."""
    return _act_tail(s, act, t, i) + (s.rho[t[i]],) + t[i + 1:]


def dq_generators(s, act, n):
    if n < 2:
        return []
    return [Chain.unit(t) for t in basis_tuples(act.size, s.n, n)
            if any(t[i] == t[i + 1] for i in range(1, n))]


def drho_generators(s, act, n):
    if n < 1:
        return []
    seen = set()
    out = []
    for t in basis_tuples(act.size, s.n, n):
        for i in range(1, n + 1):
            g = Chain(n, [(t, 1), (rho_partner(s, act, t, i), 1)])
            key = tuple(g.items())
            if key not in seen:
                seen.add(key)
                out.append(g)
    return out


def subcomplex_generators(s, act, variant, n):
    gens = []
    if variant.quandle:
        gens += dq_generators(s, act, n)
    if variant.symmetric:
        gens += drho_generators(s, act, n)
    return gens


def to_vector(c, nx, dim):
    v = [0] * dim
    for t, k in c.terms.items():
        v[tuple_index(t, nx)] += k
    return v


def chain_in_subgroup(c, gens):
    """True iff ``c`` is an integer combination of ``gens``."""
    if not c:
        return True
    tuples = sorted(set(c.terms).union(*(g.terms for g in gens)))
    pos = {t: i for i, t in enumerate(tuples)}
    dim = len(tuples)

    def vec(ch):
        v = [0] * dim
        for t, k in ch.terms.items():
            v[pos[t]] += k
        return v

    return vec(c) in Lattice([vec(g) for g in gens], dim)


# -- homology ----------------------------------------------------------------

@dataclass
class HomologyResult:
    degree: int
    variant: Variant
    coefficients: Coefficients
    group: AbelianGroup
    chain_ranks: tuple  # free ranks of the quotient groups in degrees n+1, n, n-1
    _cycles: Lattice
    _right: list
    _diagonal: list
    _nx: int
    _dims: tuple

    def __str__(self):
        return str(self.group)

    def class_of(self, c):
        """Coordinates of the class of a cycle ``c`` in the invariant-factor basis.

        Torsion coordinates are reduced modulo their orders; factors equal to
        1 are dropped.
        """
        if c.degree != self.degree:
            raise DegreeMismatch("cycle has the wrong degree")
        z = self._cycles.coordinates(to_vector(c, self._nx, self._dims[1]))
        if z is None:
            raise ChainError("chain is not a cycle of the quotient complex")
        k = len(z)
        w = [sum(z[i] * self._right[i][j] for i in range(k)) for j in range(k)]
        coords = []
        for j in range(k):
            d = self._diagonal[j] if j < len(self._diagonal) else 0
            if d == 1:
                continue
            coords.append(w[j] % d if d else w[j])
        return tuple(coords)


def _relations(s, act, variant, n, coeff):
    """Generator vectors of the subgroup killed in degree n (D_n plus m*C_n)."""
    nx, ny = s.n, act.size
    dim = ny * nx ** n if n >= 0 else 0
    rows = [to_vector(g, nx, dim) for g in subcomplex_generators(s, act, variant, n)]
    if coeff.modulus:
        for i in range(dim):
            r = [0] * dim
            r[i] = coeff.modulus
            rows.append(r)
    return rows, dim


def homology(s, act, variant, n, coeff=Z, shuffle_seed=None):
    """H_n of the chosen quotient complex.

    Works with lifts to the free groups: cycles are chains whose boundary
    lies in D_{n-1}; boundaries are the image of degree n+1 plus D_n.
    ``shuffle_seed`` permutes the D-generators first (used to test that the
    answer does not depend on their order).
    """
    variant = Variant(variant)
    nx, ny = s.n, act.size
    if n < 0:
        raise ChainError("degree must be nonnegative")
    if ny * nx ** (n + 1) > size_cap():
        raise SizeCapExceeded(f"{ny * nx ** (n + 1)} basis tuples exceed cap {size_cap()}")
    dims = tuple(ny * nx ** k if k >= 0 else 0 for k in (n + 1, n, n - 1))

    rel = {}
    for k in (n + 1, n, n - 1):
        rows, _ = _relations(s, act, variant, k, coeff) if k >= 0 else ([], 0)
        if shuffle_seed is not None:
            import random
            random.Random(shuffle_seed + k).shuffle(rows)
        rel[k] = rows

    basis_n = basis_tuples(ny, nx, n)
    # cycles: v with d(v) in D_{n-1}
    if n >= 1:
        dlow = Lattice(rel[n - 1], dims[2]).basis
        cols = [to_vector(Chain(n - 1, boundary_tuple(s, act, t)), nx, dims[2]) for t in basis_n]
        cols += [[-a for a in b] for b in dlow]
        mat = [[col[i] for col in cols] for i in range(dims[2])]
        ker = kernel(mat, len(cols))
        cycles = Lattice([v[:dims[1]] for v in ker], dims[1])
    else:
        cycles = Lattice([[int(i == j) for j in range(dims[1])] for i in range(dims[1])], dims[1])

    bound_gens = [to_vector(Chain(n, boundary_tuple(s, act, t)), nx, dims[1])
                  for t in basis_tuples(ny, nx, n + 1)]
    bound_gens += rel[n]
    bounds = Lattice(bound_gens, dims[1])
    relmat = []
    for b in bounds.basis:
        z = cycles.coordinates(b)
        if z is None:
            raise ChainError("boundary outside the cycle lattice; subcomplex is not closed")
        relmat.append(z)
    k = cycles.rank
    snf = smith_normal_form(relmat, k, want_right=True)
    diag = snf.diagonal
    group = AbelianGroup(k - len(diag), tuple(d for d in diag if d > 1))
    ranks = tuple(dims[i] - Lattice(rel[kk], dims[i]).rank if kk >= 0 else 0
                  for i, kk in enumerate((n + 1, n, n - 1)))
    return HomologyResult(n, variant, coeff, group, ranks, cycles, snf.right, diag, nx, dims)


# -- cocycles ----------------------------------------------------------------

class NotACocycle(ChainError):
    def __init__(self, violation):
        self.violation = violation
        super().__init__(str(violation))


@dataclass(frozen=True)
class CocycleViolation:
    condition: str  # "boundary", "degenerate" or "rho"
    tuple: tuple
    value: int

    def __str__(self):
        return f"{self.condition} condition fails at {self.tuple} (value {self.value})"


@dataclass(frozen=True)
class Cocycle:
    degree: int
    coefficients: Coefficients
    table: dict
    variant: Variant = Variant.Qrho

    def __post_init__(self):
        clean = {}
        for t, v in self.table.items():
            t = tuple(t)
            if len(t) != self.degree + 1:
                raise DegreeMismatch(f"entry {t} does not have degree {self.degree}")
            v = self.coefficients.reduce(v)
            if v:
                clean[t] = v
        object.__setattr__(self, "table", clean)

    def __call__(self, t):
        return self.table.get(tuple(t), 0)

    def with_entry(self, t, value):
        table = dict(self.table)
        table[tuple(t)] = value
        return Cocycle(self.degree, self.coefficients, table, self.variant)


def evaluate(theta, c):
    if c.degree != theta.degree:
        raise DegreeMismatch(f"cocycle of degree {theta.degree} on chain of degree {c.degree}")
    return theta.coefficients.reduce(sum(k * theta(t) for t, k in c.terms.items()))


def cocycle_violation(s, act, theta, variant=None):
    """First failing condition for ``theta``, or None if it is a cocycle."""
    variant = Variant(variant) if variant is not None else theta.variant
    n = theta.degree
    red = theta.coefficients.reduce
    for t in basis_tuples(act.size, s.n, n + 1):
        v = red(sum(k * theta(u) for u, k in boundary_tuple(s, act, t).items()))
        if v:
            return CocycleViolation("boundary", t, v)
    if variant.quandle:
        for g in dq_generators(s, act, n):
            (t,) = g.terms
            if theta(t):
                return CocycleViolation("degenerate", t, theta(t))
    if variant.symmetric:
        for t in basis_tuples(act.size, s.n, n):
            for i in range(1, n + 1):
                v = red(theta(t) + theta(rho_partner(s, act, t, i)))
                if v:
                    return CocycleViolation("rho", t, v)
    return None


def is_cocycle(s, act, theta, variant=None):
    return cocycle_violation(s, act, theta, variant) is None
