"""Finite quandles, good involutions and the standard constructions.

Elements are the indices ``0 .. n-1``.  ``op[x][y]`` is ``x ▷ y``, written
``x^y`` in the usual exponential notation, and ``inv_op[x][y]`` is the
unique ``z`` with ``z ▷ y = x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations


class QuandleError(ValueError):
    pass


class AxiomViolation(QuandleError):
    """A table fails Q1, Q2 or Q3; ``witness`` is the lexicographically first failure."""

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"axiom {axiom} fails at {witness}")


class NotInvolution(QuandleError):
    def __init__(self, x):
        self.witness = x
        super().__init__(f"rho(rho({x})) != {x}")


class NotGoodInvolution(QuandleError):
    def __init__(self, violation):
        self.violation = violation
        super().__init__(str(violation))


class OrderCapExceeded(QuandleError):
    pass


@dataclass(frozen=True)
class GoodnessViolation:
    x: int
    y: int
    identity: str  # "rho(x^y)=rho(x)^y" or "x^rho(y)=x^(y^-1)"

    def __str__(self):
        return f"{self.identity} fails at x={self.x}, y={self.y}"


@dataclass(frozen=True, eq=False)
class FiniteQuandle:
    """A verified quandle.  Build through :func:`validate_quandle`."""

    op: tuple
    inv_op: tuple = field(repr=False)
    labels: tuple | None = None

    @property
    def n(self):
        return len(self.op)

    def __len__(self):
        return len(self.op)

    def __eq__(self, other):
        return isinstance(other, FiniteQuandle) and self.op == other.op

    def __hash__(self):
        return hash(self.op)

    def label(self, x):
        return self.labels[x] if self.labels else str(x)

    def index(self, token):
        """Resolve an element written as an index or as one of the labels."""
        if self.labels and token in self.labels:
            return self.labels.index(token)
        try:
            x = int(token)
        except ValueError:
            raise QuandleError(f"unknown element {token!r}") from None
        if not 0 <= x < self.n:
            raise QuandleError(f"element {x} out of range 0..{self.n - 1}")
        return x


def validate_quandle(table, labels=None):
    """Check Q1-Q3 on ``table`` and return a :class:`FiniteQuandle`.

    Raises :class:`AxiomViolation` naming the first failing axiom.
    """
    n = len(table)
    if n == 0:
        raise QuandleError("a quandle needs at least one element")
    op = tuple(tuple(int(v) for v in row) for row in table)
    for x, row in enumerate(op):
        if len(row) != n:
            raise QuandleError(f"row {x} has {len(row)} entries, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise QuandleError(f"entry {v} in row {x} out of range")
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n or len(set(labels)) != n:
            raise QuandleError("labels must be n distinct tokens")

    for x in range(n):
        if op[x][x] != x:
            raise AxiomViolation("Q1", (x,))
    inv = [[0] * n for _ in range(n)]
    for y in range(n):
        seen = {}
        for x in range(n):
            z = op[x][y]
            if z in seen:
                raise AxiomViolation("Q2", (seen[z], x, y))
            seen[z] = x
            inv[z][y] = x
    for x in range(n):
        for y in range(n):
            xy = op[x][y]
            for z in range(n):
                if op[xy][z] != op[op[x][z]][op[y][z]]:
                    raise AxiomViolation("Q3", (x, y, z))
    return FiniteQuandle(op, tuple(map(tuple, inv)), labels)


def make_trivial(n):
    if n < 1:
        raise QuandleError("n must be positive")
    return validate_quandle([[x] * n for x in range(n)])


def make_dihedral(n):
    if n < 1:
        raise QuandleError("n must be positive")
    return validate_quandle([[(2 * y - x) % n for y in range(n)] for x in range(n)])


def is_kei(q):
    op = q.op
    return all(op[op[x][y]][y] == x for x in range(q.n) for y in range(q.n))


def is_homomorphism(q, f):
    """True if ``f`` (a table) satisfies f(x^y) = f(x)^f(y)."""
    op = q.op
    return all(f[op[x][y]] == op[f[x]][f[y]] for x in range(q.n) for y in range(q.n))


# -- involutions -------------------------------------------------------------

def _check_involution(rho, n):
    if len(rho) != n:
        raise QuandleError(f"rho has {len(rho)} entries, expected {n}")
    for x in range(n):
        if not 0 <= rho[x] < n:
            raise QuandleError(f"rho({x}) out of range")
    for x in range(n):
        if rho[rho[x]] != x:
            raise NotInvolution(x)


def goodness_violation(q, rho):
    """First (x, y) breaking a goodness identity, or None if ``rho`` is good.

    Raises :class:`NotInvolution` when ``rho`` is not an involution.
    """
    rho = tuple(rho)
    _check_involution(rho, q.n)
    op, inv = q.op, q.inv_op
    for x in range(q.n):
        for y in range(q.n):
            if rho[op[x][y]] != op[rho[x]][y]:
                return GoodnessViolation(x, y, "rho(x^y)=rho(x)^y")
            if op[x][rho[y]] != inv[x][y]:
                return GoodnessViolation(x, y, "x^rho(y)=x^(y^-1)")
    return None


def is_good_involution(q, rho):
    return goodness_violation(q, rho) is None


def involutions(n):
    """All involutions of {0..n-1} in lexicographic order."""
    rho = [None] * n

    def rec(i):
        while i < n and rho[i] is not None:
            i += 1
        if i == n:
            yield tuple(rho)
            return
        for j in range(i, n):
            if rho[j] is None:
                rho[i], rho[j] = j, i
                yield from rec(i + 1)
                rho[i] = rho[j] = None

    # the recursion emits i->i before i->j>i, so the order is lexicographic
    yield from rec(0)


def enumerate_good_involutions(q, cap=12):
    """Every good involution of ``q``, sorted.

    This walks the full involution tree; each branch is cut as soon as an
    assigned value breaks one of the two identities on already-known data.
    """
    n = q.n
    if n > cap:
        raise OrderCapExceeded(f"order {n} exceeds cap {cap}")
    op, inv = q.op, q.inv_op
    # x^rho(y) = x^(y^-1) only involves rho(y): precompute admissible images
    allowed = [
        {z for z in range(n) if all(op[x][z] == inv[x][y] for x in range(n))}
        for y in range(n)
    ]
    rho = [None] * n
    out = []

    def consistent(a):
        # rho(x^y) = rho(x)^y for every pair touching a with known values
        for x in range(n):
            rx = rho[x]
            if rx is None:
                continue
            for y in range(n):
                r = rho[op[x][y]]
                if r is not None and r != op[rx][y]:
                    return False
        return True

    def rec(i):
        while i < n and rho[i] is not None:
            i += 1
        if i == n:
            out.append(tuple(rho))
            return
        for j in range(i, n):
            if rho[j] is not None or j not in allowed[i] or i not in allowed[j]:
                continue
            rho[i], rho[j] = j, i
            if consistent(i):
                rec(i + 1)
            rho[i] = rho[j] = None

    rec(0)
    return sorted(out)


def identity_map(n):
    return tuple(range(n))


def antipodal(n):
    if n % 2:
        raise QuandleError("the antipodal map needs even order")
    return tuple((i + n // 2) % n for i in range(n))


def half_antipodal(n, moved_parity):
    """Shift by n/2 on the residues of parity ``moved_parity``, fix the rest."""
    if n % 4:
        raise QuandleError("half-antipodal maps need order divisible by 4")
    return tuple((i + n // 2) % n if i % 2 == moved_parity else i for i in range(n))


# -- symmetric quandles ------------------------------------------------------

@dataclass(frozen=True)
class SymmetricQuandle:
    quandle: FiniteQuandle
    rho: tuple

    @property
    def n(self):
        return self.quandle.n

    @property
    def op(self):
        return self.quandle.op

    @property
    def inv_op(self):
        return self.quandle.inv_op


def make_symmetric(q, rho):
    """Pair ``q`` with ``rho`` after checking that ``rho`` is good."""
    rho = tuple(int(r) for r in rho)
    bad = goodness_violation(q, rho)
    if bad is not None:
        raise NotGoodInvolution(bad)
    return SymmetricQuandle(q, rho)


@dataclass(frozen=True)
class FiniteGroupTable:
    mul: tuple
    inverse: tuple
    identity: int
    labels: tuple | None = None

    @property
    def n(self):
        return len(self.mul)


def validate_group(mul, labels=None):
    n = len(mul)
    mul = tuple(tuple(int(v) for v in row) for row in mul)
    ids = [e for e in range(n) if all(mul[e][g] == g and mul[g][e] == g for g in range(n))]
    if not ids:
        raise QuandleError("group table has no identity")
    e = ids[0]
    inverse = []
    for g in range(n):
        hs = [h for h in range(n) if mul[g][h] == e and mul[h][g] == e]
        if not hs:
            raise QuandleError(f"element {g} has no inverse")
        inverse.append(hs[0])
    for a in range(n):
        for b in range(n):
            ab = mul[a][b]
            for c in range(n):
                if mul[ab][c] != mul[a][mul[b][c]]:
                    raise QuandleError(f"associativity fails at {(a, b, c)}")
    return FiniteGroupTable(mul, tuple(inverse), e, tuple(labels) if labels else None)


def cyclic_group(n):
    return validate_group([[(a + b) % n for b in range(n)] for a in range(n)])


def symmetric_group(k):
    """S_k as a table; elements are permutations in lexicographic order.

    Multiplication composes left to right: (p*q)(i) = q(p(i)).
    """
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[tuple(q[p[i]] for i in range(k))] for q in perms] for p in perms]
    labels = ["".join(map(str, p)) for p in perms]
    return validate_group(mul, labels)


def make_conjugation(g):
    """conj(G) with x^y = y^-1 x y, paired with inversion."""
    mul, inv = g.mul, g.inverse
    table = [[mul[mul[inv[y]][x]][y] for y in range(g.n)] for x in range(g.n)]
    q = validate_quandle(table, g.labels)
    return make_symmetric(q, inv)


def make_double_cover(q):
    """D(X) on two copies of X; rho swaps the copies.

    ``x`` in copy 1 is index ``x``, in copy 2 index ``x + n``.
    """
    n = q.n
    table = []
    for i in range(2):
        for x in range(n):
            row = [i * n + q.op[x][y] for y in range(n)]
            row += [i * n + q.inv_op[x][y] for y in range(n)]
            table.append(row)
    labels = None
    if q.labels:
        labels = [f"{l}_1" for l in q.labels] + [f"{l}_2" for l in q.labels]
    d = validate_quandle(table, labels)
    rho = [x + n for x in range(n)] + list(range(n))
    return make_symmetric(d, rho)
