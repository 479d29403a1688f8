"""Associated groups of (symmetric) quandles and (X, rho)-set actions.

Only what can be decided exactly is offered: presentations, their
abelianizations, and relation checking against concrete finite actions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import smith_normal_form


@dataclass(frozen=True)
class GroupPresentation:
    """Generators 0..n-1; each relator is a word of ``(generator, ±1)`` pairs."""

    n_generators: int
    relators: tuple

    def __str__(self):
        lines = [f"gen {self.n_generators}"]
        for w in self.relators:
            lines.append(" ".join(f"{'+' if e > 0 else '-'}{g}" for g, e in w))
        return "\n".join(lines)


def _conjugation_relators(q):
    # (x^y)^-1 y^-1 x y
    return [((q.op[x][y], -1), (y, -1), (x, 1), (y, 1))
            for x in range(q.n) for y in range(q.n)]


def presentation_assoc(q):
    return GroupPresentation(q.n, tuple(_conjugation_relators(q)))


def presentation_sym(s):
    rels = _conjugation_relators(s.quandle)
    rels += [((s.rho[x], 1), (x, 1)) for x in range(s.n)]
    return GroupPresentation(s.n, tuple(rels))


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank ⊕ Z/d_1 ⊕ ... with d_1 | d_2 | ... and every d_i >= 2."""

    rank: int
    torsion: tuple = ()

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"

    @classmethod
    def from_relations(cls, matrix, n_generators):
        diag = smith_normal_form(matrix, n_generators).diagonal
        return cls(n_generators - len(diag), tuple(d for d in diag if d > 1))


def abelianization(p):
    rows = []
    for w in p.relators:
        row = [0] * p.n_generators
        for g, e in w:
            row[g] += e
        if any(row):
            rows.append(row)
    return AbelianGroup.from_relations(rows, p.n_generators)


def evaluate_word(g, images, word):
    """Image of ``word`` in a finite group table under generator ``images``."""
    acc = g.identity
    for gen, e in word:
        h = images[gen] if e > 0 else g.inverse[images[gen]]
        acc = g.mul[acc][h]
    return acc


# -- (X, rho)-sets ----------------------------------------------------------

class XSetError(ValueError):
    pass


class NotPermutation(XSetError):
    def __init__(self, x):
        self.x = x
        super().__init__(f"generator {x} does not act as a permutation")


class RelationViolation(XSetError):
    def __init__(self, y, x1, x2):
        self.witness = (y, x1, x2)
        super().__init__(f"y·(x1^x2) != y·(x2^-1 x1 x2) at y={y}, x1={x1}, x2={x2}")


class RhoViolation(XSetError):
    def __init__(self, y, x):
        self.witness = (y, x)
        super().__init__(f"y·rho(x) != y·x^-1 at y={y}, x={x}")


@dataclass(frozen=True)
class XSetAction:
    """Right action table: ``act[y][x]`` is ``y·x``."""

    act: tuple
    inv: tuple
    labels: tuple | None = None

    @property
    def size(self):
        return len(self.act)

    def label(self, y):
        return self.labels[y] if self.labels else str(y)

    def index(self, token):
        if self.labels and token in self.labels:
            return self.labels.index(token)
        try:
            y = int(token)
        except ValueError:
            raise XSetError(f"unknown Y element {token!r}") from None
        if not 0 <= y < self.size:
            raise XSetError(f"Y element {y} out of range")
        return y


def validate_xset(s, table, labels=None):
    ny, nx = len(table), s.n
    if ny == 0:
        raise XSetError("Y must be nonempty")
    act = tuple(tuple(int(v) for v in row) for row in table)
    if any(len(row) != nx for row in act):
        raise XSetError(f"action table must be {ny} x {nx}")
    inv = [[0] * nx for _ in range(ny)]
    for x in range(nx):
        col = [act[y][x] for y in range(ny)]
        if sorted(col) != list(range(ny)):
            raise NotPermutation(x)
        for y, z in enumerate(col):
            inv[z][x] = y
    op = s.op
    for y in range(ny):
        for x1 in range(nx):
            for x2 in range(nx):
                if act[y][op[x1][x2]] != act[act[inv[y][x2]][x1]][x2]:
                    raise RelationViolation(y, x1, x2)
        for x in range(nx):
            if act[y][s.rho[x]] != inv[y][x]:
                raise RhoViolation(y, x)
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != ny:
            raise XSetError("labels must have one token per Y element")
    return XSetAction(act, tuple(map(tuple, inv)), labels)


def singleton_xset(s):
    return validate_xset(s, [[0] * s.n], ["e"])


def quandle_xset(s):
    """Y = X acted on by the quandle operation."""
    return validate_xset(s, s.op, s.quandle.labels)


def word_acts(action, y, word):
    for g, e in word:
        y = action.act[y][g] if e > 0 else action.inv[y][g]
    return y
