"""PD codes, planar diagrams and (X, rho)_Y-colorings.

A crossing ``X[a,b,c,d]`` lists its four edge labels counterclockwise,
starting from the incoming under-edge.  Positions 0..3 are drawn at
south, east, north and west, so the under strand runs south to north.
Quadrant ``k`` of a crossing is the corner between positions ``k`` and
``k+1``.

Colorings are stored in canonical form: every semi-arc carries the normal
that points to the left of its reference direction of travel, so a coloring
is just one quandle element per edge plus one Y element per region.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass

# unit vectors of positions 0..3 (south, east, north, west)
_DIR = ((0, -1), (1, 0), (0, 1), (-1, 0))


def _left(v):
    return (-v[1], v[0])


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _bisector(k):
    a, b = _DIR[k], _DIR[(k + 1) % 4]
    return (a[0] + b[0], a[1] + b[1])


class PDError(ValueError):
    pass


class PDSyntaxError(PDError):
    def __init__(self, line, col, msg):
        self.line, self.col = line, col
        super().__init__(f"line {line}, column {col}: {msg}")


class LabelCountError(PDError):
    pass


class OrientationInconsistency(PDError):
    pass


class InvalidFaceIndex(PDError):
    pass


class NonPlanarDiagram(PDError):
    pass


@dataclass(frozen=True)
class PDCode:
    crossings: tuple
    loops: tuple = ()

    def __str__(self):
        parts = [f"X[{a},{b},{c},{d}]" for a, b, c, d in self.crossings]
        parts += [f"L[{a}]" for a in self.loops]
        return " ".join(parts)


_TOKEN = re.compile(
    r"X\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]"
    r"|X\s+(\d+)\s+(\d+)\s+(\d+)\s+(\d+)"
    r"|L\s*\[\s*(\d+)\s*\]"
    r"|L\s+(\d+)"
    r"|[\s,]+"
)


def parse_pd(text):
    """Parse ``X a b c d`` / ``X[a,b,c,d]`` / ``L a`` records.

    ``#`` starts a comment.  Raises :class:`PDSyntaxError`,
    :class:`LabelCountError` or :class:`OrientationInconsistency`.
    """
    crossings, loops = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        pos = 0
        while pos < len(line):
            m = _TOKEN.match(line, pos)
            if m is None or m.end() == pos:
                raise PDSyntaxError(lineno, pos + 1, f"unexpected {line[pos:pos + 10]!r}")
            g = m.groups()
            if g[0] is not None:
                crossings.append(tuple(int(v) for v in g[0:4]))
            elif g[4] is not None:
                crossings.append(tuple(int(v) for v in g[4:8]))
            elif g[8] is not None or g[9] is not None:
                loops.append(int(g[8] if g[8] is not None else g[9]))
            pos = m.end()
    pd = PDCode(tuple(crossings), tuple(loops))
    _orient(pd)
    return pd


def _label_ends(pd):
    ends = {}
    for c, cr in enumerate(pd.crossings):
        for p, lab in enumerate(cr):
            if lab <= 0:
                raise LabelCountError(f"label {lab} is not a positive integer")
            ends.setdefault(lab, []).append((c, p))
    for lab, e in ends.items():
        if len(e) != 2:
            raise LabelCountError(f"label {lab} appears {len(e)} times, expected 2")
    for lab in pd.loops:
        if lab in ends:
            raise LabelCountError(f"loop label {lab} also appears in a crossing")
    if len(set(pd.loops)) != len(pd.loops):
        raise LabelCountError("repeated loop label")
    return ends


def _orient(pd, flips=None):
    """Reference orientation from the PD conventions.

    Returns ``(components, tail, head)``: components as lists of labels in
    travel order, and for each label the (crossing, position) it leaves from
    and arrives at.  ``flips`` reverses the chosen components.
    """
    ends = _label_ends(pd)

    def other(c, p):
        a, b = ends[pd.crossings[c][p]]
        return b if a == (c, p) else a

    seen = set()
    walks = []
    for lab in sorted(ends):
        if lab in seen:
            continue
        # walk starting by leaving along one end of lab
        start = ends[lab][0]
        labels, steps = [], []
        c, p = start
        while True:
            cur = pd.crossings[c][p]
            c2, p2 = other(c, p)
            labels.append(cur)
            steps.append(((c, p), (c2, p2)))
            seen.add(cur)
            c, p = c2, (p2 + 2) % 4
            if (c, p) == start:
                break
        walks.append((labels, steps))

    components, tail, head = [], {}, {}
    for labels, steps in walks:
        # an under passage enters at position 0 in the true direction
        votes = {((c2, p2), p2) for (_, (c2, p2)) in steps if p2 % 2 == 0}
        forward = None
        for _, p2 in sorted(votes):
            want = p2 == 0
            if forward is None:
                forward = want
            elif forward != want:
                raise OrientationInconsistency(
                    f"component through label {labels[0]} passes under in both directions")
        if forward is None:
            forward = _cyclically_sorted(labels) or not _cyclically_sorted(labels[::-1])
        if not forward:
            labels = labels[::-1]
            steps = [(b, a) for a, b in reversed(steps)]
        if not _cyclically_sorted(labels):
            raise OrientationInconsistency(
                f"labels {labels} do not increase along their component")
        components.append(labels)
        for lab, (a, b) in zip(labels, steps):
            tail[lab], head[lab] = a, b
    for lab in pd.loops:
        components.append([lab])
        tail[lab] = head[lab] = None
    components.sort(key=min)

    # each crossing must have exactly one incoming and one outgoing over end
    for c, cr in enumerate(pd.crossings):
        if head[cr[0]] != (c, 0):
            raise OrientationInconsistency(f"crossing {c}: first label is not an incoming under-edge")
        ins = sum(head[cr[p]] == (c, p) for p in (1, 3))
        if ins != 1:
            raise OrientationInconsistency(f"crossing {c}: over strand is not oriented through")
    if flips:
        for k, comp in enumerate(components):
            if k < len(flips) and flips[k]:
                for lab in comp:
                    tail[lab], head[lab] = head[lab], tail[lab]
    return components, tail, head


def _cyclically_sorted(labels):
    n = len(labels)
    drops = sum(labels[i] > labels[(i + 1) % n] for i in range(n))
    return drops <= 1


@dataclass(frozen=True)
class Diagram:
    """A PD code realized as a planar 4-valent graph with traced faces.

    Edges are indexed in increasing label order.  ``crossings[c][p]`` is the
    edge at position p.  ``tail``/``head`` give the (crossing, position)
    ends in the current reference orientation (None for crossingless loops).
    Regions are traced faces with the outer faces of split pieces merged.
    """

    pd: PDCode
    labels: tuple
    crossings: tuple
    component: tuple
    n_components: int
    orientation: tuple
    tail: tuple
    head: tuple
    left_region: tuple
    right_region: tuple
    corner_region: tuple
    face_region: tuple
    face_sizes: tuple
    n_regions: int
    unbounded_face: int
    signs: tuple

    @property
    def unbounded_region(self):
        return self.face_region[self.unbounded_face]

    @property
    def n_edges(self):
        return len(self.labels)

    def under_over(self, c):
        """(under outgoing position, over outgoing position) at crossing c."""
        cr = self.crossings[c]
        u = 0 if self.tail[cr[0]] == (c, 0) else 2
        o = 1 if self.tail[cr[1]] == (c, 1) else 3
        return u, o

    def specified_quadrant(self, c):
        """Corner on the right of both strands: both canonical normals leave it."""
        u, o = self.under_over(c)
        ru = (_DIR[u][1], -_DIR[u][0])
        ro = (_DIR[o][1], -_DIR[o][0])
        for k in range(4):
            b = _bisector(k)
            if _dot(b, ru) > 0 and _dot(b, ro) > 0:
                return k
        raise AssertionError("no specified quadrant")

    def with_orientation(self, flips):
        """Same diagram with the components in ``flips`` reversed (relative)."""
        new = tuple(a != bool(f) for a, f in zip(self.orientation, _pad(flips, self.n_components)))
        return build_diagram(self.pd, self.unbounded_face, new)


def _pad(flips, n):
    flips = tuple(bool(f) for f in (flips or ()))
    return flips + (False,) * (n - len(flips))


def build_diagram(pd, unbounded_face=None, orientation=None):
    """Trace faces and compute signs for ``pd``.

    ``orientation`` lists, per component, whether it is reversed relative to
    the orientation encoded in the PD labels.  The unbounded face defaults
    to the traced face with the most edges (lowest index on ties).
    """
    components, tail_l, head_l = _orient(pd)
    ncomp = len(components)
    orientation = _pad(orientation, ncomp)[:ncomp]
    labels = tuple(sorted(tail_l))
    eidx = {lab: i for i, lab in enumerate(labels)}
    comp_of = [0] * len(labels)
    for k, comp in enumerate(components):
        for lab in comp:
            comp_of[eidx[lab]] = k
    tail = [tail_l[lab] for lab in labels]
    head = [head_l[lab] for lab in labels]
    for e in range(len(labels)):
        if orientation[comp_of[e]]:
            tail[e], head[e] = head[e], tail[e]
    crossings = tuple(tuple(eidx[lab] for lab in cr) for cr in pd.crossings)
    nc = len(crossings)

    # faces of the crossing graph
    def other(c, p):
        e = crossings[c][p]
        ends = [x for x in (tail[e], head[e])]
        if ends[0] == (c, p) and ends[1] != (c, p):
            return ends[1]
        return ends[0] if ends[1] == (c, p) else ends[1]

    dart_face = {}
    face_sizes = []
    face_piece = []
    # connected pieces of the crossing graph
    parent = list(range(nc))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in range(len(labels)):
        if tail[e] is not None:
            a, b = find(tail[e][0]), find(head[e][0])
            parent[a] = b
    for c in range(nc):
        for p in range(4):
            if (c, p) in dart_face:
                continue
            f = len(face_sizes)
            size = 0
            d = (c, p)
            while d not in dart_face:
                dart_face[d] = f
                size += 1
                c2, p2 = other(*d)
                d = (c2, (p2 - 1) % 4)
            face_sizes.append(size)
            face_piece.append(find(c))
    pieces = sorted(set(face_piece), key=lambda r: face_piece.index(r))
    for root in pieces:
        v = sum(1 for c in range(nc) if find(c) == root)
        ed = sum(1 for e in range(len(labels)) if tail[e] is not None and find(tail[e][0]) == root)
        f = sum(1 for r in face_piece if r == root)
        if v - ed + f != 2:
            raise NonPlanarDiagram(f"Euler characteristic {v - ed + f} != 2; PD code is not planar")

    left = [None] * len(labels)
    right = [None] * len(labels)
    for e in range(len(labels)):
        if tail[e] is not None:
            left[e] = dart_face[tail[e]]
            right[e] = dart_face[head[e]]
    # crossingless loops: inside face then outside face; inside is on the left
    # of the reference (counterclockwise) direction
    loop_outer = {}
    for lab in pd.loops:
        e = eidx[lab]
        inside, outside = len(face_sizes), len(face_sizes) + 1
        face_sizes += [1, 1]
        piece = ("loop", lab)
        face_piece += [piece, piece]
        loop_outer[piece] = outside
        if orientation[comp_of[e]]:
            left[e], right[e] = outside, inside
        else:
            left[e], right[e] = inside, outside

    nfaces = len(face_sizes)
    if nfaces == 0:
        face_sizes, face_piece, nfaces = [0], ["empty"], 1
    if unbounded_face is None:
        unbounded_face = max(range(nfaces), key=lambda f: (face_sizes[f], -f))
    elif not 0 <= unbounded_face < nfaces:
        raise InvalidFaceIndex(f"face {unbounded_face} out of range 0..{nfaces - 1}")

    # merge the outer faces of split pieces
    outer = {}
    for f in range(nfaces):
        piece = face_piece[f]
        if piece in outer:
            continue
        if piece == face_piece[unbounded_face]:
            outer[piece] = unbounded_face
        elif piece in loop_outer:
            outer[piece] = loop_outer[piece]
        else:
            members = [g for g in range(nfaces) if face_piece[g] == piece]
            outer[piece] = max(members, key=lambda g: (face_sizes[g], -g))
    merged = set(outer.values())
    face_region = []
    region_of_rep = {}
    for f in range(nfaces):
        key = "outer" if f in merged else f
        if key not in region_of_rep:
            region_of_rep[key] = len(region_of_rep)
        face_region.append(region_of_rep[key])
    n_regions = len(region_of_rep)

    corner = tuple(tuple(face_region[dart_face[(c, p)]] for p in range(4)) for c in range(nc))
    left_r = tuple(face_region[f] for f in left)
    right_r = tuple(face_region[f] for f in right)

    d = Diagram(
        pd=pd, labels=labels, crossings=crossings, component=tuple(comp_of),
        n_components=ncomp, orientation=orientation, tail=tuple(tail), head=tuple(head),
        left_region=left_r, right_region=right_r, corner_region=corner,
        face_region=tuple(face_region), face_sizes=tuple(face_sizes), n_regions=n_regions,
        unbounded_face=unbounded_face, signs=(),
    )
    signs = []
    for c in range(nc):
        u, o = d.under_over(c)
        signs.append(1 if _cross(_DIR[o], _DIR[u]) > 0 else -1)
    object.__setattr__(d, "signs", tuple(signs))
    return d


def writhe(d):
    return sum(d.signs)


def linking_number(d, i=0, j=1):
    """Half the sign sum over crossings between components i and j."""
    total = 0
    for c, cr in enumerate(d.crossings):
        comps = {d.component[cr[0]], d.component[cr[1]]}
        if comps == {i, j} and i != j:
            total += d.signs[c]
    if total % 2:
        raise PDError("odd inter-component sign sum; diagram is not planar")
    return total // 2


# -- colorings ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Coloring:
    arc_color: tuple
    region_color: tuple


def _arcs(d):
    """Union edges joined through an over crossing; returns edge -> arc id."""
    parent = list(range(d.n_edges))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for cr in d.crossings:
        parent[find(cr[1])] = find(cr[3])
    roots = {}
    return [roots.setdefault(find(e), len(roots)) for e in range(d.n_edges)]


def under_relations(d):
    """Per crossing (e1, over edge, e2) with colors satisfying x_{e1} ▷ x_over = x_{e2}."""
    out = []
    for c, cr in enumerate(d.crossings):
        u, o = d.under_over(c)
        normal = _left(_DIR[o])
        e2pos = 0 if _dot(_DIR[0], normal) > 0 else 2
        out.append((cr[(e2pos + 2) % 4], cr[o], cr[e2pos]))
    return out


def _arc_colorings(d, s):
    arc = _arcs(d)
    narcs = max(arc) + 1 if arc else 0
    cons = [(arc[a], arc[o], arc[b]) for a, o, b in under_relations(d)]
    op, inv = s.op, s.inv_op
    watch = [[] for _ in range(narcs)]
    for k, (a, o, b) in enumerate(cons):
        for v in {a, o, b}:
            watch[v].append(k)
    out = []

    def assign(col, v, x, trail):
        col[v] = x
        trail.append(v)
        queue = [v]
        while queue:
            w = queue.pop()
            for k in watch[w]:
                a, o, b = cons[k]
                ca, co, cb = col[a], col[o], col[b]
                if co is None:
                    continue
                if ca is not None:
                    want = op[ca][co]
                    if cb is None:
                        col[b] = want
                        trail.append(b)
                        queue.append(b)
                    elif cb != want:
                        return False
                elif cb is not None:
                    col[a] = inv[cb][co]
                    trail.append(a)
                    queue.append(a)
        return True

    def rec(col):
        try:
            v = col.index(None)
        except ValueError:
            out.append(tuple(col))
            return
        for x in range(s.n):
            trail = []
            if assign(col, v, x, trail):
                rec(col)
            for w in trail:
                col[w] = None

    rec([None] * narcs)
    return [tuple(c[arc[e]] for e in range(d.n_edges)) for c in out]


def _region_colorings(d, act, colors, base_values, fixed):
    """All region colorings compatible with the arc colors."""
    adj = [[] for _ in range(d.n_regions)]
    for e in range(d.n_edges):
        adj[d.right_region[e]].append((d.left_region[e], colors[e], 1))
        adj[d.left_region[e]].append((d.right_region[e], colors[e], -1))
    base = d.unbounded_region
    results = []
    for y0 in base_values:
        ys = [None] * d.n_regions
        ys[base] = y0
        queue = deque([base])
        ok = True
        while queue and ok:
            r = queue.popleft()
            for r2, x, direction in adj[r]:
                y2 = act.act[ys[r]][x] if direction > 0 else act.inv[ys[r]][x]
                if ys[r2] is None:
                    ys[r2] = y2
                    queue.append(r2)
                elif ys[r2] != y2:
                    ok = False
                    break
        if not ok or any(y is None for y in ys):
            continue
        if all(ys[r] == y for r, y in fixed.items()):
            results.append(tuple(ys))
    return results


def enumerate_colorings(d, s, act, constraints=None):
    """Canonical (X, rho)_Y-colorings of ``d``, sorted.

    ``constraints`` maps traced face indices to required Y elements.
    """
    fixed = {}
    for f, y in (constraints or {}).items():
        if not 0 <= f < len(d.face_region):
            raise InvalidFaceIndex(f"face {f} out of range")
        r = d.face_region[f]
        if fixed.get(r, y) != y:
            return []
        fixed[r] = y
    base = d.unbounded_region
    base_values = [fixed[base]] if base in fixed else range(act.size)
    out = []
    for colors in _arc_colorings(d, s):
        for ys in _region_colorings(d, act, colors, base_values, fixed):
            out.append(Coloring(colors, ys))
    return sorted(out)


def is_coloring(d, s, act, c):
    """Direct check of every coloring condition (independent of the search)."""
    x = c.arc_color
    for cr in d.crossings:
        if x[cr[1]] != x[cr[3]]:
            return False
    for a, o, b in under_relations(d):
        if s.op[x[a]][x[o]] != x[b]:
            return False
    y = c.region_color
    return all(act.act[y[d.right_region[e]]][x[e]] == y[d.left_region[e]] for e in range(d.n_edges))


def reorient(c, d, s, flips):
    """Canonical coloring after reversing the components in ``flips``.

    The result is a coloring of ``d.with_orientation(flips)``.
    """
    flips = _pad(flips, d.n_components)
    arcs = tuple(s.rho[x] if flips[d.component[e]] else x for e, x in enumerate(c.arc_color))
    return Coloring(arcs, c.region_color)


# -- PD manipulation ---------------------------------------------------------

def mirror(pd):
    """Switch every crossing; the planar picture is unchanged."""
    components, tail, head = _orient(pd)
    out = []
    for c, cr in enumerate(pd.crossings):
        incoming_over = 1 if head[cr[1]] == (c, 1) else 3
        out.append(tuple(cr[(incoming_over + k) % 4] for k in range(4)))
    return PDCode(tuple(out), pd.loops)


def reverse_components(pd, flips):
    """An equivalent PD code whose reference orientation reverses ``flips``.

    Edges are relabeled so that labels increase along the new orientation.
    """
    components, tail, head = _orient(pd, flips)
    newlab = {}
    nxt = 1
    for k, comp in enumerate(components):
        order = comp[::-1] if k < len(flips) and flips[k] else comp
        if k < len(flips) and flips[k] and len(order) > 1:
            order = order[-1:] + order[:-1]
        for lab in order:
            newlab[lab] = nxt
            nxt += 1
    out = []
    for c, cr in enumerate(pd.crossings):
        start = 0 if head[cr[0]] == (c, 0) else 2
        out.append(tuple(newlab[cr[(start + k) % 4]] for k in range(4)))
    return PDCode(tuple(out), tuple(newlab[l] for l in pd.loops))


def closed_two_braid(k):
    """PD code of the closure of sigma_1^k (k != 0), both strands upward.

    Positive k gives crossings of sign +1.  Even |k| yields a 2-component
    link with linking number k/2.
    """
    if k == 0:
        raise PDError("use loop records for the trivial braid")
    n = abs(k)
    # edge (p, j): position p in {0, 1} just below crossing j
    order, seen = [], set()
    for start in ((0, 0), (1, 0)):
        comp = []
        p, j = start
        while (p, j) not in seen:
            seen.add((p, j))
            comp.append((p, j))
            p, j = 1 - p, (j + 1) % n
        if comp:
            order.append(comp)
    label = {}
    for comp in order:
        for e in comp:
            label[e] = len(label) + 1
    out = []
    for j in range(n):
        bl, br = label[(0, j)], label[(1, j)]
        tl, tr = label[(0, (j + 1) % n)], label[(1, (j + 1) % n)]
        out.append((br, tr, tl, bl) if k > 0 else (bl, br, tr, tl))
    return PDCode(tuple(out))


def add_kink(pd, lab, style=0):
    """Insert a Reidemeister I curl on edge ``lab``; ``style`` picks one of three shapes."""
    components, tail, head = _orient(pd)
    if lab not in tail or tail[lab] is None:
        raise PDError(f"no crossing edge labeled {lab}")

    def shift(v):
        return v + 2 if v > lab else v

    crossings = [list(map(shift, cr)) for cr in pd.crossings]
    hc, hp = head[lab]
    crossings[hc][hp] = lab + 2
    a, l, b = lab, lab + 1, lab + 2
    new = [(a, b, l, l), (a, l, l, b), (l, a, b, l)][style]
    crossings.append(new)
    return PDCode(tuple(map(tuple, crossings)), tuple(shift(v) for v in pd.loops))
