"""Plain-text file formats.

Every format is line oriented; ``#`` starts a comment and blank lines are
ignored.  Elements may be written as indices or as labels when the owning
quandle / X-set declares labels.

quandle::

    quandle <n>
    <n rows of n entries>          row x, column y holds x▷y
    rho <n entries>                optional
    labels <n tokens>              optional

xset (action of X on Y)::

    xset <|Y|> <|X|>
    <|Y| rows of |X| entries>      row y, column x holds y·x
    labels <|Y| tokens>            optional

presentation::

    gen <k>
    +0 -1 +2 ...                   one relator per line

cocycle::

    cocycle deg=<n> coeff=<Z|Z/m> [variant=<R|Q|Rrho|Qrho>]
    y x1 .. xn value

chain::

    chain deg=<n>
    coeff y x1 .. xn

surface (colored triple point data)::

    surface coloring <id>
    <+1|-1> y x1 x2 x3
"""

from __future__ import annotations

import re

from .chains import Chain, Cocycle, Coefficients, Variant
from .groups import GroupPresentation, validate_xset
from .invariants import ColoredTriplePointData, WeightTerm
from .quandle import make_symmetric, validate_quandle


class FormatError(ValueError):
    def __init__(self, line, msg):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line else msg)


def _lines(text):
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line.split()


def _int(tok, line):
    try:
        return int(tok)
    except ValueError:
        raise FormatError(line, f"expected an integer, got {tok!r}") from None


# -- quandles ----------------------------------------------------------------

def parse_quandle(text):
    """Return a SymmetricQuandle (rho defaults to the identity).

    Table validation errors from the core module propagate unchanged.
    """
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "quandle" or len(lines[0][1]) != 2:
        raise FormatError(lines[0][0] if lines else 0, "expected header 'quandle <n>'")
    n = _int(lines[0][1][1], lines[0][0])
    rows = lines[1:1 + n]
    if len(rows) < n:
        raise FormatError(0, f"expected {n} table rows")
    labels = rho_toks = None
    for ln, toks in lines[1 + n:]:
        if toks[0] == "rho":
            rho_toks = (ln, toks[1:])
        elif toks[0] == "labels":
            labels = toks[1:]
            if len(labels) != n:
                raise FormatError(ln, f"expected {n} labels")
        else:
            raise FormatError(ln, f"unexpected record {toks[0]!r}")

    def elem(tok, ln):
        if labels and tok in labels:
            return labels.index(tok)
        return _int(tok, ln)

    table = []
    for ln, toks in rows:
        if len(toks) != n:
            raise FormatError(ln, f"expected {n} entries")
        table.append([elem(t, ln) for t in toks])
    q = validate_quandle(table, labels)
    if rho_toks is None:
        rho = list(range(n))
    else:
        ln, toks = rho_toks
        if len(toks) != n:
            raise FormatError(ln, f"expected {n} rho entries")
        rho = [elem(t, ln) for t in toks]
    return make_symmetric(q, rho)


def write_quandle(s):
    q = s.quandle
    out = [f"quandle {q.n}"]
    out += [" ".join(map(str, row)) for row in q.op]
    out.append("rho " + " ".join(map(str, s.rho)))
    if q.labels:
        out.append("labels " + " ".join(q.labels))
    return "\n".join(out) + "\n"


# -- X-sets --------------------------------------------------------------------

def parse_xset(text, s):
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "xset" or len(lines[0][1]) != 3:
        raise FormatError(lines[0][0] if lines else 0, "expected header 'xset <|Y|> <|X|>'")
    ny, nx = (_int(t, lines[0][0]) for t in lines[0][1][1:])
    if nx != s.n:
        raise FormatError(lines[0][0], f"X-set is for |X|={nx}, quandle has {s.n}")
    rows = lines[1:1 + ny]
    if len(rows) < ny:
        raise FormatError(0, f"expected {ny} rows")
    labels = None
    for ln, toks in lines[1 + ny:]:
        if toks[0] != "labels" or len(toks) != ny + 1:
            raise FormatError(ln, "unexpected record")
        labels = toks[1:]
    table = []
    for ln, toks in rows:
        if len(toks) != nx:
            raise FormatError(ln, f"expected {nx} entries")
        table.append([labels.index(t) if labels and t in labels else _int(t, ln) for t in toks])
    return validate_xset(s, table, labels)


def write_xset(act):
    out = [f"xset {act.size} {len(act.act[0])}"]
    out += [" ".join(map(str, row)) for row in act.act]
    if act.labels:
        out.append("labels " + " ".join(act.labels))
    return "\n".join(out) + "\n"


# -- presentations -------------------------------------------------------------

_LETTER = re.compile(r"^([+-])(\d+)$")


def parse_presentation(text):
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "gen":
        raise FormatError(lines[0][0] if lines else 0, "expected header 'gen <k>'")
    k = _int(lines[0][1][1], lines[0][0])
    rels = []
    for ln, toks in lines[1:]:
        word = []
        for t in toks:
            m = _LETTER.match(t)
            if not m or int(m.group(2)) >= k:
                raise FormatError(ln, f"bad letter {t!r}")
            word.append((int(m.group(2)), 1 if m.group(1) == "+" else -1))
        rels.append(tuple(word))
    return GroupPresentation(k, tuple(rels))


def write_presentation(p):
    return str(p) + "\n"


# -- chains and cocycles -------------------------------------------------------

def _header(toks, ln, kind):
    if toks[0] != kind:
        raise FormatError(ln, f"expected header '{kind} ...'")
    opts = {}
    for t in toks[1:]:
        if "=" not in t:
            raise FormatError(ln, f"expected key=value, got {t!r}")
        k, v = t.split("=", 1)
        opts[k] = v
    return opts


def _resolver(s, act):
    def x(tok, ln):
        if s is not None and s.quandle.labels and tok in s.quandle.labels:
            return s.quandle.labels.index(tok)
        return _int(tok, ln)

    def y(tok, ln):
        if act is not None and act.labels and tok in act.labels:
            return act.labels.index(tok)
        return _int(tok, ln)

    return x, y


def parse_cocycle(text, s=None, act=None):
    lines = list(_lines(text))
    if not lines:
        raise FormatError(0, "empty cocycle file")
    ln0, toks = lines[0]
    opts = _header(toks, ln0, "cocycle")
    try:
        deg = int(opts["deg"])
        coeff = Coefficients.parse(opts.get("coeff", "Z"))
        variant = Variant(opts.get("variant", "Qrho"))
    except (KeyError, ValueError) as exc:
        raise FormatError(ln0, f"bad header: {exc}") from None
    rx, ry = _resolver(s, act)
    table = {}
    for ln, toks in lines[1:]:
        if len(toks) != deg + 2:
            raise FormatError(ln, f"expected {deg + 2} fields")
        t = (ry(toks[0], ln),) + tuple(rx(v, ln) for v in toks[1:-1])
        table[t] = table.get(t, 0) + _int(toks[-1], ln)
    return Cocycle(deg, coeff, table, variant)


def write_cocycle(theta, s=None, act=None):
    out = [f"cocycle deg={theta.degree} coeff={theta.coefficients} variant={theta.variant.value}"]
    for t, v in sorted(theta.table.items()):
        out.append(" ".join(_names(t, s, act)) + f" {v}")
    return "\n".join(out) + "\n"


def _names(t, s, act):
    y = act.label(t[0]) if act is not None else str(t[0])
    xs = [s.quandle.label(x) if s is not None else str(x) for x in t[1:]]
    return [y] + xs


def parse_chain(text, s=None, act=None):
    lines = list(_lines(text))
    if not lines:
        raise FormatError(0, "empty chain file")
    ln0, toks = lines[0]
    opts = _header(toks, ln0, "chain")
    try:
        deg = int(opts["deg"])
    except (KeyError, ValueError):
        raise FormatError(ln0, "bad header: need deg=<n>") from None
    rx, ry = _resolver(s, act)
    terms = []
    for ln, toks in lines[1:]:
        if len(toks) != deg + 2:
            raise FormatError(ln, f"expected {deg + 2} fields")
        t = (ry(toks[1], ln),) + tuple(rx(v, ln) for v in toks[2:])
        terms.append((t, _int(toks[0], ln)))
    return Chain(deg, terms)


def write_chain(c, s=None, act=None):
    out = [f"chain deg={c.degree}"]
    out += [f"{k} " + " ".join(_names(t, s, act)) for t, k in c.items()]
    return "\n".join(out) + "\n"


def parse_surface(text, s=None, act=None):
    rx, ry = _resolver(s, act)
    groups = []
    cur = None
    for ln, toks in _lines(text):
        if toks[0] == "surface":
            if len(toks) != 3 or toks[1] != "coloring":
                raise FormatError(ln, "expected 'surface coloring <id>'")
            cur = (toks[2], [])
            groups.append(cur)
            continue
        if cur is None:
            raise FormatError(ln, "weight line before any 'surface coloring' header")
        if len(toks) != 5:
            raise FormatError(ln, "expected '<sign> y x1 x2 x3'")
        sign = _int(toks[0], ln)
        if sign not in (1, -1):
            raise FormatError(ln, f"sign must be +1 or -1, got {toks[0]}")
        t = (ry(toks[1], ln),) + tuple(rx(v, ln) for v in toks[2:])
        cur[1].append(WeightTerm(sign, t))
    return ColoredTriplePointData(tuple((cid, tuple(ts)) for cid, ts in groups))


def write_surface(data, s=None, act=None):
    out = []
    for cid, terms in data.groups:
        out.append(f"surface coloring {cid}")
        out += [f"{w.sign:+d} " + " ".join(_names(w.tuple, s, act)) for w in terms]
    return "\n".join(out) + "\n"
