"""IH-transformations, reductions at negative vertices and their inverses.

The alpha/beta/gamma constructions attach a small gadget to one, two or
three *attachment points* on the boundary of the parent's polygon.  An
attachment point lies inside a letter occurrence; it is given either as a
position ``p`` (the midpoint of that occurrence) or as ``(p, frac)`` with
``0 < frac < 1`` measured along the occurrence in reading order.  Several
points may sit on the same edge, on either of its two sides, which is how
the degenerate identifications between the split edges arise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import _codes, errors
from .topology import NEGATIVE, cycle_sign
from .words import Letter, WicksForm, Word, base_name

TYPE1, TYPE2A, TYPE2B = "type1", "type2a", "type2b"
ALPHA, BETA, GAMMA = "alpha", "beta", "gamma"
ARITY = {ALPHA: 1, BETA: 2, GAMMA: 3}


class ValidationFailed(errors.WicksError):
    pass


def _fresh_names(used, count):
    out = []
    k = 0
    while len(out) < count:
        name = base_name(k)
        if name not in used:
            out.append(name)
            used.add(name)
        k += 1
    return out


# -- IH-transformation -------------------------------------------------------

@dataclass(frozen=True)
class IHResult:
    result: WicksForm
    move_type: str
    new_edge: Letter


def ih_transform(f: WicksForm, x: Letter | str) -> IHResult:
    """Contract edge ``x`` and resplit the 4-valent vertex the other way."""
    if not f.is_maximal:
        raise errors.NotMaximal("IH-transformations act on maximal forms")
    name = x.base if isinstance(x, Letter) else x
    w = list(f.word)
    n = len(w)
    where = {letter: i for i, letter in enumerate(w)}
    X = Letter(name, 1)
    if X not in where:
        raise errors.UnknownBase(f"base {name!r} does not occur in the form")
    p, q = where[X], where[X.inverse()]
    a, b = w[p - 1], w[(p + 1) % n]
    c, d = w[q - 1], w[(q + 1) % n]
    inv = Letter.inverse
    # (c, d) = (a', b') only happens on the genus-1 theta graph, where it is type 2a
    if b == inv(a) or c == inv(b) or d == inv(a) or d == inv(c) \
            or (f.genus > 1 and (c, d) == (inv(a), inv(b))):
        raise errors.MalformedNeighborhood(f"impossible neighbourhood around {name!r}")
    used = {letter.base for letter in w}
    y = Letter("y" if "y" not in used else _fresh_y(used), 1)
    Y = inv(y)

    if c == inv(a):
        # b' a x b -> b' y a b ; d' a' x' d -> d' y' a' d
        w[(p - 1) % n], w[p] = y, a
        w[(q - 1) % n], w[q] = Y, inv(a)
        kind = TYPE2A
    elif d == inv(b):
        # a x b a' -> a b y a' ; c x' b' c' -> c b' y' c'
        w[p], w[(p + 1) % n] = b, y
        w[q], w[(q + 1) % n] = inv(b), Y
        kind = TYPE2B
    else:
        i, j = where[inv(d)], where[inv(b)]
        if w[(i + 1) % n] != inv(a) or w[(j + 1) % n] != inv(c):
            raise errors.MalformedNeighborhood(
                f"type-1 factors d'a' and b'c' missing around {name!r}")
        out = []
        for k, letter in enumerate(w):
            if k in (p, q):
                continue
            out.append(letter)
            if k == i:
                out.append(y)
            if k == j:
                out.append(Y)
        w = out
        kind = TYPE1
    return IHResult(WicksForm(Word(w)), kind, y)


def _fresh_y(used):
    k = 1
    while f"y{k}" in used:
        k += 1
    return f"y{k}"


# -- reduction ---------------------------------------------------------------

@dataclass(frozen=True)
class ReductionResult:
    parent: WicksForm
    reduction_type: str
    certificate: tuple[int, ...]  # positions of the removed darts


def classify(partner, cycles, v):
    """Reduction type of vertex ``v`` and the vertices its reduction removes."""
    n = len(partner)
    owner = [0] * n
    for k, cyc in enumerate(cycles):
        for dart in cyc:
            owner[dart] = k
    nbs = [owner[(dart + 1) % n] for dart in cycles[v]]
    if v in nbs:
        raise errors.NoParent(f"vertex {v} carries a loop")
    distinct = set(nbs)
    if len(distinct) == 1:
        raise errors.NoParent("genus-1 theta graph has no parent")
    if len(distinct) == 3:
        return GAMMA, (v,)
    n1 = max(distinct, key=nbs.count)
    n2 = min(distinct, key=nbs.count)
    if any(owner[(dart + 1) % n] == n2 for dart in cycles[n1]):
        return ALPHA, (v, n1, n2)
    return BETA, (v, n1)


def _remove_and_smooth(partner, cycles, removed_vertices):
    """Delete vertices with their edges, smooth degree-2 vertices, read the face."""
    n = len(partner)
    gone = set()
    for v in removed_vertices:
        for dart in cycles[v]:
            gone.add(dart)
            gone.add(partner[dart])
    iota = {d: partner[d] for d in range(n) if d not in gone}

    def sigma(d):
        return (partner[d] + 1) % n

    rot = {}
    for d in iota:
        e = sigma(d)
        while e in gone:
            e = sigma(e)
        rot[d] = e
    seen = set()
    for d in list(rot):
        if d in seen:
            continue
        cyc = [d]
        e = rot[d]
        while e != d:
            cyc.append(e)
            e = rot[e]
        seen.update(cyc)
        if len(cyc) == 2:
            p, q = cyc
            if iota[p] == q:
                raise errors.NoParent("smoothing would leave a vertexless loop")
            ip, iq = iota[p], iota[q]
            iota[ip], iota[iq] = iq, ip
            del iota[p], iota[q], rot[p], rot[q]
        elif len(cyc) < 2:
            raise errors.NoParent("reduction leaves a vertex of degree 1")
    # face permutation: phi = rot o iota
    start = min(iota)
    face = [start]
    d = rot[iota[start]]
    while d != start:
        face.append(d)
        d = rot[iota[d]]
    if len(face) != len(iota):
        raise errors.NoParent("reduction disconnects the face")
    index = {}
    codes = []
    for d in face:
        if iota[d] in index:
            codes.append(-index[iota[d]])
        else:
            index[d] = len(index) + 1
            codes.append(index[d])
    return tuple(codes), tuple(sorted(gone))


def reduce_codes(codes, partner, v):
    cycles = _codes.vertex_cycles(partner)
    if cycle_sign(cycles[v]) != NEGATIVE:
        raise errors.PositiveVertex(f"vertex {v} is positive")
    kind, removed = classify(partner, cycles, v)
    parent, gone = _remove_and_smooth(partner, cycles, removed)
    return parent, kind, gone


def reduce(f: WicksForm, v: int) -> ReductionResult:
    """Reduce a maximal form of genus g at negative vertex ``v`` to genus g - 1.

    Vertex ids index the corner cycles of :func:`wicks.topology.glue`.
    """
    if not f.is_maximal:
        raise errors.NotMaximal("reduction acts on maximal forms")
    if f.genus == 1:
        raise errors.NoParent("genus-1 forms have no parent")
    nv = f.vertex_count
    if not 0 <= v < nv:
        raise IndexError(f"vertex id {v} out of range 0..{nv - 1}")
    codes, kind, gone = reduce_codes(f.codes, f.partner, v)
    parent = WicksForm(Word(Letter(base_name(abs(c) - 1), 1 if c > 0 else -1)
                            for c in codes))
    if not parent.is_maximal or parent.genus != f.genus - 1:
        raise AssertionError("reduction produced a non-maximal parent")
    return ReductionResult(parent, kind, gone)


def negative_vertices(f: WicksForm) -> list[int]:
    return [k for k, c in enumerate(_codes.vertex_cycles(f.partner))
            if len(c) == 3 and cycle_sign(c) == NEGATIVE]


# -- constructions -----------------------------------------------------------

_CUT = "cut"


def _gadget(kind, arcs, nb):
    a, b, c, d, e = range(nb, nb + 5)
    if kind == ALPHA:
        return [a, b, c, d, -b, e, -c, -d, -e, -a] + arcs[0], 2
    if kind == BETA:
        return [a, b, c, -a] + arcs[0] + [d, -b, -c, -d] + arcs[1], 3
    return [a, -b] + arcs[1] + [c, -a] + arcs[0] + [b, -c] + arcs[2], 1


def attach(codes, partner, points, kind):
    """Glue the ``kind`` gadget at ``points``; return (codes, marker) or None.

    ``points`` lists ``(position, t)`` per role, ``t`` being the location
    along the edge in the direction of its positive occurrence.  ``marker``
    is the position of a corner of the new negative vertex.  Returns None
    when the attachment order is incompatible with the gadget.
    """
    n = len(codes)
    on_edge = {}
    for role, (pos, t) in enumerate(points):
        on_edge.setdefault(abs(codes[pos]), []).append((t, role, codes[pos] > 0))
    nb = max(abs(c) for c in codes) + 1
    pieces = {}
    for edge, pts in on_edge.items():
        pts.sort()
        for i in range(1, len(pts)):
            if pts[i][0] == pts[i - 1][0]:
                raise ValueError("two attachment points coincide")
        ids = [edge] + list(range(nb, nb + len(pts)))
        nb += len(pts)
        plus, minus = [ids[0]], [-ids[-1]]
        for j, (_, role, positive) in enumerate(pts):
            if positive:
                plus.append((_CUT, role))
            plus.append(ids[j + 1])
        for j in range(len(pts) - 1, -1, -1):
            if not pts[j][2]:
                minus.append((_CUT, pts[j][1]))
            minus.append(-ids[j])
        pieces[edge] = (plus, minus)
    tokens = []
    for c in codes:
        pm = pieces.get(abs(c))
        if pm is None:
            tokens.append(c)
        else:
            tokens.extend(pm[0] if c > 0 else pm[1])
    cuts = [i for i, tok in enumerate(tokens) if type(tok) is tuple]
    order = [tokens[i][1] for i in cuts]
    k = len(points)
    start = order.index(0)
    order = order[start:] + order[:start]
    if kind == GAMMA and order != [0, 1, 2]:
        return None
    cuts = cuts[start:] + cuts[:start]
    arcs = [None] * k
    m = len(tokens)
    for idx, ci in enumerate(cuts):
        nxt = cuts[(idx + 1) % k]
        if nxt <= ci:
            nxt += m
        arcs[order[idx]] = [tokens[j % m] for j in range(ci + 1, nxt)]
    word, marker = _gadget(kind, arcs, nb)
    return tuple(word), marker


def _is_valid_maximal(codes):
    try:
        p = _codes.check(codes)
    except errors.InvalidForm:
        return None
    return p if _codes.is_maximal_partner(p) else None


def attachment_configs(codes, k):
    """All placements of ``k`` labelled attachment points.

    Yields lists of ``(position, t)``.  Points on a common edge are placed
    in every relative order.
    """
    n = len(codes)
    plus = {}
    for i, c in enumerate(codes):
        if c > 0:
            plus[c] = i
    for positions in itertools.product(range(n), repeat=k):
        groups = {}
        for role, pos in enumerate(positions):
            groups.setdefault(abs(codes[pos]), []).append(role)
        multi = [roles for roles in groups.values() if len(roles) > 1]
        if not multi:
            yield [(pos, 0.5) for pos in positions]
            continue
        for orders in itertools.product(*(itertools.permutations(r) for r in multi)):
            t = [0.5] * k
            for perm in orders:
                for rank, role in enumerate(perm):
                    t[role] = (rank + 1) / (len(perm) + 1)
            yield [(pos, t[role]) for role, pos in enumerate(positions)]


def construct_codes(codes, partner, kind, points):
    """Valid maximal child codes with the marker corner, or None."""
    out = attach(codes, partner, points, kind)
    if out is None:
        return None
    word, marker = out
    if _is_valid_maximal(word) is None:
        return None
    return word, marker


def _points(f: WicksForm, pts):
    out = []
    for pt in pts:
        pos, frac = (pt, 0.5) if isinstance(pt, int) else pt
        if not 0 <= pos < f.length or not 0 < frac < 1:
            raise ValueError(f"bad attachment point {pt!r}")
        out.append((pos, frac if f.codes[pos] > 0 else 1 - frac))
    return out


def construct(parent: WicksForm, kind: str, *points):
    """Build the child form and return it with the id of its new negative vertex."""
    if not parent.is_maximal:
        raise errors.NotMaximal("constructions act on maximal forms")
    if len(points) != ARITY[kind]:
        raise TypeError(f"{kind} construction takes {ARITY[kind]} attachment points")
    res = attach(parent.codes, parent.partner, _points(parent, points), kind)
    if res is None:
        raise ValidationFailed("attachment points are not in gadget order")
    word, marker = res
    names = {abs(c): x.base for c, x in zip(parent.codes, parent.word)}
    fresh = _fresh_names(set(names.values()), len({abs(c) for c in word}) - len(names))
    fresh_iter = iter(fresh)
    for c in word:
        if abs(c) not in names:
            names[abs(c)] = next(fresh_iter)
    letters = Word(Letter(names[abs(c)], 1 if c > 0 else -1) for c in word)
    try:
        child = WicksForm(letters)
    except errors.InvalidForm as exc:
        raise ValidationFailed(str(exc)) from exc
    if not child.is_maximal:
        raise ValidationFailed("construction produced a non-maximal form")
    cycles = _codes.vertex_cycles(child.partner)
    vertex = next(k for k, cyc in enumerate(cycles) if marker in cyc)
    return child, vertex


def alpha_construct(parent: WicksForm, x) -> WicksForm:
    return construct(parent, ALPHA, x)[0]


def beta_construct(parent: WicksForm, x, y) -> WicksForm:
    return construct(parent, BETA, x, y)[0]


def gamma_construct(parent: WicksForm, x, y, z) -> WicksForm:
    return construct(parent, GAMMA, x, y, z)[0]
