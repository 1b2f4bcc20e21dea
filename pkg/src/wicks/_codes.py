"""Low-level operations on words encoded as tuples of signed integers.

A letter is a nonzero int: ``+k`` is the base ``k`` and ``-k`` its inverse.
Positions of a word of length ``n`` double as the darts (sides of the glued
``n``-gon): side ``i`` runs from polygon corner ``i`` to corner ``i + 1``.
Gluing side ``i`` to its partner ``j`` identifies corner ``i`` with corner
``j + 1``, so vertices of the glued graph are the cycles of
``i -> partner[i] + 1``.

Canonical keys are tuples in the *rank encoding*: the ``k``-th base in order
of first occurrence is written ``2k`` and its inverse ``2k + 1``.
"""

from __future__ import annotations

from . import errors


def partners(codes):
    """Position of the inverse occurrence of every letter.

    Raises UnpairedLetter unless every base occurs once with each sign.
    """
    first = {}
    for i, c in enumerate(codes):
        if c == 0:
            raise errors.UnpairedLetter("letter code 0 is not allowed")
        if c in first:
            raise errors.UnpairedLetter(f"letter {c} occurs more than once")
        first[c] = i
    out = [0] * len(codes)
    for c, i in first.items():
        j = first.get(-c)
        if j is None:
            raise errors.UnpairedLetter(f"letter {-c} is missing")
        out[i] = j
    return out


def check(codes):
    """Check the three Wicks conditions; return the partner array."""
    n = len(codes)
    if n == 0:
        raise errors.UnpairedLetter("empty word")
    if n % 2:
        raise errors.OddLength(f"word has odd length {n}")
    p = partners(codes)
    for i in range(n):
        nxt = (i + 1) % n
        if p[i] == nxt:
            raise errors.Cancellation(f"cyclic factor at positions {i},{nxt} cancels")
        # factor u v at (i, i+1) paired with v^-1 u^-1 at (p[i+1], p[i])
        if (p[nxt] + 1) % n == p[i]:
            raise errors.ReduciblePair(
                f"cyclic factors at positions {i} and {p[nxt]} are mutually inverse"
            )
    return p


def vertex_cycles(p):
    """Corner orbits of ``i -> p[i] + 1``, each starting at its least corner."""
    n = len(p)
    seen = [False] * n
    cycles = []
    for i in range(n):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = (p[j] + 1) % n
        cycles.append(cyc)
    return cycles


def is_maximal_partner(p):
    """True iff every corner orbit has length exactly three."""
    n = len(p)
    if n % 6:
        return False
    for i in range(n):
        j = (p[i] + 1) % n
        if j == i:
            return False
        k = (p[j] + 1) % n
        if k == i or (p[k] + 1) % n != i:
            return False
    return True


def relabel(codes, start):
    """Rank encoding of the rotation of ``codes`` starting at ``start``."""
    n = len(codes)
    seq = codes[start:] + codes[:start]
    rank = {}
    out = []
    for c in seq:
        k = rank.get(-c)
        if k is None:
            k = len(rank)
            rank[c] = k
            out.append(2 * k)
        else:
            out.append(2 * k + 1)
    assert len(out) == n
    return tuple(out)


def stabilizer(codes):
    """Canonical key and the list of rotations realising it."""
    codes = tuple(codes)
    best = None
    rots = []
    for s in range(len(codes)):
        r = relabel(codes, s)
        if best is None or r < best:
            best = r
            rots = [s]
        elif r == best:
            rots.append(s)
    return best, rots


def canonical(codes):
    codes = tuple(codes)
    return min(relabel(codes, s) for s in range(len(codes)))


def from_rank(key):
    """Signed codes (bases numbered from 1) of a rank-encoded word."""
    return tuple((x >> 1) + 1 if x % 2 == 0 else -((x >> 1) + 1) for x in key)
