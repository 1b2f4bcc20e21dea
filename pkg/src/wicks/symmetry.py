"""Automorphism groups of Wicks forms and the strata they fall into.

An automorphism is a rotation of the linear word which, after renaming
letters, gives the word back.  For a rotation by ``k`` the induced renaming
sends the letter at position ``i`` to the letter at position ``i + k``; an
edge is reversed by it exactly when its two occurrences are ``k`` apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import _codes, errors
from .topology import NEGATIVE, POSITIVE, cycle_sign
from .words import WicksForm


@dataclass(frozen=True)
class SymmetryProfile:
    aut_order: int
    rotations: tuple[int, ...]
    r: Optional[int] = None
    s: Optional[int] = None
    t: Optional[int] = None

    def to_json(self) -> dict:
        return {"d": self.aut_order, "rotations": list(self.rotations),
                "r": self.r, "s": self.s, "t": self.t}


def fixed_edges(partner, k) -> int:
    """Edges reversed by the rotation by ``k``."""
    n = len(partner)
    return sum(1 for i in range(n) if partner[i] == (i + k) % n) // 2


def fixed_vertices(partner, k) -> tuple[int, int]:
    """(positive, negative) trivalent vertices preserved by rotation by ``k``."""
    n = len(partner)
    pos = neg = 0
    for cyc in _codes.vertex_cycles(partner):
        if len(cyc) != 3:
            continue
        if {(c + k) % n for c in cyc} == set(cyc):
            if cycle_sign(cyc) == POSITIVE:
                pos += 1
            else:
                neg += 1
    return pos, neg


def profile_codes(codes, partner, maximal=True):
    """Canonical key and symmetry profile of an encoded form."""
    key, rots = _codes.stabilizer(codes)
    d = len(rots)
    n = len(codes)
    if maximal and 6 % d:
        raise AssertionError(f"maximal form with {d} automorphisms")
    r = s = t = None
    if maximal and d % 2 == 0:
        r = fixed_edges(partner, n // 2)
    if maximal and d % 3 == 0:
        s, t = fixed_vertices(partner, n // 3)
    return key, SymmetryProfile(d, tuple(rots), r, s, t)


def automorphisms(f: WicksForm) -> SymmetryProfile:
    """Rotation subgroup of Aut(f), with stratum data when f is maximal."""
    return profile_codes(f.codes, f.partner, f.is_maximal)[1]


def order2_fixed_edges(f: WicksForm) -> int:
    if not f.is_maximal:
        raise errors.NotMaximal("stratum data is defined for maximal forms only")
    p = automorphisms(f)
    if p.aut_order % 2:
        raise errors.NoOrder2Element(f"automorphism group has order {p.aut_order}")
    return p.r


def order3_fixed_vertices(f: WicksForm) -> tuple[int, int]:
    if not f.is_maximal:
        raise errors.NotMaximal("stratum data is defined for maximal forms only")
    p = automorphisms(f)
    if p.aut_order % 3:
        raise errors.NoOrder3Element(f"automorphism group has order {p.aut_order}")
    return p.s, p.t


__all__ = [
    "SymmetryProfile", "automorphisms", "order2_fixed_edges",
    "order3_fixed_vertices", "fixed_edges", "fixed_vertices", "profile_codes",
    "POSITIVE", "NEGATIVE",
]
