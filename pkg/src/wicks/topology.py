"""Gluing a Wicks form into a graph on a closed surface.

Position ``i`` of the word is a dart: the side of the polygon leaving corner
``i``.  The darts leaving one vertex of the glued graph are a cycle of
``i -> partner[i] + 1``; going once around that cycle is going once around
the vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _codes, errors
from .words import WicksForm

POSITIVE = "positive"
NEGATIVE = "negative"


@dataclass(frozen=True)
class SurfaceMap:
    word: str
    edge_pairing: tuple[int, ...]
    vertex_cycles: tuple[tuple[int, ...], ...]
    genus: int

    @property
    def darts(self) -> range:
        return range(len(self.edge_pairing))

    @property
    def v(self) -> int:
        return len(self.vertex_cycles)

    @property
    def e(self) -> int:
        return len(self.edge_pairing) // 2

    def vertex_of(self) -> list[int]:
        """Vertex id of every dart."""
        out = [0] * len(self.edge_pairing)
        for k, cyc in enumerate(self.vertex_cycles):
            for d in cyc:
                out[d] = k
        return out

    def degrees(self) -> list[int]:
        return [len(c) for c in self.vertex_cycles]

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "darts": len(self.edge_pairing),
            "edge_pairing": list(self.edge_pairing),
            "vertex_cycles": [list(c) for c in self.vertex_cycles],
            "v": self.v,
            "e": self.e,
            "genus": self.genus,
        }


def glue(f: WicksForm) -> SurfaceMap:
    cycles = tuple(tuple(c) for c in _codes.vertex_cycles(f.partner))
    return SurfaceMap(str(f.word), tuple(f.partner), cycles, f.genus)


@dataclass(frozen=True)
class VertexSign:
    signs: tuple[str, ...]  # indexed by vertex id of glue(f)

    @property
    def n_pos(self) -> int:
        return self.signs.count(POSITIVE)

    @property
    def n_neg(self) -> int:
        return self.signs.count(NEGATIVE)

    @property
    def counts(self) -> tuple[int, int]:
        return self.n_pos, self.n_neg


def _require_maximal(f: WicksForm):
    if not f.is_maximal:
        raise errors.NotMaximal(
            f"form of length {f.length} and genus {f.genus} is not maximal"
        )


def cycle_sign(cycle) -> str:
    """Sign of a trivalent vertex given as its corner cycle ``(i, s(i), s(s(i)))``.

    Positive when reading the word from the vertex's first corner meets the
    other two corners in rotation order.
    """
    i = min(range(3), key=lambda t: cycle[t])
    c = tuple(cycle[i:]) + tuple(cycle[:i])
    return POSITIVE if c[1] < c[2] else NEGATIVE


def vertex_signs(f: WicksForm) -> VertexSign:
    _require_maximal(f)
    return VertexSign(tuple(cycle_sign(c) for c in glue(f).vertex_cycles))


@dataclass(frozen=True)
class DualTriangulation:
    triangles: tuple[tuple[str, str, str], ...]
    edges: dict = field(compare=False)  # base -> (triangle, triangle)

    vertices = 1

    def euler_characteristic(self) -> int:
        return self.vertices - len(self.edges) + len(self.triangles)

    def to_json(self) -> dict:
        return {
            "vertices": self.vertices,
            "triangles": [list(t) for t in self.triangles],
            "edges": {b: list(pair) for b, pair in self.edges.items()},
            "euler_characteristic": self.euler_characteristic(),
        }


def dual(f: WicksForm) -> DualTriangulation:
    """One triangle per vertex of the glued graph, sides named by its edges."""
    _require_maximal(f)
    m = glue(f)
    owner = m.vertex_of()
    n = f.length
    triangles = tuple(tuple(f.word[d].base for d in cyc) for cyc in m.vertex_cycles)
    edges = {}
    for i, x in enumerate(f.word):
        if x.sign > 0:
            edges[x.base] = (owner[i], owner[(i + 1) % n])
    return DualTriangulation(triangles, edges)
