"""Spiral growth of animals on a lazily built {p,q} tessellation.

The animal is kept as a combinatorial map: tiles are vertex cycles, every
vertex knows how many tiles surround it, edges know which tiles use them,
and the outer face is a doubly linked cycle of boundary vertices. No
coordinates are needed; the tessellation is generated only where the animal
touches it.

A new tile is glued onto one boundary edge and then, whenever a vertex at an
end of the glued run would reach ``q`` tiles, the tile is also glued along
the next boundary edge. That is the only way a {p,q} vertex figure can close.

Tiles are added layer by layer. Within a layer the boundary vertices of the
previous complete layer are visited in order starting after a marked start
vertex; tiles are attached on the edge entering the first unsaturated one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .context import TessContext
from .errors import DomainError, PartialLayerError
from .words import DegreeWord

__all__ = [
    "AnimalState",
    "new_animal",
    "grow_to",
    "boundary_degree_word",
    "perimeter_sequence",
]


def _ekey(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(eq=False)
class AnimalState:
    p: int
    q: int
    tiles: list = field(default_factory=list)
    # (parent tile, u, v): tile was reflected off parent across edge u-v
    parents: list = field(default_factory=list)
    count: list = field(default_factory=list)
    edges: dict = field(default_factory=dict)
    nxt: dict = field(default_factory=dict)
    prv: dict = field(default_factory=dict)
    perimeter: int = 0
    interior_edges: int = 0
    layer: int = 1
    layer_sizes: list = field(default_factory=list)
    start: int = 0
    _layer_vertices: list = field(default_factory=list, repr=False)
    _ptr: int = 0
    _first_new: int | None = None

    @property
    def n(self) -> int:
        return len(self.tiles)

    @property
    def layer_complete(self) -> bool:
        """True when the animal is exactly a complete layered animal."""
        return self.n == self.layer_sizes[-1]

    def boundary_cycle(self, start: int | None = None) -> list[int]:
        """Boundary vertices in cyclic order, beginning after ``start``."""
        s = self.start if start is None else start
        out = []
        v = self.nxt[s]
        while True:
            out.append(v)
            if v == s:
                return out
            v = self.nxt[v]

    def is_boundary(self, v: int) -> bool:
        return v in self.nxt

    def vertex_degree(self, v: int) -> int:
        """Edges at v inside the animal."""
        c = self.count[v]
        return c + 1 if self.is_boundary(v) else c

    def tile_neighbors(self, t: int) -> list[int]:
        cyc = self.tiles[t]
        out = []
        for i in range(len(cyc)):
            users = self.edges[_ekey(cyc[i], cyc[(i + 1) % len(cyc)])]
            out.extend(u for u in users if u != t)
        return out

    # -- growth ----------------------------------------------------------------

    def _begin_layer(self) -> None:
        self._layer_vertices = self.boundary_cycle(self.start)
        self._ptr = 0
        self._first_new = None

    def _new_vertex(self) -> int:
        self.count.append(0)
        return len(self.count) - 1

    def attach(self) -> int:
        """Attach the next tile of the spiral; returns its id."""
        q = self.q
        L = self._layer_vertices
        while self.count[L[self._ptr]] == q:
            self._ptr += 1
        c = L[self._ptr]
        run = [self.prv[c], c]
        while self.count[run[-1]] + 1 == q:
            w = self.nxt[run[-1]]
            if w == run[0]:
                raise RuntimeError("tile would close the entire boundary")
            run.append(w)
        while self.count[run[0]] + 1 == q:
            w = self.prv[run[0]]
            if w == run[-1]:
                raise RuntimeError("tile would close the entire boundary")
            run.insert(0, w)
        e = len(run) - 1
        fresh = self.p - e - 1
        if fresh < 0:
            raise RuntimeError(f"tile glued along {e} edges exceeds p={self.p}")

        t = len(self.tiles)
        parent = self.edges[_ekey(run[0], run[1])][0]
        z = [self._new_vertex() for _ in range(fresh)]
        if self._first_new is None and z:
            self._first_new = z[0]
        self.tiles.append(tuple(run) + tuple(reversed(z)))
        self.parents.append((parent, run[0], run[1]))

        for v in run:
            self.count[v] += 1
        for a, b in zip(run, run[1:]):
            self.edges[_ekey(a, b)].append(t)
        outer = [run[0], *z, run[-1]]
        for a, b in zip(outer, outer[1:]):
            self.edges[_ekey(a, b)] = [t]
        for v in run[1:-1]:
            assert self.count[v] == q
            del self.nxt[v]
            del self.prv[v]
        for a, b in zip(outer, outer[1:]):
            self.nxt[a] = b
            self.prv[b] = a
        for v in z:
            self.count[v] = 1

        self.perimeter += self.p - 2 * e
        self.interior_edges += e

        while self._ptr < len(L) and self.count[L[self._ptr]] == q:
            self._ptr += 1
        if self._ptr == len(L):
            # layer closed: the next one starts just before the first vertex
            # created in this layer
            self.layer += 1
            self.layer_sizes.append(self.n)
            self.start = self.prv[self._first_new]
            self._begin_layer()
        return t

    # -- export -------------------------------------------------------------------

    def snapshot(self) -> dict:
        """JSON-ready adjacency plus boundary cycle."""
        return {
            "p": self.p,
            "q": self.q,
            "n": self.n,
            "perimeter": self.perimeter,
            "layer": self.layer if self.layer_complete else self.layer + 1,
            "layer_complete": self.layer_complete,
            "tiles": [list(t) for t in self.tiles],
            "edges": [[u, v, len(ts)] for (u, v), ts in sorted(self.edges.items())],
            "boundary": self.boundary_cycle(),
            "start_vertex": self.start,
            "vertex_tile_counts": list(self.count),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.snapshot(), **kw)


def new_animal(ctx: TessContext) -> AnimalState:
    """A single p-gon: the complete 1-layered animal."""
    ctx.require_planar()
    p = ctx.p
    st = AnimalState(p, ctx.q)
    st.tiles.append(tuple(range(p)))
    st.parents.append(None)
    st.count = [1] * p
    for i in range(p):
        j = (i + 1) % p
        st.edges[_ekey(i, j)] = [0]
        st.nxt[i] = j
        st.prv[j] = i
    st.perimeter = p
    st.layer_sizes = [1]
    st.start = 0
    st._begin_layer()
    return st


def grow_to(state: AnimalState, n: int) -> AnimalState:
    if n < state.n:
        raise DomainError(f"cannot shrink an animal from {state.n} to {n} tiles")
    while state.n < n:
        state.attach()
    return state


def boundary_degree_word(state: AnimalState) -> DegreeWord:
    """Degrees of the boundary vertices read from the layer-start vertex.

    Only meaningful for complete layered animals; otherwise raises
    :class:`PartialLayerError` with the word attached.
    """
    word = DegreeWord(
        bytes(state.vertex_degree(v) for v in state.boundary_cycle()), state.p, state.q
    )
    if not state.layer_complete:
        raise PartialLayerError(f"n={state.n} is not a complete layer", word)
    return word


def perimeter_sequence(ctx: TessContext, n_max: int) -> list[int]:
    """Spiral perimeters for n = 1..n_max (index 0 holds n = 1)."""
    st = new_animal(ctx)
    out = [st.perimeter]
    while st.n < n_max:
        st.attach()
        out.append(st.perimeter)
    return out
