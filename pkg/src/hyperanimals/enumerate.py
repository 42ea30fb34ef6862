"""Exhaustive minimal perimeter for tiny animals.

Connected tile sets containing a fixed origin tile are enumerated on a patch
of the tessellation large enough to contain every such set. Because all
tiles are equivalent under the symmetry group, the anchored minimum is the
true minimum. ``extremal_count`` counts anchored sets, which is not the
number of animals up to isometry.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .context import TessContext, new_context
from .errors import BudgetExceededError, DomainError, budget
from .spiral import grow_to, new_animal

__all__ = ["SearchConfig", "SearchResult", "tile_patch", "min_perimeter_exhaustive"]


@dataclass(frozen=True)
class SearchConfig:
    n_max: int = 8
    node_budget: int | None = None
    dedupe: bool = True

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")


@dataclass(frozen=True)
class SearchResult:
    min_perimeter: int
    extremal_count: int
    nodes: int

    def __iter__(self):
        return iter((self.min_perimeter, self.extremal_count))


@lru_cache(maxsize=32)
def _patch(p: int, q: int, layers: int) -> tuple[tuple[int, ...], ...]:
    ctx = new_context(p, q)
    st = new_animal(ctx)
    # grow until `layers` complete layers exist
    while st.layer < layers:
        st.attach()
    return tuple(tuple(st.tile_neighbors(t)) for t in range(st.n))


def tile_patch(ctx: TessContext, radius: int) -> tuple[tuple[int, ...], ...]:
    """Edge-adjacency lists for every tile within ``radius`` steps of tile 0.

    The complete (radius+1)-layered animal contains all of them; tiles
    further out keep whatever neighbours the patch happens to include.
    """
    ctx.require_planar()
    return _patch(ctx.p, ctx.q, radius + 1)


def min_perimeter_exhaustive(ctx: TessContext, n: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Minimum boundary-edge count over all n-tile animals, and the anchored minimizer count."""
    cfg = cfg or SearchConfig()
    if n < 1 or n > cfg.n_max:
        raise DomainError(f"n must be in 1..{cfg.n_max}, got {n}")
    cap = cfg.node_budget if cfg.node_budget is not None else budget()
    adj = tile_patch(ctx, n - 1)
    p = ctx.p
    best = [None, 0]
    nodes = 0

    def record(perim: int) -> None:
        if best[0] is None or perim < best[0]:
            best[0], best[1] = perim, 1
        elif perim == best[0]:
            best[1] += 1

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if nodes > cap:
            raise BudgetExceededError(
                f"node budget {cap} exhausted at n={n}; result is not exhaustive",
                best=(best[0], best[1]),
            )

    def hopeless(perim: int, size: int) -> bool:
        # one tile can lower the perimeter by at most p (all its edges shared)
        return best[0] is not None and perim - p * (n - size) > best[0]

    if n == 1:
        return SearchResult(p, 1, 1)

    if cfg.dedupe:
        seen = set()
        stack = [(frozenset([0]), p)]
        while stack:
            cells, perim = stack.pop()
            tick()
            size = len(cells)
            if size == n:
                record(perim)
                continue
            if hopeless(perim, size):
                continue
            frontier = {t for c in cells for t in adj[c] if t not in cells}
            for t in frontier:
                nxt = cells | {t}
                if nxt in seen:
                    continue
                seen.add(nxt)
                shared = sum(1 for u in adj[t] if u in cells)
                stack.append((nxt, perim + p - 2 * shared))
    else:
        # Redelmeier: every connected set containing the origin appears once
        cells = set()
        marked = {0}

        def grow(untried: list, perim: int) -> None:
            untried = list(untried)
            while untried:
                t = untried.pop()
                tick()
                shared = sum(1 for u in adj[t] if u in cells)
                new_perim = perim + p - 2 * shared
                cells.add(t)
                if len(cells) == n:
                    record(new_perim)
                elif not hopeless(new_perim, len(cells)):
                    fresh = [u for u in adj[t] if u not in marked]
                    marked.update(fresh)
                    grow(untried + fresh, new_perim)
                    marked.difference_update(fresh)
                cells.remove(t)

        grow([0], 0)
    return SearchResult(best[0], best[1], nodes)
