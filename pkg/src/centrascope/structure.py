"""Structural classifiers and automorphism orbits."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (
    Graph,
    bfs_distances,
    degree_partition,
    distance_matrix,
    individualize,
    is_connected,
    refine,
    walk_diagonals,
)


@dataclass(frozen=True)
class StructureProfile:
    regular: bool
    walk_regular: bool
    vertex_transitive: bool
    distance_regular: bool
    bipartite: bool
    orbits: tuple[tuple[int, ...], ...]

    def flags(self) -> dict[str, bool]:
        return {
            "regular": self.regular,
            "walk_regular": self.walk_regular,
            "vertex_transitive": self.vertex_transitive,
            "distance_regular": self.distance_regular,
            "bipartite": self.bipartite,
        }


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) == 1


def is_walk_regular(g: Graph) -> bool:
    """Constant ``diag(A^l)`` for ``l = 2..n-1``.

    Higher powers add nothing: by Cayley-Hamilton each ``A^l`` with
    ``l >= n`` is a fixed linear combination of ``I, A, ..., A^{n-1}``.
    """
    if g.n <= 2:
        return is_regular(g)
    for wd in walk_diagonals(g, g.n - 1)[2:]:
        if len(set(wd.diag)) != 1:
            return False
    return True


def _find_isomorphism(g, gc, h, hc, tg, th) -> Optional[list[int]]:
    """Extend matched ordered partitions of ``g`` and ``h`` to an isomorphism.

    ``tg``/``th`` are the refinement traces that produced ``gc``/``hc``.
    Returns ``perm`` with ``perm[v]`` the image in ``h`` of node ``v`` of ``g``.
    """
    if tg != th or [len(c) for c in gc] != [len(c) for c in hc]:
        return None
    idx = next((i for i, c in enumerate(gc) if len(c) > 1), -1)
    if idx < 0:
        perm = [0] * g.n
        for a, b in zip(gc, hc):
            perm[a[0]] = b[0]
        for u in range(g.n):
            image = 0
            for w in range(g.n):
                if g.adj[u] >> w & 1:
                    image |= 1 << perm[w]
            if image != h.adj[perm[u]]:
                return None
        return perm
    x = gc[idx][0]
    sub_g, trace_g = refine(g, individualize(gc, idx, x))
    for y in hc[idx]:
        sub_h, trace_h = refine(h, individualize(hc, idx, y))
        found = _find_isomorphism(g, sub_g, h, sub_h, trace_g, trace_h)
        if found is not None:
            return found
    return None


def find_automorphism(g: Graph, u: int, v: int) -> Optional[list[int]]:
    """An automorphism of ``g`` sending ``u`` to ``v``, or ``None``."""
    base = degree_partition(g)
    idx_u = next(i for i, c in enumerate(base) if u in c)
    idx_v = next(i for i, c in enumerate(base) if v in c)
    if idx_u != idx_v:
        return None
    gc, tg = refine(g, individualize(base, idx_u, u))
    hc, th = refine(g, individualize(base, idx_v, v))
    return _find_isomorphism(g, gc, g, hc, tg, th)


def automorphism_orbits(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Orbit partition of the automorphism group, blocks sorted by least node."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def absorb(perm):
        for x, y in enumerate(perm):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

    cells, _ = refine(g, degree_partition(g))
    for cell in cells:
        # nodes in different cells of the equitable partition are never equivalent
        for v in cell[1:]:
            for u in cell:
                if u == v:
                    break
                if find(u) != u or find(u) == find(v):
                    continue
                perm = find_automorphism(g, u, v)
                if perm is not None:
                    absorb(perm)
                    break
    blocks: dict[int, list[int]] = {}
    for x in range(g.n):
        blocks.setdefault(find(x), []).append(x)
    return tuple(tuple(b) for b in sorted(blocks.values()))


def is_vertex_transitive(g: Graph) -> bool:
    return len(automorphism_orbits(g)) == 1


def is_distance_regular(g: Graph) -> bool:
    if not is_connected(g):
        raise ValueError("distance regularity requires a connected graph")
    dist = distance_matrix(g)
    nbrs = [g.neighbors(v) for v in range(g.n)]
    seen: dict[int, tuple[int, int, int]] = {}
    for u in range(g.n):
        du = dist[u]
        for v in range(g.n):
            k = du[v]
            counts = [0, 0, 0]
            for w in nbrs[v]:
                counts[du[w] - k + 1] += 1
            key = tuple(counts)
            if seen.setdefault(k, key) != key:
                return False
    return True


def is_bipartite(g: Graph) -> bool:
    color: list[Optional[int]] = [None] * g.n
    for s in range(g.n):
        if color[s] is not None:
            continue
        dist = bfs_distances(g, s)
        for v, d in enumerate(dist):
            if d is not None:
                color[v] = d % 2
    return all(color[u] != color[v] for u, v in g.edges())


def structure_profile(g: Graph) -> StructureProfile:
    if not is_connected(g):
        raise ValueError("structure profile requires a connected graph")
    orbits = automorphism_orbits(g)
    return StructureProfile(
        regular=is_regular(g),
        walk_regular=is_walk_regular(g),
        vertex_transitive=len(orbits) == 1,
        distance_regular=is_distance_regular(g),
        bipartite=is_bipartite(g),
        orbits=orbits,
    )
