"""Bit-row graphs, graph6 interchange, BFS and exact closed-walk counts."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

MAX_NODES = 32
WALK_LIMIT = 2**64 - 1
GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Raised for malformed graph6 input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[i]`` has bit ``j`` set iff ``{i, j}`` is an edge."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_NODES:
            raise ValueError(f"node count {self.n} outside 1..{MAX_NODES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per node")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} references nodes >= n")
            if row >> i & 1:
                raise ValueError(f"loop at node {i}")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency at ({i}, {j})")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return _bits(self.adj[u])

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i]) if i < j]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with node ``i`` renamed ``perm[i]``."""
        rows = [0] * self.n
        for i, row in enumerate(self.adj):
            rows[perm[i]] = sum(1 << perm[j] for j in _bits(row))
        return Graph(self.n, tuple(rows))

    def matrix(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.adj]

    def __str__(self):
        return to_graph6(self)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 1 <= n <= MAX_NODES:
        raise ValueError(f"node count {n} outside 1..{MAX_NODES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at node {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optionally prefixed by the ``>>graph6<<`` header)."""
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in text]
    for pos, value in enumerate(data):
        if not 0 <= value <= 63:
            raise Graph6Error(f"byte {text[pos]!r} at offset {pos} outside 63..126")
    if data[0] == 63:
        # 18-bit size form; only accepted for sizes we can hold
        if len(data) < 4:
            raise Graph6Error("truncated size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_NODES:
        raise Graph6Error(f"n={n} exceeds supported maximum {MAX_NODES}")
    if n == 0:
        raise Graph6Error("graphs with zero nodes are not supported")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        kind = "truncated" if len(body) < need else "overlong"
        raise Graph6Error(f"{kind} bit stream: expected {need} bytes, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        bits.extend(col >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    """Hop distances from ``source``; unreachable nodes are ``None``."""
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} out of range for n={g.n}")
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in _bits(g.adj[u]):
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance_matrix(g: Graph) -> list[list[Optional[int]]]:
    return [bfs_distances(g, u) for u in range(g.n)]


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


@dataclass(frozen=True)
class WalkDiagonal:
    l: int
    diag: tuple[int, ...]


def walk_diagonals(g: Graph, max_l: int, limit: Optional[int] = WALK_LIMIT) -> list[WalkDiagonal]:
    """Exact ``(A^l)_ii`` for ``l = 0..max_l``.

    Any entry of ``A^l`` above ``limit`` (unsigned 64-bit by default) raises
    ``OverflowError``; pass ``limit=None`` for unbounded exact counts.
    """
    if not 0 <= max_l <= 63:
        raise ValueError("max_l must lie in 0..63")
    n = g.n
    nbrs = [_bits(row) for row in g.adj]
    power = [[int(i == j) for j in range(n)] for i in range(n)]
    out = [WalkDiagonal(0, (1,) * n)]
    for l in range(1, max_l + 1):
        # row i of A^l = sum of rows of A^{l-1} over neighbours of i
        nxt = []
        for i in range(n):
            row = [0] * n
            for k in nbrs[i]:
                prev = power[k]
                for j in range(n):
                    row[j] += prev[j]
            nxt.append(row)
        power = nxt
        if limit is not None and max(max(row) for row in power) > limit:
            raise OverflowError(f"closed-walk count exceeds 64 bits at length {l}")
        out.append(WalkDiagonal(l, tuple(power[i][i] for i in range(n))))
    return out


# --- partition refinement ---------------------------------------------------


def refine(g: Graph, cells: list[list[int]]) -> tuple[list[list[int]], list]:
    """Equitable refinement of an ordered partition.

    Each round splits cells by the number of neighbours a node has in every
    current cell; new cells keep the order of their parent and are sorted by
    that count vector within it. The returned trace is label-independent, so
    two graphs whose traces differ cannot be matched under the given
    partitions.
    """
    trace = []
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        new_cells = []
        round_trace = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                round_trace.append((1,))
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                key = tuple((g.adj[v] & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            keys = sorted(groups)
            for key in keys:
                new_cells.append(groups[key])
            round_trace.append(tuple((key, len(groups[key])) for key in keys))
        trace.append(tuple(round_trace))
        if len(new_cells) == len(cells):
            return new_cells, trace
        cells = new_cells


def degree_partition(g: Graph) -> list[list[int]]:
    by_degree: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees()):
        by_degree.setdefault(d, []).append(v)
    return [by_degree[d] for d in sorted(by_degree)]


def individualize(cells: list[list[int]], index: int, v: int) -> list[list[int]]:
    cell = cells[index]
    rest = [w for w in cell if w != v]
    return cells[:index] + [[v], rest] + cells[index + 1:]


def _target_cell(cells: list[list[int]]) -> int:
    # first smallest non-singleton cell
    best = -1
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best < 0 or len(cell) < len(cells[best])):
            best = i
    return best


def _upper_code(g: Graph, order: Sequence[int]) -> int:
    """Upper-triangle bits in graph6 column order for node ``order[k]`` at position ``k``."""
    code = 0
    for j in range(1, len(order)):
        row = g.adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_labeling(g: Graph) -> list[int]:
    """Node order whose relabelled graph6 string is minimal over the refined search tree.

    Individualization-refinement backtracking from the degree partition.
    Subtrees are skipped when an automorphism already found (fixing the
    current individualized prefix pointwise) maps the candidate onto an
    explored sibling; such subtrees only reproduce leaves already seen.
    """
    best_code: Optional[int] = None
    best_order: Optional[list[int]] = None
    autos: list[tuple[int, ...]] = []

    def orbit_rep(fixed: list[int], v: int) -> int:
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in autos:
            if all(a[f] == f for f in fixed):
                for x in range(g.n):
                    rx, ry = find(x), find(a[x])
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
        return find(v)

    def search(cells: list[list[int]], fixed: list[int]):
        nonlocal best_code, best_order
        idx = _target_cell(cells)
        if idx < 0:
            order = [cell[0] for cell in cells]
            code = _upper_code(g, order)
            if best_code is None or code < best_code:
                best_code, best_order = code, order
            elif code == best_code:
                perm = [0] * g.n
                for a, b in zip(best_order, order):
                    perm[a] = b
                autos.append(tuple(perm))
            return
        explored: list[int] = []
        for v in list(cells[idx]):
            if explored and autos:
                rep = orbit_rep(fixed, v)
                if any(orbit_rep(fixed, w) == rep for w in explored):
                    continue
            sub, _ = refine(g, individualize(cells, idx, v))
            search(sub, fixed + [v])
            explored.append(v)

    start, _ = refine(g, degree_partition(g))
    search(start, [])
    return best_order


def canonical_form(g: Graph) -> tuple[Graph, str]:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    canon = g.relabel(perm)
    return canon, to_graph6(canon)


def canonical_graph6(g: Graph) -> str:
    return canonical_form(g)[1]
