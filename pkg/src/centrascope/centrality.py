"""Degree, closeness, betweenness, eigenvector and subgraph centrality.

The three path/degree measures are exact (``int`` / ``Fraction``); the two
spectral measures come from a cyclic Jacobi eigendecomposition and are
floats, with an exact truncated-series certificate for the subgraph values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .graph import Graph, bfs_distances, distance_matrix, is_connected, to_graph6, walk_diagonals

KINDS = ("subgraph", "degree", "eigenvector", "closeness", "betweenness")

Number = Union[int, Fraction, float]


class DisconnectedGraphError(ValueError):
    pass


class EigensolverError(ArithmeticError):
    pass


@dataclass(frozen=True)
class CentralityVector:
    kind: str
    values: tuple[Number, ...]
    graph_id: str

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class SpectralDecomposition:
    eigenvalues: tuple[float, ...]
    # eigenvectors[j] is the unit eigenvector for eigenvalues[j]
    eigenvectors: tuple[tuple[float, ...], ...]
    residual: float
    sweeps: int


def _require_connected(g: Graph, what: str):
    if not is_connected(g):
        raise DisconnectedGraphError(f"{what} requires a connected graph")


def degree_centrality(g: Graph) -> CentralityVector:
    return CentralityVector("degree", tuple(g.degrees()), to_graph6(g))


def distance_sums(g: Graph) -> list[int]:
    _require_connected(g, "closeness")
    return [sum(bfs_distances(g, u)) for u in range(g.n)]


def closeness_centrality(g: Graph) -> CentralityVector:
    if g.n < 2:
        raise ValueError("closeness is undefined for a single node")
    sums = distance_sums(g)
    return CentralityVector("closeness", tuple(Fraction(g.n - 1, s) for s in sums), to_graph6(g))


def geodesic_counts(g: Graph) -> tuple[list[list[int]], list[list[int]]]:
    """All-pairs distances and numbers of shortest paths, by BFS from every node."""
    n = g.n
    dist = [[-1] * n for _ in range(n)]
    sigma = [[0] * n for _ in range(n)]
    nbrs = [g.neighbors(u) for u in range(n)]
    for s in range(n):
        d, sg = dist[s], sigma[s]
        d[s], sg[s] = 0, 1
        layer = [s]
        while layer:
            nxt = []
            for u in layer:
                for v in nbrs[u]:
                    if d[v] < 0:
                        d[v] = d[u] + 1
                        nxt.append(v)
                    if d[v] == d[u] + 1:
                        sg[v] += sg[u]
            layer = nxt
    return dist, sigma


def betweenness_centrality(g: Graph) -> CentralityVector:
    """Ordered-pair betweenness: both ``(i, j)`` and ``(j, i)`` contribute.

    Halve the values for the usual unordered convention.
    """
    _require_connected(g, "betweenness")
    n = g.n
    dist, sigma = geodesic_counts(g)
    values = []
    for k in range(n):
        total = Fraction(0)
        dk = dist[k]
        for i in range(n):
            if i == k:
                continue
            dik, sik = dist[i][k], sigma[i][k]
            di, si = dist[i], sigma[i]
            for j in range(n):
                if j == i or j == k:
                    continue
                if dik + dk[j] == di[j]:
                    total += Fraction(sik * sigma[k][j], si[j])
        values.append(total)
    return CentralityVector("betweenness", tuple(values), to_graph6(g))


def jacobi_eigh(matrix: list[list[float]], tol: float = 1e-12, max_sweeps: int = 100):
    """Cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Returns ``(eigenvalues, eigenvectors, sweeps)`` sorted by descending
    eigenvalue, with ``eigenvectors[j]`` the column for ``eigenvalues[j]``.
    Converged when the off-diagonal Frobenius norm is at most
    ``tol * max(1, ||A||_F)``; one further sweep is then applied.
    """
    n = len(matrix)
    a = [list(map(float, row)) for row in matrix]
    v = [[float(i == j) for j in range(n)] for i in range(n)]
    scale = max(1.0, math.sqrt(sum(x * x for row in a for x in row)))
    sweeps = 0
    polished = False
    while True:
        off = math.sqrt(sum(a[p][q] ** 2 for p in range(n) for q in range(n) if p != q))
        if off <= tol * scale:
            # one more sweep after convergence: quadratic convergence takes the
            # eigenvectors from ~tol to rounding level at the cost of one pass
            if polished or off == 0.0:
                break
            polished = True
        elif sweeps >= max_sweeps:
            raise EigensolverError(f"Jacobi did not converge in {max_sweeps} sweeps (off={off:.3e})")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = a[p], a[q]
                for k in range(n):
                    akp, akq = ap[k], aq[k]
                    ap[k] = c * akp - s * akq
                    aq[k] = s * akp + c * akq
                for k in range(n):
                    row = a[k]
                    akp, akq = row[p], row[q]
                    row[p] = c * akp - s * akq
                    row[q] = s * akp + c * akq
                for row in v:
                    vkp, vkq = row[p], row[q]
                    row[p] = c * vkp - s * vkq
                    row[q] = s * vkp + c * vkq
    order = sorted(range(n), key=lambda j: (-a[j][j], j))
    values = [a[j][j] for j in order]
    vectors = [[v[i][j] for i in range(n)] for j in order]
    return values, vectors, sweeps


def spectral_decomposition(g: Graph) -> SpectralDecomposition:
    values, vectors, sweeps = jacobi_eigh(g.matrix())
    nbrs = [g.neighbors(i) for i in range(g.n)]
    residual = 0.0
    for lam, phi in zip(values, vectors):
        for i in range(g.n):
            residual = max(residual, abs(sum(phi[k] for k in nbrs[i]) - lam * phi[i]))
    return SpectralDecomposition(
        tuple(values), tuple(tuple(vec) for vec in vectors), residual, sweeps
    )


def eigenvector_centrality(g: Graph, spectrum: SpectralDecomposition | None = None) -> CentralityVector:
    _require_connected(g, "eigenvector centrality")
    spectrum = spectrum or spectral_decomposition(g)
    phi = spectrum.eigenvectors[0]
    if sum(phi) < 0:
        phi = tuple(-x for x in phi)
    norm = math.sqrt(sum(x * x for x in phi))
    phi = tuple(x / norm for x in phi)
    if min(phi) <= 1e-10:
        raise EigensolverError(f"Perron vector has nonpositive entry {min(phi):.3e}")
    return CentralityVector("eigenvector", phi, to_graph6(g))


def subgraph_centrality(g: Graph, spectrum: SpectralDecomposition | None = None) -> CentralityVector:
    """``(e^A)_ii`` as the spectral sum of squared eigenvector entries times ``e^lambda``."""
    spectrum = spectrum or spectral_decomposition(g)
    weights = [math.exp(lam) for lam in spectrum.eigenvalues]
    values = tuple(
        math.fsum(w * phi[i] * phi[i] for w, phi in zip(weights, spectrum.eigenvectors))
        for i in range(g.n)
    )
    if min(values) < 1 - 1e-9:
        raise EigensolverError(f"subgraph centrality {min(values)} below 1")
    return CentralityVector("subgraph", values, to_graph6(g))


def estrada_index(spectrum: SpectralDecomposition) -> float:
    return math.fsum(math.exp(lam) for lam in spectrum.eigenvalues)


def series_tail_bound(max_degree: int, L: int) -> float:
    """Upper bound on ``sum_{l > L} (A^l)_ii / l!`` for one node.

    Uses ``(A^l)_ii <= rho(A)^l <= max_degree^l``; when ``max_degree < L + 2``
    the remainder of the exponential series is bounded by the first omitted
    term times a geometric factor, otherwise by the Lagrange form.
    """
    x, m = float(max_degree), L + 1
    first = math.exp(m * math.log(x) - math.lgamma(m + 1)) if x > 0 else 0.0
    if x < m + 1:
        return first / (1.0 - x / (m + 1))
    return first * math.exp(x)


def subgraph_centrality_series(g: Graph, L: int) -> tuple[list[Fraction], float]:
    """Exact partial sums ``sum_{l<=L} (A^l)_ii / l!`` and a per-node tail bound.

    The true value at every node lies in ``[partial, partial + tail_bound]``.
    """
    if not 0 <= L <= 40:
        raise ValueError("truncation length must lie in 0..40")
    diagonals = walk_diagonals(g, L, limit=None)
    sums = [Fraction(0)] * g.n
    fact = 1
    for wd in diagonals:
        if wd.l:
            fact *= wd.l
        for i, count in enumerate(wd.diag):
            if count:
                sums[i] += Fraction(count, fact)
    return sums, series_tail_bound(max(g.degrees()), L)


def all_centralities(g: Graph) -> dict[str, CentralityVector]:
    spectrum = spectral_decomposition(g)
    return {
        "subgraph": subgraph_centrality(g, spectrum),
        "degree": degree_centrality(g),
        "eigenvector": eigenvector_centrality(g, spectrum),
        "closeness": closeness_centrality(g),
        "betweenness": betweenness_centrality(g),
    }


__all__ = [
    "KINDS",
    "CentralityVector",
    "DisconnectedGraphError",
    "EigensolverError",
    "SpectralDecomposition",
    "all_centralities",
    "betweenness_centrality",
    "closeness_centrality",
    "degree_centrality",
    "distance_matrix",
    "distance_sums",
    "eigenvector_centrality",
    "estrada_index",
    "geodesic_counts",
    "jacobi_eigh",
    "series_tail_bound",
    "spectral_decomposition",
    "subgraph_centrality",
    "subgraph_centrality_series",
]
