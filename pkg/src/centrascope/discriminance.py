"""Zero-spread tests per centrality measure and the discriminant-power ratio.

"Standard deviation is zero" is tested as "all node values are equal":
exactly for degree, closeness and betweenness, and with a relative
tolerance for the two spectral measures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .centrality import (
    KINDS,
    DisconnectedGraphError,
    betweenness_centrality,
    distance_sums,
    eigenvector_centrality,
    spectral_decomposition,
    subgraph_centrality,
    subgraph_centrality_series,
)
from .graph import Graph, canonical_graph6, is_connected, to_graph6
from .structure import StructureProfile, is_regular, is_walk_regular, structure_profile

FLOAT_TOL = 1e-9
SUSPECT_BAND = (1e-12, 1e-6)
SERIES_L = 30


class ModeDisagreement(ArithmeticError):
    """Exact and floating zero tests for the eigenvector measure disagree."""


@dataclass(frozen=True)
class DiscriminanceRecord:
    graph_id: str
    n: int
    zero_flags: dict[str, bool]
    profile: StructureProfile
    ee_spread: float
    subgraph_exact: bool
    suspect: bool = False


@dataclass(frozen=True)
class DiscriminantPower:
    kind: str
    n: int
    zero_count: int
    total: int
    ratio: Fraction = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "ratio", Fraction(self.zero_count, self.total))


def _all_equal(values) -> bool:
    return len(set(values)) <= 1


def _float_flat(values, relative=True) -> bool:
    scale = max(1.0, max(values)) if relative else 1.0
    return max(values) - min(values) <= FLOAT_TOL * scale


def _series_separates(g: Graph, values) -> bool:
    """True when the certified series intervals of the extreme nodes are disjoint."""
    sums, tail = subgraph_centrality_series(g, SERIES_L)
    lo = min(range(g.n), key=values.__getitem__)
    hi = max(range(g.n), key=values.__getitem__)
    return sums[lo] + Fraction(tail) < sums[hi]


def eigenvector_zero(g: Graph, spectrum=None) -> bool:
    exact = is_regular(g)
    phi = eigenvector_centrality(g, spectrum).values
    approx = max(phi) - min(phi) <= FLOAT_TOL
    if exact != approx:
        raise ModeDisagreement(
            f"{to_graph6(g)}: eigenvector exact={exact} float={approx} "
            f"(spread {max(phi) - min(phi):.3e})"
        )
    return exact


def subgraph_zero(g: Graph, mode: str = "float", spectrum=None) -> bool:
    if mode == "exact":
        return is_walk_regular(g)
    if mode != "float":
        raise ValueError(f"unknown mode {mode!r}")
    values = subgraph_centrality(g, spectrum).values
    flat = _float_flat(values)
    spread = max(values) - min(values)
    if SUSPECT_BAND[0] < spread < SUSPECT_BAND[1] and flat and _series_separates(g, values):
        return False
    return flat


def stddev_zero(g: Graph, kind: str, mode: str = "float") -> bool:
    if not is_connected(g):
        raise DisconnectedGraphError("zero-spread tests need a connected graph")
    if kind == "degree":
        return _all_equal(g.degrees())
    if kind == "closeness":
        return _all_equal(distance_sums(g))
    if kind == "betweenness":
        return _all_equal(betweenness_centrality(g).values)
    if kind == "eigenvector":
        return eigenvector_zero(g)
    if kind == "subgraph":
        return subgraph_zero(g, mode)
    raise ValueError(f"unknown centrality kind {kind!r}")


def discriminance_record(g: Graph) -> DiscriminanceRecord:
    if not is_connected(g):
        raise DisconnectedGraphError("records are defined for connected graphs only")
    spectrum = spectral_decomposition(g)
    ee = subgraph_centrality(g, spectrum).values
    spread = max(ee) - min(ee)
    suspect = SUSPECT_BAND[0] < spread < SUSPECT_BAND[1]
    flags = {
        "subgraph": subgraph_zero(g, "float", spectrum),
        "degree": _all_equal(g.degrees()),
        "eigenvector": eigenvector_zero(g, spectrum),
        "closeness": _all_equal(distance_sums(g)),
        "betweenness": _all_equal(betweenness_centrality(g).values),
    }
    return DiscriminanceRecord(
        graph_id=canonical_graph6(g),
        n=g.n,
        zero_flags={k: flags[k] for k in KINDS},
        profile=structure_profile(g),
        ee_spread=spread,
        subgraph_exact=is_walk_regular(g),
        suspect=suspect,
    )


def discriminant_power(records: Iterable, kind: str) -> DiscriminantPower:
    """Count zero-spread graphs for ``kind`` over graphs or precomputed records."""
    if kind not in KINDS:
        raise ValueError(f"unknown centrality kind {kind!r}")
    zero = total = 0
    sizes = set()
    for item in records:
        if isinstance(item, Graph):
            flag = stddev_zero(item, kind)
            sizes.add(item.n)
        else:
            flag = item.zero_flags[kind]
            sizes.add(item.n)
        zero += flag
        total += 1
    if not total:
        raise ValueError("discriminant power of an empty stream is undefined")
    n = sizes.pop() if len(sizes) == 1 else 0
    return DiscriminantPower(kind, n, zero, total)
