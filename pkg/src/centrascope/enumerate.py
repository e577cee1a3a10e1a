"""Connected graphs up to isomorphism, and graph6 corpus files."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Union

from .graph import GRAPH6_HEADER, Graph, Graph6Error, canonical_graph6, canonical_form, parse_graph6

MAX_ENUMERATION_N = 10


@dataclass
class GraphStream:
    """Single-pass stream of graphs with provenance and a running count."""

    source: Iterable[Graph]
    provenance: str
    count: int = field(default=0, init=False)

    def __iter__(self) -> Iterator[Graph]:
        for g in self.source:
            self.count += 1
            yield g


def _extensions(base6: str) -> set[str]:
    base = parse_graph6(base6)
    n = base.n + 1
    new_bit = 1 << base.n
    out = set()
    for subset in range(1, 1 << base.n):
        rows = [row | new_bit if subset >> j & 1 else row for j, row in enumerate(base.adj)]
        rows.append(subset)
        out.add(canonical_graph6(Graph(n, tuple(rows))))
    return out


@lru_cache(maxsize=None)
def connected_graph6(n: int, workers: int = 1) -> tuple[str, ...]:
    """Sorted canonical graph6 strings of all connected graphs on ``n`` nodes."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"n={n} outside 1..{MAX_ENUMERATION_N}")
    if n == 1:
        return (canonical_form(Graph(1, (0,)))[1],)
    bases = connected_graph6(n - 1, workers)
    found: set[str] = set()
    if workers > 1 and len(bases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_extensions, bases, chunksize=max(1, len(bases) // (4 * workers))):
                found |= part
    else:
        for base in bases:
            found |= _extensions(base)
    return tuple(sorted(found))


def enumerate_connected(n: int, workers: int = 1) -> GraphStream:
    """One canonical representative per isomorphism class, ascending graph6 order.

    Built by attaching a new node to every nonempty subset of each connected
    graph on ``n - 1`` nodes; removing a non-cut node from any connected
    graph leaves a connected graph, so every class is reached.
    """
    strings = connected_graph6(n, workers)
    return GraphStream((parse_graph6(s) for s in strings), f"generated:n={n}")


def read_graph6_file(path: Union[str, os.PathLike]) -> GraphStream:
    path = Path(path)
    lines = path.read_text(encoding="ascii").splitlines()

    def parse():
        for lineno, line in enumerate(lines, 1):
            text = line.strip()
            if text.startswith(GRAPH6_HEADER):
                text = text[len(GRAPH6_HEADER):]
            if not text:
                continue
            try:
                yield parse_graph6(text)
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from exc

    return GraphStream(parse(), str(path))


def write_graph6_file(stream: Iterable[Graph], path: Union[str, os.PathLike]) -> int:
    """Write one canonical graph6 line per graph, in stream order."""
    count = 0
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for g in stream:
            fh.write(canonical_graph6(g) + "\n")
            count += 1
    return count
