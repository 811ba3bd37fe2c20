"""Core graph type, BFS distances, and the distance power operation.

Graphs are simple and undirected, on vertices 0..n-1, with edges stored as
a frozenset of (u, v) pairs normalized to u < v. An optional label tuple
maps each index to a display name (position i labels vertex i).
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalized edge: endpoints ordered ascending."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = frozenset()
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = frozenset(edge(u, v) for u, v in self.edges)
        for u, v in norm:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
        object.__setattr__(self, "edges", norm)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.n:
                raise ValueError("label tuple must have one entry per vertex")
            if len(set(labels)) != self.n:
                raise ValueError("labels must be distinct")
            object.__setattr__(self, "labels", labels)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists, each sorted ascending."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def label_index(self) -> dict[str, int]:
        """Inverse of the label tuple; empty when unlabeled."""
        if self.labels is None:
            return {}
        return {lab: i for i, lab in enumerate(self.labels)}

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        gone = {edge(u, v) for u, v in removed}
        extra = gone - self.edges
        if extra:
            raise ValueError(f"edges not in graph: {sorted(extra)}")
        return Graph(self.n, self.edges - gone, self.labels)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; None marks unreachable pairs."""

    n: int
    rows: tuple[tuple[int | None, ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> int | None:
        u, v = pair
        return self.rows[u][v]


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex."""
    adj = g.adjacency
    rows: list[tuple[int | None, ...]] = []
    for src in range(g.n):
        dist: list[int | None] = [None] * g.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = dist[u]
            assert du is not None
            for w in adj[u]:
                if dist[w] is None:
                    dist[w] = du + 1
                    queue.append(w)
        rows.append(tuple(dist))
    return DistanceMatrix(g.n, tuple(rows))


def diameter(g: Graph) -> int | float:
    """Largest hop count; math.inf when disconnected, 0 when n <= 1."""
    if g.n <= 1:
        return 0
    best = 0
    for row in all_pairs_distances(g).rows:
        for d in row:
            if d is None:
                return math.inf
            if d > best:
                best = d
    return best


def power(g: Graph, m: int) -> Graph:
    """Distance power: same vertices, edge iff 1 <= d_g(u, v) <= m.

    Unreachable pairs never become edges, so powers of a disconnected
    graph stay disconnected.
    """
    if not isinstance(m, int) or isinstance(m, bool):
        raise ValueError("power exponent must be an integer")
    if m < 1:
        raise ValueError(f"power exponent must be >= 1, got {m}")
    dist = all_pairs_distances(g)
    edges = set(g.edges)
    if m > 1:
        for u in range(g.n):
            row = dist.rows[u]
            for v in range(u + 1, g.n):
                d = row[v]
                if d is not None and d <= m:
                    edges.add((u, v))
    return Graph(g.n, frozenset(edges), g.labels)


def is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def max_degree(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(g.degree(v) for v in range(g.n))


# Serialization. JSON is the canonical form; a bare "n m" edge list is
# accepted as input for pipeline convenience.


def to_json(g: Graph) -> str:
    doc: dict = {"n": g.n, "edges": [list(e) for e in g.sorted_edges]}
    if g.labels is not None:
        doc["labels"] = {str(i): lab for i, lab in enumerate(g.labels)}
    return json.dumps(doc)


def from_json(text: str) -> Graph:
    doc = json.loads(text)
    n = doc["n"]
    edges = frozenset(edge(u, v) for u, v in doc.get("edges", []))
    labels = None
    if "labels" in doc and doc["labels"] is not None:
        raw = {int(k): v for k, v in doc["labels"].items()}
        if sorted(raw) != list(range(n)):
            raise ValueError("labels must cover vertices 0..n-1")
        labels = tuple(raw[i] for i in range(n))
    return Graph(n, edges, labels)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("edge list needs a header line 'n m'")
    n, m = int(tokens[0]), int(tokens[1])
    flat = tokens[2:]
    if len(flat) != 2 * m:
        raise ValueError(f"expected {m} edges, found {len(flat) // 2}")
    edges = frozenset(
        edge(int(flat[2 * i]), int(flat[2 * i + 1])) for i in range(m)
    )
    if len(edges) != m:
        raise ValueError("duplicate edges in edge list")
    return Graph(n, edges)


def loads(text: str) -> Graph:
    """Parse either the JSON form or a plain edge list."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json(stripped)
    return from_edgelist(stripped)
