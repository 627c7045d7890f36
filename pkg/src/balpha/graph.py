"""Simple undirected graphs and the integer matrices attached to them.

Vertices are ``0..n-1``.  A :class:`Graph` stores its edge list sorted
lexicographically with ``i < j``; every derived ordering (line-graph vertices,
incidence-matrix columns) follows that list.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    delta: int
    Delta: int


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on ``n`` vertices."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"a graph needs at least one vertex, got n={self.n}")
        seen = set()
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise ValueError(f"edge ({i}, {j}) is not a normalised pair in 0..{self.n - 1}")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edges must be sorted lexicographically")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> np.ndarray:
        """Boolean adjacency relation (read-only)."""
        a = np.zeros((self.n, self.n), dtype=bool)
        if self.edges:
            e = np.asarray(self.edges)
            a[e[:, 0], e[:, 1]] = True
            a[e[:, 1], e[:, 0]] = True
        a.flags.writeable = False
        return a

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.neighbors)

    @property
    def degree_profile(self) -> DegreeProfile:
        d = self.degrees
        return DegreeProfile(d, min(d), max(d))

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i, j])

    def is_regular(self) -> bool:
        return len(set(self.degrees)) == 1

    def has_isolated_vertex(self) -> bool:
        return 0 in self.degrees

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from arbitrary ``(i, j)`` pairs; duplicates collapse."""
    norm = set()
    for pair in pairs:
        i, j = (int(x) for x in pair)
        if i == j:
            raise ValueError(f"loop at vertex {i}: only simple graphs are supported")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
        norm.add((min(i, j), max(i, j)))
    return Graph(n, tuple(sorted(norm)))


def from_adjacency(a) -> Graph:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("adjacency matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("adjacency matrix must be symmetric")
    if np.any(np.diag(a)):
        raise ValueError("adjacency matrix must have a zero diagonal")
    i, j = np.nonzero(np.triu(a, 1))
    return Graph(a.shape[0], tuple(zip(i.tolist(), j.tolist())))


# -- generators ---------------------------------------------------------------

def empty(n: int) -> Graph:
    return Graph(n, ())


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete(n) needs n >= 1")
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts occupy contiguous index blocks."""
    parts = [int(p) for p in parts]
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"part sizes must be >= 1, got {parts}")
    label = np.repeat(np.arange(len(parts)), parts)
    n = len(label)
    edges = tuple((i, j) for i, j in combinations(range(n), 2) if label[i] != label[j])
    return Graph(n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle(n) needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path(n) needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Graph:
    """Star on ``n`` vertices, hub at 0 (so ``star(n)`` is ``K_{1,n-1}``)."""
    if n < 2:
        raise ValueError("star(n) needs n >= 2")
    return complete_bipartite(1, n - 1)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return from_edge_list(10, outer + inner + spokes)


_FAMILIES = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "complete_multipartite": complete_multipartite,
    "cycle": cycle,
    "star": star,
    "path": path,
    "petersen": petersen,
    "empty": empty,
}


def generate(family: str, *args) -> Graph:
    """Dispatch to a named generator, e.g. ``generate("cycle", 6)``."""
    try:
        fn = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}") from None
    return fn(*args)


# -- structure ----------------------------------------------------------------

def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            v = queue.popleft()
            comp.append(v)
            for u in g.neighbors[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Two-colouring ``(U, W)`` with vertex 0's class first, or None."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return [v for v in range(g.n) if color[v] == 0], [v for v in range(g.n) if color[v] == 1]


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def line_graph(g: Graph) -> Graph:
    if g.m == 0:
        raise ValueError("line graph of an edgeless graph has no vertices")
    edges = []
    for a, b in combinations(range(g.m), 2):
        if set(g.edges[a]) & set(g.edges[b]):
            edges.append((a, b))
    return Graph(g.m, tuple(edges))


def complement(g: Graph) -> Graph:
    return Graph(g.n, tuple(e for e in combinations(range(g.n), 2) if not g.adj[e]))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return from_edge_list(g.n, [(perm[i], perm[j]) for i, j in g.edges])


# -- integer matrices ---------------------------------------------------------

def adjacency_matrix(g: Graph) -> np.ndarray:
    return g.adj.astype(np.int64)


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(np.asarray(g.degrees, dtype=np.int64))


def laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) - adjacency_matrix(g)


def signless_laplacian(g: Graph) -> np.ndarray:
    return degree_matrix(g) + adjacency_matrix(g)


def incidence_matrix(g: Graph) -> np.ndarray:
    """0/1 vertex-edge incidence matrix, shape ``(n, m)``."""
    M = np.zeros((g.n, g.m), dtype=np.int64)
    for col, (i, j) in enumerate(g.edges):
        M[i, col] = 1
        M[j, col] = 1
    return M
