"""Graph corpora for property sweeps, and the compact generator notation.

Generator notation (case-insensitive for the family letter):

    K4        complete graph K_4
    K1,24     complete bipartite K_{1,24}  (more parts give a complete multipartite graph)
    T3,3,3    complete multipartite K_{3,3,3}
    C6 P5 S5  cycle, path, star on the given number of vertices
    petersen  the Petersen graph
"""

from __future__ import annotations

import re
from typing import Iterator

import networkx as nx
import numpy as np

from . import graph as gr
from .errors import GraphFormatError
from .graph import Graph

ATLAS_MAX_N = 7

_SPEC = re.compile(r"^([KTCPS])(\d+(?:,\d+)*)$", re.IGNORECASE)


def from_spec(spec: str) -> Graph:
    text = spec.strip()
    if text.lower() == "petersen":
        return gr.petersen()
    m = _SPEC.match(text)
    if not m:
        raise GraphFormatError(f"unrecognised generator spec {spec!r}")
    fam = m.group(1).upper()
    nums = [int(x) for x in m.group(2).split(",")]
    try:
        if fam in "KT":
            if fam == "K" and len(nums) == 1:
                return gr.complete(nums[0])
            return gr.complete_multipartite(nums)
        if len(nums) != 1:
            raise GraphFormatError(f"{fam} takes a single size, got {spec!r}")
        return {"C": gr.cycle, "P": gr.path, "S": gr.star}[fam](nums[0])
    except ValueError as exc:
        if isinstance(exc, GraphFormatError):
            raise
        raise GraphFormatError(f"{spec!r}: {exc}") from None


def from_networkx(G: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return gr.from_edge_list(len(index), [(index[u], index[v]) for u, v in G.edges()])


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def atlas_graphs(max_n: int, min_n: int = 1, connected: bool = True) -> list[Graph]:
    """All graphs on ``min_n..max_n`` vertices up to isomorphism (networkx graph atlas)."""
    if max_n > ATLAS_MAX_N:
        raise ValueError(f"exhaustive corpus only available up to n={ATLAS_MAX_N}")
    out = []
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if n < max(min_n, 1) or n > max_n:
            continue
        if connected and not nx.is_connected(G):
            continue
        out.append(from_networkx(G))
    return out


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return gr.from_adjacency(upper | upper.T)


def random_graphs(count: int, n_min: int, n_max: int, seed: int, connected: bool = False,
                  p_range: tuple[float, float] = (0.2, 0.8)) -> list[Graph]:
    """Seeded G(n, p) samples with ``n`` uniform in ``[n_min, n_max]`` and ``p`` uniform in ``p_range``."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(n_min, n_max + 1))
        p = float(rng.uniform(*p_range))
        g = random_graph(n, p, rng)
        if connected and not gr.is_connected(g):
            continue
        out.append(g)
    return out


def named_graphs() -> Iterator[tuple[str, Graph]]:
    """Small families that appear in worked examples."""
    for spec in ["K2", "K3", "K4", "K5", "P3", "P4", "C4", "C5", "C6", "S5",
                 "K1,24", "K2,3", "K3,3", "T3,3,3", "T2,2,2,2", "petersen"]:
        yield spec, from_spec(spec)
