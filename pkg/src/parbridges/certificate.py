"""Sparse certificates for 2-edge-connectivity.

The certificate of a graph is ``S = F | F'`` where ``F`` is a maximal
spanning forest of the graph and ``F'`` a maximal spanning forest of what
is left after removing ``F``. ``|S| <= 2(n - 1)`` and ``S`` can stand in for
the full edge set for any bridge query, including after arbitrary edges are
added to both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from parbridges.dsu import DisjointSetForest
from parbridges.graph import Graph


@dataclass(frozen=True)
class Certificate:
    forest_f: frozenset[int]
    forest_f_prime: frozenset[int]

    def __post_init__(self) -> None:
        if self.forest_f & self.forest_f_prime:
            raise ValueError("certificate forests must be edge-disjoint")

    @classmethod
    def empty(cls) -> "Certificate":
        return cls(frozenset(), frozenset())

    def __len__(self) -> int:
        return len(self.forest_f) + len(self.forest_f_prime)

    def edge_id_array(self) -> np.ndarray:
        """Sorted int64 array of all certificate edge ids."""
        ids = np.fromiter(certificate_edge_ids(self), dtype=np.int64, count=len(self))
        ids.sort()
        return ids


def _forest_positions(g: Graph, skip: np.ndarray | None) -> list[int]:
    # Self-loops are pre-masked so they can never enter a forest.
    loops = g.us == g.vs
    if skip is None:
        skip = loops
    else:
        skip = skip | loops
    dsu = DisjointSetForest(g.vertex_count)
    return dsu.union_scan(
        g.us.tolist(),
        g.vs.tolist(),
        skip.tolist() if skip.any() else None,
        limit=max(g.vertex_count - 1, 0),
    )


def _exclude_mask(g: Graph, exclude: Iterable[int]) -> np.ndarray | None:
    if isinstance(exclude, np.ndarray):
        ex = exclude.astype(np.int64, copy=False).reshape(-1)
    else:
        ex = np.fromiter(exclude, dtype=np.int64)
    if ex.size == 0:
        return None
    return np.isin(g.ids, ex)


def spanning_forest(g: Graph, exclude: Iterable[int] = ()) -> frozenset[int]:
    """Maximal acyclic edge set of ``g`` over edges not in ``exclude``.

    Edges are taken greedily in ascending id order, keeping every edge that
    joins two different trees.
    """
    pos = _forest_positions(g, _exclude_mask(g, exclude))
    return frozenset(g.ids[pos].tolist())


def sparse_certificate(g: Graph) -> Certificate:
    first = _forest_positions(g, None)
    taken = np.zeros(g.edge_count, dtype=bool)
    taken[first] = True
    second = _forest_positions(g, taken)
    return Certificate(
        frozenset(g.ids[first].tolist()),
        frozenset(g.ids[second].tolist()),
    )


def certificate_edge_ids(c: Certificate) -> frozenset[int]:
    return c.forest_f | c.forest_f_prime


def stack_dfs_forest(g: Graph, exclude: Iterable[int] = ()) -> frozenset[int]:
    """Spanning forest grown by explicit-stack DFS from every unvisited vertex
    in ascending order.

    Reference traversal for the greedy scan: both yield forests with the
    same vertex partition, though generally different edges.
    """
    ex = _exclude_mask(g, exclude)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for k, (eid, u, v) in enumerate(zip(g.ids.tolist(), g.us.tolist(), g.vs.tolist())):
        if u == v or (ex is not None and ex[k]):
            continue
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    for nbrs in adj:
        nbrs.sort(reverse=True)
    visited = [False] * g.vertex_count
    forest: set[int] = set()
    for root in range(g.vertex_count):
        if visited[root]:
            continue
        stack: list[tuple[int, int | None]] = [(root, None)]
        while stack:
            u, via = stack.pop()
            if visited[u]:
                continue
            visited[u] = True
            if via is not None:
                forest.add(via)
            for w, eid in adj[u]:
                if not visited[w]:
                    stack.append((w, eid))
    return frozenset(forest)
