"""Sequential low-link bridge detection with an explicit DFS stack."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from parbridges.graph import Graph


@dataclass(frozen=True)
class BridgeReport:
    """Bridges ordered by ``(min endpoint, max endpoint, id)``.

    ``ordered_ids[k]`` is the id whose endpoints are ``bridge_endpoints[k]``.
    """

    bridge_edge_ids: frozenset[int]
    bridge_endpoints: tuple[tuple[int, int], ...]
    ordered_ids: tuple[int, ...] = field(default=())

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int, int]]) -> "BridgeReport":
        """Build from ``(id, u, v)`` triples in any order."""
        rows = sorted((min(u, v), max(u, v), eid) for eid, u, v in edges)
        return cls(
            frozenset(r[2] for r in rows),
            tuple((r[0], r[1]) for r in rows),
            tuple(r[2] for r in rows),
        )

    def __len__(self) -> int:
        return len(self.ordered_ids)

    def lines(self) -> list[str]:
        return [f"{u} {v} {eid}" for (u, v), eid in zip(self.bridge_endpoints, self.ordered_ids)]


@dataclass
class DfsState:
    """Discovery times start at 1; 0 marks an unvisited vertex."""

    disc: list[int]
    low: list[int]
    parent_edge: list[int | None]
    timer: int = 0


def _adjacency(g: Graph) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.vertex_count)]
    for eid, u, v in zip(g.ids.tolist(), g.us.tolist(), g.vs.tolist()):
        if u == v:
            continue
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    for nbrs in adj:
        nbrs.sort()
    return adj


def dfs_lowlink(g: Graph, adj: list[list[tuple[int, int]]] | None = None) -> DfsState:
    """Compute discovery and low-link values.

    Roots are taken in ascending vertex order and neighbours in ascending
    ``(vertex, edge id)`` order. Only the exact tree edge into a vertex is
    skipped when looking for back edges, so a parallel twin of the tree
    edge counts as a back edge.
    """
    if adj is None:
        adj = _adjacency(g)
    n = g.vertex_count
    disc = [0] * n
    low = [0] * n
    parent_edge: list[int | None] = [None] * n
    timer = 0
    for root in range(n):
        if disc[root]:
            continue
        timer += 1
        disc[root] = low[root] = timer
        stack = [root]
        cursor = [0]
        while stack:
            u = stack[-1]
            i = cursor[-1]
            nbrs = adj[u]
            if i < len(nbrs):
                cursor[-1] = i + 1
                w, eid = nbrs[i]
                if eid == parent_edge[u]:
                    continue
                if disc[w] == 0:
                    parent_edge[w] = eid
                    timer += 1
                    disc[w] = low[w] = timer
                    stack.append(w)
                    cursor.append(0)
                elif disc[w] < low[u]:
                    low[u] = disc[w]
            else:
                stack.pop()
                cursor.pop()
                if stack:
                    p = stack[-1]
                    if low[u] < low[p]:
                        low[p] = low[u]
    return DfsState(disc, low, parent_edge, timer)


def find_bridges_dfs(g: Graph) -> BridgeReport:
    """All bridges of ``g``; disconnected inputs are fine.

    The tree edge into ``v`` from ``u`` is a bridge iff ``low[v] > disc[u]``.
    """
    state = dfs_lowlink(g)
    ends = {eid: (u, v) for eid, u, v in zip(g.ids.tolist(), g.us.tolist(), g.vs.tolist())}
    found = []
    for v, eid in enumerate(state.parent_edge):
        if eid is None:
            continue
        a, b = ends[eid]
        u = a if b == v else b
        if state.low[v] > state.disc[u]:
            found.append((eid, a, b))
    return BridgeReport.from_edges(found)
