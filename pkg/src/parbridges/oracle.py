"""Brute-force bridge reference.

Deletes each edge in turn and recounts components with a plain BFS. Shares
no code with the low-link or certificate paths on purpose. Quadratic; only
for small graphs.
"""

from __future__ import annotations

from collections import deque

from parbridges.bridges import BridgeReport
from parbridges.graph import Graph


def _count_components(n: int, edges: list[tuple[int, int, int]], skip: int | None) -> int:
    adj: list[list[int]] = [[] for _ in range(n)]
    for eid, u, v in edges:
        if eid == skip:
            continue
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    count = 0
    for s in range(n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return count


def bridges_bruteforce(g: Graph) -> BridgeReport:
    edges = list(zip(g.ids.tolist(), g.us.tolist(), g.vs.tolist()))
    base = _count_components(g.vertex_count, edges, None)
    found = [
        (eid, u, v)
        for eid, u, v in edges
        if u != v and _count_components(g.vertex_count, edges, eid) > base
    ]
    return BridgeReport.from_edges(found)
