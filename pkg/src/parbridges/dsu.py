"""Disjoint-set forest with union by rank and path compression."""

from __future__ import annotations


class DisjointSetForest:
    """Union-find over the elements ``0 .. n-1``.

    Not safe for concurrent mutation; every worker owns its own instance.
    """

    __slots__ = ("parent", "rank")

    def __init__(self, n: int) -> None:
        if n < 0:
            raise ValueError(f"element count must be non-negative, got {n}")
        self.parent = list(range(n))
        self.rank = [0] * n

    def __len__(self) -> int:
        return len(self.parent)

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self.parent):
            raise ValueError(f"element {v} out of range [0, {len(self.parent)})")

    def find(self, v: int) -> int:
        """Return the root of the set containing ``v``.

        Compresses the traversed path; the partition itself never changes.
        """
        self._check(v)
        parent = self.parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def union(self, u: int, v: int) -> bool:
        """Merge the sets of ``u`` and ``v``.

        Returns ``False`` iff both were already in one set, i.e. an edge
        ``(u, v)`` would close a cycle.
        """
        ru = self.find(u)
        rv = self.find(v)
        if ru == rv:
            return False
        rank = self.rank
        if rank[ru] < rank[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        if rank[ru] == rank[rv]:
            rank[ru] += 1
        return True

    def union_scan(self, us, vs, skip=None, limit: int | None = None) -> list[int]:
        """Union ``(us[i], vs[i])`` for each ``i`` in order, skipping
        positions where ``skip[i]`` is true.

        Returns the positions whose union merged two sets. Stops early once
        ``limit`` merges happened. Same semantics as repeated :meth:`union`
        with the per-call overhead removed; endpoints are not range-checked.
        """
        parent = self.parent
        rank = self.rank
        merged: list[int] = []
        if limit is None:
            limit = len(parent)
        if limit <= 0:
            return merged
        for i, (u, v) in enumerate(zip(us, vs)):
            if skip is not None and skip[i]:
                continue
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            if u == v:
                continue
            if rank[u] < rank[v]:
                u, v = v, u
            parent[v] = u
            if rank[u] == rank[v]:
                rank[u] += 1
            merged.append(i)
            if len(merged) == limit:
                break
        return merged

    def connected(self, u: int, v: int) -> bool:
        return self.find(u) == self.find(v)

    def root_count(self) -> int:
        return sum(1 for i, p in enumerate(self.parent) if i == p)
