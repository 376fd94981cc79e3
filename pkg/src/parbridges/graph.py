"""Undirected multigraph storage, edge-list I/O and G(n, p) generation.

Edges are identified by integer ids, never by endpoint pairs, so parallel
edges and self-loops survive every transformation. Endpoint arrays are
kept in ascending id order with the smaller endpoint first.
"""

from __future__ import annotations

import io
from typing import BinaryIO, Iterable, NamedTuple, TextIO, Union

import numpy as np

from parbridges.dsu import DisjointSetForest

# Pair draws per generator step; bounds memory, does not affect the stream.
_GNP_CHUNK = 1 << 22


class GraphParseError(ValueError):
    """Malformed edge-list input. ``line`` is 1-based."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class Edge(NamedTuple):
    id: int
    u: int
    v: int


def _frozen(values, dtype=np.int64) -> np.ndarray:
    arr = np.array(values, dtype=dtype).reshape(-1)
    arr.setflags(write=False)
    return arr


class Graph:
    """Immutable undirected multigraph on vertices ``0 .. vertex_count-1``.

    ``ids``, ``us`` and ``vs`` are read-only int64 arrays of equal length.
    If ``ids`` is omitted the edges are numbered ``0 .. m-1`` in the order
    given.
    """

    __slots__ = ("vertex_count", "ids", "us", "vs")

    def __init__(self, vertex_count: int, us, vs, ids=None) -> None:
        if vertex_count < 0:
            raise ValueError(f"vertex count must be non-negative, got {vertex_count}")
        us = np.asarray(us, dtype=np.int64).reshape(-1)
        vs = np.asarray(vs, dtype=np.int64).reshape(-1)
        if us.shape != vs.shape:
            raise ValueError("endpoint arrays differ in length")
        if ids is None:
            ids = np.arange(us.size, dtype=np.int64)
        else:
            ids = np.asarray(ids, dtype=np.int64).reshape(-1)
            if ids.shape != us.shape:
                raise ValueError("id array and endpoint arrays differ in length")
            if ids.size and np.any(ids[1:] <= ids[:-1]):
                order = np.argsort(ids, kind="stable")
                ids, us, vs = ids[order], us[order], vs[order]
                if np.any(ids[1:] == ids[:-1]):
                    raise ValueError("duplicate edge ids")
            if ids.size and ids[0] < 0:
                raise ValueError("edge ids must be non-negative")
        if us.size:
            lo = np.minimum(us, vs)
            hi = np.maximum(us, vs)
            if lo.min() < 0 or hi.max() >= vertex_count:
                bad = int(np.flatnonzero((lo < 0) | (hi >= vertex_count))[0])
                raise ValueError(
                    f"edge {int(ids[bad])} endpoint out of range [0, {vertex_count})"
                )
            us, vs = lo, hi
        self.vertex_count = int(vertex_count)
        self.ids = _frozen(ids)
        self.us = _frozen(us)
        self.vs = _frozen(vs)

    @classmethod
    def from_edges(cls, vertex_count: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        pairs = list(pairs)
        us = [p[0] for p in pairs]
        vs = [p[1] for p in pairs]
        return cls(vertex_count, us, vs)

    @property
    def edge_count(self) -> int:
        return int(self.ids.size)

    @property
    def edges(self) -> list[Edge]:
        return [
            Edge(i, u, v)
            for i, u, v in zip(self.ids.tolist(), self.us.tolist(), self.vs.tolist())
        ]

    def endpoints(self, edge_id: int) -> tuple[int, int]:
        pos = _positions(self, np.array([edge_id]))[0]
        return int(self.us[pos]), int(self.vs[pos])

    def __len__(self) -> int:
        return self.edge_count

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and np.array_equal(self.ids, other.ids)
            and np.array_equal(self.us, other.us)
            and np.array_equal(self.vs, other.vs)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


def _positions(g: Graph, ids: np.ndarray) -> np.ndarray:
    pos = np.searchsorted(g.ids, ids)
    ok = pos < g.ids.size
    ok[ok] = g.ids[pos[ok]] == ids[ok]
    if not ok.all():
        raise ValueError(f"unknown edge id {int(ids[~ok][0])}")
    return pos


def induced_subgraph_by_edge_ids(g: Graph, ids: Iterable[int]) -> Graph:
    """Graph on the same vertex set holding only the selected edges."""
    if isinstance(ids, np.ndarray):
        sel = ids.astype(np.int64, copy=False).reshape(-1)
    else:
        sel = np.fromiter(ids, dtype=np.int64)
    sel = np.unique(sel)
    pos = _positions(g, sel)
    return Graph(g.vertex_count, g.us[pos], g.vs[pos], g.ids[pos])


def connected_components(g: Graph) -> tuple[int, list[int]]:
    """Return ``(count, labels)``; labels are ``0 .. count-1`` numbered by
    smallest member vertex."""
    dsu = DisjointSetForest(g.vertex_count)
    for u, v in zip(g.us.tolist(), g.vs.tolist()):
        dsu.union(u, v)
    labels: list[int] = []
    by_root: dict[int, int] = {}
    for v in range(g.vertex_count):
        labels.append(by_root.setdefault(dsu.find(v), len(by_root)))
    return len(by_root), labels


def _read_text(source: Union[bytes, str, BinaryIO, TextIO]) -> str:
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    elif isinstance(source, str):
        return source
    else:
        data = source.read()
        if isinstance(data, str):
            return data
    try:
        return data.decode("ascii")
    except UnicodeDecodeError as exc:
        line = data[: exc.start].count(b"\n") + 1
        raise GraphParseError(line, "non-ASCII byte") from None


def _ints(line_no: int, tokens: list[str], what: str) -> tuple[int, int]:
    if len(tokens) != 2:
        raise GraphParseError(line_no, f"expected two integers for {what}, got {len(tokens)} tokens")
    try:
        a, b = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise GraphParseError(line_no, f"non-integer token in {what}") from None
    return a, b


def parse_edge_list(source: Union[bytes, str, BinaryIO, TextIO]) -> Graph:
    """Parse the ``n m`` header plus ``m`` lines of ``u v``.

    Lines starting with ``#`` and blank lines are skipped. Edge ids follow
    file order.
    """
    text = _read_text(source)
    header: tuple[int, int] | None = None
    us: list[int] = []
    vs: list[int] = []
    n = m = 0
    last_line = 0
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        last_line = line_no
        tokens = line.split()
        if header is None:
            header = _ints(line_no, tokens, "header")
            n, m = header
            if n < 0 or m < 0:
                raise GraphParseError(line_no, "negative count in header")
            continue
        if len(us) == m:
            raise GraphParseError(line_no, f"more than the declared {m} edges")
        u, v = _ints(line_no, tokens, "edge")
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphParseError(line_no, f"endpoint {x} out of range [0, {n})")
        us.append(u)
        vs.append(v)
    if header is None:
        raise GraphParseError(max(last_line, 1), "missing header")
    if len(us) != m:
        raise GraphParseError(last_line + 1, f"declared {m} edges, found {len(us)}")
    return Graph(n, us, vs)


def serialize_edge_list(g: Graph) -> str:
    """Canonical text form: ids renumbered densely in ascending-id order."""
    out = io.StringIO()
    out.write(f"{g.vertex_count} {g.edge_count}\n")
    if g.edge_count:
        out.write("\n".join(f"{u} {v}" for u, v in zip(g.us.tolist(), g.vs.tolist())))
        out.write("\n")
    return out.getvalue()


def generate_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): every pair ``u < v`` kept independently with
    probability ``p``.

    Pairs are visited in lexicographic order and consume one draw each from
    a Philox stream keyed by ``seed``, so the output depends only on
    ``(n, p, seed)``.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    total = n * (n - 1) // 2
    if total == 0 or p == 0.0:
        return Graph(n, [], [])
    rng = np.random.Generator(np.random.Philox(seed & 0xFFFFFFFFFFFFFFFF))
    hits = []
    for start in range(0, total, _GNP_CHUNK):
        k = min(_GNP_CHUNK, total - start)
        hits.append(np.flatnonzero(rng.random(k) < p) + start)
    idx = np.concatenate(hits)
    # Number of pairs preceding row u in lexicographic order.
    rows = np.arange(n, dtype=np.int64)
    offsets = rows * (n - 1) - rows * (rows - 1) // 2
    u = np.searchsorted(offsets, idx, side="right") - 1
    v = idx - offsets[u] + u + 1
    return Graph(n, u, v)
