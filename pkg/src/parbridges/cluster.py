"""Partitioned bridge finding over ``M`` in-process workers.

Edges are split at random over the workers. Each worker reduces its share
to a sparse certificate, then certificates are merged pairwise up a binary
tree (worker ``i`` absorbs worker ``i + 2**(q-1)`` in round ``q``) until
worker 0 holds a certificate of the whole graph. A sequential DFS on that
certificate yields the bridges.

Workers only ever see their own edge subset and share nothing mutable.
``serial`` execution runs every task in the calling process; ``concurrent``
execution hands each round's tasks to a process pool and waits for all of
them before the next round starts.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from parbridges.bridges import BridgeReport, find_bridges_dfs
from parbridges.certificate import Certificate, certificate_edge_ids, sparse_certificate
from parbridges.graph import Graph, induced_subgraph_by_edge_ids

Execution = Literal["serial", "concurrent"]

# Separates the partition stream from generate_gnp's stream for equal seeds.
_PARTITION_STREAM = 0x70617274


@dataclass(frozen=True)
class PartitionPlan:
    machine_count: int
    assignment: np.ndarray  # machine index per edge, aligned with Graph.ids
    seed: int

    def counts(self) -> list[int]:
        return np.bincount(self.assignment, minlength=self.machine_count).tolist()

    def machine_edge_ids(self, g: Graph, machine: int) -> np.ndarray:
        return g.ids[self.assignment == machine]


@dataclass(frozen=True)
class PhaseSchedule:
    """``rounds[q - 1]`` lists the ``(absorbing, absorbed)`` machine pairs of
    merge phase ``q``; phase 0 is the per-machine certificate pass."""

    phase_count: int
    rounds: tuple[tuple[tuple[int, int], ...], ...]


@dataclass
class RunStats:
    """Per-phase bookkeeping of one parallel run.

    ``processed_edges[q]`` maps each machine that worked in phase ``q`` to
    the number of edges it fed to the certificate routine.
    ``certificate_sizes[q]`` maps every machine still holding a certificate
    after phase ``q`` to that certificate's size.
    """

    vertex_count: int
    machine_count: int
    processed_edges: list[dict[int, int]] = field(default_factory=list)
    certificate_sizes: list[dict[int, int]] = field(default_factory=list)
    phase_ms: list[float] = field(default_factory=list)
    partition_ms: float = 0.0
    final_dfs_ms: float = 0.0
    wall_clock_ms: float = 0.0
    final_certificate_ids: frozenset[int] = frozenset()

    @property
    def phase0_ms(self) -> float:
        return self.phase_ms[0] if self.phase_ms else 0.0

    @property
    def merge_ms(self) -> float:
        return sum(self.phase_ms[1:])

    @property
    def final_certificate_size(self) -> int:
        return len(self.final_certificate_ids)

    def bound_violations(self) -> list[tuple[int, int, int]]:
        """``(phase, machine, size)`` for every certificate above ``2(n - 1)``."""
        bound = 2 * max(self.vertex_count - 1, 0)
        return [
            (q, machine, size)
            for q, sizes in enumerate(self.certificate_sizes)
            for machine, size in sizes.items()
            if size > bound
        ]


def partition_edges(g: Graph, m: int, seed: int) -> PartitionPlan:
    """Assign each edge to one of ``m`` machines uniformly at random.

    The machine of edge id ``k`` is the ``k``-th draw of a Philox stream
    keyed by ``seed``, so it does not depend on which other edges exist.
    """
    if m < 1:
        raise ValueError(f"machine count must be at least 1, got {m}")
    if m == 1 or g.edge_count == 0:
        assignment = np.zeros(g.edge_count, dtype=np.int64)
    else:
        ss = np.random.SeedSequence([seed & 0xFFFFFFFFFFFFFFFF, _PARTITION_STREAM])
        rng = np.random.Generator(np.random.Philox(ss))
        draws = rng.integers(0, m, size=int(g.ids[-1]) + 1, dtype=np.int64)
        assignment = draws[g.ids]
    assignment.setflags(write=False)
    return PartitionPlan(m, assignment, seed)


def build_schedule(m: int) -> PhaseSchedule:
    if m < 1:
        raise ValueError(f"machine count must be at least 1, got {m}")
    merge_rounds = (m - 1).bit_length()  # ceil(log2 m)
    rounds = []
    for q in range(1, merge_rounds + 1):
        half = 1 << (q - 1)
        rounds.append(
            tuple((i, i + half) for i in range(0, m, 2 * half) if i + half < m)
        )
    return PhaseSchedule(merge_rounds + 1, tuple(rounds))


def merge_certificates(g: Graph, a: Certificate, b: Certificate) -> Certificate:
    """Certificate of the union of two certificates' edges, re-sparsified."""
    ids = np.union1d(a.edge_id_array(), b.edge_id_array())
    return sparse_certificate(induced_subgraph_by_edge_ids(g, ids))


def _certify(task: tuple[int, np.ndarray, np.ndarray, np.ndarray]) -> Certificate:
    n, ids, us, vs = task
    return sparse_certificate(Graph(n, us, vs, ids))


def _task(g: Graph, ids: np.ndarray):
    sub = induced_subgraph_by_edge_ids(g, ids)
    return sub.vertex_count, sub.ids, sub.us, sub.vs


def _noop(_: int) -> None:
    return None


def available_threads() -> int:
    """Hardware threads this process may run on."""
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def default_workers(m: int) -> int:
    return max(1, min(m, available_threads()))


def find_bridges_parallel(
    g: Graph,
    m: int,
    seed: int = 0,
    execution: Execution = "serial",
    *,
    executor: Executor | None = None,
    workers: int | None = None,
) -> tuple[BridgeReport, RunStats]:
    """Bridges of ``g`` computed through the partition / merge pipeline.

    The report's ids are ``g``'s own ids and equal ``find_bridges_dfs(g)``
    for every ``m`` and ``seed``. With ``execution="concurrent"`` tasks run
    on ``executor`` if given, else on a private process pool of ``workers``
    processes.
    """
    if execution not in ("serial", "concurrent"):
        raise ValueError(f"unknown execution mode {execution!r}")
    start = time.perf_counter()
    plan = partition_edges(g, m, seed)
    schedule = build_schedule(m)
    stats = RunStats(g.vertex_count, m)
    stats.partition_ms = (time.perf_counter() - start) * 1e3

    own_pool = None
    if execution == "concurrent" and executor is None:
        n_workers = workers or default_workers(m)
        own_pool = executor = ProcessPoolExecutor(max_workers=n_workers)
        # Start the worker processes outside the timed phases.
        list(executor.map(_noop, range(n_workers)))

    def run(tasks):
        if execution == "serial":
            return [_certify(t) for t in tasks]
        return list(executor.map(_certify, tasks))

    try:
        t0 = time.perf_counter()
        order = np.argsort(plan.assignment, kind="stable")
        bounds = np.searchsorted(plan.assignment[order], np.arange(m + 1))
        tasks = [_task(g, g.ids[order[bounds[i]:bounds[i + 1]]]) for i in range(m)]
        stats.processed_edges.append({i: int(t[1].size) for i, t in enumerate(tasks)})
        held = dict(enumerate(run(tasks)))
        stats.phase_ms.append((time.perf_counter() - t0) * 1e3)
        stats.certificate_sizes.append({i: len(c) for i, c in held.items()})

        for pairs in schedule.rounds:
            t0 = time.perf_counter()
            unions = [
                np.union1d(held[a].edge_id_array(), held[b].edge_id_array())
                for a, b in pairs
            ]
            stats.processed_edges.append(
                {a: int(ids.size) for (a, _), ids in zip(pairs, unions)}
            )
            merged = run([_task(g, ids) for ids in unions])
            for (a, b), cert in zip(pairs, merged):
                held[a] = cert
                del held[b]
            stats.phase_ms.append((time.perf_counter() - t0) * 1e3)
            stats.certificate_sizes.append({i: len(c) for i, c in held.items()})
    finally:
        if own_pool is not None:
            own_pool.shutdown()

    assert list(held) == [0], "merge schedule must leave only machine 0"
    final = held[0]
    t0 = time.perf_counter()
    report = find_bridges_dfs(induced_subgraph_by_edge_ids(g, final.edge_id_array()))
    stats.final_dfs_ms = (time.perf_counter() - t0) * 1e3
    stats.final_certificate_ids = certificate_edge_ids(final)
    stats.wall_clock_ms = (time.perf_counter() - start) * 1e3
    return report, stats
