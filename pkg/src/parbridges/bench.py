"""Scaling sweeps over machine count, vertex count or edge count."""

from __future__ import annotations

import csv
import math
from dataclasses import astuple, dataclass
from typing import IO, Iterable

from parbridges.cluster import Execution, find_bridges_parallel
from parbridges.graph import Graph, generate_gnp

CSV_HEADER = (
    "n",
    "m",
    "machines",
    "mode",
    "wall_clock_ms",
    "phase0_ms",
    "merge_ms",
    "final_dfs_ms",
    "certificate_size",
    "model_cost",
)

_ALIASES = {"M": "M", "machines": "M", "V": "V", "n": "V", "E": "E", "m": "E", "seed": "seed"}
_MODES: dict[str, Execution] = {"sim": "serial", "par": "concurrent"}


class SweepSpecError(ValueError):
    pass


@dataclass(frozen=True)
class SweepSpec:
    """One swept variable (``M``, ``V`` or ``E``) with the other two fixed."""

    variable: str
    values: tuple[int, ...]
    machines: int
    vertices: int
    edges: int
    seed: int = 0

    def points(self) -> list[tuple[int, int, int]]:
        """``(n, target m, M)`` for each sweep value, in order."""
        out = []
        for x in self.values:
            n, m, machines = self.vertices, self.edges, self.machines
            if self.variable == "V":
                n = x
            elif self.variable == "E":
                m = x
            else:
                machines = x
            out.append((n, m, machines))
        return out


def parse_sweep_spec(text: str, seed: int = 0) -> SweepSpec:
    """Parse ``"M=1,2,4,8;V=20000;E=2000000"``.

    The first clause names the swept variable and its values; the others
    fix the remaining variables. An optional ``seed=`` clause overrides
    ``seed``.
    """
    clauses = [c.strip() for c in text.split(";") if c.strip()]
    if not clauses:
        raise SweepSpecError("empty sweep spec")
    parsed: dict[str, list[int]] = {}
    for clause in clauses:
        key, sep, raw = clause.partition("=")
        key = _ALIASES.get(key.strip())
        if not sep or key is None:
            raise SweepSpecError(f"bad clause {clause!r}; expected M=, V=, E= or seed=")
        if key in parsed:
            raise SweepSpecError(f"variable {key} given twice")
        try:
            values = [int(tok) for tok in raw.split(",") if tok.strip()]
        except ValueError:
            raise SweepSpecError(f"non-integer value in {clause!r}") from None
        if not values:
            raise SweepSpecError(f"empty value list for {key}")
        parsed[key] = values
    variable = _ALIASES[clauses[0].partition("=")[0].strip()]
    if variable == "seed":
        raise SweepSpecError("the swept variable must be M, V or E")
    for key in ("M", "V", "E"):
        if key not in parsed:
            raise SweepSpecError(f"missing value for {key}")
        if key != variable and len(parsed[key]) != 1:
            raise SweepSpecError(f"only the swept variable {variable} may list several values")
    if "seed" in parsed:
        if len(parsed["seed"]) != 1:
            raise SweepSpecError("seed takes a single value")
        seed = parsed["seed"][0]
    spec = SweepSpec(
        variable,
        tuple(parsed[variable]),
        parsed["M"][0],
        parsed["V"][0],
        parsed["E"][0],
        seed,
    )
    for n, m, machines in spec.points():
        if machines < 1 or n < 0 or m < 0:
            raise SweepSpecError(f"invalid sweep point n={n} m={m} M={machines}")
    return spec


def model_cost(n: int, m: int, machines: int) -> float:
    """Analytic cost ``m/M + n*log2(M)`` of one run."""
    return m / machines + n * math.log2(machines)


@dataclass(frozen=True)
class BenchRecord:
    n: int
    m: int
    machines: int
    mode: str
    wall_clock_ms: float
    phase0_ms: float
    merge_ms: float
    final_dfs_ms: float
    certificate_size: int
    model_cost: float


def dense_graph(n: int, target_edges: int, seed: int) -> Graph:
    """G(n, p) with ``p`` chosen so the expected edge count is ``target_edges``."""
    pairs = n * (n - 1) // 2
    p = min(1.0, target_edges / pairs) if pairs else 0.0
    return generate_gnp(n, p, seed)


def bench_point(g: Graph, machines: int, mode: str, seed: int = 0) -> BenchRecord:
    if mode not in _MODES:
        raise ValueError(f"benchmark mode must be one of {sorted(_MODES)}, got {mode!r}")
    _, stats = find_bridges_parallel(g, machines, seed, _MODES[mode])
    return BenchRecord(
        n=g.vertex_count,
        m=g.edge_count,
        machines=machines,
        mode=mode,
        wall_clock_ms=stats.wall_clock_ms,
        phase0_ms=stats.phase0_ms,
        merge_ms=stats.merge_ms,
        final_dfs_ms=stats.final_dfs_ms,
        certificate_size=stats.final_certificate_size,
        model_cost=model_cost(g.vertex_count, g.edge_count, machines),
    )


def run_sweep(spec: SweepSpec, mode: str) -> list[BenchRecord]:
    records = []
    key, g = None, None
    for n, m, machines in spec.points():
        if key != (n, m):
            key, g = (n, m), dense_graph(n, m, spec.seed)
        records.append(bench_point(g, machines, mode, spec.seed))
    return records


def write_csv(records: Iterable[BenchRecord], out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        row = list(astuple(r))
        for k in (4, 5, 6, 7):
            row[k] = f"{row[k]:.3f}"
        row[9] = repr(row[9])
        writer.writerow(row)
