"""Degree statistics, driver-degree histograms, and experiment sweeps.

Sweeps emit one row per knob value (attachment direction p or reversal
probability R) with the edge-direction fraction f_hi_lo and the sampled
mean driver degree, ready for CSV plotting. All randomness is derived from
the sweep seed, one child seed per grid point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

import numpy as np

from .errors import UndefinedStatisticError, UsageError
from .generators import BaParams, ReversalParams, gen_directed_ba, reverse_edges
from .graph import DirectedGraph, average_degree, degrees
from .mds import MdsResult, sample_mds
from .seeding import spawn_seed

__all__ = [
    "DegreeHistogram",
    "SweepRow",
    "f_hi_lo",
    "avg_degree_of",
    "driver_degree_histogram",
    "sweep_p",
    "sweep_r",
    "sweep_rows_to_csv",
]

SWEEP_CSV_HEADER = "knob,f_hi_lo,mean_kd,avg_degree,ratio,samples,seed"


def f_hi_lo(graph: DirectedGraph) -> float:
    """Fraction of edges whose tail has strictly higher total degree than its head.

    Ties count in the denominator only. Undefined on edgeless graphs.
    """
    if graph.edge_count == 0:
        raise UndefinedStatisticError("f_hi_lo is undefined on an edgeless graph")
    tot = degrees(graph).total_degree
    e = np.asarray(graph.edges, dtype=np.int64)
    return float(np.count_nonzero(tot[e[:, 0]] > tot[e[:, 1]]) / graph.edge_count)


def avg_degree_of(graph: DirectedGraph, nodes) -> float:
    """Mean total degree over a non-empty node set."""
    idx = [int(v) for v in nodes]
    if not idx:
        raise UsageError("node set must be non-empty")
    tot = degrees(graph).total_degree
    return float(tot[idx].mean())


@dataclass(frozen=True)
class DegreeHistogram:
    """Per-degree node counts: (population, drivers) keyed by total degree."""

    counts: dict[int, tuple[int, int]]

    def population(self, k: int) -> int:
        return self.counts.get(k, (0, 0))[0]

    def driver_count(self, k: int) -> int:
        return self.counts.get(k, (0, 0))[1]

    def degrees(self) -> list[int]:
        return sorted(self.counts)

    def to_json(self) -> str:
        obj = {
            str(k): {"population": p, "drivers": d}
            for k, (p, d) in sorted(self.counts.items())
        }
        return json.dumps(obj, indent=2) + "\n"


def driver_degree_histogram(graph: DirectedGraph, mds: MdsResult) -> DegreeHistogram:
    """Count, for each observed total degree, all nodes and driver nodes."""
    tot = degrees(graph).total_degree
    pop = np.bincount(tot)
    drv = np.bincount(tot[list(mds.drivers)], minlength=len(pop))
    counts = {int(k): (int(pop[k]), int(drv[k])) for k in range(len(pop)) if pop[k] > 0}
    return DegreeHistogram(counts=counts)


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a sweep: knob value plus the sampled statistics."""

    knob: float
    f_hi_lo: float
    mean_kd: float
    avg_degree: float
    ratio: float
    sample_count: int
    seed: int


def _check_grid(grid) -> list[float]:
    values = [float(x) for x in grid]
    if not values:
        raise UsageError("grid must hold at least one value")
    for x in values:
        if not 0.0 <= x <= 1.0:
            raise UsageError(f"grid values must lie in [0, 1], got {x}")
    return values


def sweep_p(grid, ba_base: BaParams, samples: int = 1000, seed: int = 0) -> list[SweepRow]:
    """For each attachment-direction p: generate, measure f_hi_lo, sample MDSs."""
    values = _check_grid(grid)
    if samples < 1:
        raise UsageError(f"samples must be >= 1, got {samples}")
    rows = []
    for i, p in enumerate(values):
        point_seed = spawn_seed(seed, i)
        graph = gen_directed_ba(replace(ba_base, p=p, seed=point_seed))
        f = f_hi_lo(graph)
        summary, _ = sample_mds(graph, samples, point_seed)
        k = average_degree(graph)
        rows.append(
            SweepRow(
                knob=p,
                f_hi_lo=f,
                mean_kd=summary.mean_kd,
                avg_degree=k,
                ratio=summary.mean_kd / k,
                sample_count=samples,
                seed=point_seed,
            )
        )
    return rows


def sweep_r(graph: DirectedGraph, grid, samples: int = 1000, seed: int = 0) -> list[SweepRow]:
    """For each reversal probability R: transform the graph and sample MDSs."""
    values = _check_grid(grid)
    if samples < 1:
        raise UsageError(f"samples must be >= 1, got {samples}")
    rows = []
    for i, r in enumerate(values):
        point_seed = spawn_seed(seed, i)
        transformed = reverse_edges(graph, ReversalParams(r=r, seed=point_seed)).graph
        f = f_hi_lo(transformed)
        summary, _ = sample_mds(transformed, samples, point_seed)
        k = average_degree(transformed)
        rows.append(
            SweepRow(
                knob=r,
                f_hi_lo=f,
                mean_kd=summary.mean_kd,
                avg_degree=k,
                ratio=summary.mean_kd / k,
                sample_count=samples,
                seed=point_seed,
            )
        )
    return rows


def sweep_rows_to_csv(rows) -> str:
    """Fixed-header CSV, floats in shortest round-trip form."""
    lines = [SWEEP_CSV_HEADER]
    for row in rows:
        lines.append(
            f"{row.knob!r},{row.f_hi_lo!r},{row.mean_kd!r},{row.avg_degree!r},"
            f"{row.ratio!r},{row.sample_count},{row.seed}"
        )
    return "\n".join(lines) + "\n"
