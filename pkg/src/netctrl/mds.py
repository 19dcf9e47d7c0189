"""Driver-node extraction, degree-steered preferential matching, and MDS sampling.

A node is a driver when its in-role is unmatched by a maximum matching;
the minimum number of drivers is max(N - |M*|, 1). Because the matching
number is fixed, every maximum matching certifies a driver set of the same
size, but the composition varies: admitting nodes in a chosen rank order
while keeping the matching maximum on the growing subgraph biases which
nodes stay unmatched.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import UsageError, ValidationError
from .graph import DirectedGraph, degrees
from .matching import Matching, MatchingState, verify_maximum

__all__ = [
    "NodeOrder",
    "MdsResult",
    "SampleSummary",
    "drivers",
    "preferential_mds",
    "sample_mds",
]


@dataclass(frozen=True)
class NodeOrder:
    """A permutation of all node indices; position = rank.

    Degree-keyed orders sort by total degree with ties broken by node
    index ascending.
    """

    permutation: tuple[int, ...]
    key_spec: str = "explicit"

    def __post_init__(self):
        perm = tuple(int(v) for v in self.permutation)
        object.__setattr__(self, "permutation", perm)
        n = len(perm)
        if n and (len(set(perm)) != n or min(perm) != 0 or max(perm) != n - 1):
            raise UsageError("permutation must contain each node index exactly once")

    @classmethod
    def degree_ascending(cls, graph: DirectedGraph) -> NodeOrder:
        tot = degrees(graph).total_degree.tolist()
        perm = sorted(range(graph.node_count), key=lambda v: (tot[v], v))
        return cls(tuple(perm), "degree-ascending")

    @classmethod
    def degree_descending(cls, graph: DirectedGraph) -> NodeOrder:
        tot = degrees(graph).total_degree.tolist()
        perm = sorted(range(graph.node_count), key=lambda v: (-tot[v], v))
        return cls(tuple(perm), "degree-descending")

    @classmethod
    def random(cls, graph: DirectedGraph, seed: int) -> NodeOrder:
        perm = np.random.default_rng(seed).permutation(graph.node_count)
        return cls(tuple(int(v) for v in perm), f"random(seed={seed})")

    @classmethod
    def explicit(cls, permutation) -> NodeOrder:
        return cls(tuple(int(v) for v in permutation), "explicit")


@dataclass(frozen=True)
class MdsResult:
    """One driver node set with the matching that certifies it.

    When the matching is perfect the driver count is still 1; the first
    node of the supplied order is designated and ``perfect_matching`` is
    set so consumers know any node would do.
    """

    drivers: tuple[int, ...]
    n_d: int
    lambda_d: float
    avg_degree_d: float
    perfect_matching: bool
    witness: Matching


@dataclass(frozen=True)
class SampleSummary:
    """Ensemble statistics over sampled driver node sets."""

    sample_count: int
    n_d: int
    mean_kd: float
    min_kd: float
    max_kd: float
    distinct_driver_sets: int | None = None


def _drivers_unchecked(graph: DirectedGraph, matching: Matching, order: NodeOrder) -> MdsResult:
    n = graph.node_count
    tail_by_head = matching.tail_by_head
    unmatched = [v for v in range(n) if tail_by_head[v] < 0]
    if unmatched:
        driver_set = tuple(unmatched)
        perfect = False
    else:
        driver_set = (order.permutation[0],)
        perfect = True
    n_d = max(n - matching.size, 1)
    tot = degrees(graph).total_degree
    avg_kd = float(tot[list(driver_set)].mean())
    return MdsResult(
        drivers=driver_set,
        n_d=n_d,
        lambda_d=n_d / n,
        avg_degree_d=avg_kd,
        perfect_matching=perfect,
        witness=matching,
    )


def drivers(graph: DirectedGraph, matching: Matching, order: NodeOrder) -> MdsResult:
    """Driver node set certified by a maximum matching.

    The drivers are exactly the nodes whose in-role the matching leaves
    unmatched (nodes with zero in-degree are always among them unless the
    matching is perfect). Raises ValidationError when the matching is
    invalid or not maximum.
    """
    if not verify_maximum(graph, matching):
        raise ValidationError("matching is not maximum; driver extraction needs a maximum matching")
    return _drivers_unchecked(graph, matching, order)


def preferential_mds(graph: DirectedGraph, order: NodeOrder, m: int) -> MdsResult:
    """Find a driver set by admitting the first m nodes of an order one at a time.

    Starts from the subgraph holding only the first node and extends it
    node by node, restoring maximality after each admission, so a node
    matched early stays matched in the final matching. After m admissions
    the remaining nodes (if any) are admitted at once and the matching is
    completed with the same rank discipline. With a degree-ascending order
    and m = N the drivers skew toward high degree; degree-descending skews
    low.
    """
    n = graph.node_count
    if not 0 <= m <= n:
        raise UsageError(f"m must be within [0, {n}], got {m}")
    state = MatchingState(graph, order)
    for node in order.permutation[:m]:
        state.extend_with_node(node)
    if m < n:
        state.complete()
    return drivers(graph, state.matching, order)


def sample_mds(
    graph: DirectedGraph,
    count: int,
    seed: int,
    dedupe: bool = False,
) -> tuple[SampleSummary, list[MdsResult]]:
    """Sample driver node sets from independent randomized maximum matchings.

    Each sample runs a full maximum matching under a uniformly random node
    order with independently shuffled neighbor scans; sample i's random
    stream is derived from (seed, i), so any sample is reproducible in
    isolation. Samples are not forced to be distinct; with ``dedupe`` the
    summary reports how many distinct driver sets occurred (duplicates stay
    in the aggregate).
    """
    if count < 1:
        raise UsageError(f"sample count must be >= 1, got {count}")
    n = graph.node_count
    out_adj = graph.out_adjacency
    results: list[MdsResult] = []
    for i in range(count):
        rng = random.Random(f"{seed}:{i}")
        perm = list(range(n))
        rng.shuffle(perm)
        order = NodeOrder(tuple(perm), f"random(seed={seed},sample={i})")
        scan = [rng.sample(adj, len(adj)) if len(adj) > 1 else list(adj) for adj in out_adj]
        state = MatchingState(graph, order, scan_adjacency=scan)
        state.complete()
        # the completing pass ends with every free tail failing its search,
        # which is the Berge certificate of maximality
        results.append(_drivers_unchecked(graph, state.matching, order))
    kds = np.array([r.avg_degree_d for r in results])
    n_d = results[0].n_d
    if any(r.n_d != n_d for r in results):
        raise ValidationError("sampled driver-set sizes disagree; matching engine is broken")
    distinct = len({r.drivers for r in results}) if dedupe else None
    summary = SampleSummary(
        sample_count=count,
        n_d=n_d,
        mean_kd=float(kds.mean()),
        min_kd=float(kds.min()),
        max_kd=float(kds.max()),
        distinct_driver_sets=distinct,
    )
    return summary, results
