"""Synthetic directed networks and the degree-aware edge-reversal transform.

The growth model is classical preferential attachment with one twist: each
new edge is oriented from the existing node to the newcomer with
probability p, and the other way with probability 1 - p. High p therefore
makes edges point from high-degree nodes toward low-degree nodes, which is
the knob the direction experiments sweep.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UsageError
from .graph import DirectedGraph, degrees

__all__ = [
    "BaParams",
    "ReversalParams",
    "ReversalResult",
    "gen_directed_ba",
    "gen_directed_er",
    "reverse_edges",
]


@dataclass(frozen=True)
class BaParams:
    """Parameters of the directed preferential-attachment model.

    n: target node count; m_attach: edges per new node; m0: seed cycle
    size (defaults to m_attach); p: probability that a new edge points
    old -> new.
    """

    n: int
    m_attach: int = 2
    m0: int | None = None
    p: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.m0 is None:
            object.__setattr__(self, "m0", self.m_attach)
        if not self.m_attach >= 1:
            raise UsageError(f"m_attach must be >= 1, got {self.m_attach}")
        if not self.m0 >= self.m_attach:
            raise UsageError(f"m0 must be >= m_attach, got m0={self.m0}, m_attach={self.m_attach}")
        if not self.n > self.m0:
            raise UsageError(f"n must exceed m0, got n={self.n}, m0={self.m0}")
        if not 0.0 <= self.p <= 1.0:
            raise UsageError(f"p must lie in [0, 1], got {self.p}")


@dataclass(frozen=True)
class ReversalParams:
    """Edge-reversal knob: each low-to-high-degree edge flips with probability r."""

    r: float
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.r <= 1.0:
            raise UsageError(f"r must lie in [0, 1], got {self.r}")


@dataclass(frozen=True)
class ReversalResult:
    """Transformed graph plus tallies of applied and collision-skipped flips."""

    graph: DirectedGraph
    reversed_count: int
    skipped_count: int


def gen_directed_ba(params: BaParams) -> DirectedGraph:
    """Grow a directed preferential-attachment network.

    The seed is a directed cycle over m0 nodes (so every node starts with
    degree 2 and attachment weights are well defined); each new node then
    attaches m_attach edges to distinct existing nodes drawn proportionally
    to total degree, resampling on collision. Edge orientation is old->new
    with probability p. L = m0 + (n - m0) * m_attach, deterministic given
    the seed.
    """
    n, m, m0, p = params.n, params.m_attach, params.m0, params.p
    rng = np.random.default_rng(params.seed)
    edges = [(i, (i + 1) % m0) for i in range(m0)]
    # each node appears once per unit of total degree
    repeated = []
    for u, v in edges:
        repeated.append(u)
        repeated.append(v)
    for new in range(m0, n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(repeated[int(rng.integers(0, len(repeated)))])
        for old in sorted(targets):
            if rng.random() < p:
                edges.append((old, new))
            else:
                edges.append((new, old))
            repeated.append(old)
            repeated.append(new)
    labels = [str(i) for i in range(n)]
    provenance = (f"ba n={n} m={m} m0={m0} p={p} seed={params.seed}",)
    return DirectedGraph(labels, edges, provenance=provenance)


def gen_directed_er(n: int, l: int, seed: int = 0) -> DirectedGraph:
    """Uniform directed random graph: l distinct edges, no self-loops."""
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    capacity = n * (n - 1)
    if not 0 <= l <= capacity:
        raise UsageError(f"l must lie in [0, {capacity}] for n={n}, got {l}")
    rng = np.random.default_rng(seed)
    if l > capacity // 2:
        chosen = rng.permutation(capacity)[:l]
    else:
        picked: set[int] = set()
        chosen = []
        while len(chosen) < l:
            k = int(rng.integers(0, capacity))
            if k not in picked:
                picked.add(k)
                chosen.append(k)
    edges = []
    for k in chosen:
        k = int(k)
        u, r = divmod(k, n - 1) if n > 1 else (0, 0)
        v = r + 1 if r >= u else r
        edges.append((u, v))
    labels = [str(i) for i in range(n)]
    provenance = (f"er n={n} l={l} seed={seed}",)
    return DirectedGraph(labels, edges, provenance=provenance)


def reverse_edges(graph: DirectedGraph, params: ReversalParams) -> ReversalResult:
    """Flip low-to-high-degree edges with probability r.

    Degrees are snapshotted from the input graph before any flip, so the
    eligibility test k_tail < k_head never sees its own effects. A flip
    whose reversed edge already exists is skipped and tallied, preserving
    the edge count. Deterministic given the seed; r=0 returns an identical
    edge sequence.
    """
    rng = np.random.default_rng(params.seed)
    r = params.r
    tot = degrees(graph).total_degree.tolist()
    edges = list(graph.edges)
    edge_set = set(edges)
    reversed_count = 0
    skipped = 0
    for idx, (u, v) in enumerate(edges):
        if tot[u] < tot[v] and rng.random() < r:
            if (v, u) in edge_set:
                skipped += 1
                continue
            edge_set.discard((u, v))
            edge_set.add((v, u))
            edges[idx] = (v, u)
            reversed_count += 1
    provenance = graph.provenance + (
        f"reverse r={r} seed={params.seed} reversed={reversed_count} skipped={skipped}",
    )
    out = DirectedGraph(graph.labels, edges, provenance=provenance)
    return ReversalResult(graph=out, reversed_count=reversed_count, skipped_count=skipped)
