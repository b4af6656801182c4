"""Independent brute-force machinery.

Labeled-tree enumeration through the Prufer bijection, an exhaustive
sweep checking the closed-form weighted-distance bounds against every
small integer-weighted tree, exhaustive/randomized verification of all
proximity and remoteness bounds, and the seeded random-connected-graph
sampler used by every randomized corpus.
"""

from __future__ import annotations

import heapq
import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, log
from typing import Callable, Iterator, Sequence, TypeVar

import numpy as np

from .construction import bound_report
from .graphs import Graph, graph_from_edges, is_connected, render_graph
from .weighted import heavy_majority_bound, heavy_minority_bound

#: Default seed for every randomized corpus (overridable via --seed).
DEFAULT_SEED = 1729

#: Hard ceiling on evaluated sweep instances.
SWEEP_BUDGET = 10**8

_T = TypeVar("_T")
_U = TypeVar("_U")


def parallel_map(fn: Callable[[_T], _U], items: Sequence[_T], jobs: int) -> list[_U]:
    """Order-preserving map, optionally across a process pool.

    Results are identical for any ``jobs`` value; parallelism only shards
    the work.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from multiprocessing import get_context

    with get_context("fork").Pool(min(jobs, len(items))) as pool:
        return pool.map(fn, items)


# ---------------------------------------------------------------------------
# Prufer bijection and tree enumeration


def _decode_edges(seq: Sequence[int], m: int) -> list[tuple[int, int]]:
    if m == 1:
        return []
    if m == 2:
        return [(0, 1)]
    degree = [1] * m
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(m) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def prufer_decode(seq: Sequence[int], m: int) -> Graph:
    """Labeled tree on ``m`` vertices for a sequence of length ``m - 2``."""
    if m < 1:
        raise ValueError("tree order must be positive")
    if len(seq) != max(0, m - 2):
        raise ValueError(f"sequence length {len(seq)} does not fit order {m}")
    if any(not 0 <= x < m for x in seq):
        raise ValueError("sequence entry out of range")
    return graph_from_edges(m, _decode_edges(seq, m))


def prufer_encode(t: Graph) -> tuple[int, ...]:
    """Inverse of :func:`prufer_decode` (smallest-leaf-first convention)."""
    m = t.n
    if t.edge_count() != m - 1 or not is_connected(t):
        raise ValueError("expected a tree")
    if m <= 2:
        return ()
    adj = [set(a) for a in t.adj]
    leaves = [v for v in range(m) if len(adj[v]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(m - 2):
        leaf = heapq.heappop(leaves)
        nbr = next(iter(adj[leaf]))
        seq.append(nbr)
        adj[nbr].discard(leaf)
        adj[leaf].clear()
        if len(adj[nbr]) == 1:
            heapq.heappush(leaves, nbr)
    return tuple(seq)


def tree_count(m: int) -> int:
    """Cayley's count of labeled trees."""
    return 1 if m <= 2 else m ** (m - 2)


def enumerate_trees(m: int) -> Iterator[Graph]:
    """All labeled trees on ``m`` vertices, each once, deterministic order."""
    if not 1 <= m <= 8:
        raise ValueError(f"tree enumeration supports 1 <= m <= 8, got {m}")
    for seq in itertools.product(range(m), repeat=max(0, m - 2)):
        yield prufer_decode(seq, m)


def _tree_distance_matrix(edges: list[tuple[int, int]], m: int) -> np.ndarray:
    adj: list[list[int]] = [[] for _ in range(m)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    mat = np.zeros((m, m), dtype=np.int64)
    for s in range(m):
        dist = [-1] * m
        dist[s] = 0
        dq = deque([s])
        while dq:
            u = dq.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    dq.append(w)
        mat[s] = dist
    return mat


# ---------------------------------------------------------------------------
# Exhaustive sweep of the weighted-distance bounds


@dataclass(frozen=True)
class SweepRecord:
    """Observed maxima for one (total, heavy) pair across the whole sweep."""

    total: int
    heavy: int
    median_bound: Fraction
    median_observed: int
    any_bound: Fraction
    any_observed: int

    @property
    def median_slack(self) -> Fraction:
        return self.median_bound - self.median_observed

    @property
    def any_slack(self) -> Fraction:
        return self.any_bound - self.any_observed


@dataclass(frozen=True)
class SweepViolation:
    kind: str  # "median" | "any"
    order: int
    prufer: tuple[int, ...]
    weights: tuple[int, ...]
    heavy: int
    observed: int
    bound: Fraction


@dataclass
class LemmaSweepReport:
    max_total: int
    max_order: int
    trees: int
    weightings: int  # tree x weight-vector combinations
    instances: int   # tree x vector x (designated vertex, heavy threshold)
    records: list[SweepRecord] = field(default_factory=list)
    violations: list[SweepViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def sweep_instance_count(max_total: int, max_order: int) -> tuple[int, int, int]:
    """Closed-form (trees, weightings, instances) for the sweep ranges."""
    trees = weightings = instances = 0
    for m in range(1, max_order + 1):
        t = tree_count(m)
        trees += t
        for total in range(m, max_total + 1):
            vectors = comb(total - 1, m - 1)
            weightings += t * vectors
            instances += t * vectors * (total - m)
    return trees, weightings, instances


def _median_bound(total: int, heavy: int) -> Fraction:
    n, h, k = Fraction(total), Fraction(heavy), Fraction(1)
    if h > n / 2:
        return heavy_majority_bound(n, h, k)
    return heavy_minority_bound(n, h, k)


def _any_bound(total: int, heavy: int) -> Fraction:
    return Fraction((total - heavy) * (total + heavy - 1), 2)


def _sweep_order(args: tuple[int, int]) -> tuple[dict, list[SweepViolation]]:
    """One shard: all trees of a fixed order against all weight vectors.

    Returns per-(total, heavy) observed maxima of the median and the
    overall weighted distance, plus any bound violations (with the
    argmax instance retained for counterexample dumps).
    """
    m, max_total = args
    vectors: list[tuple[int, ...]] = []
    for total in range(m, max_total + 1):
        vectors.extend(_compositions(total, m))
    if not vectors:
        return {}, []
    weights = np.array(vectors, dtype=np.int64)        # (V, m)
    totals = weights.sum(axis=1)
    wmax = weights.max(axis=1)

    seqs = list(itertools.product(range(m), repeat=max(0, m - 2)))
    med = np.empty((len(seqs), len(vectors)), dtype=np.int64)
    top = np.empty_like(med)
    for ti, seq in enumerate(seqs):
        dist = _tree_distance_matrix(_decode_edges(seq, m), m)
        sigma = weights @ dist  # sigma[j, x] = weighted distance of vertex x
        med[ti] = sigma.min(axis=1)
        top[ti] = sigma.max(axis=1)

    observed: dict[tuple[int, int], tuple[int, int]] = {}
    violations: list[SweepViolation] = []
    for total in range(m, max_total + 1):
        for heavy in range(2, total + 1):
            cols = np.nonzero((totals == total) & (wmax >= heavy))[0]
            if cols.size == 0:
                continue
            med_obs = int(med[:, cols].max())
            any_obs = int(top[:, cols].max())
            observed[(total, heavy)] = (med_obs, any_obs)
            for kind, obs, bound, mat in (
                ("median", med_obs, _median_bound(total, heavy), med),
                ("any", any_obs, _any_bound(total, heavy), top),
            ):
                if obs > bound:
                    flat = int(np.argmax(mat[:, cols]))
                    ti, cj = divmod(flat, cols.size)
                    violations.append(
                        SweepViolation(
                            kind=kind,
                            order=m,
                            prufer=tuple(seqs[ti]),
                            weights=tuple(int(x) for x in weights[cols[cj]]),
                            heavy=heavy,
                            observed=obs,
                            bound=bound,
                        )
                    )
    return observed, violations


def iter_sweep_instances(max_total: int, max_order: int) -> Iterator[tuple]:
    """Per-(tree, weight vector) rows for the instance-level CSV.

    Yields ``(tree_id, weights, median_sigma, bound, slack)`` where the
    bound is taken at the binding heavy threshold (the maximum weight).
    """
    for m in range(1, max_order + 1):
        for ti, seq in enumerate(itertools.product(range(m), repeat=max(0, m - 2))):
            dist = _tree_distance_matrix(_decode_edges(seq, m), m)
            tree_id = f"m{m}-{ti}"
            for total in range(m, max_total + 1):
                for weights in _compositions(total, m):
                    heavy = max(weights)
                    if heavy < 2:
                        continue
                    w = np.array(weights, dtype=np.int64)
                    sigma = w @ dist
                    med = int(sigma.min())
                    bound = _median_bound(total, heavy)
                    yield tree_id, weights, med, bound, bound - med


def instance_csv_rows(max_total: int, max_order: int) -> Iterator[str]:
    yield "tree_id,weights,median_sigma,bound,slack"
    for tree_id, weights, med, bound, slack in iter_sweep_instances(max_total, max_order):
        wtxt = "|".join(str(x) for x in weights)
        yield f"{tree_id},{wtxt},{med},{bound},{slack}"


def lemma_sweep(max_total: int = 9, max_order: int = 7, jobs: int = 1) -> LemmaSweepReport:
    """Exhaustively check both weighted-distance bounds, unit floor.

    Every labeled tree of order up to ``max_order`` is combined with every
    integer weight vector (entries >= 1) of total up to ``max_total``; for
    every admissible heavy threshold the minimum and maximum weighted
    distances are compared against the closed-form bounds.  Enumerating
    the designated heavy vertex collapses to the threshold test
    ``max(weights) >= heavy``, which covers every designation choice.
    """
    trees, weightings, instances = sweep_instance_count(max_total, max_order)
    if max_total > 9 or max_order > 7 or instances > SWEEP_BUDGET:
        raise ValueError(
            f"sweep budget exceeded: max_total <= 9 and max_order <= 7 required "
            f"({instances} instances requested, budget {SWEEP_BUDGET})"
        )
    shards = [(m, max_total) for m in range(1, max_order + 1)]
    results = parallel_map(_sweep_order, shards, jobs)

    merged: dict[tuple[int, int], tuple[int, int]] = {}
    violations: list[SweepViolation] = []
    for observed, viols in results:
        violations.extend(viols)
        for key, (med_obs, any_obs) in observed.items():
            if key in merged:
                old = merged[key]
                merged[key] = (max(old[0], med_obs), max(old[1], any_obs))
            else:
                merged[key] = (med_obs, any_obs)

    records = [
        SweepRecord(
            total=total,
            heavy=heavy,
            median_bound=_median_bound(total, heavy),
            median_observed=obs[0],
            any_bound=_any_bound(total, heavy),
            any_observed=obs[1],
        )
        for (total, heavy), obs in sorted(merged.items())
    ]
    return LemmaSweepReport(
        max_total=max_total,
        max_order=max_order,
        trees=trees,
        weightings=weightings,
        instances=instances,
        records=records,
        violations=violations,
    )


# ---------------------------------------------------------------------------
# Seeded random connected graphs


def random_connected_graph(
    rng: random.Random, max_order: int, order: int | None = None
) -> Graph:
    """Erdos-Renyi graph conditioned on connectivity by rejection.

    The edge probability is redrawn per attempt from a sparse-biased
    range above the connectivity threshold, so the corpus spans sparse
    to dense graphs.  Fully deterministic given the Random instance.
    """
    n = order if order is not None else rng.randint(2, max_order)
    if n == 1:
        return graph_from_edges(1, [])
    p_lo = min(1.0, 1.2 * log(n + 1) / n)
    for _ in range(1000):
        u = rng.random()
        p = p_lo + (1.0 - p_lo) * u * u
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        ]
        g = graph_from_edges(n, edges)
        if is_connected(g):
            return g
    raise RuntimeError(f"rejection sampling failed to connect a graph of order {n}")


def sample_corpus(seed: int, count: int, max_order: int) -> list[Graph]:
    """Deterministic corpus of random connected graphs."""
    rng = random.Random(seed)
    return [random_connected_graph(rng, max_order) for _ in range(count)]


# ---------------------------------------------------------------------------
# Exhaustive / randomized bound verification


@dataclass(frozen=True)
class BoundWitness:
    label: str
    slack: Fraction
    edge_list: str


@dataclass
class BoundCheckReport:
    mode: str
    params: dict
    graphs: int
    min_slack: dict[str, Fraction] = field(default_factory=dict)
    witness: dict[str, BoundWitness] = field(default_factory=dict)
    path_equality_ok: bool | None = None
    violations: list[BoundWitness] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and self.path_equality_ok is not False


def _is_path(g: Graph) -> bool:
    return g.n >= 2 and max(len(a) for a in g.adj) <= 2 and g.edge_count() == g.n - 1


def _check_one(labeled: tuple[str, Graph]) -> tuple[str, dict, bool, bool, str]:
    label, g = labeled
    report = bound_report(g)
    eq1_tight = report.slack["remoteness_order"] == 0
    return label, report.slack, report.all_hold(), eq1_tight == _is_path(g), render_graph(g)


def exhaustive_bound_check(
    max_n: int,
    sampler: str = "exhaustive-trees",
    samples: int = 0,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
) -> BoundCheckReport:
    """Verify all six bounds over trees (exhaustive) or random graphs.

    Trees mode enumerates every labeled tree on 2..max_n vertices and
    additionally checks that the order-only remoteness bound is tight
    exactly on paths.  Random mode checks ``samples`` seeded connected
    graphs of order up to ``max_n``.
    """
    if sampler == "exhaustive-trees":
        if not 2 <= max_n <= 8:
            raise ValueError(f"exhaustive tree mode needs 2 <= max_n <= 8, got {max_n}")
        labeled = [
            (f"tree-m{m}-i{i}", t)
            for m in range(2, max_n + 1)
            for i, t in enumerate(enumerate_trees(m))
        ]
        params = {"max_n": max_n}
    elif sampler == "random":
        if samples < 1:
            raise ValueError("random mode needs samples >= 1")
        graphs = sample_corpus(seed, samples, max_n)
        labeled = [(f"random-seed{seed}-i{i}", g) for i, g in enumerate(graphs)]
        params = {"max_n": max_n, "samples": samples, "seed": seed}
    else:
        raise ValueError(f"unknown sampler {sampler!r}")

    results = parallel_map(_check_one, labeled, jobs)
    report = BoundCheckReport(mode=sampler, params=params, graphs=len(labeled))
    path_eq_ok = True
    for label, slack, holds, path_eq, edge_list in results:
        if not holds:
            worst = min(slack, key=lambda k: slack[k])
            report.violations.append(BoundWitness(label, slack[worst], edge_list))
        path_eq_ok = path_eq_ok and path_eq
        for name, value in slack.items():
            if name not in report.min_slack or value < report.min_slack[name]:
                report.min_slack[name] = value
                report.witness[name] = BoundWitness(label, value, edge_list)
    report.path_equality_ok = path_eq_ok if sampler == "exhaustive-trees" else None
    return report
