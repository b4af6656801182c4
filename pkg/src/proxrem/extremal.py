"""Sequential sums of complete graphs and the near-extremal family.

The family ``K_d + K_1 + [K_1 + K_{d-1} + K_1]^(k-1) + K_1 + K_D`` (with
``d`` the minimum degree, ``D+1`` the maximum degree, consecutive blocks
completely joined) realizes any order / minimum-degree / maximum-degree
triple with ``(n - Delta)`` divisible by ``delta + 1``, and its proximity
and remoteness come within fixed additive constants of the degree-aware
upper bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .construction import degree_range_bounds
from .graphs import Graph, all_pairs_distances, degree_stats, graph_from_edges
from .invariants import invariant_summary


@dataclass(frozen=True)
class SequentialSumSpec:
    """Ordered complete-block sizes of a sequential sum."""

    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("sequential sum needs at least one block")
        if any(b < 1 for b in self.blocks):
            raise ValueError(f"block sizes must be positive, got {self.blocks}")


def sequential_sum(spec: SequentialSumSpec) -> Graph:
    """Disjoint complete blocks with every consecutive pair fully joined.

    Blocks are numbered left to right with contiguous vertex indices, so
    block membership is recoverable by index arithmetic.
    """
    starts = [0]
    for size in spec.blocks:
        starts.append(starts[-1] + size)
    n = starts[-1]
    edges: list[tuple[int, int]] = []
    for bi, size in enumerate(spec.blocks):
        lo, hi = starts[bi], starts[bi + 1]
        for u in range(lo, hi):
            for v in range(u + 1, hi):
                edges.append((u, v))
        if bi + 1 < len(spec.blocks):
            nlo, nhi = starts[bi + 1], starts[bi + 2]
            for u in range(lo, hi):
                for v in range(nlo, nhi):
                    edges.append((u, v))
    return graph_from_edges(n, edges)


@dataclass(frozen=True)
class ExtremalParams:
    """Valid parameter triple for the family: ``3 <= delta < Delta < n``
    and ``n - Delta`` a multiple of ``delta + 1``."""

    n: int
    delta: int
    Delta: int

    def __post_init__(self) -> None:
        if self.delta < 3:
            raise ValueError(f"family requires minimum degree >= 3, got {self.delta}")
        if not self.delta < self.Delta < self.n:
            raise ValueError(
                f"need delta < Delta < n, got ({self.delta}, {self.Delta}, {self.n})"
            )
        if (self.n - self.Delta) % (self.delta + 1) != 0:
            raise ValueError(
                f"n - Delta = {self.n - self.Delta} must be divisible by "
                f"delta + 1 = {self.delta + 1}; adjust n "
                f"(nearest valid: {nearest_valid_n(self.n, self.delta, self.Delta)})"
            )

    @property
    def k(self) -> int:
        return (self.n - self.Delta) // (self.delta + 1)


def nearest_valid_n(n: int, delta: int, Delta: int) -> int:
    """Closest order to ``n`` satisfying the divisibility requirement."""
    step = delta + 1
    rem = (n - Delta) % step
    down, up = n - rem, n - rem + step
    if down > Delta and n - down <= up - n:
        return down
    return up


def extremal_block_sizes(p: ExtremalParams) -> tuple[int, ...]:
    sizes = [p.delta, 1]
    sizes.extend([1, p.delta - 1, 1] * (p.k - 1))
    sizes.extend([1, p.Delta - 1])
    return tuple(sizes)


def extremal_graph(p: ExtremalParams) -> Graph:
    """Build the family member; order ``n``, degree extremes exactly
    ``(delta, Delta)``."""
    g = sequential_sum(SequentialSumSpec(extremal_block_sizes(p)))
    assert g.n == p.n
    return g


def layer_assignment(p: ExtremalParams) -> tuple[int, ...]:
    """Layer index (0-based, 0..k) per vertex.

    Layer 0 holds the first two blocks (``delta + 1`` vertices), layers
    ``1..k-1`` hold one repeated pattern each (``delta + 1`` vertices),
    and layer ``k`` holds the last two blocks (``Delta`` vertices).
    """
    sizes = extremal_block_sizes(p)
    layer_of_block = [0, 0]
    for i in range(p.k - 1):
        layer_of_block.extend([i + 1] * 3)
    layer_of_block.extend([p.k, p.k])
    out: list[int] = []
    for bi, size in enumerate(sizes):
        out.extend([layer_of_block[bi]] * size)
    return tuple(out)


@dataclass(frozen=True)
class SharpnessRecord:
    """Gap between the degree-aware bounds and the family's true values."""

    n: int
    delta: int
    Delta: int
    case: str
    proximity: Fraction
    pi_bound: Fraction
    gap_pi: Fraction
    remoteness: Fraction
    rho_bound: Fraction
    gap_rho: Fraction
    gap_pi_limit: Fraction
    within_limits: bool


def sharpness_report(p: ExtremalParams) -> SharpnessRecord:
    """Brute-force the family member's proximity/remoteness and measure
    the gap to the degree-aware bounds.

    Asserted limits: ``gap_pi < 49/4`` when ``Delta <= n/2``,
    ``gap_pi < 6*delta + 5/2`` when ``Delta >= n/2``, and always
    ``gap_rho <= 17/2``.  (At ``Delta = n/2`` both proximity limits
    apply; the tighter one is recorded.)
    """
    g = extremal_graph(p)
    assert degree_stats(g) == (p.delta, p.Delta)
    inv = invariant_summary(g, all_pairs_distances(g))
    bounds = degree_range_bounds(p.n, p.delta, p.Delta)
    gap_pi = bounds.pi_bound - inv.proximity
    gap_rho = bounds.rho_bound - inv.remoteness

    limits = []
    if 2 * p.Delta <= p.n:
        limits.append(Fraction(49, 4))
    if 2 * p.Delta >= p.n:
        limits.append(6 * p.delta + Fraction(5, 2))
    gap_pi_limit = min(limits)
    within = gap_pi < gap_pi_limit and gap_rho <= Fraction(17, 2)
    return SharpnessRecord(
        n=p.n,
        delta=p.delta,
        Delta=p.Delta,
        case=bounds.case,
        proximity=inv.proximity,
        pi_bound=bounds.pi_bound,
        gap_pi=gap_pi,
        remoteness=inv.remoteness,
        rho_bound=bounds.rho_bound,
        gap_rho=gap_rho,
        gap_pi_limit=gap_pi_limit,
        within_limits=within,
    )


def valid_Deltas(n: int, delta: int) -> list[int]:
    """All maximum degrees admitting a family member of order ``n``."""
    return [D for D in range(delta + 1, n) if (n - D) % (delta + 1) == 0]


def sharpness_sweep(delta: int, n_lo: int, n_hi: int) -> list[SharpnessRecord]:
    """Sharpness records for every valid (n, Delta) in an order range."""
    records = []
    for n in range(n_lo, n_hi + 1):
        for D in valid_Deltas(n, delta):
            records.append(sharpness_report(ExtremalParams(n, delta, D)))
    return records
