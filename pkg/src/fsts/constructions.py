"""Extremal hypergraph constructions and a seeded random generator.

Two families of obstructions to perfect designs are produced here: a
tripartite "space barrier" (too little within-part pair capacity for the
total demand, which blocks even fractional designs) and a "parity
blocker" in general uniformity (an odd/even counting contradiction that
rules out integral designs).  A seeded edge-deletion generator supplies
dense random instances for property testing.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError
from .hypergraph import Hypergraph, build_hypergraph


@dataclass(frozen=True)
class PartitionedHypergraph:
    """A hypergraph together with an ordered partition of its vertices."""

    hypergraph: Hypergraph
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for part in self.parts:
            for v in part:
                if v in seen:
                    raise InputError(f"vertex {v} appears in two parts")
                seen.add(v)
        if seen != set(range(self.hypergraph.n)):
            raise InputError("parts do not partition the vertex set")

    @property
    def part_sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @property
    def part_of(self) -> dict[int, int]:
        return {v: i for i, part in enumerate(self.parts) for v in part}


def complete_hypergraph(r: int, n: int) -> Hypergraph:
    """All C(n, r) edges on n vertices."""
    if n < r:
        raise InputError(f"complete hypergraph needs n >= r, got n={n}, r={r}")
    return build_hypergraph(r, n, itertools.combinations(range(n), r))


def _contiguous_parts(sizes: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    parts = []
    start = 0
    for size in sizes:
        parts.append(tuple(range(start, start + size)))
        start += size
    return tuple(parts)


def space_barrier_tripartite(n: int) -> PartitionedHypergraph:
    """Equitable tripartition with all transversal triples removed.

    Part sizes follow the case split (k-1, k, k), (k, k, k), (k, k, k+1)
    for n = 3k-1, 3k, 3k+1.  The result has minimum codegree at least
    2n/3 - 8/3, a complete shadow, and no perfect fractional design: the
    within-part pair capacity falls short of the total demand.
    """
    if n < 5:
        raise InputError(f"space barrier construction needs n >= 5, got {n}")
    rem = n % 3
    if rem == 2:  # n = 3k - 1
        k = (n + 1) // 3
        sizes = (k - 1, k, k)
    elif rem == 0:
        k = n // 3
        sizes = (k, k, k)
    else:  # n = 3k + 1
        k = (n - 1) // 3
        sizes = (k, k, k + 1)
    parts = _contiguous_parts(sizes)
    part_of = {v: i for i, part in enumerate(parts) for v in part}
    edges = [
        e
        for e in itertools.combinations(range(n), 3)
        if len({part_of[v] for v in e}) < 3
    ]
    return PartitionedHypergraph(build_hypergraph(3, n, edges), parts)


def parity_blocker(r: int, part_sizes: Iterable[int]) -> PartitionedHypergraph:
    """r-partite complement construction blocking integral designs.

    Needs exactly r parts whose sizes pairwise differ by at most two, with
    the first r-1 sizes odd.  Edges are all r-sets except those meeting
    every part exactly once.
    """
    sizes = tuple(part_sizes)
    if r < 2:
        raise InputError(f"uniformity must be at least 2, got {r}")
    if len(sizes) != r:
        raise InputError(f"expected exactly {r} part sizes, got {len(sizes)}")
    for i, size in enumerate(sizes[:-1]):
        if size % 2 == 0:
            raise InputError(f"part {i + 1} has even size {size}; first {r - 1} must be odd")
    if any(size < 1 for size in sizes):
        raise InputError("every part must be non-empty")
    spread = max(sizes) - min(sizes)
    if spread > 2:
        raise InputError(f"part sizes pairwise differ by {spread} > 2")
    n = sum(sizes)
    if n < r:
        raise InputError(f"need at least {r} vertices, got {n}")
    parts = _contiguous_parts(sizes)
    part_of = {v: i for i, part in enumerate(parts) for v in part}
    edges = [
        e
        for e in itertools.combinations(range(n), r)
        if len({part_of[v] for v in e}) < r
    ]
    return PartitionedHypergraph(build_hypergraph(r, n, edges), parts)


@dataclass(frozen=True)
class ParityCertificate:
    """Odd/even counting obstruction to an integral design.

    ``transversal_product`` is the product of the first r-1 part sizes.
    When it is odd and every edge covers 0 or 2 transversal (r-1)-tuples,
    no integral design can exist: its edges would have to cover an odd
    total in even steps.
    """

    transversal_product: int
    product_is_odd: bool
    edge_counts: tuple[tuple[tuple[int, ...], int], ...]
    counts_in_zero_two: bool

    @property
    def verdict(self) -> bool:
        return self.product_is_odd and self.counts_in_zero_two

    def to_json_dict(self) -> dict:
        return {
            "transversal_product": self.transversal_product,
            "product_is_odd": self.product_is_odd,
            "edges": [list(e) for e, _ in self.edge_counts],
            "transversal_tuple_counts": [c for _, c in self.edge_counts],
            "counts_in_zero_two": self.counts_in_zero_two,
            "verdict": self.verdict,
        }


def parity_certificate(ph: PartitionedHypergraph) -> ParityCertificate:
    """Count, per edge, the transversal (r-1)-subsets it covers.

    A subset is transversal when it has exactly one vertex in each of the
    first r-1 parts.  The verdict certifies non-existence of an integral
    design exactly when the part-size product is odd and every count is
    0 or 2.
    """
    h = ph.hypergraph
    r = h.r
    part_of = ph.part_of
    product = 1
    for part in ph.parts[: r - 1]:
        product *= len(part)
    counts = []
    for edge in h.edges:
        count = 0
        for omit in range(r):
            sub = edge[:omit] + edge[omit + 1:]
            tally = [0] * len(ph.parts)
            for v in sub:
                tally[part_of[v]] += 1
            if all(tally[i] == 1 for i in range(r - 1)):
                count += 1
        counts.append((edge, count))
    return ParityCertificate(
        transversal_product=product,
        product_is_odd=product % 2 == 1,
        edge_counts=tuple(counts),
        counts_in_zero_two=all(c in (0, 2) for _, c in counts),
    )


def random_min_codegree(n: int, floor: int, seed: int) -> Hypergraph:
    """Random dense 3-uniform hypergraph by guarded edge deletion.

    Starting from the complete hypergraph, edges are visited once in a
    seeded pseudorandom order and deleted whenever no pair's codegree
    would drop below ``floor``.  Deterministic per seed.  Since deleting
    an edge lowers three codegrees from n-2, any floor above n-3 leaves
    the complete hypergraph untouched.
    """
    if n < 3:
        raise InputError(f"need at least 3 vertices, got {n}")
    edges = list(itertools.combinations(range(n), 3))
    codegree: dict[tuple[int, int], int] = {}
    for e in edges:
        for p in itertools.combinations(e, 2):
            codegree[p] = codegree.get(p, 0) + 1
    rng = random.Random(seed)
    order = list(edges)
    rng.shuffle(order)
    kept = set(edges)
    for e in order:
        pairs = list(itertools.combinations(e, 2))
        if all(codegree[p] - 1 >= floor for p in pairs):
            kept.remove(e)
            for p in pairs:
                codegree[p] -= 1
    return build_hypergraph(3, n, sorted(kept))
