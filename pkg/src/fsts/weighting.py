"""Edge gadgets and the pair-exact weighting on dense 3-uniform hypergraphs.

The central construction assigns every edge an exact rational weight so
that each pair of vertices with positive codegree collects total weight
exactly one.  It is built from local gadgets living inside 5-vertex
cliques: the gadget of a pair p in a 5-clique K raises the weight of p by
one and leaves every other pair untouched, at the cost of some negative
edge weights.  Distributing each pair's demand over all 5-cliques through
ordered-clique weights W produces the global weighting ``w_H``; whether it
stays non-negative is a density question, probed here by exact evaluation
of every ordered-triple weight.

Everything is computed in ``fractions.Fraction``.  The pair-degree-one
property is an exact identity, so tests compare with ``==`` rather than
tolerances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .errors import CliqueExtensionError, CodegreeConditionError, InputError
from .hypergraph import (
    Hypergraph,
    cliques,
    common_coneighborhood,
    is_clique,
    ordered_clique,
    shadow,
)
from .serialize import format_fraction, parse_fraction

_THIRD = Fraction(1, 3)
_MINUS_SIXTH = Fraction(-1, 6)


def _gadget_value(edge_vertices, pair) -> Fraction:
    """Gadget coefficient by overlap: +1/3 for overlap 0 or 2, -1/6 for 1."""
    overlap = len(set(edge_vertices) & set(pair))
    return _THIRD if overlap in (0, 2) else _MINUS_SIXTH


class Weighting:
    """Exact rational edge weighting of a host hypergraph.

    Edges without an explicit entry weigh zero.  Instances are treated as
    immutable values.
    """

    __slots__ = ("host", "_values")

    def __init__(self, host: Hypergraph, values: Mapping[tuple, Fraction]):
        canon: dict[tuple[int, ...], Fraction] = {}
        for edge, value in values.items():
            key = tuple(sorted(edge))
            if key not in host.edge_set:
                raise InputError(f"weighting key {key} is not an edge of the host")
            canon[key] = Fraction(value)
        self.host = host
        self._values = canon

    def __getitem__(self, edge) -> Fraction:
        return self._values.get(tuple(sorted(edge)), Fraction(0))

    def get(self, edge) -> Fraction:
        return self[edge]

    def __len__(self) -> int:
        return len(self._values)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(e for e, v in self._values.items() if v != 0)

    def sorted_items(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._values.items())

    def total(self) -> Fraction:
        return sum(self._values.values(), Fraction(0))

    def pair_degree(self, subset) -> Fraction:
        """Total weight of edges containing the given (r-1)-subset."""
        sub = tuple(sorted(subset))
        total = Fraction(0)
        for v in self.host.neighbors(sub):
            total += self._values.get(tuple(sorted(sub + (v,))), Fraction(0))
        return total

    def to_json_dict(self) -> dict:
        items = self.sorted_items()
        return {
            "edges": [list(e) for e, _ in items],
            "weights": [format_fraction(v) for _, v in items],
        }

    @classmethod
    def from_json_dict(cls, host: Hypergraph, payload: Mapping) -> "Weighting":
        edges = payload.get("edges")
        weights = payload.get("weights")
        if edges is None or weights is None or len(edges) != len(weights):
            raise InputError("weighting JSON needs matching 'edges' and 'weights'")
        return cls(host, {tuple(e): parse_fraction(w) for e, w in zip(edges, weights)})


@dataclass(frozen=True)
class PairDegreeReport:
    """Exact per-pair weighted degrees plus the fractional-design verdict."""

    degrees: tuple[tuple[tuple[int, ...], Fraction], ...]
    min_weight: Optional[Fraction]
    max_weight: Optional[Fraction]
    all_degrees_one: bool
    weights_in_unit_interval: bool
    violating_pairs: tuple[tuple[int, ...], ...]
    violating_edges: tuple[tuple[int, ...], ...]

    @property
    def is_perfect_fractional_sts(self) -> bool:
        return self.all_degrees_one and self.weights_in_unit_interval

    def to_json_dict(self) -> dict:
        return {
            "pairs": [list(p) for p, _ in self.degrees],
            "degrees": [format_fraction(d) for _, d in self.degrees],
            "min_weight": None if self.min_weight is None else format_fraction(self.min_weight),
            "max_weight": None if self.max_weight is None else format_fraction(self.max_weight),
            "all_degrees_one": self.all_degrees_one,
            "weights_in_unit_interval": self.weights_in_unit_interval,
            "is_perfect_fractional_sts": self.is_perfect_fractional_sts,
            "violating_pairs": [list(p) for p in self.violating_pairs],
            "violating_edges": [list(e) for e in self.violating_edges],
        }


def edge_gadget(h: Hypergraph, K: Iterable[int], p: Iterable[int]) -> Weighting:
    """The gadget weighting of pair ``p`` inside a 5-clique ``K``.

    Supported on the ten edges inside K: the single edge disjoint from p
    and the three edges containing p get +1/3, the six edges meeting p in
    one vertex get -1/6.
    """
    if h.r != 3:
        raise InputError("edge gadgets require a 3-uniform hypergraph")
    Ks = tuple(sorted(set(K)))
    if len(Ks) != 5:
        raise InputError(f"K must have 5 distinct vertices, got {Ks}")
    if not is_clique(h, Ks):
        raise InputError(f"{Ks} is not a 5-clique of the host")
    ps = tuple(sorted(set(p)))
    if len(ps) != 2 or not set(ps) <= set(Ks):
        raise InputError(f"p must be a pair inside K, got {ps}")
    values = {
        edge: _gadget_value(edge, ps) for edge in itertools.combinations(Ks, 3)
    }
    return Weighting(h, values)


def gadget_degree(h: Hypergraph, K, p, q) -> Fraction:
    """Weighted degree of pair ``q`` under the gadget of ``p`` in ``K``.

    Evaluates to 1 when q equals p and to 0 for every other shadow pair.
    """
    qs = tuple(sorted(set(q)))
    if len(qs) != 2:
        raise InputError(f"q must be a pair, got {qs}")
    if h.degree(qs) == 0:
        raise InputError(f"pair {qs} has zero codegree, not in the shadow")
    return edge_gadget(h, K, p).pair_degree(qs)


def _weight_from_key(h: Hypergraph, key) -> Fraction:
    """Ordered-clique weight from its cache key ((a,b) sorted, rest...)."""
    memo = h._memo.setdefault("W", {})
    value = memo.get(key)
    if value is not None:
        return value
    prefix = key[0]
    value = Fraction(1)
    count = h.extension_count(prefix)
    if count == 0:
        raise CliqueExtensionError(
            f"clique {tuple(sorted(prefix))} has no 3-clique extension"
        )
    value /= count
    current = prefix
    for v in key[1:]:
        current = current + (v,)
        count = h.extension_count(current)
        if count == 0:
            raise CliqueExtensionError(
                f"clique {tuple(sorted(current))} has no {len(current) + 1}-clique extension"
            )
        value /= count
    memo[key] = value
    return value


def _w(h: Hypergraph, *vertices: int) -> Fraction:
    key = (tuple(sorted(vertices[:2])),) + vertices[2:]
    return _weight_from_key(h, key)


def clique_weight(h: Hypergraph, K: Iterable[int]) -> Fraction:
    """Demand-delegation weight of an ordered clique of 2 to 4 vertices.

    The product over prefixes of one over the number of clique extensions.
    Swapping the first two vertices never changes the value. The last
    prefix must still extend, so a 4-tuple requires a 5-clique above it.
    """
    tup = ordered_clique(h, tuple(K))
    if len(tup) > 4:
        raise InputError("clique weights are defined for 2 to 4 vertices")
    return _w(h, *tup)


def scaled_clique_weight(h: Hypergraph, K: Iterable[int]) -> Fraction:
    """Clique weight rescaled by n**(k-1); a product of inverse densities."""
    tup = tuple(K)
    return Fraction(h.n) ** (len(tup) - 1) * clique_weight(h, tup)


def _admissibility(h: Hypergraph):
    """Cached check that the weighting is defined and pair-exact.

    Requires a 3-uniform host on at least 5 vertices in which every edge
    extends to a 4-clique and every 4-clique extends to a 5-clique.  These
    structural facts are exactly what a large essential minimum codegree
    guarantees, and they are what the degree-one identity needs: with them
    every shadow pair sits inside a 5-clique and the per-level demand
    distribution telescopes to one.
    """
    cached = h._memo.get("admissible")
    if cached is None:
        cached = _compute_admissibility(h)
        h._memo["admissible"] = cached
    return cached


def _compute_admissibility(h: Hypergraph):
    if h.r != 3:
        return (False, "host must be 3-uniform", None)
    if h.n < 5:
        return (False, f"host has {h.n} < 5 vertices", None)
    for edge in h.edges:
        if h.extension_count(edge) == 0:
            return (
                False,
                f"edge {edge} extends to no 4-clique "
                f"(pair {edge[:2]} too sparse around it)",
                edge,
            )
    for four in cliques(h, 4):
        if h.extension_count(four) == 0:
            return (
                False,
                f"4-clique {four} extends to no 5-clique "
                f"(pair {four[:2]} too sparse around it)",
                four,
            )
    return (True, "", None)


def check_weighting_preconditions(h: Hypergraph) -> None:
    """Raise :class:`CodegreeConditionError` when ``w_H`` is not available."""
    ok, message, failing = _admissibility(h)
    if not ok:
        raise CodegreeConditionError(
            f"codegree precondition for the pair-exact weighting fails: {message}",
            failing=failing,
        )


def is_weighting_admissible(h: Hypergraph) -> bool:
    return _admissibility(h)[0]


def weighting_w_H(h: Hypergraph) -> Weighting:
    """The global pair-exact weighting.

    Every edge weight is half the sum, over ordered 5-cliques containing
    the edge, of the weight of the first four vertices times the gadget
    coefficient of the ordered clique's leading pair.  Grouped here per
    unordered 5-clique for speed; the grouping is an exact rearrangement.
    """
    check_weighting_preconditions(h)
    acc: dict[tuple[int, ...], Fraction] = {e: Fraction(0) for e in h.edges}
    for S in cliques(h, 5):
        for a, b in itertools.combinations(S, 2):
            rest = tuple(v for v in S if v != a and v != b)
            pair_key = (a, b)
            wsum = Fraction(0)
            for c, d in itertools.permutations(rest, 2):
                wsum += _weight_from_key(h, (pair_key, c, d))
            for edge in itertools.combinations(S, 3):
                acc[edge] += wsum * _gadget_value(edge, pair_key)
    return Weighting(h, acc)


def ordered_weight(h: Hypergraph, O: Iterable[int]) -> Fraction:
    """Weight of an ordered edge: half the sum over ordered 5-cliques that
    contain the tuple as a subsequence of W(first four) times the gadget
    coefficient of the leading pair on the underlying edge."""
    check_weighting_preconditions(h)
    tup = ordered_clique(h, tuple(O))
    if len(tup) != 3:
        raise InputError("ordered weights are defined on ordered triples")
    tri = set(tup)
    total = Fraction(0)
    cn3 = sorted(common_coneighborhood(h, vertices=tup))
    for i, y in enumerate(cn3):
        cn4 = common_coneighborhood(h, vertices=tri | {y})
        for z in cn3[i + 1:]:
            if z not in cn4:
                continue
            # interleave y and z into the 5 slots, keeping O in order
            for py, pz in itertools.permutations(range(5), 2):
                K = [0] * 5
                K[py] = y
                K[pz] = z
                it = iter(tup)
                for slot in range(5):
                    if slot != py and slot != pz:
                        K[slot] = next(it)
                lead = (K[0], K[1]) if K[0] < K[1] else (K[1], K[0])
                total += _weight_from_key(h, (lead, K[2], K[3])) * _gadget_value(
                    tup, lead
                )
    return total / 2


def ordered_weight_expanded(h: Hypergraph, O: Iterable[int]) -> Fraction:
    """Closed form of :func:`ordered_weight` after telescoping cancellation.

    One sixth of W(x1,x2) minus correction terms over the co-neighborhoods
    of the triple; exactly equal to the direct sum on admissible hosts.
    """
    check_weighting_preconditions(h)
    tup = ordered_clique(h, tuple(O))
    if len(tup) != 3:
        raise InputError("ordered weights are defined on ordered triples")
    correction = _w1_inner_sum(h, tup)
    return (_w(h, tup[0], tup[1]) - correction) / 6


def _w1_inner_sum(h: Hypergraph, O: tuple[int, int, int]) -> Fraction:
    x1, x2, x3 = O
    total = Fraction(0)
    for y in sorted(common_coneighborhood(h, vertices=(x1, x2, x3))):
        inner = _w(h, x1, y, x2) - _w(h, x1, x2, y)
        for z in sorted(common_coneighborhood(h, vertices=(x1, x2, x3, y))):
            inner += (
                _w(h, x1, y, x2, z)
                - _w(h, x1, x2, y, z)
                + _w(h, x1, y, z, x2)
                - _w(h, y, z, x1, x2)
            )
        total += inner
    return total


def w1(h: Hypergraph, O: Iterable[int]) -> Fraction:
    """Normalized complement of the ordered weight.

    Defined as 1 minus six times the codegree of the leading pair times the
    ordered weight; at most one exactly when the ordered weight is
    non-negative.
    """
    tup = ordered_clique(h, tuple(O))
    if len(tup) != 3:
        raise InputError("w1 is defined on ordered triples")
    deg = h.degree(tup[:2])
    return 1 - 6 * deg * ordered_weight(h, tup)


def w1_expansion(h: Hypergraph, O: Iterable[int]) -> Fraction:
    """The same quantity written as codegree times the correction sum."""
    check_weighting_preconditions(h)
    tup = ordered_clique(h, tuple(O))
    if len(tup) != 3:
        raise InputError("w1 is defined on ordered triples")
    deg = h.degree(tup[:2])
    return deg * _w1_inner_sum(h, tup)


def w1_scaled(h: Hypergraph, O: Iterable[int]) -> Fraction:
    """The same quantity in density form: co-neighborhood density of the
    leading pair times the correction sum of scaled clique weights."""
    check_weighting_preconditions(h)
    tup = ordered_clique(h, tuple(O))
    if len(tup) != 3:
        raise InputError("w1 is defined on ordered triples")
    x1, x2, x3 = tup
    n = Fraction(h.n)

    def hw(*vs):
        return n ** (len(vs) - 1) * _w(h, *vs)

    total = Fraction(0)
    for y in sorted(common_coneighborhood(h, vertices=(x1, x2, x3))):
        inner = hw(x1, y, x2) - hw(x1, x2, y)
        z_sum = Fraction(0)
        for z in sorted(common_coneighborhood(h, vertices=(x1, x2, x3, y))):
            z_sum += (
                hw(x1, y, x2, z)
                - hw(x1, x2, y, z)
                + hw(x1, y, z, x2)
                - hw(y, z, x1, x2)
            )
        total += inner + z_sum / n
    cn_hat = Fraction(h.degree((min(x1, x2), max(x1, x2))), h.n)
    return cn_hat * total / n


def verify_fractional_sts(h: Hypergraph, psi: Weighting) -> PairDegreeReport:
    """Check the perfect fractional design conditions exactly.

    Every shadow pair must have weighted degree one and every edge weight
    must lie in [0, 1].  Violations are reported, never raised.
    """
    if psi.host is not h and psi.host != h:
        raise InputError("weighting is not hosted on the given hypergraph")
    degree_items = []
    violating_pairs = []
    for pair in sorted(shadow(h)):
        deg = psi.pair_degree(pair)
        degree_items.append((pair, deg))
        if deg != 1:
            violating_pairs.append(pair)
    weights = [psi[e] for e in h.edges]
    violating_edges = [
        e for e, value in zip(h.edges, weights) if not 0 <= value <= 1
    ]
    return PairDegreeReport(
        degrees=tuple(degree_items),
        min_weight=min(weights) if weights else None,
        max_weight=max(weights) if weights else None,
        all_degrees_one=not violating_pairs,
        weights_in_unit_interval=not violating_edges,
        violating_pairs=tuple(violating_pairs),
        violating_edges=tuple(violating_edges),
    )


@dataclass(frozen=True)
class NonnegativityReport:
    """Minimum ordered weight, negative tuples, and the design verdict."""

    min_ordered_weight: Optional[Fraction]
    min_tuple: Optional[tuple[int, ...]]
    negative_tuples: tuple[tuple[tuple[int, ...], Fraction], ...]
    degree_report: PairDegreeReport

    @property
    def all_nonnegative(self) -> bool:
        return not self.negative_tuples

    @property
    def is_fractional_sts(self) -> bool:
        return self.all_nonnegative and self.degree_report.is_perfect_fractional_sts

    def to_json_dict(self) -> dict:
        return {
            "min_ordered_weight": None
            if self.min_ordered_weight is None
            else format_fraction(self.min_ordered_weight),
            "min_tuple": None if self.min_tuple is None else list(self.min_tuple),
            "negative_tuples": [
                {"tuple": list(t), "weight": format_fraction(v)}
                for t, v in self.negative_tuples
            ],
            "all_nonnegative": self.all_nonnegative,
            "is_fractional_sts": self.is_fractional_sts,
            "degree_report": self.degree_report.to_json_dict(),
        }


def nonnegativity_check(h: Hypergraph) -> NonnegativityReport:
    """Evaluate every ordered-triple weight and the pair-degree identity.

    The verdict is true exactly when the weighting is a perfect fractional
    design: all ordered weights non-negative and all shadow pairs at
    degree one.
    """
    check_weighting_preconditions(h)
    w = weighting_w_H(h)
    degree_report = verify_fractional_sts(h, w)
    min_val: Optional[Fraction] = None
    min_tuple: Optional[tuple[int, ...]] = None
    negatives = []
    for edge in h.edges:
        for perm in itertools.permutations(edge):
            value = ordered_weight(h, perm)
            if min_val is None or value < min_val:
                min_val, min_tuple = value, perm
            if value < 0:
                negatives.append((perm, value))
    return NonnegativityReport(
        min_ordered_weight=min_val,
        min_tuple=min_tuple,
        negative_tuples=tuple(negatives),
        degree_report=degree_report,
    )
