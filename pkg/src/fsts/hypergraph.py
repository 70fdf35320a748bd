"""Core r-uniform hypergraph type and combinatorial queries.

Vertices are the dense integers ``0..n-1`` and every edge is stored as a
sorted tuple of ``r`` distinct vertices, so enumeration order is fully
deterministic.  A :class:`Hypergraph` is immutable after construction and
all functions in this module are pure, which makes them safe to call
concurrently.

Provided queries: shadow, minimum/essential codegree, common
co-neighborhoods and their densities, and enumeration of (ordered) cliques
up to five vertices.  Clique enumeration deliberately rejects sizes above
five; nothing in this package needs more and generic sizes would invite
accidental exponential blow-ups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, NamedTuple

from .errors import InputError

MAX_CLIQUE_SIZE = 5


def _canon_vertices(vertices: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(vertices))


@dataclass(frozen=True)
class Hypergraph:
    """Immutable r-uniform hypergraph on vertices ``0..n-1``.

    Use :func:`build_hypergraph` to construct a validated instance.
    """

    r: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)

    @cached_property
    def incidence(self) -> dict[tuple[int, ...], tuple[int, ...]]:
        """Map each (r-1)-subset with positive degree to its extending vertices.

        Rebuildable from ``edges`` alone; the two representations always agree.
        """
        index: dict[tuple[int, ...], list[int]] = {}
        for edge in self.edges:
            for i in range(self.r):
                sub = edge[:i] + edge[i + 1:]
                index.setdefault(sub, []).append(edge[i])
        return {sub: tuple(sorted(vs)) for sub, vs in index.items()}

    @cached_property
    def _neighbor_sets(self) -> dict[tuple[int, ...], frozenset[int]]:
        return {sub: frozenset(vs) for sub, vs in self.incidence.items()}

    @cached_property
    def _memo(self) -> dict:
        # Scratch space for derived pure values (clique extension counts,
        # ordered-clique weights).  Safe on a frozen instance: values only
        # depend on the immutable fields.
        return {}

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return _canon_vertices(vertices) in self.edge_set

    def neighbors(self, subset: Iterable[int]) -> tuple[int, ...]:
        """Vertices extending an (r-1)-subset to an edge."""
        return self.incidence.get(_canon_vertices(subset), ())

    def degree(self, subset: Iterable[int]) -> int:
        return len(self.neighbors(subset))

    def extension_count(self, clique: Iterable[int]) -> int:
        """Number of vertices extending a clique to a clique one vertex larger.

        For a clique ``S`` with at least two vertices in a 3-uniform host this
        equals ``|CN(S)|``, the size of the common co-neighborhood.
        """
        key = _canon_vertices(clique)
        memo = self._memo.setdefault("ext", {})
        cached = memo.get(key)
        if cached is None:
            cached = len(self._extension_set(key))
            memo[key] = cached
        return cached

    def _extension_set(self, clique: tuple[int, ...]) -> frozenset[int]:
        if self.r == 3 and len(clique) >= 2:
            result: Optional[frozenset[int]] = None
            for pair in itertools.combinations(clique, 2):
                nbrs = self._neighbor_sets.get(pair, frozenset())
                result = nbrs if result is None else result & nbrs
                if not result:
                    return frozenset()
            return result if result is not None else frozenset()
        members = set(clique)
        out = []
        for v in range(self.n):
            if v in members:
                continue
            if self._extends(clique, v):
                out.append(v)
        return frozenset(out)

    def _extends(self, clique: tuple[int, ...], v: int) -> bool:
        if len(clique) < self.r - 1:
            return True
        return all(
            _canon_vertices(sub + (v,)) in self.edge_set
            for sub in itertools.combinations(clique, self.r - 1)
        )


def build_hypergraph(r: int, n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and construct a :class:`Hypergraph`.

    Raises :class:`InputError` for r < 2, edges of the wrong arity, vertex
    identifiers outside ``0..n-1``, or duplicate edges.
    """
    if r < 2:
        raise InputError(f"uniformity must be at least 2, got {r}")
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    canon: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for edge in edges:
        tup = _canon_vertices(edge)
        if len(tup) != r or len(set(tup)) != r:
            raise InputError(
                f"edge {tuple(edge)} must have exactly {r} distinct vertices"
            )
        if tup[0] < 0 or tup[-1] >= n:
            raise InputError(f"edge {tup} uses a vertex outside 0..{n - 1}")
        if tup in seen:
            raise InputError(f"duplicate edge {tup}")
        seen.add(tup)
        canon.append(tup)
    return Hypergraph(r=r, n=n, edges=tuple(sorted(canon)))


def shadow(h: Hypergraph) -> frozenset[tuple[int, ...]]:
    """All (r-1)-subsets with positive degree."""
    return frozenset(h.incidence)


class CodegreeStats(NamedTuple):
    """Minimum codegree, essential minimum codegree, and the shadow's
    minimum graph degree (the latter only for 3-uniform hosts).

    Fields are ``None`` where the quantity is undefined: no (r-1)-subsets
    exist, the shadow is empty, or the host is not 3-uniform.
    """

    min_codegree: Optional[int]
    essential_min_codegree: Optional[int]
    shadow_min_degree: Optional[int]


def codegree_stats(h: Hypergraph) -> CodegreeStats:
    k = h.r - 1
    if h.n < k:
        return CodegreeStats(None, None, None)
    degrees = [h.degree(sub) for sub in itertools.combinations(range(h.n), k)]
    min_codeg = min(degrees) if degrees else None
    positive = [d for d in degrees if d > 0]
    essential = min(positive) if positive else None
    shadow_min = None
    if h.r == 3 and h.n > 0:
        per_vertex = [0] * h.n
        for pair in h.incidence:
            per_vertex[pair[0]] += 1
            per_vertex[pair[1]] += 1
        shadow_min = min(per_vertex)
    return CodegreeStats(min_codeg, essential, shadow_min)


def common_coneighborhood(
    h: Hypergraph,
    pairs: Optional[Iterable[Iterable[int]]] = None,
    vertices: Optional[Iterable[int]] = None,
) -> frozenset[int]:
    """Common co-neighborhood: vertices forming an edge with every given pair.

    Exactly one of ``pairs`` / ``vertices`` must be supplied.  The vertex-set
    form uses all pairs inside the set.  An empty family of pairs returns the
    whole vertex set.  Only defined on 3-uniform hosts.
    """
    if (pairs is None) == (vertices is None):
        raise InputError("supply exactly one of pairs= or vertices=")
    if h.r != 3:
        raise InputError("common co-neighborhood requires a 3-uniform hypergraph")
    if vertices is not None:
        vs = _canon_vertices(set(vertices))
        if vs and (vs[0] < 0 or vs[-1] >= h.n):
            raise InputError(f"vertex set {vs} not inside 0..{h.n - 1}")
        pair_list = list(itertools.combinations(vs, 2))
    else:
        pair_list = []
        for p in pairs:
            tup = _canon_vertices(p)
            if len(tup) != 2 or len(set(tup)) != 2:
                raise InputError(f"{tuple(p)} is not a pair of distinct vertices")
            if tup[0] < 0 or tup[1] >= h.n:
                raise InputError(f"pair {tup} not inside 0..{h.n - 1}")
            pair_list.append(tup)
    if not pair_list:
        return frozenset(range(h.n))
    result: Optional[frozenset[int]] = None
    for pair in pair_list:
        nbrs = h._neighbor_sets.get(pair, frozenset())
        result = nbrs if result is None else result & nbrs
        if not result:
            return frozenset()
    return result


def cn_density(
    h: Hypergraph,
    pairs: Optional[Iterable[Iterable[int]]] = None,
    vertices: Optional[Iterable[int]] = None,
) -> Fraction:
    """Common co-neighborhood size divided by the vertex count, exactly."""
    if h.n == 0:
        raise InputError("density undefined on an empty vertex set")
    return Fraction(len(common_coneighborhood(h, pairs=pairs, vertices=vertices)), h.n)


def is_clique(h: Hypergraph, vertices: Iterable[int]) -> bool:
    """True when every r-subset of the vertex set is an edge.

    Sets smaller than the uniformity are vacuously cliques.
    """
    vs = _canon_vertices(set(vertices))
    if vs and (vs[0] < 0 or vs[-1] >= h.n):
        return False
    if len(vs) < h.r:
        return True
    return all(sub in h.edge_set for sub in itertools.combinations(vs, h.r))


def cliques(
    h: Hypergraph, k: int, containing: Iterable[int] = ()
) -> list[tuple[int, ...]]:
    """All k-vertex cliques containing the given vertex set, sorted.

    ``containing`` must itself span a clique.  Only 2 <= k <= 5 is supported.
    """
    if not 2 <= k <= MAX_CLIQUE_SIZE:
        raise InputError(f"clique size must be between 2 and {MAX_CLIQUE_SIZE}, got {k}")
    base = _canon_vertices(set(containing))
    if base and (base[0] < 0 or base[-1] >= h.n):
        raise InputError(f"vertex set {base} not inside 0..{h.n - 1}")
    if not is_clique(h, base):
        raise InputError(f"containing set {base} does not span a clique")
    if len(base) > k:
        return []
    if len(base) == k:
        return [base]

    results: list[tuple[int, ...]] = []
    base_members = set(base)

    def extend(current: tuple[int, ...], min_new: int) -> None:
        if len(current) == k:
            results.append(current)
            return
        for v in range(min_new, h.n):
            if v in base_members:
                continue
            if h._extends(current, v):
                extend(_canon_vertices(current + (v,)), v + 1)

    extend(base, 0)
    results.sort()
    return results


def _is_subsequence(needle: tuple[int, ...], hay: tuple[int, ...]) -> bool:
    it = iter(hay)
    return all(x in it for x in needle)


def ordered_clique(h: Hypergraph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Validate a tuple of distinct vertices spanning a clique of the host."""
    tup = tuple(vertices)
    if not 2 <= len(tup) <= MAX_CLIQUE_SIZE:
        raise InputError(
            f"ordered cliques have between 2 and {MAX_CLIQUE_SIZE} vertices, got {len(tup)}"
        )
    if len(set(tup)) != len(tup):
        raise InputError(f"ordered clique {tup} repeats a vertex")
    if not is_clique(h, tup):
        raise InputError(f"{tup} does not span a clique of the host")
    return tup


def ordered_cliques(
    h: Hypergraph, s: int, containing=None
) -> list[tuple[int, ...]]:
    """Ordered s-cliques containing the argument, sorted lexicographically.

    Containment depends on the argument's type: a tuple is treated as an
    ordered clique and matched as a subsequence, any other iterable as a
    vertex set that the clique's vertex set must contain.  ``None`` or an
    empty argument yields every ordered s-clique (s! per unordered clique).
    """
    if not 2 <= s <= MAX_CLIQUE_SIZE:
        raise InputError(f"clique size must be between 2 and {MAX_CLIQUE_SIZE}, got {s}")
    subsequence: Optional[tuple[int, ...]] = None
    base: tuple[int, ...] = ()
    if containing is None:
        pass
    elif isinstance(containing, tuple):
        if containing:
            subsequence = ordered_clique(h, containing)
            base = _canon_vertices(subsequence)
    else:
        base = _canon_vertices(set(containing))

    out: list[tuple[int, ...]] = []
    for cl in cliques(h, s, base):
        for perm in itertools.permutations(cl):
            if subsequence is None or _is_subsequence(subsequence, perm):
                out.append(perm)
    out.sort()
    return out
