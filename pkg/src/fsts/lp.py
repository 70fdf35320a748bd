"""Exact LP feasibility for perfect fractional (r-1, r, n) designs.

The decision problem: does an edge weighting x in [0, 1]^E exist whose
sum over the edges containing each constrained (r-1)-set equals one?
Constrained sets are either the shadow (the default) or all (r-1)-subsets
of the vertex set.

Solved by a dense phase-1 simplex over ``fractions.Fraction`` with box
constraints handled structurally (bounded-variable pivoting, not extra
rows) and Bland's least-index rule, so the run is deterministic and can
never cycle.  A feasible outcome carries an exact witness weighting; an
infeasible outcome carries rational row multipliers that combine the
equalities into a bound no boxed point can meet, checkable independently
by :func:`verify_certificate`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import BoundInapplicableError, InputError
from .hypergraph import Hypergraph, shadow
from .serialize import format_fraction, parse_fraction
from .weighting import Weighting

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LpProblem:
    """Feasibility problem: one [0,1] variable per edge, one equality
    (incident weights sum to 1) per constrained (r-1)-set."""

    host: Hypergraph
    mode: str  # "shadow" or "all"
    row_keys: tuple[tuple[int, ...], ...]
    rows: tuple[tuple[int, ...], ...]  # per row: indices of incident edges

    @property
    def num_vars(self) -> int:
        return self.host.num_edges

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "num_vars": self.num_vars,
            "num_rows": self.num_rows,
            "edges": [list(e) for e in self.host.edges],
            "row_keys": [list(k) for k in self.row_keys],
            "rows": [list(r) for r in self.rows],
        }


@dataclass(frozen=True)
class Certificate:
    """Rational multipliers proving infeasibility.

    For every x with Ax = 1 one has yAx = sum(y); but coordinate-wise,
    max of yA x over the box is sum of the positive parts, which falls
    short by ``gap`` > 0.  Bound multipliers are the split positive and
    negative parts of yA, normalized to integers with first nonzero row
    multiplier positive whenever a positive scaling achieves it.
    """

    row_multipliers: tuple[Fraction, ...]
    upper_bound_multipliers: tuple[Fraction, ...]
    lower_bound_multipliers: tuple[Fraction, ...]
    gap: Fraction

    def to_json_dict(self) -> dict:
        return {
            "row_multipliers": [format_fraction(v) for v in self.row_multipliers],
            "upper_bound_multipliers": [
                format_fraction(v) for v in self.upper_bound_multipliers
            ],
            "lower_bound_multipliers": [
                format_fraction(v) for v in self.lower_bound_multipliers
            ],
            "gap": format_fraction(self.gap),
        }

    @classmethod
    def from_json_dict(cls, payload) -> "Certificate":
        return cls(
            row_multipliers=tuple(parse_fraction(v) for v in payload["row_multipliers"]),
            upper_bound_multipliers=tuple(
                parse_fraction(v) for v in payload["upper_bound_multipliers"]
            ),
            lower_bound_multipliers=tuple(
                parse_fraction(v) for v in payload["lower_bound_multipliers"]
            ),
            gap=parse_fraction(payload["gap"]),
        )


@dataclass(frozen=True)
class LpOutcome:
    status: str
    witness: Optional[Weighting]
    certificate: Optional[Certificate]

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "witness": None if self.witness is None else self.witness.to_json_dict(),
            "certificate": None
            if self.certificate is None
            else self.certificate.to_json_dict(),
        }


def build_fsts_lp(h: Hypergraph, all_tuples: bool = False) -> LpProblem:
    """Assemble the feasibility problem for a hypergraph.

    ``all_tuples`` constrains every (r-1)-subset of the vertex set instead
    of only the shadow; subsets of degree zero then make the problem
    trivially infeasible.
    """
    edge_index = {e: j for j, e in enumerate(h.edges)}
    if all_tuples:
        keys = list(itertools.combinations(range(h.n), h.r - 1))
    else:
        keys = sorted(shadow(h))
    rows = []
    for key in keys:
        incident = tuple(
            sorted(edge_index[tuple(sorted(key + (v,)))] for v in h.neighbors(key))
        )
        rows.append(incident)
    return LpProblem(
        host=h,
        mode="all" if all_tuples else "shadow",
        row_keys=tuple(keys),
        rows=tuple(rows),
    )


def _normalize_certificate(y, mu, lam, gap):
    denom_lcm = 1
    for v in itertools.chain(y, mu, lam, [gap]):
        denom_lcm = denom_lcm * v.denominator // math.gcd(denom_lcm, v.denominator)
    scale = Fraction(denom_lcm)
    ints = [v * scale for v in itertools.chain(y, mu, lam, [gap])]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v.numerator))
    if g > 1:
        scale /= g
    y = tuple(v * scale for v in y)
    mu = tuple(v * scale for v in mu)
    lam = tuple(v * scale for v in lam)
    return Certificate(y, mu, lam, gap * scale)


def _single_row_certificate(problem: LpProblem, row: int) -> Certificate:
    y = tuple(
        Fraction(1) if i == row else Fraction(0) for i in range(problem.num_rows)
    )
    zeros = tuple(Fraction(0) for _ in range(problem.num_vars))
    return Certificate(y, zeros, zeros, Fraction(1))


def solve_feasibility(problem: LpProblem) -> LpOutcome:
    """Decide the problem exactly; deterministic for fixed input."""
    for i, row in enumerate(problem.rows):
        if not row:
            return LpOutcome(INFEASIBLE, None, _single_row_certificate(problem, i))

    R = problem.num_rows
    m = problem.num_vars
    if R == 0:
        witness = Weighting(problem.host, {e: Fraction(0) for e in problem.host.edges})
        return LpOutcome(FEASIBLE, witness, None)

    ncols = m + R
    zero = Fraction(0)
    one = Fraction(1)

    # tableau rows = B^{-1} [A | I]; beta = current basic values
    tableau = []
    for i, row in enumerate(problem.rows):
        t = [zero] * ncols
        for j in row:
            t[j] = one
        t[m + i] = one
        tableau.append(t)
    beta = [one] * R
    basis = [m + i for i in range(R)]
    in_basis = [False] * ncols
    for col in basis:
        in_basis[col] = True
    at_upper = [False] * ncols
    frozen = [False] * ncols  # artificials never re-enter once they leave

    def is_artificial(col: int) -> bool:
        return col >= m

    while True:
        art_rows = [i for i in range(R) if is_artificial(basis[i])]
        if not art_rows or all(beta[i] == 0 for i in art_rows):
            break
        # reduced costs d_j = c_j - sum over artificial basic rows of T[i][j]
        entering = -1
        direction = 0
        for j in range(ncols):
            if in_basis[j] or frozen[j]:
                continue
            d = (one if is_artificial(j) else zero) - sum(
                tableau[i][j] for i in art_rows
            )
            if not at_upper[j] and d < 0:
                entering, direction = j, 1
                break
            if at_upper[j] and d > 0:
                entering, direction = j, -1
                break
        if entering == -1:
            break  # phase-1 optimum with positive objective: infeasible

        # ratio test over basic bounds plus the entering variable's own bound
        t_limit: Optional[Fraction] = None
        leave_row = -1
        leave_to_upper = False
        for i in range(R):
            delta = direction * tableau[i][entering]
            if delta > 0:
                cand = beta[i] / delta
                hit_upper = False
            elif delta < 0 and not is_artificial(basis[i]):
                cand = (one - beta[i]) / (-delta)
                hit_upper = True
            else:
                continue
            if (
                t_limit is None
                or cand < t_limit
                or (cand == t_limit and (leave_row == -1 or basis[i] < basis[leave_row]))
            ):
                t_limit = cand
                leave_row = i
                leave_to_upper = hit_upper
        own_bound = one if not is_artificial(entering) else None

        if own_bound is not None and (t_limit is None or own_bound < t_limit):
            # bound flip, no basis change
            for i in range(R):
                beta[i] -= direction * own_bound * tableau[i][entering]
            at_upper[entering] = not at_upper[entering]
            continue
        if t_limit is None:
            raise RuntimeError("phase-1 simplex direction unbounded; solver bug")
        if own_bound is not None and own_bound == t_limit and t_limit > 0:
            for i in range(R):
                beta[i] -= direction * own_bound * tableau[i][entering]
            at_upper[entering] = not at_upper[entering]
            continue

        # pivot: entering becomes basic on leave_row
        step = t_limit
        enter_value = (one if at_upper[entering] else zero) + direction * step
        for i in range(R):
            if i != leave_row:
                beta[i] -= direction * step * tableau[i][entering]
        leaving = basis[leave_row]
        piv = tableau[leave_row][entering]
        prow = tableau[leave_row]
        inv = one / piv
        for j in range(ncols):
            if prow[j] != 0:
                prow[j] *= inv
        for i in range(R):
            if i == leave_row:
                continue
            factor = tableau[i][entering]
            if factor == 0:
                continue
            trow = tableau[i]
            for j in range(ncols):
                if prow[j] != 0:
                    trow[j] -= factor * prow[j]
        beta[leave_row] = enter_value
        basis[leave_row] = entering
        in_basis[entering] = True
        in_basis[leaving] = False
        at_upper[leaving] = leave_to_upper
        if is_artificial(leaving):
            frozen[leaving] = True

    objective = sum(
        (beta[i] for i in range(R) if is_artificial(basis[i])), zero
    )
    if objective == 0:
        values = {}
        for j in range(m):
            values[problem.host.edges[j]] = one if at_upper[j] else zero
        for i in range(R):
            if not is_artificial(basis[i]):
                values[problem.host.edges[basis[i]]] = beta[i]
        witness = Weighting(problem.host, values)
        return LpOutcome(FEASIBLE, witness, None)

    # infeasible: read duals off the artificial columns, y = c_B B^{-1}
    art_rows = [i for i in range(R) if is_artificial(basis[i])]
    y = [sum((tableau[i][m + col] for i in art_rows), zero) for col in range(R)]
    mu = []
    lam = []
    for j in range(m):
        s = sum((y[i] for i in range(R) if j in _row_set(problem, i)), zero)
        mu.append(s if s > 0 else zero)
        lam.append(-s if s < 0 else zero)
    gap = sum(y, zero) - sum(mu, zero)
    if gap <= 0:
        raise RuntimeError("invalid infeasibility certificate; solver bug")
    cert = _normalize_certificate(tuple(y), tuple(mu), tuple(lam), gap)
    return LpOutcome(INFEASIBLE, None, cert)


def _row_set(problem: LpProblem, i: int) -> frozenset:
    sets = problem.host._memo.setdefault("lp_rowsets_" + problem.mode, {})
    cached = sets.get(i)
    if cached is None:
        cached = frozenset(problem.rows[i])
        sets[i] = cached
    return cached


def verify_certificate(problem: LpProblem, outcome: LpOutcome) -> bool:
    """Re-check an outcome in exact arithmetic.

    Feasible: the witness must satisfy every row exactly and sit in the
    box.  Infeasible: the multipliers must combine the rows into a bound
    that exceeds what any boxed point can reach, with the bound
    multipliers consistent with the row combination.
    """
    if outcome.status == FEASIBLE:
        if outcome.witness is None:
            return False
        w = outcome.witness
        if w.host != problem.host:
            raise InputError("outcome does not belong to this problem")
        for e in problem.host.edges:
            if not 0 <= w[e] <= 1:
                return False
        for key, row in zip(problem.row_keys, problem.rows):
            total = sum((w[problem.host.edges[j]] for j in row), Fraction(0))
            if total != 1:
                return False
        return True
    cert = outcome.certificate
    if cert is None:
        return False
    if len(cert.row_multipliers) != problem.num_rows or len(
        cert.upper_bound_multipliers
    ) != problem.num_vars:
        raise InputError("outcome does not belong to this problem")
    y = cert.row_multipliers
    combined = [Fraction(0)] * problem.num_vars
    for i, row in enumerate(problem.rows):
        if y[i] == 0:
            continue
        for j in row:
            combined[j] += y[i]
    for j in range(problem.num_vars):
        mu = cert.upper_bound_multipliers[j]
        lam = cert.lower_bound_multipliers[j]
        if mu < 0 or lam < 0 or mu - lam != combined[j]:
            return False
        if mu != (combined[j] if combined[j] > 0 else 0):
            return False
    reachable = sum((v for v in combined if v > 0), Fraction(0))
    required = sum(y, Fraction(0))
    if required - reachable != cert.gap:
        return False
    return cert.gap > 0


@dataclass(frozen=True)
class SpaceBarrierBound:
    """Within-part pair capacity versus total demand."""

    capacity: Fraction
    requirement: Fraction

    @property
    def certifies_infeasible(self) -> bool:
        return self.capacity < self.requirement

    def to_json_dict(self) -> dict:
        return {
            "capacity": format_fraction(self.capacity),
            "requirement": format_fraction(self.requirement),
            "certifies_infeasible": self.certifies_infeasible,
        }


def space_barrier_bound(h: Hypergraph, parts) -> SpaceBarrierBound:
    """Compare within-part pair capacity against the total demand C(n,2)/3.

    Applicable when the host is 3-uniform with complete shadow and every
    edge covers at least one within-part pair; then any perfect fractional
    design has total mass C(n,2)/3, all of which must land on within-part
    pairs, so capacity below the requirement certifies infeasibility.
    """
    if h.r != 3:
        raise InputError("the capacity bound is defined for 3-uniform hypergraphs")
    parts = tuple(tuple(p) for p in parts)
    part_of: dict[int, int] = {}
    for i, part in enumerate(parts):
        for v in part:
            if v in part_of:
                raise InputError(f"vertex {v} appears in two parts")
            part_of[v] = i
    if set(part_of) != set(range(h.n)):
        raise InputError("parts do not partition the vertex set")
    for edge in h.edges:
        within = sum(
            1 for a, b in itertools.combinations(edge, 2) if part_of[a] == part_of[b]
        )
        if within == 0:
            raise BoundInapplicableError(
                f"edge {edge} covers no within-part pair; the capacity bound does not apply"
            )
    for pair in itertools.combinations(range(h.n), 2):
        if h.degree(pair) == 0:
            raise BoundInapplicableError(
                f"pair {pair} has zero codegree, so the total-demand count does not apply"
            )
    capacity = Fraction(sum(len(p) * (len(p) - 1) // 2 for p in parts))
    requirement = Fraction(h.n * (h.n - 1) // 2, 3)
    return SpaceBarrierBound(capacity=capacity, requirement=requirement)
