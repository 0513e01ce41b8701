"""The two upper bounds on the edge-weighted clique number, with certificates.

Both bounds take a valid coloring of the graph.

* ``compute_ub1`` is the LP bound: the optimal value of the dual restriction
  of the clique LP to the coloring's independent-set constraints. Its
  certificate is a weight split: each edge weight c_e is divided between the
  edge's endpoints (rho), every vertex accumulates gamma_u, and each class
  pays the maximum gamma inside it (pi).
* ``compute_ub2`` is the combinatorial bound: sigma_u sums, over classes
  before u's own, the heaviest edge from u into each class; the bound is the
  sum over classes of the maximum sigma. It depends on class order.
* ``compute_greedy_dual_bound`` is the dominated bound obtained by assigning
  each edge's full weight to its lower-indexed endpoint; it is a feasible
  point of the dual LP, hence always >= UB1.

The production UB1 path solves an equivalent reduced LP with one row per
vertex: the split constraint rho_eu + rho_ev = c_e is eliminated by keeping a
single bounded variable t_e in [0, c_e] per edge (the portion assigned to the
lower-labeled endpoint). The explicit primal and dual forms are kept as
cross-check paths and for MPS export.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EwmcpError, InputError, LpLimitError, MetricUndefinedError
from .graph import Coloring, WeightedGraph, validate_coloring
from .lp import LinearProgram, LpSolution, solve

CERT_SPLIT_TOL = 1e-9  # on rho_eu + rho_ev = c_e, scaled by 1 + c_e
CERT_COVER_TOL = 1e-9  # absolute, on pi_I >= gamma_u
CERT_OBJ_TOL = 1e-6  # relative, on objective = sum of class maxima


@dataclass
class Ub1Certificate:
    """Optimal weight split behind a UB1 value.

    rho maps each edge (u, v) with u < v to the pair (portion to u, portion
    to v); gamma is the per-vertex total; pi is the per-class payment.
    """

    pi: dict[int, float]
    rho: dict[tuple[int, int], tuple[float, float]]
    gamma: dict[int, float]
    objective: float

    def verify(self, g: WeightedGraph, c: Coloring) -> None:
        """Raise EwmcpError if any certificate invariant fails."""
        for (u, v, w) in g.edges:
            ru, rv = self.rho[(u, v)]
            if abs(ru + rv - w) > CERT_SPLIT_TOL * (1 + w):
                raise EwmcpError(f"split violated on edge ({u},{v}): {ru}+{rv} != {w}")
            if ru < -CERT_COVER_TOL or rv < -CERT_COVER_TOL:
                raise EwmcpError(f"negative split on edge ({u},{v})")
        for u in g.vertices():
            total = 0.0
            for v in g.neighbors(u):
                ru, rv = self.rho[(min(u, v), max(u, v))]
                total += ru if u < v else rv
            if abs(total - self.gamma[u]) > 1e-6 * (1 + abs(total)):
                raise EwmcpError(f"gamma[{u}] does not match its splits")
            if self.pi[c.tau(u)] < self.gamma[u] - CERT_COVER_TOL:
                raise EwmcpError(f"pi[{c.tau(u)}] < gamma[{u}]")
        by_max = sum(
            max(self.gamma[u] for u in cls) for cls in c.classes
        )
        if abs(self.objective - by_max) > CERT_OBJ_TOL * (1 + abs(self.objective)):
            raise EwmcpError("objective differs from the sum of class maxima")
        if abs(self.objective - sum(self.pi.values())) > CERT_OBJ_TOL * (
            1 + abs(self.objective)
        ):
            raise EwmcpError("objective differs from sum(pi)")


@dataclass
class Ub2Certificate:
    """Per-vertex sigma values and the chosen maximizer of each class."""

    sigma: dict[int, int]
    argmax_per_class: dict[int, int]
    objective: int

    def verify(self, g: WeightedGraph, c: Coloring) -> None:
        recomputed = _sigma_values(g, c)
        if recomputed != self.sigma:
            raise EwmcpError("sigma values do not match the graph and coloring")
        total = 0
        for h, cls in enumerate(c.classes, start=1):
            best = self.argmax_per_class[h]
            if best not in cls:
                raise EwmcpError(f"argmax of class {h} is not a member")
            if self.sigma[best] != max(self.sigma[u] for u in cls):
                raise EwmcpError(f"argmax of class {h} is not maximal")
            total += self.sigma[best]
        if total != self.objective:
            raise EwmcpError("objective does not match recomputed class maxima")


def _require_valid(g: WeightedGraph, c: Coloring) -> None:
    if not validate_coloring(g, c):
        raise InputError("coloring is not a valid partition into independent sets")


# ---------------------------------------------------------------------------
# UB2 and the greedy dual bound (pure integer combinatorics)


def _sigma_values(g: WeightedGraph, c: Coloring) -> dict[int, int]:
    sigma: dict[int, int] = {}
    for u in g.vertices():
        tu = c.tau(u)
        best_per_class: dict[int, int] = {}
        for v in g.neighbors(u):
            h = c.tau(v)
            if h < tu:
                w = g.weight(u, v)
                if w > best_per_class.get(h, -1):
                    best_per_class[h] = w
        # A class with no edge from u contributes nothing (empty max = 0).
        sigma[u] = sum(best_per_class.values())
    return sigma


def compute_ub2(g: WeightedGraph, c: Coloring) -> tuple[int, Ub2Certificate]:
    """Combinatorial coloring bound; value depends on the class order of c."""
    _require_valid(g, c)
    sigma = _sigma_values(g, c)
    total = 0
    argmax: dict[int, int] = {}
    for h, cls in enumerate(c.classes, start=1):
        best = min(cls, key=lambda u: (-sigma[u], u))
        argmax[h] = best
        total += sigma[best]
    return total, Ub2Certificate(sigma=sigma, argmax_per_class=argmax, objective=total)


def compute_greedy_dual_bound(g: WeightedGraph, c: Coloring) -> int:
    """Value of the feasible dual point that puts each edge's full weight on
    the endpoint in the lower-indexed class. Dominates (is >=) UB1."""
    _require_valid(g, c)
    load = {u: 0 for u in g.vertices()}
    for u, v, w in g.edges:
        if c.tau(u) < c.tau(v):
            load[u] += w
        else:
            load[v] += w
    return sum(max(load[u] for u in cls) for cls in c.classes)


# ---------------------------------------------------------------------------
# UB1: LP builders and solve paths


def ub1_reduced_lp(g: WeightedGraph, c: Coloring) -> LinearProgram:
    """One row per vertex; the edge split is a bounded variable.

    For edge e={u,v} with u < v, t_e in [0, c_e] is the portion assigned to
    u and c_e - t_e the portion assigned to v. The vertex-u row collects
    gamma_u <= pi_tau(u) with the constant parts moved to the right side.
    """
    lp = LinearProgram(sense="min", name="ub1-reduced")
    pi = [lp.add_var(f"pi_{h}", obj=1.0) for h in range(1, c.k + 1)]
    t: dict[tuple[int, int], int] = {}
    for u, v, w in g.edges:
        t[(u, v)] = lp.add_var(f"t_{u}_{v}", ub=float(w))
    coeffs: dict[int, list[tuple[int, float]]] = {u: [] for u in g.vertices()}
    rhs = {u: 0.0 for u in g.vertices()}
    for u, v, w in g.edges:
        coeffs[u].append((t[(u, v)], -1.0))  # u pays t_e
        coeffs[v].append((t[(u, v)], 1.0))  # v pays c_e - t_e
        rhs[v] += w
    for u in g.vertices():
        row = [(pi[c.tau(u) - 1], 1.0)] + coeffs[u]
        lp.add_constraint(row, ">=", rhs[u], name=f"v_{u}")
    return lp


def ub1_primal_lp(g: WeightedGraph, c: Coloring) -> LinearProgram:
    """The clique LP restricted to the coloring's independent sets.

    The pair-selection variables get lower bound 0: with nonnegative
    weights this leaves the optimum unchanged and keeps the LP bounded
    when zero-weight edges are present.
    """
    lp = LinearProgram(sense="max", name="ub1-primal")
    x = {u: lp.add_var(f"x_{u}") for u in g.vertices()}
    for u, v, w in g.edges:
        y = lp.add_var(f"y_{u}_{v}", obj=float(w))
        lp.add_constraint([(y, 1.0), (x[u], -1.0)], "<=", 0.0, name=f"e_{u}_{v}_{u}")
        lp.add_constraint([(y, 1.0), (x[v], -1.0)], "<=", 0.0, name=f"e_{u}_{v}_{v}")
    for h, cls in enumerate(c.classes, start=1):
        lp.add_constraint([(x[u], 1.0) for u in sorted(cls)], "<=", 1.0, name=f"pi_{h}")
    return lp


def ub1_dual_lp(g: WeightedGraph, c: Coloring) -> LinearProgram:
    """The dual LP in its explicit form: split equalities plus class covers."""
    lp = LinearProgram(sense="min", name="ub1-dual")
    pi = [lp.add_var(f"pi_{h}", obj=1.0) for h in range(1, c.k + 1)]
    rho: dict[tuple[int, int, int], int] = {}
    incident: dict[int, list[int]] = {u: [] for u in g.vertices()}
    for u, v, w in g.edges:
        ru = lp.add_var(f"rho_{u}_{v}_{u}")
        rv = lp.add_var(f"rho_{u}_{v}_{v}")
        rho[(u, v, u)] = ru
        rho[(u, v, v)] = rv
        incident[u].append(ru)
        incident[v].append(rv)
        lp.add_constraint([(ru, 1.0), (rv, 1.0)], "=", float(w), name=f"split_{u}_{v}")
    for u in g.vertices():
        row = [(pi[c.tau(u) - 1], 1.0)] + [(r, -1.0) for r in incident[u]]
        lp.add_constraint(row, ">=", 0.0, name=f"v_{u}")
    return lp


def _certificate_from_split(
    g: WeightedGraph,
    c: Coloring,
    rho: dict[tuple[int, int], tuple[float, float]],
    objective: float,
    pi: dict[int, float] | None = None,
) -> Ub1Certificate:
    gamma = {u: 0.0 for u in g.vertices()}
    for (u, v), (ru, rv) in rho.items():
        gamma[u] += ru
        gamma[v] += rv
    if pi is None:
        pi = {
            h: max(gamma[u] for u in cls) for h, cls in enumerate(c.classes, start=1)
        }
    return Ub1Certificate(pi=pi, rho=rho, gamma=gamma, objective=objective)


def compute_ub1(
    g: WeightedGraph, c: Coloring, *, via: str = "reduced"
) -> tuple[float, Ub1Certificate]:
    """LP upper bound with a weight-split certificate.

    via selects the solve path: "reduced" (default, one row per vertex),
    "primal" (clique LP, certificate read off the row duals), or "dual"
    (explicit dual LP). All three agree to LP tolerance; the reduced form
    is far cheaper on dense instances.
    """
    _require_valid(g, c)
    if g.m == 0:
        rho: dict[tuple[int, int], tuple[float, float]] = {}
        pi = {h: 0.0 for h in range(1, c.k + 1)}
        return 0.0, _certificate_from_split(g, c, rho, 0.0, pi)
    if via == "reduced":
        # Rest each split at the greedy-dual corner (full weight to the
        # endpoint in the lower-indexed class); the pivot walk then only
        # covers the gap between that feasible point and the optimum.
        hint = [
            c.k + i
            for i, (u, v, _) in enumerate(g.edges)
            if c.tau(u) < c.tau(v)
        ]
        sol = _checked_solve(ub1_reduced_lp(g, c), "ub1", start_at_upper=hint)
        rho = {}
        for u, v, w in g.edges:
            t = min(max(sol.x[f"t_{u}_{v}"], 0.0), float(w))
            rho[(u, v)] = (t, w - t)
        pi = {h: sol.x[f"pi_{h}"] for h in range(1, c.k + 1)}
        return sol.objective, _certificate_from_split(g, c, rho, sol.objective, pi)
    if via == "dual":
        sol = _checked_solve(ub1_dual_lp(g, c), "ub1")
        rho = {}
        for u, v, w in g.edges:
            ru = max(sol.x[f"rho_{u}_{v}_{u}"], 0.0)
            rv = max(sol.x[f"rho_{u}_{v}_{v}"], 0.0)
            rho[(u, v)] = (ru, rv)
        pi = {h: sol.x[f"pi_{h}"] for h in range(1, c.k + 1)}
        return sol.objective, _certificate_from_split(g, c, rho, sol.objective, pi)
    if via == "primal":
        sol = _checked_solve(ub1_primal_lp(g, c), "ub1")
        # Row duals of the primal are a dual-feasible point of the relaxed
        # splits (sum >= c_e); rescaling each edge's pair onto the equality
        # keeps every cover constraint satisfied and the objective equal.
        rho = {}
        for u, v, w in g.edges:
            ru = max(sol.duals[f"e_{u}_{v}_{u}"], 0.0)
            rv = max(sol.duals[f"e_{u}_{v}_{v}"], 0.0)
            s = ru + rv
            if s > 0.0:
                ru, rv = ru * w / s, rv * w / s
            else:
                ru, rv = float(w), 0.0
            rho[(u, v)] = (ru, rv)
        return sol.objective, _certificate_from_split(g, c, rho, sol.objective)
    raise InputError(f"unknown ub1 path {via!r}")


def _checked_solve(
    lp: LinearProgram, what: str, start_at_upper: list[int] | None = None
) -> LpSolution:
    sol = solve(lp, start_at_upper=start_at_upper)
    if sol.status == "iteration-limit":
        raise LpLimitError(f"{what}: simplex hit its iteration cap", sol)
    if sol.status != "optimal":
        raise EwmcpError(f"{what}: unexpected LP status {sol.status}")
    return sol


# ---------------------------------------------------------------------------
# Report metrics


def percentage_gap(ub: float, omega: float) -> float:
    """100 * (ub - omega) / omega; undefined for omega <= 0."""
    if omega <= 0:
        raise MetricUndefinedError(f"gap undefined for omega={omega}")
    return 100.0 * (ub - omega) / omega


def percentage_diff(ub1: float, ub2: float) -> float:
    """100 * (ub1 - ub2) / max(ub1, ub2); positive means UB2 is smaller."""
    denom = max(ub1, ub2)
    if denom <= 0:
        raise MetricUndefinedError("difference undefined when both bounds are <= 0")
    return 100.0 * (ub1 - ub2) / denom


def floor_bound(value: float) -> int:
    """Integer version of an LP bound: floor with a small safety epsilon."""
    return math.floor(value + 1e-9)
