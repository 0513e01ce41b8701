"""Exact computation of the edge-weighted clique number.

Two routes: a brute-force clique enumeration that serves as the oracle in
validity tests (hard-capped at 25 vertices), and a branch-and-bound for
desk-scale instances. The search prunes with the combinatorial coloring
bound evaluated on the residual candidate set, extended with each
candidate's edge weight into the current clique, and is exact whenever it
finishes within budget; otherwise it reports its incumbent as a lower bound.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import InputError
from .graph import Clique, WeightedGraph

BRUTE_FORCE_CAP = 25


@dataclass
class ExactResult:
    omega: int
    witness: Clique
    nodes_explored: int
    time_s: float
    method: str
    complete: bool = True


class _Budget(Exception):
    pass


def brute_force_omega(g: WeightedGraph) -> ExactResult:
    """Enumerate every clique; exact and independent of the bound machinery.

    The witness is deterministic: the lexicographically smallest among the
    maximum-weight cliques (depth-first enumeration in vertex order visits
    cliques in lexicographic order, and only strict improvements are kept).
    """
    if g.n > BRUTE_FORCE_CAP:
        raise InputError(
            f"brute force is capped at {BRUTE_FORCE_CAP} vertices, got {g.n}"
        )
    start = time.perf_counter()
    adj = [0] * (g.n + 1)
    for u in g.vertices():
        adj[u] = g.neighbor_mask(u)
    weight = {(u, v): w for u, v, w in g.edges}

    best_w = 0
    best: tuple[int, ...] = ()
    nodes = 0

    def extend(current: list[int], allowed: int, total: int) -> None:
        nonlocal best_w, best, nodes
        nodes += 1
        if total > best_w:
            best_w, best = total, tuple(current)
        m = allowed
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            gain = sum(weight[(u, v)] for u in current)
            current.append(v)
            above = ~((1 << (v + 1)) - 1)
            extend(current, allowed & adj[v] & above, total + gain)
            current.pop()

    all_mask = ((1 << (g.n + 1)) - 1) & ~1
    extend([], all_mask, 0)
    return ExactResult(
        omega=best_w,
        witness=Clique(best, best_w),
        nodes_explored=nodes,
        time_s=time.perf_counter() - start,
        method="brute-force",
    )


def branch_and_bound_omega(
    g: WeightedGraph,
    *,
    node_limit: int | None = None,
    time_limit_s: float | None = None,
    use_pruning: bool = True,
) -> ExactResult:
    """Bound-pruned search for the exact clique number.

    Branches on vertices by non-increasing weighted degree (ties by id).
    A node is pruned when the incumbent already matches or beats the
    residual coloring bound, so disabling pruning can only change
    nodes_explored, never the result. On budget exhaustion the best
    incumbent is returned with complete=False.
    """
    start = time.perf_counter()
    n = g.n
    adj = [0] * (n + 1)
    for u in g.vertices():
        adj[u] = g.neighbor_mask(u)
    wrow: list[dict[int, int]] = [dict() for _ in range(n + 1)]
    for u, v, w in g.edges:
        wrow[u][v] = w
        wrow[v][u] = w

    weighted_degree = [0] * (n + 1)
    for u, v, w in g.edges:
        weighted_degree[u] += w
        weighted_degree[v] += w
    branch_order = sorted(g.vertices(), key=lambda u: (-weighted_degree[u], u))
    rank = [0] * (n + 1)
    for i, u in enumerate(branch_order):
        rank[u] = i

    best_w = 0
    best: tuple[int, ...] = ()
    nodes = 0
    deadline = start + time_limit_s if time_limit_s is not None else None

    def residual_bound(p_mask: int, contrib: list[int]) -> int:
        """Coloring bound on the best completion inside the candidate set.

        DSatur-colors the induced candidate subgraph, then charges each
        candidate its edge weight into the current clique plus, per
        lower-indexed class, the heaviest edge into that class; a clique
        meets each class at most once, so summing class maxima is an upper
        bound on any completion's added weight.
        """
        verts = []
        m = p_mask
        while m:
            low = m & -m
            verts.append(low.bit_length() - 1)
            m ^= low
        color = {}
        sat_mask = {v: 0 for v in verts}
        deg_in = {v: (adj[v] & p_mask).bit_count() for v in verts}
        k = 0
        classes: list[list[int]] = []
        for _ in range(len(verts)):
            pick = -1
            pick_key = (-1, -1)
            for v in verts:
                if v in color:
                    continue
                key = (sat_mask[v].bit_count(), deg_in[v])
                if key > pick_key:
                    pick_key = key
                    pick = v
            used = sat_mask[pick]
            h = 0
            while used >> h & 1:
                h += 1
            if h == k:
                k += 1
                classes.append([])
            color[pick] = h
            classes[h].append(pick)
            mm = adj[pick] & p_mask
            while mm:
                low = mm & -mm
                x = low.bit_length() - 1
                mm ^= low
                if x not in color:
                    sat_mask[x] |= 1 << h
        bound = 0
        for h in range(k):
            class_best = 0
            for v in classes[h]:
                per_class: dict[int, int] = {}
                row = wrow[v]
                mm = adj[v] & p_mask
                while mm:
                    low = mm & -mm
                    x = low.bit_length() - 1
                    mm ^= low
                    hx = color[x]
                    if hx < color[v]:
                        wvx = row[x]
                        if wvx > per_class.get(hx, -1):
                            per_class[hx] = wvx
                val = contrib[v] + sum(per_class.values())
                if val > class_best:
                    class_best = val
            bound += class_best
        return bound

    def search(current: list[int], total: int, p_mask: int, contrib: list[int]) -> None:
        nonlocal best_w, best, nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _Budget
        if deadline is not None and nodes % 256 == 0 and time.perf_counter() > deadline:
            raise _Budget
        if total > best_w:
            best_w, best = total, tuple(sorted(current))
        if not p_mask:
            return
        if use_pruning and total + residual_bound(p_mask, contrib) <= best_w:
            return
        cands = []
        m = p_mask
        while m:
            low = m & -m
            cands.append(low.bit_length() - 1)
            m ^= low
        cands.sort(key=lambda v: rank[v])
        remaining = p_mask
        for v in cands:
            remaining &= ~(1 << v)
            child_mask = remaining & adj[v]
            child_contrib = contrib
            if child_mask:
                child_contrib = contrib.copy()
                row = wrow[v]
                mm = child_mask
                while mm:
                    low = mm & -mm
                    x = low.bit_length() - 1
                    mm ^= low
                    child_contrib[x] += row[x]
            current.append(v)
            search(current, total + contrib[v], child_mask, child_contrib)
            current.pop()

    all_mask = ((1 << (n + 1)) - 1) & ~1
    complete = True
    try:
        search([], 0, all_mask, [0] * (n + 1))
    except _Budget:
        complete = False
    return ExactResult(
        omega=best_w,
        witness=Clique(tuple(best), best_w),
        nodes_explored=nodes,
        time_s=time.perf_counter() - start,
        method="branch-and-bound",
        complete=complete,
    )
