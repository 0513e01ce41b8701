"""Core graph, clique, and coloring data model.

Vertices are labeled 1..n, matching the DIMACS convention. All three types
are immutable after construction and safe to share across workers; every
operation here is a pure function of its arguments.

Adjacency is kept as one bitmask per vertex (bit v set iff v is a neighbor),
which makes pairwise checks and candidate-set intersections in the exact
solver cheap at the instance sizes this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError


class WeightedGraph:
    """Simple undirected graph with nonnegative integer edge weights.

    Edges are stored once as (u, v, weight) with u < v. Duplicate edges and
    self-loops are rejected at construction.
    """

    __slots__ = ("n", "edges", "_adj", "_weight")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]]):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        adj = [0] * (n + 1)
        weight: dict[tuple[int, int], int] = {}
        for u, v, w in edges:
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise InputError(f"edge ({u},{v}) has endpoint outside 1..{n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not isinstance(w, int) or w < 0:
                raise InputError(f"edge ({u},{v}) has invalid weight {w!r}")
            if (u, v) in weight:
                raise InputError(f"duplicate edge ({u},{v})")
            weight[(u, v)] = w
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.edges: tuple[tuple[int, int, int], ...] = tuple(
            (u, v, weight[(u, v)]) for (u, v) in sorted(weight)
        )
        self._adj = tuple(adj)
        self._weight = weight

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def weight(self, u: int, v: int) -> int:
        """Weight of edge {u,v}. Raises InputError on a non-edge.

        Raising (rather than returning 0) catches generator bugs where a
        weight is looked up for a pair that was never connected.
        """
        self._check_vertex(u)
        self._check_vertex(v)
        if u > v:
            u, v = v, u
        try:
            return self._weight[(u, v)]
        except KeyError:
            raise InputError(f"no edge ({u},{v})") from None

    def neighbors(self, u: int) -> tuple[int, ...]:
        self._check_vertex(u)
        return tuple(_bits(self._adj[u]))

    def neighbor_mask(self, u: int) -> int:
        """Adjacency bitmask of u (bit v set iff {u,v} is an edge)."""
        self._check_vertex(u)
        return self._adj[u]

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return self._adj[u].bit_count()

    def density_pct(self) -> float:
        pairs = self.n * (self.n - 1) // 2
        return 100.0 * self.m / pairs if pairs else 0.0

    def _check_vertex(self, u: int) -> None:
        if not (1 <= u <= self.n):
            raise InputError(f"vertex {u} outside 1..{self.n}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, m={self.m})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Clique:
    """A clique with its total edge weight (sum over edges inside the set)."""

    vertices: tuple[int, ...]
    total_weight: int

    @staticmethod
    def of(g: WeightedGraph, vertices: Iterable[int]) -> "Clique":
        vs = tuple(sorted(set(vertices)))
        if not is_clique(g, vs):
            raise InputError(f"{vs} is not a clique")
        return Clique(vs, total_edge_weight(g, vs))


class Coloring:
    """Ordered partition of {1..n} into independent sets I_1..I_k.

    Class indices are 1-based; ``tau(u)`` is the index of the class holding
    u. Only the partition shape is validated here; independence against a
    particular graph is checked by :func:`validate_coloring`.
    """

    __slots__ = ("n", "classes", "_tau")

    def __init__(self, n: int, classes: Sequence[Iterable[int]]):
        self.n = n
        self.classes: tuple[frozenset[int], ...] = tuple(frozenset(c) for c in classes)
        tau = [0] * (n + 1)
        seen = 0
        for h, cls in enumerate(self.classes, start=1):
            if not cls:
                raise InputError(f"class {h} is empty")
            for u in cls:
                if not (1 <= u <= n):
                    raise InputError(f"vertex {u} outside 1..{n}")
                if tau[u]:
                    raise InputError(f"vertex {u} appears in classes {tau[u]} and {h}")
                tau[u] = h
                seen += 1
        if seen != n:
            missing = [u for u in range(1, n + 1) if not tau[u]]
            raise InputError(f"classes do not cover vertices {missing[:5]}")
        self._tau = tuple(tau)

    @property
    def k(self) -> int:
        return len(self.classes)

    def tau(self, u: int) -> int:
        if not (1 <= u <= self.n):
            raise InputError(f"vertex {u} outside 1..{self.n}")
        return self._tau[u]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.n == other.n and self.classes == other.classes

    def __hash__(self):
        return hash((self.n, self.classes))

    def __repr__(self):
        return f"Coloring(n={self.n}, k={self.k})"


def total_edge_weight(g: WeightedGraph, s: Iterable[int]) -> int:
    """Sum of weights of edges with both endpoints in s.

    s need not be a clique; callers wanting clique semantics check that
    separately via :func:`is_clique`.
    """
    vs = sorted(set(s))
    mask = 0
    for u in vs:
        g._check_vertex(u)
        mask |= 1 << u
    total = 0
    for u in vs:
        inside = g._adj[u] & mask
        while inside:
            low = inside & -inside
            v = low.bit_length() - 1
            inside ^= low
            if v > u:
                total += g._weight[(u, v)]
    return total


def is_clique(g: WeightedGraph, s: Iterable[int]) -> bool:
    """True iff every pair of vertices in s is adjacent."""
    vs = sorted(set(s))
    mask = 0
    for u in vs:
        g._check_vertex(u)
        mask |= 1 << u
    for u in vs:
        # u must be adjacent to every other selected vertex.
        if (mask & ~(1 << u)) & ~g._adj[u]:
            return False
    return True


def validate_coloring(g: WeightedGraph, c: Coloring) -> bool:
    """True iff c partitions the vertices of g into independent sets."""
    if c.n != g.n:
        return False
    for cls in c.classes:
        mask = 0
        for u in cls:
            mask |= 1 << u
        for u in cls:
            if g._adj[u] & mask:
                return False
    return True
