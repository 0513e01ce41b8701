"""Instance families: three adversarial constructions and random graphs.

The three structured families stress the bounds in opposite directions:

* family 1 (two n-cliques joined by a perfect matching of heavy bridges)
  makes both bounds arbitrarily worse than the true clique number;
* family 2 (a central clique sharing one vertex with each of n peripheral
  cliques, unit weights on the spokes) makes the coloring bound arbitrarily
  worse than the LP bound;
* family 3 (complete bipartite, unit weights) makes the LP bound
  arbitrarily worse than the coloring bound.

Random instances follow the G(n, mu) Bernoulli model with the mod-200
weight rule, generated by the portable seeded RNG so a (n, mu, seed)
triple names the same graph everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import InputError
from .graph import Coloring, WeightedGraph
from .instance_io import InstanceSpec, WEIGHT_MODE_EXPLICIT, WEIGHT_MODE_RULE, rule_weight
from .rng import SplitMix64


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    n: int
    name: str
    graph: WeightedGraph
    canonical_coloring: Coloring | None
    metadata: dict = field(default_factory=dict)

    def to_spec(self) -> InstanceSpec:
        mode = WEIGHT_MODE_RULE if self.family == "random" else WEIGHT_MODE_EXPLICIT
        return InstanceSpec(
            name=self.name,
            source="generated",
            weight_mode=mode,
            graph=self.graph,
            seed=self.metadata.get("seed"),
        )


def bridge_weight(n: int) -> int:
    """Bridge edge weight of family 1: n(n-1)/2 - 1."""
    return n * (n - 1) // 2 - 1


def gen_g1(n: int) -> FamilyInstance:
    """Two disjoint n-cliques with unit internal weights, joined by the
    perfect matching {u, n+u} of weight n(n-1)/2 - 1.

    The clique number is n(n-1)/2 (either full clique), yet every coloring
    pairs up vertices across the two cliques, so both bounds absorb the
    bridge weights and blow up with n.
    """
    if n < 2:
        raise InputError(f"family 1 needs n >= 2, got {n}")
    cbar = bridge_weight(n)
    edges = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            edges.append((i, j, 1))
            edges.append((n + i, n + j, 1))
    for u in range(1, n + 1):
        edges.append((u, n + u, cbar))
    graph = WeightedGraph(2 * n, edges)
    # Minimum coloring pairing u with a non-matched partner across the cut.
    classes = [[u, n + (u % n) + 1] for u in range(1, n + 1)]
    return FamilyInstance(
        family="g1",
        n=n,
        name=f"g1_{n}",
        graph=graph,
        canonical_coloring=Coloring(2 * n, classes),
        metadata={"c_bar": cbar, "omega": n * (n - 1) // 2},
    )


def gen_g2(n: int) -> FamilyInstance:
    """Central n-clique, n peripheral n-cliques sharing one vertex each.

    Weight 1 exactly on the spokes from a central vertex into its own
    peripheral set, 0 elsewhere. Vertices: 1..n central, then n-1
    peripheral vertices per central vertex in blocks.

    The canonical coloring builds class I_u from central u plus, in each
    other block C_v, the vertex with local index ((u - v) mod n); the
    Latin-square pattern uses every peripheral vertex exactly once.
    """
    if n < 2:
        raise InputError(f"family 2 needs n >= 2, got {n}")

    def peripheral(v: int, j: int) -> int:
        # j-th vertex (1-based, j <= n-1) of the block attached to v.
        return n + (v - 1) * (n - 1) + j

    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            edges.append((u, v, 0))
    for u in range(1, n + 1):
        block = [peripheral(u, j) for j in range(1, n)]
        for x in block:
            edges.append((u, x, 1))
        for a in range(len(block)):
            for b in range(a + 1, len(block)):
                edges.append((block[a], block[b], 0))
    graph = WeightedGraph(n * n, edges)

    classes = []
    for u in range(1, n + 1):
        cls = [u]
        for v in range(1, n + 1):
            if v != u:
                cls.append(peripheral(v, (u - v) % n))
        classes.append(cls)
    return FamilyInstance(
        family="g2",
        n=n,
        name=f"g2_{n}",
        graph=graph,
        canonical_coloring=Coloring(n * n, classes),
        metadata={"omega": n - 1, "ub2_canonical": n * (n - 1) // 2},
    )


def gen_g3(n: int) -> FamilyInstance:
    """Complete bipartite K_{n,n} with unit weights; sides are the two
    classes of the canonical coloring, in that order."""
    if n < 1:
        raise InputError(f"family 3 needs n >= 1, got {n}")
    edges = [(i, n + j, 1) for i in range(1, n + 1) for j in range(1, n + 1)]
    graph = WeightedGraph(2 * n, edges)
    coloring = Coloring(2 * n, [range(1, n + 1), range(n + 1, 2 * n + 1)])
    return FamilyInstance(
        family="g3",
        n=n,
        name=f"g3_{n}",
        graph=graph,
        canonical_coloring=coloring,
        metadata={"omega": 1, "ub1_canonical": n, "ub2_canonical": 1},
    )


def gen_random(n: int, mu: float, seed: int, name: str | None = None) -> FamilyInstance:
    """G(n, mu): each of the C(n,2) pairs is an edge independently with
    probability mu; weights follow the mod-200 rule. Deterministic per
    (n, mu, seed)."""
    if n < 1:
        raise InputError(f"random family needs n >= 1, got {n}")
    if not (0.0 <= mu <= 1.0):
        raise InputError(f"edge density must be in [0, 1], got {mu}")
    rng = SplitMix64(seed)
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.bernoulli(mu):
                edges.append((u, v, rule_weight(u, v)))
    graph = WeightedGraph(n, edges)
    pairs = n * (n - 1) // 2
    return FamilyInstance(
        family="random",
        n=n,
        name=name or f"random_n{n}_mu{round(mu * 100):02d}_s{seed}",
        graph=graph,
        canonical_coloring=None,
        metadata={
            "mu": mu,
            "seed": seed,
            "realized_density": len(edges) / pairs if pairs else 0.0,
        },
    )


GRID_SIZES = tuple(range(10, 101, 10))
GRID_DENSITY_PCTS = tuple(range(10, 91, 10))
GRID_HIGH_DENSITY_PCTS = tuple(range(91, 100))
GRID_REPS = 10


def grid_seed(n: int, density_pct: int, rep: int) -> int:
    return n * 1_000_000 + density_pct * 1_000 + rep


def random_grid(
    sizes: tuple[int, ...] = GRID_SIZES,
    density_pcts: tuple[int, ...] = GRID_DENSITY_PCTS,
    reps: int = GRID_REPS,
    include_high_density: bool = True,
) -> Iterator[FamilyInstance]:
    """The benchmark preset: reps instances per (size, density) cell, plus
    the 91-99% cells at the largest size. The full default grid has
    10*9*10 + 9*10 = 990 instances."""
    def cell(n: int, pct: int, rep: int) -> FamilyInstance:
        return gen_random(
            n,
            pct / 100.0,
            grid_seed(n, pct, rep),
            name=f"random_n{n:03d}_mu{pct:02d}_r{rep}",
        )

    for n in sizes:
        for pct in density_pcts:
            for rep in range(reps):
                yield cell(n, pct, rep)
    if include_high_density and sizes:
        n = max(sizes)
        for pct in GRID_HIGH_DENSITY_PCTS:
            for rep in range(reps):
                yield cell(n, pct, rep)
