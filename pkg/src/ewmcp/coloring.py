"""Coloring heuristics that parameterize the upper bounds.

Both bounds take a coloring as input; the benchmark protocol evaluates each
instance under one DSatur coloring plus five seeded random-greedy colorings.
Class *order* matters for the combinatorial bound, so reordering utilities
live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError, ParseError
from .graph import Coloring, WeightedGraph
from .rng import SplitMix64

DEFAULT_GREEDY_SEEDS = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class ColoringRequest:
    """How to produce one coloring.

    kind: "dsatur" (seed ignored) or "random-greedy" (seed required).
    order_policy: "creation-order", "random-permutation" (uses order_seed),
    or "explicit" (uses permutation).
    """

    kind: str
    seed: int | None = None
    order_policy: str = "creation-order"
    order_seed: int | None = None
    permutation: tuple[int, ...] | None = None

    def label(self) -> str:
        if self.kind == "dsatur":
            return "dsatur"
        return f"greedy-s{self.seed}"


def dsatur(g: WeightedGraph) -> Coloring:
    """DSatur sequential coloring.

    Picks the uncolored vertex with the most distinct neighbor colors,
    breaking ties by maximum degree in g, then by lowest vertex id; the
    vertex gets the smallest-index class with no neighbor in it. Class
    indices follow order of first use. Fully deterministic.
    """
    n = g.n
    if n == 0:
        return Coloring(0, [])
    color = [0] * (n + 1)
    neighbor_colors: list[set[int]] = [set() for _ in range(n + 1)]
    degree = [0] * (n + 1)
    for u in g.vertices():
        degree[u] = g.degree(u)
    k = 0
    classes: list[list[int]] = []
    for _ in range(n):
        best = 0
        best_key = (-1, -1)
        for u in g.vertices():
            if color[u]:
                continue
            key = (len(neighbor_colors[u]), degree[u])
            if key > best_key:
                best_key = key
                best = u
        used = neighbor_colors[best]
        h = 1
        while h in used:
            h += 1
        if h > k:
            k = h
            classes.append([])
        color[best] = h
        classes[h - 1].append(best)
        for v in g.neighbors(best):
            if not color[v]:
                neighbor_colors[v].add(h)
    return Coloring(n, classes)


def random_greedy(g: WeightedGraph, seed: int) -> Coloring:
    """Greedy coloring along a seeded uniform random vertex permutation.

    Each vertex gets the smallest-index class containing none of its
    neighbors; a new class is appended when no existing one fits. The
    permutation comes from a splitmix64 Fisher-Yates shuffle, so the result
    is identical for identical (graph, seed) on any platform.
    """
    n = g.n
    order = list(range(1, n + 1))
    SplitMix64(seed).shuffle(order)
    color = [0] * (n + 1)
    classes: list[list[int]] = []
    for u in order:
        used = {color[v] for v in g.neighbors(u) if color[v]}
        h = 1
        while h in used:
            h += 1
        if h > len(classes):
            classes.append([])
        color[u] = h
        classes[h - 1].append(u)
    return Coloring(n, classes)


def reorder_classes(c: Coloring, permutation: Sequence[int]) -> Coloring:
    """Permute class indices: new class h is old class permutation[h-1].

    The permutation must be a bijection on 1..k expressed as the sequence
    (permutation[0], ..., permutation[k-1]). Membership of each class is
    unchanged.
    """
    perm = tuple(permutation)
    if sorted(perm) != list(range(1, c.k + 1)):
        raise InputError(f"not a permutation of 1..{c.k}: {perm}")
    return Coloring(c.n, [c.classes[p - 1] for p in perm])


def apply_order_policy(c: Coloring, request: ColoringRequest) -> Coloring:
    if request.order_policy == "creation-order":
        return c
    if request.order_policy == "random-permutation":
        if request.order_seed is None:
            raise InputError("random-permutation order policy requires order_seed")
        perm = list(range(1, c.k + 1))
        SplitMix64(request.order_seed).shuffle(perm)
        return reorder_classes(c, perm)
    if request.order_policy == "explicit":
        if request.permutation is None:
            raise InputError("explicit order policy requires a permutation")
        return reorder_classes(c, request.permutation)
    raise InputError(f"unknown order policy {request.order_policy!r}")


def make_coloring(g: WeightedGraph, request: ColoringRequest) -> Coloring:
    if request.kind == "dsatur":
        c = dsatur(g)
    elif request.kind == "random-greedy":
        if request.seed is None:
            raise InputError("random-greedy coloring requires a seed")
        c = random_greedy(g, request.seed)
    else:
        raise InputError(f"unknown coloring kind {request.kind!r}")
    return apply_order_policy(c, request)


def default_protocol() -> list[ColoringRequest]:
    """The six-coloring benchmark protocol: 1 DSatur + 5 random-greedy."""
    requests = [ColoringRequest("dsatur")]
    requests += [ColoringRequest("random-greedy", seed=s) for s in DEFAULT_GREEDY_SEEDS]
    return requests


def format_coloring(c: Coloring) -> str:
    """Dump format: one line per class, ``<index>: v1 v2 ...``."""
    lines = []
    for h, cls in enumerate(c.classes, start=1):
        members = " ".join(str(v) for v in sorted(cls))
        lines.append(f"{h}: {members}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, n: int) -> Coloring:
    """Parse the dump format produced by :func:`format_coloring`.

    Class lines may appear in any order; indices must be exactly 1..k.
    """
    entries: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise ParseError("expected '<index>: v1 v2 ...'", lineno)
        try:
            idx = int(head)
            members = [int(tok) for tok in tail.split()]
        except ValueError:
            raise ParseError("non-integer token in coloring line", lineno) from None
        if idx in entries:
            raise ParseError(f"duplicate class index {idx}", lineno)
        entries[idx] = members
    if sorted(entries) != list(range(1, len(entries) + 1)):
        raise ParseError(f"class indices must be 1..{len(entries)}")
    return Coloring(n, [entries[h] for h in sorted(entries)])
