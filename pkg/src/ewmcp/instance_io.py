"""Instance parsing and serialization.

Reads the standard ASCII DIMACS clique format (``c`` comments, one
``p edge <n> <m>`` line, ``e <u> <v>`` edge lines) and a native ``.ewclq``
extension of it that adds one ``w <u> <v> <weight>`` line per edge, so the
files stay grep-able and diff-able. Binary DIMACS is not supported.

The benchmark weight rule assigns each edge {u,v} the weight
((u + v) mod 200) + 1 from its 1-based labels; weights are a function of
labels only, so relabeling a graph changes them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import ParseError
from .graph import WeightedGraph

log = logging.getLogger(__name__)

WEIGHT_MODE_RULE = "rule-mod200"
WEIGHT_MODE_EXPLICIT = "explicit-file"


@dataclass(frozen=True)
class InstanceSpec:
    """A named instance: the graph plus where it came from.

    source is "dimacs-file" or "generated"; weight_mode records whether the
    weights follow the mod-200 rule or were read from the file.
    """

    name: str
    source: str
    weight_mode: str
    graph: WeightedGraph
    seed: int | None = None


def rule_weight(u: int, v: int) -> int:
    return (u + v) % 200 + 1


def apply_weight_rule(g: WeightedGraph) -> WeightedGraph:
    """Replace every edge weight with ((u+v) mod 200) + 1."""
    return WeightedGraph(g.n, [(u, v, rule_weight(u, v)) for u, v, _ in g.edges])


def parse_dimacs(text: str) -> WeightedGraph:
    """Parse ASCII DIMACS clique input; all weights are set to 0.

    Duplicate ``e`` lines are tolerated with a warning, as is a ``p`` line
    edge count that disagrees with the deduplicated count. Everything else
    (self-loops, out-of-range endpoints, unknown line types, missing header)
    is a ParseError carrying the line number.
    """
    n, edges = _parse_lines(text, allow_weights=False)
    return WeightedGraph(n, [(u, v, 0) for (u, v) in sorted(edges)])


def _parse_lines(text: str, allow_weights: bool):
    n = None
    declared_m = None
    edges: dict[tuple[int, int], int] = {}
    weights: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate 'p' line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            try:
                n = int(fields[2])
                declared_m = int(fields[3])
            except ValueError:
                raise ParseError("non-integer token in 'p' line", lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative count in 'p' line", lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("'e' line before 'p' line", lineno)
            u, v = _edge_fields(fields, 3, lineno, n)
            if (u, v) in edges:
                log.warning("line %d: duplicate edge (%d,%d) ignored", lineno, u, v)
            edges[(u, v)] = lineno
        elif tag == "w" and allow_weights:
            if n is None:
                raise ParseError("'w' line before 'p' line", lineno)
            u, v = _edge_fields(fields, 4, lineno, n)
            try:
                w = int(fields[3])
            except ValueError:
                raise ParseError("non-integer weight", lineno) from None
            if w < 0:
                raise ParseError(f"negative weight {w}", lineno)
            if (u, v) in weights:
                raise ParseError(f"duplicate weight for edge ({u},{v})", lineno)
            weights[(u, v)] = w
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' line")
    if declared_m != len(edges):
        log.warning(
            "edge count mismatch: 'p' line declares %d, found %d distinct",
            declared_m,
            len(edges),
        )
    for (u, v) in weights:
        if (u, v) not in edges:
            raise ParseError(f"weight for non-edge ({u},{v})")
    if allow_weights:
        return n, {e: weights.get(e, 0) for e in edges}
    return n, set(edges)


def _edge_fields(fields, expected_len, lineno, n):
    if len(fields) != expected_len:
        raise ParseError(f"expected {expected_len} fields", lineno)
    try:
        u, v = int(fields[1]), int(fields[2])
    except ValueError:
        raise ParseError("non-integer endpoint", lineno) from None
    if not (1 <= u <= n) or not (1 <= v <= n):
        raise ParseError(f"endpoint outside 1..{n}", lineno)
    if u == v:
        raise ParseError(f"self-loop at vertex {u}", lineno)
    return (u, v) if u < v else (v, u)


def write_instance(spec: InstanceSpec, path: str | Path) -> None:
    """Serialize to the native ``.ewclq`` format; byte-stable edge order."""
    g = spec.graph
    lines = [
        "c ewclq 1",
        f"c name={spec.name}",
        f"c source={spec.source}",
        f"c weight_mode={spec.weight_mode}",
    ]
    if spec.seed is not None:
        lines.append(f"c seed={spec.seed}")
    lines.append(f"p edge {g.n} {g.m}")
    lines += [f"e {u} {v}" for u, v, _ in g.edges]
    lines += [f"w {u} {v} {w}" for u, v, w in g.edges]
    Path(path).write_text("\n".join(lines) + "\n")


def read_instance(path: str | Path) -> InstanceSpec:
    """Read either a native ``.ewclq`` file or a plain DIMACS ``.clq`` file.

    Plain DIMACS input yields weight 0 everywhere and weight_mode
    "explicit-file" (benchmark runs overwrite via the weight rule).
    """
    path = Path(path)
    text = path.read_text()
    meta = _header_metadata(text)
    n, weighted_edges = _parse_lines(text, allow_weights=True)
    graph = WeightedGraph(n, [(u, v, w) for (u, v), w in sorted(weighted_edges.items())])
    mode = meta.get("weight_mode", WEIGHT_MODE_EXPLICIT)
    if mode == WEIGHT_MODE_RULE:
        for u, v, w in graph.edges:
            if w != rule_weight(u, v):
                raise ParseError(
                    f"file claims {WEIGHT_MODE_RULE} but edge ({u},{v}) "
                    f"has weight {w} != {rule_weight(u, v)}"
                )
    return InstanceSpec(
        name=meta.get("name", path.stem),
        source=meta.get("source", "dimacs-file"),
        weight_mode=mode,
        graph=graph,
        seed=int(meta["seed"]) if "seed" in meta else None,
    )


def _header_metadata(text: str) -> dict[str, str]:
    meta: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line.startswith("c"):
            continue
        body = line[1:].strip()
        if "=" in body:
            key, _, value = body.partition("=")
            meta[key.strip()] = value.strip()
    return meta


def with_rule_weights(spec: InstanceSpec) -> InstanceSpec:
    return replace(
        spec, graph=apply_weight_rule(spec.graph), weight_mode=WEIGHT_MODE_RULE
    )
