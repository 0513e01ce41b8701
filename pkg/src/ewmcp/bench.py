"""Benchmark harness: instances x colorings x bounds into a flat CSV.

One record per (instance, coloring) with both bounds, the greedy dual
bound, the exact clique number when affordable, and the gap/difference
metrics. Per-item failures land in the record's error column and the run
continues. Records are sorted before writing, so output is independent of
worker scheduling; with timings suppressed the CSV is byte-deterministic
for a fixed configuration.
"""

from __future__ import annotations

import concurrent.futures
import os
import re
import time
import zlib
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .bounds import (
    compute_greedy_dual_bound,
    compute_ub1,
    compute_ub2,
    percentage_diff,
    percentage_gap,
)
from .coloring import ColoringRequest, default_protocol, make_coloring, reorder_classes
from .errors import EwmcpError, MetricUndefinedError
from .exact import branch_and_bound_omega
from .generators import FamilyInstance
from .graph import WeightedGraph
from .instance_io import InstanceSpec
from .rng import SplitMix64

CSV_HEADER = (
    "instance,n,m,density_pct,coloring_id,coloring_kind,k,"
    "ub1,ub1_ms,ub2,ub2_ms,greedy_dual,omega,gap1_pct,gap2_pct,diff_pct,error"
)
ORDERS_HEADER = "instance,coloring_id,trials,ub2_min,ub2_avg,ub2_max,spread_pct"

DIMACS_FAMILIES = (
    "brock",
    "c-fat",
    "C",
    "gen",
    "hamming",
    "johnson",
    "keller",
    "MANN",
    "p_hat",
    "sanr",
    "san",
)


@dataclass
class BenchRecord:
    instance: str
    n: int
    m: int
    density_pct: float
    coloring_id: str
    coloring_kind: str
    k: int
    ub1: float | None = None
    ub1_ms: float | None = None
    ub2: int | None = None
    ub2_ms: float | None = None
    greedy_dual: int | None = None
    omega: int | None = None
    gap1_pct: float | None = None
    gap2_pct: float | None = None
    diff_pct: float | None = None
    error: str = ""

    def csv_row(self, include_timings: bool) -> str:
        cells = [
            self.instance,
            str(self.n),
            str(self.m),
            _fmt6(self.density_pct),
            self.coloring_id,
            self.coloring_kind,
            str(self.k),
            _fmt6(self.ub1),
            _fmt_ms(self.ub1_ms) if include_timings else "",
            _fmt_int(self.ub2),
            _fmt_ms(self.ub2_ms) if include_timings else "",
            _fmt_int(self.greedy_dual),
            _fmt_int(self.omega),
            _fmt6(self.gap1_pct),
            _fmt6(self.gap2_pct),
            _fmt6(self.diff_pct),
            self.error,
        ]
        return ",".join(cells)


@dataclass
class RunConfig:
    """Protocol for one harness run.

    The default coloring protocol is the six-coloring one: DSatur plus five
    random-greedy colorings with seeds 1..5. omega is attempted only for
    instances with at most exact_max_n vertices unless known_omega supplies
    it. order_trials > 0 additionally evaluates that many random class
    permutations per coloring and reports the spread of the combinatorial
    bound in a sidecar CSV.
    """

    colorings: list[ColoringRequest] = field(default_factory=default_protocol)
    exact_max_n: int = 60
    exact_node_limit: int | None = 5_000_000
    exact_time_limit_s: float | None = 60.0
    known_omega: dict[str, int] = field(default_factory=dict)
    jobs: int = 1
    include_timings: bool = True
    order_trials: int = 0
    order_trial_seed: int = 20250101
    aggregate: str = "per-record"


@dataclass
class OrderTrialRecord:
    instance: str
    coloring_id: str
    trials: int
    ub2_min: int
    ub2_avg: float
    ub2_max: int

    def csv_row(self) -> str:
        spread = (
            100.0 * (self.ub2_max - self.ub2_min) / self.ub2_avg
            if self.ub2_avg > 0
            else 0.0
        )
        return ",".join(
            [
                self.instance,
                self.coloring_id,
                str(self.trials),
                str(self.ub2_min),
                _fmt6(self.ub2_avg),
                str(self.ub2_max),
                _fmt6(spread),
            ]
        )


def _fmt6(x: float | None) -> str:
    return "" if x is None else f"{x:.6g}"


def _fmt_int(x: int | None) -> str:
    return "" if x is None else str(x)


def _fmt_ms(x: float | None) -> str:
    return "" if x is None else f"{x:.3f}"


def _as_spec(instance) -> InstanceSpec:
    if isinstance(instance, FamilyInstance):
        return instance.to_spec()
    if isinstance(instance, InstanceSpec):
        return instance
    raise EwmcpError(f"not an instance: {instance!r}")


def _solve_omega(g: WeightedGraph, cfg: RunConfig) -> tuple[int | None, str]:
    result = branch_and_bound_omega(
        g,
        node_limit=cfg.exact_node_limit,
        time_limit_s=cfg.exact_time_limit_s,
    )
    if not result.complete:
        return None, "exact-incomplete"
    return result.omega, ""


def evaluate_instance(
    instance, cfg: RunConfig
) -> tuple[list[BenchRecord], list[OrderTrialRecord]]:
    """All records for one instance under the configured coloring protocol."""
    spec = _as_spec(instance)
    g = spec.graph

    omega: int | None = None
    omega_error = ""
    if spec.name in cfg.known_omega:
        omega = cfg.known_omega[spec.name]
    elif g.n <= cfg.exact_max_n:
        omega, omega_error = _solve_omega(g, cfg)

    records: list[BenchRecord] = []
    order_records: list[OrderTrialRecord] = []
    for request in cfg.colorings:
        coloring = make_coloring(g, request)
        record = BenchRecord(
            instance=spec.name,
            n=g.n,
            m=g.m,
            density_pct=g.density_pct(),
            coloring_id=request.label(),
            coloring_kind=request.kind,
            k=coloring.k,
            omega=omega,
            error=omega_error,
        )
        try:
            t0 = time.perf_counter()
            ub1, _ = compute_ub1(g, coloring)
            record.ub1_ms = 1000.0 * (time.perf_counter() - t0)
            record.ub1 = ub1
        except (EwmcpError, np.linalg.LinAlgError) as exc:
            record.error = _join_errors(record.error, f"ub1:{exc}")
        t0 = time.perf_counter()
        ub2, _ = compute_ub2(g, coloring)
        record.ub2_ms = 1000.0 * (time.perf_counter() - t0)
        record.ub2 = ub2
        record.greedy_dual = compute_greedy_dual_bound(g, coloring)
        _fill_metrics(record)
        records.append(record)

        if cfg.order_trials > 0 and coloring.k > 1:
            order_records.append(
                _order_trials(g, coloring, spec.name, request.label(), cfg)
            )
    return records, order_records


def _fill_metrics(record: BenchRecord) -> None:
    try:
        if record.omega is not None and record.ub1 is not None:
            record.gap1_pct = percentage_gap(record.ub1, record.omega)
        if record.omega is not None and record.ub2 is not None:
            record.gap2_pct = percentage_gap(record.ub2, record.omega)
        if record.ub1 is not None and record.ub2 is not None:
            record.diff_pct = percentage_diff(record.ub1, record.ub2)
    except MetricUndefinedError:
        pass  # zero clique number or zero bounds: leave cells empty


def _order_trials(
    g: WeightedGraph, coloring, name: str, coloring_id: str, cfg: RunConfig
) -> OrderTrialRecord:
    # crc32 is process-stable, unlike Python's randomized string hash.
    rng = SplitMix64(cfg.order_trial_seed ^ zlib.crc32(f"{name}/{coloring_id}".encode()))
    values = []
    for _ in range(cfg.order_trials):
        perm = list(range(1, coloring.k + 1))
        rng.shuffle(perm)
        value, _ = compute_ub2(g, reorder_classes(coloring, perm))
        values.append(value)
    return OrderTrialRecord(
        instance=name,
        coloring_id=coloring_id,
        trials=len(values),
        ub2_min=min(values),
        ub2_avg=sum(values) / len(values),
        ub2_max=max(values),
    )


def _eval_task(args):
    return evaluate_instance(*args)


def run_bench(
    instances,
    cfg: RunConfig,
    out_path: str | Path | None = None,
) -> tuple[list[BenchRecord], list[OrderTrialRecord]]:
    """Evaluate every instance, sort, optionally write the CSV file(s)."""
    instances = list(instances)
    jobs = cfg.jobs or int(os.environ.get("EWMCP_THREADS", "1"))
    records: list[BenchRecord] = []
    order_records: list[OrderTrialRecord] = []
    if jobs > 1 and len(instances) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for recs, orecs in pool.map(
                _eval_task, [(inst, cfg) for inst in instances], chunksize=1
            ):
                records.extend(recs)
                order_records.extend(orecs)
    else:
        for inst in instances:
            recs, orecs = evaluate_instance(inst, cfg)
            records.extend(recs)
            order_records.extend(orecs)
    records.sort(key=lambda r: (r.instance, r.coloring_id))
    order_records.sort(key=lambda r: (r.instance, r.coloring_id))
    if out_path is not None:
        write_csv(records, out_path, include_timings=cfg.include_timings)
        if order_records:
            orders_path = Path(str(out_path) + ".orders.csv")
            lines = [ORDERS_HEADER] + [r.csv_row() for r in order_records]
            orders_path.write_text("\n".join(lines) + "\n")
    return records, order_records


def write_csv(
    records: list[BenchRecord], path: str | Path, *, include_timings: bool = True
) -> None:
    lines = [CSV_HEADER] + [r.csv_row(include_timings) for r in records]
    Path(path).write_text("\n".join(lines) + "\n")


def _join_errors(*parts: str) -> str:
    return ";".join(p for p in parts if p)


# ---------------------------------------------------------------------------
# Aggregation


def dimacs_family(name: str) -> str:
    for prefix in DIMACS_FAMILIES:
        if name.startswith(prefix):
            return prefix
    match = re.match(r"[A-Za-z-]+", name)
    return match.group(0) if match else name


def _nominal_density(record: BenchRecord) -> int:
    match = re.search(r"_mu(\d+)_", record.instance)
    if match:
        return int(match.group(1))
    return int(round(record.density_pct / 10.0) * 10)


def group_key(record: BenchRecord, mode: str):
    if mode == "per-family":
        return dimacs_family(record.instance)
    if mode == "per-size":
        return record.n
    if mode == "per-density":
        return _nominal_density(record)
    raise EwmcpError(f"unknown aggregation mode {mode!r}")


def best_of_colorings(records: list[BenchRecord]) -> list[dict]:
    """Per instance, the minimum of each bound across its colorings (taken
    independently), with metrics recomputed from those minima."""
    by_instance: dict[str, list[BenchRecord]] = {}
    for r in records:
        by_instance.setdefault(r.instance, []).append(r)
    rows = []
    for name in sorted(by_instance):
        group = by_instance[name]
        ub1s = [r.ub1 for r in group if r.ub1 is not None]
        ub2s = [r.ub2 for r in group if r.ub2 is not None]
        omega = next((r.omega for r in group if r.omega is not None), None)
        row = {
            "instance": name,
            "n": group[0].n,
            "colorings": len(group),
            "best_ub1": min(ub1s) if ub1s else None,
            "best_ub2": min(ub2s) if ub2s else None,
            "omega": omega,
            "gap1_pct": None,
            "gap2_pct": None,
            "diff_pct": None,
        }
        try:
            if omega is not None and ub1s:
                row["gap1_pct"] = percentage_gap(min(ub1s), omega)
            if omega is not None and ub2s:
                row["gap2_pct"] = percentage_gap(min(ub2s), omega)
            if ub1s and ub2s:
                row["diff_pct"] = percentage_diff(min(ub1s), min(ub2s))
        except MetricUndefinedError:
            pass
        rows.append(row)
    return rows


def aggregate(records: list[BenchRecord], mode: str) -> list[dict]:
    """min/max/avg of the three metrics per group.

    Groups with no defined values for a metric leave its cells None;
    empty groups cannot occur (keys come from the records themselves).
    """
    if mode == "per-record":
        return []
    if mode == "best-of-colorings":
        return best_of_colorings(records)
    groups: dict[object, list[BenchRecord]] = {}
    for r in records:
        groups.setdefault(group_key(r, mode), []).append(r)
    rows = []
    for key in sorted(groups, key=lambda k: str(k)):
        members = groups[key]
        row = {"group": key, "records": len(members)}
        for metric in ("gap1_pct", "gap2_pct", "diff_pct"):
            values = [getattr(r, metric) for r in members]
            values = [v for v in values if v is not None]
            if values:
                row[f"{metric}_min"] = min(values)
                row[f"{metric}_max"] = max(values)
                row[f"{metric}_avg"] = sum(values) / len(values)
            else:
                row[f"{metric}_min"] = row[f"{metric}_max"] = row[f"{metric}_avg"] = None
        rows.append(row)
    return rows


def format_aggregate_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    header = list(rows[0].keys())
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for key in header:
            value = row[key]
            if value is None:
                cells.append("")
            elif isinstance(value, float):
                cells.append(f"{value:.6g}")
            else:
                cells.append(str(value))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
