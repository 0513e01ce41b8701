"""Generic linear programming layer.

Holds a sparse LP model, an embedded bounded-variable revised simplex with
primal and dual solution extraction, and fixed-format MPS export for solving
large instances with an external solver instead.

The simplex is two-phase (artificial start), prices with Dantzig's rule, and
falls back to Bland's rule after a run of degenerate steps, which guarantees
termination. The basis inverse is kept dense and refactorized periodically;
problem sizes here are at most a few thousand rows.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import scipy.linalg
import scipy.sparse

from .errors import EwmcpError, InputError

INF = math.inf

FEAS_TOL = 1e-9
DUALITY_TOL = 1e-6
_DTOL = 1e-9  # reduced-cost optimality tolerance
_PTOL = 1e-10  # smallest pivot magnitude accepted
_REFACTOR_EVERY = 100
_BLAND_TRIGGER = 60  # consecutive degenerate steps before switching rule


class LinearProgram:
    """Sparse LP: max or min of c.x over linear rows with variable bounds."""

    def __init__(self, sense: str = "min", name: str = "lp"):
        if sense not in ("min", "max"):
            raise InputError(f"sense must be 'min' or 'max', got {sense!r}")
        self.sense = sense
        self.name = name
        self.var_names: list[str] = []
        self.obj: list[float] = []
        self.lb: list[float] = []
        self.ub: list[float] = []
        self.row_names: list[str] = []
        self.rows: list[list[tuple[int, float]]] = []
        self.relations: list[str] = []
        self.rhs: list[float] = []

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def add_var(
        self, name: str | None = None, *, obj: float = 0.0, lb: float = 0.0, ub: float = INF
    ) -> int:
        """Declare a variable; returns its index."""
        if math.isnan(lb) or math.isnan(ub):
            raise InputError("variable bounds must not be NaN")
        if not math.isfinite(obj):
            raise InputError("objective coefficient must be finite")
        if lb > ub:
            raise InputError(f"lower bound {lb} exceeds upper bound {ub}")
        idx = len(self.var_names)
        self.var_names.append(name if name is not None else f"x{idx}")
        self.obj.append(float(obj))
        self.lb.append(float(lb))
        self.ub.append(float(ub))
        return idx

    def add_constraint(
        self,
        coeffs: list[tuple[int, float]],
        relation: str,
        rhs: float,
        name: str | None = None,
    ) -> int:
        """Add a row sum(coef*var) (relation) rhs; returns its index.

        Zero coefficients are dropped; repeated variables are summed.
        """
        if relation not in ("<=", "=", ">="):
            raise InputError(f"relation must be <=, =, or >=, got {relation!r}")
        if not math.isfinite(rhs):
            raise InputError("right-hand side must be finite")
        merged: dict[int, float] = {}
        for j, a in coeffs:
            if not (0 <= j < self.num_vars):
                raise InputError(f"constraint references undeclared variable {j}")
            if not math.isfinite(a):
                raise InputError("constraint coefficient must be finite")
            merged[j] = merged.get(j, 0.0) + float(a)
        row = sorted((j, a) for j, a in merged.items() if a != 0.0)
        idx = len(self.rows)
        self.row_names.append(name if name is not None else f"r{idx}")
        self.rows.append(row)
        self.relations.append(relation)
        self.rhs.append(float(rhs))
        return idx


@dataclass
class LpSolution:
    """Solver outcome: status plus primal values and row duals.

    For status "optimal" the primal residual is at most feas_tol and the
    primal and dual objectives agree to duality_tol (relative). Duals follow
    the shadow-price convention of the model's own sense: the objective
    moves by dual*delta when a right-hand side moves by delta.
    """

    status: str
    objective: float | None
    x: dict[str, float] = field(default_factory=dict)
    duals: dict[str, float] = field(default_factory=dict)
    iterations: int = 0
    residual: float = 0.0
    duality_gap: float = 0.0


class _Simplex:
    """Bounded-variable primal simplex over Ax = b in standard form."""

    def __init__(self, A: scipy.sparse.csc_matrix, b, c, lo, hi, max_iters: int):
        self.A = A
        self.b = b
        self.c = c
        self.lo = lo
        self.hi = hi
        self.max_iters = max_iters
        self.nrows, self.ncols = A.shape
        self.iterations = 0
        self.AT = A.T.tocsr()

    def column(self, j: int) -> tuple[np.ndarray, np.ndarray]:
        a = self.A
        lo, up = a.indptr[j], a.indptr[j + 1]
        return a.indices[lo:up], a.data[lo:up]

    def dense_column(self, j: int) -> np.ndarray:
        col = np.zeros(self.nrows)
        rows_j, vals_j = self.column(j)
        col[rows_j] = vals_j
        return col

    def setup(self, basis: np.ndarray, nb_at_upper: np.ndarray) -> None:
        self.basis = basis
        self.in_basis = np.zeros(self.ncols, dtype=bool)
        self.in_basis[basis] = True
        self.nb_at_upper = nb_at_upper
        self.refactor()

    def rest_values(self) -> np.ndarray:
        """Rest value of every column (entries for basics are meaningless)."""
        vals = np.where(self.nb_at_upper, self.hi, self.lo)
        vals[~np.isfinite(vals)] = 0.0  # free variables rest at zero
        return vals

    def refactor(self) -> None:
        B = self.A[:, self.basis].toarray()
        self._B = B
        self._lu = scipy.linalg.lu_factor(B)
        self.Binv = scipy.linalg.lu_solve(self._lu, np.eye(self.nrows))
        self.recompute_xb()

    def recompute_xb(self) -> None:
        vals = self.rest_values()
        vals[self.basis] = 0.0
        rhs = self.b - self.A @ vals
        xb = scipy.linalg.lu_solve(self._lu, rhs)
        # One refinement step keeps row residuals near machine precision,
        # which the absolute feas_tol contract needs.
        xb += scipy.linalg.lu_solve(self._lu, rhs - self._B @ xb)
        self.xB = xb

    def duals_for(self, costs: np.ndarray) -> np.ndarray:
        cb = costs[self.basis]
        y = scipy.linalg.lu_solve(self._lu, cb, trans=1)
        y += scipy.linalg.lu_solve(self._lu, cb - self._B.T @ y, trans=1)
        return y

    def run(self, costs: np.ndarray, pricing: str = "dantzig") -> str:
        """Minimize costs.x from the current basis. Returns a status."""
        fixed = self.lo == self.hi
        free = np.isneginf(self.lo) & np.isposinf(self.hi)
        degenerate_run = 0
        bland = False
        since_refactor = 0
        # Devex reference weights; None disables the per-pivot update.
        devex = np.ones(self.ncols) if pricing == "devex" else None
        while True:
            if self.iterations >= self.max_iters:
                return "iteration-limit"
            self.iterations += 1
            since_refactor += 1
            if since_refactor >= _REFACTOR_EVERY:
                self.refactor()
                since_refactor = 0

            y = costs[self.basis] @ self.Binv
            d = costs - self.AT @ y
            up = ~self.in_basis & ~fixed & ~self.nb_at_upper & (d < -_DTOL)
            dn = ~self.in_basis & ~fixed & (self.nb_at_upper | free) & (d > _DTOL)
            eligible = up | dn
            if not eligible.any():
                return "optimal"

            if bland:
                j = int(np.flatnonzero(eligible)[0])
            elif devex is not None:
                score = np.where(eligible, d * d / devex, 0.0)
                j = int(np.argmax(score))
            else:
                score = np.where(eligible, np.abs(d), 0.0)
                j = int(np.argmax(score))
            sigma = 1.0 if up[j] else -1.0

            rows_j, vals_j = self.column(j)
            w = self.Binv[:, rows_j] @ vals_j
            status = self._step(j, sigma, w, bland, devex)
            if status == "unbounded":
                return "unbounded"
            if status == "degenerate":
                degenerate_run += 1
                if degenerate_run > _BLAND_TRIGGER:
                    bland = True
            else:
                degenerate_run = 0
                bland = False

    def _step(self, j, sigma: float, w: np.ndarray, bland: bool, devex) -> str:
        """Ratio test plus pivot (or bound flip) for entering column j."""
        sw = sigma * w
        basis_lo = self.lo[self.basis]
        basis_hi = self.hi[self.basis]
        t_arr = np.full(self.nrows, INF)
        dec = (sw > _PTOL) & np.isfinite(basis_lo)
        if dec.any():
            t_arr[dec] = np.maximum(self.xB[dec] - basis_lo[dec], 0.0) / sw[dec]
        inc = (sw < -_PTOL) & np.isfinite(basis_hi)
        if inc.any():
            t_arr[inc] = np.maximum(basis_hi[inc] - self.xB[inc], 0.0) / -sw[inc]
        t_limit = float(t_arr.min()) if self.nrows else INF

        span = self.hi[j] - self.lo[j]
        if math.isfinite(span) and span < t_limit:
            # Entering variable reaches its own opposite bound first.
            self.xB = self.xB - sigma * span * w
            self.nb_at_upper[j] = not self.nb_at_upper[j]
            return "degenerate" if span <= 1e-12 else "step"
        if not math.isfinite(t_limit):
            return "unbounded"

        ties = np.flatnonzero(t_arr <= t_limit + 1e-12)
        if bland:
            leave_row = int(ties[np.argmin(self.basis[ties])])
        else:
            leave_row = int(ties[np.argmax(np.abs(w[ties]))])
        leave_to_upper = bool(sw[leave_row] < 0.0)

        enter_value = self._rest_value(j) + sigma * t_limit
        leaving = int(self.basis[leave_row])
        if devex is not None:
            self._update_devex(devex, j, leaving, leave_row, w)
        self.xB = self.xB - sigma * t_limit * w
        self.xB[leave_row] = enter_value
        self.basis[leave_row] = j
        self.in_basis[leaving] = False
        self.in_basis[j] = True
        self.nb_at_upper[leaving] = leave_to_upper
        self._update_inverse(leave_row, j, w)
        return "degenerate" if t_limit <= 1e-12 else "step"

    def _update_devex(self, devex, j: int, leaving: int, leave_row: int, w) -> None:
        """Devex reference weights (Forrest-Goldfarb, simplified).

        alpha is the pivot row expressed over all columns; weights grow for
        columns aligned with the entering direction, which steers pricing
        away from repeated short steps.
        """
        alpha_q = w[leave_row]
        if abs(alpha_q) < _PTOL:
            return
        alpha = self.AT @ self.Binv[leave_row, :]
        ratio = (alpha / alpha_q) ** 2 * devex[j]
        np.maximum(devex, ratio, out=devex)
        devex[leaving] = max(devex[j] / alpha_q**2, 1.0)

    def _update_inverse(self, row: int, j: int, w: np.ndarray) -> None:
        pivot_row = self.Binv[row, :] / w[row]
        corr = w.copy()
        corr[row] -= w[row]  # row `row` is assigned directly below
        self.Binv -= np.outer(corr, pivot_row)
        self.Binv[row, :] = pivot_row
        self._B[:, row] = self.dense_column(j)

    def _rest_value(self, j: int) -> float:
        if self.nb_at_upper[j]:
            return self.hi[j]
        if math.isfinite(self.lo[j]):
            return self.lo[j]
        return 0.0


def solve(
    lp: LinearProgram,
    *,
    max_iters: int | None = None,
    feas_tol: float = FEAS_TOL,
    duality_tol: float = DUALITY_TOL,
    start_at_upper: list[int] | None = None,
) -> LpSolution:
    """Solve to optimality with the embedded simplex.

    Infeasibility and unboundedness come back as statuses, not exceptions;
    an "iteration-limit" status is returned after max_iters pivots
    (default 50*(rows+cols) of the internal standard form).

    start_at_upper lists variables to rest at their (finite) upper bound
    initially instead of the lower one; a caller that knows a near-optimal
    corner can cut the pivot count substantially. The optimum is unaffected.
    """
    if lp.num_vars == 0:
        raise InputError("LP has no variables")
    if lp.num_rows == 0:
        return _solve_unconstrained(lp)

    nvars = lp.num_vars
    nrows = lp.num_rows
    sense_flip = -1.0 if lp.sense == "max" else 1.0
    nslack = sum(1 for rel in lp.relations if rel != "=")
    ncols = nvars + nslack + nrows  # structurals, slacks, artificials

    lo = np.full(ncols, -INF)
    hi = np.full(ncols, INF)
    lo[:nvars] = lp.lb
    hi[:nvars] = lp.ub
    cost = np.zeros(ncols)
    cost[:nvars] = sense_flip * np.asarray(lp.obj)

    rows_ix: list[int] = []
    cols_ix: list[int] = []
    data: list[float] = []
    for i, row in enumerate(lp.rows):
        for j, a in row:
            rows_ix.append(i)
            cols_ix.append(j)
            data.append(a)
    s = nvars
    for i, rel in enumerate(lp.relations):
        if rel == "=":
            continue
        rows_ix.append(i)
        cols_ix.append(s)
        data.append(1.0)
        if rel == "<=":
            lo[s], hi[s] = 0.0, INF
        else:
            lo[s], hi[s] = -INF, 0.0
        s += 1

    # Rest values of structurals and slacks determine the phase-1 residual,
    # which fixes each artificial's sign so it starts nonnegative.
    b = np.asarray(lp.rhs, dtype=float)
    at_upper_init = np.isneginf(lo) & np.isfinite(hi)
    if start_at_upper is not None:
        for j in start_at_upper:
            if not (0 <= j < nvars):
                raise InputError(f"start_at_upper references unknown variable {j}")
            if math.isfinite(hi[j]):
                at_upper_init[j] = True
    rest = np.where(at_upper_init, hi, np.where(np.isfinite(lo), lo, 0.0))
    A_part = scipy.sparse.csc_matrix(
        (data, (rows_ix, cols_ix)), shape=(nrows, nvars + nslack)
    )
    resid = b - A_part @ rest[: nvars + nslack]
    art0 = nvars + nslack
    for i in range(nrows):
        rows_ix.append(i)
        cols_ix.append(art0 + i)
        data.append(1.0 if resid[i] >= 0 else -1.0)
        lo[art0 + i], hi[art0 + i] = 0.0, INF

    A = scipy.sparse.csc_matrix((data, (rows_ix, cols_ix)), shape=(nrows, ncols))
    if max_iters is None:
        max_iters = 50 * (nrows + ncols)

    sx = _Simplex(A, b, cost, lo, hi, max_iters)
    nb_at_upper = at_upper_init.copy()
    nb_at_upper[art0:] = False
    sx.setup(np.arange(art0, art0 + nrows), nb_at_upper)

    phase1_cost = np.zeros(ncols)
    phase1_cost[art0:] = 1.0
    status = sx.run(phase1_cost)
    if status == "iteration-limit":
        return _partial(lp, sx, status)
    sx.refactor()
    art_rows = np.flatnonzero(sx.basis >= art0)
    if float(np.abs(sx.xB[art_rows]).sum()) > 1e-7:
        return LpSolution(status="infeasible", objective=None, iterations=sx.iterations)

    _expel_artificials(sx, art0)
    sx.lo[art0:] = 0.0
    sx.hi[art0:] = 0.0  # artificials pinned for phase 2

    status = sx.run(cost)
    sx.refactor()
    if status == "unbounded":
        return LpSolution(status="unbounded", objective=None, iterations=sx.iterations)
    if status == "iteration-limit":
        return _partial(lp, sx, status)

    xfull = sx.rest_values()
    xfull[sx.basis] = sx.xB
    residual = float(np.max(np.abs(A @ xfull - b)))
    obj_internal = float(cost @ xfull)
    y = sx.duals_for(cost)
    d = cost - sx.AT @ y
    nb = ~sx.in_basis
    dual_internal = float(y @ b + d[nb] @ xfull[nb])
    gap = abs(obj_internal - dual_internal)
    if residual > feas_tol or gap > duality_tol * (1.0 + abs(obj_internal)):
        raise EwmcpError(
            f"simplex returned an unreliable optimum (residual {residual:.2e}, "
            f"duality gap {gap:.2e})"
        )
    duals = sense_flip * y
    return LpSolution(
        status="optimal",
        objective=sense_flip * obj_internal,
        x={lp.var_names[j]: float(xfull[j]) for j in range(lp.num_vars)},
        duals={lp.row_names[i]: float(duals[i]) for i in range(nrows)},
        iterations=sx.iterations,
        residual=residual,
        duality_gap=gap,
    )


def _expel_artificials(sx: _Simplex, art0: int) -> None:
    """Pivot zero-valued artificials out of the basis where possible.

    Rows whose artificial admits no pivot are linearly dependent; their
    artificial stays basic at zero and is pinned there by its bounds.
    """
    for r in range(sx.nrows):
        if sx.basis[r] < art0:
            continue
        for j in range(art0):
            if sx.in_basis[j] or sx.lo[j] == sx.hi[j]:
                continue
            rows_j, vals_j = sx.column(j)
            if abs(float(sx.Binv[r, rows_j] @ vals_j)) <= 1e-8:
                continue
            w = sx.Binv[:, rows_j] @ vals_j
            leaving = int(sx.basis[r])
            sx.basis[r] = j
            sx.in_basis[leaving] = False
            sx.in_basis[j] = True
            sx.nb_at_upper[leaving] = False
            sx.xB[r] = sx._rest_value(j)
            sx._update_inverse(r, j, w)
            break
    sx.refactor()


def _partial(lp: LinearProgram, sx: _Simplex, status: str) -> LpSolution:
    xfull = sx.rest_values()
    xfull[sx.basis] = sx.xB
    obj = float(np.asarray(lp.obj) @ xfull[: lp.num_vars])
    return LpSolution(
        status=status,
        objective=obj,
        x={lp.var_names[j]: float(xfull[j]) for j in range(lp.num_vars)},
        iterations=sx.iterations,
    )


def _solve_unconstrained(lp: LinearProgram) -> LpSolution:
    sense_flip = -1.0 if lp.sense == "max" else 1.0
    x: dict[str, float] = {}
    total = 0.0
    for j, name in enumerate(lp.var_names):
        c = sense_flip * lp.obj[j]
        if c > 0:
            v = lp.lb[j]
        elif c < 0:
            v = lp.ub[j]
        elif math.isfinite(lp.lb[j]):
            v = lp.lb[j]
        elif math.isfinite(lp.ub[j]):
            v = min(lp.ub[j], 0.0)
        else:
            v = 0.0
        if not math.isfinite(v):
            return LpSolution(status="unbounded", objective=None)
        x[name] = v
        total += lp.obj[j] * v
    return LpSolution(status="optimal", objective=total, x=x)


# ---------------------------------------------------------------------------
# MPS export / import


def _fmt(value: float) -> str:
    if value == int(value) and abs(value) < 1e10:
        return str(int(value))
    return f"{value:.10g}"


def export_mps(lp: LinearProgram, path: str | Path) -> None:
    """Write a fixed-format MPS file plus a JSON sidecar name map.

    Variable and row names are mangled to 8 characters (C0000001 style) so
    strict fixed-format readers accept them; the sidecar at
    ``<path>.names.json`` maps them back. A maximization objective is
    written with an OBJSENSE section, which mainstream solvers accept.
    """
    path = Path(path)
    vnames = [f"C{j:07d}" for j in range(lp.num_vars)]
    rnames = [f"R{i:07d}" for i in range(lp.num_rows)]
    rel_tag = {"<=": "L", ">=": "G", "=": "E"}

    out = [f"NAME          {lp.name[:60]}"]
    if lp.sense == "max":
        out.append("OBJSENSE")
        out.append("    MAX")
    out.append("ROWS")
    out.append(" N  OBJ")
    for i, rel in enumerate(lp.relations):
        out.append(f" {rel_tag[rel]}  {rnames[i]}")

    entries: list[list[tuple[str, float]]] = [[] for _ in range(lp.num_vars)]
    for j, c in enumerate(lp.obj):
        if c != 0.0:
            entries[j].append(("OBJ", c))
    for i, row in enumerate(lp.rows):
        for j, a in row:
            entries[j].append((rnames[i], a))
    out.append("COLUMNS")
    for j, items in enumerate(entries):
        for rname, a in items:
            out.append(f"    {vnames[j]:<10}{rname:<10}{_fmt(a)}")
    out.append("RHS")
    for i, rv in enumerate(lp.rhs):
        if rv != 0.0:
            out.append(f"    RHS       {rnames[i]:<10}{_fmt(rv)}")
    out.append("BOUNDS")
    for j in range(lp.num_vars):
        lo, hi = lp.lb[j], lp.ub[j]
        name = vnames[j]
        if lo == hi:
            out.append(f" FX BND       {name:<10}{_fmt(lo)}")
            continue
        if math.isinf(lo) and math.isinf(hi):
            out.append(f" FR BND       {name}")
            continue
        if math.isinf(lo):
            out.append(f" MI BND       {name}")
        elif lo != 0.0:
            out.append(f" LO BND       {name:<10}{_fmt(lo)}")
        if not math.isinf(hi):
            out.append(f" UP BND       {name:<10}{_fmt(hi)}")
    out.append("ENDATA")
    path.write_text("\n".join(out) + "\n")

    sidecar = {
        "variables": {vnames[j]: lp.var_names[j] for j in range(lp.num_vars)},
        "rows": {rnames[i]: lp.row_names[i] for i in range(lp.num_rows)},
    }
    Path(str(path) + ".names.json").write_text(json.dumps(sidecar, indent=1))


def read_mps(path: str | Path, *, apply_sidecar: bool = True) -> LinearProgram:
    """Read back the MPS subset written by :func:`export_mps`."""
    path = Path(path)
    lines = path.read_text().splitlines()
    sense = "min"
    section = None
    rel_of: dict[str, str] = {}
    row_order: list[str] = []
    obj_row = None
    col_entries: dict[str, list[tuple[str, float]]] = {}
    col_order: list[str] = []
    rhs: dict[str, float] = {}
    bounds: dict[str, list[tuple[str, float | None]]] = {}
    name = "lp"

    i = 0
    while i < len(lines):
        line = lines[i]
        i += 1
        if not line.strip() or line.lstrip().startswith("*"):
            continue
        if not line[0].isspace():
            head = line.split()
            section = head[0]
            if section == "NAME" and len(head) > 1:
                name = head[1]
            if section == "OBJSENSE":
                sense = "max" if lines[i].strip().upper().startswith("MAX") else "min"
                i += 1
            if section == "ENDATA":
                break
            continue
        fields = line.split()
        if section == "ROWS":
            tag, rname = fields
            if tag == "N":
                obj_row = rname
            else:
                rel_of[rname] = {"L": "<=", "G": ">=", "E": "="}[tag]
                row_order.append(rname)
        elif section == "COLUMNS":
            cname = fields[0]
            if cname not in col_entries:
                col_entries[cname] = []
                col_order.append(cname)
            for rname, value in zip(fields[1::2], fields[2::2]):
                col_entries[cname].append((rname, float(value)))
        elif section == "RHS":
            for rname, value in zip(fields[1::2], fields[2::2]):
                rhs[rname] = float(value)
        elif section == "BOUNDS":
            tag, cname = fields[0], fields[2]
            value = float(fields[3]) if len(fields) > 3 else None
            bounds.setdefault(cname, []).append((tag, value))

    if obj_row is None:
        raise InputError(f"{path}: no objective row")

    var_map = row_map = None
    if apply_sidecar:
        sidecar_path = Path(str(path) + ".names.json")
        if sidecar_path.exists():
            sidecar = json.loads(sidecar_path.read_text())
            var_map = sidecar["variables"]
            row_map = sidecar["rows"]

    lp = LinearProgram(sense=sense, name=name)
    var_idx: dict[str, int] = {}
    row_coeffs: dict[str, list[tuple[int, float]]] = {r: [] for r in row_order}
    for cname in col_order:
        lo, hi = 0.0, INF
        for tag, value in bounds.get(cname, []):
            if tag == "FR":
                lo, hi = -INF, INF
            elif tag == "MI":
                lo = -INF
            elif tag == "LO":
                lo = value
            elif tag == "UP":
                hi = value
            elif tag == "FX":
                lo = hi = value
        obj = 0.0
        for rname, value in col_entries[cname]:
            if rname == obj_row:
                obj = value
        pub = var_map[cname] if var_map else cname
        var_idx[cname] = lp.add_var(pub, obj=obj, lb=lo, ub=hi)
        for rname, value in col_entries[cname]:
            if rname != obj_row:
                row_coeffs[rname].append((var_idx[cname], value))
    for rname in row_order:
        pub = row_map[rname] if row_map else rname
        lp.add_constraint(row_coeffs[rname], rel_of[rname], rhs.get(rname, 0.0), name=pub)
    return lp


def lp_equal(a: LinearProgram, b: LinearProgram, tol: float = 1e-12) -> bool:
    """Structural equality: same sense, variables, bounds, rows, rhs."""
    if a.sense != b.sense or a.num_vars != b.num_vars or a.num_rows != b.num_rows:
        return False
    if a.var_names != b.var_names or a.row_names != b.row_names:
        return False
    if a.relations != b.relations:
        return False
    for x, y in ((a.obj, b.obj), (a.rhs, b.rhs)):
        if any(abs(xv - yv) > tol for xv, yv in zip(x, y)):
            return False
    for x, y in ((a.lb, b.lb), (a.ub, b.ub)):
        for xv, yv in zip(x, y):
            if xv != yv and not abs(xv - yv) <= tol:
                return False
    for ra, rb in zip(a.rows, b.rows):
        if len(ra) != len(rb):
            return False
        for (ja, va), (jb, vb) in zip(ra, rb):
            if ja != jb or abs(va - vb) > tol:
                return False
    return True
