"""Renderer tests: the four figure shapes, box counts, determinism.

A synthetic full-grid CSV exercises the box-count contract (the renderer
only sees the public CSV schema); a small checked-in CSV produced by the
real harness covers integration.
"""

import importlib.machinery
import importlib.util
from pathlib import Path

import pytest

PLOTS_DIR = Path(__file__).resolve().parent.parent
DATA = Path(__file__).resolve().parent / "data"

spec = importlib.util.spec_from_loader(
    "render",
    importlib.machinery.SourceFileLoader("render", str(PLOTS_DIR / "render")),
)
render_mod = importlib.util.module_from_spec(spec)
spec.loader.exec_module(render_mod)

HEADER = (
    "instance,n,m,density_pct,coloring_id,coloring_kind,k,"
    "ub1,ub1_ms,ub2,ub2_ms,greedy_dual,omega,gap1_pct,gap2_pct,diff_pct,error"
)


@pytest.fixture(scope="module")
def full_grid_csv(tmp_path_factory):
    """Schema-conforming CSV shaped like the full random grid: sizes
    10..100 at densities 10..90 plus 91..99 at size 100, two colorings."""
    path = tmp_path_factory.mktemp("csv") / "grid.csv"
    lines = [HEADER]
    sizes = range(10, 101, 10)
    for n in sizes:
        pcts = list(range(10, 91, 10))
        if n == 100:
            pcts += list(range(91, 100))
        for pct in pcts:
            for rep in range(2):
                for cid in ("dsatur", "greedy-s1"):
                    m = n * (n - 1) // 2 * pct // 100
                    gap1 = 40.0 + n + pct / 10 + rep
                    gap2 = 30.0 + n + pct / 10 + rep
                    diff = 5.0 + pct / 10 - rep
                    lines.append(
                        f"random_n{n:03d}_mu{pct:02d}_r{rep},{n},{m},{pct},"
                        f"{cid},dsatur,5,100,,80,,120,50,{gap1},{gap2},{diff},"
                    )
    path.write_text("\n".join(lines) + "\n")
    return path


def run(csv_path, out, *extra):
    return render_mod.main(
        ["--csv", str(csv_path), "--out", str(out), *extra]
    )


class TestFourFigureShapes:
    def test_gap_by_size(self, full_grid_csv, tmp_path):
        args = render_mod.parse_args(
            ["--csv", str(full_grid_csv), "--metric", "gap", "--group-by", "n",
             "--max-n", "90", "--out", "x.png"]
        )
        rows = render_mod.load_rows(full_grid_csv, args)
        fig, boxes = render_mod.render(rows, "gap", "n")
        assert boxes == 9 * 2  # nine size groups, both bounds

    def test_gap_by_density_at_largest_size(self, full_grid_csv):
        args = render_mod.parse_args(
            ["--csv", str(full_grid_csv), "--metric", "gap", "--group-by",
             "density", "--filter-n", "100", "--density-range", "10-90",
             "--out", "x.png"]
        )
        rows = render_mod.load_rows(full_grid_csv, args)
        _, boxes = render_mod.render(rows, "gap", "density")
        assert boxes == 9 * 2

    def test_gap_by_high_density(self, full_grid_csv):
        args = render_mod.parse_args(
            ["--csv", str(full_grid_csv), "--metric", "gap", "--group-by",
             "density", "--filter-n", "100", "--density-range", "91-99",
             "--out", "x.png"]
        )
        rows = render_mod.load_rows(full_grid_csv, args)
        _, boxes = render_mod.render(rows, "gap", "density")
        assert boxes == 9 * 2

    def test_diff_by_size(self, full_grid_csv):
        args = render_mod.parse_args(
            ["--csv", str(full_grid_csv), "--metric", "diff", "--group-by", "n",
             "--max-n", "90", "--out", "x.png"]
        )
        rows = render_mod.load_rows(full_grid_csv, args)
        _, boxes = render_mod.render(rows, "diff", "n")
        assert boxes == 9

    def test_diff_by_density(self, full_grid_csv):
        args = render_mod.parse_args(
            ["--csv", str(full_grid_csv), "--metric", "diff", "--group-by",
             "density", "--filter-n", "100", "--density-range", "91-99",
             "--out", "x.png"]
        )
        rows = render_mod.load_rows(full_grid_csv, args)
        _, boxes = render_mod.render(rows, "diff", "density")
        assert boxes == 9

    def test_acceptance_secondary(self, full_grid_csv, tmp_path):
        jobs = [
            (["--metric", "gap", "--group-by", "n", "--max-n", "90"], 18),
            (
                ["--metric", "gap", "--group-by", "density", "--filter-n", "100",
                 "--density-range", "10-90"],
                18,
            ),
            (["--metric", "diff", "--group-by", "n", "--max-n", "90"], 9),
            (
                ["--metric", "diff", "--group-by", "density", "--filter-n", "100",
                 "--density-range", "91-99"],
                9,
            ),
        ]
        ok = True
        for i, (extra, expected) in enumerate(jobs):
            out = tmp_path / f"out{i}.png"
            args = render_mod.parse_args(
                ["--csv", str(full_grid_csv), "--out", str(out), *extra]
            )
            rows = render_mod.load_rows(full_grid_csv, args)
            fig, boxes = render_mod.render(rows, args.metric, args.group_by)
            fig.savefig(out, dpi=120)
            ok = ok and out.exists() and boxes == expected
        print(f"ACCEPTANCE S1 four reference-shaped figures: {'PASS' if ok else 'FAIL'}")
        assert ok


class TestCliAndErrors:
    def test_main_writes_png(self, full_grid_csv, tmp_path):
        out = tmp_path / "fig.png"
        code = run(full_grid_csv, out, "--metric", "diff", "--group-by", "n")
        assert code == 0
        assert out.stat().st_size > 0

    def test_empty_filter_exits_nonzero(self, full_grid_csv, tmp_path):
        with pytest.raises(SystemExit):
            run(
                full_grid_csv,
                tmp_path / "x.png",
                "--metric",
                "gap",
                "--group-by",
                "n",
                "--filter-n",
                "55555",
            )

    def test_single_record_degenerate_box(self, tmp_path):
        path = tmp_path / "one.csv"
        path.write_text(
            HEADER
            + "\nrandom_n010_mu50_r0,10,22,48.9,dsatur,dsatur,4,30,,25,,40,20,50,25,16.7,\n"
        )
        out = tmp_path / "one.png"
        assert run(path, out, "--metric", "diff", "--group-by", "n") == 0
        assert out.exists()

    def test_rendering_is_deterministic(self, tmp_path):
        csv_path = DATA / "small_grid.csv"
        a, b = tmp_path / "a.png", tmp_path / "b.png"
        run(csv_path, a, "--metric", "gap", "--group-by", "n")
        run(csv_path, b, "--metric", "gap", "--group-by", "n")
        assert a.read_bytes() == b.read_bytes()

    def test_real_harness_csv(self, tmp_path):
        out = tmp_path / "real.png"
        code = run(
            DATA / "small_grid.csv", out, "--metric", "gap", "--group-by", "n"
        )
        assert code == 0
        assert out.stat().st_size > 0
