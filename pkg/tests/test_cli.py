"""End-to-end checks of the command line driver.

Everything runs in process through ``cli.main`` with stdout and stderr
redirected by hand; capsys is avoided on purpose so the suite behaves
the same when pytest runs with -s (the acceptance module prints its own
pass/fail lines).
"""

import contextlib
import io
import json
import shutil
import subprocess

import pytest

import intercausal
from intercausal import NoisyOrParams, cli, noisy_or_matrix

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        rc = cli.main(argv)
    return rc, out.getvalue(), err.getvalue()


@pytest.fixture()
def nor_file(tmp_path):
    m = noisy_or_matrix(NoisyOrParams(0.9, 0.5, 0.5))
    path = tmp_path / "nor.json"
    path.write_text(json.dumps(m.to_json()), encoding="utf-8")
    return str(path)


class TestAnalyze:
    def test_text_report(self, nor_file):
        rc, out, err = run(["analyze", nor_file])
        assert rc == 0 and err == ""
        assert out.splitlines() == [
            "classification: EXCLUSIONARY",
            "det e+: -0.225",
            "det e-: 2.77555756156e-17",
            "Y e+: -0.225",
            "Y e-: 0.225",
            "CICI at e+: no",
            "CICI at e-: yes",
            "degenerate double CICI: no",
            "factorization e-: a=0.333333333333, b=0.333333333333, c=2.025",
            "swap class e-: 1 (NOISY_OR)",
        ]

    def test_json_report(self, nor_file):
        rc, out, err = run(["analyze", nor_file, "--json"])
        assert rc == 0
        info = json.loads(out)
        assert info["classification"] == "exclusionary"
        assert info["det_pos"] == pytest.approx(-0.225, abs=1e-12)
        assert info["y_neg"] == -info["y_pos"]
        assert info["cici_pos"] is False and info["cici_neg"] is True
        assert info["degenerate_double_cici"] is False
        assert info["factorizations"]["pos"] is None
        neg = info["factorizations"]["neg"]
        assert neg["identifiable"] is True
        assert neg["a"] == pytest.approx(1 / 3, abs=1e-15)
        assert neg["c"] == pytest.approx(2.025, abs=1e-15)
        assert neg["swap_class"] == 1
        assert neg["swap_class_name"] == "NOISY_OR"

    def test_zero_entries_block_the_factorization(self, tmp_path):
        path = tmp_path / "zeros.json"
        path.write_text(
            json.dumps({"state": "pos", "rows": [[0.0, 0.0], [0.5, 0.5]]}),
            encoding="utf-8",
        )
        rc, out, err = run(["analyze", str(path)])
        assert rc == 0
        lines = out.splitlines()
        assert "degenerate double CICI: yes" in lines
        assert "factorization e+: not identifiable (zero entries)" in lines
        assert "swap class e-: 2 (ROW_SWAP)" in lines


class TestSurface:
    GRID2 = (
        "f\\a,0,1\n"
        "0,0.0909090909091,0.0909090909091\n"
        "1,0.90099009901,0.521304576539\n"
    )

    def test_two_point_grid_bytes(self):
        rc, out, err = run(["surface", "--k", "0.1", "--w", "0.9", "--grid", "2"])
        assert rc == 0
        assert out == self.GRID2

    def test_out_file_matches_stdout_byte_for_byte(self, tmp_path):
        target = tmp_path / "grid.csv"
        rc, _, _ = run(
            ["surface", "--k", "0.1", "--w", "0.9", "--grid", "2", "--out", str(target)]
        )
        assert rc == 0
        assert target.read_text(encoding="utf-8") == self.GRID2

    def test_output_is_deterministic(self):
        argv = ["surface", "--q0", "0.7", "--q1", "0.4", "--q2", "0.6", "--grid", "7"]
        assert run(argv) == run(argv)

    def test_matrix_file_source_agrees_with_flags(self, nor_file):
        rc1, out1, _ = run(["surface", "--matrix", nor_file, "--grid", "5"])
        rc2, out2, _ = run(
            ["surface", "--q0", "0.9", "--q1", "0.5", "--q2", "0.5", "--grid", "5"]
        )
        assert rc1 == rc2 == 0
        assert out1 == out2

    def test_certain_prior_pins_every_cell(self):
        rc, out, err = run(
            ["surface", "--k", "0.1", "--w", "0.9", "--prior-b", "1", "--grid", "2"]
        )
        assert rc == 0
        assert out == "f\\a,0,1\n0,1,1\n1,1,1\n"

    def test_edge_curve_output(self):
        rc, out, err = run(
            [
                "surface", "--k", "0.5", "--w", "0.9",
                "--prior-b", "0.55", "--grid", "3", "--edge",
            ]
        )
        assert rc == 0
        assert out == (
            "a,belief_b,complete_exclusion\n"
            "0,0.870503597122,1\n"
            "0.5,0.71358629131,0.55\n"
            "1,0.632653061224,0\n"
        )

    def test_plot_renders_a_png(self, tmp_path):
        png = tmp_path / "figure.png"
        rc, out, _ = run(
            ["surface", "--k", "0.1", "--w", "0.9", "--grid", "2", "--plot", str(png)]
        )
        assert rc == 0
        assert out == self.GRID2, "plotting must not change the CSV"
        assert png.read_bytes()[:8] == PNG_MAGIC

    def test_bare_plot_derives_its_path_from_out(self, tmp_path):
        target = tmp_path / "edge.csv"
        rc, _, _ = run(
            [
                "surface", "--k", "0.5", "--w", "0.9", "--grid", "3",
                "--edge", "--out", str(target), "--plot",
            ]
        )
        assert rc == 0
        assert (tmp_path / "edge.png").read_bytes()[:8] == PNG_MAGIC

    def test_bare_plot_without_out_is_a_usage_error(self):
        rc, _, err = run(["surface", "--k", "0.5", "--w", "0.9", "--plot"])
        assert rc == 4
        assert "--plot without a path requires --out" in err


class TestVerify:
    def test_smoke_run_passes_all_checks(self):
        rc, out, err = run(["verify", "--samples", "5"])
        assert rc == 0 and err == ""
        lines = out.splitlines()
        assert len(lines) == 15
        assert all(line.startswith("PASS  ") for line in lines[:-1])
        assert lines[-1] == "all 14 checks passed"

    def test_json_output(self):
        rc, out, _ = run(["verify", "--samples", "5", "--json"])
        assert rc == 0
        doc = json.loads(out)
        assert doc["all_passed"] is True
        assert len(doc["checks"]) == 14
        assert all(c["passed"] for c in doc["checks"])

    def test_seed_is_reproducible(self):
        argv = ["verify", "--samples", "5", "--seed", "7", "--json"]
        assert run(argv) == run(argv)


class TestConvert:
    def test_singular_to_noisy_or(self):
        rc, out, _ = run(
            [
                "convert", "--from", "singular", "--to", "noisy-or",
                "--a", "0.4", "--b", "0.25", "--c", "1.0",
            ]
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["model"] == "noisy-or"
        assert doc["q0"] == pytest.approx(0.45, abs=1e-15)
        assert doc["q1"] == pytest.approx(2 / 3, abs=1e-15)
        assert doc["q2"] == pytest.approx(1 / 3, abs=1e-15)

    def test_symmetric_round_trip(self):
        rc, out, _ = run(
            [
                "convert", "--from", "symmetric", "--to", "noisy-or",
                "--k", "0.5", "--w", "0.9",
            ]
        )
        assert rc == 0
        assert json.loads(out) == {"model": "noisy-or", "q0": 0.9, "q1": 0.5, "q2": 0.5}
        rc, out, _ = run(
            [
                "convert", "--from", "noisy-or", "--to", "symmetric",
                "--q0", "0.9", "--q1", "0.5", "--q2", "0.5",
            ]
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["model"] == "symmetric"
        assert doc["k"] == pytest.approx(0.5, abs=1e-15)
        assert doc["w"] == pytest.approx(0.9, abs=1e-15)

    def test_identity_conversion(self):
        rc, out, _ = run(
            [
                "convert", "--from", "noisy-or", "--to", "noisy-or",
                "--q0", "0.9", "--q1", "0.5", "--q2", "0.5",
            ]
        )
        assert rc == 0
        assert json.loads(out) == {"model": "noisy-or", "q0": 0.9, "q1": 0.5, "q2": 0.5}

    def test_asymmetric_reliabilities_cannot_become_symmetric(self):
        rc, _, err = run(
            [
                "convert", "--from", "noisy-or", "--to", "symmetric",
                "--q0", "0.9", "--q1", "0.5", "--q2", "0.6",
            ]
        )
        assert rc == 3
        assert "q1 = q2" in err

    def test_out_of_range_factorization_names_the_swap_class(self):
        rc, _, err = run(
            [
                "convert", "--from", "singular", "--to", "noisy-or",
                "--a", "0.6", "--b", "0.3", "--c", "0.5",
            ]
        )
        assert rc == 3
        assert "swap class COLUMN_SWAP (class 3)" in err

    def test_foreign_flag_is_a_usage_error(self):
        rc, _, err = run(
            [
                "convert", "--from", "symmetric", "--to", "noisy-or",
                "--k", "0.5", "--w", "0.9", "--a", "0.3",
            ]
        )
        assert rc == 4
        assert "--a does not belong to source 'symmetric'" in err

    def test_missing_flag_is_a_usage_error(self):
        rc, _, err = run(["convert", "--from", "symmetric", "--to", "noisy-or", "--k", "0.5"])
        assert rc == 4
        assert "source 'symmetric' needs --k, --w" in err


class TestExitCodes:
    def test_conflicting_sources(self):
        rc, _, err = run(
            [
                "surface", "--k", "0.5", "--w", "0.9",
                "--q0", "0.9", "--q1", "0.5", "--q2", "0.5",
            ]
        )
        assert rc == 4
        assert "exactly one table source" in err

    def test_partial_source(self):
        rc, _, err = run(["surface", "--k", "0.5"])
        assert rc == 4
        assert "needs both --k and --w" in err

    def test_unreadable_file(self):
        rc, _, err = run(["analyze", "/nonexistent/nowhere.json"])
        assert rc == 2
        assert err.startswith("parse error: cannot read")

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        rc, _, err = run(["analyze", str(path)])
        assert rc == 2
        assert "is not valid JSON" in err

    def test_out_of_range_entry(self, tmp_path):
        path = tmp_path / "range.json"
        path.write_text(
            json.dumps({"state": "pos", "rows": [[1.5, 0.2], [0.3, 0.4]]}),
            encoding="utf-8",
        )
        rc, _, err = run(["analyze", str(path)])
        assert rc == 3
        assert err == "error: r must lie in [0, 1], got 1.5\n"


def test_console_script_reports_version():
    exe = shutil.which("intercausal")
    if exe is None:
        pytest.skip("console script not installed on PATH")
    res = subprocess.run([exe, "--version"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == f"intercausal {intercausal.__version__}"
