"""Sweep configs, grid artifacts, emission, and the CLI surface."""

import io
import json
import subprocess
import sys

import pytest

from dm_otto import (
    ConfigError,
    ConfigSyntaxError,
    DmOttoError,
    config_echo,
    emit,
    extract_config,
    figure_spec,
    parse_config,
    run_sweep,
)

FIG1_TOML = """\
protocol = "vary-dm"
J = 1.0
B = 4.0
T_hot = 2.0
T_cold = 1.0

[sweep.x]
param = "D1"
min = 0.0
max = 3.0
count = 61

[sweep.y]
param = "D2"
min = 0.0
max = 3.0
count = 61
"""

SMALL_FIELD_TOML = """\
protocol = "vary-field"
J = 1.0
B1 = 8.0
B2 = 6.0
T_hot = 2.0
T_cold = 1.0
output = ["x", "Q_hot", "Q_cold", "W", "eta", "class", "q1", "q2", "w", "eta_local"]

[sweep.x]
param = "D"
min = 0.0
max = 10.0
count = 5
"""


class TestParseConfig:
    def test_fig1_preset_text(self):
        spec = parse_config(FIG1_TOML)
        assert spec.protocol == "vary-dm"
        assert dict(spec.fixed) == {"J": 1.0, "B": 4.0}
        assert (spec.T_hot, spec.T_cold) == (2.0, 1.0)
        assert (spec.x.param, spec.x.count) == ("D1", 61)
        assert (spec.y.param, spec.y.count) == ("D2", 61)
        assert spec.columns == ("x", "y", "Q_hot", "Q_cold", "W", "eta", "class")
        assert spec == figure_spec("fig1")

    def test_syntax_error_carries_position(self):
        with pytest.raises(ConfigSyntaxError) as err:
            parse_config("protocol = \n")
        assert "line" in str(err.value) and "column" in str(err.value)

    @pytest.mark.parametrize("mutation, fragment", [
        (lambda t: t.replace("T_cold = 1.0\n", ""), "T_cold"),
        (lambda t: t + "extra = 1\n", "extra"),
        (lambda t: t.replace("count = 61", "count = 1", 1), "count"),
        (lambda t: t.replace('param = "D2"', 'param = "D1"'), "sweep.y.param"),
        (lambda t: t.replace('param = "D2"', 'param = "B1"'), "B1"),
        (lambda t: t.replace("max = 3.0", "max = 0.0"), "min"),
        (lambda t: t.replace('protocol = "vary-dm"', 'protocol = "otto"'), "protocol"),
        (lambda t: t.replace("J = 1.0\n", "J = 1.0\nD1 = 0.5\n"), "D1"),
        (lambda t: t.replace("J = 1.0\n", ""), "J"),
        (lambda t: t.replace("J = 1.0\n", 'J = 1.0\noutput = ["x", "volts"]\n'), "volts"),
        (lambda t: t.replace("J = 1.0\n", 'J = 1.0\noutput = ["x", "q1"]\n'), "q1"),
    ])
    def test_semantic_errors_name_offender(self, mutation, fragment):
        with pytest.raises(ConfigError) as err:
            parse_config(mutation(FIG1_TOML))
        assert fragment in str(err.value)

    def test_equal_endpoints_rejected_even_with_count_two(self):
        text = FIG1_TOML.replace("count = 61", "count = 2").replace(
            "[sweep.y]\nparam = \"D2\"\nmin = 0.0\nmax = 3.0",
            "[sweep.y]\nparam = \"D2\"\nmin = 1.0\nmax = 1.0")
        with pytest.raises(ConfigError):
            parse_config(text)

    def test_one_dimensional_scan_allowed(self):
        spec = parse_config(SMALL_FIELD_TOML)
        assert spec.y is None
        assert spec.columns[-1] == "eta_local"

    def test_echo_round_trip(self):
        for fig in ("fig1", "fig4", "fig5"):
            spec = figure_spec(fig)
            assert parse_config(config_echo(spec)) == spec
        spec = parse_config(SMALL_FIELD_TOML)
        assert parse_config(config_echo(spec)) == spec


class TestRunSweep:
    def test_grid_coverage_and_order(self):
        spec = parse_config(FIG1_TOML.replace("count = 61", "count = 3"))
        artifact = run_sweep(spec)
        assert len(artifact.rows) == 9
        xs = [row[0] for row in artifact.rows]
        ys = [row[1] for row in artifact.rows]
        assert xs == [0.0, 0.0, 0.0, 1.5, 1.5, 1.5, 3.0, 3.0, 3.0]  # x slowest
        assert ys == [0.0, 1.5, 3.0] * 3

    def test_idle_diagonal_has_empty_eta(self):
        spec = parse_config(FIG1_TOML.replace("count = 61", "count = 3"))
        artifact = run_sweep(spec)
        section = artifact.data_section()
        lines = section.split("\n")
        assert lines[0] == "x,y,Q_hot,Q_cold,W,eta,class"
        diag = [ln for ln in lines[1:] if ln.startswith("0.0,0.0,")][0]
        assert diag.endswith(",,Idle")  # empty eta field, not NaN text
        assert section.endswith("\n") and "\r" not in section

    def test_local_columns(self):
        artifact = run_sweep(parse_config(SMALL_FIELD_TOML))
        row0 = dict(zip(artifact.columns, artifact.rows[0]))
        assert row0["q1"] == pytest.approx(0.005897950950662406, abs=1e-12)
        assert row0["eta_local"] == pytest.approx(0.25, abs=1e-12)

    def test_determinism_across_runs_and_workers(self):
        spec = parse_config(SMALL_FIELD_TOML)
        one = run_sweep(spec).data_section()
        two = run_sweep(spec).data_section()
        pooled = run_sweep(spec, workers=2).data_section()
        assert one == two == pooled

    def test_fig4_preset_work_sign_change(self):
        artifact = run_sweep(figure_spec("fig4"))
        assert len(artifact.rows) == 401
        w_col = artifact.columns.index("W")
        works = [row[w_col] for row in artifact.rows]
        assert works[0] == pytest.approx(0.002948975475331203, abs=1e-14)
        flips = sum(1 for a, b in zip(works, works[1:]) if (a > 0.0) != (b > 0.0))
        assert flips == 1

    def test_fig5_preset_eta_nonmonotonic(self):
        artifact = run_sweep(figure_spec("fig5"))
        eta_col = artifact.columns.index("eta")
        cls_col = artifact.columns.index("class")
        etas = [row[eta_col] for row in artifact.rows if row[cls_col] == "Engine"]
        assert len(etas) > 100
        peak = max(range(len(etas)), key=lambda i: etas[i])
        assert 0 < peak < len(etas) - 1  # rises then falls
        assert etas[0] == pytest.approx(0.2573054448647286, abs=1e-12)


class TestEmission:
    def test_csv_layout(self, tmp_path):
        artifact = run_sweep(parse_config(SMALL_FIELD_TOML))
        target = tmp_path / "scan.csv"
        emit(artifact, "csv", target, timestamp="2026-08-10T00:00:00+00:00")
        text = target.read_text(encoding="utf-8")
        assert text.startswith("# generated-at: 2026-08-10T00:00:00+00:00\n# tool: dm-otto\n")
        data = text.split("# |count = 5\n", 1)[1]
        assert data == artifact.data_section()
        # embedded config echo parses back to the same spec
        assert parse_config(extract_config(text)) == parse_config(SMALL_FIELD_TOML)

    def test_csv_two_by_two_line_count(self):
        toml = SMALL_FIELD_TOML.replace("count = 5", "count = 2") + "\n"
        toml += "[sweep.y]\nparam = \"B1\"\nmin = 7.0\nmax = 9.0\ncount = 2\n"
        toml = toml.replace('output = ["x", "Q_hot", "Q_cold", "W", "eta", "class", '
                            '"q1", "q2", "w", "eta_local"]\n', "")
        toml = toml.replace("B1 = 8.0\n", "")
        artifact = run_sweep(parse_config(toml))
        assert artifact.data_section().count("\n") == 5  # header + 4 rows

    def test_json_report_deterministic(self, tmp_path):
        from dm_otto import AuditConfig, audit_artifact

        art = audit_artifact(AuditConfig(claims=("C8",)))
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        emit(art, "json-report", a)
        emit(audit_artifact(AuditConfig(claims=("C8",))), "json-report", b)
        assert a.read_bytes() == b.read_bytes()
        doc = json.loads(a.read_text())
        assert doc["claims"][0]["claim_id"] == "C8"

    def test_unwritable_destination_raises_with_path(self, tmp_path):
        artifact = run_sweep(parse_config(SMALL_FIELD_TOML))
        bad = tmp_path / "missing-dir" / "out.csv"
        with pytest.raises(DmOttoError) as err:
            emit(artifact, "csv", bad)
        assert "out.csv" in str(err.value)

    def test_unknown_format_rejected(self):
        artifact = run_sweep(parse_config(SMALL_FIELD_TOML))
        with pytest.raises(DmOttoError):
            emit(artifact, "parquet", io.StringIO())


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "dm_otto.cli", *args],
        capture_output=True, text=True, timeout=300, **kwargs,
    )


class TestCli:
    def test_cycle_subcommand(self):
        proc = run_cli("cycle", "--protocol", "vary-field", "--J", "1", "--D", "0",
                       "--B1", "8", "--B2", "6", "--T-hot", "2", "--T-cold", "1")
        assert proc.returncode == 0
        lines = dict(ln.split(" = ") for ln in proc.stdout.strip().split("\n"))
        assert float(lines["Q_hot"]) == pytest.approx(0.01146099134000661, abs=1e-12)
        assert float(lines["W"]) == pytest.approx(0.002948975475331203, abs=1e-14)
        assert float(lines["eta"]) == pytest.approx(0.2573054448647286, abs=1e-12)
        assert lines["class"] == "Engine"
        assert float(lines["eta_local"]) == pytest.approx(0.25, abs=1e-12)

    def test_cycle_vary_dm(self):
        proc = run_cli("cycle", "--protocol", "vary-dm", "--J", "1", "--B", "4",
                       "--D1", "0", "--D2", "2", "--T-hot", "2", "--T-cold", "1")
        assert proc.returncode == 0
        lines = dict(ln.split(" = ") for ln in proc.stdout.strip().split("\n"))
        assert float(lines["W"]) == pytest.approx(0.018828053929664683, abs=1e-14)

    def test_cycle_flag_validation(self):
        proc = run_cli("cycle", "--protocol", "vary-field", "--J", "1",
                       "--B1", "8", "--B2", "6", "--T-hot", "2", "--T-cold", "1")
        assert proc.returncode == 1
        assert "--D" in proc.stderr
        proc = run_cli("cycle", "--protocol", "vary-dm", "--J", "1", "--B", "4",
                       "--D1", "0", "--D2", "2", "--D", "1",
                       "--T-hot", "2", "--T-cold", "1")
        assert proc.returncode == 1

    def test_figures_and_determinism(self, tmp_path):
        out_a, out_b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run_cli("figures", "fig4", "--output", str(out_a)).returncode == 0
        assert run_cli("figures", "fig4", "--output", str(out_b)).returncode == 0
        strip = lambda p: "".join(
            ln for ln in p.read_text().splitlines(keepends=True) if not ln.startswith("#"))
        assert strip(out_a) == strip(out_b)
        assert strip(out_a).count("\n") == 402

    def test_figures_fig1_grid(self, tmp_path):
        out = tmp_path / "fig1.csv"
        assert run_cli("figures", "fig1", "--output", str(out)).returncode == 0
        lines = [ln for ln in out.read_text().splitlines() if not ln.startswith("#")]
        assert lines[0] == "x,y,Q_hot,Q_cold,W,eta,class"
        assert len(lines) == 1 + 61 * 61

    def test_sweep_subcommand(self, tmp_path):
        config = tmp_path / "scan.toml"
        config.write_text(SMALL_FIELD_TOML)
        out = tmp_path / "scan.csv"
        proc = run_cli("sweep", "--config", str(config), "--output", str(out), "--verify")
        assert proc.returncode == 0
        assert "0 violations" in proc.stderr
        assert out.read_text().count("\n") >= 6

    def test_sweep_bad_config_exit_1(self, tmp_path):
        config = tmp_path / "bad.toml"
        config.write_text(FIG1_TOML + "bogus = true\n")
        proc = run_cli("sweep", "--config", str(config))
        assert proc.returncode == 1
        assert "bogus" in proc.stderr

    def test_sweep_missing_file_exit_1(self):
        proc = run_cli("sweep", "--config", "/nonexistent/sweep.toml")
        assert proc.returncode == 1

    def test_audit_subcommand(self, tmp_path):
        out = tmp_path / "audit.json"
        proc = run_cli("audit", "--claims", "C4,C8", "--output", str(out))
        assert proc.returncode == 0
        doc = json.loads(out.read_text())
        assert [c["claim_id"] for c in doc["claims"]] == ["C4", "C8"]
        assert all(c["verdict"] == "Holds" for c in doc["claims"])
        proc = run_cli("audit", "--claims", "C4,C99")
        assert proc.returncode == 1
        assert "C99" in proc.stderr

    def test_oracle_subcommand(self):
        proc = run_cli("oracle", "--draws", "300", "--seed", "7")
        assert proc.returncode == 0
        assert "result = PASS" in proc.stdout
        deviation = float(proc.stdout.split("max_eigenvalue_deviation = ")[1].split("\n")[0])
        assert deviation <= 1e-10

    def test_unknown_figure_exit_1(self):
        proc = run_cli("figures", "fig9")
        assert proc.returncode == 1
