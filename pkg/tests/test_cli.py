import numpy as np
import pytest

from diracent.cli import main
from diracent.sweep import format_value


def parse_csv(path):
    lines = path.read_text().splitlines()
    header = lines[0].split(",")
    rows = [dict(zip(header, line.split(","))) for line in lines[1:]]
    return header, rows


def parse_point(output):
    values = {}
    for line in output.splitlines():
        if "=" in line and not line.startswith("#"):
            key, _, value = line.partition("=")
            values[key] = value
    return values


def run(capsys, *args):
    code = main(list(args))
    return code, capsys.readouterr().out


class TestSweep:
    def test_negativity_endpoints(self, tmp_path, capsys):
        code, _ = run(
            capsys,
            "sweep",
            "--steps",
            "2",
            "--out-dir",
            str(tmp_path),
            "--figures",
            "fig3_negativity",
            "--no-plot",
        )
        assert code == 0
        header, rows = parse_csv(tmp_path / "fig3_negativity.csv")
        assert header == ["r", "N_AI", "N_III", "N_AII"]
        assert float(rows[0]["N_AI"]) == pytest.approx(1.0, abs=1e-12)
        assert float(rows[1]["N_AI"]) == pytest.approx(np.log2(1.5), abs=1e-12)

    def test_tangle_and_mutual_information_endpoints(self, tmp_path, capsys):
        code, _ = run(
            capsys,
            "sweep",
            "--steps",
            "2",
            "--out-dir",
            str(tmp_path),
            "--figures",
            "fig6_tangles,fig5_mutual_info",
            "--no-plot",
        )
        assert code == 0
        _, tangles = parse_csv(tmp_path / "fig6_tangles.csv")
        last = tangles[-1]
        assert float(last["tau_AI"]) == pytest.approx(0.5, abs=1e-12)
        assert float(last["tau_AII"]) == pytest.approx(0.5, abs=1e-12)
        assert float(last["tau_III"]) == pytest.approx(0.25, abs=1e-12)
        _, info = parse_csv(tmp_path / "fig5_mutual_info.csv")
        first = info[0]
        assert float(first["I_AI"]) == pytest.approx(2.0, abs=1e-12)
        assert float(first["I_AII"]) == pytest.approx(0.0, abs=1e-10)
        assert float(first["I_III"]) == pytest.approx(0.0, abs=1e-10)

    def test_byte_determinism(self, tmp_path, capsys):
        outputs = []
        for sub in ("one", "two"):
            out_dir = tmp_path / sub
            code, _ = run(
                capsys,
                "sweep",
                "--steps",
                "9",
                "--out-dir",
                str(out_dir),
                "--no-plot",
            )
            assert code == 0
            outputs.append(
                {p.name: p.read_bytes() for p in sorted(out_dir.glob("*.csv"))}
            )
        assert len(outputs[0]) == 7
        assert outputs[0] == outputs[1]

    def test_line_endings_are_lf(self, tmp_path, capsys):
        run(
            capsys,
            "sweep",
            "--steps",
            "2",
            "--out-dir",
            str(tmp_path),
            "--figures",
            "fig2_entropy",
            "--no-plot",
        )
        raw = (tmp_path / "fig2_entropy.csv").read_bytes()
        assert b"\r" not in raw
        assert raw.endswith(b"\n")

    def test_plot_renders_png_beside_csv(self, tmp_path, capsys):
        code, _ = run(
            capsys,
            "sweep",
            "--steps",
            "5",
            "--out-dir",
            str(tmp_path),
            "--figures",
            "fig3_negativity,fig6_tangles",
        )
        assert code == 0
        assert (tmp_path / "fig3_negativity.png").exists()
        assert (tmp_path / "fig6_tangles.png").exists()
        assert (tmp_path / "fig3_negativity.csv").exists()

    def test_invalid_range_is_usage_error(self, tmp_path, capsys):
        code = main(
            ["sweep", "--r-min", "0.5", "--r-max", "0.1", "--out-dir", str(tmp_path)]
        )
        capsys.readouterr()
        assert code == 2

    def test_unknown_figure_is_usage_error(self, tmp_path, capsys):
        code = main(
            ["sweep", "--figures", "fig99_bogus", "--out-dir", str(tmp_path)]
        )
        capsys.readouterr()
        assert code == 2


class TestPoint:
    def test_inertial_values(self, capsys):
        code, out = run(capsys, "point", "--r", "0")
        assert code == 0
        values = parse_point(out)
        assert float(values["C_AI"]) == pytest.approx(1.0, abs=1e-12)
        assert abs(float(values["residual_tangle"])) < 1e-10
        assert abs(float(values["eta_AI"])) < 1e-10
        assert float(values["S_A"]) == pytest.approx(1.0, abs=1e-12)

    def test_maximal_acceleration_values(self, capsys):
        code, out = run(capsys, "point", "--r", str(np.pi / 4))
        assert code == 0
        values = parse_point(out)
        assert float(values["C_AI"]) == pytest.approx(1.0 / np.sqrt(2.0), abs=1e-12)
        assert float(values["I_AI"]) == pytest.approx(1.0, abs=1e-10)

    def test_intermediate_concurrence(self, capsys):
        code, out = run(capsys, "point", "--r", str(np.pi / 6))
        values = parse_point(out)
        assert float(values["C_AI"]) == pytest.approx(np.cos(np.pi / 6), abs=1e-10)

    def test_matches_sweep_endpoint_to_printed_precision(self, tmp_path, capsys):
        run(
            capsys,
            "sweep",
            "--steps",
            "2",
            "--out-dir",
            str(tmp_path),
            "--figures",
            "fig3_negativity",
            "--no-plot",
        )
        _, rows = parse_csv(tmp_path / "fig3_negativity.csv")
        _, out = run(capsys, "point", "--r", rows[0]["r"])
        values = parse_point(out)
        assert values["N_AI"] == rows[0]["N_AI"]
        assert values["N_AII"] == rows[0]["N_AII"]

    def test_out_of_range_is_usage_error(self, capsys):
        code = main(["point", "--r", "1.0"])
        capsys.readouterr()
        assert code == 2


class TestDual:
    def test_maximal_angles(self, capsys):
        code, out = run(capsys, "dual", "--r1", str(np.pi / 4), "--r2", str(np.pi / 4))
        assert code == 0
        values = parse_point(out)
        assert float(values["N"]) == pytest.approx(np.log2(1.25), abs=1e-12)

    def test_inertial_first_observer_matches_point(self, capsys):
        r = 0.31
        _, dual_out = run(capsys, "dual", "--r1", "0", "--r2", str(r))
        _, point_out = run(capsys, "point", "--r", str(r))
        dual_values = parse_point(dual_out)
        point_values = parse_point(point_out)
        assert dual_values["N"] == point_values["N_AI"]
        assert dual_values["C"] == point_values["C_AI"]
        assert dual_values["minpt"] == point_values["minpt_AI"]

    def test_matrix_is_printed(self, capsys):
        _, out = run(capsys, "dual", "--r1", "0.2", "--r2", "0.3")
        assert "density matrix" in out
        assert len(out.splitlines()) >= 8


class TestVerify:
    def test_battery_passes(self, capsys):
        code, out = run(capsys, "verify")
        assert code == 0
        assert "[FAIL]" not in out
        assert out.count("[PASS]") == 13

    def test_extreme_tolerance_is_documented_behavior(self, capsys):
        # 1e-15 sits at rounding level; the battery may legitimately fail,
        # but it must run to completion and report one way or the other
        code, out = run(capsys, "verify", "--tol", "1e-15")
        assert code in (0, 1)
        assert "verification" in out


class TestUsage:
    def test_no_arguments_is_usage_error(self, capsys):
        code = main([])
        capsys.readouterr()
        assert code == 2

    def test_unknown_command_is_usage_error(self, capsys):
        code = main(["frobnicate"])
        capsys.readouterr()
        assert code == 2


class TestFormat:
    def test_seventeen_significant_digits_round_trip(self):
        values = [np.pi / 4, 1.0 / 3.0, np.log2(1.5), 0.0, 1e-300]
        for v in values:
            assert float(format_value(v)) == v
