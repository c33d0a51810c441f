"""Command-line interface: outputs, exit codes, determinism."""

import json

import pytest

from bmwtower import cli
from bmwtower.scalars import SYMBOLIC, parse_scalar


def run_cli(argv, capsys):
    status = cli.main(argv)
    return status, capsys.readouterr().out


class TestDims:
    def test_identity_summary(self, capsys):
        status, out = run_cli(["dims", "--n", "5"], capsys)
        data = json.loads(out)
        assert status == 0
        assert data["levels"][5]["sum_of_squares"] == 945
        assert all(row["identity_holds"] for row in data["levels"])


class TestGraph:
    def test_dot(self, capsys):
        status, out = run_cli(["graph", "--n", "3"], capsys)
        assert status == 0
        assert out.startswith("digraph")


class TestSpectra:
    def test_bijection_verdict(self, capsys):
        status, out = run_cli(["spectra", "--n", "4"], capsys)
        data = json.loads(out)
        assert status == 0
        assert data["bijection"]["sets_equal"]


class TestRep:
    def test_empty_level_2(self, capsys):
        status, out = run_cli(["rep", "--lambda", "", "--n", "2"], capsys)
        data = json.loads(out)
        assert status == 0
        assert data["sigma"][0] == [["nu"]]
        got = parse_scalar(data["kappa"][0][0][0])
        u = SYMBOLIC.q - SYMBOLIC.q_pow(-1)
        mu = SYMBOLIC.one + (SYMBOLIC.nu_pow(-1) - SYMBOLIC.nu) / u
        assert got == mu

    def test_missing_lambda(self, capsys):
        with pytest.raises(SystemExit):
            cli.main(["rep", "--n", "2"])


class TestVerify:
    def test_symbolic_level_3(self, capsys):
        status, out = run_cli(["verify", "--n", "3", "--mode", "symbolic"], capsys)
        data = json.loads(out)
        assert status == 0
        assert all(entry["ok"] for entry in data["irreps"])

    def test_rational_level_4(self, capsys):
        status, out = run_cli(["verify", "--n", "4", "--mode", "rational"], capsys)
        assert status == 0

    def test_nongeneric_point_rejected(self, capsys):
        from bmwtower.scalars import NonGenericPoint

        with pytest.raises(NonGenericPoint):
            cli.main(["verify", "--n", "2", "--mode", "rational", "--q", "1"])


class TestCentral:
    def test_level_3(self, capsys):
        status, out = run_cli(["central", "--n", "3"], capsys)
        data = json.loads(out)
        assert status == 0
        by_lam = {tuple(e["lambda"]): e for e in data}
        assert parse_scalar(by_lam[(1,)]["Z"]) == SYMBOLIC.nu_pow(2)


class TestHamiltonian:
    def test_csv(self, capsys):
        status, out = run_cli(
            ["hamiltonian", "--lambda", "1", "--n", "3", "--a", "q"], capsys
        )
        assert status == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("lambda,")
        assert len(lines) == 4


class TestPlumbing:
    def test_deterministic_output(self, capsys):
        _, first = run_cli(["central", "--n", "3"], capsys)
        _, second = run_cli(["central", "--n", "3"], capsys)
        assert first == second

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "dims.json"
        status = cli.main(["dims", "--n", "3", "--out", str(target)])
        assert status == 0
        assert json.loads(target.read_text())["n"] == 3
        assert capsys.readouterr().out == ""

    def test_flip_content(self, capsys):
        status, out = run_cli(
            ["verify", "--n", "3", "--mode", "rational", "--flip-content"], capsys
        )
        assert status == 0
