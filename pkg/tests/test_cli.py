import subprocess
import sys

import numpy as np
import pytest

from symhess import gen_family1, read_matrix, write_matrix
from symhess.cli import main


def run_cli(*args):
    return main([str(a) for a in args])


def parse_kv(capsys):
    out = capsys.readouterr().out
    pairs = {}
    for line in out.splitlines():
        if "=" in line:
            key, value = line.split("=", 1)
            pairs[key] = value
    return pairs


class TestGen:
    def test_writes_family_matrix(self, tmp_path):
        out = tmp_path / "a.txt"
        assert run_cli("gen", "--family", 1, "--n", 2, "--out", out) == 0
        assert out.read_text().splitlines()[0] == "4 4"
        assert np.array_equal(read_matrix(out), gen_family1(2))

    def test_unknown_family_exits_2(self, tmp_path):
        assert run_cli("gen", "--family", 3, "--n", 2,
                       "--out", tmp_path / "a.txt") == 2

    def test_small_n_exits_2(self, tmp_path):
        assert run_cli("gen", "--family", 1, "--n", 1,
                       "--out", tmp_path / "a.txt") == 2

    def test_unwritable_path_exits_3(self, tmp_path):
        assert run_cli("gen", "--family", 1, "--n", 2,
                       "--out", tmp_path / "no" / "dir" / "a.txt") == 3


class TestReduce:
    def test_family1_jhmsh_pipeline(self, tmp_path, capsys):
        a_path = tmp_path / "a.txt"
        run_cli("gen", "--family", 1, "--n", 5, "--out", a_path)
        code = run_cli("reduce", a_path, "--algo", "jhmsh", "--fallback", "on",
                       "--out-h", tmp_path / "h.txt", "--out-s", tmp_path / "s.txt")
        kv = parse_kv(capsys)
        assert code == 0
        assert float(kv["red_err"]) <= 1e-7
        assert float(kv["orth_loss"]) <= 1e-7
        assert int(kv["fallbacks"]) == 1
        assert (tmp_path / "h.txt").exists()
        assert (tmp_path / "s.txt").exists()

    def test_breakdown_exits_4(self, tmp_path, capsys):
        a_path = tmp_path / "a.txt"
        run_cli("gen", "--family", 1, "--n", 5, "--out", a_path)
        code = run_cli("reduce", a_path, "--algo", "jhsh", "--fallback", "off")
        kv = parse_kv(capsys)
        assert code == 4
        assert kv["step"] == "1"
        assert kv["substep"] == "odd"
        assert kv["kind"] == "ZeroNu"

    def test_odd_sized_input_exits_5(self, tmp_path):
        path = tmp_path / "m.txt"
        write_matrix(path, np.eye(3))
        assert run_cli("reduce", path, "--algo", "jhmsh") == 5

    def test_missing_input_exits_3(self, tmp_path):
        assert run_cli("reduce", tmp_path / "absent.txt", "--algo", "jhmsh") == 3

    def test_unknown_algo_exits_2(self, tmp_path):
        path = tmp_path / "m.txt"
        write_matrix(path, np.eye(4))
        assert run_cli("reduce", path, "--algo", "qr") == 2

    def test_seeded_strategy(self, tmp_path, capsys):
        path = tmp_path / "m.txt"
        write_matrix(path, np.random.default_rng(1).standard_normal((6, 6)))
        code = run_cli("reduce", path, "--algo", "jhsh", "--strategy", "seeded:1")
        assert code == 0
        assert float(parse_kv(capsys)["red_err"]) < 1e-6

    def test_fixed_strategy_file(self, tmp_path, capsys):
        path = tmp_path / "m.txt"
        write_matrix(path, np.random.default_rng(1).standard_normal((6, 6)))
        params = tmp_path / "params.txt"
        # alternating rho, mu per step
        params.write_text("1.0\n0.5\n-1.5\n2.0\n")
        code = run_cli("reduce", path, "--algo", "jhsh",
                       "--strategy", f"fixed:{params}")
        assert code == 0

    def test_bad_strategy_exits_2(self, tmp_path):
        path = tmp_path / "m.txt"
        write_matrix(path, np.eye(4))
        assert run_cli("reduce", path, "--algo", "jhmsh", "--strategy", "magic") == 2

    def test_missing_strategy_file_exits_3(self, tmp_path):
        path = tmp_path / "m.txt"
        write_matrix(path, np.eye(4))
        assert run_cli("reduce", path, "--algo", "jhsh",
                       "--strategy", f"fixed:{tmp_path / 'absent'}") == 3


class TestCheck:
    def test_valid_factorization_exits_0(self, tmp_path, capsys):
        a_path = tmp_path / "a.txt"
        run_cli("gen", "--family", 1, "--n", 5, "--out", a_path)
        run_cli("reduce", a_path, "--algo", "jhmsh",
                "--out-h", tmp_path / "h.txt", "--out-s", tmp_path / "s.txt")
        capsys.readouterr()
        code = run_cli("check", a_path, tmp_path / "s.txt", tmp_path / "h.txt")
        kv = parse_kv(capsys)
        assert code == 0
        assert kv["is_upper_j_hessenberg"] == "true"
        assert float(kv["red_err"]) <= 1e-7

    def test_structure_violation_exits_6(self, tmp_path):
        rng = np.random.default_rng(3)
        a = rng.standard_normal((6, 6))
        write_matrix(tmp_path / "a.txt", a)
        write_matrix(tmp_path / "s.txt", np.eye(6))
        write_matrix(tmp_path / "h.txt", a)  # H = A is not J-Hessenberg
        code = run_cli("check", tmp_path / "a.txt", tmp_path / "s.txt",
                       tmp_path / "h.txt")
        assert code == 6

    def test_dimension_mismatch_exits_5(self, tmp_path):
        write_matrix(tmp_path / "a.txt", np.eye(4))
        write_matrix(tmp_path / "s.txt", np.eye(6))
        write_matrix(tmp_path / "h.txt", np.eye(4))
        assert run_cli("check", tmp_path / "a.txt", tmp_path / "s.txt",
                       tmp_path / "h.txt") == 5


class TestExperiment:
    def test_row_count_and_format(self, tmp_path, capsys):
        code = run_cli("experiment", "--family", 1, "--n-min", 2, "--n-max", 4,
                       "--algos", "jhmsh,jhmsh2")
        out = capsys.readouterr().out
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,variant,orth_loss,red_err,fallbacks,status"
        assert len(lines) == 1 + 3 * 2

    def test_output_file_and_markdown(self, tmp_path):
        out = tmp_path / "table.md"
        code = run_cli("experiment", "--family", 2, "--n-min", 2, "--n-max", 3,
                       "--algos", "jhmsh", "--format", "markdown", "--out", out)
        assert code == 0
        assert out.read_text().startswith("| n | variant |")

    def test_invalid_algo_exits_2(self):
        assert run_cli("experiment", "--family", 1, "--n-min", 2, "--n-max", 3,
                       "--algos", "nope") == 2

    def test_invalid_range_exits_2(self):
        assert run_cli("experiment", "--family", 1, "--n-min", 5, "--n-max", 3,
                       "--algos", "jhmsh") == 2


class TestEntryPoints:
    def test_module_invocation(self, tmp_path):
        out = tmp_path / "a.txt"
        proc = subprocess.run(
            [sys.executable, "-m", "symhess", "gen", "--family", "2",
             "--n", "3", "--out", str(out)],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert out.exists()

    def test_help_exits_zero(self):
        assert run_cli("--help") == 0

    def test_no_command_exits_2(self):
        assert main([]) == 2
