"""End-to-end tests of the command line."""

import pandas as pd
import pytest

from credible_networks.cli.app import main
from credible_networks.cli.error_handler import exit_code_for
from credible_networks.config import settings
from credible_networks.domain.exceptions import (
    EpsilonDomainError,
    MissingLocalScoreError,
    RowLengthError,
    VariableLimitExceededError,
)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_reference_window(self, capsys, d1_file, tmp_path):
        out = tmp_path / "out"
        code, stdout, _ = run(capsys, "solve", "--in", d1_file, "--bf", 20, "--out", out)
        assert code == 0
        assert "n=2 N=8" in stdout
        assert "|G|=3 |M|=2" in stdout
        assert "truncated=0" in stdout
        lines = (out / "credible_set.tsv").read_text().splitlines()
        assert lines[0].startswith("#opt=")
        assert lines[0].endswith("truncated=0")
        assert [line.split("\t")[1] for line in lines[1:]] == ["A:B;B:", "A:;B:A", "A:;B:"]

    def test_zero_window(self, capsys, d1_file, tmp_path):
        code, stdout, _ = run(
            capsys, "solve", "--in", d1_file, "--epsilon", 0, "--out", tmp_path / "out"
        )
        assert code == 0
        assert "|G|=2 |M|=1" in stdout

    def test_rho_of_one(self, capsys, d1_file, tmp_path):
        code, stdout, _ = run(
            capsys, "solve", "--in", d1_file, "--rho", 1, "--out", tmp_path / "out"
        )
        assert code == 0
        assert "|G|=2" in stdout

    def test_equivalence_outputs(self, capsys, d1_file, tmp_path):
        out = tmp_path / "out"
        run(capsys, "solve", "--in", d1_file, "--bf", 20, "--out", out)
        mec = pd.read_csv(out / "mec.csv")
        assert list(mec.columns) == ["mec_id", "size", "best_score", "representative"]
        assert mec["size"].tolist() == [2, 1]
        arcs = pd.read_csv(out / "arcs.csv")
        assert arcs[["from", "to"]].values.tolist() == [["A", "B"], ["B", "A"]]
        assert arcs["weighted_probability"].iloc[0] == pytest.approx(0.334086, abs=1e-6)

    def test_limit(self, capsys, d1_file, tmp_path):
        code, stdout, _ = run(
            capsys, "solve", "--in", d1_file, "--bf", 20, "--limit", 1, "--out", tmp_path / "o"
        )
        assert code == 0
        assert "|G|=1" in stdout
        assert "truncated=1" in stdout

    def test_csv_input(self, capsys, tmp_path):
        path = tmp_path / "d1.csv"
        rows = ["A,B"] + [f"{a},{b}" for a, b in zip("xxxxyyyy", "uuuvuvvv")]
        path.write_text("\n".join(rows) + "\n")
        code, stdout, _ = run(capsys, "solve", "--in", path, "--bf", 20, "--out", tmp_path / "o")
        assert code == 0
        assert "|G|=3 |M|=2" in stdout

    def test_bdeu(self, capsys, d1_file, tmp_path):
        code, stdout, _ = run(
            capsys,
            "solve", "--in", d1_file, "--fn", "bdeu", "--alpha", 1, "--bf", 20,
            "--out", tmp_path / "o",
        )
        assert code == 0
        assert "n=2 N=8" in stdout


class TestScore:
    def test_score_file_then_solve(self, capsys, d1_file, tmp_path):
        scores = tmp_path / "d1.scores"
        code, _, stderr = run(capsys, "score", "--in", d1_file, "--bf", 20, "--out", scores)
        assert code == 0
        assert "scored=4" in stderr
        assert scores.read_text().splitlines()[0] == "2"

        direct, imported = tmp_path / "direct", tmp_path / "imported"
        run(capsys, "solve", "--in", d1_file, "--bf", 20, "--out", direct)
        code, stdout, _ = run(capsys, "solve", "--in", scores, "--bf", 20, "--out", imported)
        assert code == 0
        assert "N=-" in stdout
        assert (imported / "credible_set.tsv").read_text() == (
            direct / "credible_set.tsv"
        ).read_text()

    def test_needs_out(self, capsys, d1_file):
        code, _, stderr = run(capsys, "score", "--in", d1_file, "--bf", 20)
        assert code == 2
        assert "--out" in stderr

    def test_rejects_score_file_input(self, capsys, tmp_path):
        path = tmp_path / "x.scores"
        path.write_text("1\nX 1\n-1.0 0\n")
        code, _, _ = run(capsys, "score", "--in", path, "--bf", 20, "--out", tmp_path / "y")
        assert code == 2


class TestReport:
    def test_sweep(self, capsys, d1_file, tmp_path):
        out = tmp_path / "report"
        code, stdout, _ = run(
            capsys, "report", "--in", d1_file, "--sweep", 3, 20, "--out", out
        )
        assert code == 0
        assert "|G|=3" in stdout
        deviation = pd.read_csv(out / "deviation.csv")
        assert deviation["kind"].tolist() == ["network"] * 3 + ["reference"] * 2
        assert deviation["deviation"].iloc[2] == pytest.approx(0.0067755, abs=1e-7)
        assert deviation["rank"].isna().tolist() == [False] * 3 + [True] * 2
        sweep = pd.read_csv(out / "sweep.csv")
        assert sweep["networks"].tolist() == [3, 3]
        assert sweep["classes"].tolist() == [2, 2]
        assert sweep["complete"].tolist() == [1, 1]

    def test_needs_window(self, capsys, d1_file, tmp_path):
        code, _, stderr = run(capsys, "report", "--in", d1_file, "--out", tmp_path / "r")
        assert code == 2
        assert "--sweep" in stderr


class TestErrors:
    def test_missing_input(self, capsys, tmp_path):
        code, _, stderr = run(capsys, "solve", "--in", tmp_path / "absent.dat", "--bf", 20)
        assert code == 2
        assert "cannot open" in stderr

    def test_conflicting_options(self, capsys, d1_file):
        code, _, stderr = run(capsys, "solve", "--in", d1_file, "--bf", 20, "--epsilon", 1)
        assert code == 2
        assert "conflicting epsilon options" in stderr

    def test_missing_window(self, capsys, d1_file):
        code, _, _ = run(capsys, "solve", "--in", d1_file)
        assert code == 2

    def test_bayes_factor_domain(self, capsys, d1_file):
        code, _, stderr = run(capsys, "solve", "--in", d1_file, "--bf", 0.5)
        assert code == 2
        assert "Bayes factor" in stderr

    def test_bad_limit(self, capsys, d1_file):
        code, _, _ = run(capsys, "solve", "--in", d1_file, "--bf", 20, "--limit", 0)
        assert code == 2

    def test_malformed_dataset(self, capsys, tmp_path):
        path = tmp_path / "bad.dat"
        path.write_text("A B\n2 2\n0 5\n")
        code, _, stderr = run(capsys, "solve", "--in", path, "--bf", 20)
        assert code == 3
        assert "line 3" in stderr

    def test_variable_limit(self, capsys, d1_file, tmp_path, monkeypatch):
        monkeypatch.setattr(settings, "dp_variable_limit", 1)
        code, _, stderr = run(capsys, "solve", "--in", d1_file, "--bf", 20, "--out", tmp_path)
        assert code == 4
        assert "reduce the dataset" in stderr

    def test_no_command(self, capsys):
        assert main([]) == 2

    def test_version(self, capsys):
        assert main(["--version"]) == 0
        assert settings.app_version in capsys.readouterr().out

    @pytest.mark.parametrize(
        "exc, code",
        [
            (EpsilonDomainError("x"), 2),
            (RowLengthError("x", 3), 3),
            (MissingLocalScoreError(0, ()), 3),
            (VariableLimitExceededError(30, 24), 4),
            (RuntimeError("x"), 1),
        ],
    )
    def test_exit_codes(self, exc, code):
        assert exit_code_for(exc) == code
