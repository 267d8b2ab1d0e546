"""
Tests for the flipcount command line (main.py).
"""

import io
import json
from unittest.mock import patch

import pytest

from main import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main
from stem.models import CheckResult, SuiteSummary


def run(argv):
    out = io.StringIO()
    code = main(argv, stdout=out)
    return code, out.getvalue()


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.txt"
    path.write_text("# triangle with one interior point\n0 0\n4 0\n0 4\n1 1\n")
    return str(path)


class TestGen:
    """Test the gen subcommand."""

    def test_convex(self):
        """Test a generated point file."""
        code, out = run(["gen", "--kind", "convex", "--n", "5"])
        assert code == EXIT_OK
        assert out.splitlines() == ["0 0", "1 1", "2 4", "3 9", "4 16"]

    def test_output_file(self, tmp_path):
        """Test --output writes to a file instead of stdout."""
        target = tmp_path / "pts.txt"
        code, out = run(["gen", "--kind", "double-chain", "--n", "6", "--output", str(target)])
        assert code == EXIT_OK
        assert out == ""
        assert len(target.read_text().splitlines()) == 6

    def test_missing_kind(self):
        """Test gen without a generator is a usage error."""
        code, _ = run(["gen"])
        assert code == EXIT_USAGE

    def test_kind_without_n(self):
        """Test --kind needs --n."""
        code, _ = run(["gen", "--kind", "convex"])
        assert code == EXIT_USAGE

    def test_bad_size(self, capsys):
        """Test an impossible low-flip size is reported."""
        code, _ = run(["gen", "--kind", "low-flip", "--n", "7"])
        assert code == EXIT_USAGE
        assert "low_flip" in capsys.readouterr().err


class TestAnalyze:
    """Test the analyze subcommand."""

    def test_low_flip(self):
        """Test the low-flip set reports tight values."""
        code, out = run(["analyze", "--kind", "low-flip", "--n", "12"])
        assert code == EXIT_OK
        report = json.loads(out)
        assert (report["flip"], report["flip_s"], report["ps_greedy"], report["ps_exact"]) == (4, 4, 4, 4)
        assert report["flip_s_exact"] is True
        assert report["lower_bounds"] == {"flip": 4, "flip_s": 2, "ps": 4}
        assert report["diagnostics"]["face_slack"] == 0

    def test_point_file(self, triangle_file):
        """Test analysis of a point file."""
        code, out = run(["analyze", "--input", triangle_file])
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["flip"] == 0
        assert report["separability"]["v3"] == 1
        assert report["triangulation"]["n_points"] == 4
        assert len(report["triangulation"]["edges"]) == 6

    def test_given_triangulation(self, tmp_path):
        """Test --triangulation analyzes the named triangulation instead of the initial one."""
        path = tmp_path / "fan.json"
        hull = [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [0, 5]]
        path.write_text(json.dumps({"n_points": 6, "edges": hull + [[1, 3], [1, 4], [1, 5]]}))
        code, out = run(["analyze", "--kind", "convex", "--n", "6", "--triangulation", str(path)])
        assert code == EXIT_OK
        report = json.loads(out)
        assert [1, 4] in report["triangulation"]["edges"]
        assert [0, 3] not in report["triangulation"]["edges"]
        assert report["flip"] == 3

    def test_report_as_triangulation(self, tmp_path):
        """Test an earlier analyze report can be fed back as the triangulation."""
        saved = tmp_path / "report.json"
        assert run(["analyze", "--kind", "low-flip", "--n", "10", "--output", str(saved)])[0] == EXIT_OK
        code, out = run(["analyze", "--kind", "low-flip", "--n", "10", "--triangulation", str(saved)])
        assert code == EXIT_OK
        assert json.loads(out)["flip"] == 3

    def test_bad_triangulation(self, tmp_path, capsys):
        """Test an edge list that is not a triangulation is a usage error."""
        path = tmp_path / "partial.json"
        path.write_text(json.dumps({"n_points": 6, "edges": [[0, 1], [1, 2]]}))
        code, _ = run(["analyze", "--kind", "convex", "--n", "6", "--triangulation", str(path)])
        assert code == EXIT_USAGE
        assert "not a triangulation" in capsys.readouterr().err

    def test_collinear_file(self, tmp_path, capsys):
        """Test collinear input is rejected with exit code 2."""
        path = tmp_path / "line.txt"
        path.write_text("0 0\n1 1\n2 2\n")
        code, _ = run(["analyze", "--input", str(path)])
        assert code == EXIT_USAGE
        assert "collinear" in capsys.readouterr().err

    def test_both_sources(self, triangle_file):
        """Test a file and a generator together are rejected."""
        code, _ = run(["analyze", "--input", triangle_file, "--kind", "convex", "--n", "5"])
        assert code == EXIT_USAGE

    def test_greedy_fallback_above_cap(self):
        """Test flip_s falls back to greedy above the MIS cap."""
        code, out = run(["analyze", "--kind", "convex", "--n", "9", "--caps", "mis=8,ps=8"])
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["flip_s_exact"] is False
        assert report["ps_exact"] is None


class TestEnumerate:
    """Test the enumerate subcommand."""

    def test_full_report(self):
        """Test every count for a convex pentagon."""
        code, out = run(["enumerate", "--kind", "convex", "--n", "5"])
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["tri"] == 5
        assert report["pg"] == 352
        assert report["st"] == 55
        assert report["quadrangulations"] == 0
        assert report["forests"]["by_k"]["1"] == 55

    def test_predicate(self):
        """Test a predicate count."""
        code, out = run(["enumerate", "--kind", "convex", "--n", "4", "--predicate", "exactly:3"])
        assert code == EXIT_OK
        assert json.loads(out)["predicate_count"] == 16

    def test_csv(self):
        """Test the CSV histogram."""
        code, out = run(["enumerate", "--kind", "convex", "--n", "4", "--format", "csv"])
        assert code == EXIT_OK
        assert out == "m,count\n0,1\n1,6\n2,14\n3,16\n4,9\n5,2\n"

    def test_csv_without_histogram(self):
        """Test CSV is refused for predicates without a histogram."""
        code, _ = run(["enumerate", "--kind", "convex", "--n", "4", "--predicate", "forest", "--format", "csv"])
        assert code == EXIT_USAGE

    def test_verify(self):
        """Test --verify runs the support identity."""
        code, out = run(["enumerate", "--kind", "convex", "--n", "5", "--verify"])
        assert code == EXIT_OK
        assert json.loads(out)["verified"] is True

    def test_too_large(self, capsys):
        """Test the cap error names the override."""
        code, _ = run(["enumerate", "--kind", "convex", "--n", "7", "--caps", "pg=6,tri=6"])
        assert code == EXIT_USAGE
        assert "--caps pg=7" in capsys.readouterr().err

    def test_tri_only_above_pg_cap(self, capsys):
        """Test N above the pg cap but within the tri cap reports tri alone."""
        code, out = run(["enumerate", "--kind", "convex", "--n", "7", "--caps", "pg=6", "--log-level", "INFO"])
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["tri"] == 42
        assert report["pg"] is None
        assert report["forests"] is None
        assert "--caps pg=7" in capsys.readouterr().err

    def test_triangulation_predicate_above_pg_cap(self):
        """Test the triangulation predicate is bounded by the tri cap."""
        code, out = run(["enumerate", "--kind", "convex", "--n", "7", "--caps", "pg=6",
                         "--predicate", "triangulation"])
        assert code == EXIT_OK
        assert json.loads(out)["predicate_count"] == 42

    @pytest.mark.slow
    def test_default_caps_decagon(self):
        """Test a convex decagon counts triangulations under the default caps."""
        code, out = run(["enumerate", "--kind", "convex", "--n", "10"])
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["tri"] == 1430
        assert report["pg"] is None

    def test_bad_predicate(self):
        """Test an unknown predicate is a usage error."""
        code, _ = run(["enumerate", "--kind", "convex", "--n", "4", "--predicate", "cycles"])
        assert code == EXIT_USAGE

    def test_bad_caps(self):
        """Test a malformed cap override is a usage error."""
        code, _ = run(["enumerate", "--kind", "convex", "--n", "4", "--caps", "pg=lots"])
        assert code == EXIT_USAGE


class TestBounds:
    """Test the bounds subcommand."""

    def test_all(self):
        """Test the default report lists every bound."""
        code, out = run(["bounds"])
        assert code == EXIT_OK
        names = {r["name"] for r in json.loads(out)}
        assert {"plane_graphs", "spanning_trees", "forests", "quadrangulations"} <= names

    def test_curve(self):
        """Test the CSV curve."""
        code, out = run(["bounds", "--curve", "1.0", "2.0", "0.5"])
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "c,t,B"
        assert len(lines) == 4

    def test_curve_domain(self):
        """Test an out-of-domain curve is a usage error."""
        code, _ = run(["bounds", "--curve", "2.0", "1.0", "0.1"])
        assert code == EXIT_USAGE

    def test_single_density(self):
        """Test --c reports exactly, at most and at least."""
        code, out = run(["bounds", "--c", "1.0"])
        assert code == EXIT_OK
        assert len(json.loads(out)) == 3

    def test_unserializable_report(self):
        """Test an empty serialization exits 1 and writes nothing."""
        with patch("main.to_json", return_value=""), patch("main.log_error") as log_error:
            code, out = run(["bounds"])
        assert code == EXIT_VIOLATION
        assert out == ""
        assert "could not be serialized" in log_error.call_args.args[0]

    def test_errors_are_logged(self):
        """Test usage errors go through the logger."""
        with patch("main.log_error") as log_error:
            code, _ = run(["bounds", "--c", "3.5"])
        assert code == EXIT_USAGE
        message, name = log_error.call_args.args
        assert message.startswith("error: ")
        assert name == "main"

    def test_quadrangulation(self):
        """Test the quadrangulation base alone."""
        code, out = run(["bounds", "--quadrangulation"])
        reports = json.loads(out)
        assert code == EXIT_OK
        assert [r["name"] for r in reports] == ["quadrangulations"]
        assert reports[0]["absolute_base"] == pytest.approx(184.22, abs=0.05)


class TestVerify:
    """Test the verify subcommand."""

    def test_catalan_suite(self):
        """Test a passing suite."""
        code, out = run(["verify", "--suite", "catalan", "--max-n", "7"])
        assert code == EXIT_OK
        summary = json.loads(out)
        assert summary["passed"] is True
        assert summary["suites"] == ["catalan"]
        assert summary["failures"] == []

    def test_failure_exit_code(self):
        """Test a failed check exits with 1."""
        failing = {"catalan": lambda ctx: [CheckResult(suite="catalan", name="forced", passed=False, detail="no")]}
        with patch.dict("verification.suites.SUITES", failing):
            code, out = run(["verify", "--suite", "catalan"])
        assert code == EXIT_VIOLATION
        assert json.loads(out)["failures"][0]["name"] == "forced"

    def test_lemmas_alias(self):
        """Test --suite lemmas runs the lower-bound checks."""
        code, out = run(["verify", "--suite", "lemmas", "--seed", "1", "--max-n", "7"])
        assert code == EXIT_OK
        assert json.loads(out)["suites"] == ["lower-bounds"]

    def test_skipped_listed(self):
        """Test checks kept out by a cap are listed, not dropped."""
        code, out = run(["verify", "--suite", "catalan", "--max-n", "8", "--caps", "tri=6"])
        summary = json.loads(out)
        assert code == EXIT_OK
        assert summary["skipped"] == ["catalan: tri(convex(7)) = C_5", "catalan: tri(convex(8)) = C_6"]

    def test_max_n_default(self):
        """Test the default size limit reaches twelve points."""
        with patch("main.run_suites", return_value=SuiteSummary(suites=["tightness"])) as run_suites:
            code, _ = run(["verify", "--suite", "tightness"])
        assert code == EXIT_OK
        assert run_suites.call_args.args[1].max_n == 12

    def test_version(self, capsys):
        """Test --version prints the package version."""
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "flipcount 0.1.0" in capsys.readouterr().out
