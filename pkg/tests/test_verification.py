"""
Tests for the verification suites.
"""

import pytest

from stem.exceptions import IdentityViolation
from stem.models import Caps
from verification.suites import SUITES, SuiteContext, _check, corpus, run_suites, triangle_with_interior


@pytest.fixture
def small_ctx():
    return SuiteContext(seed=1, max_n=7, random_sets=5)


class TestCorpus:
    """Test the deterministic corpus."""

    def test_respects_max_n(self, small_ctx):
        """Test no set exceeds the size limit."""
        assert all(ps.N <= 7 for _, ps in corpus(small_ctx))

    def test_deterministic(self, small_ctx):
        """Test the same seed yields the same corpus."""
        first = [(name, ps.points) for name, ps in corpus(small_ctx)]
        second = [(name, ps.points) for name, ps in corpus(small_ctx)]
        assert first == second

    def test_includes_generated_sets(self):
        """Test generated configurations come first."""
        names = [name for name, _ in corpus(SuiteContext(max_n=12, random_sets=0))]
        assert names[:3] == ["low_flip(8)", "low_flip(10)", "low_flip(12)"]
        assert "double_chain(4)" in names

    def test_triangle_with_interior(self):
        """Test the smallest set with an interior point."""
        assert triangle_with_interior().n == 1


class TestCheck:
    """Test single-check wrapping."""

    def test_pass(self):
        """Test a passing check."""
        assert _check("s", "ok", lambda: None).passed

    def test_message_fails(self):
        """Test a returned message fails the check."""
        result = _check("s", "bad", lambda: "mismatch")
        assert not result.passed
        assert result.detail == "mismatch"

    def test_library_error_fails(self):
        """Test library errors become failed checks."""
        def broken():
            raise IdentityViolation("support sum", "1 != 2")
        result = _check("s", "raises", broken)
        assert not result.passed
        assert result.detail.startswith("IdentityViolation")


class TestSuites:
    """Test suites run clean on small inputs."""

    @pytest.mark.parametrize("name", [
        "catalan",
        "lower-bounds",
        "support",
        "hull-ratio",
        "decomposition",
        "quadrangulation",
    ])
    def test_suite_passes(self, small_ctx, name):
        """Test each suite passes with a small corpus."""
        summary = run_suites([name], small_ctx)
        assert summary.checks
        assert summary.passed, summary.failures

    def test_tightness(self):
        """Test the tightness suite on low-flip sets up to 10 points."""
        summary = run_suites(["tightness"], SuiteContext(max_n=10, random_sets=0))
        assert summary.passed, summary.failures
        assert any(c.name == "low_flip(10)" for c in summary.checks)

    def test_bounds(self, small_ctx):
        """Test the numeric constants suite."""
        summary = run_suites(["bounds"], small_ctx)
        assert summary.passed, summary.failures

    @pytest.mark.slow
    def test_identity_and_matrix_tree(self):
        """Test the exact identity suites."""
        ctx = SuiteContext(max_n=6, random_sets=3)
        summary = run_suites(["identity", "matrix-tree"], ctx)
        assert summary.passed, summary.failures

    def test_caps_limit_corpus(self):
        """Test lowered caps turn out-of-reach checks into skipped entries."""
        ctx = SuiteContext(max_n=10, random_sets=2, caps=Caps(tri=5))
        summary = run_suites(["catalan"], ctx)
        ran = [c.name for c in summary.checks if not c.skipped]
        assert ran[1:] == ["tri(convex(4)) = C_2", "tri(convex(5)) = C_3"]
        assert [c.name for c in summary.skipped] == [f"tri(convex({N})) = C_{N - 2}" for N in range(6, 11)]
        assert summary.passed

    def test_default_reaches_twelve_points(self):
        """Test the default context covers the 12-point low-flip set."""
        assert SuiteContext().max_n == 12
        names = [name for name, _ in corpus(SuiteContext(random_sets=0))]
        assert "low_flip(12)" in names

    def test_tightness_records_skips(self):
        """Test sets above the ps cap are reported as skipped."""
        ctx = SuiteContext(max_n=12, random_sets=0, caps=Caps(ps=7))
        summary = run_suites(["tightness"], ctx)
        skipped = [c.name for c in summary.skipped]
        assert skipped == ["low_flip(8)", "low_flip(10)", "low_flip(12)", "convex(8)", "convex(9)"]
        assert all("--caps ps=" in c.detail for c in summary.skipped)
        assert summary.passed, summary.failures

    def test_lower_bounds_records_skips(self):
        """Test corpus entries above the tri cap are reported as skipped."""
        ctx = SuiteContext(max_n=8, random_sets=0, caps=Caps(tri=7))
        summary = run_suites(["lower-bounds"], ctx)
        skipped = {c.name for c in summary.skipped}
        assert {"low_flip(8)", "convex(8)", "double_chain(4)"} <= skipped
        assert summary.passed, summary.failures

    def test_alias_runs_once(self):
        """Test "lemmas" resolves to lower-bounds and duplicates collapse."""
        summary = run_suites(["lemmas", "lower-bounds"], SuiteContext(max_n=6, random_sets=2))
        assert summary.suites == ["lower-bounds"]
        assert summary.passed, summary.failures

    def test_all_expands(self, small_ctx):
        """Test "all" names every suite."""
        summary = run_suites(["all"], SuiteContext(max_n=4, random_sets=0))
        assert summary.suites == list(SUITES)

    def test_unknown_suite(self, small_ctx):
        """Test unknown suite names are rejected."""
        with pytest.raises(ValueError):
            run_suites(["nope"], small_ctx)
