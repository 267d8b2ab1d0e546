"""
Tests for stem.models
"""

import pytest
from pydantic import ValidationError

from stem.models import (
    BoundReport,
    Caps,
    CatalanTable,
    CheckResult,
    GeneratorSpec,
    RunConfig,
    SuiteSummary,
)


class TestCaps:
    """Test the caps model."""

    def test_defaults(self):
        """Test default caps."""
        caps = Caps()
        assert (caps.pg, caps.tri, caps.ps, caps.mis) == (9, 11, 12, 16)

    def test_positive(self):
        """Test caps must be positive."""
        with pytest.raises(ValidationError):
            Caps(pg=0)


class TestGeneratorSpec:
    """Test generator requests."""

    def test_kind_dash_normalized(self):
        """Test CLI spelling low-flip is accepted."""
        assert GeneratorSpec(kind="low-flip", n=10).kind == "low_flip"
        assert GeneratorSpec(kind="double-chain", n=6).kind == "double_chain"

    @pytest.mark.parametrize("kind,n", [
        ("convex", 2),
        ("low_flip", 6),
        ("low_flip", 9),
        ("double_chain", 5),
        ("random", 1),
    ])
    def test_bad_sizes(self, kind, n):
        """Test sizes each generator cannot build."""
        with pytest.raises(ValidationError):
            GeneratorSpec(kind=kind, n=n)

    def test_unknown_kind(self):
        """Test unknown kinds are rejected."""
        with pytest.raises(ValidationError):
            GeneratorSpec(kind="grid", n=9)

    def test_negative_seed(self):
        """Test seeds are non-negative."""
        with pytest.raises(ValidationError):
            GeneratorSpec(kind="random", n=5, seed=-1)


class TestRunConfig:
    """Test resolved run settings."""

    def test_one_input_source(self):
        """Test a file and a generator cannot both be given."""
        with pytest.raises(ValidationError):
            RunConfig(command="analyze", input_path="pts.txt", generator=GeneratorSpec(kind="convex", n=5))

    def test_defaults(self):
        """Test default run settings."""
        run = RunConfig(command="enumerate")
        assert run.output_format == "json"
        assert run.parallel is False
        assert run.caps == Caps()


class TestCatalanTable:
    """Test the validated Catalan table."""

    def test_valid(self):
        """Test a correct prefix validates."""
        assert CatalanTable(values=[1, 1, 2, 5, 14]).values[-1] == 14

    def test_wrong_value(self):
        """Test a broken recurrence is rejected."""
        with pytest.raises(ValidationError):
            CatalanTable(values=[1, 1, 2, 6])

    def test_wrong_start(self):
        """Test C_0 = C_1 = 1 is required."""
        with pytest.raises(ValidationError):
            CatalanTable(values=[1, 2])


class TestBoundReport:
    """Test bound reports."""

    def test_base_positive(self):
        """Test a non-positive base is rejected."""
        with pytest.raises(ValidationError):
            BoundReport(name="x", base=0.0)


class TestSuiteSummary:
    """Test suite aggregation."""

    def test_passed_and_failures(self):
        """Test failures are collected."""
        summary = SuiteSummary(suites=["catalan"], checks=[
            CheckResult(suite="catalan", name="a", passed=True),
            CheckResult(suite="catalan", name="b", passed=False, detail="boom"),
        ])
        assert summary.passed is False
        assert [c.name for c in summary.failures] == ["b"]

    def test_empty_passes(self):
        """Test an empty run passes."""
        assert SuiteSummary(suites=[]).passed is True
