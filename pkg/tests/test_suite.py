"""Check suites, the built-in catalog and the dimension guard."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from catalog import catalog_document, catalog_names, load_catalog
from check_types import InstanceError, NotDepthTwoError, StructureError, SuiteOptions, Verdict
from suite import Command, guard_dimensions, run_command


@pytest.mark.parametrize("name", catalog_names())
def test_catalog_entries_load(name) -> None:
    instance = load_catalog(name)
    assert instance.name == name
    assert instance.source == f"catalog:{name}"
    assert catalog_document(name)["description"]


def test_unknown_catalog_name() -> None:
    with pytest.raises(InstanceError) as info:
        load_catalog("s4-v4")
    assert info.value.location == "--catalog"


def test_d2_report_for_normal_subgroup(s3_a3) -> None:
    report = run_command(Command.D2, s3_a3)
    assert report.passed
    invariants = report.find("balanced ⇒ A^S = B")
    assert invariants is not None
    assert invariants.dims["A^S"] == 3
    assert invariants.dims["T"] == 8
    assert report.find("left depth two").witness["found"] is True


def test_d2_report_for_transposition_subgroup(s3_c2) -> None:
    report = run_command(Command.D2, s3_c2)
    assert report.find("left D2 ⇔ right D2").passed
    assert report.find("left depth two").witness["found"] is False
    assert report.find("right depth two").witness["found"] is False


def test_bialgebroid_requires_depth_two(s3_c2) -> None:
    with pytest.raises(NotDepthTwoError):
        run_command(Command.BIALGEBROID, s3_c2)


@pytest.mark.parametrize("command", [Command.BIALGEBROID, Command.HOPF_ALGEBROID])
def test_depth_two_sections_pass_on_diagonal(m2_diagonal, command) -> None:
    report = run_command(command, m2_diagonal)
    assert report.failures == []


def test_missing_separability_element_is_informational() -> None:
    report = run_command(Command.HOPF_ALGEBROID, load_catalog("c3-f3"))
    assert len(report.checks) == 1
    assert report.checks[0].verdict is Verdict.INFO
    assert report.checks[0].witness["found"] is False


def test_normality_section(s3_a3, s3_c2) -> None:
    assert run_command(Command.NORMALITY, s3_a3).passed
    failures = [check.name for check in run_command(Command.NORMALITY, s3_c2).failures]
    assert "K is normal in A" in failures


def test_all_skips_sections_without_preconditions(s3_c2) -> None:
    report = run_command(Command.ALL, s3_c2)
    skipped = report.find("bialgebroid: skipped")
    assert skipped is not None and skipped.verdict is Verdict.INFO
    assert report.find("hopf-algebroid: skipped") is not None
    assert not report.passed
    assert "normality: K is normal in A" in [check.name for check in report.failures]


def test_all_on_groupoid_passes() -> None:
    report = run_command(Command.ALL, load_catalog("groupoid-2"))
    assert report.passed
    sections = {check.name.split(":")[0] for check in report.checks}
    assert {"check-algebra", "d2", "bialgebroid", "weak-hopf", "galois", "reconstruct"} <= sections


def test_probes_can_be_disabled() -> None:
    instance = load_catalog("groupoid-2")
    with_probes = run_command(Command.GALOIS, instance)
    without = run_command(Command.GALOIS, instance, SuiteOptions(run_probes=False))
    assert len(without.checks) == len(with_probes.checks) - 2


def test_dimension_guard(s3_a3) -> None:
    guard_dimensions(s3_a3, SuiteOptions())
    with pytest.raises(StructureError, match="max_ambient_dim=100"):
        run_command(Command.D2, s3_a3, SuiteOptions(max_ambient_dim=100))
