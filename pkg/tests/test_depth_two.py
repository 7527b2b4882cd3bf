"""Depth-two quasibases, balancedness and the invariant subring."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from catalog import load_catalog
from check_types import NotDepthTwoError
from depth_two import (
    analyze_depth_two,
    find_left_quasibase,
    find_right_quasibase,
    invariant_subring,
    require_quasibases,
    verify_quasibase,
)

D2_CASES = [
    ("s3-a3", True),
    ("s3-c2", False),
    ("m2-diagonal", True),
    ("m2-scalars", True),
    ("m2-center", True),
    ("c2", True),
]


@pytest.mark.parametrize("name, expected", D2_CASES)
def test_depth_two_verdicts(name, expected) -> None:
    ext = load_catalog(name).require_extension("test")
    report = analyze_depth_two(ext)
    assert report.left_d2 is expected
    assert report.right_d2 is expected
    assert report.witnesses_verified


def test_quasibases_resubstitute(s3_a3) -> None:
    ext = s3_a3.require_extension("test")
    left = find_left_quasibase(ext)
    right = find_right_quasibase(ext)
    assert left is not None and right is not None
    assert verify_quasibase(ext, left)
    assert verify_quasibase(ext, right)
    assert len(left.t_elements()) == len(left.s_elements()) == left.size


def test_missing_quasibase_raises(s3_c2) -> None:
    with pytest.raises(NotDepthTwoError):
        require_quasibases(s3_c2.require_extension("test"))


def test_balanced_extension_has_b_as_invariants(s3_a3) -> None:
    ext = s3_a3.require_extension("test")
    report = analyze_depth_two(ext)
    assert report.balanced
    assert report.invariants_equal_B
    assert invariant_subring(ext) == ext.sub
    assert report.dims["A^S"] == 3


def test_report_serializes(m2_diagonal) -> None:
    payload = analyze_depth_two(m2_diagonal.require_extension("test")).to_dict()
    assert payload["left_d2"] and payload["right_d2"]
    assert payload["dims"]["T"] == 4
