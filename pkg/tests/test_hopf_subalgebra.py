"""Normal Hopf subalgebras against bijectivity of the Hopf-Galois map."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from algebra import cyclic_group, symmetric_group
from check_types import NormalityError, Side, StructureError, all_passed
from coalgebra import group_hopf_algebra, trivial_hopf_algebra
from hopf_subalgebra import (
    comparison_map,
    decide_normal_via_galois,
    free_basis_over,
    hopf_galois_map,
    hopf_subalgebra,
    is_normal,
    phi_map,
    quotient_coaction,
    quotient_coalgebra,
)
from linalg import Field, Matrix


def test_a3_is_normal(s3_a3) -> None:
    verdict = is_normal(s3_a3.require_subalgebra("test"))
    assert verdict.normal
    assert verdict.adjoint_stable
    assert verdict.dims["HK+"] == verdict.dims["K+H"] == 4


def test_transposition_subgroup_is_not_normal(s3_c2) -> None:
    verdict = is_normal(s3_c2.require_subalgebra("test"))
    assert not verdict.normal
    assert not verdict.adjoint_stable
    assert verdict.dims["HK+"] == verdict.dims["K+H"] == 3


QUOTIENT_CASES = [
    ("s3_a3", {"H/HK+": 2, "H/K+H": 2, "H/HK+H": 2}),
    ("s3_c2", {"H/HK+": 3, "H/K+H": 3, "H/HK+H": 1}),
]


@pytest.mark.parametrize("fixture, expected", QUOTIENT_CASES)
def test_quotient_dimensions(request, fixture, expected) -> None:
    sub = request.getfixturevalue(fixture).require_subalgebra("test")
    decision = decide_normal_via_galois(sub)
    assert decision.quotient_dims == expected


def test_normal_quotient_is_a_hopf_algebra(s3_a3) -> None:
    sub = s3_a3.require_subalgebra("test")
    left = quotient_coalgebra(sub, Side.LEFT)
    assert left.hopf is not None
    assert left.dim == 2
    assert all_passed(left.checks)


def test_canonical_map_for_normal_subalgebra(s3_a3) -> None:
    certificate = hopf_galois_map(s3_a3.require_subalgebra("test"))
    assert certificate.descends
    assert certificate.bijective
    assert certificate.inverse_verified
    assert certificate.dims == {"H⊗_K H": 12, "H⊗H/HK+": 12}


def test_canonical_map_for_non_normal_subalgebra(s3_c2) -> None:
    sub = s3_c2.require_subalgebra("test")
    certificate = hopf_galois_map(sub)
    assert not certificate.bijective
    assert certificate.dims["H⊗_K H"] == 18
    comparison = comparison_map(sub)
    assert comparison.dims["H⊗H/K+H"] == 18


def test_decision_with_quotient_witness(s3_a3) -> None:
    sub = s3_a3.require_subalgebra("test")
    witness = quotient_coaction(sub, quotient_coalgebra(sub, Side.RIGHT))
    decision = decide_normal_via_galois(sub, witness)
    assert decision.passed
    assert decision.witness is not None and decision.witness.bijective
    assert decision.rank == 2


def test_decision_for_non_normal_subalgebra(s3_c2) -> None:
    decision = decide_normal_via_galois(s3_c2.require_subalgebra("test"))
    failures = [check.name for check in decision.checks if not check.passed]
    assert failures == ["K is normal in A", "β: H⊗_K H → H⊗H/HK+ bijective"]
    assert not decision.canonical.bijective


def test_quotient_witness_requires_normality(s3_c2) -> None:
    sub = s3_c2.require_subalgebra("test")
    with pytest.raises(NormalityError):
        quotient_coaction(sub, quotient_coalgebra(sub, Side.RIGHT))


def test_free_basis_over_subgroup(s3_a3, s3_c2) -> None:
    assert len(free_basis_over(s3_a3.require_subalgebra("test")) or []) == 2
    assert len(free_basis_over(s3_c2.require_subalgebra("test")) or []) == 3


def test_hopf_subalgebra_must_be_a_subcoalgebra(s3_a3) -> None:
    parent = s3_a3.require_hopf("test")
    with pytest.raises(StructureError):
        hopf_subalgebra(parent, ["()", "(123) + (132)"])


PHI_GROUPS = [cyclic_group(2), cyclic_group(3), symmetric_group(3)]


@pytest.mark.parametrize("group", PHI_GROUPS, ids=lambda g: g.name)
def test_phi_of_regular_coaction_is_identity(group) -> None:
    h = group_hopf_algebra(group, Field.rational())
    report = phi_map(h, h, h.coproduct)
    assert report.matrix.is_identity()
    assert report.surjective
    assert report.passed


@pytest.mark.parametrize("group", PHI_GROUPS, ids=lambda g: g.name)
def test_phi_into_ground_field_is_counit(group) -> None:
    field_ = Field.rational()
    h = group_hopf_algebra(group, field_)
    report = phi_map(h, trivial_hopf_algebra(field_), Matrix.identity(field_, h.dim))
    assert report.matrix.shape == (1, h.dim)
    assert list(report.matrix.row(0)) == list(h.counit)
    assert report.surjective
    assert report.passed
