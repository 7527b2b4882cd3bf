"""Weak Hopf-Galois maps, their identities, dual bases and antipode reconstruction."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from algebra import cyclic_group, symmetric_group
from check_types import Verdict, all_passed
from coalgebra import group_hopf_algebra
from instance_file import instance_from_dict, parse_instance
from linalg import Field
from weak_galois import (
    antipode_existence_probe,
    comodule_check,
    frobenius_probe,
    galois_map,
    galois_maps,
    integral_dual_bases,
    reconstruct_antipode,
    self_comodule,
    self_galois,
    verify_galois_identities,
)
from weak_hopf import as_weak_hopf, build_groupoid_wha

Q = Field.rational()


@pytest.mark.parametrize("n", [2, 3])
def test_matrix_algebra_is_galois_over_diagonal(n) -> None:
    h = build_groupoid_wha(n, Q)
    certificate = self_galois(h)
    failures = [r.name for r in certificate.checks if not r.passed]
    assert failures == []
    assert certificate.comodule.coinvariants.dim == n
    assert certificate.galois.tensor.dim == n ** 3
    assert certificate.comodule.corner.dim == n ** 3
    assert certificate.galois.bijective


def test_group_algebra_is_galois_over_ground_field() -> None:
    h = as_weak_hopf(group_hopf_algebra(symmetric_group(3), Q))
    certificate = self_galois(h)
    assert certificate.passed
    assert certificate.comodule.coinvariants.dim == 1
    assert certificate.galois.dims["A⊗_B A"] == 36


@pytest.mark.parametrize("n", [2, 3])
def test_galois_identities_on_groupoids(n) -> None:
    h = build_groupoid_wha(n, Q)
    data = galois_maps(self_comodule(h), h)
    assert all_passed(data.checks)
    assert all_passed(verify_galois_identities(data))


RECONSTRUCTION_CASES = [
    ("M2", lambda: build_groupoid_wha(2, Q)),
    ("M3", lambda: build_groupoid_wha(3, Q)),
    ("Q[C2]", lambda: as_weak_hopf(group_hopf_algebra(cyclic_group(2), Q))),
    ("Q[S3]", lambda: as_weak_hopf(group_hopf_algebra(symmetric_group(3), Q))),
]


@pytest.mark.parametrize("label, build", RECONSTRUCTION_CASES)
def test_reconstructed_antipode_matches(label, build) -> None:
    h = build()
    rebuilt = reconstruct_antipode(h.without_antipode(), h.antipode)
    assert rebuilt.matches_reference, label
    assert rebuilt.passed, label


def test_reconstructed_antipode_matches_sweedler(instances_dir) -> None:
    h = parse_instance(instances_dir / "sweedler-f3.json").require_weak("test")
    rebuilt = reconstruct_antipode(h.without_antipode(), h.antipode)
    assert rebuilt.matches_reference
    assert rebuilt.passed


def test_antipode_existence_probe_is_informational() -> None:
    probe = antipode_existence_probe(build_groupoid_wha(2, Q))
    assert probe.verdict is Verdict.INFO
    assert probe.witness["found"] is True


def test_graded_matrix_algebra(instances_dir) -> None:
    instance = parse_instance(instances_dir / "m2-graded-c2.json")
    h = instance.require_weak("test")
    algebra, rho = instance.coaction
    comodule = comodule_check(algebra, h, rho)
    assert comodule.passed
    assert comodule.coinvariants.dim == 2
    data = galois_maps(comodule, h)
    assert data.bijective
    assert data.dims == {"A⊗_B A": 8, "(A⊗H)ρ(1)": 8, "ρ(1)(A⊗H)": 8}
    assert all_passed(verify_galois_identities(data))
    certificate = integral_dual_bases(data, h)
    assert certificate.passed


def _trivial_coaction() -> dict:
    return {
        "name": "m2-trivial",
        "algebras": {"H": {"group": {"cyclic": 2}}, "A": {"matrix": 2}},
        "coalgebra": {"algebra": "H", "shortcut": "group"},
        "coaction": {"algebra": "A", "rho": [[a, a, 0, 1] for a in range(4)]},
    }


def test_trivial_coaction_is_not_galois() -> None:
    instance = instance_from_dict(_trivial_coaction())
    h = instance.require_weak("test")
    algebra, rho = instance.coaction
    comodule = comodule_check(algebra, h, rho)
    assert comodule.passed
    assert comodule.coinvariants.dim == 4
    data = galois_map(comodule)
    assert data.injective
    assert not data.surjective


def test_non_multiplicative_coaction_is_flagged() -> None:
    payload = _trivial_coaction()
    # e12 even, e21 odd
    payload["coaction"]["rho"] = [[0, 0, 0, 1], [1, 1, 0, 1], [2, 2, 1, 1], [3, 3, 0, 1]]
    instance = instance_from_dict(payload)
    h = instance.require_weak("test")
    algebra, rho = instance.coaction
    comodule = comodule_check(algebra, h, rho)
    failures = {r.name for r in comodule.checks if not r.passed}
    assert "ρ multiplicative" in failures


def test_frobenius_probe_reports_info() -> None:
    probe = frobenius_probe(self_comodule(build_groupoid_wha(2, Q)))
    assert probe.verdict is Verdict.INFO
    assert "found" in probe.witness
