"""The bialgebroids S and T, their pairings and the Galois property of End(_B A)."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from bialgebroid import (
    build_S,
    build_T,
    check_S,
    check_T,
    coaction_on_A,
    coaction_on_E,
    endo_galois,
    pairings,
)
from catalog import load_catalog
from check_types import all_passed
from depth_two import require_quasibases

D2_INSTANCES = ["s3-a3", "m2-diagonal", "m2-center"]


@pytest.fixture(scope="module", params=D2_INSTANCES)
def built(request):
    ext = load_catalog(request.param).require_extension("test")
    left_qb, right_qb = require_quasibases(ext)
    s = build_S(ext, left_qb, right_qb)
    t = build_T(ext, left_qb, right_qb)
    return ext, left_qb, right_qb, s, t


def test_S_is_a_left_bialgebroid(built) -> None:
    ext, left_qb, right_qb, s, _ = built
    failures = [r.name for r in check_S(ext, s, left_qb, right_qb) if not r.passed]
    assert failures == []


def test_T_is_a_right_bialgebroid(built) -> None:
    ext, left_qb, right_qb, _, t = built
    failures = [r.name for r in check_T(ext, t, left_qb, right_qb) if not r.passed]
    assert failures == []


def test_pairings_are_nondegenerate(built) -> None:
    ext = built[0]
    angle, bracket = pairings(ext)
    assert angle.nondegenerate
    assert bracket.nondegenerate
    assert angle.s_dim == ext.S.dim and angle.t_dim == ext.T.dim


def test_coaction_on_A(built) -> None:
    ext, _, right_qb, _, t = built
    coaction = coaction_on_A(ext, right_qb, t)
    assert coaction.passed
    assert ext.sub.is_subspace_of(coaction.coinvariants)


def test_endomorphism_galois(built) -> None:
    ext, _, right_qb, s, _ = built
    coaction = coaction_on_E(ext, right_qb, s)
    assert all_passed(coaction.checks)
    certificate = endo_galois(ext, right_qb, s, coaction, check_factorization=True)
    assert certificate.passed


def test_S_over_a3_has_dimension_eight(s3_a3) -> None:
    ext = s3_a3.require_extension("test")
    left_qb, right_qb = require_quasibases(ext)
    s = build_S(ext, left_qb, right_qb)
    assert s.total.dim == 8
    assert s.base.dim == 4
