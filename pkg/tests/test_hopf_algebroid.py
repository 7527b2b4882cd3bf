"""Symmetric separability elements and the Hopf algebroid T^op_cop with antipode τ."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from algebra import build_group_algebra, build_matrix_algebra, cyclic_group, symmetric_group
from catalog import load_catalog
from check_types import SeparabilityError, all_passed
from depth_two import require_quasibases
from hopf_algebroid import (
    antipode_tau,
    build_T_op_cop,
    check_hopf_algebroid_axioms,
    find_sym_sep_element,
    separability_checks,
)
from linalg import Field, Matrix

Q = Field.rational()

SEPARABLE_CASES = [
    (build_group_algebra(cyclic_group(3), Q), True),
    (build_group_algebra(symmetric_group(3), Q), True),
    (build_matrix_algebra(2, Q), True),
    (build_group_algebra(cyclic_group(3), Field.prime(3)), False),
    (build_group_algebra(cyclic_group(2), Field.prime(2)), False),
    (build_matrix_algebra(2, Field.prime(2)), False),
    (build_matrix_algebra(3, Field.prime(2)), True),
]


@pytest.mark.parametrize("algebra, separable", SEPARABLE_CASES)
def test_kanzaki_separability(algebra, separable) -> None:
    e = find_sym_sep_element(algebra)
    assert (e is not None) is separable
    if e is not None:
        assert all_passed(separability_checks(e))


def test_group_algebra_element_is_averaged_inverse_pairs() -> None:
    c3 = cyclic_group(3)
    algebra = build_group_algebra(c3, Q)
    e = find_sym_sep_element(algebra)
    assert e is not None
    third = Q("1/3")
    expected = {(g, c3.inverse(g)) for g in range(3)}
    assert {(i, j) for i, j, _ in e.terms()} == expected
    assert all(c == third for _, _, c in e.terms())


@pytest.mark.parametrize("name", ["s3-a3", "m2-diagonal", "m2-center"])
def test_T_op_cop_is_a_hopf_algebroid(name) -> None:
    ext = load_catalog(name).require_extension("test")
    qbs = require_quasibases(ext)
    e = find_sym_sep_element(ext.sub_algebra)
    assert e is not None
    data = build_T_op_cop(ext, qbs, e)
    assert all_passed(data.checks)
    identity = Matrix.identity(ext.field, ext.T.dim)
    for k in range(ext.T.dim):
        unit = identity.column(k)
        assert tuple(antipode_tau(data, antipode_tau(data, unit))) == tuple(unit)
    assert all_passed(check_hopf_algebroid_axioms(data))
    if e.alternatives.dim:
        other = build_T_op_cop(ext, qbs, e.alternative(0), data.right)
        assert all_passed(check_hopf_algebroid_axioms(other))


def test_missing_separability_element_raises() -> None:
    ext = load_catalog("c3-f3").require_extension("test")
    qbs = require_quasibases(ext)
    with pytest.raises(SeparabilityError):
        build_T_op_cop(ext, qbs, None)
