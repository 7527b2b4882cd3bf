"""Weak bialgebra and weak Hopf algebra axioms, projections, integrals and duals."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from algebra import symmetric_group
from check_types import all_passed
from coalgebra import group_hopf_algebra
from instance_file import parse_instance
from linalg import Field
from weak_hopf import (
    LeftIntegral,
    WeakHopfAlgebra,
    as_weak_hopf,
    build_groupoid_wha,
    find_left_integral,
    frobenius_matrix,
    integral_checks,
    left_integrals,
)

Q = Field.rational()
F2 = Field.prime(2)


GROUPOID_CASES = [(1, Q), (2, Q), (3, Q), (2, F2)]


@pytest.mark.parametrize("n, field", GROUPOID_CASES)
def test_groupoid_algebra_is_weak_hopf(n, field) -> None:
    h = build_groupoid_wha(n, field)
    assert all_passed(h.checks())
    assert h.h_left.dim == n
    assert h.h_right.dim == n
    assert h.eps(h.unit) == field(n)


def test_projection_onto_diagonal() -> None:
    h = build_groupoid_wha(2, Q)
    e12 = h.algebra.element("e12")
    assert h.pi_left.apply(e12) == h.algebra.element("e11")
    assert h.pi_right.apply(e12) == h.algebra.element("e22")


def test_hopf_algebra_has_trivial_base() -> None:
    h = as_weak_hopf(group_hopf_algebra(symmetric_group(3), Q))
    assert all_passed(h.checks())
    assert h.h_left.dim == 1


def test_broken_antipode_is_reported() -> None:
    h = build_groupoid_wha(2, Q)
    broken = WeakHopfAlgebra(h.algebra, h.coproduct, h.counit, h.identity())
    failures = {r.name for r in broken.antipode_checks() if not r.passed}
    assert "x_(1)S(x_(2)) = Π^L(x)" in failures


@pytest.mark.parametrize("n", [2, 3])
def test_dual_of_groupoid_algebra(n) -> None:
    dual = build_groupoid_wha(n, Q).dual()
    assert all_passed(dual.checks())
    assert dual.algebra.is_commutative()


def test_group_algebra_integral_is_sum_of_elements() -> None:
    h = as_weak_hopf(group_hopf_algebra(symmetric_group(3), Q))
    assert left_integrals(h).dim == 1
    integral = find_left_integral(h)
    values = set(integral.element)
    assert len(values) == 1 and 0 not in values
    assert all_passed(integral_checks(integral))


@pytest.mark.parametrize("n, field", GROUPOID_CASES)
def test_groupoid_integrals(n, field) -> None:
    h = build_groupoid_wha(n, field)
    assert left_integrals(h).dim == n
    integral = find_left_integral(h)
    assert integral.nondegenerate


def test_sweedler_integral(instances_dir) -> None:
    h = parse_instance(instances_dir / "sweedler-f3.json").require_weak("test")
    assert all_passed(h.checks())
    integral = find_left_integral(h)
    assert all_passed(integral_checks(integral))


def test_single_column_integral_is_degenerate() -> None:
    h = build_groupoid_wha(2, Q)
    space = left_integrals(h)
    assert space.dim == 2
    column = space.vectors()[0]
    assert not LeftIntegral(h, column, frobenius_matrix(h, column)).nondegenerate
