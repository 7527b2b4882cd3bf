"""Coalgebra and Hopf algebra axioms on group algebras and explicit tables."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from algebra import cyclic_group, symmetric_group
from check_types import all_passed
from coalgebra import CoalgebraData, HopfAlgebra, group_hopf_algebra, hopf_from_tables, trivial_hopf_algebra
from instance_file import parse_instance
from linalg import Field, Matrix

Q = Field.rational()


@pytest.mark.parametrize("group", [cyclic_group(2), cyclic_group(3), symmetric_group(3)])
def test_group_hopf_algebras_satisfy_axioms(group) -> None:
    h = group_hopf_algebra(group, Q)
    assert all_passed(h.checks())


def test_trivial_hopf_algebra() -> None:
    k = trivial_hopf_algebra(Q)
    assert k.dim == 1
    assert all_passed(k.checks())


def test_sweedler_from_tables(instances_dir) -> None:
    instance = parse_instance(instances_dir / "sweedler-f3.json")
    h = instance.require_hopf("test")
    assert h.dim == 4
    assert all_passed(h.checks())


def test_wrong_antipode_fails(instances_dir) -> None:
    h = parse_instance(instances_dir / "sweedler-f3.json").require_hopf("test")
    broken = HopfAlgebra(h.algebra, h.coproduct, h.counit, Matrix.identity(h.field, h.dim))
    results = {r.name: r for r in broken.checks()}
    assert not results["antipode law"].passed
    assert results["coassociativity"].passed


def test_tables_without_antipode_give_plain_coalgebra() -> None:
    h = group_hopf_algebra(cyclic_group(2), Q)
    terms = [(0, 0, 0, 1), (1, 1, 1, 1)]
    data = hopf_from_tables(h.algebra, terms, [1, 1], None)
    assert isinstance(data, CoalgebraData)
    assert not isinstance(data, HopfAlgebra)
    assert all_passed(data.coalgebra_checks())


def test_dual_of_group_algebra_is_commutative() -> None:
    h = group_hopf_algebra(symmetric_group(3), Q)
    dual = h.dual()
    assert dual.algebra.is_commutative()
    assert all_passed(dual.coalgebra_checks())
