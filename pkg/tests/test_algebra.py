"""Algebras from structure constants, groups, subalgebras and the derived objects R, S, E and T."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from algebra import (
    FDAlgebra,
    FiniteGroup,
    build_group_algebra,
    build_matrix_algebra,
    cyclic_group,
    symmetric_group,
)
from check_types import StructureError
from linalg import Field

Q = Field.rational()
F3 = Field.prime(3)


GROUP_CASES = [
    (cyclic_group(2), Q, 2, True),
    (cyclic_group(3), F3, 3, True),
    (symmetric_group(3), Q, 6, False),
]


@pytest.mark.parametrize("group, field, dim, commutative", GROUP_CASES)
def test_group_algebras(group, field, dim, commutative) -> None:
    algebra = build_group_algebra(group, field).validated()
    assert algebra.dim == dim
    assert algebra.is_commutative() is commutative


def test_matrix_units() -> None:
    m2 = build_matrix_algebra(2, Q)
    assert m2.dim == 4
    assert m2.multiply(m2.element("e12"), m2.element("e21")) == m2.element("e11")
    assert not any(m2.multiply(m2.element("e12"), m2.element("e12")))
    assert build_matrix_algebra(3, F3).dim == 9


def test_element_parsing() -> None:
    m2 = build_matrix_algebra(2, Q)
    vector = m2.element("e11 + 2*e22 - 1/2*e12")
    assert vector == (Q(1), Q("-1/2"), Q(0), Q(2))
    assert m2.format_element(m2.element("e11 + e22")) == "e11 + e22"
    with pytest.raises(ValueError):
        m2.element("e33")


UNSPACED_CASES = [
    ("e11+e22", "e11 + e22"),
    ("e11-e12", "e11 - e12"),
    ("2*e22+1/2*e21", "2*e22 + 1/2*e21"),
    ("e11 +e22", "e11 + e22"),
]


@pytest.mark.parametrize("tight, spaced", UNSPACED_CASES)
def test_unspaced_label_sums(tight, spaced) -> None:
    m2 = build_matrix_algebra(2, Q)
    assert m2.element(tight) == m2.element(spaced)


def test_unspaced_sum_with_unknown_label_is_rejected() -> None:
    m2 = build_matrix_algebra(2, Q)
    with pytest.raises(ValueError, match="e33"):
        m2.element("e11+e33")


def test_unit_law_violation_is_rejected() -> None:
    # b1*b0 = b0 breaks the unit law for b0
    algebra = FDAlgebra.from_structure_constants(
        Q, ["b0", "b1"], [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 0, 1), (1, 1, 0, 1)], [1, 0], "bad"
    )
    with pytest.raises(StructureError):
        algebra.validated()


def test_group_table_must_have_inverses() -> None:
    with pytest.raises(StructureError):
        FiniteGroup.from_labels(["e", "a"], [["e", "a"], ["a", "a"]], "M")


def test_subgroup_generation() -> None:
    s3 = symmetric_group(3)
    members = s3.generated_by([s3.index("(123)")])
    assert sorted(s3.elements[g] for g in members) == sorted(["()", "(123)", "(132)"])


def test_subalgebra_requires_unit_and_closure() -> None:
    m2 = build_matrix_algebra(2, Q)
    with pytest.raises(StructureError):
        m2.subalgebra(["e11"])
    with pytest.raises(StructureError):
        m2.subalgebra(["e11 + e22", "e12", "e21"])


def test_opposite_reverses_products() -> None:
    m2 = build_matrix_algebra(2, Q)
    op = m2.opposite()
    assert op.multiply(op.element("e21"), op.element("e12")) == m2.element("e11")


DIMS_CASES = [
    ("s3-a3", {"A": 6, "B": 3, "R": 4, "S": 8, "E": 12, "A⊗_B A": 12, "T": 8}),
    ("m2-diagonal", {"A": 4, "B": 2, "R": 2, "S": 4, "E": 8, "A⊗_B A": 8, "T": 4}),
    ("m2-scalars", {"A": 4, "B": 1, "R": 4, "E": 16, "A⊗_B A": 16}),
    ("m2-center", {"A": 4, "B": 4, "R": 1, "S": 1, "A⊗_B A": 4}),
    ("s3-c2", {"A": 6, "B": 2, "A⊗_B A": 18}),
]


@pytest.mark.parametrize("name, expected", DIMS_CASES)
def test_extension_dimensions(name, expected) -> None:
    from catalog import load_catalog

    dims = load_catalog(name).require_extension("test").dims()
    for key, value in expected.items():
        assert dims[key] == value, key


def test_centralizer_of_a3(s3_a3) -> None:
    ext = s3_a3.require_extension("test")
    algebra = ext.ambient
    transpositions = algebra.element("(12) + (13) + (23)")
    assert ext.centralizer.contains(transpositions)
    assert ext.centralizer.contains(algebra.element("(123)"))
    assert not ext.centralizer.contains(algebra.element("(12)"))


def test_tensor_square_over_whole_algebra_is_a(s3_a3) -> None:
    algebra = s3_a3.algebras["A"]
    ext = algebra.subalgebra([algebra.basis_vector(k) for k in range(algebra.dim)], "A")
    assert ext.tensor_square.dim == algebra.dim
