"""Coalgebra structure on finite-dimensional algebras, Hopf algebras and their axiom checks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from algebra import FDAlgebra, FiniteGroup, build_group_algebra
from check_types import CheckResult, StructureError
from linalg import Field, Matrix, Scalar, SparseVector, Vector, dense, sparse, tensor_apply


@dataclass(frozen=True)
class CoalgebraData:
    """An algebra H with ``Δ: H -> H ⊗ H`` and ``ε: H -> k``.

    Column i of ``coproduct`` is ``Δ(b_i)`` in the basis ``b_j ⊗ b_k`` (index ``j * n + k``).
    """

    algebra: FDAlgebra
    coproduct: Matrix
    counit: Vector

    def __post_init__(self) -> None:
        n = self.algebra.dim
        if self.coproduct.shape != (n * n, n):
            raise StructureError(f"Coproduct of {self.name} must be a {n * n}x{n} matrix")
        if len(self.counit) != n:
            raise StructureError(f"Counit of {self.name} must have {n} entries")

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def unit(self) -> Vector:
        return self.algebra.unit

    def delta(self, x: Sequence[Scalar]) -> Vector:
        return self.coproduct.apply(x)

    def delta_sparse(self, x: SparseVector) -> SparseVector:
        return tensor_apply([self.coproduct], x, [self.dim])

    def eps(self, x: Sequence[Scalar]) -> Scalar:
        value = sum((a * b for a, b in zip(self.counit, x) if a and b), self.field.zero)
        return self.field.normalize(value)

    @cached_property
    def delta_terms(self) -> List[List[Tuple[int, int, Scalar]]]:
        """``Δ(b_i)`` as terms ``(j, k, c)``."""

        n = self.dim
        return [
            [(index // n, index % n, value) for index, value in self.coproduct.sparse_column(i).items()]
            for i in range(n)
        ]

    @cached_property
    def square(self) -> FDAlgebra:
        return self.algebra.tensor(self.algebra)

    @cached_property
    def multiplication(self) -> Matrix:
        """``μ: H ⊗ H -> H``."""

        n = self.dim
        return Matrix.from_columns(
            self.field, n, [dict(self.algebra.table[i][j]) for i in range(n) for j in range(n)]
        )

    @cached_property
    def counit_matrix(self) -> Matrix:
        return Matrix(self.field, 1, self.dim, tuple(self.counit))

    def identity(self) -> Matrix:
        return Matrix.identity(self.field, self.dim)

    # axioms ------------------------------------------------------------------------

    def coassociativity(self) -> CheckResult:
        n = self.dim
        ident = self.identity()
        for i in range(n):
            column = self.coproduct.sparse_column(i)
            left = tensor_apply([self.coproduct, ident], column, [n, n])
            right = tensor_apply([ident, self.coproduct], column, [n, n])
            if left != right:
                return CheckResult.of("coassociativity", False, f"fails on {self.algebra.labels[i]}")
        return CheckResult.of("coassociativity", True)

    def counit_laws(self) -> CheckResult:
        n = self.dim
        ident = self.identity()
        for i in range(n):
            column = self.coproduct.sparse_column(i)
            expected = {i: self.field.one}
            left = tensor_apply([self.counit_matrix, ident], column, [n, n])
            right = tensor_apply([ident, self.counit_matrix], column, [n, n])
            if left != expected or right != expected:
                return CheckResult.of("counit", False, f"fails on {self.algebra.labels[i]}")
        return CheckResult.of("counit", True)

    def coproduct_multiplicative(self) -> CheckResult:
        n = self.dim
        square = self.square
        for i in range(n):
            for j in range(n):
                lhs = self.delta_sparse(dict(self.algebra.table[i][j]))
                rhs = square.multiply_sparse(self.coproduct.sparse_column(i), self.coproduct.sparse_column(j))
                if lhs != rhs:
                    labels = self.algebra.labels
                    return CheckResult.of(
                        "coproduct multiplicative", False, f"Δ({labels[i]}{labels[j]}) != Δ({labels[i]})Δ({labels[j]})"
                    )
        return CheckResult.of("coproduct multiplicative", True)

    def coalgebra_checks(self) -> List[CheckResult]:
        return [self.coassociativity(), self.counit_laws(), self.coproduct_multiplicative()]

    def dual(self, name: Optional[str] = None) -> "CoalgebraData":
        """``H*`` in the dual basis: product dual to Δ, coproduct dual to the product."""

        n = self.dim
        field = self.field
        columns = [self.coproduct.column(i) for i in range(n)]

        def products(p: int, q: int) -> SparseVector:
            return {i: columns[i][p * n + q] for i in range(n) if columns[i][p * n + q]}

        labels = [f"{label}*" for label in self.algebra.labels]
        algebra = FDAlgebra.from_products(field, labels, products, self.counit, name or f"{self.name}*")
        coproduct = Matrix.from_columns(
            field,
            n * n,
            [
                {i * n + j: self.algebra.structure_constant(i, j, k) for i in range(n) for j in range(n)}
                for k in range(n)
            ],
        )
        return CoalgebraData(algebra, coproduct, self.unit)


@dataclass(frozen=True)
class HopfAlgebra(CoalgebraData):
    """A finite-dimensional Hopf algebra with antipode ``τ``."""

    antipode: Matrix = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.antipode is None or self.antipode.shape != (self.dim, self.dim):
            raise StructureError(f"Antipode of {self.name} must be a {self.dim}x{self.dim} matrix")

    def tau(self, x: Sequence[Scalar]) -> Vector:
        return self.antipode.apply(x)

    def bialgebra_checks(self) -> List[CheckResult]:
        results = [CheckResult.of("algebra laws", laws_hold(self.algebra))]
        results.extend(self.coalgebra_checks())
        unit = sparse(self.field, self.unit)
        unit_ok = self.delta_sparse(unit) == sparse(self.field, self.square.unit) and self.field.normalize(
            self.eps(self.unit) - 1
        ) == 0
        results.append(CheckResult.of("unital coproduct and counit", unit_ok))
        eps_ok = all(
            self.eps(self.algebra.multiply({i: self.field.one}, {j: self.field.one}))
            == self.field.normalize(self.counit[i] * self.counit[j])
            for i in range(self.dim)
            for j in range(self.dim)
        )
        results.append(CheckResult.of("counit multiplicative", eps_ok))
        return results

    def antipode_law(self) -> CheckResult:
        n = self.dim
        left_map = self.multiplication @ self.antipode.kron(self.identity())
        right_map = self.multiplication @ self.identity().kron(self.antipode)
        for i in range(n):
            column = self.coproduct.column(i)
            expected = tuple(self.field.normalize(self.counit[i] * u) for u in self.unit)
            if left_map.apply(column) != expected or right_map.apply(column) != expected:
                return CheckResult.of("antipode law", False, f"fails on {self.algebra.labels[i]}")
        return CheckResult.of("antipode law", True)

    def checks(self) -> List[CheckResult]:
        return self.bialgebra_checks() + [self.antipode_law()]


def laws_hold(algebra: FDAlgebra) -> bool:
    try:
        algebra.check_laws()
    except StructureError:
        return False
    return True


def group_hopf_algebra(group: FiniteGroup, field: Field, name: Optional[str] = None) -> HopfAlgebra:
    """``k[G]`` with ``Δ(g) = g ⊗ g``, ``ε(g) = 1``, ``τ(g) = g^-1``."""

    algebra = build_group_algebra(group, field, name)
    n = group.order
    coproduct = Matrix.from_columns(field, n * n, [{g * n + g: field.one} for g in range(n)])
    antipode = Matrix.from_columns(field, n, [{group.inverse(g): field.one} for g in range(n)])
    return HopfAlgebra(algebra, coproduct, (field.one,) * n, antipode)


def trivial_hopf_algebra(field: Field) -> HopfAlgebra:
    """The ground field k as a Hopf algebra."""

    algebra = FDAlgebra.from_products(field, ["1"], lambda i, j: {0: field.one}, [field.one], "k")
    one = Matrix.identity(field, 1)
    return HopfAlgebra(algebra, one, (field.one,), one)


def hopf_from_tables(
    algebra: FDAlgebra,
    coproduct_terms: Sequence[Tuple[int, int, int, Scalar]],
    counit: Sequence[Scalar],
    antipode: Optional[Matrix],
) -> CoalgebraData:
    """Assemble coalgebra data from ``(i, j, k, c)`` triples meaning ``Δ(b_i) ∋ c·b_j ⊗ b_k``."""

    field = algebra.field
    n = algebra.dim
    columns: List[SparseVector] = [{} for _ in range(n)]
    for i, j, k, value in coproduct_terms:
        for index in (i, j, k):
            if not 0 <= index < n:
                raise StructureError(f"Coproduct index {index} out of range for {algebra.name}")
        cell = columns[i]
        cell[j * n + k] = field.normalize(cell.get(j * n + k, 0) + field(value))
    coproduct = Matrix.from_columns(field, n * n, columns)
    counit_vector = dense(field, sparse(field, [field(v) for v in counit]), n)
    if antipode is None:
        return CoalgebraData(algebra, coproduct, counit_vector)
    return HopfAlgebra(algebra, coproduct, counit_vector, antipode)


__all__ = [
    "CoalgebraData",
    "HopfAlgebra",
    "group_hopf_algebra",
    "hopf_from_tables",
    "laws_hold",
    "trivial_hopf_algebra",
]
