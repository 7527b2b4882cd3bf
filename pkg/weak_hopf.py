"""Weak bialgebras and weak Hopf algebras: projections, the identity suite, duals and integrals."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from algebra import FDAlgebra, build_matrix_algebra
from check_types import CheckResult, IntegralError, StructureError
from coalgebra import CoalgebraData, HopfAlgebra, laws_hold
from linalg import (
    Field,
    Matrix,
    Scalar,
    SparseVector,
    Subspace,
    Vector,
    dense,
    kernel_of_equations,
    solve,
    sparse,
    tensor_apply,
    unravel,
)

LOGGER = logging.getLogger(__name__)


def tensor_multiply(algebras: Sequence[FDAlgebra], x: SparseVector, y: SparseVector) -> SparseVector:
    """Factorwise product in ``A_0 ⊗ A_1 ⊗ ...`` (mixed-radix indices)."""

    dims = [a.dim for a in algebras]
    out: SparseVector = {}
    for i, c in x.items():
        left = unravel(i, dims)
        for j, d in y.items():
            right = unravel(j, dims)
            partial: Dict[int, Scalar] = {0: c * d}
            for algebra, u, v, size in zip(algebras, left, right, dims):
                partial = {
                    offset * size + k: coefficient * value
                    for offset, coefficient in partial.items()
                    for k, value in algebra.table[u][v]
                }
                if not partial:
                    break
            for k, value in partial.items():
                out[k] = out.get(k, 0) + value
    norm = algebras[0].field.normalize
    return {k: norm(v) for k, v in out.items() if norm(v)}


def pure_sparse(dims: Sequence[int], *vectors: SparseVector) -> SparseVector:
    out: Dict[int, Scalar] = {0: 1}
    for size, vector in zip(dims, vectors):
        out = {offset * size + k: c * v for offset, c in out.items() for k, v in vector.items()}
    return out


@dataclass(frozen=True)
class WeakBialgebra(CoalgebraData):
    """Algebra and coalgebra with multiplicative Δ whose unit and counit laws are weakened."""

    @cached_property
    def eps_products(self) -> List[List[Scalar]]:
        """``ε(b_i b_j)``."""

        n = self.dim
        return [[self.eps(dense(self.field, dict(self.algebra.table[i][j]), n)) for j in range(n)] for i in range(n)]

    @cached_property
    def unit_terms(self) -> List[Tuple[int, int, Scalar]]:
        """``Δ(1) = 1_(1) ⊗ 1_(2)`` as terms ``(u, v, c)``."""

        n = self.dim
        return [(k // n, k % n, c) for k, c in self.delta_sparse(sparse(self.field, self.unit)).items()]

    def _projection(self, image: Callable[[int, int, int], Tuple[int, Scalar]]) -> Matrix:
        columns = []
        for x in range(self.dim):
            column: SparseVector = {}
            for u, v, c in self.unit_terms:
                index, weight = image(x, u, v)
                if weight:
                    column[index] = column.get(index, 0) + c * weight
            columns.append(column)
        return Matrix.from_columns(self.field, self.dim, columns)

    @cached_property
    def pi_left(self) -> Matrix:
        """``Π^L(x) = ε(1_(1) x) 1_(2)``."""

        e = self.eps_products
        return self._projection(lambda x, u, v: (v, e[u][x]))

    @cached_property
    def pi_right(self) -> Matrix:
        """``Π^R(x) = 1_(1) ε(x 1_(2))``."""

        e = self.eps_products
        return self._projection(lambda x, u, v: (u, e[x][v]))

    @cached_property
    def pi_bar_left(self) -> Matrix:
        """``Π̄^L(x) = 1_(1) ε(1_(2) x)``."""

        e = self.eps_products
        return self._projection(lambda x, u, v: (u, e[v][x]))

    @cached_property
    def pi_bar_right(self) -> Matrix:
        """``Π̄^R(x) = ε(x 1_(1)) 1_(2)``."""

        e = self.eps_products
        return self._projection(lambda x, u, v: (v, e[x][u]))

    @cached_property
    def h_left(self) -> Subspace:
        return self.pi_left.image()

    @cached_property
    def h_right(self) -> Subspace:
        return self.pi_right.image()

    def unit_weak_comultiplicativity(self) -> CheckResult:
        """``1_(1) ⊗ 1_(2) ⊗ 1_(3)`` against both products of ``Δ(1) ⊗ 1`` and ``1 ⊗ Δ(1)``."""

        n = self.dim
        algebras = [self.algebra] * 3
        unit = sparse(self.field, self.unit)
        delta_one = self.delta_sparse(unit)
        triple = tensor_apply([self.coproduct, self.identity()], delta_one, [n, n])
        first = {k * n + j: c * d for k, c in delta_one.items() for j, d in unit.items()}
        second = {i * n * n + k: c * d for i, c in unit.items() for k, d in delta_one.items()}
        left = tensor_multiply(algebras, first, second)
        right = tensor_multiply(algebras, second, first)
        return CheckResult.of("1_(1)⊗1_(2)⊗1_(3) = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1)", triple == left == right)

    def counit_weak_multiplicativity(self) -> CheckResult:
        """``ε(abc) = ε(ab_(1))ε(b_(2)c) = ε(ab_(2))ε(b_(1)c)`` on all basis triples."""

        n = self.dim
        e = self.eps_products
        norm = self.field.normalize
        for a in range(n):
            for b in range(n):
                ab = self.algebra.table[a][b]
                for c in range(n):
                    whole = norm(sum((value * e[k][c] for k, value in ab), self.field.zero))
                    first = norm(sum((d * e[a][u] * e[v][c] for u, v, d in self.delta_terms[b]), self.field.zero))
                    second = norm(sum((d * e[a][v] * e[u][c] for u, v, d in self.delta_terms[b]), self.field.zero))
                    if not whole == first == second:
                        labels = self.algebra.labels
                        return CheckResult.of(
                            "ε(abc) = ε(ab_(1))ε(b_(2)c) = ε(ab_(2))ε(b_(1)c)",
                            False,
                            f"fails on ({labels[a]}, {labels[b]}, {labels[c]})",
                        )
        return CheckResult.of("ε(abc) = ε(ab_(1))ε(b_(2)c) = ε(ab_(2))ε(b_(1)c)", True)

    def weak_bialgebra_checks(self) -> List[CheckResult]:
        results = [CheckResult.of("algebra laws", laws_hold(self.algebra))]
        results.extend(self.coalgebra_checks())
        results.append(self.unit_weak_comultiplicativity())
        results.append(self.counit_weak_multiplicativity())
        results.append(
            CheckResult.info(
                "projections",
                f"ε(1) = {self.field.format(self.eps(self.unit))}",
                **{"dim H^L": self.h_left.dim, "dim H^R": self.h_right.dim},
            )
        )
        return results

    def checks(self) -> List[CheckResult]:
        return self.weak_bialgebra_checks()

    def collapse(self, vector: SparseVector, factors: int) -> Vector:
        """``Σ c · b_{i_1} ··· b_{i_k}`` for a tensor in ``H^{⊗k}``."""

        out: SparseVector = {}
        dims = [self.dim] * factors
        one = self.field.one
        for index, c in vector.items():
            digits = unravel(index, dims)
            product = {digits[0]: c}
            for digit in digits[1:]:
                product = self.algebra.multiply_sparse(product, {digit: one})
            for k, value in product.items():
                out[k] = out.get(k, 0) + value
        return dense(self.field, out, self.dim)


@dataclass(frozen=True)
class WeakHopfAlgebra(WeakBialgebra):
    """A weak bialgebra with antipode S (invertible in finite dimension)."""

    antipode: Matrix = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.antipode is None or self.antipode.shape != (self.dim, self.dim):
            raise StructureError(f"Antipode of {self.name} must be a {self.dim}x{self.dim} matrix")

    @cached_property
    def antipode_inverse(self) -> Optional[Matrix]:
        solution, _ = solve(self.antipode, self.identity())
        return solution

    def antipode_checks(self) -> List[CheckResult]:
        n = self.dim
        s = self.antipode
        ident = self.identity()
        results = []
        left_ok = right_ok = triple_ok = True
        for x in range(n):
            delta = self.coproduct.sparse_column(x)
            if self.collapse(tensor_apply([s, ident], delta, [n, n]), 2) != self.pi_right.column(x):
                left_ok = False
            if self.collapse(tensor_apply([ident, s], delta, [n, n]), 2) != self.pi_left.column(x):
                right_ok = False
            second = tensor_apply([self.coproduct, ident], delta, [n, n])
            if self.collapse(tensor_apply([s, ident, s], second, [n, n, n]), 3) != s.column(x):
                triple_ok = False
        results.append(CheckResult.of("S(x_(1))x_(2) = Π^R(x)", left_ok))
        results.append(CheckResult.of("x_(1)S(x_(2)) = Π^L(x)", right_ok))
        results.append(CheckResult.of("S(x_(1))x_(2)S(x_(3)) = S(x)", triple_ok))
        return results

    def identity_checks(self) -> List[CheckResult]:
        """The projection identities that follow from the axioms."""

        n = self.dim
        s = self.antipode
        s_bar = self.antipode_inverse
        ident = self.identity()
        e = self.eps_products
        results = [CheckResult.of("S invertible", s_bar is not None)]
        results.append(CheckResult.of("Im Π^L = Im Π̄^R", self.h_left == self.pi_bar_right.image()))
        results.append(CheckResult.of("Im Π^R = Im Π̄^L", self.h_right == self.pi_bar_left.image()))
        results.append(CheckResult.of("Π^L = S ∘ Π̄^L", self.pi_left == s @ self.pi_bar_left))
        results.append(CheckResult.of("Π^R = S ∘ Π̄^R", self.pi_right == s @ self.pi_bar_right))
        if s_bar is not None:
            bar_right = bar_left = True
            for a in range(n):
                flipped = {(k % n) * n + k // n: c for k, c in self.coproduct.sparse_column(a).items()}
                if self.collapse(tensor_apply([s_bar, ident], flipped, [n, n]), 2) != self.pi_bar_right.column(a):
                    bar_right = False
                if self.collapse(tensor_apply([ident, s_bar], flipped, [n, n]), 2) != self.pi_bar_left.column(a):
                    bar_left = False
            results.append(CheckResult.of("S̄(a_(2))a_(1) = Π̄^R(a)", bar_right))
            results.append(CheckResult.of("a_(2)S̄(a_(1)) = Π̄^L(a)", bar_left))
        algebras = [self.algebra, self.algebra]
        unit = sparse(self.field, self.unit)
        delta_one = self.delta_sparse(unit)
        first_ok = second_ok = True
        for a in range(n):
            delta = self.coproduct.sparse_column(a)
            lhs = tensor_apply([ident, self.pi_left], delta, [n, n])
            rhs = tensor_multiply(algebras, delta_one, pure_sparse([n, n], {a: self.field.one}, unit))
            if lhs != rhs:
                first_ok = False
            lhs = tensor_apply([self.pi_right, ident], delta, [n, n])
            rhs = tensor_multiply(algebras, pure_sparse([n, n], unit, {a: self.field.one}), delta_one)
            if lhs != rhs:
                second_ok = False
        results.append(CheckResult.of("a_(1)⊗Π^L(a_(2)) = 1_(1)a⊗1_(2)", first_ok))
        results.append(CheckResult.of("Π^R(a_(1))⊗a_(2) = 1_(1)⊗a1_(2)", second_ok))
        right_ok = left_ok = True
        one = self.field.one
        for a in range(n):
            for b in range(n):
                lhs = self.algebra.multiply(self.pi_right.column(a), {b: one})
                rhs: SparseVector = {}
                for u, v, d in self.delta_terms[b]:
                    rhs[u] = rhs.get(u, 0) + d * e[a][v]
                if lhs != dense(self.field, rhs, n):
                    right_ok = False
                lhs = self.algebra.multiply({a: one}, self.pi_left.column(b))
                rhs = {}
                for u, v, d in self.delta_terms[a]:
                    rhs[v] = rhs.get(v, 0) + d * e[u][b]
                if lhs != dense(self.field, rhs, n):
                    left_ok = False
        results.append(CheckResult.of("Π^R(a)b = b_(1)ε(ab_(2))", right_ok))
        results.append(CheckResult.of("aΠ^L(b) = ε(a_(1)b)a_(2)", left_ok))
        return results

    def checks(self) -> List[CheckResult]:
        return self.weak_bialgebra_checks() + self.antipode_checks() + self.identity_checks()

    def tau(self, x: Sequence[Scalar]) -> Vector:
        return self.antipode.apply(x)

    def dual(self, name: Optional[str] = None) -> "WeakHopfAlgebra":
        """``H*`` with product dual to Δ, coproduct dual to the product and antipode ``S^T``."""

        data = CoalgebraData.dual(self, name)
        return WeakHopfAlgebra(data.algebra, data.coproduct, data.counit, self.antipode.transpose())

    def without_antipode(self) -> WeakBialgebra:
        return WeakBialgebra(self.algebra, self.coproduct, self.counit)


def as_weak_hopf(hopf: HopfAlgebra) -> WeakHopfAlgebra:
    return WeakHopfAlgebra(hopf.algebra, hopf.coproduct, hopf.counit, hopf.antipode)


def weak_hopf_from(data: CoalgebraData, antipode: Optional[Matrix]) -> WeakBialgebra:
    if antipode is None:
        return WeakBialgebra(data.algebra, data.coproduct, data.counit)
    return WeakHopfAlgebra(data.algebra, data.coproduct, data.counit, antipode)


def build_groupoid_wha(n: int, field: Field, name: Optional[str] = None) -> WeakHopfAlgebra:
    """``M_n(k)``: ``Δ(e_ij) = e_ij ⊗ e_ij``, ``ε(e_ij) = 1``, ``S(e_ij) = e_ji``."""

    algebra = build_matrix_algebra(n, field, name or f"M{n}")
    size = n * n
    coproduct = Matrix.from_columns(field, size * size, [{p * size + p: field.one} for p in range(size)])
    antipode = Matrix.from_columns(field, size, [{(p % n) * n + p // n: field.one} for p in range(size)])
    return WeakHopfAlgebra(algebra, coproduct, (field.one,) * size, antipode)


# integrals ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class LeftIntegral:
    """``t`` with ``ht = Π^L(h)t``; ``frobenius`` is ``ψ -> t ↼ ψ = ψ(t_(1))t_(2)`` on the dual basis."""

    hopf: WeakBialgebra
    element: Vector
    frobenius: Matrix

    @property
    def nondegenerate(self) -> bool:
        return self.frobenius.rank() == self.hopf.dim


def left_integrals(h: WeakBialgebra) -> Subspace:
    n = h.dim
    equations: List[Vector] = []
    for i in range(n):
        shifted = h.algebra.left_matrix(h.algebra.basis_vector(i)) - h.algebra.left_matrix(h.pi_left.column(i))
        equations.extend(shifted.row_list())
    return kernel_of_equations(h.field, n, equations)


def frobenius_matrix(h: WeakBialgebra, t: Sequence[Scalar]) -> Matrix:
    n = h.dim
    columns: List[SparseVector] = [{} for _ in range(n)]
    for index, c in h.delta_sparse(sparse(h.field, t)).items():
        u, v = divmod(index, n)
        columns[u][v] = columns[u].get(v, 0) + c
    return Matrix.from_columns(h.field, n, columns)


def candidate_vectors(space: Subspace) -> List[Vector]:
    vectors = space.vectors()
    field = space.field
    out = list(vectors)
    if len(vectors) > 1:
        out.append(tuple(field.normalize(sum(parts)) for parts in zip(*vectors)))
        weighted = [tuple(field.normalize(field(k + 1) * x) for x in v) for k, v in enumerate(vectors)]
        out.append(tuple(field.normalize(sum(parts)) for parts in zip(*weighted)))
    return out


def find_left_integral(h: WeakBialgebra) -> LeftIntegral:
    """A nondegenerate left integral, searched deterministically in the solution space."""

    space = left_integrals(h)
    LOGGER.debug("left integrals of %s: dim %d", h.name, space.dim)
    for t in candidate_vectors(space):
        integral = LeftIntegral(h, t, frobenius_matrix(h, t))
        if integral.nondegenerate:
            return integral
    raise IntegralError(f"{h.name} has no nondegenerate left integral among {space.dim} solutions")


def integral_checks(integral: LeftIntegral) -> List[CheckResult]:
    h = integral.hopf
    ok = all(
        h.algebra.multiply(h.algebra.basis_vector(i), integral.element)
        == h.algebra.multiply(h.pi_left.column(i), integral.element)
        for i in range(h.dim)
    )
    return [
        CheckResult.of(f"ht = Π^L(h)t in {h.name}", ok),
        CheckResult.of(f"integral of {h.name} nondegenerate", integral.nondegenerate, rank=integral.frobenius.rank()),
    ]


__all__ = [
    "LeftIntegral",
    "WeakBialgebra",
    "WeakHopfAlgebra",
    "as_weak_hopf",
    "build_groupoid_wha",
    "candidate_vectors",
    "find_left_integral",
    "frobenius_matrix",
    "integral_checks",
    "left_integrals",
    "pure_sparse",
    "tensor_multiply",
    "weak_hopf_from",
]
