"""Symmetric separability elements, the Hopf algebroid T^op_cop and its antipode."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from algebra import Extension, FDAlgebra, central_part
from bialgebroid import LeftBialgebroid, RightBialgebroid, build_T
from check_types import CheckResult, SeparabilityError
from depth_two import Quasibase
from linalg import Matrix, Scalar, SparseVector, Subspace, Vector, add_into, dense, solve, vstack

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SymSepElement:
    """``e = e^1 ⊗ e^2`` in ``B ⊗_k B`` (index ``i * dim B + j``) with the kernel of alternatives."""

    algebra: FDAlgebra
    vector: Vector
    alternatives: Subspace

    def terms(self) -> List[Tuple[int, int, Scalar]]:
        m = self.algebra.dim
        return [(index // m, index % m, value) for index, value in enumerate(self.vector) if value]

    def alternative(self, index: int) -> "SymSepElement":
        """Another symmetric separability element: ``e`` plus a kernel basis vector."""

        shift = self.alternatives.vectors()[index]
        norm = self.algebra.field.normalize
        vector = tuple(norm(a + b) for a, b in zip(self.vector, shift))
        return SymSepElement(self.algebra, vector, self.alternatives)

    def format(self) -> str:
        fmt = self.algebra.field.format
        labels = self.algebra.labels
        parts = []
        for i, j, value in self.terms():
            text = fmt(value)
            prefix = "" if text == "1" else f"{text}*"
            parts.append(f"{prefix}({labels[i]})⊗({labels[j]})")
        return " + ".join(parts) if parts else "0"


def separability_equations(b: FDAlgebra) -> Tuple[Matrix, Matrix]:
    """Stacked linear conditions on e and their right-hand side.

    Rows encode ``be = eb``, ``e^1 b ⊗ e^2 = e^1 ⊗ b e^2``, ``e^1 e^2 = 1`` and ``e^2 e^1 = 1``.
    """

    field_ = b.field
    m = b.dim
    ident = Matrix.identity(field_, m)
    blocks: List[Matrix] = []
    for k in range(m):
        basis = b.basis_vector(k)
        left, right = b.left_matrix(basis), b.right_matrix(basis)
        blocks.append(left.kron(ident) - ident.kron(right))
        blocks.append(right.kron(ident) - ident.kron(left))
    homogeneous_rows = sum(block.rows for block in blocks)
    multiplication = Matrix.from_columns(field_, m, [dict(b.table[i][j]) for i in range(m) for j in range(m)])
    flipped = Matrix.from_columns(field_, m, [dict(b.table[j][i]) for i in range(m) for j in range(m)])
    blocks.extend([multiplication, flipped])
    rhs = [field_.zero] * homogeneous_rows + list(b.unit) + list(b.unit)
    return vstack(*blocks), Matrix.from_columns(field_, len(rhs), [rhs])


def find_sym_sep_element(b: FDAlgebra) -> Optional[SymSepElement]:
    """A symmetric separability element of B, or ``None`` when B is not Kanzaki separable."""

    system, rhs = separability_equations(b)
    LOGGER.debug("separability system for %s: %d x %d", b.name, system.rows, system.cols)
    solution, kernel = solve(system, rhs)
    if solution is None:
        return None
    return SymSepElement(b, solution.column(0), kernel)


def antipode_matrix(ext: Extension, e: SymSepElement) -> Matrix:
    """``τ(t) = e^1 t^2 ⊗_B t^1 e^2`` on T coordinates."""

    algebra = ext.ambient
    field_ = ext.field
    one = field_.one
    sub = ext.sub_vectors
    e_terms = [(sub[i], sub[j], w) for i, j, w in e.terms()]
    square = ext.tensor_square
    columns = []
    for k in range(ext.T.dim):
        unit = [field_.zero] * ext.T.dim
        unit[k] = one
        terms = []
        for u, v, c in ext.T.terms(unit):
            for first, second, w in e_terms:
                left = algebra.multiply(first, {v: one})
                right = algebra.multiply({u: one}, second)
                terms.append((c * w, [left, right]))
        image = square.tensor.project_terms(terms)
        if not ext.T.contains(image):
            raise SeparabilityError(f"τ({ext.T.algebra.labels[k]}) is not B-central")
        columns.append(ext.T.coordinates(image))
    return Matrix.from_columns(field_, ext.T.dim, columns)


@dataclass
class HopfAlgebroidData:
    """``T^op_cop`` over ``R^op`` with the antipode τ and the identification of ``T ⊗_{R^op} T``."""

    ext: Extension
    right: RightBialgebroid
    separability: SymSepElement
    antipode: Matrix
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def bialgebroid(self) -> LeftBialgebroid:
        return self.right.as_left

    @cached_property
    def cube_central(self) -> Subspace:
        """``(A ⊗_B A ⊗_B A)^B`` in cube quotient coordinates."""

        return central_part(self.ext.tensor_cube, self.ext).space

    @cached_property
    def cube_map(self) -> Matrix:
        """``t ⊗ t' -> t'^1 ⊗ t'^2 t^1 ⊗ t^2`` from ``T ⊗_{R^op} T`` into ``A ⊗_B A ⊗_B A``."""

        ext = self.ext
        algebra = ext.ambient
        one = ext.field.one
        cube = ext.tensor_cube
        t_terms = [ext.T.terms(_unit(ext, k)) for k in range(ext.T.dim)]
        columns = []
        for p, q in self.right.opposite_tensor.representatives:
            terms = []
            for u, v, c in t_terms[p]:
                for u2, v2, d in t_terms[q]:
                    middle = algebra.multiply_sparse({v2: one}, {u: one})
                    if middle:
                        terms.append((c * d, [{u2: one}, middle, {v: one}]))
            columns.append(cube.tensor.project_terms(terms))
        return Matrix.from_columns(ext.field, cube.dim, columns)

    def tau(self, t: Sequence[Scalar]) -> Vector:
        return self.antipode.apply(t)


def _unit(ext: Extension, index: int) -> Vector:
    out = [ext.field.zero] * ext.T.dim
    out[index] = ext.field.one
    return tuple(out)


def build_T_op_cop(
    ext: Extension,
    qbs: Tuple[Quasibase, Quasibase],
    e: Optional[SymSepElement],
    right: Optional[RightBialgebroid] = None,
) -> HopfAlgebroidData:
    left_qb, right_qb = qbs
    if e is None:
        raise SeparabilityError(f"{ext.sub_algebra.name} has no symmetric separability element")
    right = right or build_T(ext, left_qb, right_qb)
    data = HopfAlgebroidData(ext, right, e, antipode_matrix(ext, e))
    data.checks.extend(right.axioms())
    data.checks.extend(check_cube_identification(data))
    return data


def antipode_tau(data: HopfAlgebroidData, t: Sequence[Scalar]) -> Vector:
    return data.tau(t)


def check_cube_identification(data: HopfAlgebroidData) -> List[CheckResult]:
    """The identification of ``T ⊗_{R^op} T`` with ``(A ⊗_B A ⊗_B A)^B`` and its R^op-linearity."""

    ext = data.ext
    left = data.bialgebroid
    phi = data.cube_map
    cube = ext.tensor_cube
    central = data.cube_central
    bijective = phi.rank() == left.tensor.dim == central.dim and all(
        central.contains(phi.column(k)) for k in range(phi.cols)
    )
    ident = Matrix.identity(ext.field, ext.T.dim)
    intertwines = True
    for k, r in enumerate(ext.R.sub_vectors):
        source_side = left.tensor.factorwise([left.total.left_matrix(left.source.column(k)), ident])
        target_side = left.tensor.factorwise([ident, left.total.left_matrix(left.target.column(k))])
        if phi @ source_side != cube.right_action(r) @ phi or phi @ target_side != cube.left_action(r) @ phi:
            intertwines = False
            break
    coproduct_image = phi @ left.coproduct
    expected = []
    one = ext.field.one
    for k in range(ext.T.dim):
        expected.append(
            cube.tensor.project_terms(
                [(c, [{u: one}, ext.ambient.unit, {v: one}]) for u, v, c in ext.T.terms(_unit(ext, k))]
            )
        )
    coproduct_ok = all(coproduct_image.column(k) == expected[k] for k in range(ext.T.dim))
    dims = {"T⊗_R^op T": left.tensor.dim, "(A⊗_B A⊗_B A)^B": central.dim}
    return [
        CheckResult.of("T⊗_R^op T ≅ (A⊗_B A⊗_B A)^B", bijective, **dims),
        CheckResult.of("identification is R^op-bilinear", intertwines),
        CheckResult.of("Δ^op(t) is t^1 ⊗ 1 ⊗ t^2", coproduct_ok),
    ]


def check_hopf_algebroid_axioms(data: HopfAlgebroidData) -> List[CheckResult]:
    """τ anti-multiplicative and involutive, ``τ ∘ t_L = s_L`` and the two coproduct identities."""

    ext = data.ext
    left = data.bialgebroid
    total = left.total
    tau = data.antipode
    one = ext.field.one
    t_dim = ext.T.dim
    phi = data.cube_map
    results: List[CheckResult] = []

    results.append(CheckResult.of("τ is an involution", (tau @ tau).is_identity()))
    anti = all(
        tau.apply(total.multiply(total.basis_vector(x), total.basis_vector(y)))
        == total.multiply(tau.column(y), tau.column(x))
        for x in range(t_dim)
        for y in range(t_dim)
    )
    results.append(CheckResult.of("τ is anti-multiplicative", anti))
    results.append(CheckResult.of("τ ∘ t_L = s_L", tau @ left.target == left.source))
    results.append(CheckResult.of("τ(1⊗1) = 1⊗1", tau.apply(total.unit) == total.unit))

    delta = left.coproduct
    terms = [left.tensor.terms(delta.column(k)) for k in range(t_dim)]

    def coproduct_terms(vector: Sequence[Scalar]) -> List[Tuple[Tuple[int, ...], Scalar]]:
        return left.tensor.terms(delta.apply(vector))

    second_ok = True
    third_ok = True
    for k in range(t_dim):
        lhs2: List = []
        lhs3: List = []
        for (x, y), c in terms[k]:
            for (z, w), d in coproduct_terms(tau.column(y)):
                right = total.multiply_sparse({w: one}, {x: one})
                if right:
                    lhs2.append((c * d, [{z: one}, right]))
            for (z, w), d in coproduct_terms(tau.column(x)):
                first = total.multiply_sparse({z: one}, {y: one})
                if first:
                    lhs3.append((c * d, [first, {w: one}]))
        image2 = phi.apply(left.tensor.project_terms(lhs2))
        image3 = phi.apply(left.tensor.project_terms(lhs3))
        if image2 != phi.apply(left.tensor.pure(tau.column(k), total.unit)):
            second_ok = False
        if image3 != phi.apply(left.tensor.pure(total.unit, tau.column(k))):
            third_ok = False
    results.append(CheckResult.of("τ^-1(t_(2))_(1) ⊗ τ^-1(t_(2))_(2) t_(1) = τ^-1(t) ⊗ 1", second_ok))
    results.append(CheckResult.of("τ(t_(1))_(1) t_(2) ⊗ τ(t_(1))_(2) = 1 ⊗ τ(t)", third_ok))
    return results


def separability_checks(e: SymSepElement) -> List[CheckResult]:
    """Re-verify the three defining identities of a symmetric separability element."""

    b = e.algebra
    field_ = b.field
    one = field_.one
    terms = e.terms()
    m = b.dim

    def tensor(pairs) -> Vector:
        out: SparseVector = {}
        for left, right, c in pairs:
            for i, x in left.items():
                for j, y in right.items():
                    out[i * m + j] = out.get(i * m + j, 0) + c * x * y
        return dense(field_, out, m * m)

    central = balanced = True
    for k in range(m):
        basis = {k: one}
        central = central and tensor(
            [(b.multiply_sparse(basis, {i: one}), {j: one}, c) for i, j, c in terms]
        ) == tensor([({i: one}, b.multiply_sparse({j: one}, basis), c) for i, j, c in terms])
        balanced = balanced and tensor(
            [(b.multiply_sparse({i: one}, basis), {j: one}, c) for i, j, c in terms]
        ) == tensor([({i: one}, b.multiply_sparse(basis, {j: one}), c) for i, j, c in terms])
    forward: SparseVector = {}
    backward: SparseVector = {}
    for i, j, c in terms:
        add_into(forward, b.multiply_sparse({i: one}, {j: one}), c)
        add_into(backward, b.multiply_sparse({j: one}, {i: one}), c)
    unital = dense(field_, forward, m) == b.unit == dense(field_, backward, m)
    return [
        CheckResult.of("separability element commutes with B", central),
        CheckResult.of("separability element is symmetric", balanced),
        CheckResult.of("e^1 e^2 = 1 = e^2 e^1", unital),
    ]


__all__ = [
    "HopfAlgebroidData",
    "SymSepElement",
    "antipode_matrix",
    "antipode_tau",
    "build_T_op_cop",
    "check_cube_identification",
    "check_hopf_algebroid_axioms",
    "find_sym_sep_element",
    "separability_checks",
    "separability_equations",
]
