"""Depth-two quasibases, balancedness and the invariant subring."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from algebra import Extension, intertwiner_space
from check_types import NotDepthTwoError, Side
from linalg import Matrix, Subspace, Vector, kernel_of_equations, rank_factorization, solve

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Quasibase:
    """Paired elements of T and S witnessing depth two on one side.

    Left: ``a ⊗ a' = Σ_i t_i β_i(a) a'``. Right: ``a ⊗ a' = Σ_j a γ_j(a') u_j``.
    Pairs hold (T coordinates, S coordinates): ``(t_i, β_i)`` or ``(u_j, γ_j)``.
    """

    side: Side
    pairs: Tuple[Tuple[Vector, Vector], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def t_elements(self) -> List[Vector]:
        return [t for t, _ in self.pairs]

    def s_elements(self) -> List[Vector]:
        return [s for _, s in self.pairs]


class _Solver:
    """Shared tables for the quasibase linear systems of one extension."""

    def __init__(self, ext: Extension) -> None:
        self.ext = ext
        self.square = ext.tensor_square
        self.t_basis = ext.T.space.vectors()
        self.s_maps = ext.S.maps

    def acted(self, actions: Sequence[Matrix]) -> List[List[Vector]]:
        """``actions[m]`` applied to every T basis element."""

        return [[action.apply(t) for t in self.t_basis] for action in actions]

    @staticmethod
    def combine(images: List[List[Vector]], coefficients: Sequence[Any], p: int, size: int, field) -> List[Any]:
        out = [field.zero] * size
        for m, c in enumerate(coefficients):
            if not c:
                continue
            for k, value in enumerate(images[m][p]):
                if value:
                    out[k] += c * value
        return [field.normalize(v) for v in out]


def find_left_quasibase(ext: Extension) -> Optional[Quasibase]:
    """Solve ``a ⊗ 1 = Σ t_i β_i(a)`` for X = Σ t_i ⊗ β_i in T ⊗ S.

    Right multiplication by a' then gives the identity on every pair.
    """

    solver = _Solver(ext)
    field = ext.field
    n, q = ext.n, solver.square.dim
    t_dim, s_dim = len(solver.t_basis), len(solver.s_maps)
    if not t_dim or not s_dim:
        return None
    moved = solver.acted(solver.square.right_actions)
    columns: List[List[Any]] = []
    for p in range(t_dim):
        for sigma in solver.s_maps:
            column: List[Any] = []
            for c in range(n):
                column.extend(solver.combine(moved, sigma.column(c), p, q, field))
            columns.append(column)
    rhs: List[Any] = []
    for c in range(n):
        rhs.extend(solver.square.pure(ext.ambient.basis_vector(c), ext.ambient.unit))
    LOGGER.debug("left quasibase system: %d equations, %d unknowns", n * q, len(columns))
    system = Matrix.from_columns(field, n * q, columns)
    solution, _ = solve(system, Matrix.from_columns(field, n * q, [rhs]))
    if solution is None:
        return None
    x = Matrix(field, t_dim, s_dim, solution.entries)
    c_part, r_part = rank_factorization(x)
    pairs = tuple((c_part.column(k), r_part.row(k)) for k in range(r_part.rows))
    return Quasibase(Side.LEFT, pairs)


def find_right_quasibase(ext: Extension) -> Optional[Quasibase]:
    """Solve ``1 ⊗ a' = Σ γ_j(a') u_j`` for Y = Σ γ_j ⊗ u_j in S ⊗ T."""

    solver = _Solver(ext)
    field = ext.field
    n, q = ext.n, solver.square.dim
    t_dim, s_dim = len(solver.t_basis), len(solver.s_maps)
    if not t_dim or not s_dim:
        return None
    moved = solver.acted(solver.square.left_actions)
    columns: List[List[Any]] = []
    for sigma in solver.s_maps:
        for p in range(t_dim):
            column: List[Any] = []
            for c in range(n):
                column.extend(solver.combine(moved, sigma.column(c), p, q, field))
            columns.append(column)
    rhs: List[Any] = []
    for c in range(n):
        rhs.extend(solver.square.pure(ext.ambient.unit, ext.ambient.basis_vector(c)))
    LOGGER.debug("right quasibase system: %d equations, %d unknowns", n * q, len(columns))
    system = Matrix.from_columns(field, n * q, columns)
    solution, _ = solve(system, Matrix.from_columns(field, n * q, [rhs]))
    if solution is None:
        return None
    y = Matrix(field, s_dim, t_dim, solution.entries)
    c_part, r_part = rank_factorization(y)
    pairs = tuple((r_part.row(k), c_part.column(k)) for k in range(r_part.rows))
    return Quasibase(Side.RIGHT, pairs)


def verify_quasibase(ext: Extension, qb: Quasibase) -> bool:
    """Re-substitute the witness on every basis pair ``(a, a')``."""

    square = ext.tensor_square
    field = ext.field
    algebra = ext.ambient
    if any(len(t) != ext.T.dim or len(s) != ext.S.dim for t, s in qb.pairs):
        return False
    actions = square.right_actions if qb.side is Side.LEFT else square.left_actions
    elements = []
    for t_coords, s_coords in qb.pairs:
        t = ext.T.embed(t_coords)
        elements.append(([action.apply(t) for action in actions], ext.S.map_of(s_coords)))
    for c in range(ext.n):
        for d in range(ext.n):
            expected = square.pure(algebra.basis_vector(c), algebra.basis_vector(d))
            total = [field.zero] * square.dim
            for moved, s in elements:
                if qb.side is Side.LEFT:
                    y = algebra.multiply(s.column(c), algebra.basis_vector(d))
                else:
                    y = algebra.multiply(algebra.basis_vector(c), s.column(d))
                for m, coefficient in enumerate(y):
                    if coefficient:
                        total = [a + coefficient * b for a, b in zip(total, moved[m])]
            if tuple(field.normalize(v) for v in total) != expected:
                return False
    return True


def require_quasibases(ext: Extension) -> Tuple[Quasibase, Quasibase]:
    left = find_left_quasibase(ext)
    right = find_right_quasibase(ext)
    if left is None or right is None:
        missing = " and ".join(side for side, qb in (("left", left), ("right", right)) if qb is None)
        raise NotDepthTwoError(f"{ext.sub_algebra.name} ⊆ {ext.ambient.name} has no {missing} D2 quasibase")
    return left, right


def balanced_commutant(ext: Extension) -> Subspace:
    """Linear endomorphisms of A commuting with every right-B-linear endomorphism."""

    pairs = [(g, g) for g in ext.E_prime.maps]
    return intertwiner_space(ext.field, ext.n, ext.n, pairs)


def is_balanced(ext: Extension) -> bool:
    right_multiplications = Subspace.span(ext.field, ext.n * ext.n, [m.entries for m in ext.sub_right])
    return balanced_commutant(ext).is_subspace_of(right_multiplications)


def invariant_subring(ext: Extension) -> Subspace:
    """``A^S = {a : α(a) = α(1) a}`` for every basis α of S."""

    algebra = ext.ambient
    equations: List[Vector] = []
    for alpha in ext.S.maps:
        shifted = alpha - algebra.left_matrix(alpha.apply(algebra.unit))
        equations.extend(shifted.row_list())
    return kernel_of_equations(ext.field, ext.n, equations)


@dataclass
class D2Report:
    """Depth-two verdicts and the dimensions of the derived objects."""

    left_d2: bool
    right_d2: bool
    left: Optional[Quasibase]
    right: Optional[Quasibase]
    dims: Dict[str, int] = field(default_factory=dict)
    balanced: bool = False
    invariants_equal_B: bool = False
    witnesses_verified: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "left_d2": self.left_d2,
            "right_d2": self.right_d2,
            "left_quasibase_size": self.left.size if self.left else None,
            "right_quasibase_size": self.right.size if self.right else None,
            "dims": dict(self.dims),
            "balanced": self.balanced,
            "invariants_equal_B": self.invariants_equal_B,
            "witnesses_verified": self.witnesses_verified,
        }


def analyze_depth_two(ext: Extension) -> D2Report:
    left = find_left_quasibase(ext)
    right = find_right_quasibase(ext)
    verified = all(verify_quasibase(ext, qb) for qb in (left, right) if qb is not None)
    invariants = invariant_subring(ext)
    dims = ext.dims()
    dims["E'"] = ext.E_prime.dim
    dims["A^S"] = invariants.dim
    return D2Report(
        left_d2=left is not None,
        right_d2=right is not None,
        left=left,
        right=right,
        dims=dims,
        balanced=is_balanced(ext),
        invariants_equal_B=invariants == ext.sub,
        witnesses_verified=verified,
    )


__all__ = [
    "D2Report",
    "Quasibase",
    "analyze_depth_two",
    "balanced_commutant",
    "find_left_quasibase",
    "find_right_quasibase",
    "invariant_subring",
    "is_balanced",
    "require_quasibases",
    "verify_quasibase",
]
