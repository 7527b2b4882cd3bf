"""Finite-dimensional algebras, extensions, hom spaces and tensor products over a subring."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from check_types import HomConstraint, StructureError
from linalg import (
    Field,
    Matrix,
    QuotientSpace,
    Scalar,
    SparseVector,
    Subspace,
    Vector,
    basis_vector,
    dense,
    kernel_of_equations,
    sparse,
    tensor_quotient,
)

LOGGER = logging.getLogger(__name__)

Product = Tuple[Tuple[int, Scalar], ...]
ElementLike = Union[str, Sequence[Scalar], Dict[int, Scalar]]

_TERM_SPLIT = re.compile(r"\s+([+-])\s+")
_TIGHT_TERM_SPLIT = re.compile(r"\s*([+-])\s*")


@dataclass(frozen=True)
class FDAlgebra:
    """Unital algebra given by sparse structure constants ``table[i][j] = b_i·b_j``."""

    field: Field
    labels: Tuple[str, ...]
    table: Tuple[Tuple[Product, ...], ...]
    unit: Vector
    name: str = "A"

    def __post_init__(self) -> None:
        size = len(self.labels)
        if len(set(self.labels)) != size:
            raise StructureError(f"{self.name}: basis labels must be distinct")
        if len(self.table) != size or any(len(row) != size for row in self.table):
            raise StructureError(f"{self.name}: multiplication table must be {size}x{size}")
        if len(self.unit) != size:
            raise StructureError(f"{self.name}: unit vector must have {size} entries")
        for row in self.table:
            for entry in row:
                for k, _ in entry:
                    if not 0 <= k < size:
                        raise StructureError(f"{self.name}: structure constant index {k} out of range")

    # construction -----------------------------------------------------------------

    @classmethod
    def from_structure_constants(
        cls,
        field: Field,
        labels: Sequence[str],
        constants: Iterable[Tuple[int, int, int, Scalar]],
        unit: Sequence[Scalar],
        name: str = "A",
    ) -> "FDAlgebra":
        """Build from quadruples ``(i, j, k, c)``; omitted constants are zero."""

        size = len(labels)
        rows: List[List[SparseVector]] = [[{} for _ in range(size)] for _ in range(size)]
        for i, j, k, value in constants:
            for index in (i, j, k):
                if not 0 <= index < size:
                    raise StructureError(f"{name}: structure constant index {index} out of range")
            cell = rows[i][j]
            cell[k] = field.normalize(cell.get(k, 0) + field(value))
        return cls.from_products(field, labels, lambda i, j: rows[i][j], unit, name)

    @classmethod
    def from_products(
        cls,
        field: Field,
        labels: Sequence[str],
        products: Callable[[int, int], Union[Sequence[Scalar], Dict[int, Scalar]]],
        unit: Sequence[Scalar],
        name: str = "A",
    ) -> "FDAlgebra":
        size = len(labels)
        table = tuple(
            tuple(tuple(sorted(sparse(field, products(i, j)).items())) for j in range(size))
            for i in range(size)
        )
        return cls(field, tuple(labels), table, dense(field, sparse(field, unit), size), name)

    # basic access -----------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_vector(self, index: int) -> Vector:
        return basis_vector(self.field, self.dim, index)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError as exc:
            raise ValueError(f"{self.name} has no basis element {label!r}") from exc

    def structure_constant(self, i: int, j: int, k: int) -> Scalar:
        return dict(self.table[i][j]).get(k, self.field.zero)

    @property
    def one(self) -> Vector:
        return self.unit

    # multiplication ---------------------------------------------------------------

    def multiply_sparse(self, x: Dict[int, Scalar], y: Dict[int, Scalar]) -> SparseVector:
        out: SparseVector = {}
        for i, a in x.items():
            row = self.table[i]
            for j, b in y.items():
                ab = a * b
                for k, c in row[j]:
                    out[k] = out.get(k, 0) + ab * c
        norm = self.field.normalize
        return {k: norm(v) for k, v in out.items() if norm(v)}

    def multiply(self, x: ElementLike, y: ElementLike) -> Vector:
        product_ = self.multiply_sparse(self.as_sparse(x), self.as_sparse(y))
        return dense(self.field, product_, self.dim)

    def multiply_all(self, *elements: ElementLike) -> Vector:
        result = self.as_sparse(self.unit)
        for element in elements:
            result = self.multiply_sparse(result, self.as_sparse(element))
        return dense(self.field, result, self.dim)

    def as_sparse(self, x: ElementLike) -> SparseVector:
        if isinstance(x, str):
            x = self.element(x)
        return sparse(self.field, x)

    @cached_property
    def left_regular(self) -> List[Matrix]:
        """``L_{b_i}`` for every basis element."""

        return [
            Matrix.from_columns(self.field, self.dim, [dict(self.table[i][j]) for j in range(self.dim)])
            for i in range(self.dim)
        ]

    @cached_property
    def right_regular(self) -> List[Matrix]:
        return [
            Matrix.from_columns(self.field, self.dim, [dict(self.table[j][i]) for j in range(self.dim)])
            for i in range(self.dim)
        ]

    def left_matrix(self, x: ElementLike) -> Matrix:
        return _combine(self.field, self.dim, self.left_regular, self.as_sparse(x))

    def right_matrix(self, x: ElementLike) -> Matrix:
        return _combine(self.field, self.dim, self.right_regular, self.as_sparse(x))

    # laws ---------------------------------------------------------------------------

    def check_laws(self) -> None:
        """Raise ``StructureError`` on the first associativity or unit failure."""

        basis = [{i: self.field.one} for i in range(self.dim)]
        products = [[dict(self.table[i][j]) for j in range(self.dim)] for i in range(self.dim)]
        for i, j, k in product(range(self.dim), repeat=3):
            left = self.multiply_sparse(products[i][j], basis[k])
            right = self.multiply_sparse(basis[i], products[j][k])
            if left != right:
                raise StructureError(
                    f"{self.name}: ({self.labels[i]}*{self.labels[j]})*{self.labels[k]} "
                    f"!= {self.labels[i]}*({self.labels[j]}*{self.labels[k]})"
                )
        unit = self.as_sparse(self.unit)
        for i in range(self.dim):
            if self.multiply_sparse(unit, basis[i]) != basis[i] or self.multiply_sparse(basis[i], unit) != basis[i]:
                raise StructureError(f"{self.name}: unit is not an identity for {self.labels[i]}")

    def validated(self) -> "FDAlgebra":
        self.check_laws()
        return self

    def is_commutative(self) -> bool:
        return all(self.table[i][j] == self.table[j][i] for i in range(self.dim) for j in range(i))

    # derived algebras ----------------------------------------------------------------

    def opposite(self, name: Optional[str] = None) -> "FDAlgebra":
        table = tuple(tuple(self.table[j][i] for j in range(self.dim)) for i in range(self.dim))
        return FDAlgebra(self.field, self.labels, table, self.unit, name or f"{self.name}^op")

    def tensor(self, other: "FDAlgebra", name: Optional[str] = None) -> "FDAlgebra":
        """``self ⊗ other`` with factorwise product; index of ``a_i ⊗ b_j`` is ``i * other.dim + j``."""

        labels = [f"{a}⊗{b}" for a in self.labels for b in other.labels]
        m = other.dim

        def products(p: int, q: int) -> SparseVector:
            (i, j), (k, l) = divmod(p, m), divmod(q, m)
            out: SparseVector = {}
            for u, c in self.table[i][k]:
                for v, d in other.table[j][l]:
                    out[u * m + v] = out.get(u * m + v, 0) + c * d
            return out

        unit = {
            i * m + j: a * b
            for i, a in sparse(self.field, self.unit).items()
            for j, b in sparse(self.field, other.unit).items()
        }
        return FDAlgebra.from_products(self.field, labels, products, unit, name or f"{self.name}⊗{other.name}")

    def subalgebra(self, vectors: Iterable[ElementLike], name: str = "B") -> "Extension":
        """The subalgebra spanned by ``vectors``, validated for unit and closure."""

        space = Subspace.span(self.field, self.dim, [self.as_sparse(v) for v in vectors])
        if not space.contains(self.unit):
            raise StructureError(f"{name} does not contain the unit of {self.name}")
        basis = space.vectors()
        sparse_basis = [sparse(self.field, v) for v in basis]
        rows: List[List[Vector]] = []
        for p, x in enumerate(sparse_basis):
            row: List[Vector] = []
            for q, y in enumerate(sparse_basis):
                value = self.multiply_sparse(x, y)
                if not space.contains(value):
                    raise StructureError(
                        f"{name} is not closed: {self.format_element(basis[p])} * "
                        f"{self.format_element(basis[q])} leaves it"
                    )
                row.append(space.coordinates(value))
            rows.append(row)
        labels = [self.format_element(v) for v in basis]
        algebra = FDAlgebra.from_products(
            self.field, labels, lambda p, q: rows[p][q], space.coordinates(self.unit), name
        )
        inclusion = Matrix.from_columns(self.field, self.dim, basis)
        return Extension(self, space, algebra, inclusion)

    # elements ---------------------------------------------------------------------

    def element(self, text: str) -> Vector:
        """Parse a label sum such as ``"e11 + 2*e22 - 1/2*e12"``; ``"e11+e22"`` works when every piece is a label."""

        text = text.strip()
        if not text:
            raise ValueError("Empty element")
        try:
            return self._parse_terms(text, _TERM_SPLIT)
        except ValueError as exc:
            if not _TIGHT_TERM_SPLIT.search(text):
                raise
            try:
                return self._parse_terms(text, _TIGHT_TERM_SPLIT)
            except ValueError:
                raise exc from None

    def _parse_terms(self, text: str, splitter: "re.Pattern[str]") -> Vector:
        sign = "+"
        if text[0] in "+-" and not text[1:2].isdigit() and text[1:2] != "/":
            sign, text = text[0], text[1:].strip()
        pieces = splitter.split(text)
        terms = [(sign, pieces[0])] + list(zip(pieces[1::2], pieces[2::2]))
        out: SparseVector = {}
        for term_sign, term in terms:
            term = term.strip()
            if "*" in term:
                coefficient_text, label = term.split("*", 1)
                coefficient = self.field(coefficient_text)
            else:
                coefficient, label = self.field.one, term
            if term_sign == "-":
                coefficient = -coefficient
            k = self.index(label.strip())
            out[k] = out.get(k, 0) + coefficient
        return dense(self.field, out, self.dim)

    def format_element(self, vector: Sequence[Scalar]) -> str:
        fmt = self.field.format
        parts: List[str] = []
        for k, value in enumerate(vector):
            if not value:
                continue
            text = fmt(value)
            parts.append(self.labels[k] if text == "1" else f"{text}*{self.labels[k]}")
        return " + ".join(parts) if parts else "0"


def _combine(field: Field, size: int, matrices: Sequence[Matrix], coefficients: Dict[int, Scalar]) -> Matrix:
    entries = [field.zero] * (size * size)
    for index, c in coefficients.items():
        for position, value in enumerate(matrices[index].entries):
            if value:
                entries[position] += c * value
    return Matrix(field, size, size, tuple(field.normalize(v) for v in entries))


# groups ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group by labelled elements and a multiplication table of indices."""

    elements: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]
    name: str = "G"

    def __post_init__(self) -> None:
        n = len(self.elements)
        if n == 0:
            raise StructureError(f"{self.name}: a group needs at least one element")
        if len(set(self.elements)) != n:
            raise StructureError(f"{self.name}: element labels must be distinct")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise StructureError(f"{self.name}: multiplication table must be {n}x{n}")
        if any(not 0 <= value < n for row in self.table for value in row):
            raise StructureError(f"{self.name}: table entries must be group elements")
        for f, g, h in product(range(n), repeat=3):
            if self.table[self.table[f][g]][h] != self.table[f][self.table[g][h]]:
                raise StructureError(
                    f"{self.name}: table is not associative at "
                    f"({self.elements[f]}, {self.elements[g]}, {self.elements[h]})"
                )
        identity = self.identity
        for f in range(n):
            if not any(self.table[f][g] == identity == self.table[g][f] for g in range(n)):
                raise StructureError(f"{self.name}: {self.elements[f]} has no inverse")

    @classmethod
    def from_labels(cls, elements: Sequence[str], rows: Sequence[Sequence[str]], name: str = "G") -> "FiniteGroup":
        position = {label: k for k, label in enumerate(elements)}
        try:
            table = tuple(tuple(position[label] for label in row) for row in rows)
        except KeyError as exc:
            raise StructureError(f"{name}: table mentions unknown element {exc.args[0]!r}") from exc
        return cls(tuple(elements), table, name)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def identity(self) -> int:
        n = len(self.elements)
        for e in range(n):
            if all(self.table[e][g] == g == self.table[g][e] for g in range(n)):
                return e
        raise StructureError(f"{self.name}: no identity element")

    def multiply(self, f: int, g: int) -> int:
        return self.table[f][g]

    def inverse(self, f: int) -> int:
        for g in range(self.order):
            if self.table[f][g] == self.identity:
                return g
        raise StructureError(f"{self.name}: {self.elements[f]} has no inverse")

    def index(self, label: str) -> int:
        return self.elements.index(label)

    def generated_by(self, generators: Sequence[int]) -> Tuple[int, ...]:
        members = {self.identity}
        frontier = list(members)
        while frontier:
            f = frontier.pop()
            for g in generators:
                h = self.table[f][g]
                if h not in members:
                    members.add(h)
                    frontier.append(h)
        return tuple(sorted(members))


def _cycle_label(perm: Sequence[int]) -> str:
    seen = set()
    cycles: List[str] = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append("(" + "".join(str(point + 1) for point in cycle) + ")")
    return "".join(cycles) or "()"


def symmetric_group(n: int) -> FiniteGroup:
    """S_n in cycle notation, composing right to left."""

    perms = list(permutations(range(n)))
    position = {perm: k for k, perm in enumerate(perms)}
    table = tuple(
        tuple(position[tuple(sigma[tau[x]] for x in range(n))] for tau in perms) for sigma in perms
    )
    return FiniteGroup(tuple(_cycle_label(p) for p in perms), table, f"S{n}")


def cyclic_group(n: int) -> FiniteGroup:
    labels = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(tuple(labels[:n]), table, f"C{n}")


def build_group_algebra(group: FiniteGroup, field: Field, name: Optional[str] = None) -> FDAlgebra:
    unit = {group.identity: field.one}
    return FDAlgebra.from_products(
        field, group.elements, lambda i, j: {group.table[i][j]: field.one}, unit, name or f"k[{group.name}]"
    )


def matrix_unit_labels(n: int) -> List[str]:
    if n < 10:
        return [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return [f"e{i + 1},{j + 1}" for i in range(n) for j in range(n)]


def build_matrix_algebra(n: int, field: Field, name: Optional[str] = None) -> FDAlgebra:
    if n < 1:
        raise ValueError("Matrix algebras need n >= 1")

    def products(p: int, q: int) -> SparseVector:
        (i, j), (k, l) = divmod(p, n), divmod(q, n)
        return {i * n + l: field.one} if j == k else {}

    unit = {i * n + i: field.one for i in range(n)}
    return FDAlgebra.from_products(field, matrix_unit_labels(n), products, unit, name or f"M{n}")


# extensions ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Extension:
    """A subalgebra inclusion ``B ⊆ A`` and the objects derived from it."""

    ambient: FDAlgebra
    sub: Subspace
    sub_algebra: FDAlgebra
    inclusion: Matrix

    @classmethod
    def from_spanning_set(cls, ambient: FDAlgebra, vectors: Iterable[ElementLike], name: str = "B") -> "Extension":
        return ambient.subalgebra(vectors, name)

    @property
    def field(self) -> Field:
        return self.ambient.field

    @property
    def n(self) -> int:
        return self.ambient.dim

    @cached_property
    def sub_vectors(self) -> List[Vector]:
        return self.inclusion.column_list()

    @cached_property
    def sub_left(self) -> List[Matrix]:
        return [self.ambient.left_matrix(b) for b in self.sub_vectors]

    @cached_property
    def sub_right(self) -> List[Matrix]:
        return [self.ambient.right_matrix(b) for b in self.sub_vectors]

    @cached_property
    def centralizer(self) -> Subspace:
        return centralizer(self)

    @cached_property
    def R(self) -> "Extension":
        """The centralizer as a subalgebra of A."""

        return self.ambient.subalgebra(self.centralizer.vectors(), "R")

    @cached_property
    def S(self) -> "HomSpaceBasis":
        return hom_space(self, HomConstraint.BIMODULE)

    @cached_property
    def E(self) -> "HomSpaceBasis":
        return hom_space(self, HomConstraint.LEFT)

    @cached_property
    def E_prime(self) -> "HomSpaceBasis":
        return hom_space(self, HomConstraint.RIGHT)

    @cached_property
    def tensor_square(self) -> "TensorOverSub":
        return tensor_over_sub(self)

    @cached_property
    def tensor_cube(self) -> "TensorOverSub":
        return tensor_over_sub(self, factors=3)

    @cached_property
    def T(self) -> "CentralTensor":
        return central_part(self.tensor_square, self)

    def dims(self) -> Dict[str, int]:
        return {
            "A": self.n,
            "B": self.sub.dim,
            "R": self.centralizer.dim,
            "S": self.S.dim,
            "E": self.E.dim,
            "A⊗_B A": self.tensor_square.dim,
            "T": self.T.dim,
        }


def centralizer(ext: Extension) -> Subspace:
    """``{a : ab = ba}`` for every basis b of B, as the kernel of stacked commutators."""

    equations: List[Vector] = []
    for left, right in zip(ext.sub_left, ext.sub_right):
        equations.extend((left - right).row_list())
    return kernel_of_equations(ext.field, ext.n, equations)


def intertwiner_space(
    field: Field,
    domain_dim: int,
    codomain_dim: int,
    pairs: Sequence[Tuple[Matrix, Matrix]],
    extra_equations: Iterable[SparseVector] = (),
) -> Subspace:
    """All maps f with ``f ∘ X = Y ∘ f`` for each ``(X, Y)``; f flattened row-major."""

    def equations() -> Iterable[SparseVector]:
        for x, y in pairs:
            x_cols = [x.sparse_column(c) for c in range(domain_dim)]
            y_rows = [{k: v for k, v in enumerate(y.row(r)) if v} for r in range(codomain_dim)]
            for r, c in product(range(codomain_dim), range(domain_dim)):
                equation: SparseVector = {}
                for k, value in x_cols[c].items():
                    equation[r * domain_dim + k] = value
                for k, value in y_rows[r].items():
                    index = k * domain_dim + c
                    equation[index] = equation.get(index, 0) - value
                yield equation
        yield from extra_equations

    LOGGER.debug("intertwiner_space: %d unknowns, %d constraints", domain_dim * codomain_dim, len(pairs))
    return kernel_of_equations(field, domain_dim * codomain_dim, equations())


def maps_algebra(field: Field, space: Subspace, size: int, name: str, prefix: Optional[str] = None) -> FDAlgebra:
    """The algebra of maps spanned by ``space`` under composition ``(fg)(a) = f(g(a))``."""

    maps = [Matrix(field, size, size, row) for row in space.vectors()]
    identity = Matrix.identity(field, size)
    if not space.contains(identity.entries):
        raise StructureError(f"{name} does not contain the identity map")
    rows: List[List[Vector]] = []
    for f in maps:
        row: List[Vector] = []
        for g in maps:
            composite = (f @ g).entries
            if not space.contains(composite):
                raise StructureError(f"{name} is not closed under composition")
            row.append(space.coordinates(composite))
        rows.append(row)
    labels = [f"{prefix or name.lower()}{k}" for k in range(len(maps))]
    return FDAlgebra.from_products(field, labels, lambda p, q: rows[p][q], space.coordinates(identity.entries), name)


@dataclass(frozen=True)
class HomSpaceBasis:
    """A space of linear maps held as flattened codomain x domain matrices.

    ``constraint`` names the B-linearity that cuts it out of End(A), when it is one of those.
    """

    constraint: Optional[HomConstraint]
    domain_dim: int
    codomain_dim: int
    space: Subspace
    name: str

    @property
    def field(self) -> Field:
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @cached_property
    def maps(self) -> List[Matrix]:
        return [Matrix(self.field, self.codomain_dim, self.domain_dim, row) for row in self.space.vectors()]

    def map_of(self, coordinates: Sequence[Scalar]) -> Matrix:
        return Matrix(self.field, self.codomain_dim, self.domain_dim, self.space.combination(coordinates))

    def coordinates(self, m: Matrix) -> Vector:
        return self.space.coordinates(m.entries)

    def contains(self, m: Matrix) -> bool:
        return self.space.contains(m.entries)

    @cached_property
    def algebra(self) -> FDAlgebra:
        if self.domain_dim != self.codomain_dim:
            raise StructureError(f"{self.name} consists of maps between different spaces")
        return maps_algebra(self.field, self.space, self.domain_dim, self.name)


def hom_space(ext: Extension, constraint: HomConstraint) -> HomSpaceBasis:
    pairs: List[Tuple[Matrix, Matrix]] = []
    if constraint in (HomConstraint.LEFT, HomConstraint.BIMODULE):
        pairs.extend((left, left) for left in ext.sub_left)
    if constraint in (HomConstraint.RIGHT, HomConstraint.BIMODULE):
        pairs.extend((right, right) for right in ext.sub_right)
    name = {HomConstraint.LEFT: "E", HomConstraint.RIGHT: "E'", HomConstraint.BIMODULE: "S"}[constraint]
    space = intertwiner_space(ext.field, ext.n, ext.n, pairs)
    return HomSpaceBasis(constraint, ext.n, ext.n, space, name)


# balanced tensor products ---------------------------------------------------------------


class BalancedTensor:
    """``X_0 ⊗_{R_1} X_1 ⊗ ... ⊗_{R_m} X_m``, built left to right as iterated quotients.

    ``joins[k]`` lists pairs ``(P, Q)``: ``P`` acts on ``X_k`` from the right,
    ``Q`` on ``X_{k+1}`` from the left, and ``(P x) ⊗ y = x ⊗ (Q y)``.
    Every quotient basis element has a pure basis tensor as representative.
    """

    def __init__(self, field: Field, dims: Sequence[int], joins: Sequence[Sequence[Tuple[Matrix, Matrix]]]) -> None:
        if len(joins) != len(dims) - 1:
            raise ValueError("One join per pair of adjacent factors is required")
        self.field = field
        self.dims = tuple(dims)
        self.stages: List[QuotientSpace] = []
        left_dim = dims[0]
        for k, join in enumerate(joins):
            pairs = []
            for left_action, right_action in join:
                if k > 0:
                    left_action = self._last_factor_action(k - 1, left_action)
                pairs.append((left_action, right_action))
            stage = tensor_quotient(field, left_dim, dims[k + 1], pairs)
            LOGGER.debug("balanced tensor stage %d: %d x %d -> %d", k, left_dim, dims[k + 1], stage.dim)
            self.stages.append(stage)
            left_dim = stage.dim

    @property
    def dim(self) -> int:
        return self.stages[-1].dim if self.stages else self.dims[0]

    @property
    def factors(self) -> int:
        return len(self.dims)

    def _last_factor_action(self, stage_index: int, action: Matrix) -> Matrix:
        """Action of ``action`` on the last factor, descended to a stage quotient."""

        stage = self.stages[stage_index]
        width = self.dims[stage_index + 1]
        columns = []
        for free in stage.free:
            head, tail = divmod(free, width)
            image = {head * width + k: value for k, value in action.sparse_column(tail).items()}
            columns.append(stage.project_sparse(image))
        return Matrix.from_columns(self.field, stage.dim, columns)

    def last_factor_action(self, action: Matrix) -> Matrix:
        if not self.stages:
            return action
        return self._last_factor_action(len(self.stages) - 1, action)

    def pure(self, *vectors: Union[Sequence[Scalar], Dict[int, Scalar]]) -> Vector:
        """Class of ``v_0 ⊗ v_1 ⊗ ...`` in quotient coordinates."""

        return dense(self.field, self.pure_sparse(*vectors), self.dim)

    def pure_sparse(self, *vectors: Union[Sequence[Scalar], Dict[int, Scalar]]) -> SparseVector:
        if len(vectors) != self.factors:
            raise ValueError(f"Expected {self.factors} tensor factors, got {len(vectors)}")
        current = sparse(self.field, vectors[0])
        for k, stage in enumerate(self.stages):
            current = self.join(k, current, vectors[k + 1])
        return current

    def join(self, stage_index: int, left: Dict[int, Scalar], right: Union[Sequence[Scalar], Dict[int, Scalar]]) -> SparseVector:
        """Project ``left ⊗ right`` through one stage (``left`` already in stage coordinates)."""

        width = self.dims[stage_index + 1]
        right_sparse = sparse(self.field, right)
        combined = {
            i * width + j: a * b for i, a in left.items() for j, b in right_sparse.items()
        }
        return self.stages[stage_index].project_sparse(combined)

    def project_terms(self, terms: Iterable[Tuple[Scalar, Sequence[Union[Sequence[Scalar], Dict[int, Scalar]]]]]) -> Vector:
        """Class of ``Σ c · (v_0 ⊗ v_1 ⊗ ...)``."""

        out: SparseVector = {}
        for coefficient, vectors in terms:
            if not coefficient:
                continue
            for k, value in self.pure_sparse(*vectors).items():
                out[k] = out.get(k, 0) + coefficient * value
        return dense(self.field, out, self.dim)

    @cached_property
    def representatives(self) -> List[Tuple[int, ...]]:
        """Basis-tensor index tuple representing each quotient basis element."""

        reps: List[Tuple[int, ...]] = [(i,) for i in range(self.dims[0])]
        for k, stage in enumerate(self.stages):
            width = self.dims[k + 1]
            reps = [reps[head] + (tail,) for head, tail in (divmod(free, width) for free in stage.free)]
        return reps

    def terms(self, vector: Sequence[Scalar]) -> List[Tuple[Tuple[int, ...], Scalar]]:
        """Pure basis-tensor representative terms of a quotient vector."""

        reps = self.representatives
        return [(reps[k], value) for k, value in enumerate(vector) if value]

    def factorwise(self, maps: Sequence[Matrix], target: Optional["BalancedTensor"] = None) -> Matrix:
        """Matrix of ``f_0 ⊗ f_1 ⊗ ...`` (assumed to descend) into ``target`` (default: self)."""

        target = target or self
        columns = []
        for rep in self.representatives:
            columns.append(target.pure_sparse(*[m.sparse_column(i) for m, i in zip(maps, rep)]))
        return Matrix.from_columns(self.field, target.dim, columns)

    def factorwise_descends(self, maps: Sequence[Matrix], target: Optional["BalancedTensor"] = None) -> bool:
        """Two-factor check that ``f_0 ⊗ f_1`` maps relations to relations."""

        if self.factors != 2:
            raise ValueError("Descent is checked for two-factor tensors only")
        target = target or self
        stage = self.stages[0]
        width = self.dims[1]
        for relation in stage.relations.vectors():
            terms = []
            for index, value in enumerate(relation):
                if value:
                    i, j = divmod(index, width)
                    terms.append((value, [maps[0].sparse_column(i), maps[1].sparse_column(j)]))
            if any(target.project_terms(terms)):
                return False
        return True


@dataclass(frozen=True)
class TensorOverSub:
    """``A ⊗_B ... ⊗_B A`` with its induced A-actions."""

    ext: Extension
    tensor: BalancedTensor

    @property
    def space(self) -> QuotientSpace:
        return self.tensor.stages[-1]

    @property
    def dim(self) -> int:
        return self.tensor.dim

    @property
    def factors(self) -> int:
        return self.tensor.factors

    def pure(self, *elements: ElementLike) -> Vector:
        return self.tensor.pure(*[self.ext.ambient.as_sparse(e) for e in elements])

    def _identities(self) -> List[Matrix]:
        return [Matrix.identity(self.ext.field, self.ext.n)] * self.factors

    def left_action(self, a: ElementLike) -> Matrix:
        maps = self._identities()
        maps[0] = self.ext.ambient.left_matrix(a)
        return self.tensor.factorwise(maps)

    def right_action(self, a: ElementLike) -> Matrix:
        maps = self._identities()
        maps[-1] = self.ext.ambient.right_matrix(a)
        return self.tensor.factorwise(maps)

    @cached_property
    def left_actions(self) -> List[Matrix]:
        return [self.left_action(self.ext.ambient.basis_vector(i)) for i in range(self.ext.n)]

    @cached_property
    def right_actions(self) -> List[Matrix]:
        return [self.right_action(self.ext.ambient.basis_vector(i)) for i in range(self.ext.n)]

    @cached_property
    def sub_left_actions(self) -> List[Matrix]:
        return [self.left_action(b) for b in self.ext.sub_vectors]

    @cached_property
    def sub_right_actions(self) -> List[Matrix]:
        return [self.right_action(b) for b in self.ext.sub_vectors]

    def actions_descend(self) -> bool:
        if self.factors != 2:
            return True
        ident = Matrix.identity(self.ext.field, self.ext.n)
        for a in range(self.ext.n):
            left = [self.ext.ambient.left_regular[a], ident]
            right = [ident, self.ext.ambient.right_regular[a]]
            if not (self.tensor.factorwise_descends(left) and self.tensor.factorwise_descends(right)):
                return False
        return True

    def bimodule_compatible(self) -> bool:
        """``(a·x)·a' = a·(x·a')`` on all basis pairs."""

        return all(
            left @ right == right @ left for left in self.left_actions for right in self.right_actions
        )


def tensor_over_sub(ext: Extension, factors: int = 2) -> TensorOverSub:
    if factors < 1:
        raise ValueError("At least one tensor factor is required")
    joins = [list(zip(ext.sub_right, ext.sub_left))] * (factors - 1)
    tensor = BalancedTensor(ext.field, [ext.n] * factors, joins)
    return TensorOverSub(ext, tensor)


@dataclass(frozen=True)
class CentralTensor:
    """``T = (A ⊗_B A)^B`` as a subspace of quotient coordinates, with the ring structure

    ``t t' = t'^1 t^1 ⊗ t^2 t'^2``.
    """

    tensor: TensorOverSub
    space: Subspace

    @property
    def ext(self) -> Extension:
        return self.tensor.ext

    @property
    def field(self) -> Field:
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    def embed(self, coordinates: Sequence[Scalar]) -> Vector:
        return self.space.combination(coordinates)

    def coordinates(self, vector: Sequence[Scalar]) -> Vector:
        return self.space.coordinates(vector)

    def contains(self, vector: Sequence[Scalar]) -> bool:
        return self.space.contains(vector)

    def terms(self, coordinates: Sequence[Scalar]) -> List[Tuple[int, int, Scalar]]:
        """Representative terms ``(u, v, c)`` meaning ``Σ c · a_u ⊗ a_v``."""

        return [(rep[0], rep[1], c) for rep, c in self.tensor.tensor.terms(self.embed(coordinates))]

    def quotient_terms(self, vector: Sequence[Scalar]) -> List[Tuple[int, int, Scalar]]:
        return [(rep[0], rep[1], c) for rep, c in self.tensor.tensor.terms(vector)]

    def multiply_quotient(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        algebra = self.ext.ambient
        out = []
        for u, v, c in self.quotient_terms(x):
            for u2, v2, d in self.quotient_terms(y):
                left = algebra.multiply_sparse({u2: d}, {u: c})
                right = algebra.multiply_sparse({v: algebra.field.one}, {v2: algebra.field.one})
                out.append((algebra.field.one, [left, right]))
        return self.tensor.tensor.project_terms(out)

    @cached_property
    def algebra(self) -> FDAlgebra:
        basis = self.space.vectors()
        rows = [[self.coordinates(self.multiply_quotient(x, y)) for y in basis] for x in basis]
        unit = self.coordinates(self.tensor.pure(self.ext.ambient.unit, self.ext.ambient.unit))
        labels = [f"t{k}" for k in range(len(basis))]
        return FDAlgebra.from_products(self.field, labels, lambda p, q: rows[p][q], unit, "T")


def central_part(t: TensorOverSub, ext: Extension) -> CentralTensor:
    equations: List[Vector] = []
    for left, right in zip(t.sub_left_actions, t.sub_right_actions):
        equations.extend((left - right).row_list())
    space = kernel_of_equations(ext.field, t.dim, equations)
    LOGGER.debug("central part: %d of %d", space.dim, t.dim)
    return CentralTensor(t, space)


__all__ = [
    "BalancedTensor",
    "CentralTensor",
    "Extension",
    "FDAlgebra",
    "FiniteGroup",
    "HomSpaceBasis",
    "TensorOverSub",
    "build_group_algebra",
    "build_matrix_algebra",
    "central_part",
    "centralizer",
    "cyclic_group",
    "hom_space",
    "intertwiner_space",
    "maps_algebra",
    "matrix_unit_labels",
    "symmetric_group",
    "tensor_over_sub",
]
