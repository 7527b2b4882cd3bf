"""Exact linear algebra over the rationals and prime fields."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import product
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import gmpy2

LOGGER = logging.getLogger(__name__)

Scalar = Any
Vector = Tuple[Scalar, ...]
SparseVector = Dict[int, Scalar]
VectorLike = Union[Sequence[Scalar], Mapping[int, Scalar]]


class FieldKind(str, Enum):
    """Supported ground fields."""

    RATIONAL = "rational"
    PRIME = "prime"


@dataclass(frozen=True)
class Field:
    """The ground field: ``mpq`` rationals or residues modulo a prime."""

    kind: FieldKind = FieldKind.RATIONAL
    modulus: int = 0

    def __post_init__(self) -> None:
        if self.kind is FieldKind.PRIME:
            if self.modulus < 2 or not gmpy2.is_prime(self.modulus):
                raise ValueError(f"Modulus {self.modulus} is not prime")
        elif self.modulus:
            raise ValueError("Rational fields carry no modulus")

    @classmethod
    def rational(cls) -> "Field":
        return cls(FieldKind.RATIONAL, 0)

    @classmethod
    def prime(cls, modulus: int) -> "Field":
        return cls(FieldKind.PRIME, int(modulus))

    @property
    def is_prime(self) -> bool:
        return self.kind is FieldKind.PRIME

    @property
    def characteristic(self) -> int:
        return self.modulus if self.is_prime else 0

    @property
    def zero(self) -> Scalar:
        return gmpy2.mpz(0) if self.is_prime else gmpy2.mpq(0)

    @property
    def one(self) -> Scalar:
        return gmpy2.mpz(1) if self.is_prime else gmpy2.mpq(1)

    def __call__(self, value: Any) -> Scalar:
        """Parse an int, a ``"p/q"`` string or an ``mpq`` into a field element."""

        if isinstance(value, bool):
            raise ValueError(f"Not a scalar: {value!r}")
        try:
            rational = gmpy2.mpq(value.strip() if isinstance(value, str) else value)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"Not a scalar: {value!r}") from exc
        if not self.is_prime:
            return rational
        denominator = gmpy2.mpz(rational.denominator)
        if denominator % self.modulus == 0:
            raise ValueError(f"{value!r} has no residue modulo {self.modulus}")
        numerator = gmpy2.mpz(rational.numerator) % self.modulus
        return numerator * gmpy2.invert(denominator, self.modulus) % self.modulus

    def normalize(self, value: Scalar) -> Scalar:
        if self.is_prime:
            return gmpy2.mpz(value) % self.modulus
        return gmpy2.mpq(value)

    def inv(self, value: Scalar) -> Scalar:
        if not value:
            raise ZeroDivisionError("Inverse of zero")
        if self.is_prime:
            return gmpy2.invert(value, self.modulus)
        return 1 / gmpy2.mpq(value)

    def format(self, value: Scalar) -> str:
        return str(int(value)) if self.is_prime else str(value)

    def describe(self) -> str:
        return f"F_{self.modulus}" if self.is_prime else "Q"

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"kind": self.kind.value}
        if self.is_prime:
            payload["modulus"] = self.modulus
        return payload


QQ = Field.rational()


def sparse(field: Field, vector: VectorLike) -> SparseVector:
    if isinstance(vector, Mapping):
        items = vector.items()
    else:
        items = enumerate(vector)
    out: SparseVector = {}
    for index, value in items:
        value = field.normalize(value)
        if value:
            out[int(index)] = value
    return out


def dense(field: Field, vector: Mapping[int, Scalar], length: int) -> Vector:
    zero = field.zero
    return tuple(field.normalize(vector.get(index, zero)) for index in range(length))


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of field elements."""

    field: Field
    rows: int
    cols: int
    entries: Tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("Matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"Expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    # construction -----------------------------------------------------------------

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: Field, size: int) -> "Matrix":
        entries = [field.zero] * (size * size)
        for index in range(size):
            entries[index * size + index] = field.one
        return cls(field, size, size, tuple(entries))

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[Any]], cols: Optional[int] = None) -> "Matrix":
        width = len(rows[0]) if rows else (cols or 0)
        entries: List[Scalar] = []
        for row in rows:
            if len(row) != width:
                raise ValueError("Ragged rows")
            entries.extend(field(value) for value in row)
        return cls(field, len(rows), width, tuple(entries))

    @classmethod
    def from_columns(cls, field: Field, rows: int, columns: Sequence[VectorLike]) -> "Matrix":
        """Build a matrix whose j-th column is ``columns[j]`` (dense or sparse)."""

        entries = [field.zero] * (rows * len(columns))
        width = len(columns)
        for j, column in enumerate(columns):
            for i, value in sparse(field, column).items():
                if i >= rows:
                    raise ValueError(f"Column entry {i} outside {rows} rows")
                entries[i * width + j] = value
        return cls(field, rows, width, tuple(entries))

    @classmethod
    def from_row_vectors(cls, field: Field, cols: int, vectors: Sequence[VectorLike]) -> "Matrix":
        entries: List[Scalar] = []
        for vector in vectors:
            row = [field.zero] * cols
            for i, value in sparse(field, vector).items():
                row[i] = value
            entries.extend(row)
        return cls(field, len(vectors), cols, tuple(entries))

    # access ------------------------------------------------------------------------

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j :: self.cols] if self.cols else ()

    def sparse_column(self, j: int) -> SparseVector:
        return {i: value for i, value in enumerate(self.column(j)) if value}

    def row_list(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def column_list(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.field, self.rows)

    def select_columns(self, indices: Sequence[int]) -> "Matrix":
        return Matrix.from_columns(self.field, self.rows, [self.column(j) for j in indices])

    def select_rows(self, indices: Sequence[int]) -> "Matrix":
        entries: List[Scalar] = []
        for i in indices:
            entries.extend(self.row(i))
        return Matrix(self.field, len(indices), self.cols, tuple(entries))

    # arithmetic --------------------------------------------------------------------

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        norm = self.field.normalize
        return Matrix(
            self.field, self.rows, self.cols, tuple(norm(a + b) for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        norm = self.field.normalize
        return Matrix(
            self.field, self.rows, self.cols, tuple(norm(a - b) for a, b in zip(self.entries, other.entries))
        )

    def scale(self, factor: Scalar) -> "Matrix":
        norm = self.field.normalize
        return Matrix(self.field, self.rows, self.cols, tuple(norm(factor * a) for a in self.entries))

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        norm = self.field.normalize
        zero = self.field.zero
        other_rows = [other.row(k) for k in range(other.rows)]
        entries: List[Scalar] = []
        for i in range(self.rows):
            acc = [zero] * other.cols
            for k, a in enumerate(self.row(i)):
                if not a:
                    continue
                for j, b in enumerate(other_rows[k]):
                    if b:
                        acc[j] += a * b
            entries.extend(norm(value) for value in acc)
        return Matrix(self.field, self.rows, other.cols, tuple(entries))

    def apply(self, vector: VectorLike) -> Vector:
        """Return ``self · vector`` as a dense tuple."""

        entries = sparse(self.field, vector)
        acc = [self.field.zero] * self.rows
        for k, value in entries.items():
            if k >= self.cols:
                raise ValueError(f"Vector index {k} outside {self.cols} columns")
            for i in range(self.rows):
                a = self.entries[i * self.cols + k]
                if a:
                    acc[i] += a * value
        norm = self.field.normalize
        return tuple(norm(value) for value in acc)

    def transpose(self) -> "Matrix":
        entries = tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.field, self.cols, self.rows, entries)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def kron(self, other: "Matrix") -> "Matrix":
        norm = self.field.normalize
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        entries = [self.field.zero] * (rows * cols)
        for i, j in product(range(self.rows), range(self.cols)):
            a = self.entry(i, j)
            if not a:
                continue
            for k, l in product(range(other.rows), range(other.cols)):
                b = other.entry(k, l)
                if b:
                    entries[(i * other.rows + k) * cols + j * other.cols + l] = norm(a * b)
        return Matrix(self.field, rows, cols, tuple(entries))

    # derived spaces ----------------------------------------------------------------

    def rank(self) -> int:
        echelon = _Echelon(self.field, self.cols)
        for i in range(self.rows):
            echelon.insert(self.row(i))
        return echelon.rank

    def kernel(self) -> "Subspace":
        return kernel_of_equations(self.field, self.cols, self.row_list())

    def image(self) -> "Subspace":
        return Subspace.span(self.field, self.rows, self.column_list())

    def format(self) -> str:
        fmt = self.field.format
        return "\n".join(" ".join(fmt(value) for value in self.row(i)) for i in range(self.rows))


def hstack(*blocks: Matrix) -> Matrix:
    if not blocks:
        raise ValueError("hstack needs at least one block")
    rows = blocks[0].rows
    if any(block.rows != rows for block in blocks):
        raise ValueError("hstack blocks disagree on row count")
    entries: List[Scalar] = []
    for i in range(rows):
        for block in blocks:
            entries.extend(block.row(i))
    return Matrix(blocks[0].field, rows, sum(block.cols for block in blocks), tuple(entries))


def vstack(*blocks: Matrix) -> Matrix:
    if not blocks:
        raise ValueError("vstack needs at least one block")
    cols = blocks[0].cols
    if any(block.cols != cols for block in blocks):
        raise ValueError("vstack blocks disagree on column count")
    entries: List[Scalar] = []
    for block in blocks:
        entries.extend(block.entries)
    return Matrix(blocks[0].field, sum(block.rows for block in blocks), cols, tuple(entries))


class _Echelon:
    """Incrementally maintained reduced row-echelon form with sparse rows."""

    def __init__(self, field: Field, width: int) -> None:
        self.field = field
        self.width = width
        self.rows: Dict[int, SparseVector] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector: VectorLike) -> SparseVector:
        norm = self.field.normalize
        residual = sparse(self.field, vector)
        # rows are fully reduced, so eliminating one pivot never creates another
        for pivot in [col for col in residual if col in self.rows]:
            coefficient = residual.get(pivot)
            if not coefficient:
                continue
            for col, value in self.rows[pivot].items():
                updated = norm(residual.get(col, 0) - coefficient * value)
                if updated:
                    residual[col] = updated
                else:
                    residual.pop(col, None)
        return residual

    def insert(self, vector: VectorLike) -> bool:
        residual = self.reduce(vector)
        if not residual:
            return False
        norm = self.field.normalize
        pivot = min(residual)
        scale = self.field.inv(residual[pivot])
        residual = {col: norm(value * scale) for col, value in residual.items()}
        for row in self.rows.values():
            coefficient = row.get(pivot)
            if not coefficient:
                continue
            for col, value in residual.items():
                updated = norm(row.get(col, 0) - coefficient * value)
                if updated:
                    row[col] = updated
                else:
                    row.pop(col, None)
        self.rows[pivot] = residual
        return True

    def pivots(self) -> Tuple[int, ...]:
        return tuple(sorted(self.rows))

    def to_matrix(self) -> Matrix:
        return Matrix.from_row_vectors(self.field, self.width, [self.rows[p] for p in self.pivots()])


def rref(m: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row-echelon form (nonzero rows only) and the pivot columns."""

    echelon = _Echelon(m.field, m.cols)
    for i in range(m.rows):
        echelon.insert(m.row(i))
    return echelon.to_matrix(), list(echelon.pivots())


def kernel_of_equations(field: Field, width: int, equations: Iterable[VectorLike]) -> "Subspace":
    """Solutions x of ``<eq, x> = 0`` for every equation row."""

    echelon = _Echelon(field, width)
    for equation in equations:
        echelon.insert(equation)
    pivots = set(echelon.rows)
    basis: List[SparseVector] = []
    for free in range(width):
        if free in pivots:
            continue
        vector: SparseVector = {free: field.one}
        for pivot, row in echelon.rows.items():
            value = row.get(free)
            if value:
                vector[pivot] = field.normalize(-value)
        basis.append(vector)
    return Subspace.span(field, width, basis)


def solve(a: Matrix, b: Matrix) -> Tuple[Optional[Matrix], "Subspace"]:
    """One solution X of ``a X = b`` (free variables set to zero) and the kernel of ``a``."""

    if a.rows != b.rows:
        raise ValueError(f"Cannot solve {a.shape} against right-hand side {b.shape}")
    field = a.field
    LOGGER.debug("solve: %d equations, %d unknowns, %d right-hand sides", a.rows, a.cols, b.cols)
    augmented = hstack(a, b)
    reduced, pivots = rref(augmented)
    kernel = a.kernel()
    if any(pivot >= a.cols for pivot in pivots):
        return None, kernel
    entries = [field.zero] * (a.cols * b.cols)
    for r, pivot in enumerate(pivots):
        for j in range(b.cols):
            entries[pivot * b.cols + j] = reduced.entry(r, a.cols + j)
    return Matrix(field, a.cols, b.cols, tuple(entries)), kernel


def rank_factorization(m: Matrix) -> Tuple[Matrix, Matrix]:
    """Return ``(C, R)`` with ``m = C @ R``, R in reduced echelon form."""

    reduced, pivots = rref(m)
    return m.select_columns(pivots), reduced


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``field^ambient_dim`` held as a reduced row-echelon basis."""

    field: Field
    ambient_dim: int
    basis: Matrix
    pivots: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.basis.cols != self.ambient_dim:
            raise ValueError("Basis width differs from the ambient dimension")
        if self.basis.rows != len(self.pivots):
            raise ValueError("One pivot per basis row is required")

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[VectorLike]) -> "Subspace":
        echelon = _Echelon(field, ambient_dim)
        for vector in vectors:
            echelon.insert(vector)
        return cls._from_echelon(echelon)

    @classmethod
    def _from_echelon(cls, echelon: _Echelon) -> "Subspace":
        return cls(echelon.field, echelon.width, echelon.to_matrix(), echelon.pivots())

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.zeros(field, 0, ambient_dim), ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self) -> List[Vector]:
        return self.basis.row_list()

    @cached_property
    def _echelon(self) -> _Echelon:
        echelon = _Echelon(self.field, self.ambient_dim)
        for pivot, row in zip(self.pivots, self.vectors()):
            echelon.rows[pivot] = sparse(self.field, row)
        return echelon

    def reduce(self, vector: VectorLike) -> Vector:
        return dense(self.field, self._echelon.reduce(vector), self.ambient_dim)

    def contains(self, vector: VectorLike) -> bool:
        return not self._echelon.reduce(vector)

    def __contains__(self, vector: VectorLike) -> bool:
        return self.contains(vector)

    def coordinates(self, vector: VectorLike) -> Vector:
        """Coordinates in the echelon basis; the vector must lie in the subspace."""

        reduced = sparse(self.field, vector)
        if self._echelon.reduce(reduced):
            raise ValueError("Vector is not in the subspace")
        zero = self.field.zero
        return tuple(reduced.get(pivot, zero) for pivot in self.pivots)

    def combination(self, coordinates: Sequence[Scalar]) -> Vector:
        if len(coordinates) != self.dim:
            raise ValueError(f"Expected {self.dim} coordinates, got {len(coordinates)}")
        return self.basis.T.apply(coordinates)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(row) for row in self.vectors())

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim, self.vectors() + other.vectors())

    def intersection(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("Ambient dimensions differ")
        if not self.dim or not other.dim:
            return Subspace.zero(self.field, self.ambient_dim)
        # c·B1 = d·B2  <=>  (c, -d) lies in the left kernel of [B1; B2]
        relations = vstack(self.basis, other.basis).T.kernel()
        images = [self.basis.T.apply(row[: self.dim]) for row in relations.vectors()]
        return Subspace.span(self.field, self.ambient_dim, images)

    def image_under(self, m: Matrix) -> "Subspace":
        return Subspace.span(self.field, m.rows, [m.apply(row) for row in self.vectors()])


@dataclass(frozen=True)
class QuotientSpace:
    """``field^ambient_dim`` modulo ``relations``; free coordinates index the quotient."""

    relations: Subspace
    free: Tuple[int, ...]

    @property
    def field(self) -> Field:
        return self.relations.field

    @property
    def ambient_dim(self) -> int:
        return self.relations.ambient_dim

    @property
    def dim(self) -> int:
        return len(self.free)

    @cached_property
    def _free_position(self) -> Dict[int, int]:
        return {col: k for k, col in enumerate(self.free)}

    def project(self, vector: VectorLike) -> Vector:
        residual = self.relations._echelon.reduce(vector)
        zero = self.field.zero
        return tuple(residual.get(col, zero) for col in self.free)

    def lift(self, coordinates: Sequence[Scalar]) -> Vector:
        if len(coordinates) != self.dim:
            raise ValueError(f"Expected {self.dim} coordinates, got {len(coordinates)}")
        out = [self.field.zero] * self.ambient_dim
        for col, value in zip(self.free, coordinates):
            out[col] = self.field.normalize(value)
        return tuple(out)

    def lift_sparse(self, coordinates: Sequence[Scalar]) -> SparseVector:
        return {self.free[k]: value for k, value in enumerate(coordinates) if value}

    @cached_property
    def projection_columns(self) -> List[SparseVector]:
        """Sparse images of the ambient basis vectors in quotient coordinates."""

        columns: List[SparseVector] = []
        rows = self.relations._echelon.rows
        position = self._free_position
        for col in range(self.ambient_dim):
            if col in position:
                columns.append({position[col]: self.field.one})
            else:
                columns.append(
                    {position[c]: self.field.normalize(-v) for c, v in rows[col].items() if c in position}
                )
        return columns

    def project_sparse(self, vector: VectorLike) -> SparseVector:
        columns = self.projection_columns
        out: SparseVector = {}
        for index, value in sparse(self.field, vector).items():
            for k, entry in columns[index].items():
                out[k] = out.get(k, 0) + value * entry
        norm = self.field.normalize
        return {k: norm(v) for k, v in out.items() if norm(v)}

    @cached_property
    def projection(self) -> Matrix:
        return Matrix.from_columns(self.field, self.dim, self.projection_columns)

    @cached_property
    def section(self) -> Matrix:
        return Matrix.from_columns(
            self.field, self.ambient_dim, [{col: self.field.one} for col in self.free]
        )

    def descends(self, m: Matrix, target: Optional["QuotientSpace"] = None) -> bool:
        """True when ``m`` maps relations into the target relations (or to zero)."""

        for row in self.relations.vectors():
            image = m.apply(row)
            if target is None:
                if any(image):
                    return False
            elif not target.relations.contains(image):
                return False
        return True


def quotient(ambient_dim: int, relations: Subspace) -> QuotientSpace:
    if relations.ambient_dim != ambient_dim:
        raise ValueError("Relations live in a different ambient space")
    pivots = set(relations.pivots)
    free = tuple(col for col in range(ambient_dim) if col not in pivots)
    LOGGER.debug("quotient: ambient %d, relations %d, dim %d", ambient_dim, relations.dim, len(free))
    return QuotientSpace(relations, free)


def tensor_quotient(
    field: Field, left_dim: int, right_dim: int, pairs: Sequence[Tuple[Matrix, Matrix]]
) -> QuotientSpace:
    """``X ⊗ Y`` modulo ``(P x) ⊗ y - x ⊗ (Q y)`` for each ``(P, Q)`` in ``pairs``.

    ``P`` acts on the left factor and ``Q`` on the right one; basis index of
    ``e_i ⊗ e_j`` is ``i * right_dim + j``.
    """

    echelon = _Echelon(field, left_dim * right_dim)
    for left_action, right_action in pairs:
        left_columns = [left_action.sparse_column(i) for i in range(left_dim)]
        right_columns = [right_action.sparse_column(j) for j in range(right_dim)]
        for i, j in product(range(left_dim), range(right_dim)):
            relation: SparseVector = {}
            for k, value in left_columns[i].items():
                relation[k * right_dim + j] = value
            for k, value in right_columns[j].items():
                index = i * right_dim + k
                relation[index] = relation.get(index, 0) - value
            echelon.insert(relation)
    return quotient(left_dim * right_dim, Subspace._from_echelon(echelon))


def tensor_apply(maps: Sequence[Matrix], vector: VectorLike, dims: Sequence[int]) -> SparseVector:
    """Apply ``maps[0] ⊗ maps[1] ⊗ ...`` to a tensor given in mixed-radix coordinates."""

    field = maps[0].field
    if len(maps) != len(dims):
        raise ValueError("One map per tensor factor is required")
    out_dims = [m.rows for m in maps]
    columns = [[m.sparse_column(j) for j in range(m.cols)] for m in maps]
    out: SparseVector = {}
    for index, value in sparse(field, vector).items():
        digits = unravel(index, dims)
        partial: List[Tuple[int, Scalar]] = [(0, value)]
        for factor, digit in enumerate(digits):
            column = columns[factor][digit]
            partial = [
                (offset * out_dims[factor] + k, coefficient * entry)
                for offset, coefficient in partial
                for k, entry in column.items()
            ]
        for position, coefficient in partial:
            out[position] = out.get(position, 0) + coefficient
    norm = field.normalize
    return {k: norm(v) for k, v in out.items() if norm(v)}


def unravel(index: int, dims: Sequence[int]) -> Tuple[int, ...]:
    digits: List[int] = []
    for size in reversed(dims):
        index, digit = divmod(index, size)
        digits.append(digit)
    return tuple(reversed(digits))


def flip(field: Field, left_dim: int, right_dim: int) -> Matrix:
    """Permutation ``x ⊗ y -> y ⊗ x`` from ``X ⊗ Y`` to ``Y ⊗ X``."""

    columns = [{j * left_dim + i: field.one} for i in range(left_dim) for j in range(right_dim)]
    return Matrix.from_columns(field, left_dim * right_dim, columns)


def basis_vector(field: Field, size: int, index: int) -> Vector:
    out = [field.zero] * size
    out[index] = field.one
    return tuple(out)


def add_into(target: SparseVector, source: Mapping[int, Scalar], scale: Scalar = 1) -> None:
    for key, value in source.items():
        target[key] = target.get(key, 0) + scale * value


__all__ = [
    "Field",
    "FieldKind",
    "Matrix",
    "QQ",
    "QuotientSpace",
    "Scalar",
    "SparseVector",
    "Subspace",
    "Vector",
    "add_into",
    "basis_vector",
    "dense",
    "flip",
    "hstack",
    "kernel_of_equations",
    "quotient",
    "rank_factorization",
    "rref",
    "solve",
    "sparse",
    "tensor_apply",
    "tensor_quotient",
    "unravel",
    "vstack",
]
