"""Hopf subalgebras: normality, quotient coalgebras and the Hopf-Galois decision."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from algebra import BalancedTensor, ElementLike, FDAlgebra, FiniteGroup
from check_types import CheckResult, NormalityError, Side, StructureError, WitnessError, all_passed
from coalgebra import HopfAlgebra
from linalg import Matrix, QuotientSpace, Subspace, Vector, kernel_of_equations, quotient, tensor_apply

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class HopfSubalgebra:
    """A subspace K of H closed under product, unit, coproduct and antipode."""

    parent: HopfAlgebra
    sub: Subspace
    name: str = "K"

    def __post_init__(self) -> None:
        h = self.parent
        algebra = h.algebra
        if not self.sub.contains(h.unit):
            raise StructureError(f"{self.name} does not contain the unit of {h.name}")
        basis = self.sub.vectors()
        for x in basis:
            for y in basis:
                if not self.sub.contains(algebra.multiply(x, y)):
                    raise StructureError(f"{self.name} is not closed under multiplication")
        square = Subspace.span(h.field, h.dim * h.dim, [tuple(a * b for a in x for b in y) for x in basis for y in basis])
        for x in basis:
            if not square.contains(h.delta(x)):
                raise StructureError(f"Δ({algebra.format_element(x)}) is not in {self.name}⊗{self.name}")
            if not self.sub.contains(h.tau(x)):
                raise StructureError(f"{self.name} is not stable under the antipode of {h.name}")

    @property
    def dim(self) -> int:
        return self.sub.dim

    @property
    def algebra(self) -> FDAlgebra:
        return self.parent.algebra

    def basis(self) -> List[Vector]:
        return self.sub.vectors()


def hopf_subalgebra(parent: HopfAlgebra, vectors: Iterable[ElementLike], name: str = "K") -> HopfSubalgebra:
    algebra = parent.algebra
    elements = [algebra.element(v) if isinstance(v, str) else algebra.as_sparse(v) for v in vectors]
    return HopfSubalgebra(parent, Subspace.span(parent.field, parent.dim, elements), name)


def subgroup_hopf_subalgebra(parent: HopfAlgebra, group: FiniteGroup, generators: Iterable[str], name: str = "K") -> HopfSubalgebra:
    """``k[U] ⊆ k[G]`` for the subgroup U generated by the labelled elements."""

    members = group.generated_by([group.index(label) for label in generators])
    return hopf_subalgebra(parent, [parent.algebra.basis_vector(g) for g in members], name)


@dataclass(frozen=True)
class IdealSpaces:
    """``K⁺``, ``HK⁺``, ``K⁺H`` and ``HK⁺H`` as subspaces of H."""

    k_plus: Subspace
    h_k_plus: Subspace
    k_plus_h: Subspace
    h_k_plus_h: Subspace

    def dims(self) -> Dict[str, int]:
        return {
            "K+": self.k_plus.dim,
            "HK+": self.h_k_plus.dim,
            "K+H": self.k_plus_h.dim,
            "HK+H": self.h_k_plus_h.dim,
        }

    def relations(self, side: Side) -> Subspace:
        return {Side.LEFT: self.h_k_plus, Side.RIGHT: self.k_plus_h, Side.TWO_SIDED: self.h_k_plus_h}[side]


def ideal_spaces(sub: HopfSubalgebra) -> IdealSpaces:
    h = sub.parent
    algebra = h.algebra
    n = h.dim
    k_plus = sub.sub.intersection(kernel_of_equations(h.field, n, [h.counit]))
    basis = [algebra.basis_vector(i) for i in range(n)]
    kp = k_plus.vectors()
    left = Subspace.span(h.field, n, [algebra.multiply(b, k) for b in basis for k in kp])
    right = Subspace.span(h.field, n, [algebra.multiply(k, b) for k in kp for b in basis])
    both = Subspace.span(h.field, n, [algebra.multiply(b, x) for b in basis for x in right.vectors()])
    return IdealSpaces(k_plus, left, right, both)


@dataclass
class NormalityVerdict:
    normal: bool
    ideals_equal: bool
    adjoint_stable: bool
    dims: Dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "normal": self.normal,
            "HK+ = K+H": self.ideals_equal,
            "adjoint stable": self.adjoint_stable,
            "dims": dict(self.dims),
        }


def adjoint_stable(sub: HopfSubalgebra) -> bool:
    """``τ(a_(1)) x a_(2)`` and ``a_(1) x τ(a_(2))`` stay in K for basis a of H and x of K."""

    h = sub.parent
    algebra = h.algebra
    field_ = h.field
    one = field_.one
    antipode_columns = [h.antipode.sparse_column(i) for i in range(h.dim)]
    for a in range(h.dim):
        for x in sub.basis():
            left: Dict[int, Any] = {}
            right: Dict[int, Any] = {}
            for u, v, c in h.delta_terms[a]:
                for k, value in algebra.multiply_sparse(
                    algebra.multiply_sparse(antipode_columns[u], dict(enumerate(x))), {v: one}
                ).items():
                    left[k] = left.get(k, 0) + c * value
                for k, value in algebra.multiply_sparse(
                    algebra.multiply_sparse({u: one}, dict(enumerate(x))), antipode_columns[v]
                ).items():
                    right[k] = right.get(k, 0) + c * value
            if not sub.sub.contains(left) or not sub.sub.contains(right):
                return False
    return True


def is_normal(sub: HopfSubalgebra) -> NormalityVerdict:
    """Compare ``HK⁺ = K⁺H`` against two-sided adjoint stability; they must agree."""

    ideals = ideal_spaces(sub)
    equal = ideals.h_k_plus == ideals.k_plus_h
    stable = adjoint_stable(sub)
    if equal != stable:
        raise NormalityError(
            f"{sub.name} ⊆ {sub.parent.name}: HK+ = K+H is {equal} but adjoint stability is {stable}"
        )
    dims = {"H": sub.parent.dim, "K": sub.dim}
    dims.update(ideals.dims())
    return NormalityVerdict(equal, equal, stable, dims)


@dataclass
class QuotientCoalgebra:
    """``H/I`` with induced ``Δ̄`` and ``ε̄``; a Hopf algebra when I is a two-sided Hopf ideal."""

    side: Side
    space: QuotientSpace
    coproduct: Matrix
    counit: Vector
    labels: Tuple[str, ...]
    checks: List[CheckResult] = field(default_factory=list)
    hopf: Optional[HopfAlgebra] = None

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def projection(self) -> Matrix:
        return self.space.projection


_QUOTIENT_NAMES = {Side.LEFT: "H/HK+", Side.RIGHT: "H/K+H", Side.TWO_SIDED: "H/HK+H"}


def quotient_coalgebra(sub: HopfSubalgebra, side: Side = Side.LEFT, ideals: Optional[IdealSpaces] = None) -> QuotientCoalgebra:
    h = sub.parent
    field_ = h.field
    n = h.dim
    ideals = ideals or ideal_spaces(sub)
    relations = ideals.relations(side)
    space = quotient(n, relations)
    q = space.dim
    name = _QUOTIENT_NAMES[side]
    projection, section = space.projection, space.section
    raw_delta = projection.kron(projection) @ h.coproduct
    if not space.descends(raw_delta) or not space.descends(h.counit_matrix):
        raise StructureError(f"The coalgebra structure of {h.name} does not descend to {name}")
    coproduct = raw_delta @ section
    counit = (h.counit_matrix @ section).row(0)
    labels = tuple(f"[{h.algebra.labels[i]}]" for i in space.free)
    ident = Matrix.identity(field_, q)
    counit_row = Matrix(field_, 1, q, tuple(counit))
    coassociative = counital = True
    for j in range(q):
        column = coproduct.sparse_column(j)
        if tensor_apply([coproduct, ident], column, [q, q]) != tensor_apply([ident, coproduct], column, [q, q]):
            coassociative = False
        expected = {j: field_.one}
        if tensor_apply([counit_row, ident], column, [q, q]) != expected or tensor_apply(
            [ident, counit_row], column, [q, q]
        ) != expected:
            counital = False
    result = QuotientCoalgebra(side, space, coproduct, counit, labels)
    result.checks.append(CheckResult.of(f"{name} coassociative", coassociative, **{name: q}))
    result.checks.append(CheckResult.of(f"{name} counital", counital))
    if _is_two_sided_ideal(h.algebra, relations) and space.descends(projection @ h.antipode):
        result.hopf = _quotient_hopf(h, space, coproduct, counit, labels, name)
        result.checks.extend(
            CheckResult(f"{name}: {check.name}", check.verdict, check.detail) for check in result.hopf.checks()
        )
    LOGGER.debug("quotient %s of %s: dim %d, hopf=%s", name, h.name, q, result.hopf is not None)
    return result


def _is_two_sided_ideal(algebra: FDAlgebra, relations: Subspace) -> bool:
    for r in relations.vectors():
        for i in range(algebra.dim):
            b = algebra.basis_vector(i)
            if not relations.contains(algebra.multiply(b, r)) or not relations.contains(algebra.multiply(r, b)):
                return False
    return True


def _quotient_hopf(
    h: HopfAlgebra, space: QuotientSpace, coproduct: Matrix, counit: Vector, labels: Tuple[str, ...], name: str
) -> HopfAlgebra:
    projection, section = space.projection, space.section
    lifts = section.column_list()

    def products(p: int, q: int) -> Vector:
        return projection.apply(h.algebra.multiply(lifts[p], lifts[q]))

    algebra = FDAlgebra.from_products(h.field, labels, products, projection.apply(h.unit), name)
    return HopfAlgebra(algebra, coproduct, counit, projection @ h.antipode @ section)


@dataclass
class HopfGaloisCertificate:
    """A map ``H ⊗_K H -> H ⊗ C`` with its descent and bijectivity verdicts."""

    name: str
    descends: bool
    bijective: bool
    matrix: Optional[Matrix]
    dims: Dict[str, int] = field(default_factory=dict)
    inverse_verified: Optional[bool] = None

    def check(self) -> CheckResult:
        detail = "" if self.descends else "does not descend to H⊗_K H"
        return CheckResult.of(f"{self.name} bijective", self.bijective, detail, **self.dims)


def tensor_over_k(sub: HopfSubalgebra) -> BalancedTensor:
    """``H ⊗_K H`` modulo ``xk ⊗ y = x ⊗ ky``."""

    algebra = sub.algebra
    joins = [(algebra.right_matrix(k), algebra.left_matrix(k)) for k in sub.basis()]
    return BalancedTensor(algebra.field, [algebra.dim, algebra.dim], [joins])


def _certify(name: str, tensor: BalancedTensor, raw: Matrix, codomain: str) -> HopfGaloisCertificate:
    stage = tensor.stages[0]
    descends = stage.descends(raw)
    matrix = raw @ stage.section if descends else None
    bijective = descends and matrix is not None and matrix.rank() == tensor.dim == raw.rows
    dims = {"H⊗_K H": tensor.dim, codomain: raw.rows}
    return HopfGaloisCertificate(name, descends, bijective, matrix, dims)


def _coalgebra_map(h: HopfAlgebra, projection: Matrix) -> Matrix:
    """``a ⊗ a' -> a a'_(1) ⊗ π(a'_(2))`` on ``H ⊗_k H``."""

    algebra = h.algebra
    n, q = h.dim, projection.rows
    one = h.field.one
    columns = []
    for i in range(n):
        for j in range(n):
            out: Dict[int, Any] = {}
            for u, v, c in h.delta_terms[j]:
                left = algebra.multiply_sparse({i: one}, {u: one})
                for k, x in left.items():
                    for m, y in projection.sparse_column(v).items():
                        out[k * q + m] = out.get(k * q + m, 0) + c * x * y
            columns.append(out)
    return Matrix.from_columns(h.field, n * q, columns)


def hopf_galois_map(sub: HopfSubalgebra, quotient_: Optional[QuotientCoalgebra] = None) -> HopfGaloisCertificate:
    """The canonical map into ``H ⊗ H/HK⁺``; with K normal also the inverse ``x ⊗ ȳ -> xτ(y_(1)) ⊗ y_(2)``."""

    h = sub.parent
    quotient_ = quotient_ or quotient_coalgebra(sub, Side.LEFT)
    tensor = tensor_over_k(sub)
    certificate = _certify("β: H⊗_K H → H⊗H/HK+", tensor, _coalgebra_map(h, quotient_.projection), "H⊗H/HK+")
    if quotient_.hopf is not None and certificate.matrix is not None:
        inverse = _galois_inverse(h, tensor, quotient_)
        beta = certificate.matrix
        certificate.inverse_verified = (inverse @ beta).is_identity() and (beta @ inverse).is_identity()
    return certificate


def _galois_inverse(h: HopfAlgebra, tensor: BalancedTensor, quotient_: QuotientCoalgebra) -> Matrix:
    algebra = h.algebra
    one = h.field.one
    columns = []
    for i in range(h.dim):
        for free in quotient_.space.free:
            terms = []
            for u, v, c in h.delta_terms[free]:
                first = algebra.multiply_sparse({i: one}, h.antipode.sparse_column(u))
                terms.append((c, [first, {v: one}]))
            columns.append(tensor.project_terms(terms))
    return Matrix.from_columns(h.field, tensor.dim, columns)


def comparison_map(sub: HopfSubalgebra, quotient_: Optional[QuotientCoalgebra] = None) -> HopfGaloisCertificate:
    """``a ⊗ a' -> a a'_(1) ⊗ [a'_(2)]`` into ``H ⊗ H/K⁺H``, defined for every Hopf subalgebra."""

    quotient_ = quotient_ or quotient_coalgebra(sub, Side.RIGHT)
    tensor = tensor_over_k(sub)
    return _certify("H⊗_K H → H⊗H/K+H", tensor, _coalgebra_map(sub.parent, quotient_.projection), "H⊗H/K+H")


# coactions ---------------------------------------------------------------------------------


@dataclass
class PhiReport:
    """``Φ = (ε ⊗ id) ∘ ρ: H -> W`` with its algebra and comodule checks."""

    matrix: Matrix
    checks: List[CheckResult]
    surjective: bool

    @property
    def passed(self) -> bool:
        return all_passed(self.checks)


def coaction_checks(h: HopfAlgebra, w: HopfAlgebra, rho: Matrix) -> List[CheckResult]:
    """Comodule-algebra laws for ``ρ: H -> H ⊗ W`` (index ``i * dim W + j``)."""

    n, m = h.dim, w.dim
    if rho.shape != (n * m, n):
        raise StructureError(f"Coaction must be a {n * m}x{n} matrix, got {rho.shape}")
    field_ = h.field
    ident_h, ident_w = h.identity(), w.identity()
    mixed = h.algebra.tensor(w.algebra)
    coassociative = counital = multiplicative = True
    for i in range(n):
        column = rho.sparse_column(i)
        if tensor_apply([rho, ident_w], column, [n, m]) != tensor_apply([ident_h, w.coproduct], column, [n, m]):
            coassociative = False
        if tensor_apply([ident_h, w.counit_matrix], column, [n, m]) != {i: field_.one}:
            counital = False
        for j in range(n):
            product = rho.apply(h.algebra.multiply(h.algebra.basis_vector(i), h.algebra.basis_vector(j)))
            if product != mixed.multiply(rho.column(i), rho.column(j)):
                multiplicative = False
    unital = rho.apply(h.unit) == mixed.unit
    return [
        CheckResult.of("ρ coassociative", coassociative),
        CheckResult.of("ρ counital", counital),
        CheckResult.of("ρ multiplicative", multiplicative),
        CheckResult.of("ρ(1) = 1⊗1", unital),
    ]


def phi_map(h: HopfAlgebra, w: HopfAlgebra, rho: Matrix) -> PhiReport:
    checks = coaction_checks(h, w, rho)
    failed = [check.name for check in checks if not check.passed]
    if failed:
        raise StructureError(f"Not a comodule-algebra coaction of {w.name} on {h.name}: {', '.join(failed)}")
    n, m = h.dim, w.dim
    ident_w = w.identity()
    columns = [tensor_apply([h.counit_matrix, ident_w], rho.sparse_column(i), [n, m]) for i in range(n)]
    phi = Matrix.from_columns(h.field, m, columns)
    multiplicative = all(
        phi.apply(h.algebra.multiply(h.algebra.basis_vector(i), h.algebra.basis_vector(j)))
        == w.algebra.multiply(phi.column(i), phi.column(j))
        for i in range(n)
        for j in range(n)
    )
    augmented = all(w.eps(phi.column(i)) == h.field.normalize(h.counit[i]) for i in range(n))
    comodule = all(
        w.delta_sparse(phi.sparse_column(i)) == tensor_apply([phi, ident_w], rho.sparse_column(i), [n, m])
        for i in range(n)
    )
    surjective = phi.rank() == m
    checks = [
        CheckResult.of("Φ multiplicative", multiplicative),
        CheckResult.of("Φ(1) = 1", phi.apply(h.unit) == w.unit),
        CheckResult.of("ε_W ∘ Φ = ε_H", augmented),
        CheckResult.of("Φ is a comodule map", comodule),
        CheckResult.info("Φ surjective" if surjective else "Φ not surjective", rank=phi.rank()),
    ]
    return PhiReport(phi, checks, surjective)


def coinvariants(h: HopfAlgebra, w: HopfAlgebra, rho: Matrix) -> Subspace:
    """``{x : ρ(x) = x ⊗ 1}``."""

    unit_column = Matrix.from_columns(h.field, w.dim, [w.unit])
    return (rho - h.identity().kron(unit_column)).kernel()


def coaction_galois_map(sub: HopfSubalgebra, w: HopfAlgebra, rho: Matrix) -> HopfGaloisCertificate:
    """``a ⊗ a' -> a a'_(0) ⊗ a'_(1)`` into ``H ⊗ W``."""

    h = sub.parent
    algebra = h.algebra
    n, m = h.dim, w.dim
    one = h.field.one
    columns = []
    for i in range(n):
        for j in range(n):
            out: Dict[int, Any] = {}
            for index, c in rho.sparse_column(j).items():
                u, v = divmod(index, m)
                for k, x in algebra.multiply_sparse({i: one}, {u: one}).items():
                    out[k * m + v] = out.get(k * m + v, 0) + c * x
            columns.append(out)
    raw = Matrix.from_columns(h.field, n * m, columns)
    return _certify(f"H⊗_K H → H⊗{w.name}", tensor_over_k(sub), raw, f"H⊗{w.name}")


def quotient_coaction(sub: HopfSubalgebra, quotient_: QuotientCoalgebra) -> Tuple[HopfAlgebra, Matrix]:
    """``(H̄, (id ⊗ π) ∘ Δ)`` for a normal K."""

    if quotient_.hopf is None:
        raise NormalityError(f"{sub.name} is not normal in {sub.parent.name}: H/HK+ is not a Hopf algebra")
    h = sub.parent
    return quotient_.hopf, h.identity().kron(quotient_.projection) @ h.coproduct


def free_basis_over(sub: HopfSubalgebra) -> Optional[List[int]]:
    """Basis indices ``h_i`` with ``H = ⊕ h_i K``, found greedily among basis elements of H."""

    h = sub.parent
    algebra = h.algebra
    k_basis = sub.basis()
    chosen: List[int] = []
    current = Subspace.zero(h.field, h.dim)
    for i in range(h.dim):
        block = Subspace.span(h.field, h.dim, [algebra.multiply(algebra.basis_vector(i), k) for k in k_basis])
        grown = current.sum(block)
        if grown.dim == current.dim + sub.dim:
            chosen.append(i)
            current = grown
    return chosen if current.dim == h.dim else None


@dataclass
class NormalityDecision:
    """Both directions of the normal ⇔ Hopf-Galois correspondence on one instance."""

    verdict: NormalityVerdict
    canonical: HopfGaloisCertificate
    comparison: HopfGaloisCertificate
    quotient_dims: Dict[str, int]
    rank: Optional[int]
    k_basis: Optional[List[str]]
    witness: Optional[HopfGaloisCertificate] = None
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all_passed(self.checks)


def decide_normal_via_galois(
    sub: HopfSubalgebra, witness: Optional[Tuple[HopfAlgebra, Matrix]] = None
) -> NormalityDecision:
    h = sub.parent
    verdict = is_normal(sub)
    ideals = ideal_spaces(sub)
    left = quotient_coalgebra(sub, Side.LEFT, ideals)
    right = quotient_coalgebra(sub, Side.RIGHT, ideals)
    both = quotient(h.dim, ideals.h_k_plus_h)
    canonical = hopf_galois_map(sub, left)
    comparison = comparison_map(sub, right)
    rank = h.dim // sub.dim if h.dim % sub.dim == 0 else None
    basis = free_basis_over(sub)
    k_basis = [h.algebra.labels[i] for i in basis] if basis is not None else None
    quotient_dims = {"H/HK+": left.dim, "H/K+H": right.dim, "H/HK+H": both.dim}
    decision = NormalityDecision(verdict, canonical, comparison, quotient_dims, rank, k_basis)
    checks = decision.checks
    checks.append(CheckResult.of(f"{sub.name} is normal in {h.name}", verdict.normal, **verdict.dims))
    checks.extend(left.checks)
    checks.extend(right.checks)
    checks.append(canonical.check())
    checks.append(CheckResult.of("canonical β bijective ⇔ normal", canonical.bijective == verdict.normal))
    if canonical.inverse_verified is not None:
        checks.append(CheckResult.of("x⊗ȳ ↦ xτ(y_(1))⊗y_(2) inverts β", canonical.inverse_verified))
    checks.append(CheckResult.info(comparison.check().name, "", bijective=comparison.bijective, **comparison.dims))
    checks.append(CheckResult.info("dim H/HK+H", "", **quotient_dims))
    checks.append(
        CheckResult.info("K-basis of H", "", basis=k_basis, rank=rank)
        if k_basis is not None
        else CheckResult.info("K-basis of H", "no basis found among basis elements", rank=rank)
    )
    if witness is not None:
        w, rho = witness
        phi = phi_map(h, w, rho)
        checks.extend(phi.checks)
        if coinvariants(h, w, rho) != sub.sub:
            raise WitnessError(f"Coinvariants of the {w.name}-coaction on {h.name} differ from {sub.name}")
        decision.witness = coaction_galois_map(sub, w, rho)
        checks.append(decision.witness.check())
        if decision.witness.bijective:
            checks.append(CheckResult.of(f"{w.name}-Galois ⇒ normal", verdict.normal))
            chain = rank is not None and w.dim == right.dim == left.dim == rank
            checks.append(
                CheckResult.of(
                    "dim W = dim H/K+H = dim H/HK+ = rank of H over K",
                    chain,
                    W=w.dim,
                    **{"H/K+H": right.dim, "H/HK+": left.dim, "rank": rank or 0},
                )
            )
    LOGGER.debug("normality of %s in %s: %s", sub.name, h.name, verdict.normal)
    return decision


__all__ = [
    "HopfGaloisCertificate",
    "HopfSubalgebra",
    "IdealSpaces",
    "NormalityDecision",
    "NormalityVerdict",
    "PhiReport",
    "QuotientCoalgebra",
    "adjoint_stable",
    "coaction_checks",
    "coaction_galois_map",
    "coinvariants",
    "comparison_map",
    "decide_normal_via_galois",
    "free_basis_over",
    "hopf_galois_map",
    "hopf_subalgebra",
    "ideal_spaces",
    "is_normal",
    "phi_map",
    "quotient_coaction",
    "quotient_coalgebra",
    "subgroup_hopf_subalgebra",
    "tensor_over_k",
]
