"""Check suites behind each command, assembled into ordered reports."""

from __future__ import annotations

import hashlib
import logging
from enum import Enum
from typing import Callable, Dict, List, Optional

from bialgebroid import build_S, build_T, check_S, check_T, coaction_on_A, coaction_on_E, endo_galois, pairings
from check_types import (
    CheckResult,
    GaloisError,
    IntegralError,
    NormalityError,
    NotDepthTwoError,
    Report,
    SeparabilityError,
    Side,
    StructureError,
    SuiteOptions,
    Verdict,
    all_passed,
)
from coalgebra import HopfAlgebra
from depth_two import analyze_depth_two, require_quasibases
from hopf_algebroid import build_T_op_cop, check_hopf_algebroid_axioms, find_sym_sep_element, separability_checks
from hopf_subalgebra import decide_normal_via_galois, quotient_coaction, quotient_coalgebra
from instance_file import InstanceFile
from weak_galois import (
    antipode_existence_probe,
    comodule_check,
    frobenius_probe,
    galois_map,
    galois_maps,
    integral_dual_bases,
    reconstruct_antipode,
    self_comodule,
    self_galois,
    verify_galois_identities,
)
from weak_hopf import WeakHopfAlgebra, find_left_integral, integral_checks

LOGGER = logging.getLogger(__name__)

# Raised when an instance does not meet a command's preconditions.
PRECONDITION_ERRORS = (NotDepthTwoError, SeparabilityError, GaloisError, IntegralError)


class Command(str, Enum):
    CHECK_ALGEBRA = "check-algebra"
    D2 = "d2"
    BIALGEBROID = "bialgebroid"
    HOPF_ALGEBROID = "hopf-algebroid"
    WEAK_HOPF = "weak-hopf"
    GALOIS = "galois"
    NORMALITY = "normality"
    RECONSTRUCT = "reconstruct"
    ALL = "all"


def _tagged(prefix: str, results: List[CheckResult]) -> List[CheckResult]:
    return [CheckResult(f"{prefix}: {r.name}", r.verdict, r.detail, r.dims, r.witness) for r in results]


def guard_dimensions(instance: InstanceFile, options: SuiteOptions) -> None:
    """Refuse instances whose triple tensor powers exceed ``max_ambient_dim``."""

    for name, algebra in instance.algebras.items():
        cube = algebra.dim ** 3
        if cube > options.max_ambient_dim:
            raise StructureError(
                f"{name} has dimension {algebra.dim}; its triple tensor power ({cube}) exceeds "
                f"max_ambient_dim={options.max_ambient_dim}"
            )


# sections ---------------------------------------------------------------------------------


def check_algebra(instance: InstanceFile, options: SuiteOptions) -> List[CheckResult]:
    results = []
    for name, algebra in instance.algebras.items():
        results.append(CheckResult.of(f"{name} associative and unital", True, dim=algebra.dim))
    if instance.extension is not None:
        ext = instance.extension
        results.append(CheckResult.info(f"{ext.sub_algebra.name} ⊆ {ext.ambient.name}", "", A=ext.n, B=ext.sub.dim))
    if instance.coalgebra is not None:
        weak = instance.require_weak(Command.CHECK_ALGEBRA.value)
        results.extend(_tagged(weak.name, weak.checks()))
        if isinstance(instance.coalgebra, HopfAlgebra):
            honest = all_passed(instance.coalgebra.checks())
            results.append(CheckResult.info(f"{weak.name} is a Hopf algebra", "", hopf=honest))
    return results


def check_d2(instance: InstanceFile, options: SuiteOptions) -> List[CheckResult]:
    ext = instance.require_extension(Command.D2.value)
    report = analyze_depth_two(ext)
    left_size = report.left.size if report.left else None
    right_size = report.right.size if report.right else None
    return [
        CheckResult.info("left depth two", "", found=report.left_d2, quasibase_size=left_size),
        CheckResult.info("right depth two", "", found=report.right_d2, quasibase_size=right_size),
        CheckResult.of("quasibases verified in A⊗_B A", report.witnesses_verified),
        CheckResult.of("left D2 ⇔ right D2", report.left_d2 == report.right_d2),
        CheckResult.info("A_B balanced", "", balanced=report.balanced),
        CheckResult.of("balanced ⇒ A^S = B", report.invariants_equal_B or not report.balanced, **report.dims),
    ]


def check_bialgebroid(instance: InstanceFile, options: SuiteOptions) -> List[CheckResult]:
    ext = instance.require_extension(Command.BIALGEBROID.value)
    left_qb, right_qb = require_quasibases(ext)
    s = build_S(ext, left_qb, right_qb)
    t = build_T(ext, left_qb, right_qb)
    results = _tagged("S", check_S(ext, s, left_qb, right_qb))
    results.extend(_tagged("T", check_T(ext, t, left_qb, right_qb)))
    results.extend(pairing.check() for pairing in pairings(ext))
    on_a = coaction_on_A(ext, right_qb, t)
    results.extend(_tagged(on_a.name, on_a.checks))
    on_e = coaction_on_E(ext, right_qb, s)
    results.extend(_tagged(on_e.name, on_e.checks))
    galois = endo_galois(ext, right_qb, s, on_e, check_factorization=options.check_factorization)
    results.extend(_tagged("𝓔", galois.checks))
    return results


def check_hopf_algebroid(instance: InstanceFile, options: SuiteOptions) -> List[CheckResult]:
    ext = instance.require_extension(Command.HOPF_ALGEBROID.value)
    qbs = require_quasibases(ext)
    e = find_sym_sep_element(ext.sub_algebra)
    if e is None:
        return [CheckResult.info(f"symmetric separability element of {ext.sub_algebra.name}", "", found=False)]
    results = [
        CheckResult.info(
            f"symmetric separability element of {ext.sub_algebra.name}",
            e.format(),
            found=True,
            alternatives=e.alternatives.dim,
        )
    ]
    results.extend(separability_checks(e))
    data = build_T_op_cop(ext, qbs, e)
    results.extend(data.checks)
    results.extend(check_hopf_algebroid_axioms(data))
    return results


def check_weak_hopf(instance: InstanceFile, options: SuiteOptions) -> List[CheckResult]:
    h = instance.require_weak(Command.WEAK_HOPF.value)
    results = list(h.checks())
    try:
        integral = find_left_integral(h)
    except IntegralError as exc:
        results.append(CheckResult.info(f"left integral of {h.name}", str(exc), found=False))
    else:
        results.extend(integral_checks(integral))
    if isinstance(h, WeakHopfAlgebra):
        dual = h.dual(f"{h.name}*")
        results.extend(_tagged(dual.name, dual.checks()))
    return results


def _require_antipode(instance: InstanceFile, command: Command) -> WeakHopfAlgebra:
    h = instance.require_weak(command.value)
    if not isinstance(h, WeakHopfAlgebra):
        raise GaloisError(f"'{command.value}' needs an antipode on {h.name}")
    return h


def check_galois(instance: InstanceFile, options: SuiteOptions) -> List[CheckResult]:
    h = _require_antipode(instance, Command.GALOIS)
    if instance.coaction is None:
        certificate = self_galois(h)
        comodule, data = certificate.comodule, certificate.galois
        results = list(certificate.checks)
    else:
        algebra, rho = instance.coaction
        comodule = comodule_check(algebra, h, rho)
        data = galois_maps(comodule, h)
        results = list(comodule.checks) + list(data.checks)
    if data.bijective:
        results.extend(verify_galois_identities(data))
    if data.surjective:
        results.extend(integral_dual_bases(data, h).checks)
    if options.run_probes:
        results.append(frobenius_probe(comodule))
        results.append(antipode_existence_probe(h))
    return results


def check_normality(instance: InstanceFile, options: SuiteOptions) -> List[CheckResult]:
    sub = instance.require_subalgebra(Command.NORMALITY.value)
    witness = instance.witness
    try:
        if witness is None and instance.quotient_witness:
            witness = quotient_coaction(sub, quotient_coalgebra(sub, Side.RIGHT))
        decision = decide_normal_via_galois(sub, witness)
    except NormalityError as exc:
        return [CheckResult.of("normality criteria agree", False, str(exc))]
    return list(decision.checks)


def _fingerprint(matrix) -> str:
    return hashlib.sha256(matrix.format().encode("utf-8")).hexdigest()[:16]


def check_reconstruct(instance: InstanceFile, options: SuiteOptions) -> List[CheckResult]:
    h = instance.require_weak(Command.RECONSTRUCT.value)
    reference = h.antipode if isinstance(h, WeakHopfAlgebra) else None
    bare = h.without_antipode() if isinstance(h, WeakHopfAlgebra) else h
    data = galois_map(self_comodule(bare))
    rebuilt = reconstruct_antipode(bare, reference, data)
    results = [CheckResult.info("reconstructed antipode", "", sha256=_fingerprint(rebuilt.matrix))]
    results.extend(rebuilt.checks)
    results.extend(verify_galois_identities(data))
    return results


SECTIONS: Dict[Command, Callable[[InstanceFile, SuiteOptions], List[CheckResult]]] = {
    Command.CHECK_ALGEBRA: check_algebra,
    Command.D2: check_d2,
    Command.BIALGEBROID: check_bialgebroid,
    Command.HOPF_ALGEBROID: check_hopf_algebroid,
    Command.WEAK_HOPF: check_weak_hopf,
    Command.GALOIS: check_galois,
    Command.NORMALITY: check_normality,
    Command.RECONSTRUCT: check_reconstruct,
}


def _applicable(instance: InstanceFile) -> List[Command]:
    commands = [Command.CHECK_ALGEBRA]
    if instance.extension is not None:
        commands += [Command.D2, Command.BIALGEBROID, Command.HOPF_ALGEBROID]
    if instance.coalgebra is not None:
        commands += [Command.WEAK_HOPF, Command.GALOIS, Command.RECONSTRUCT]
    if instance.subalgebra is not None:
        commands.append(Command.NORMALITY)
    return commands


def run_command(command: Command, instance: InstanceFile, options: Optional[SuiteOptions] = None) -> Report:
    """Run one command (or every applicable one for ``all``) and collect the report."""

    options = options or SuiteOptions()
    guard_dimensions(instance, options)
    report = Report(instance.name, command.value)
    if command is not Command.ALL:
        LOGGER.debug("running %s on %s", command.value, instance.name)
        report.extend(SECTIONS[command](instance, options))
        return report
    for section in _applicable(instance):
        LOGGER.debug("running %s on %s", section.value, instance.name)
        try:
            results = SECTIONS[section](instance, options)
        except PRECONDITION_ERRORS as exc:
            report.add(CheckResult(f"{section.value}: skipped", Verdict.INFO, str(exc)))
            continue
        report.extend(_tagged(section.value, results))
    return report


__all__ = [
    "Command",
    "PRECONDITION_ERRORS",
    "SECTIONS",
    "check_algebra",
    "check_bialgebroid",
    "check_d2",
    "check_galois",
    "check_hopf_algebroid",
    "check_normality",
    "check_reconstruct",
    "check_weak_hopf",
    "guard_dimensions",
    "run_command",
]
