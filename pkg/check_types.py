"""Shared dataclasses and errors describing checks, verdicts and reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence


class StructureError(ValueError):
    """An algebraic structure violates one of its defining laws."""


class NotDepthTwoError(ValueError):
    """A construction needs depth-two quasibases that do not exist."""


class SeparabilityError(ValueError):
    """No symmetric separability element, or the antipode leaves T."""


class NormalityError(RuntimeError):
    """The two normality criteria disagree."""


class WitnessError(ValueError):
    """A supplied Galois witness has coinvariants different from K."""


class GaloisError(ValueError):
    """The Galois map is not bijective where bijectivity is required."""


class IntegralError(ValueError):
    """No nondegenerate left integral was found."""


class InstanceError(ValueError):
    """A problem in an instance file, located by a dotted path."""

    def __init__(self, message: str, location: str = "") -> None:
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class Verdict(str, Enum):
    """Outcome of a single check."""

    PASS = "pass"
    FAIL = "fail"
    INFO = "info"


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"


class HomConstraint(str, Enum):
    """Which B-linearity a space of maps A -> A must satisfy."""

    LEFT = "left-B"
    RIGHT = "right-B"
    BIMODULE = "left-and-right-B"


@dataclass(frozen=True)
class SuiteOptions:
    """Knobs that govern which optional checks run."""

    run_probes: bool = True
    check_factorization: bool = True
    max_ambient_dim: int = 4096


@dataclass
class CheckResult:
    """One named verification outcome."""

    name: str
    verdict: Verdict
    detail: str = ""
    dims: Dict[str, int] = field(default_factory=dict)
    witness: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def of(cls, name: str, passed: bool, detail: str = "", **dims: int) -> "CheckResult":
        return cls(name, Verdict.PASS if passed else Verdict.FAIL, detail, dict(dims))

    @classmethod
    def info(cls, name: str, detail: str = "", **witness: Any) -> "CheckResult":
        return cls(name, Verdict.INFO, detail, {}, dict(witness))

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.FAIL

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"name": self.name, "verdict": self.verdict.value}
        if self.detail:
            payload["detail"] = self.detail
        if self.dims:
            payload["dims"] = dict(self.dims)
        if self.witness:
            payload["witness"] = dict(self.witness)
        return payload


@dataclass
class Report:
    """Ordered check results for one instance and one command."""

    instance: str
    command: str
    checks: List[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> None:
        self.checks.append(result)

    def extend(self, results: Sequence[CheckResult]) -> None:
        self.checks.extend(results)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def find(self, name: str) -> Optional[CheckResult]:
        for check in self.checks:
            if check.name == name:
                return check
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "instance": self.instance,
            "command": self.command,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }


def all_passed(results: Sequence[CheckResult]) -> bool:
    return all(result.passed for result in results)


__all__ = [
    "CheckResult",
    "GaloisError",
    "HomConstraint",
    "InstanceError",
    "IntegralError",
    "NormalityError",
    "NotDepthTwoError",
    "Report",
    "SeparabilityError",
    "Side",
    "StructureError",
    "SuiteOptions",
    "Verdict",
    "WitnessError",
    "all_passed",
]
