"""Instance files: a pydantic schema for algebras, extensions and coalgebras, parsed into validated structures."""

from __future__ import annotations

import importlib
import importlib.util
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field as SchemaField, StrictInt, ValidationError, model_validator

from algebra import (
    Extension,
    FDAlgebra,
    FiniteGroup,
    build_group_algebra,
    build_matrix_algebra,
    cyclic_group,
    symmetric_group,
)
from check_types import InstanceError, StructureError
from coalgebra import CoalgebraData, HopfAlgebra, group_hopf_algebra, hopf_from_tables
from hopf_subalgebra import HopfSubalgebra, hopf_subalgebra, subgroup_hopf_subalgebra
from linalg import Field, FieldKind, Matrix, SparseVector
from weak_hopf import WeakBialgebra, build_groupoid_wha, weak_hopf_from

LOGGER = logging.getLogger(__name__)

ScalarLike = Union[StrictInt, str]
ElementSpec = Union[str, List[ScalarLike]]
Quadruple = Tuple[int, int, int, ScalarLike]


class _Block(BaseModel):
    model_config = ConfigDict(extra="forbid")


class FieldBlock(_Block):
    kind: FieldKind = FieldKind.RATIONAL
    p: Optional[int] = None

    @model_validator(mode="after")
    def _modulus_matches_kind(self) -> "FieldBlock":
        if self.kind is FieldKind.PRIME and self.p is None:
            raise ValueError("a prime field needs p")
        if self.kind is FieldKind.RATIONAL and self.p is not None:
            raise ValueError("the rational field takes no p")
        return self


class GroupBlock(_Block):
    elements: Optional[List[str]] = None
    table: Optional[List[List[str]]] = None
    symmetric: Optional[int] = SchemaField(default=None, ge=1)
    cyclic: Optional[int] = SchemaField(default=None, ge=1)

    @model_validator(mode="after")
    def _one_description(self) -> "GroupBlock":
        given = [self.elements is not None or self.table is not None, self.symmetric is not None, self.cyclic is not None]
        if sum(given) != 1:
            raise ValueError("give exactly one of elements+table, symmetric or cyclic")
        if given[0] and (self.elements is None or self.table is None):
            raise ValueError("elements and table go together")
        return self


class AlgebraBlock(_Block):
    labels: Optional[List[str]] = None
    dim: Optional[int] = SchemaField(default=None, ge=1)
    unit: Optional[List[ScalarLike]] = None
    constants: List[Quadruple] = SchemaField(default_factory=list)
    group: Optional[GroupBlock] = None
    matrix: Optional[int] = SchemaField(default=None, ge=1)

    @model_validator(mode="after")
    def _one_description(self) -> "AlgebraBlock":
        explicit = self.labels is not None or self.dim is not None
        if sum([explicit, self.group is not None, self.matrix is not None]) != 1:
            raise ValueError("give exactly one of labels/dim with constants, group or matrix")
        if explicit and self.unit is None:
            raise ValueError("structure constants need a unit vector")
        if self.labels is not None and self.dim is not None and len(self.labels) != self.dim:
            raise ValueError(f"dim {self.dim} differs from {len(self.labels)} labels")
        return self


class ExtensionBlock(_Block):
    ambient: str = "A"
    sub: List[ElementSpec]
    name: str = "B"


class CoalgebraBlock(_Block):
    algebra: str = "A"
    shortcut: Optional[Literal["group", "groupoid"]] = None
    coproduct: List[Quadruple] = SchemaField(default_factory=list)
    counit: Optional[List[ScalarLike]] = None
    antipode: Optional[List[List[ScalarLike]]] = None

    @model_validator(mode="after")
    def _shortcut_or_tables(self) -> "CoalgebraBlock":
        if self.shortcut is None and (not self.coproduct or self.counit is None):
            raise ValueError("give a shortcut or both coproduct and counit")
        if self.shortcut is not None and (self.coproduct or self.counit is not None or self.antipode is not None):
            raise ValueError(f"the {self.shortcut} shortcut takes no tables")
        return self


class SubalgebraBlock(_Block):
    generators: Optional[List[str]] = None
    vectors: Optional[List[ElementSpec]] = None
    name: str = "K"

    @model_validator(mode="after")
    def _one_description(self) -> "SubalgebraBlock":
        if (self.generators is None) == (self.vectors is None):
            raise ValueError("give exactly one of generators or vectors")
        return self


class CoactionBlock(_Block):
    """``rho`` quadruples ``(a, b, h, c)`` mean ``ρ(a_a) ∋ c·a_b ⊗ h_h``; omitted means Δ on H itself."""

    algebra: Optional[str] = None
    rho: Optional[List[Quadruple]] = None

    @model_validator(mode="after")
    def _rho_with_algebra(self) -> "CoactionBlock":
        if (self.algebra is None) != (self.rho is None):
            raise ValueError("algebra and rho go together")
        return self


class WitnessBlock(_Block):
    quotient: bool = False
    coalgebra: Optional[CoalgebraBlock] = None
    rho: Optional[List[Quadruple]] = None

    @model_validator(mode="after")
    def _quotient_or_tables(self) -> "WitnessBlock":
        explicit = self.coalgebra is not None and self.rho is not None
        if self.quotient == explicit:
            raise ValueError("give quotient: true or both coalgebra and rho")
        return self


class InstanceModel(_Block):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    name: str
    description: str = ""
    field_spec: FieldBlock = SchemaField(default_factory=FieldBlock, alias="field")
    algebras: Dict[str, AlgebraBlock]
    extension: Optional[ExtensionBlock] = None
    coalgebra: Optional[CoalgebraBlock] = None
    subalgebra: Optional[SubalgebraBlock] = None
    coaction: Optional[CoactionBlock] = None
    witness: Optional[WitnessBlock] = None


# parsed instance ---------------------------------------------------------------------------


@dataclass
class InstanceFile:
    """Validated structures of one instance."""

    name: str
    field: Field
    algebras: Dict[str, FDAlgebra]
    groups: Dict[str, FiniteGroup] = field(default_factory=dict)
    description: str = ""
    extension: Optional[Extension] = None
    coalgebra: Optional[CoalgebraData] = None
    subalgebra: Optional[HopfSubalgebra] = None
    coaction: Optional[Tuple[FDAlgebra, Matrix]] = None
    witness: Optional[Tuple[HopfAlgebra, Matrix]] = None
    quotient_witness: bool = False
    source: str = ""

    def require_extension(self, command: str) -> Extension:
        if self.extension is None:
            raise InstanceError(f"'{command}' needs an extension block", self.name)
        return self.extension

    def require_coalgebra(self, command: str) -> CoalgebraData:
        if self.coalgebra is None:
            raise InstanceError(f"'{command}' needs a coalgebra block", self.name)
        return self.coalgebra

    def require_hopf(self, command: str) -> HopfAlgebra:
        data = self.require_coalgebra(command)
        if not isinstance(data, HopfAlgebra):
            raise InstanceError(f"'{command}' needs a Hopf algebra with antipode", f"{self.name}.coalgebra")
        return data

    def require_weak(self, command: str) -> WeakBialgebra:
        data = self.require_coalgebra(command)
        if isinstance(data, WeakBialgebra):
            return data
        return weak_hopf_from(data, getattr(data, "antipode", None))

    def require_subalgebra(self, command: str) -> HopfSubalgebra:
        if self.subalgebra is None:
            raise InstanceError(f"'{command}' needs a subalgebra block", self.name)
        return self.subalgebra


def _location(loc: Tuple[Union[int, str], ...]) -> str:
    out = ""
    for part in loc:
        if isinstance(part, int):
            out += f"[{part}]"
        else:
            out += f".{part}" if out else str(part)
    return out


def _scalar(field_: Field, value: ScalarLike, where: str) -> Any:
    try:
        return field_(value)
    except ValueError as exc:
        raise InstanceError(str(exc), where) from exc


def _vector(algebra: FDAlgebra, spec: ElementSpec, where: str) -> SparseVector:
    try:
        if isinstance(spec, str):
            return dict(enumerate(algebra.element(spec)))
        if len(spec) != algebra.dim:
            raise ValueError(f"expected {algebra.dim} coordinates, got {len(spec)}")
        return {k: algebra.field(value) for k, value in enumerate(spec)}
    except ValueError as exc:
        raise InstanceError(str(exc), where) from exc


def _group(block: GroupBlock, where: str, name: str) -> FiniteGroup:
    try:
        if block.symmetric is not None:
            return symmetric_group(block.symmetric)
        if block.cyclic is not None:
            return cyclic_group(block.cyclic)
        return FiniteGroup.from_labels(block.elements or [], block.table or [], name)
    except (StructureError, ValueError) as exc:
        raise InstanceError(str(exc), f"{where}.group") from exc


def _algebra(name: str, block: AlgebraBlock, field_: Field, groups: Dict[str, FiniteGroup]) -> FDAlgebra:
    where = f"algebras.{name}"
    if block.group is not None:
        group = _group(block.group, where, name)
        groups[name] = group
        return build_group_algebra(group, field_, name)
    if block.matrix is not None:
        return build_matrix_algebra(block.matrix, field_, name)
    labels = block.labels or [f"b{k}" for k in range(block.dim or 0)]
    unit = [_scalar(field_, value, f"{where}.unit[{k}]") for k, value in enumerate(block.unit or [])]
    if len(unit) != len(labels):
        raise InstanceError(f"unit has {len(unit)} entries for {len(labels)} basis elements", f"{where}.unit")
    constants = [
        (i, j, k, _scalar(field_, value, f"{where}.constants[{index}]"))
        for index, (i, j, k, value) in enumerate(block.constants)
    ]
    try:
        algebra = FDAlgebra.from_structure_constants(field_, labels, constants, unit, name)
        return algebra.validated()
    except StructureError as exc:
        raise InstanceError(str(exc), f"{where}.constants") from exc


def _coalgebra(
    block: CoalgebraBlock, where: str, algebras: Dict[str, FDAlgebra], groups: Dict[str, FiniteGroup]
) -> CoalgebraData:
    algebra = _lookup(algebras, block.algebra, f"{where}.algebra")
    field_ = algebra.field
    if block.shortcut == "group":
        if block.algebra not in groups:
            raise InstanceError(f"{block.algebra} is not given by a group", f"{where}.shortcut")
        return group_hopf_algebra(groups[block.algebra], field_, algebra.name)
    if block.shortcut == "groupoid":
        n = round(algebra.dim ** 0.5)
        if n * n != algebra.dim or algebra.labels[0] != "e11":
            raise InstanceError(f"{block.algebra} is not a matrix algebra", f"{where}.shortcut")
        return build_groupoid_wha(n, field_, algebra.name)
    terms = [
        (i, j, k, _scalar(field_, value, f"{where}.coproduct[{index}]"))
        for index, (i, j, k, value) in enumerate(block.coproduct)
    ]
    antipode = None
    if block.antipode is not None:
        try:
            antipode = Matrix.from_rows(field_, block.antipode)
        except ValueError as exc:
            raise InstanceError(str(exc), f"{where}.antipode") from exc
    try:
        data = hopf_from_tables(algebra, terms, block.counit or [], antipode)
    except (StructureError, ValueError) as exc:
        raise InstanceError(str(exc), where) from exc
    return data


def _lookup(algebras: Dict[str, FDAlgebra], name: str, where: str) -> FDAlgebra:
    try:
        return algebras[name]
    except KeyError as exc:
        raise InstanceError(f"unknown algebra {name!r}", where) from exc


def _coaction_matrix(algebra: FDAlgebra, h_dim: int, quads: List[Quadruple], where: str) -> Matrix:
    n = algebra.dim
    columns: List[SparseVector] = [{} for _ in range(n)]
    for index, (a, b, h, value) in enumerate(quads):
        if not (0 <= a < n and 0 <= b < n and 0 <= h < h_dim):
            raise InstanceError(f"index out of range in ({a}, {b}, {h})", f"{where}[{index}]")
        cell = columns[a]
        position = b * h_dim + h
        cell[position] = algebra.field.normalize(cell.get(position, 0) + _scalar(algebra.field, value, f"{where}[{index}]"))
    return Matrix.from_columns(algebra.field, n * h_dim, columns)


def build_instance(model: InstanceModel, source: str = "") -> InstanceFile:
    """Turn a schema-valid model into validated structures, raising located errors."""

    spec = model.field_spec
    try:
        field_ = Field.prime(spec.p) if spec.kind is FieldKind.PRIME else Field.rational()
    except ValueError as exc:
        raise InstanceError(str(exc), "field.p") from exc
    groups: Dict[str, FiniteGroup] = {}
    algebras = {name: _algebra(name, block, field_, groups) for name, block in model.algebras.items()}
    instance = InstanceFile(model.name, field_, algebras, groups, model.description, source=source)

    if model.extension is not None:
        block = model.extension
        ambient = _lookup(algebras, block.ambient, "extension.ambient")
        vectors = [_vector(ambient, spec_, f"extension.sub[{k}]") for k, spec_ in enumerate(block.sub)]
        try:
            instance.extension = ambient.subalgebra(vectors, block.name)
        except StructureError as exc:
            raise InstanceError(str(exc), "extension.sub") from exc

    if model.coalgebra is not None:
        instance.coalgebra = _coalgebra(model.coalgebra, "coalgebra", algebras, groups)

    if model.subalgebra is not None:
        block_k = model.subalgebra
        parent = instance.require_hopf("subalgebra")
        try:
            if block_k.generators is not None:
                group = groups.get(model.coalgebra.algebra if model.coalgebra else "")
                if group is None:
                    raise InstanceError("generators need a group algebra", "subalgebra.generators")
                instance.subalgebra = subgroup_hopf_subalgebra(parent, group, block_k.generators, block_k.name)
            else:
                vectors = [_vector(parent.algebra, v, f"subalgebra.vectors[{k}]") for k, v in enumerate(block_k.vectors or [])]
                instance.subalgebra = hopf_subalgebra(parent, vectors, block_k.name)
        except (StructureError, ValueError) as exc:
            if isinstance(exc, InstanceError):
                raise
            raise InstanceError(str(exc), "subalgebra") from exc

    if model.coaction is not None and model.coaction.algebra is not None:
        h = instance.require_coalgebra("coaction")
        algebra = _lookup(algebras, model.coaction.algebra, "coaction.algebra")
        instance.coaction = (algebra, _coaction_matrix(algebra, h.dim, model.coaction.rho or [], "coaction.rho"))

    if model.witness is not None:
        if model.witness.quotient:
            instance.quotient_witness = True
        else:
            w = _coalgebra(model.witness.coalgebra, "witness.coalgebra", algebras, groups)  # type: ignore[arg-type]
            if not isinstance(w, HopfAlgebra):
                raise InstanceError("the witness needs an antipode", "witness.coalgebra.antipode")
            parent = instance.require_hopf("witness")
            rho = _coaction_matrix(parent.algebra, w.dim, model.witness.rho or [], "witness.rho")
            instance.witness = (w, rho)
    LOGGER.debug("instance %s: algebras %s", model.name, ", ".join(f"{k}({a.dim})" for k, a in algebras.items()))
    return instance


def instance_from_dict(payload: Dict[str, Any], source: str = "") -> InstanceFile:
    try:
        model = InstanceModel.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise InstanceError(first["msg"], _location(tuple(first["loc"]))) from exc
    return build_instance(model, source)


def load_document(path: Union[str, Path]) -> Dict[str, Any]:
    """Read a JSON or YAML document into a dict."""

    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InstanceError(f"cannot read file: {exc.strerror}", str(path)) from exc
    if path.suffix in (".yaml", ".yml"):
        spec = importlib.util.find_spec("yaml")
        if spec is None or spec.loader is None:
            raise InstanceError("PyYAML is required to load YAML files", str(path))
        module = importlib.import_module("yaml")
        try:
            payload = module.safe_load(text)  # type: ignore[attr-defined]
        except module.YAMLError as exc:  # type: ignore[attr-defined]
            raise InstanceError(f"YAML syntax error: {exc}", str(path)) from exc
    else:
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InstanceError(f"JSON syntax error: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}") from exc
    if not isinstance(payload, dict):
        raise InstanceError("top level must be a mapping", str(path))
    return payload


def parse_instance(path: Union[str, Path]) -> InstanceFile:
    return instance_from_dict(load_document(path), str(path))


__all__ = [
    "AlgebraBlock",
    "CoactionBlock",
    "CoalgebraBlock",
    "ExtensionBlock",
    "FieldBlock",
    "GroupBlock",
    "InstanceFile",
    "InstanceModel",
    "SubalgebraBlock",
    "WitnessBlock",
    "build_instance",
    "instance_from_dict",
    "load_document",
    "parse_instance",
]
