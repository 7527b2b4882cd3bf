"""Instance files: schema validation, located errors and the structures they build."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from check_types import InstanceError
from instance_file import instance_from_dict, load_document, parse_instance
from linalg import FieldKind
from weak_hopf import WeakHopfAlgebra

INSTANCE_FILES = sorted((Path(__file__).resolve().parents[1] / "instances").iterdir())


def _matrix_payload(**overrides) -> dict:
    payload = {
        "name": "m2",
        "algebras": {"A": {"matrix": 2}},
        "extension": {"ambient": "A", "sub": ["e11", "e22"]},
        "coalgebra": {"algebra": "A", "shortcut": "groupoid"},
    }
    payload.update(overrides)
    return payload


@pytest.mark.parametrize("path", INSTANCE_FILES, ids=lambda p: p.name)
def test_shipped_instances_parse(path) -> None:
    instance = parse_instance(path)
    assert instance.name == path.stem
    assert instance.source == str(path)


def test_yaml_instance(instances_dir) -> None:
    instance = parse_instance(instances_dir / "groupoid-3.yaml")
    assert instance.field.kind is FieldKind.RATIONAL
    assert instance.algebras["A"].dim == 9
    assert instance.extension is not None and instance.extension.sub.dim == 3
    assert isinstance(instance.require_weak("test"), WeakHopfAlgebra)


def test_schema_error_is_located() -> None:
    payload = _matrix_payload(algebras={"A": {"matrix": 0}})
    with pytest.raises(InstanceError) as info:
        instance_from_dict(payload)
    assert info.value.location == "algebras.A.matrix"


def test_unknown_key_is_rejected() -> None:
    with pytest.raises(InstanceError) as info:
        instance_from_dict(_matrix_payload(bogus=1))
    assert info.value.location == "bogus"


def test_prime_field_needs_p() -> None:
    with pytest.raises(InstanceError) as info:
        instance_from_dict(_matrix_payload(field={"kind": "prime"}))
    assert info.value.location.startswith("field")


def test_composite_modulus_is_rejected() -> None:
    with pytest.raises(InstanceError) as info:
        instance_from_dict(_matrix_payload(field={"kind": "prime", "p": 4}))
    assert info.value.location == "field.p"


def test_unknown_algebra_is_rejected() -> None:
    payload = _matrix_payload(extension={"ambient": "X", "sub": ["e11"]})
    with pytest.raises(InstanceError) as info:
        instance_from_dict(payload)
    assert info.value.location == "extension.ambient"


def test_groupoid_shortcut_needs_matrix_units() -> None:
    payload = {
        "name": "bad",
        "algebras": {"A": {"group": {"cyclic": 4}}},
        "coalgebra": {"algebra": "A", "shortcut": "groupoid"},
    }
    with pytest.raises(InstanceError) as info:
        instance_from_dict(payload)
    assert info.value.location == "coalgebra.shortcut"


def test_coaction_matrix_is_built() -> None:
    payload = _matrix_payload(
        algebras={"A": {"matrix": 2}, "H": {"group": {"cyclic": 2}}},
        coalgebra={"algebra": "H", "shortcut": "group"},
        coaction={"algebra": "A", "rho": [[a, a, 0, 1] for a in range(4)]},
    )
    instance = instance_from_dict(payload)
    assert instance.coaction is not None
    algebra, rho = instance.coaction
    assert algebra.dim == 4
    assert rho.shape == (8, 4)


def test_coaction_index_out_of_range() -> None:
    payload = _matrix_payload(
        algebras={"A": {"matrix": 2}, "H": {"group": {"cyclic": 2}}},
        coalgebra={"algebra": "H", "shortcut": "group"},
        coaction={"algebra": "A", "rho": [[0, 0, 2, 1]]},
    )
    with pytest.raises(InstanceError) as info:
        instance_from_dict(payload)
    assert info.value.location == "coaction.rho[0]"


def test_json_syntax_error_carries_line_and_column(tmp_path) -> None:
    path = tmp_path / "broken.json"
    path.write_text('{\n  "name": ,\n}\n', encoding="utf-8")
    with pytest.raises(InstanceError) as info:
        load_document(path)
    assert info.value.location.startswith(f"{path}:2:")


def test_top_level_must_be_a_mapping(tmp_path) -> None:
    path = tmp_path / "list.json"
    path.write_text(json.dumps([1, 2]), encoding="utf-8")
    with pytest.raises(InstanceError, match="mapping"):
        load_document(path)


def test_missing_file(tmp_path) -> None:
    with pytest.raises(InstanceError, match="cannot read"):
        parse_instance(tmp_path / "absent.json")


def _one_element_payload(unit, value) -> dict:
    return {
        "name": "bad",
        "algebras": {"A": {"labels": ["u"], "unit": [unit], "constants": [[0, 0, 0, value]]}},
    }


ZERO_DENOMINATOR_CASES = [
    ("1/0", 1, "algebras.A.unit[0]"),
    (1, "1/0", "algebras.A.constants[0]"),
    (" 3/0 ", 1, "algebras.A.unit[0]"),
]


@pytest.mark.parametrize("unit, value, location", ZERO_DENOMINATOR_CASES)
def test_zero_denominator_is_located(unit, value, location) -> None:
    with pytest.raises(InstanceError) as info:
        instance_from_dict(_one_element_payload(unit, value))
    assert info.value.location == location
    assert "Not a scalar" in str(info.value)
