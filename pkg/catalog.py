"""Built-in instances, stored as instance-file documents and parsed like user files."""

from __future__ import annotations

from typing import Any, Callable, Dict, List

from check_types import InstanceError
from instance_file import InstanceFile, instance_from_dict

S3_A3 = ["()", "(123)", "(132)"]


def _rational() -> Dict[str, Any]:
    return {"kind": "rational"}


def _prime(p: int) -> Dict[str, Any]:
    return {"kind": "prime", "p": p}


def _group_instance(name: str, group: Dict[str, int], field: Dict[str, Any], description: str) -> Dict[str, Any]:
    """``k[G]`` as a Hopf algebra over itself (B = A)."""

    payload: Dict[str, Any] = {
        "name": name,
        "description": description,
        "field": field,
        "algebras": {"A": {"group": group}},
        "coalgebra": {"algebra": "A", "shortcut": "group"},
    }
    return payload


def _s3(name: str, sub: List[str], generators: List[str], description: str, quotient: bool) -> Dict[str, Any]:
    payload = {
        "name": name,
        "description": description,
        "field": _rational(),
        "algebras": {"A": {"group": {"symmetric": 3}}},
        "extension": {"ambient": "A", "sub": sub, "name": "B"},
        "coalgebra": {"algebra": "A", "shortcut": "group"},
        "subalgebra": {"generators": generators, "name": "K"},
    }
    if quotient:
        payload["witness"] = {"quotient": True}
    return payload


def _matrix(name: str, n: int, sub: List[str], field: Dict[str, Any], description: str) -> Dict[str, Any]:
    return {
        "name": name,
        "description": description,
        "field": field,
        "algebras": {"A": {"matrix": n}},
        "extension": {"ambient": "A", "sub": sub, "name": "B"},
        "coalgebra": {"algebra": "A", "shortcut": "groupoid"},
    }


def _diagonal(n: int) -> List[str]:
    return [f"e{i}{i}" for i in range(1, n + 1)]


def _all_units(n: int) -> List[str]:
    return [f"e{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]


def _with_extension(payload: Dict[str, Any], sub: List[str]) -> Dict[str, Any]:
    payload["extension"] = {"ambient": "A", "sub": sub, "name": "B"}
    return payload


CATALOG: Dict[str, Callable[[], Dict[str, Any]]] = {
    "s3-a3": lambda: _s3("s3-a3", S3_A3, ["(123)"], "Q[S3] over Q[A3]: normal, depth two", True),
    "s3-c2": lambda: _s3("s3-c2", ["()", "(12)"], ["(12)"], "Q[S3] over Q[<(12)>]: not normal", False),
    "m2-diagonal": lambda: _matrix("m2-diagonal", 2, _diagonal(2), _rational(), "M2(Q) over its diagonal"),
    "m2-scalars": lambda: _matrix("m2-scalars", 2, ["e11 + e22"], _rational(), "M2(Q) over Q·1"),
    "m2-center": lambda: _matrix("m2-center", 2, _all_units(2), _rational(), "M2(Q) over itself: R is the center"),
    "groupoid-1": lambda: _matrix("groupoid-1", 1, ["e11"], _rational(), "the pair groupoid on one object"),
    "groupoid-2": lambda: _matrix("groupoid-2", 2, _diagonal(2), _rational(), "M2(Q) as a groupoid algebra"),
    "groupoid-3": lambda: _matrix("groupoid-3", 3, _diagonal(3), _rational(), "M3(Q) as a groupoid algebra"),
    "groupoid-2-f2": lambda: _matrix("groupoid-2-f2", 2, _diagonal(2), _prime(2), "M2(F2): ε(1) = 0"),
    "c2": lambda: _with_extension(_group_instance("c2", {"cyclic": 2}, _rational(), "Q[C2]"), ["1", "g"]),
    "c3": lambda: _with_extension(_group_instance("c3", {"cyclic": 3}, _rational(), "Q[C3]"), ["1", "g", "g^2"]),
    "s3": lambda: _with_extension(_group_instance("s3", {"symmetric": 3}, _rational(), "Q[S3]"), [
        "()", "(23)", "(12)", "(123)", "(132)", "(13)",
    ]),
    "c3-f3": lambda: _with_extension(
        _group_instance("c3-f3", {"cyclic": 3}, _prime(3), "F3[C3]: not separable"), ["1", "g", "g^2"]
    ),
    "m2-f2": lambda: _matrix("m2-f2", 2, _all_units(2), _prime(2), "M2(F2) over itself: not Kanzaki separable"),
}


def catalog_names() -> List[str]:
    return list(CATALOG)


def catalog_document(name: str) -> Dict[str, Any]:
    try:
        return CATALOG[name]()
    except KeyError as exc:
        raise InstanceError(f"unknown catalog instance {name!r}; known: {', '.join(CATALOG)}", "--catalog") from exc


def load_catalog(name: str) -> InstanceFile:
    return instance_from_dict(catalog_document(name), f"catalog:{name}")


__all__ = ["CATALOG", "catalog_document", "catalog_names", "load_catalog"]
