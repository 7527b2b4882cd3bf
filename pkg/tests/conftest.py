"""Shared fixtures for the expensive catalog constructions."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).resolve().parents[1]))

from catalog import load_catalog
from instance_file import InstanceFile

INSTANCES = Path(__file__).resolve().parents[1] / "instances"


@pytest.fixture(scope="session")
def s3_a3() -> InstanceFile:
    return load_catalog("s3-a3")


@pytest.fixture(scope="session")
def s3_c2() -> InstanceFile:
    return load_catalog("s3-c2")


@pytest.fixture(scope="session")
def m2_diagonal() -> InstanceFile:
    return load_catalog("m2-diagonal")


@pytest.fixture(scope="session")
def instances_dir() -> Path:
    return INSTANCES
