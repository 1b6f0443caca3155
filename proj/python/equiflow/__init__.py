"""Python bindings for equiflow.

Reports are returned as plain dicts parsed from the canonical JSON the CLI
prints. Inputs are file paths or ``catalog:<name>`` references.
"""

import json
from dataclasses import dataclass

from ._equiflow import (
    EquiflowError,
    GComplex,
    __version__,
    barycentric_subdivision,
    catalog,
    catalog_names,
    complex_from_json,
    ensure_regular,
)
from ._equiflow import run as _run

__all__ = [
    "EquiflowError",
    "GComplex",
    "Result",
    "__version__",
    "barycentric_subdivision",
    "catalog",
    "catalog_names",
    "complex_from_json",
    "construct_displacement",
    "construct_matching",
    "decide_cipd",
    "decide_path_field",
    "ensure_regular",
    "euler",
    "run",
    "stratify",
    "validate",
    "verify_displacement",
]


@dataclass(frozen=True)
class Result:
    report: dict
    exit_code: int
    table: str

    @property
    def verdict(self):
        return self.report.get("verdict")


def run(command, source, *, fixed_set=None, map_file=None, times=1, cancel=False, max_group=48):
    text, code, table = _run(command, source, fixed_set, map_file, times, cancel, max_group)
    return Result(json.loads(text), code, table)


def validate(source):
    return run("validate", source)


def stratify(source):
    return run("stratify", source)


def euler(source):
    return run("euler", source)


def decide_path_field(source):
    return run("decide path-field", source)


def decide_cipd(source, fixed_set):
    return run("decide cipd", source, fixed_set=fixed_set)


def construct_matching(source, cancel=False):
    return run("construct matching", source, cancel=cancel)


def construct_displacement(source, fixed_set=None):
    return run("construct displacement", source, fixed_set=fixed_set)


def verify_displacement(source, map_file):
    return run("verify displacement", source, map_file=map_file)
