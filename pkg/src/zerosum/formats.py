"""Shared JSON formats: one canonical encoding used by every CLI command.

Instances are {"format": 1, "group": {"free_rank": r, "torsion": [...]},
"elements": [[coords], ...]} with free coordinates first and torsion residues
after.  All indices in emitted JSON are 0-based positions into the canonical
(sorted, deduplicated) element list, which commands echo back.
"""
from __future__ import annotations

import json
from typing import Any

import numpy as np

from . import groups
from .char3 import AdditiveQuadruple, AuditReport, ZeroSumList
from .extractor import Trail, ZeroSumCertificate
from .groups import GroupElement, GroupSpec
from .sumfull import InputSet, RepresentationTable
from .witness import ConstraintMatrix, WitnessSubset, validate_membership

FORMAT_VERSION = 1


class InputFormatError(ValueError):
    """The supplied JSON does not match the shared format."""


def dumps_canonical(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def require_field(obj: Any, key: str, kind) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise InputFormatError(f"missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise InputFormatError(f"field {key!r} has the wrong type")
    return value


def group_to_json(g: GroupSpec) -> dict:
    return {"free_rank": g.free_rank, "torsion": list(g.torsion)}


def group_from_json(obj: Any) -> GroupSpec:
    free_rank = require_field(obj, "free_rank", int)
    torsion = require_field(obj, "torsion", list)
    try:
        return GroupSpec(free_rank, tuple(int(m) for m in torsion))
    except (TypeError, ValueError) as exc:
        raise InputFormatError(str(exc)) from exc


def elements_from_json(obj: Any, g: GroupSpec) -> list[GroupElement]:
    if not isinstance(obj, list):
        raise InputFormatError("'elements' must be a list of coordinate lists")
    out = []
    for row in obj:
        if not isinstance(row, list) or not all(isinstance(c, int) for c in row):
            raise InputFormatError("each element must be a list of integers")
        try:
            out.append(groups.element(g, row))
        except (ValueError, OverflowError) as exc:
            raise InputFormatError(str(exc)) from exc
    return out


def instance_from_json(obj: Any) -> InputSet:
    g = group_from_json(require_field(obj, "group", dict))
    els = elements_from_json(require_field(obj, "elements", list), g)
    try:
        return InputSet.from_elements(g, els)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


def instance_to_json(a: InputSet) -> dict:
    return {
        "format": FORMAT_VERSION,
        "group": group_to_json(a.spec),
        "elements": [groups.coords(x) for x in a.elements],
    }


def matrix_from_json(obj: Any) -> ConstraintMatrix:
    rows = require_field(obj, "matrix", list)
    if not rows or not all(isinstance(r, list) and all(isinstance(c, int) for c in r) for r in rows):
        raise InputFormatError("'matrix' must be a non-empty list of integer rows")
    if any(len(r) != len(rows) for r in rows):
        raise InputFormatError("'matrix' must be square")
    return validate_membership(rows)


def witness_to_json(w: WitnessSubset) -> dict:
    return {"rows": list(w.rows), "vector": list(w.vector)}


def witness_from_json(obj: Any) -> WitnessSubset:
    rows = require_field(obj, "rows", list)
    vector = require_field(obj, "vector", list)
    return WitnessSubset(tuple(int(r) for r in rows), tuple(int(v) for v in vector))


def trail_to_json(t: Trail) -> dict:
    return {
        "reps": [list(pair) for pair in t.table.reps],
        "matrix": t.matrix.tolist(),
        "witness": witness_to_json(t.witness),
    }


def trail_from_json(obj: Any) -> Trail:
    reps = require_field(obj, "reps", list)
    table = RepresentationTable(tuple((int(i), int(j)) for i, j in reps))
    rows = require_field(obj, "matrix", list)
    matrix = ConstraintMatrix(np.array(rows, dtype=np.int64))
    return Trail(table, matrix, witness_from_json(require_field(obj, "witness", dict)))


def certificate_to_json(a: InputSet, c: ZeroSumCertificate) -> dict:
    payload = instance_to_json(a)
    payload["subset"] = list(c.subset)
    payload["sum_check"] = "zero"
    payload["trail"] = None if c.trail is None else trail_to_json(c.trail)
    return payload


def certificate_from_json(obj: Any) -> tuple[InputSet, ZeroSumCertificate]:
    a = instance_from_json(obj)
    subset = tuple(int(k) for k in require_field(obj, "subset", list))
    if any(k < 0 or k >= len(a.elements) for k in subset):
        raise InputFormatError("certificate subset index out of range")
    elements = tuple(a.elements[k] for k in subset)
    raw_trail = obj.get("trail")
    trail = None if raw_trail is None else trail_from_json(raw_trail)
    return a, ZeroSumCertificate(subset, elements, trail)


def quadruple_to_json(q: AdditiveQuadruple) -> list[list[int]]:
    return [groups.coords(x) for x in q.as_tuple()]


def chain_outcome_to_json(a: InputSet, outcome) -> dict:
    if isinstance(outcome, ZeroSumList):
        pos = a.positions()
        return {
            "format": FORMAT_VERSION,
            "outcome": "zero_sum_list",
            "elements": [groups.coords(x) for x in outcome.elements],
            "indices": [pos[x] for x in outcome.elements],
            "distinct": outcome.distinct,
        }
    return {
        "format": FORMAT_VERSION,
        "outcome": "quadruple",
        "quadruple": quadruple_to_json(outcome),
    }


def report_to_json(r: AuditReport) -> dict:
    return {
        "format": FORMAT_VERSION,
        "size": r.size,
        "ambient_dimension": r.ambient_dimension,
        "span_rank": r.span_rank,
        "restricted_to_span": r.restricted_to_span,
        "steps": [{"step": s.name, "passed": s.passed, "detail": s.detail} for s in r.steps],
        "failing_step": r.failing_step,
        "zero_sum_indices": None if r.zero_sum_indices is None else list(r.zero_sum_indices),
    }
