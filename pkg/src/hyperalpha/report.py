"""Report serialization: JSON (17 significant digit floats), CSV, and text.

The JSON layout for a bounds report is fixed: instance, quantities, bounds,
and checks[] entries each carrying {name, status, lhs, rhs, slack}. CSV and
text renderings flatten the same tree with dotted keys, reusing the exact
float strings so all formats carry identical numeric values.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .bounds import BoundsReport
from .combinatorics import CutResult
from .solver import AlphaResult


def fmt_float(v: float) -> str:
    v = float(v)
    if math.isnan(v) or math.isinf(v):
        raise ValueError("non-finite float in report")
    return format(v, ".17g")


def _emit(obj, out):
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(fmt_float(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(k)))
            out.append(": ")
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(", ")
            _emit(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")


def dumps(obj) -> str:
    out: list[str] = []
    _emit(obj, out)
    return "".join(out)


def cut_to_dict(cut: CutResult) -> dict:
    return {
        "value": float(cut.value),
        "numerator": cut.value.numerator,
        "denominator": cut.value.denominator,
        "witness_set": list(cut.witness_set),
        "boundary_size": cut.boundary_size,
    }


def _diameter_field(d):
    if d is None:
        return None
    if math.isinf(d):
        return "infinite"
    return int(d)


def alpha_to_dict(res: AlphaResult) -> dict:
    return {
        "alpha": res.alpha,
        "per_vertex": list(res.per_vertex),
        "fixed_vertex": res.fixed_vertex,
        "witness": list(res.witness),
        "converged": [list(flags) for flags in res.converged],
    }


def report_to_dict(report: BoundsReport) -> dict:
    return {
        "instance": {
            "n": report.n,
            "edge_count": report.edge_count,
            "m": report.m,
            "s_min": report.s_min,
            "max_degree": report.max_degree,
            "connected": report.connected,
            "has_nested_edges": report.has_nested_edges,
            "has_spanning_edge": report.has_spanning_edge,
        },
        "quantities": {
            "alpha_estimate": report.alpha_estimate,
            "oracle_value": report.oracle_value,
            "alpha_certified": report.alpha_certified,
            "fixed_vertex": report.fixed_vertex,
            "diameter": _diameter_field(report.diameter),
            "isoperimetric": cut_to_dict(report.iso) if report.iso else None,
            "lambda2_clique": report.lambda2_clique,
        },
        "bounds": {
            "diameter_lower": report.diameter_lower,
            "degree_upper": report.degree_upper,
            "degree_upper_nonspanning": report.degree_upper_nonspanning,
            "cheeger_lower": report.cheeger_lower,
            "cheeger_upper": report.cheeger_upper,
        },
        "checks": [
            {"name": c.name, "status": c.status, "lhs": c.lhs, "rhs": c.rhs,
             "slack": c.slack}
            for c in report.checks
        ],
    }


def flatten(obj, prefix="") -> list[tuple[str, str]]:
    rows: list[tuple[str, str]] = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            rows.extend(flatten(v, f"{prefix}{k}."))
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            rows.extend(flatten(v, f"{prefix}{i}."))
    else:
        key = prefix[:-1]
        if obj is None:
            rows.append((key, ""))
        elif obj is True:
            rows.append((key, "true"))
        elif obj is False:
            rows.append((key, "false"))
        elif isinstance(obj, (int, np.integer)):
            rows.append((key, str(int(obj))))
        elif isinstance(obj, (float, np.floating)):
            rows.append((key, fmt_float(obj)))
        else:
            rows.append((key, str(obj)))
    return rows


def render_csv(obj) -> str:
    lines = ["key,value"]
    for key, value in flatten(obj):
        if "," in value or '"' in value:
            value = '"' + value.replace('"', '""') + '"'
        lines.append(f"{key},{value}")
    return "\n".join(lines) + "\n"


def render_text(obj) -> str:
    rows = flatten(obj)
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows) + "\n"


def render(obj, fmt: str) -> str:
    if fmt == "json":
        return dumps(obj) + "\n"
    if fmt == "csv":
        return render_csv(obj)
    if fmt == "text":
        return render_text(obj)
    raise ValueError(f"unknown format {fmt!r}")


_FLOAT_OR_NULL = {"type": ["number", "null"]}
ALPHA_DETAIL_SCHEMA = {
    "type": "object",
    "required": ["alpha", "per_vertex", "fixed_vertex", "witness", "converged"],
    "properties": {
        "alpha": {"type": "number"},
        "per_vertex": {"type": "array", "items": {"type": "number"}},
        "fixed_vertex": {"type": "integer"},
        "witness": {"type": "array", "items": {"type": "number"}},
        "converged": {"type": "array",
                      "items": {"type": "array", "items": {"type": "boolean"}}},
    },
    "additionalProperties": False,
}
_CHECK_SCHEMA = {
    "type": "object",
    "required": ["name", "status", "lhs", "rhs", "slack"],
    "properties": {
        "name": {"type": "string"},
        "status": {"enum": ["holds", "violated", "not-applicable"]},
        "lhs": _FLOAT_OR_NULL,
        "rhs": _FLOAT_OR_NULL,
        "slack": _FLOAT_OR_NULL,
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["instance", "quantities", "bounds", "checks"],
    "properties": {
        "index": {"type": "integer"},
        "alpha_detail": ALPHA_DETAIL_SCHEMA,
        "instance": {
            "type": "object",
            "required": ["n", "edge_count", "m", "s_min", "max_degree",
                         "connected", "has_nested_edges", "has_spanning_edge"],
            "properties": {
                "n": {"type": "integer"},
                "edge_count": {"type": "integer"},
                "m": {"type": "integer"},
                "s_min": {"type": "integer"},
                "max_degree": {"type": "integer"},
                "connected": {"type": "boolean"},
                "has_nested_edges": {"type": "boolean"},
                "has_spanning_edge": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
        "quantities": {
            "type": "object",
            "required": ["alpha_estimate", "oracle_value", "alpha_certified",
                         "fixed_vertex", "diameter", "isoperimetric",
                         "lambda2_clique"],
            "properties": {
                "alpha_estimate": _FLOAT_OR_NULL,
                "oracle_value": _FLOAT_OR_NULL,
                "alpha_certified": _FLOAT_OR_NULL,
                "fixed_vertex": {"type": ["integer", "null"]},
                "diameter": {"type": ["integer", "string", "null"]},
                "isoperimetric": {
                    "type": ["object", "null"],
                    "required": ["value", "numerator", "denominator",
                                 "witness_set", "boundary_size"],
                    "properties": {
                        "value": {"type": "number"},
                        "numerator": {"type": "integer"},
                        "denominator": {"type": "integer"},
                        "witness_set": {"type": "array",
                                        "items": {"type": "integer"}},
                        "boundary_size": {"type": "integer"},
                    },
                    "additionalProperties": False,
                },
                "lambda2_clique": _FLOAT_OR_NULL,
            },
            "additionalProperties": False,
        },
        "bounds": {
            "type": "object",
            "required": ["diameter_lower", "degree_upper",
                         "degree_upper_nonspanning", "cheeger_lower",
                         "cheeger_upper"],
            "properties": {
                "diameter_lower": _FLOAT_OR_NULL,
                "degree_upper": _FLOAT_OR_NULL,
                "degree_upper_nonspanning": _FLOAT_OR_NULL,
                "cheeger_lower": _FLOAT_OR_NULL,
                "cheeger_upper": _FLOAT_OR_NULL,
            },
            "additionalProperties": False,
        },
        "checks": {"type": "array", "items": _CHECK_SCHEMA},
    },
    "additionalProperties": False,
}

SUMMARY_SCHEMA = {
    "type": "object",
    "required": ["summary"],
    "properties": {
        "summary": {
            "type": "object",
            "required": ["instances", "skipped", "holds", "violated",
                         "not_applicable", "worst_slack"],
            "properties": {
                "instances": {"type": "integer"},
                "skipped": {"type": "integer"},
                "holds": {"type": "integer"},
                "violated": {"type": "integer"},
                "not_applicable": {"type": "integer"},
                "worst_slack": {
                    "type": ["object", "null"],
                    "required": ["index", "name", "slack"],
                    "properties": {
                        "index": {"type": "integer"},
                        "name": {"type": "string"},
                        "slack": {"type": "number"},
                    },
                    "additionalProperties": False,
                },
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}
