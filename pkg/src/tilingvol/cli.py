"""Command line front end.

    tilingvol tetra --angles pi/3,pi/3,pi/3,pi/3,pi/3,pi/3
    tilingvol wedge --a pi/2
    tilingvol bipyramid --family trunc --n 8
    tilingvol tiling --config 4.8.4.8
    tilingvol tiling --spec mytiling.json
    tilingvol catalog --name "truncated cube"
    tilingvol tables --figure fig8 --format csv

Global flags (accepted before or after the subcommand): ``--format
human|json|csv``, ``--digits N`` (default 6, round half to even) and
``--tol X`` (vertex classification tolerance for ``tetra``/``wedge``,
bisection tolerance for ``tiling``).

Exit codes: 0 success, 2 parse error, 3 domain error, 4 numerical failure.

Spec files are JSON documents::

    {"name": "trihexagonal", "classes": [{"config": "3.6.3.6", "weight": 1}],
     "faces": {"3": 8, "4": 6}}

``faces`` is optional; unknown keys anywhere are rejected.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction

from .bipyramid import bipyramid_volume, bn_ideal, bn_square, bn_trunc, maximal_wedge_angles
from .catalog import catalog_entry, euler_characteristic, spherical_catalog, spherical_link_volume
from .errors import ParseError, TilingVolError
from .gentetra import AngleVector, classify_vertices, gram_matrix, volume
from .tables import TABLE_COLUMNS, table_rows
from .tiling import TilingSpec, density, parse_vertex_config

import numpy as np

__all__ = ["main", "parse_angle", "load_spec_file", "render"]

_PI_LITERAL = re.compile(r"^\s*(?:([0-9]*\.?[0-9]+)\s*\*?\s*)?pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$")

_DEFAULTS = {"format": "human", "digits": 6, "tol": None}


def parse_angle(text: str) -> float:
    """Parse a radian value: a decimal, ``pi``, ``pi/b``, ``a*pi`` or ``a*pi/b``.

    >>> parse_angle("pi/4") == math.pi / 4
    True
    """
    m = _PI_LITERAL.match(text.lower())
    if m:
        num = float(m.group(1)) if m.group(1) else 1.0
        den = float(m.group(2)) if m.group(2) else 1.0
        if den == 0:
            raise ParseError(f"zero denominator in angle {text!r}", text)
        return num * math.pi / den
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"bad angle literal {text!r}", text) from None
    if not math.isfinite(value):
        raise ParseError(f"angle literal {text!r} is not finite", text)
    return value


def _parse_config_arg(text):
    config, _, weight = text.partition(":")
    w = 1.0
    if weight:
        try:
            w = float(weight)
        except ValueError:
            raise ParseError(f"bad class weight {weight!r} in {text!r}", text, len(config) + 1) from None
    return parse_vertex_config(config), w


_SPEC_KEYS = {"name", "classes", "faces"}
_CLASS_KEYS = {"config", "weight"}


def load_spec_file(path) -> TilingSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc.msg}", position=exc.pos) from None
    except OSError as exc:
        raise ParseError(f"cannot read spec file {path}: {exc.strerror}") from None
    return spec_from_document(doc)


def spec_from_document(doc) -> TilingSpec:
    if not isinstance(doc, dict):
        raise ParseError("spec document must be an object")
    unknown = set(doc) - _SPEC_KEYS
    if unknown:
        raise ParseError(f"unknown spec fields: {sorted(unknown)}")
    classes = doc.get("classes")
    if not isinstance(classes, list) or not classes:
        raise ParseError("spec needs a non-empty 'classes' list")
    parsed = []
    for i, item in enumerate(classes):
        if not isinstance(item, dict) or "config" not in item:
            raise ParseError(f"class {i} must be an object with a 'config' field")
        extra = set(item) - _CLASS_KEYS
        if extra:
            raise ParseError(f"unknown fields in class {i}: {sorted(extra)}")
        weight = item.get("weight", 1.0)
        if isinstance(weight, bool) or not isinstance(weight, (int, float)):
            raise ParseError(f"class {i} weight must be a number")
        parsed.append((parse_vertex_config(item["config"]), weight))
    faces = doc.get("faces")
    if faces is not None:
        if not isinstance(faces, dict):
            raise ParseError("'faces' must map polygon sizes to counts")
        try:
            faces = {int(k): int(v) for k, v in faces.items()}
        except (TypeError, ValueError):
            raise ParseError("'faces' keys and values must be integers") from None
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string")
    return TilingSpec(tuple(parsed), faces=faces, name=name)


# -- output ---------------------------------------------------------------


def _round(x, digits):
    q = Decimal(1).scaleb(-digits)
    return Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_EVEN)


def _normalize(value, digits):
    """Round floats to Decimals and stringify rationals and enums, recursively."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return _round(value, digits) if math.isfinite(value) else str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _normalize(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_normalize(v, digits) for v in value]
    return str(value)


def _json_default(obj):
    if isinstance(obj, Decimal):
        return float(obj)
    raise TypeError(type(obj).__name__)


def _cell(value):
    if isinstance(value, list):
        return ";".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}={_cell(v)}" for k, v in value.items())
    if value is None:
        return ""
    return str(value)


def _flatten(record, prefix=""):
    out = {}
    for k, v in record.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            for i, x in enumerate(v):
                out.update(_flatten(x, f"{key}[{i}]."))
        else:
            out[key] = v
    return out


def render(payload, fmt="human", digits=6, columns=None) -> str:
    """Format a record or a list of records."""
    data = _normalize(payload, digits)
    if fmt == "json":
        return json.dumps(data, default=_json_default, indent=2) + "\n"
    rows = data if isinstance(data, list) else [data]
    if fmt == "csv":
        flat = [_flatten(r) for r in rows]
        header = list(columns) if columns else list(dict.fromkeys(k for r in flat for k in r))
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for r in flat:
            writer.writerow([_cell(r.get(k)) for k in header])
        return buf.getvalue()
    lines = []
    for i, r in enumerate(rows):
        if i:
            lines.append("")
        flat = _flatten(r)
        width = max(len(k) for k in flat)
        for k, v in flat.items():
            lines.append(f"{k.ljust(width)}  {_cell(v)}")
    return "\n".join(lines) + "\n"


# -- commands --------------------------------------------------------------


def _vertex_records(delta, tol):
    return [
        {"vertex": f"v{i + 1}", "kind": str(v.kind), "angle_sum": v.angle_sum}
        for i, v in enumerate(classify_vertices(delta, tol))
    ]


def cmd_tetra(args):
    literals = args.angles.split(",")
    if len(literals) != 6:
        raise ParseError(f"--angles needs six comma-separated values, got {len(literals)}")
    delta = AngleVector.from_sequence(parse_angle(t) for t in literals)
    tol = args.tol if args.tol is not None else 1e-9
    return {
        "angles": list(delta.as_tuple()),
        "volume": volume(delta),
        "det_gram": float(np.linalg.det(gram_matrix(delta))),
        "vertices": _vertex_records(delta, tol),
    }


def cmd_wedge(args):
    delta = maximal_wedge_angles(parse_angle(args.a))
    tol = args.tol if args.tol is not None else 1e-9
    return {
        "angles": dict(zip("ABCDEF", delta.as_tuple())),
        "volume": volume(delta),
        "vertices": _vertex_records(delta, tol),
    }


def cmd_bipyramid(args):
    if args.family == "custom":
        if args.alpha is None:
            raise ParseError("--alpha is required for --family custom")
        report = bipyramid_volume(args.n, parse_angle(args.alpha))
    else:
        if args.alpha is not None:
            raise ParseError("--alpha is only allowed with --family custom")
        report = {"trunc": bn_trunc, "ideal": bn_ideal, "square": bn_square}[args.family](args.n)
    return {"family": args.family, **report.as_dict()}


def cmd_tiling(args):
    if args.spec and args.config:
        raise ParseError("use either --config or --spec, not both")
    if args.spec:
        spec = load_spec_file(args.spec)
    elif args.config:
        spec = TilingSpec(tuple(_parse_config_arg(c) for c in args.config), name=args.name)
    else:
        raise ParseError("tiling needs --config or --spec")
    tol = args.tol if args.tol is not None else 1e-13
    return density(spec, tol).as_dict()


def cmd_catalog(args):
    if args.name:
        return spherical_link_volume(catalog_entry(args.name)).as_dict()
    return [
        {
            "name": e.name,
            "config": str(e.config),
            "faces": {str(n): k for n, k in sorted(e.faces.items())},
            "euler_characteristic": euler_characteristic(e.config, e.faces),
        }
        for e in spherical_catalog()
    ]


def cmd_tables(args):
    rows = table_rows(args.figure)
    if args.figure == "fig11":
        for r in rows:
            r.pop("angle_values")
    return rows


def _common_flags(parser):
    # SUPPRESS so a flag given before the subcommand is not reset by the subparser
    parser.add_argument("--format", choices=("human", "json", "csv"), default=argparse.SUPPRESS)
    parser.add_argument("--digits", type=int, default=argparse.SUPPRESS)
    parser.add_argument("--tol", type=float, default=argparse.SUPPRESS)


def build_parser():
    parser = argparse.ArgumentParser(prog="tilingvol", description="Hyperbolic volumes of bipyramids and tiling links.")
    _common_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tetra", help="volume of a generalized tetrahedron")
    p.add_argument("--angles", required=True, help="six angles A,B,C,D,E,F (e.g. pi/3 or 1.047)")
    p.set_defaults(func=cmd_tetra)

    p = sub.add_parser("wedge", help="maximal wedge with two ideal vertices")
    p.add_argument("--a", required=True, help="core dihedral angle A")
    p.set_defaults(func=cmd_wedge)

    p = sub.add_parser("bipyramid", help="bipyramid families")
    p.add_argument("--family", choices=("trunc", "ideal", "square", "custom"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", help="vertical dihedral angle (custom family)")
    p.set_defaults(func=cmd_bipyramid)

    p = sub.add_parser("tiling", help="volume density of an alternating tiling link")
    p.add_argument("--config", action="append", default=[], help="p.q.r[.s][:weight], repeatable")
    p.add_argument("--spec", help="JSON spec file")
    p.add_argument("--name")
    p.set_defaults(func=cmd_tiling)

    p = sub.add_parser("catalog", help="spherical solids and their link volumes")
    p.add_argument("--name", help="solid name; omit to list the catalog")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("tables", help="regenerate a published table")
    p.add_argument("--figure", choices=tuple(TABLE_COLUMNS), required=True)
    p.set_defaults(func=cmd_tables)

    for sp in sub.choices.values():
        _common_flags(sp)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for key, value in _DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        payload = args.func(args)
    except TilingVolError as exc:
        print(f"tilingvol: error: {exc}", file=sys.stderr)
        return exc.exit_code
    columns = TABLE_COLUMNS.get(args.figure) if args.command == "tables" and args.format == "csv" else None
    sys.stdout.write(render(payload, args.format, args.digits, columns))
    return 0
