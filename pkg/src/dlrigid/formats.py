"""Reading and writing graphs, realisations and certificates.

All writers produce canonical JSON: sorted keys, sorted vertex and edge
arrays, and a trailing newline.  Equal inputs give identical bytes.
"""

from __future__ import annotations

import json
import re
import sys
from fractions import Fraction
from typing import Any

from .construction import ConstructionCertificate, Mode
from .errors import FormatError
from .graph import (
    BaseKind,
    Edge,
    EdgeAddition,
    EdgeKind,
    MixedGraph,
    OneExtension,
    TwoSumK4,
    ZeroExtension,
    new_graph,
    sorted_vertices,
    vertex_key,
)
from .realisation import Domain, Realisation

_INT = re.compile(r"-?\d+")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _label(token: Any):
    if isinstance(token, bool) or not isinstance(token, (int, str)):
        raise FormatError(f"vertex labels must be integers or strings, got {token!r}")
    if isinstance(token, str) and _INT.fullmatch(token):
        return int(token)
    return token


# -- graphs --------------------------------------------------------------------------


def _pairs(g: MixedGraph, kind: EdgeKind) -> list:
    return [[e.u, e.v] for e in sorted((e for e in g.edges if e.kind is kind), key=lambda e: e.key)]


def graph_to_json(g: MixedGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "direction": _pairs(g, EdgeKind.DIRECTION),
        "length": _pairs(g, EdgeKind.LENGTH),
    }


def graph_from_json(data: Any) -> MixedGraph:
    # accept the output of ``generate`` directly
    if isinstance(data, dict) and isinstance(data.get("graph"), dict):
        data = data["graph"]
    if not isinstance(data, dict) or "vertices" not in data:
        raise FormatError("graph JSON needs a 'vertices' array")
    unknown = set(data) - {"vertices", "direction", "length"}
    if unknown:
        raise FormatError(f"unexpected graph keys: {sorted(unknown)}")
    vertices = [_label(v) for v in data["vertices"]]
    edges = []
    for key, kind in (("direction", EdgeKind.DIRECTION), ("length", EdgeKind.LENGTH)):
        for pair in data.get(key, []):
            if not isinstance(pair, list) or len(pair) != 2:
                raise FormatError(f"{key} edges must be pairs, got {pair!r}")
            edges.append((_label(pair[0]), _label(pair[1]), kind))
    return new_graph(vertices, edges)


def graph_from_text(text: str) -> MixedGraph:
    vertices: list = []
    edges: list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        word = parts[0].lower()
        if word == "vertex" and len(parts) == 2:
            vertices.append(_label(parts[1]))
        elif word in ("dir", "len") and len(parts) == 3:
            kind = EdgeKind.DIRECTION if word == "dir" else EdgeKind.LENGTH
            edges.append((_label(parts[1]), _label(parts[2]), kind))
        else:
            raise FormatError(f"line {lineno}: cannot parse {raw!r}")
    return new_graph(vertices, edges)


def graph_to_text(g: MixedGraph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    for e in sorted(g.edges, key=lambda e: e.key):
        lines.append(f"{'dir' if e.kind is EdgeKind.DIRECTION else 'len'} {e.u} {e.v}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> MixedGraph:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        return graph_from_json(data)
    return graph_from_text(text)


def load_graph(path: str) -> MixedGraph:
    return parse_graph(read_source(path))


# -- realisations ----------------------------------------------------------------------


def _number_to_str(x) -> str:
    if isinstance(x, Fraction):
        den = x.denominator
        while den % 2 == 0:
            den //= 2
        while den % 5 == 0:
            den //= 5
        if den != 1:
            return f"{x.numerator}/{x.denominator}"
        # terminating decimal: print it exactly
        digits = 0
        scaled = x
        while scaled.denominator != 1:
            scaled *= 10
            digits += 1
        sign = "-" if scaled < 0 else ""
        s = str(abs(scaled.numerator)).rjust(digits + 1, "0")
        return sign + (s[:-digits] + "." + s[-digits:] if digits else s)
    if isinstance(x, float):
        return repr(x)
    return str(x)


def realisation_to_json(p: Realisation) -> dict:
    if p.domain is Domain.PRIME:
        raise FormatError("prime-field realisations are not serialised")
    verts = sorted_vertices(p.coords)
    return {
        "coords": {str(v): [_number_to_str(c) for c in p[v]] for v in verts},
        "domain": p.domain.value,
    }


def realisation_from_json(data: Any) -> Realisation:
    if not isinstance(data, dict) or not isinstance(data.get("coords"), dict):
        raise FormatError("realisation JSON needs a 'coords' object")
    try:
        domain = Domain(data.get("domain", "rational"))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if domain is Domain.PRIME:
        raise FormatError("prime-field realisations are not serialised")
    conv = Fraction if domain is Domain.RATIONAL else float
    coords = {}
    for v, xy in data["coords"].items():
        if not isinstance(xy, list) or len(xy) != 2:
            raise FormatError(f"coordinates of {v!r} must be a pair")
        try:
            coords[_label(v)] = (conv(xy[0]), conv(xy[1]))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad coordinate for {v!r}: {exc}") from exc
    return Realisation(coords, domain)


# -- certificates ------------------------------------------------------------------------


def _edge_json(e: Edge) -> list:
    return [e.u, e.v, e.kind.label]


def _edge_from(data: Any) -> Edge:
    if not isinstance(data, list) or len(data) != 3:
        raise FormatError(f"edges are written [u, v, kind], got {data!r}")
    return Edge(_label(data[0]), _label(data[1]), EdgeKind.parse(data[2]))


def move_to_json(move) -> dict:
    if isinstance(move, EdgeAddition):
        return {"op": "EdgeAddition", "edge": _edge_json(move.edge)}
    if isinstance(move, OneExtension):
        return {
            "op": "OneExtension",
            "v": move.v,
            "deleted": _edge_json(move.deleted),
            "z": move.z,
            "kinds": [k.label for k in move.kinds],
        }
    if isinstance(move, ZeroExtension):
        return {
            "op": "ZeroExtension",
            "v": move.v,
            "x": move.x,
            "y": move.y,
            "kinds": [EdgeKind.parse(k).label for k in move.kinds],
        }
    if isinstance(move, TwoSumK4):
        op = "TwoSumDirK4" if move.kind is EdgeKind.DIRECTION else "TwoSumLenK4"
        return {"op": op, "x": move.x, "y": move.y, "new": list(move.new_labels)}
    raise FormatError(f"cannot serialise {move!r}")


def move_from_json(data: Any):
    if not isinstance(data, dict) or "op" not in data:
        raise FormatError(f"moves need an 'op', got {data!r}")
    op = data["op"]
    try:
        if op == "EdgeAddition":
            return EdgeAddition(_edge_from(data["edge"]))
        if op == "OneExtension":
            return OneExtension(_label(data["v"]), _edge_from(data["deleted"]), _label(data["z"]), tuple(data["kinds"]))
        if op == "ZeroExtension":
            return ZeroExtension(_label(data["v"]), _label(data["x"]), _label(data["y"]), tuple(data["kinds"]))
        if op in ("TwoSumDirK4", "TwoSumLenK4"):
            kind = EdgeKind.DIRECTION if op == "TwoSumDirK4" else EdgeKind.LENGTH
            return TwoSumK4(_label(data["x"]), _label(data["y"]), tuple(_label(n) for n in data["new"]), kind)
    except KeyError as exc:
        raise FormatError(f"{op} is missing field {exc}") from exc
    except ValueError as exc:
        raise FormatError(f"{op}: {exc}") from exc
    raise FormatError(f"unknown move {op!r}")


def certificate_to_json(cert: ConstructionCertificate) -> dict:
    return {
        "base": {"kind": cert.base.value, "labels": list(cert.labels)},
        "mode": cert.mode.value,
        "moves": [move_to_json(m) for m in cert.moves],
    }


def certificate_from_json(data: Any) -> ConstructionCertificate:
    if not isinstance(data, dict):
        raise FormatError("certificate JSON must be an object")
    try:
        base = data["base"]
        which = BaseKind(base["kind"])
        labels = tuple(_label(v) for v in base["labels"])
        mode = Mode(data.get("mode", Mode.DIRECTION_BALANCED.value))
        moves = data["moves"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad certificate header: {exc}") from exc
    if len(labels) != 3 or len(set(labels)) != 3:
        raise FormatError("base needs three distinct labels")
    if not isinstance(moves, list):
        raise FormatError("'moves' must be an array")
    return ConstructionCertificate(which, labels, [move_from_json(m) for m in moves], mode)


def load_json(path: str) -> Any:
    try:
        return json.loads(read_source(path))
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


def separation_to_json(sep) -> dict:
    return {
        "cut": list(sep.cut),
        "side_a": sorted(sep.side_a, key=vertex_key),
        "side_b": sorted(sep.side_b, key=vertex_key),
        "direction_balanced": sep.direction_balanced,
        "length_balanced": sep.length_balanced,
    }
