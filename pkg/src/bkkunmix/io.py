"""Readers and writers for system, point, and graph files.

System file::

    {"dim": n, "supports": [[[c, ...], ...], ...], "labels": [...]}

Point file: ``{"dim": n, "points": [[c, ...], ...]}``; a system file is also
accepted and read as the union of its supports.  Coordinates are JSON integers
or ``"p/q"`` strings.

Graph file: UTF-8 text, one ``i j`` edge per line (0-indexed), ``#`` starts a
comment.  Loops are implied.
"""

from __future__ import annotations

import json
from pathlib import Path

from .generators import Graph, cycle_graph, ieee14, path_graph
from .hull import Support
from .mixedvol import SupportSystem
from .ratgeom import format_rat


class FormatError(ValueError):
    """Malformed input file."""


def _coord_out(c):
    s = format_rat(c)
    return int(s) if "/" not in s else s


def _coord_in(c):
    if isinstance(c, bool) or not isinstance(c, (int, str)):
        raise FormatError(f"coordinate {c!r} is neither an integer nor a 'p/q' string")
    return c


def _points_in(raw, dim):
    if not isinstance(raw, list):
        raise FormatError("point list expected")
    pts = []
    for p in raw:
        if not isinstance(p, list) or len(p) != dim:
            raise FormatError(f"point {p!r} is not a list of {dim} coordinates")
        pts.append([_coord_in(c) for c in p])
    return pts


def system_to_dict(sys: SupportSystem) -> dict:
    out = {"dim": sys.dim,
           "supports": [[[_coord_out(c) for c in p] for p in s.points]
                        for s in sys.supports]}
    if sys.labels:
        out["labels"] = list(sys.labels)
    return out


def system_from_dict(d) -> SupportSystem:
    if not isinstance(d, dict) or "dim" not in d or "supports" not in d:
        raise FormatError("system file needs 'dim' and 'supports'")
    dim = d["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise FormatError(f"bad dim {dim!r}")
    try:
        sups = [Support.from_points(_points_in(s, dim), dim) for s in d["supports"]]
        if any(len(s) == 0 for s in sups):
            raise FormatError("empty support")
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(str(exc)) from exc
    return SupportSystem(dim, tuple(sups), tuple(d["labels"]) if d.get("labels") else None)


def _load_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def read_system(path) -> SupportSystem:
    return system_from_dict(_load_json(path))


def write_system(sys: SupportSystem, path=None) -> str:
    text = json.dumps(system_to_dict(sys))
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text


def points_to_dict(s: Support) -> dict:
    return {"dim": s.dim, "points": [[_coord_out(c) for c in p] for p in s.points]}


def read_points(path) -> Support:
    d = _load_json(path)
    if isinstance(d, dict) and "points" in d and "dim" in d:
        try:
            return Support.from_points(_points_in(d["points"], d["dim"]), d["dim"])
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise FormatError(str(exc)) from exc
    return system_from_dict(d).union()


def parse_graph(text: str, node_count: int | None = None, loops: bool = True) -> Graph:
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'i j', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
    if not edges:
        raise FormatError("graph file has no edges")
    if node_count is None:
        node_count = max(max(e) for e in edges) + 1
    return Graph.from_edges(node_count, edges, loops)


def format_graph(g: Graph) -> str:
    lines = [f"# {g.node_count} nodes, {len(g.edges)} edges; loops implied"]
    lines += [f"{i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_graph(path, loops: bool = True) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"), loops=loops)


def resolve_graph(spec: str, loops: bool = True) -> Graph:
    """``ieee14``, ``cycle:N``, ``path:N`` or a graph file path."""
    if spec == "ieee14":
        g = ieee14()
    elif spec.startswith("cycle:"):
        g = cycle_graph(int(spec[6:]))
    elif spec.startswith("path:"):
        g = path_graph(int(spec[5:]))
    else:
        return read_graph(spec, loops)
    if not loops:
        g = Graph(g.node_count, g.edges, False)
    return g
