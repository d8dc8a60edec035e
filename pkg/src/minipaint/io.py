"""JSON documents for instances, paint plans and flood sequences.

Instance::

    {"vertices": ["a", ...], "edges": [["a", "b"], ...],
     "colors": ["Red", ...], "template": {"a": "Red", ...},
     "name": "...", "source": "..."}

Plan: ``{"strokes": [{"area": ["a", "b"], "color": "Red"}, ...]}``.
Flood: ``{"moves": [{"pivot": "a", "color": "Red"}, ...]}``.

Labels map to dense ids in file order and colors to their position in
``colors``. Serialization is deterministic so fixtures diff cleanly.
"""
from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass
from importlib import resources

from .errors import ParseError
from .graph import Graph
from .painting import FloodMove, PaintPlan, Stroke, Template


@dataclass(frozen=True)
class Instance:
    graph: Graph
    template: Template
    colors: tuple[str, ...]
    name: str | None = None
    source: str | None = None

    def __post_init__(self):
        if len(self.template) != self.graph.n:
            raise ParseError(f"template has {len(self.template)} entries for {self.graph.n} vertices",
                             "template")
        for v, c in enumerate(self.template):
            if c is None or not 0 <= c < len(self.colors):
                raise ParseError(f"vertex {self.graph.label(v)} has no color from the name table",
                                 "template")

    def color_id(self, name: str, where: str) -> int:
        try:
            return self.colors.index(name)
        except ValueError:
            raise ParseError(f"unknown color {name!r}", where) from None

    def vertex_id(self, label: str, where: str) -> int:
        try:
            return self.graph.labels.index(label)
        except ValueError:
            raise ParseError(f"unknown vertex {label!r}", where) from None


def _load(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None


def _field(doc: object, key: str, kind: type, default=None, required: bool = True):
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object", "document")
    if key not in doc:
        if required:
            raise ParseError("missing field", key)
        return default
    val = doc[key]
    if not isinstance(val, kind):
        raise ParseError(f"expected {kind.__name__}, got {type(val).__name__}", key)
    return val


def _label(val: object, where: str) -> str:
    if not isinstance(val, str):
        raise ParseError(f"expected a string label, got {val!r}", where)
    return val


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# -- instances ---------------------------------------------------------------


def parse_instance(text: str) -> Instance:
    doc = _load(text)
    labels = [_label(v, f"vertices[{i}]") for i, v in enumerate(_field(doc, "vertices", list))]
    if len(set(labels)) != len(labels):
        dup = next(lab for lab in labels if labels.count(lab) > 1)
        raise ParseError(f"duplicate vertex {dup!r}", "vertices")
    index = {lab: i for i, lab in enumerate(labels)}
    edges: list[tuple[int, int]] = []
    seen: set[frozenset[int]] = set()
    for i, e in enumerate(_field(doc, "edges", list)):
        where = f"edges[{i}]"
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError("an edge is a pair of labels", where)
        ends = []
        for end in e:
            lab = _label(end, where)
            if lab not in index:
                raise ParseError(f"endpoint {lab!r} is not a vertex", where)
            ends.append(index[lab])
        if ends[0] == ends[1]:
            raise ParseError(f"self-loop at {e[0]!r}", where)
        key = frozenset(ends)
        if key in seen:
            raise ParseError(f"duplicate edge {e[0]!r}-{e[1]!r}", where)
        seen.add(key)
        edges.append((ends[0], ends[1]))
    colors = tuple(_label(c, f"colors[{i}]") for i, c in enumerate(_field(doc, "colors", list)))
    if len(set(colors)) != len(colors):
        raise ParseError("duplicate color name", "colors")
    tmap = _field(doc, "template", dict)
    for lab in tmap:
        if lab not in index:
            raise ParseError(f"{lab!r} is not a vertex", f"template.{lab}")
    template = []
    for lab in labels:
        if lab not in tmap:
            raise ParseError("missing template entry", f"template.{lab}")
        name = _label(tmap[lab], f"template.{lab}")
        if name not in colors:
            raise ParseError(f"color {name!r} not in the colors table", f"template.{lab}")
        template.append(colors.index(name))
    name = _field(doc, "name", str, required=False)
    source = _field(doc, "source", str, required=False)
    return Instance(Graph(len(labels), edges, labels), tuple(template), colors, name, source)


def serialize_instance(inst: Instance) -> str:
    g = inst.graph
    doc: dict = {}
    if inst.name is not None:
        doc["name"] = inst.name
    if inst.source is not None:
        doc["source"] = inst.source
    doc["vertices"] = list(g.labels)
    doc["edges"] = [[g.label(u), g.label(v)] for u, v in g.edges()]
    doc["colors"] = list(inst.colors)
    doc["template"] = {g.label(v): inst.colors[inst.template[v]] for v in range(g.n)}
    return _dump(doc)


def instance_from_template(g: Graph, template: Sequence[int], colors: Sequence[str] | None = None,
                           name: str | None = None) -> Instance:
    """Wrap a graph and integer template, naming colors ``c0, c1, ...`` by default."""
    if colors is None:
        colors = [f"c{i}" for i in range(max(template, default=-1) + 1)]
    return Instance(g, tuple(template), tuple(colors), name)


# -- plans and floods ------------------------------------------------------


def parse_plan(text: str, inst: Instance) -> PaintPlan:
    doc = _load(text)
    strokes = []
    for i, st in enumerate(_field(doc, "strokes", list)):
        where = f"strokes[{i}]"
        if not isinstance(st, dict):
            raise ParseError("expected an object", where)
        area = _field(st, "area", list) if "area" in st else None
        if area is None:
            raise ParseError("missing field area", where)
        if not area:
            raise ParseError("empty area", f"{where}.area")
        ids = [inst.vertex_id(_label(v, f"{where}.area"), f"{where}.area") for v in area]
        if len(set(ids)) != len(ids):
            raise ParseError("vertex listed twice", f"{where}.area")
        if "color" not in st:
            raise ParseError("missing field color", where)
        color = inst.color_id(_label(st["color"], f"{where}.color"), f"{where}.color")
        strokes.append(Stroke(frozenset(ids), color))
    return PaintPlan(tuple(strokes))


def serialize_plan(plan: PaintPlan, inst: Instance) -> str:
    g = inst.graph
    return _dump({"strokes": [
        {"area": [g.label(v) for v in sorted(st.area)], "color": inst.colors[st.color]}
        for st in plan]})


def parse_flood(text: str, inst: Instance) -> tuple[FloodMove, ...]:
    doc = _load(text)
    moves = []
    for i, m in enumerate(_field(doc, "moves", list)):
        where = f"moves[{i}]"
        if not isinstance(m, dict) or "pivot" not in m or "color" not in m:
            raise ParseError("a move needs pivot and color", where)
        pivot = inst.vertex_id(_label(m["pivot"], f"{where}.pivot"), f"{where}.pivot")
        color = inst.color_id(_label(m["color"], f"{where}.color"), f"{where}.color")
        moves.append(FloodMove(pivot, color))
    return tuple(moves)


def serialize_flood(seq: Sequence[FloodMove], inst: Instance) -> str:
    g = inst.graph
    return _dump({"moves": [{"pivot": g.label(m.pivot), "color": inst.colors[m.color]} for m in seq]})


# -- bundled fixtures --------------------------------------------------------


def bundled(name: str) -> str:
    """Text of a fixture shipped in ``minipaint/data``."""
    return resources.files("minipaint").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def figure1() -> Instance:
    return parse_instance(bundled("figure1.json"))
