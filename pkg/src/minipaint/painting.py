"""Paintings, strokes, paint plans and flood moves.

A painting is a tuple with one entry per vertex, ``None`` meaning unpainted.
A template is a painting without ``None``. Stroke and move indices reported to
callers are 1-based, matching the usual way plans are written down.
"""
from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from . import kernels as K
from .errors import InputError, StrokeError
from .graph import Graph, color_component, connected_components, from_mask, induced_p4s, is_dominating

Painting = tuple  # tuple[int | None, ...]
Template = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class Stroke:
    area: frozenset[int]
    color: int

    def __post_init__(self):
        object.__setattr__(self, "area", frozenset(int(v) for v in self.area))
        object.__setattr__(self, "color", int(self.color))

    def sort_key(self) -> tuple[tuple[int, ...], int]:
        return tuple(sorted(self.area)), self.color


@dataclass(frozen=True)
class PaintPlan:
    """An ordered sequence of strokes. Validity is only checked when simulated."""

    strokes: tuple[Stroke, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "strokes", tuple(
            st if isinstance(st, Stroke) else Stroke(*st) for st in self.strokes))

    @classmethod
    def of(cls, pairs: Iterable[tuple[Iterable[int], int] | Stroke]) -> PaintPlan:
        return cls(tuple(pairs))

    def __len__(self) -> int:
        return len(self.strokes)

    def __iter__(self) -> Iterator[Stroke]:
        return iter(self.strokes)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return PaintPlan(self.strokes[i])
        return self.strokes[i]

    def __add__(self, other: PaintPlan) -> PaintPlan:
        return PaintPlan(self.strokes + tuple(other))

    def sort_key(self) -> tuple:
        """Deterministic tie-break: stroke count, then each stroke's (sorted area, color)."""
        return (len(self.strokes), tuple(st.sort_key() for st in self.strokes))

    def replace(self, i: int, stroke: Stroke) -> PaintPlan:
        """Copy with the stroke at 0-based position ``i`` swapped out."""
        return PaintPlan(self.strokes[:i] + (stroke,) + self.strokes[i + 1:])


@dataclass(frozen=True)
class FloodMove:
    pivot: int
    color: int


FloodSequence = tuple  # tuple[FloodMove, ...]


@dataclass(frozen=True)
class CanonicalParams:
    """Hub ``D`` (an induced dominating P4), tail length ``k`` and color order."""

    hub: tuple[int, ...]
    k: int
    order: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        if not 0 <= self.k <= 12:
            raise InputError(f"tail length must lie in [0, 12], got {self.k}")
        hub = frozenset(self.hub)
        if len(hub) != 4 or not any(frozenset(p) == hub for p in induced_p4s(g)):
            raise InputError(f"hub {sorted(hub)} does not induce a P4")
        if not is_dominating(g, hub):
            raise InputError(f"hub {sorted(hub)} is not a dominating set")
        if len(set(self.order)) != len(self.order):
            raise InputError("color order lists a color twice")

    def rank(self) -> dict[int, int]:
        return {c: i for i, c in enumerate(self.order)}


class FailureKind(enum.Enum):
    DISCONNECTED_AREA = "disconnected area"
    INVALID_STROKE = "invalid stroke"
    WRONG_COLOR = "wrong final color at vertex"
    NOT_MONOCHROMATIC = "non-monochromatic end"
    INVALID_MOVE = "invalid move"
    CANONICAL_SHAPE = "canonical-shape violation"
    ORDER = "order violation"
    SHAPE_MISMATCH = "instance mismatch"


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    kind: FailureKind | None = None
    index: int | None = None
    vertex: int | None = None
    expected: int | None = None
    got: int | None = None
    message: str = field(default="", compare=False)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def fail(cls, kind: FailureKind, message: str, **kw) -> VerificationReport:
        return cls(False, kind, message=message, **kw)


OK = VerificationReport(True)


# -- painting side ---------------------------------------------------------


def unpainted(g: Graph) -> Painting:
    return (None,) * g.n


def _stroke_mask(g: Graph, st: Stroke, index: int | None) -> int:
    m = 0
    for v in st.area:
        if not 0 <= v < g.n:
            raise StrokeError(f"vertex {v} outside 0..{g.n - 1}", index, "range")
        m |= 1 << v
    if m == 0:
        raise StrokeError("empty area", index, "empty")
    if not K.is_connected(g.adjacency, np.int64(m)):
        raise StrokeError(f"area {sorted(st.area)} is not connected", index, "disconnected")
    return m


def apply_stroke(g: Graph, p: Painting, st: Stroke, index: int | None = None) -> Painting:
    """Paint ``st.area`` with ``st.color``; everything else keeps its color."""
    if len(p) != g.n:
        raise InputError(f"painting has {len(p)} entries for {g.n} vertices")
    _stroke_mask(g, st, index)
    return tuple(st.color if v in st.area else p[v] for v in range(g.n))


def simulate_plan(g: Graph, plan: PaintPlan) -> list[Painting]:
    """Paintings ``p_0 .. p_s``; raises :class:`StrokeError` tagged with the stroke index."""
    trace = [unpainted(g)]
    for i, st in enumerate(plan, start=1):
        trace.append(apply_stroke(g, trace[-1], st, i))
    return trace


def verify_plan(g: Graph, t: Template, plan: PaintPlan) -> VerificationReport:
    if len(t) != g.n:
        return VerificationReport.fail(FailureKind.SHAPE_MISMATCH,
                                       f"template has {len(t)} entries for {g.n} vertices")
    try:
        final = simulate_plan(g, plan)[-1]
    except StrokeError as exc:
        kind = (FailureKind.INVALID_STROKE if exc.reason == "range"
                else FailureKind.DISCONNECTED_AREA)
        return VerificationReport.fail(kind, str(exc), index=exc.index)
    for v in range(g.n):
        if final[v] != t[v]:
            return VerificationReport.fail(
                FailureKind.WRONG_COLOR,
                f"vertex {g.label(v)}: expected color {t[v]}, got {final[v]}",
                vertex=v, expected=t[v], got=final[v])
    return OK


def color_lower_bound(g: Graph, t: Template) -> int:
    """Every color used on a component needs at least one stroke there."""
    return sum(len({t[v] for v in comp}) for comp in connected_components(g))


# -- flooding side -----------------------------------------------------------


def _require_total(g: Graph, p: Painting) -> None:
    if len(p) != g.n:
        raise InputError(f"painting has {len(p)} entries for {g.n} vertices")
    if any(c is None for c in p):
        raise InputError("flood moves need a total painting")


def apply_flood_move(g: Graph, p: Painting, m: FloodMove) -> Painting:
    """Recolor the color component of the pivot."""
    _require_total(g, p)
    comp = color_component(g, p, m.pivot)
    return tuple(m.color if v in comp else p[v] for v in range(g.n))


def simulate_flood(g: Graph, p0: Painting, seq: Sequence[FloodMove]) -> list[Painting]:
    trace = [tuple(p0)]
    for m in seq:
        trace.append(apply_flood_move(g, trace[-1], m))
    return trace


def verify_flood(g: Graph, p0: Painting, seq: Sequence[FloodMove]) -> VerificationReport:
    _require_total(g, p0)
    p = tuple(p0)
    for i, m in enumerate(seq, start=1):
        if not (isinstance(m.pivot, (int, np.integer)) and 0 <= m.pivot < g.n):
            return VerificationReport.fail(FailureKind.INVALID_MOVE,
                                           f"move {i}: pivot {m.pivot} out of range", index=i)
        p = apply_flood_move(g, p, m)
    if len(set(p)) > 1:
        return VerificationReport.fail(FailureKind.NOT_MONOCHROMATIC,
                                       f"{len(set(p))} colors remain after {len(seq)} moves")
    return OK


# -- plan indexing ---------------------------------------------------------


def finalizing(g: Graph, plan: PaintPlan) -> tuple[tuple[int, ...], dict[int, frozenset[int]]]:
    """Per-vertex index of the last stroke covering it, and the sets finished per stroke.

    Both use 1-based stroke indices; ``sets[i]`` may be empty.
    """
    f = [0] * g.n
    for i, st in enumerate(plan, start=1):
        for v in st.area:
            if 0 <= v < g.n:
                f[v] = i
    missing = [v for v in range(g.n) if f[v] == 0]
    if missing:
        raise InputError(f"vertex {g.label(missing[0])} is never painted")
    sets = {i: frozenset(v for v in range(g.n) if f[v] == i) for i in range(1, len(plan) + 1)}
    return tuple(f), sets


def finishing_index(g: Graph, plan: PaintPlan, p4: Sequence[int]) -> int:
    """``s^3 f(a) + s^2 f(b) + s f(c) + f(d)`` over the P4 sorted by finalizing index."""
    if frozenset(p4) not in {frozenset(q) for q in induced_p4s(g)}:
        raise InputError(f"{tuple(p4)} does not induce a P4")
    f, _ = finalizing(g, plan)
    s = len(plan)
    a, b, c, d = sorted(f[v] for v in p4)
    return s ** 3 * a + s ** 2 * b + s * c + d


def plan_finishing_index(g: Graph, plan: PaintPlan) -> int | None:
    """Maximum finishing index over all induced P4; ``None`` on cographs."""
    p4s = induced_p4s(g)
    if not p4s:
        return None
    return max(finishing_index(g, plan, p) for p in p4s)


def is_recursive_plan(g: Graph, plan: PaintPlan) -> bool:
    """First stroke fills V; each area is monochromatic before and a color component after."""
    if g.n == 0:
        return len(plan) == 0
    if not plan or plan[0].area != frozenset(range(g.n)):
        return False
    trace = simulate_plan(g, plan)
    for i, st in enumerate(plan, start=1):
        before, after = trace[i - 1], trace[i]
        if len({before[v] for v in st.area}) != 1:
            return False
        v0 = min(st.area)
        if color_component(g, after, v0) != st.area:
            return False
    return True


def _head_size(plan: PaintPlan, k: int) -> int:
    return max(0, len(plan) - k)


def canonical_violation(g: Graph, t: Template, plan: PaintPlan,
                        params: CanonicalParams, check_hub: bool = True) -> VerificationReport:
    """Check the head shape ``A_i = t^-1(c_i) + D`` and strictly ascending head colors."""
    if check_hub:
        params.validate(g)
    hub = frozenset(params.hub)
    rank = params.rank()
    prev = None
    for i in range(_head_size(plan, params.k)):
        st = plan[i]
        want = frozenset(v for v in range(g.n) if t[v] == st.color) | hub
        if st.area != want:
            return VerificationReport.fail(FailureKind.CANONICAL_SHAPE,
                                           f"stroke {i + 1} is not t^-1(c) + D", index=i + 1)
        if st.color not in rank:
            return VerificationReport.fail(FailureKind.ORDER,
                                           f"stroke {i + 1} uses a color outside the order", index=i + 1)
        if prev is not None and rank[st.color] <= prev:
            return VerificationReport.fail(FailureKind.ORDER,
                                           f"stroke {i + 1} breaks the color order", index=i + 1)
        prev = rank[st.color]
    return OK


def is_canonical(g: Graph, t: Template, plan: PaintPlan, params: CanonicalParams) -> bool:
    return canonical_violation(g, t, plan, params).ok


def verify_canonical(g: Graph, t: Template, plan: PaintPlan,
                     params: CanonicalParams) -> VerificationReport:
    """Validity against ``t`` followed by the canonical head conditions."""
    rep = verify_plan(g, t, plan)
    return rep if not rep.ok else canonical_violation(g, t, plan, params)


def is_maximal_canonical(g: Graph, t: Template, plan: PaintPlan, params: CanonicalParams) -> bool:
    """No single vertex can join any area while the plan stays valid and canonical.

    With an empty head the hub plays no role and is not validated.
    """
    check_hub = _head_size(plan, params.k) > 0
    if check_hub:
        params.validate(g)
    for i, st in enumerate(plan):
        for v in range(g.n):
            if v in st.area:
                continue
            grown = plan.replace(i, Stroke(st.area | {v}, st.color))
            if verify_plan(g, t, grown).ok and canonical_violation(g, t, grown, params, check_hub).ok:
                return False
    return True


def plan_from_masks(areas: Sequence[int], colors: Sequence[int]) -> PaintPlan:
    """Build a plan from bitmask areas, as produced by the kernels."""
    return PaintPlan(tuple(Stroke(from_mask(a), c) for a, c in zip(areas, colors)))
