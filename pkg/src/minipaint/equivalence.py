"""Conversions between paint plans and Free Flood-It sequences.

Both directions need a connected graph: a plan of ``s`` strokes corresponds to
a flooding of ``s - 1`` moves only when the first stroke may cover all of V.
"""
from __future__ import annotations

from collections.abc import Sequence

from .errors import InputError
from .graph import Graph, color_component, is_connected
from .painting import (
    FloodMove,
    PaintPlan,
    Painting,
    Stroke,
    Template,
    simulate_flood,
    simulate_plan,
    verify_flood,
    verify_plan,
)


def _require_connected(g: Graph, what: str) -> None:
    if g.n > 0 and not is_connected(g):
        raise InputError(f"{what} needs a connected graph; solve components separately")


def _last_non_recursive(g: Graph, areas: list[frozenset[int]], colors: list[int]):
    trace = simulate_plan(g, PaintPlan(tuple(Stroke(a, c) for a, c in zip(areas, colors))))
    for j in range(len(areas), 0, -1):
        area = areas[j - 1]
        before, after = trace[j - 1], trace[j]
        comp = color_component(g, after, min(area))
        if len({before[v] for v in area}) != 1 or comp != area:
            return j, comp
    return 0, None


def normalize_recursive(g: Graph, t: Template, plan: PaintPlan) -> PaintPlan:
    """Rewrite a valid plan into a recursive plan of the same length.

    The first area is widened to V up front. Then, while some stroke ``j`` is
    not recursive, the ``c_j``-colored component ``A`` around ``A_j`` after
    stroke ``j`` is merged into every area ``A_i`` (``i <= j``) meeting it;
    each round lowers the last non-recursive index, so at most ``s`` rounds run.
    """
    rep = verify_plan(g, t, plan)
    if not rep.ok:
        raise InputError(f"cannot normalize an invalid plan: {rep.message}")
    _require_connected(g, "normalization")
    if g.n == 0:
        return plan
    areas = [st.area for st in plan]
    colors = [st.color for st in plan]
    areas[0] = frozenset(range(g.n))
    for _ in range(len(areas) + 1):
        j, comp = _last_non_recursive(g, areas, colors)
        if j == 0:
            return PaintPlan(tuple(Stroke(a, c) for a, c in zip(areas, colors)))
        for i in range(j):
            if areas[i] & comp:
                areas[i] = areas[i] | comp
    raise AssertionError("normalization did not converge")  # pragma: no cover


def plan_to_flood(g: Graph, t: Template, plan: PaintPlan) -> tuple[FloodMove, ...]:
    """Reverse a plan into a flooding of ``t`` with ``len(plan) - 1`` moves.

    Undoing stroke ``i`` (from the last down to the second) is the move that
    floods the finished area ``A_i`` back to the color it held before stroke
    ``i``. The pivot is the lowest vertex of ``A_i``.
    """
    rep = verify_plan(g, t, plan)
    if not rep.ok:
        raise InputError(f"cannot convert an invalid plan: {rep.message}")
    rec = normalize_recursive(g, t, plan)
    trace = simulate_plan(g, rec)
    moves = []
    for i in range(len(rec), 1, -1):
        pivot = min(rec[i - 1].area)
        moves.append(FloodMove(pivot, trace[i - 1][pivot]))
    return tuple(moves)


def flood_to_plan(g: Graph, p0: Painting, seq: Sequence[FloodMove]) -> PaintPlan:
    """Reverse a flooding of ``p0`` into a plan painting ``p0`` with ``len(seq) + 1`` strokes.

    The plan first fills V with the final color, then repaints each flooded
    component with its pre-move color, latest move first.
    """
    rep = verify_flood(g, p0, seq)
    if not rep.ok:
        raise InputError(f"not a flooding sequence: {rep.message}")
    _require_connected(g, "conversion")
    if g.n == 0:
        return PaintPlan()
    trace = simulate_flood(g, p0, seq)
    strokes = [Stroke(frozenset(range(g.n)), trace[-1][0])]
    for i in range(len(seq), 0, -1):
        before = trace[i - 1]
        pivot = seq[i - 1].pivot
        strokes.append(Stroke(color_component(g, before, pivot), before[pivot]))
    return PaintPlan(tuple(strokes))
