"""Exhaustive ground truth for small instances.

:func:`flood_optimum` runs an iterative-deepening search over flood states and
is the primary oracle; :func:`plan_optimum` lifts its witness to a paint plan
per connected component. :func:`plan_space_optimum` is an unrelated
breadth-first search directly over strokes, used to cross-check the two sides.
"""
from __future__ import annotations

import logging

import numpy as np

from . import kernels as K
from .equivalence import flood_to_plan
from .errors import CapacityError, InputError
from .graph import Graph, connected_components, from_mask
from .painting import FloodMove, PaintPlan, Painting, Stroke, Template, verify_plan

log = logging.getLogger(__name__)

MAX_VERTICES = 12
MAX_COLORS = 6
DEPTH_CAP = 8
NODE_BUDGET = 50_000_000


def flood_optimum(g: Graph, p0: Painting, depth_cap: int = DEPTH_CAP, *,
                  max_vertices: int = MAX_VERTICES, max_colors: int = MAX_COLORS,
                  node_budget: int = NODE_BUDGET) -> tuple[int, tuple[FloodMove, ...]]:
    """Minimum number of flood moves that make ``p0`` monochromatic, with a witness.

    Moves use one pivot per color component (the lowest vertex) and any other
    color of ``image(p0)``. Iteration ``L`` proves that no flooding with fewer
    than ``L`` moves exists before the first witness of length ``L`` is
    returned. Raises :class:`CapacityError` when a budget is exceeded.
    """
    if len(p0) != g.n or any(c is None for c in p0):
        raise InputError("the oracle needs a total painting of the graph")
    if g.n == 0:
        return 0, ()
    if g.n > max_vertices:
        raise CapacityError(f"oracle limited to {max_vertices} vertices, got {g.n}")
    palette = sorted(set(p0))
    if len(palette) > max_colors:
        raise CapacityError(f"oracle limited to {max_colors} colors, got {len(palette)}")
    if len(palette) ** g.n >= 2 ** 62:
        raise CapacityError("state encoding would overflow 64 bits")
    index = {c: i for i, c in enumerate(palette)}
    start = np.array([index[c] for c in p0], dtype=np.int64)
    lower = len(palette) - 1
    for limit in range(lower, depth_cap + 1):
        status, length, nodes, piv, col = K.flood_dfs(g.adjacency, start, len(palette), limit, node_budget)
        if status < 0:
            raise CapacityError(f"oracle node budget {node_budget} exceeded at depth {limit}")
        if status == 1:
            seq = tuple(FloodMove(int(piv[i]), palette[int(col[i])]) for i in range(length))
            log.debug("flood optimum %d after %d nodes", length, nodes)
            return length, seq
    raise CapacityError(f"no flooding with at most {depth_cap} moves")


def plan_optimum(g: Graph, t: Template, depth_cap: int = DEPTH_CAP, **budget) -> tuple[int, PaintPlan]:
    """Optimal plan length and witness; one flood search per connected component."""
    if len(t) != g.n or any(c is None for c in t):
        raise InputError("template must assign a color to every vertex")
    strokes: list[Stroke] = []
    for comp in connected_components(g):
        sub, ids = g.subgraph(comp)
        sub_t = tuple(t[v] for v in ids)
        _, seq = flood_optimum(sub, sub_t, depth_cap, **budget)
        for st in flood_to_plan(sub, sub_t, seq):
            strokes.append(Stroke(frozenset(ids[v] for v in st.area), st.color))
    plan = PaintPlan(tuple(strokes))
    assert verify_plan(g, t, plan).ok
    return len(plan), plan


def connected_subsets(g: Graph) -> list[int]:
    """Bitmasks of all non-empty connected vertex subsets (exponential)."""
    out = []
    for m in range(1, 1 << g.n):
        if K.is_connected(g.adjacency, np.int64(m)):
            out.append(m)
    return out


def plan_space_optimum(g: Graph, t: Template, max_vertices: int = 7) -> tuple[int, PaintPlan]:
    """Shortest plan by breadth-first search over partial paintings.

    Strokes range over every connected subset and every color of ``image(t)``.
    Paintings are encoded in base ``|image(t)| + 1`` with digit 0 meaning
    unpainted, and each BFS layer is expanded for all strokes at once.
    """
    if len(t) != g.n or any(c is None for c in t):
        raise InputError("template must assign a color to every vertex")
    if g.n == 0:
        return 0, PaintPlan()
    if g.n > max_vertices:
        raise CapacityError(f"plan-space search limited to {max_vertices} vertices, got {g.n}")
    palette = sorted(set(t))
    base = len(palette) + 1
    weights = base ** np.arange(g.n, dtype=np.int64)
    target = int(sum((palette.index(c) + 1) * int(weights[v]) for v, c in enumerate(t)))
    subsets = connected_subsets(g)
    member = np.array([[(m >> v) & 1 for v in range(g.n)] for m in subsets], dtype=np.int64)
    sub_w = member @ weights
    stroke_sub = np.repeat(np.arange(len(subsets)), len(palette))
    stroke_col = np.tile(np.arange(1, base), len(subsets))

    parent: dict[int, tuple[int, int]] = {0: (-1, -1)}
    frontier = np.array([0], dtype=np.int64)
    depth = 0
    while target not in parent:
        if frontier.size == 0:  # pragma: no cover - every template is paintable
            raise AssertionError("plan-space search ran dry")
        digits = (frontier[:, None] // weights[None, :]) % base
        # painted weight under each subset, per frontier state
        under = (digits * weights[None, :]) @ member.T
        new = (frontier[:, None] - under[:, stroke_sub]
               + stroke_col[None, :] * sub_w[stroke_sub][None, :])
        flat = new.ravel()
        uniq, first = np.unique(flat, return_index=True)
        fresh = []
        for code, pos in zip(uniq.tolist(), first.tolist()):
            if code not in parent:
                parent[code] = (int(frontier[pos // new.shape[1]]), pos % new.shape[1])
                fresh.append(code)
        frontier = np.array(fresh, dtype=np.int64)
        depth += 1
    strokes = []
    code = target
    while code != 0:
        prev, j = parent[code]
        strokes.append(Stroke(from_mask(subsets[stroke_sub[j]]), palette[stroke_col[j] - 1]))
        code = prev
    plan = PaintPlan(tuple(reversed(strokes)))
    assert len(plan) == depth and verify_plan(g, t, plan).ok
    return depth, plan
