"""Exact solvers for cographs and co-gem-free graphs.

The canonical solver looks for plans whose first ``s - k`` strokes (the head)
paint ``t^-1(c) + D`` through a dominating induced P4 ``D`` in ascending color
order, followed by ``k`` free strokes (the tail). Tail length is escalated from
0; a cheap existence probe at the largest admissible ``k`` decides each ``s``
first, since every plan that is canonical for some ``k`` stays canonical for
every larger ``k``.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import kernels as K
from ._accel import default_threads
from .errors import CapacityError, InputError, SearchExhaustedError
from .graph import (
    Graph,
    cogem_witnesses,
    connected_components,
    dominating_edges,
    from_mask,
    induced_p4s,
    is_connected,
    is_dominating,
)
from .painting import (
    CanonicalParams,
    PaintPlan,
    Stroke,
    Template,
    is_canonical,
    plan_from_masks,
    verify_plan,
)

log = logging.getLogger(__name__)

ALGORITHMS = ("auto", "cograph", "canonical", "oracle")
MAX_TAIL = 12
# the two-phase hub argument bounds optimal plans by |C| + |D| strokes
MAX_EXTRA_STROKES = 4


@dataclass(frozen=True)
class SolveConfig:
    max_tail_k: int = MAX_TAIL
    algorithm: str = "auto"
    color_order: tuple[int, ...] | None = None
    fused: bool = True
    node_budget: int = 200_000_000
    oracle_fallback_vertices: int = 12
    threads: int = field(default_factory=default_threads)

    def __post_init__(self):
        if not 0 <= self.max_tail_k <= MAX_TAIL:
            raise InputError(f"max_tail_k must lie in [0, {MAX_TAIL}], got {self.max_tail_k}")
        if self.algorithm not in ALGORITHMS:
            raise InputError(f"unknown algorithm {self.algorithm!r}; choose from {ALGORITHMS}")


@dataclass(frozen=True)
class Head:
    strokes: tuple[Stroke, ...]
    hub: tuple[int, ...]
    colors: tuple[int, ...]


@dataclass(frozen=True)
class Tail:
    strokes: tuple[Stroke, ...]
    seed_colors: tuple[int, ...]
    seed_vertices: tuple[int, ...]


@dataclass
class ComponentReport:
    vertices: tuple[int, ...]
    algorithm: str
    colors_used: int
    length: int
    tail_k: int | None = None
    hub: tuple[int, ...] | None = None
    nodes: int = 0


@dataclass
class SolveResult:
    plan: PaintPlan
    components: list[ComponentReport]

    @property
    def lower_bound(self) -> int:
        return sum(c.colors_used for c in self.components)


# -- cographs ----------------------------------------------------------------


def _classes(g: Graph, t: Template) -> dict[int, frozenset[int]]:
    out: dict[int, set[int]] = {}
    for v in range(g.n):
        out.setdefault(t[v], set()).add(v)
    return {c: frozenset(vs) for c, vs in out.items()}


def solve_cograph(g: Graph, t: Template) -> PaintPlan:
    """Optimal plan on a connected cograph via a dominating edge ``v1 v2``.

    With ``t^-1(t(v1))`` connected, every other color ``c`` is painted as
    ``t^-1(c) + {v1, v2}`` (the color of ``v2`` last) and the class of ``v1``
    finishes, giving ``|C|`` strokes. Without such an edge two finishing strokes
    ``t^-1(t(v1)) + v2`` and ``{v2}`` are needed, giving ``|C| + 1``.
    """
    if g.n == 0 or not is_connected(g):
        raise InputError("solve_cograph needs a connected, non-empty graph")
    p4 = induced_p4s(g)
    if p4:
        raise InputError(f"not a cograph: induced P4 {[g.label(v) for v in p4[0]]}")
    if g.n == 1:
        return PaintPlan.of([({0}, t[0])])
    classes = _classes(g, t)
    colors = sorted(classes)
    edges = dominating_edges(g)
    for a, b in edges:
        for v1, v2 in ((a, b), (b, a)):
            own = classes[t[v1]]
            if not K.is_connected(g.adjacency, np.int64(g.mask(own))):
                continue
            first = [c for c in colors if c not in (t[v1], t[v2])]
            if t[v2] != t[v1]:
                first.append(t[v2])
            strokes = [(classes[c] | {v1, v2}, c) for c in first] + [(own, t[v1])]
            return PaintPlan.of(strokes)
    v1, v2 = edges[0]
    strokes = [(classes[c] | {v1, v2}, c) for c in colors if c != t[v1]]
    strokes += [(classes[t[v1]] | {v2}, t[v1]), ({v2}, t[v2])]
    return PaintPlan.of(strokes)


# -- literal head / tail enumeration -------------------------------------------


def _order_for(t: Template, order: Sequence[int] | None) -> list[int]:
    used = set(t)
    if order is None:
        return sorted(used)
    missing = used - set(order)
    if missing:
        raise InputError(f"color order misses used colors {sorted(missing)}")
    return [c for c in order if c in used]


def generate_heads(g: Graph, t: Template, order: Sequence[int] | None, s: int, k: int) -> list[Head]:
    """One head per induced P4 ``D`` and color set ``F`` with ``|F| = s - k``."""
    h = s - k
    if h < 0:
        return []
    colors = _order_for(t, order)
    classes = _classes(g, t)
    heads = []
    for p4 in induced_p4s(g):
        hub = frozenset(p4)
        for fs in combinations(colors, h):
            strokes = tuple(Stroke(classes[c] | hub, c) for c in fs)
            heads.append(Head(strokes, p4, fs))
    return heads


def generate_tails(g: Graph, t: Template, s: int, k: int) -> list[Tail]:
    """Tails grown from every seed sequence in ``C^k x V^k``, without duplicates.

    Stroke ``i`` is the component of its seed in ``G[t^-1(c_i) + V_{i+1} + ... + V_k]``,
    computed from the last stroke down. Seeds outside that vertex set cannot
    finish with their own color and are skipped. Distinct seeds giving the same
    area are explored once, which yields the same set as the full product.
    """
    if k < 0 or k > s:
        return []
    adj = g.adjacency
    palette = sorted(set(t))
    colmask = {c: g.mask(vs) for c, vs in _classes(g, t).items()}
    found: dict[tuple[Stroke, ...], Tail] = {}

    def grow(i: int, union: int, strokes: list[Stroke], cols: list[int], seeds: list[int]) -> None:
        if i == 0:
            key = tuple(strokes)
            if key not in found:
                found[key] = Tail(key, tuple(cols), tuple(seeds))
            return
        seen = set()
        for c in palette:
            allowed = colmask[c] | union
            for v in range(g.n):
                if not allowed >> v & 1:
                    continue
                area = int(K.reach(adj, np.int64(allowed), np.int64(1 << v)))
                if (area, c) in seen:
                    continue
                seen.add((area, c))
                grow(i - 1, union | area, [Stroke(from_mask(area), c)] + strokes, [c] + cols, [v] + seeds)

    grow(k, 0, [], [], [])
    return list(found.values())


def combine(g: Graph, t: Template, heads: Sequence[Head], tails: Sequence[Tail],
            k: int, order: Sequence[int] | None = None) -> list[PaintPlan]:
    """Every head + tail concatenation that paints ``t`` and is canonical for its hub."""
    order_t = tuple(_order_for(t, order))
    out: dict[PaintPlan, None] = {}
    for head in heads:
        try:
            params = CanonicalParams(head.hub, k, order_t)
            params.validate(g)
        except InputError:
            continue
        for tail in tails:
            plan = PaintPlan(head.strokes + tail.strokes)
            if plan in out:
                continue
            if verify_plan(g, t, plan).ok and is_canonical(g, t, plan, params):
                out[plan] = None
    return sorted(out, key=PaintPlan.sort_key)


# -- canonical search ------------------------------------------------------


class _Search:
    """Kernel inputs for one connected, non-cograph component."""

    def __init__(self, g: Graph, t: Template, cfg: SolveConfig):
        self.g = g
        self.cfg = cfg
        self.palette = _order_for(t, cfg.color_order)
        classes = _classes(g, t)
        self.colmask = np.array([g.mask(classes[c]) for c in self.palette], dtype=np.int64)
        self.hubs = [p for p in induced_p4s(g) if is_dominating(g, p)]
        self.dmasks = np.array([g.mask(p) for p in self.hubs], dtype=np.int64)
        self.full = np.int64(g.full_mask)
        self.nodes = 0

    def run(self, s: int, k: int, enumerate_all: bool):
        status, areas, cols, meta, nodes = K.canonical_search(
            self.g.adjacency, self.colmask, self.dmasks, self.full, k, s - k,
            enumerate_all, self.cfg.node_budget)
        self.nodes += int(nodes)
        if status < 0:
            raise CapacityError(f"canonical search exceeded {self.cfg.node_budget} nodes at s={s}, k={k}")
        if status == 0:
            return None
        plan = plan_from_masks([int(a) for a in areas[:s]], [self.palette[int(c)] for c in cols[:s]])
        hub = self.hubs[int(meta[1])] if meta[1] >= 0 else None
        return plan, hub


def _canonical_component(g: Graph, t: Template, cfg: SolveConfig) -> tuple[PaintPlan, ComponentReport]:
    search = _Search(g, t, cfg)
    c = len(search.palette)
    order = tuple(search.palette)
    for s in range(c, c + MAX_EXTRA_STROKES + 1):
        kmax = min(cfg.max_tail_k, s)
        if cfg.fused:
            if search.run(s, kmax, False) is None:
                continue
            for k in range(kmax + 1):
                hit = search.run(s, k, True)
                if hit is not None:
                    plan, hub = hit
                    break
        else:
            hit = None
            for k in range(kmax + 1):
                plans = combine(g, t, generate_heads(g, t, order, s, k), generate_tails(g, t, s, k), k, order)
                if plans:
                    plan = plans[0]
                    hub = _hub_for(g, t, plan, k, order)
                    hit = plan
                    break
            if hit is None:
                continue
        if hub is None:
            hub = search.hubs[0] if search.hubs else None
        log.info("canonical: n=%d colors=%d length=%d (c+%d) tail k=%d nodes=%d",
                 g.n, c, s, s - c, k, search.nodes)
        return plan, ComponentReport(tuple(range(g.n)), "canonical", c, s, k, hub, search.nodes)
    if cfg.max_tail_k < MAX_TAIL:
        raise CapacityError(f"no canonical plan with tail length <= {cfg.max_tail_k}")
    raise SearchExhaustedError(f"no canonical plan with at most {c + MAX_EXTRA_STROKES} strokes")


def _hub_for(g: Graph, t: Template, plan: PaintPlan, k: int, order: tuple[int, ...]):
    for p4 in induced_p4s(g):
        params = CanonicalParams(p4, k, order)
        try:
            if is_canonical(g, t, plan, params):
                return p4
        except InputError:
            continue
    return None


# -- dispatch ------------------------------------------------------------------


def _oracle_component(g: Graph, t: Template) -> tuple[PaintPlan, ComponentReport]:
    from .oracle import plan_optimum

    length, plan = plan_optimum(g, t)
    return plan, ComponentReport(tuple(range(g.n)), "oracle", len(set(t)), length)


def _solve_component(g: Graph, t: Template, cfg: SolveConfig) -> tuple[PaintPlan, ComponentReport]:
    colors = len(set(t))
    if cfg.algorithm == "oracle":
        return _oracle_component(g, t)
    p4s = induced_p4s(g)
    if not p4s:
        plan = solve_cograph(g, t)
        return plan, ComponentReport(tuple(range(g.n)), "cograph", colors, len(plan))
    if cfg.algorithm == "cograph":
        raise InputError(f"not a cograph: induced P4 {[g.label(v) for v in p4s[0]]}")
    witness = cogem_witnesses(g, 1)
    if witness:
        labels = [g.label(v) for v in witness[0]]
        if cfg.algorithm == "auto" and g.n <= cfg.oracle_fallback_vertices:
            log.warning("component contains co-gem %s; using the exhaustive oracle", labels)
            return _oracle_component(g, t)
        raise InputError(f"graph is not co-gem-free: co-gem on {labels} (last vertex isolated)")
    try:
        return _canonical_component(g, t, cfg)
    except CapacityError:
        if g.n <= cfg.oracle_fallback_vertices and cfg.algorithm == "auto":
            log.warning("canonical search over budget on %d vertices; using the oracle", g.n)
            return _oracle_component(g, t)
        raise


def solve_with_report(g: Graph, t: Template, cfg: SolveConfig | None = None) -> SolveResult:
    """Optimal plan plus per-component details (algorithm, tail length, hub)."""
    cfg = cfg or SolveConfig()
    if len(t) != g.n or any(c is None for c in t):
        raise InputError("template must assign a color to every vertex")
    comps = connected_components(g)
    jobs = []
    for comp in comps:
        sub, ids = g.subgraph(comp)
        jobs.append((sub, tuple(t[v] for v in ids), ids))

    def run(job):
        sub, sub_t, ids = job
        return _solve_component(sub, sub_t, cfg)

    if cfg.threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]

    strokes: list[Stroke] = []
    reports = []
    for (sub, _, ids), (plan, rep) in zip(jobs, results):
        strokes.extend(Stroke(frozenset(ids[v] for v in st.area), st.color) for st in plan)
        rep.vertices = tuple(ids)
        if rep.hub is not None:
            rep.hub = tuple(ids[v] for v in rep.hub)
        reports.append(rep)
    plan = PaintPlan(tuple(strokes))
    check = verify_plan(g, t, plan)
    if not check.ok:  # pragma: no cover - would be a solver bug
        raise SearchExhaustedError(f"solver produced an invalid plan: {check.message}")
    return SolveResult(plan, reports)


def solve(g: Graph, t: Template, cfg: SolveConfig | None = None) -> PaintPlan:
    """Optimal paint plan, solving each connected component independently."""
    return solve_with_report(g, t, cfg).plan
