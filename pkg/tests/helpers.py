"""Independent reference implementations used only by the tests."""
from __future__ import annotations

from collections import deque
from itertools import combinations, product

import networkx as nx
from networkx.algorithms import isomorphism

from minipaint.graph import Graph
from minipaint.painting import FloodMove, Stroke, apply_flood_move, color_component

FIG1_LABELS = "b p f s m c l x h y r g".split()
FIG1_EDGES = [("b", x) for x in "p s c l x h y r g".split()] + [
    ("p", "f"), ("p", "s"), ("s", "f"), ("s", "m"), ("f", "m")]
FIG1_COLORS = ["B", "G", "K", "L", "M", "W"]
FIG1_TEMPLATE = dict(b="G", p="B", f="G", s="L", m="W", c="M",
                     l="K", x="W", h="W", y="W", r="K", g="L")


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)], [f"v{i + 1}" for i in range(n)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], [f"v{i + 1}" for i in range(n)])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


_P4 = nx.path_graph(4)
_COGEM = nx.disjoint_union(nx.path_graph(4), nx.empty_graph(1))


def has_induced(g: Graph, pattern: nx.Graph) -> bool:
    """Induced-subgraph test through networkx's VF2 matcher."""
    gm = isomorphism.GraphMatcher(to_nx(g), pattern)
    return gm.subgraph_is_isomorphic()


def is_cogem_free_by_definition(g: Graph) -> bool:
    return not has_induced(g, _COGEM)


def is_cograph_by_definition(g: Graph) -> bool:
    return not has_induced(g, _P4)


def brute_flood_optimum(g: Graph, p0: tuple) -> int:
    """Plain BFS over total paintings with every (vertex, color) move; no pruning."""
    palette = sorted(set(p0))
    start = tuple(p0)
    seen = {start: 0}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        if len(set(p)) <= 1:
            return seen[p]
        for v in range(g.n):
            for c in palette:
                q = apply_flood_move(g, p, FloodMove(v, c))
                if q not in seen:
                    seen[q] = seen[p] + 1
                    queue.append(q)
    raise AssertionError("unreachable")


def literal_tails(g: Graph, t: tuple, k: int) -> set[tuple[Stroke, ...]]:
    """Every tail from the full product C^k x V^k, skipping seeds outside their closure."""
    palette = sorted(set(t))
    out = set()
    for cols in product(palette, repeat=k):
        for seeds in product(range(g.n), repeat=k):
            union: frozenset[int] = frozenset()
            areas = [None] * k
            ok = True
            for i in range(k - 1, -1, -1):
                allowed = frozenset(v for v in range(g.n) if t[v] == cols[i]) | union
                if seeds[i] not in allowed:
                    ok = False
                    break
                fake = tuple(1 if v in allowed else 0 for v in range(g.n))
                areas[i] = color_component(g, fake, seeds[i])
                union = union | areas[i]
            if ok:
                out.add(tuple(Stroke(a, c) for a, c in zip(areas, cols)))
    return out


def all_induced_p4_sets(g: Graph) -> set[frozenset[int]]:
    found = set()
    for quad in combinations(range(g.n), 4):
        sub = to_nx(g).subgraph(quad)
        if nx.is_isomorphic(sub, _P4):
            found.add(frozenset(quad))
    return found


ACCEPTANCE_LINES: list[str] = []


def record(criterion: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def inflate(g: Graph, t: tuple, plan, rng, rounds: int = 6):
    """Grow random areas by adjacent vertices whose final color cannot change.

    A vertex qualifies if a later stroke repaints it, or if its target color is
    the stroke's own color. Every grown plan is re-verified before it is kept.
    """
    from minipaint.painting import verify_plan

    grown_count = 0
    for _ in range(rounds):
        i = rng.randrange(len(plan))
        area = plan[i].area
        later = frozenset().union(*(st.area for st in plan[i + 1:]))
        around = frozenset().union(*(g.neighbors(v) for v in area)) - area
        border = sorted(u for u in around if u in later or t[u] == plan[i].color)
        if not border:
            continue
        cand = plan.replace(i, Stroke(area | {rng.choice(border)}, plan[i].color))
        if verify_plan(g, t, cand).ok:
            plan = cand
            grown_count += 1
    return plan, grown_count


def random_plan(g: Graph, rng, strokes: int, colors: int):
    """A random plan of connected strokes; it is valid for its own final painting."""
    from minipaint.painting import PaintPlan, simulate_plan

    out = [Stroke(frozenset(range(g.n)), rng.randrange(colors))] if rng.random() < 0.3 else []
    while len(out) < strokes:
        area = {rng.randrange(g.n)}
        for _ in range(rng.randrange(g.n)):
            border = sorted(frozenset().union(*(g.neighbors(v) for v in area)) - area)
            if not border:
                break
            area.add(rng.choice(border))
        out.append(Stroke(frozenset(area), rng.randrange(colors)))
    # cover any vertex never painted
    plan = PaintPlan(tuple(out))
    missing = [v for v in range(g.n) if all(v not in st.area for st in plan)]
    if missing:
        plan = PaintPlan((Stroke(frozenset(range(g.n)), rng.randrange(colors)),) + plan.strokes)
    return plan, simulate_plan(g, plan)[-1]


def proper_coloring(g: Graph, rng) -> tuple | None:
    """Greedy proper coloring in random vertex order; color classes are independent sets."""
    order = list(range(g.n))
    rng.shuffle(order)
    col: dict[int, int] = {}
    for v in order:
        used = {col[u] for u in g.neighbors(v) if u in col}
        col[v] = min(c for c in range(g.n + 1) if c not in used)
    return tuple(col[v] for v in range(g.n))
