"""Invariants checked over random small graphs and templates."""
import random

from hypothesis import assume, given
from hypothesis import strategies as st

from minipaint.equivalence import flood_to_plan, normalize_recursive, plan_to_flood
from minipaint.graph import (
    Graph,
    cogem_free_by_domination,
    color_component,
    connected_components,
    is_cogem_free,
    is_connected,
)
from minipaint.oracle import flood_optimum, plan_optimum
from minipaint.painting import (
    FloodMove,
    Stroke,
    apply_flood_move,
    apply_stroke,
    color_lower_bound,
    finalizing,
    is_recursive_plan,
    simulate_plan,
    verify_flood,
    verify_plan,
)
from minipaint.solvers import solve

from helpers import brute_flood_optimum, inflate, is_cogem_free_by_definition, random_plan


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph(n, [e for e, keep in zip(pairs, mask) if keep])
    if connected:
        assume(is_connected(g))
    return g


@st.composite
def instances(draw, max_n=6, max_colors=3, connected=False):
    g = draw(graphs(max_n=max_n, connected=connected))
    k = draw(st.integers(1, max_colors))
    t = tuple(draw(st.lists(st.integers(0, k - 1), min_size=g.n, max_size=g.n)))
    return g, t


def count_color_components(g, p):
    seen, count = set(), 0
    for v in range(g.n):
        if v not in seen:
            seen |= color_component(g, p, v)
            count += 1
    return count


@given(graphs())
def test_components_partition(g):
    parts = connected_components(g)
    assert sum(len(p) for p in parts) == g.n
    assert frozenset().union(*parts) == frozenset(range(g.n))


@given(instances(max_n=7), st.data())
def test_color_component_is_maximal(inst, data):
    g, t = inst
    v = data.draw(st.integers(0, g.n - 1))
    comp = color_component(g, t, v)
    assert v in comp and len({t[w] for w in comp}) == 1
    for w in comp:
        for u in g.neighbors(w) - comp:
            assert t[u] != t[v]


@given(instances(), st.data())
def test_stroke_changes_exactly_its_area(inst, data):
    g, t = inst
    comps = connected_components(g)
    area = comps[data.draw(st.integers(0, len(comps) - 1))]
    out = apply_stroke(g, t, Stroke(area, 9))
    assert all((out[v] == 9) if v in area else (out[v] == t[v]) for v in range(g.n))


@given(instances(max_n=7), st.data())
def test_flood_moves_only_merge(inst, data):
    g, t = inst
    v = data.draw(st.integers(0, g.n - 1))
    c = data.draw(st.integers(0, 3))
    assert count_color_components(g, apply_flood_move(g, t, FloodMove(v, c))) <= count_color_components(g, t)


@given(instances(max_n=6))
def test_oracle_plans_respect_basic_laws(inst):
    g, t = inst
    n, plan = plan_optimum(g, t)
    assert verify_plan(g, t, plan).ok and len(plan) == n
    assert n >= color_lower_bound(g, t)
    f, sets = finalizing(g, plan)
    assert all(plan[f[v] - 1].color == t[v] for v in range(g.n))
    assert sorted(v for s in sets.values() for v in s) == list(range(g.n))


@given(instances(max_n=6, connected=True))
def test_equivalence_round_trips(inst):
    g, t = inst
    _, plan = plan_optimum(g, t)
    seq = plan_to_flood(g, t, plan)
    assert len(seq) == len(plan) - 1 and verify_flood(g, t, seq).ok
    back = flood_to_plan(g, t, seq)
    assert len(back) == len(plan) and verify_plan(g, t, back).ok
    again = plan_to_flood(g, t, back)
    assert len(again) == len(seq) and verify_flood(g, t, again).ok


@given(instances(max_n=6, connected=True), st.data())
def test_normalize_inflated_plans(inst, data):
    g, t = inst
    _, plan = plan_optimum(g, t)
    plan, _ = inflate(g, t, plan, random.Random(data.draw(st.integers(0, 2**32))))
    out = normalize_recursive(g, t, plan)
    assert len(out) == len(plan) and verify_plan(g, t, out).ok and is_recursive_plan(g, out)
    assert simulate_plan(g, out)[-1] == t


@given(instances(max_n=5, connected=True))
def test_flood_oracle_matches_unpruned_bfs(inst):
    g, t = inst
    assert flood_optimum(g, t)[0] == brute_flood_optimum(g, t)


@given(graphs(max_n=7))
def test_recognition_agrees(g):
    assert is_cogem_free(g) == cogem_free_by_domination(g) == is_cogem_free_by_definition(g)


@given(instances(max_n=7, max_colors=4))
def test_solve_is_optimal_on_cogem_free(inst):
    g, t = inst
    assume(is_cogem_free(g))
    plan = solve(g, t)
    assert verify_plan(g, t, plan).ok
    assert len(plan) == plan_optimum(g, t)[0]


@given(graphs(max_n=7, connected=True), st.integers(1, 6), st.integers(0, 2**32))
def test_normalize_random_valid_plans(g, strokes, seed):
    plan, t = random_plan(g, random.Random(seed), strokes, 3)
    out = normalize_recursive(g, t, plan)
    assert len(out) == len(plan) and verify_plan(g, t, out).ok and is_recursive_plan(g, out)
