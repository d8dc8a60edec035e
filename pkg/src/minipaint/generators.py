"""Seeded random instances: cographs from cotrees, co-gem-free graphs by rejection."""
from __future__ import annotations

import random

from .errors import CapacityError, InputError
from .graph import Graph, is_cogem_free, is_connected, is_cograph
from .io import Instance

KINDS = ("cograph", "cogem-free", "random")


def _cotree(rng: random.Random, vertices: list[int], join: bool | None) -> list[tuple[int, int]]:
    """Edges of a random cograph on ``vertices``; ``join`` forces the root operation."""
    if len(vertices) == 1:
        return []
    split = rng.randint(1, len(vertices) - 1)
    left, right = vertices[:split], vertices[split:]
    edges = _cotree(rng, left, None) + _cotree(rng, right, None)
    if join if join is not None else rng.random() < 0.5:
        edges += [(u, v) for u in left for v in right]
    return edges


def random_cograph(n: int, rng: random.Random, connected: bool = False) -> Graph:
    verts = list(range(n))
    rng.shuffle(verts)
    edges = _cotree(rng, verts, True if connected else None)
    return Graph(n, sorted((min(e), max(e)) for e in edges), [f"v{i}" for i in range(n)])


def random_graph(n: int, rng: random.Random, edge_prob: float | None = None) -> Graph:
    p = rng.uniform(0.2, 0.9) if edge_prob is None else edge_prob
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges, [f"v{i}" for i in range(n)])


def random_template(n: int, colors: int, rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.randrange(colors) for _ in range(n))


def generate(kind: str, n: int, colors: int, seed: int, *, connected: bool = False,
             non_cograph: bool = False, edge_prob: float | None = None,
             budget: int = 20_000) -> Instance:
    """A reproducible instance; identical arguments give an identical instance.

    ``cogem-free`` rejection-samples dense random graphs (edge probability drawn
    from [0.5, 0.95] unless given) and raises :class:`CapacityError` after
    ``budget`` rejected draws. ``connected`` and ``non_cograph`` add filters.
    """
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}; choose from {KINDS}")
    if n < 0 or colors < 1:
        raise InputError("need n >= 0 and at least one color")
    rng = random.Random(f"{kind}:{n}:{colors}:{seed}")
    if kind == "cograph":
        if non_cograph:
            raise InputError("a cograph cannot be a non-cograph")
        g = random_cograph(n, rng, connected) if n else Graph(0)
    else:
        for _ in range(budget):
            if kind == "random":
                g = random_graph(n, rng, edge_prob)
            else:
                g = random_graph(n, rng, edge_prob if edge_prob is not None else rng.uniform(0.5, 0.95))
                if not is_cogem_free(g):
                    continue
            if connected and n and not is_connected(g):
                continue
            if non_cograph and is_cograph(g):
                continue
            break
        else:
            raise CapacityError(f"no {kind} graph with n={n} accepted after {budget} draws")
    template = random_template(n, colors, rng)
    return Instance(g, template, tuple(f"c{i}" for i in range(colors)),
                    name=f"{kind}-n{n}-k{colors}-s{seed}", source="minipaint.generators")
