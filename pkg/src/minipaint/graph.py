"""Immutable simple graphs over dense vertex ids, plus the structural queries.

Vertex sets travel through the public API as ``frozenset`` of ids; internally
they are bitmasks handed to :mod:`minipaint.kernels`.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations

import numpy as np

from . import kernels as K
from .errors import CapacityError, InputError

VertexSet = frozenset


class Graph:
    """A finite simple undirected graph on vertices ``0 .. n-1``.

    Labels are cosmetic and only used for display and serialization.
    """

    __slots__ = ("n", "_adj", "_labels", "_arr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Sequence[str] | None = None):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        if n > K.MAX_VERTICES:
            raise CapacityError(f"graphs are limited to {K.MAX_VERTICES} vertices, got {n}")
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is None:
            labels = [str(v) for v in range(n)]
        elif len(labels) != n:
            raise InputError(f"expected {n} labels, got {len(labels)}")
        self.n = n
        self._adj = tuple(adj)
        self._labels = tuple(labels)
        self._arr = np.array(adj, dtype=np.int64)
        self._arr.setflags(write=False)

    @classmethod
    def from_labels(cls, labels: Sequence[str], edges: Iterable[tuple[str, str]]) -> Graph:
        index = {lab: i for i, lab in enumerate(labels)}
        return cls(len(labels), ((index[a], index[b]) for a, b in edges), labels)

    # -- basic accessors ---------------------------------------------------

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only ``int64`` neighbour masks, one per vertex."""
        return self._arr

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return from_mask(self._adj[v])

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self._adj[u] >> v & 1]

    def vertices(self) -> range:
        return range(self.n)

    def label(self, v: int) -> str:
        return self._labels[v]

    def subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled ``0..m-1`` in ascending id order, plus the id map."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        return Graph(len(keep), edges, [self._labels[v] for v in keep]), keep

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, (int, np.integer)) and 0 <= v < self.n):
            raise InputError(f"vertex {v!r} is not in 0..{self.n - 1}")

    def mask(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            self._check_vertex(v)
            m |= 1 << int(v)
        return m

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj and self._labels == other._labels

    def __hash__(self) -> int:
        return hash((self._adj, self._labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges())})"


def from_mask(mask: int) -> frozenset[int]:
    mask = int(mask)
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


# -- connectivity --------------------------------------------------------


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by their lowest vertex."""
    if g.n == 0:
        return []
    return [from_mask(m) for m in K.components(g.adjacency, np.int64(g.full_mask))]


def is_connected_subset(g: Graph, a: Iterable[int]) -> bool:
    """True iff ``a`` is non-empty and induces a connected subgraph."""
    return bool(K.is_connected(g.adjacency, np.int64(g.mask(a))))


def is_connected(g: Graph) -> bool:
    return g.n > 0 and is_connected_subset(g, g.vertices())


def color_component(g: Graph, p: Sequence[int | None], v: int) -> frozenset[int]:
    """Maximal connected monochromatic set containing ``v`` (``None`` is one shared color)."""
    g._check_vertex(v)
    if len(p) != g.n:
        raise InputError(f"painting has {len(p)} entries for {g.n} vertices")
    same = 0
    for w in range(g.n):
        if p[w] == p[v]:
            same |= 1 << w
    return from_mask(K.reach(g.adjacency, np.int64(same), np.int64(1 << v)))


# -- domination and separation -------------------------------------------


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    return int(K.closed_cover(g.adjacency, np.int64(g.mask(d)))) == g.full_mask


def is_separator(g: Graph, s: Iterable[int]) -> bool:
    """True iff removing ``s`` from the connected graph ``g`` disconnects it."""
    if not is_connected(g):
        raise InputError("separators are only defined for connected graphs")
    rest = g.full_mask & ~g.mask(s)
    if rest == 0:
        return False
    return len(K.components(g.adjacency, np.int64(rest))) > 1


def dominating_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges ``vw`` with ``N[v] + N[w] = V``."""
    out = []
    for u, v in g.edges():
        if int(K.closed_cover(g.adjacency, np.int64((1 << u) | (1 << v)))) == g.full_mask:
            out.append((u, v))
    return out


# -- forbidden induced subgraphs -----------------------------------------


def induced_p4s(g: Graph) -> list[tuple[int, int, int, int]]:
    """All induced P4, one path-ordered tuple each (lower endpoint first)."""
    if g.n < 4:
        return []
    return [tuple(int(x) for x in row) for row in K.induced_p4s(g.adjacency)]


def is_cograph(g: Graph) -> bool:
    return not induced_p4s(g)


def cogem_witnesses(g: Graph, limit: int = 1) -> list[tuple[int, int, int, int, int]]:
    """Induced co-gems as ``(p4 path..., isolated vertex)``, at most ``limit`` of them."""
    if g.n < 5 or limit <= 0:
        return []
    return [tuple(int(x) for x in row) for row in K.cogem_subsets(g.adjacency, limit)]


def is_cogem_free(g: Graph) -> bool:
    return not cogem_witnesses(g, 1)


def cogem_free_by_domination(g: Graph) -> bool:
    """Co-gem-freeness through the criterion that every induced P4 dominates."""
    return all(is_dominating(g, p) for p in induced_p4s(g))


def minimal_separators(g: Graph, max_size: int | None = None) -> list[frozenset[int]]:
    """Inclusion-minimal separators of a connected graph by subset enumeration.

    Exponential; meant for the small graphs used in property checks.
    """
    if not is_connected(g):
        raise InputError("separators are only defined for connected graphs")
    top = g.n - 2 if max_size is None else min(max_size, g.n - 2)
    found: list[frozenset[int]] = []
    for size in range(1, top + 1):
        for s in combinations(range(g.n), size):
            fs = frozenset(s)
            if any(m <= fs for m in found):
                continue
            if is_separator(g, fs):
                found.append(fs)
    return found
