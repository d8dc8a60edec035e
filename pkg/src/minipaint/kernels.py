"""Bitmask kernels behind the graph queries, the oracle and the canonical search.

Vertex sets are ``int64`` bitmasks (bit ``v`` set iff vertex ``v`` is a member),
so every kernel assumes at most :data:`MAX_VERTICES` vertices. Adjacency is an
``int64`` array holding one neighbour mask per vertex.

Every function here is compiled by :func:`minipaint._accel.kernel`; keep them
inside the numba-supported subset (no Python objects, no keyword-only args).
"""
from __future__ import annotations

import numpy as np

from ._accel import kernel

MAX_VERTICES = 63


@kernel
def popcount(x):
    c = 0
    while x != 0:
        x &= x - 1
        c += 1
    return c


@kernel
def bit_index(low):
    """Index of the single set bit in ``low``."""
    i = 0
    while (low >> i) & 1 == 0:
        i += 1
    return i


@kernel
def reach(adj, allowed, seed):
    """All vertices of ``allowed`` reachable from ``seed & allowed`` inside ``allowed``."""
    comp = seed & allowed
    frontier = comp
    while frontier != 0:
        nxt = np.int64(0)
        f = frontier
        while f != 0:
            low = f & -f
            nxt |= adj[bit_index(low)]
            f ^= low
        nxt &= allowed & ~comp
        comp |= nxt
        frontier = nxt
    return comp


@kernel
def components(adj, mask):
    """Connected components of the subgraph induced by ``mask``, by lowest vertex."""
    out = np.zeros(popcount(mask), dtype=np.int64)
    cnt = 0
    rem = mask
    while rem != 0:
        low = rem & -rem
        comp = reach(adj, mask, low)
        out[cnt] = comp
        cnt += 1
        rem &= ~comp
    return out[:cnt]


@kernel
def is_connected(adj, mask):
    if mask == 0:
        return False
    return reach(adj, mask, mask & -mask) == mask


@kernel
def closed_cover(adj, mask):
    """Union of closed neighbourhoods of the vertices in ``mask``."""
    out = mask
    f = mask
    while f != 0:
        low = f & -f
        out |= adj[bit_index(low)]
        f ^= low
    return out


@kernel
def _path_order(adj, verts, out, row):
    # verts induces a P4; write it into out[row] starting from its lower endpoint
    m = 0
    for i in range(4):
        m |= np.int64(1) << verts[i]
    start = -1
    for i in range(4):
        if popcount(adj[verts[i]] & m) == 1:
            start = verts[i]
            break
    prev = -1
    cur = start
    for pos in range(4):
        out[row, pos] = cur
        nb = adj[cur] & m
        nxt = -1
        f = nb
        while f != 0:
            low = f & -f
            w = bit_index(low)
            if w != prev:
                nxt = w
                break
            f ^= low
        prev = cur
        cur = nxt


@kernel
def _is_p4(adj, m):
    # four vertices with induced degrees 1,1,2,2 always form a path
    ones = 0
    twos = 0
    f = m
    while f != 0:
        low = f & -f
        d = popcount(adj[bit_index(low)] & m)
        if d == 1:
            ones += 1
        elif d == 2:
            twos += 1
        f ^= low
    return ones == 2 and twos == 2


@kernel
def induced_p4s(adj):
    """Every induced P4 once, as rows in path order (lower endpoint first)."""
    n = adj.shape[0]
    total = 0
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    m = (np.int64(1) << a) | (np.int64(1) << b) | (np.int64(1) << c) | (np.int64(1) << d)
                    if _is_p4(adj, m):
                        total += 1
    out = np.empty((total, 4), dtype=np.int64)
    verts = np.empty(4, dtype=np.int64)
    row = 0
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    m = (np.int64(1) << a) | (np.int64(1) << b) | (np.int64(1) << c) | (np.int64(1) << d)
                    if _is_p4(adj, m):
                        verts[0] = a
                        verts[1] = b
                        verts[2] = c
                        verts[3] = d
                        _path_order(adj, verts, out, row)
                        row += 1
    return out


@kernel
def cogem_subsets(adj, limit):
    """Up to ``limit`` 5-subsets inducing a co-gem (P4 plus an isolated vertex).

    Rows hold the P4 in path order followed by the isolated vertex. Five
    vertices with induced degrees 0,1,1,2,2 are exactly a co-gem.
    """
    n = adj.shape[0]
    out = np.empty((max(limit, 0), 5), dtype=np.int64)
    verts = np.empty(4, dtype=np.int64)
    row = 0
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    for e in range(d + 1, n):
                        if row >= limit:
                            return out[:row]
                        m = ((np.int64(1) << a) | (np.int64(1) << b) | (np.int64(1) << c)
                             | (np.int64(1) << d) | (np.int64(1) << e))
                        iso = -1
                        zeros = 0
                        ones = 0
                        twos = 0
                        f = m
                        while f != 0:
                            low = f & -f
                            v = bit_index(low)
                            deg = popcount(adj[v] & m)
                            if deg == 0:
                                zeros += 1
                                iso = v
                            elif deg == 1:
                                ones += 1
                            elif deg == 2:
                                twos += 1
                            f ^= low
                        if zeros == 1 and ones == 2 and twos == 2:
                            k = 0
                            f = m & ~(np.int64(1) << iso)
                            while f != 0:
                                low = f & -f
                                verts[k] = bit_index(low)
                                k += 1
                                f ^= low
                            _path_order(adj, verts, out, row)
                            out[row, 4] = iso
                            row += 1
    return out[:row]


@kernel
def color_labels(adj, colors):
    """Color-component label per vertex; ``-1`` entries share one pseudo-color."""
    n = colors.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    nxt = 0
    for v in range(n):
        if labels[v] != -1:
            continue
        same = np.int64(0)
        for w in range(n):
            if colors[w] == colors[v]:
                same |= np.int64(1) << w
        comp = reach(adj, same, np.int64(1) << v)
        f = comp
        while f != 0:
            low = f & -f
            labels[bit_index(low)] = nxt
            f ^= low
        nxt += 1
    return labels


# --------------------------------------------------------------------------
# Free Flood-It oracle: depth-limited DFS with a per-iteration visited table.
# --------------------------------------------------------------------------


@kernel
def _distinct(row, ncol):
    seen = 0
    cnt = 0
    for v in range(row.shape[0]):
        b = np.int64(1) << row[v]
        if seen & b == 0:
            seen |= b
            cnt += 1
    return cnt


@kernel
def _encode(row, base):
    code = 0
    mult = 1
    for v in range(row.shape[0]):
        code += row[v] * mult
        mult *= base
    return code


@kernel
def _flood_moves(adj, states, labels, d, ncol, moves_p, moves_c, count):
    lab = color_labels(adj, states[d])
    n = lab.shape[0]
    for v in range(n):
        labels[d, v] = lab[v]
    c = 0
    nlab = 0
    for v in range(n):
        if lab[v] == nlab:
            # v is the lowest vertex of a new component
            nlab += 1
            for col in range(ncol):
                if col != states[d, v]:
                    moves_p[d, c] = v
                    moves_c[d, c] = col
                    c += 1
    count[d] = c


@kernel
def flood_dfs(adj, start, ncol, limit, budget):
    """Search for a flooding of ``start`` with exactly ``limit`` moves or fewer.

    ``start`` holds palette indices ``0..ncol-1``. Returns
    ``(status, length, nodes, pivots, colors)`` where status is 1 (found),
    0 (proved impossible within ``limit``) or -1 (node budget exceeded).
    """
    n = start.shape[0]
    path_p = np.zeros(max(limit, 1), dtype=np.int64)
    path_c = np.zeros(max(limit, 1), dtype=np.int64)
    if _distinct(start, ncol) <= 1:
        return 1, 0, 0, path_p, path_c
    if limit == 0:
        return 0, 0, 0, path_p, path_c
    states = np.empty((limit + 1, n), dtype=np.int64)
    labels = np.empty((limit + 1, n), dtype=np.int64)
    maxm = n * ncol
    moves_p = np.empty((limit + 1, maxm), dtype=np.int64)
    moves_c = np.empty((limit + 1, maxm), dtype=np.int64)
    count = np.zeros(limit + 1, dtype=np.int64)
    idx = np.zeros(limit + 1, dtype=np.int64)
    for v in range(n):
        states[0, v] = start[v]
    visited = dict()
    visited[_encode(start, ncol)] = limit
    _flood_moves(adj, states, labels, 0, ncol, moves_p, moves_c, count)
    nodes = 0
    d = 0
    while d >= 0:
        if idx[d] >= count[d]:
            d -= 1
            continue
        j = idx[d]
        idx[d] += 1
        pv = moves_p[d, j]
        cc = moves_c[d, j]
        lab = labels[d, pv]
        for v in range(n):
            if labels[d, v] == lab:
                states[d + 1, v] = cc
            else:
                states[d + 1, v] = states[d, v]
        nodes += 1
        if nodes > budget:
            return -1, 0, nodes, path_p, path_c
        path_p[d] = pv
        path_c[d] = cc
        rem = limit - d - 1
        nd = _distinct(states[d + 1], ncol)
        if nd == 1:
            return 1, d + 1, nodes, path_p, path_c
        # every move removes at most one color from the board
        if nd - 1 > rem:
            continue
        code = _encode(states[d + 1], ncol)
        if visited.get(code, -1) >= rem:
            continue
        visited[code] = rem
        d += 1
        idx[d] = 0
        _flood_moves(adj, states, labels, d, ncol, moves_p, moves_c, count)
    return 0, 0, nodes, path_p, path_c


# --------------------------------------------------------------------------
# Canonical plan search: backward tail construction fused with head matching.
# --------------------------------------------------------------------------


@kernel
def set_cmp(a, b):
    """Compare two vertex masks as ascending sorted tuples (-1, 0, 1)."""
    if a == b:
        return 0
    x = a ^ b
    x = x & -x
    if a & x != 0:
        return -1 if b & ~(x | (x - 1)) != 0 else 1
    return 1 if a & ~(x | (x - 1)) != 0 else -1


@kernel
def _plan_cmp(area_a, col_a, area_b, col_b):
    for i in range(area_a.shape[0]):
        c = set_cmp(area_a[i], area_b[i])
        if c != 0:
            return c
        if col_a[i] != col_b[i]:
            return -1 if col_a[i] < col_b[i] else 1
    return 0


@kernel
def _color_set(colmask, w):
    out = np.int64(0)
    for c in range(colmask.shape[0]):
        if colmask[c] & w != 0:
            out |= np.int64(1) << c
    return out


@kernel
def _head_colors(colmask, dmask, w, h):
    """Head color set (palette bitmask) completing the plan, or -1.

    ``w`` is the set of vertices the tail leaves unfinished. The head paints
    ``t^-1(c) + D`` for each chosen color in ascending order, so every vertex of
    ``w - D`` needs its own color in the head and every vertex of ``w & D`` must
    carry the last (largest) head color.
    """
    nc = colmask.shape[0]
    if h == 0:
        return 0 if w == 0 else -1
    need = _color_set(colmask, w & ~dmask)
    dr = w & dmask
    top = nc
    if dr != 0:
        dcols = _color_set(colmask, dr)
        if popcount(dcols) != 1:
            return -1
        m = bit_index(dcols)
        need |= dcols
        if need >> (m + 1) != 0:
            return -1
        top = m + 1
    if popcount(need) > h or h > top:
        return -1
    # pad with the smallest unused colors below the cap; keeps the top color last
    c = 0
    while popcount(need) < h:
        if need & (np.int64(1) << c) == 0:
            need |= np.int64(1) << c
        c += 1
    return need


@kernel
def _emit(colmask, dmask, fset, tail_area, tail_col, k, h, out_area, out_col):
    pos = 0
    for c in range(colmask.shape[0]):
        if fset & (np.int64(1) << c) != 0:
            out_area[pos] = colmask[c] | dmask
            out_col[pos] = c
            pos += 1
    # tail_area[L] holds stroke k - L (levels are filled back to front)
    for i in range(k):
        out_area[h + i] = tail_area[k - 1 - i]
        out_col[h + i] = tail_col[k - 1 - i]


@kernel
def _leaf(colmask, dmasks, w, k, h, tail_area, tail_col, enumerate_all,
          best_area, best_col, best_meta, scratch_area, scratch_col):
    """Match every hub ``D`` against the tail; update the best plan. Returns hits."""
    hits = 0
    nd = dmasks.shape[0]
    for di in range(max(nd, 1)):
        dmask = dmasks[di] if nd > 0 else np.int64(0)
        if nd == 0 and h > 0:
            break
        fset = _head_colors(colmask, dmask, w, h)
        if fset < 0:
            continue
        hits += 1
        _emit(colmask, dmask, fset, tail_area, tail_col, k, h, scratch_area, scratch_col)
        if best_meta[0] == 0 or _plan_cmp(scratch_area, scratch_col, best_area, best_col) < 0:
            for i in range(h + k):
                best_area[i] = scratch_area[i]
                best_col[i] = scratch_col[i]
            best_meta[0] = 1
            best_meta[1] = di if nd > 0 else -1
            best_meta[2] = fset
        if not enumerate_all:
            return hits
        if h == 0:
            # an empty head does not depend on D
            return hits
    return hits


@kernel
def _tail_candidates(adj, colmask, u, level, cand_area, cand_col, count):
    c_out = 0
    for c in range(colmask.shape[0]):
        allowed = colmask[c] | u
        seeds = colmask[c] & ~u
        while seeds != 0:
            low = seeds & -seeds
            comp = reach(adj, allowed, low)
            cand_area[level, c_out] = comp
            cand_col[level, c_out] = c
            c_out += 1
            seeds &= ~comp
    count[level] = c_out


@kernel
def canonical_search(adj, colmask, dmasks, full, k, h, enumerate_all, budget):
    """Search maximal canonical plans with ``h`` head and ``k`` tail strokes.

    Tail strokes are built last-to-first: stroke ``i`` paints the component of
    a seed inside ``t^-1(c_i)`` plus the union of the later tail areas, and
    only seeds that finish at least one new vertex are tried. Partial tails are
    pruned when the unfinished vertices carry more colors than strokes remain,
    and failed ``(union, remaining)`` states are memoised.

    Returns ``(status, areas, colors, meta, nodes)``; status 1 = found,
    0 = none exists, -1 = node budget exceeded. ``meta`` is
    ``[found, hub index, head color mask]``. With ``enumerate_all`` the
    lexicographically smallest plan is kept, otherwise the first one found.
    """
    s = h + k
    nc = colmask.shape[0]
    best_area = np.zeros(max(s, 1), dtype=np.int64)
    best_col = np.zeros(max(s, 1), dtype=np.int64)
    scratch_area = np.zeros(max(s, 1), dtype=np.int64)
    scratch_col = np.zeros(max(s, 1), dtype=np.int64)
    best_meta = np.zeros(3, dtype=np.int64)
    tail_area = np.zeros(max(k, 1), dtype=np.int64)
    tail_col = np.zeros(max(k, 1), dtype=np.int64)
    nodes = 0
    if popcount(_color_set(colmask, full)) > s:
        return 0, best_area, best_col, best_meta, nodes
    if k == 0:
        _leaf(colmask, dmasks, full, k, h, tail_area, tail_col, enumerate_all,
              best_area, best_col, best_meta, scratch_area, scratch_col)
        return best_meta[0], best_area, best_col, best_meta, nodes
    maxc = popcount(full) * nc + 1
    cand_area = np.zeros((k, maxc), dtype=np.int64)
    cand_col = np.zeros((k, maxc), dtype=np.int64)
    count = np.zeros(k, dtype=np.int64)
    idx = np.zeros(k, dtype=np.int64)
    ustack = np.zeros(k + 1, dtype=np.int64)
    succ = np.zeros(k + 1, dtype=np.bool_)
    failed = dict()
    failed[(np.int64(0), np.int64(-1))] = True
    _tail_candidates(adj, colmask, ustack[0], 0, cand_area, cand_col, count)
    lvl = 0
    while lvl >= 0:
        if idx[lvl] >= count[lvl]:
            if succ[lvl]:
                if lvl > 0:
                    succ[lvl - 1] = True
            else:
                failed[(ustack[lvl], np.int64(k - lvl))] = True
            lvl -= 1
            continue
        j = idx[lvl]
        idx[lvl] += 1
        area = cand_area[lvl, j]
        tail_area[lvl] = area
        tail_col[lvl] = cand_col[lvl, j]
        u_new = ustack[lvl] | area
        rem = k - lvl - 1
        nodes += 1
        if nodes > budget:
            return -1, best_area, best_col, best_meta, nodes
        w = full & ~u_new
        if popcount(_color_set(colmask, w)) > rem + h:
            continue
        if rem == 0:
            hits = _leaf(colmask, dmasks, w, k, h, tail_area, tail_col, enumerate_all,
                         best_area, best_col, best_meta, scratch_area, scratch_col)
            if hits > 0:
                if not enumerate_all:
                    return 1, best_area, best_col, best_meta, nodes
                succ[lvl] = True
            continue
        if (u_new, np.int64(rem)) in failed:
            continue
        lvl += 1
        ustack[lvl] = u_new
        idx[lvl] = 0
        succ[lvl] = False
        _tail_candidates(adj, colmask, u_new, lvl, cand_area, cand_col, count)
    return best_meta[0], best_area, best_col, best_meta, nodes
