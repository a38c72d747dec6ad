"""Exact solvers for domination-type invariants.

Core reduction
--------------
For the independent variants, the positive vertices of a valid labeling form
an independent set that must also dominate (every 0/∅ vertex needs a
positively labeled neighbor), i.e. a *maximal* independent set.  Conversely,
fix a maximal independent set S and ask for the cheapest valid labeling whose
positive set is exactly S.  A vertex v outside S whose only S-neighbor is u
forces u to carry the strong label (3 in the double Roman case, 2 in the
Roman {2} case, {1,2} in the rainbow case); if v has two or more S-neighbors
the weak labels already suffice for the double Roman and Roman {2} rules.
Writing forced(S) for the set of vertices of S that are the unique S-neighbor
of some outside vertex, the optimum over labelings with positive set S is

    i_dR:   2|S| + |forced(S)|     (3 on forced(S), 2 on the rest of S)
    i_R2:    |S| + |forced(S)|     (2 on forced(S), 1 on the rest of S)

and the global optimum is the minimum over all maximal independent sets.
The rainbow variant also pins {1,2} on forced(S), but outside vertices with
several S-neighbors additionally need both colors present, so the remaining
members are labeled by a small exact backtracking over {1},{2},{1,2}.
No vertex of S ever takes the value 1 in an optimal independent double Roman
labeling: a 1-vertex would need a neighbor labeled >= 2, contradicting
independence of the positive set.

The plain (non-independent) numbers γ, γ_{R2}, γ_{dR} have no such
decomposition and are solved by depth-first branch and bound: γ branches on
the dominators of a most-constrained undominated vertex, γ_{R2} and γ_{dR}
assign labels vertex by vertex in BFS order, all three pruned by a fractional
lower bound computed from the vertices whose demands are not yet met (each
future weight unit placed at a vertex can serve at most 1+Δ closed-neighbor
demands).  The independent variants provide valid starting incumbents.

Exact exponential solvers refuse graphs larger than 24 vertices unless the
IDRD_SIZE_LIMIT environment variable (or the `size_limit` argument) raises
the bar.  Witnesses from the enumeration-based solvers break ties toward the
lexicographically smallest positive set; the branch-and-bound witnesses are
the deterministic first optimum found.
"""

import os
from collections import deque
from dataclasses import dataclass, field

from .graph import Graph
from .labelings import DRLabeling, R2Labeling, RainbowLabeling

DEFAULT_SIZE_LIMIT = 24

INVARIANT_NAMES = (
    "order",
    "max_degree",
    "min_degree",
    "gamma",
    "idn",
    "gamma_r2",
    "ir2dn",
    "i2rdn",
    "gamma_dr",
    "idrdn",
    "packing",
    "max_matching",
    "min_edge_cover",
)


class SizeLimitError(RuntimeError):
    """Raised when an exact solver is asked for a graph above the size guard."""


def _resolve_limit(size_limit: int | None) -> int:
    if size_limit is not None:
        return int(size_limit)
    env = os.environ.get("IDRD_SIZE_LIMIT")
    if env is not None:
        return int(env)
    return DEFAULT_SIZE_LIMIT


def _guard(g: Graph, size_limit: int | None) -> None:
    limit = _resolve_limit(size_limit)
    if g.n > limit:
        raise SizeLimitError(
            f"graph order {g.n} exceeds the exact-solver limit {limit} "
            f"(set IDRD_SIZE_LIMIT to override)"
        )


def _require_vertices(g: Graph) -> None:
    if g.n == 0:
        raise ValueError("solver needs at least one vertex")


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


# ---------------------------------------------------------------------------
# maximal independent set enumeration
# ---------------------------------------------------------------------------


def maximal_independent_sets(g: Graph):
    """Yield every maximal independent set of g exactly once, deterministically.

    Pivoting backtracking (Bron–Kerbosch on the complement) over the vertex
    order sorted by descending degree (ties by ascending index).  Pivot rule:
    the member of P ∪ X maximizing |P ∩ nonneighbors|, ties to the earliest
    position in that order; candidates are scanned in ascending position.
    """
    n = g.n
    if n == 0:
        yield frozenset()
        return
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    nonadj = [0] * n
    for i, v in enumerate(order):
        nb = g.neighbor_mask(v)
        m = 0
        for j, u in enumerate(order):
            if j != i and not ((nb >> u) & 1):
                m |= 1 << j
        nonadj[i] = m

    def expand(r: int, p: int, x: int):
        if p == 0 and x == 0:
            yield frozenset(order[i] for i in _bits(r))
            return
        best_i, best_c = -1, -1
        for i in _bits(p | x):
            c = (p & nonadj[i]).bit_count()
            if c > best_c:
                best_c, best_i = c, i
        cand = p & ~nonadj[best_i]
        for i in _bits(cand):
            b = 1 << i
            yield from expand(r | b, p & nonadj[i], x & nonadj[i])
            p &= ~b
            x |= b

    yield from expand(0, (1 << n) - 1, 0)


def _forced_positives(g: Graph, s: frozenset) -> set:
    """Members of s that are the unique s-neighbor of some outside vertex."""
    forced = set()
    for v in range(g.n):
        if v in s:
            continue
        inter = [u for u in g.adjacency(v) if u in s]
        if len(inter) == 1:
            forced.add(inter[0])
    return forced


def forced_threes(g: Graph, s) -> frozenset:
    """Vertices of the maximal independent set s pinned to the strong label.

    Raises ValueError when s is not a maximal independent set (equivalently:
    independent and dominating).
    """
    s = frozenset(s)
    if not (g.is_independent(s) and g.is_dominating(s)):
        raise ValueError("s is not a maximal independent set")
    return frozenset(_forced_positives(g, s))


# ---------------------------------------------------------------------------
# independent variants (exact via the reduction)
# ---------------------------------------------------------------------------


def idrdn(g: Graph, size_limit: int | None = None) -> tuple[int, DRLabeling]:
    """Independent double Roman domination number with an optimal labeling."""
    _guard(g, size_limit)
    _require_vertices(g)
    best = None  # (weight, sorted positive tuple, forced set)
    for s in maximal_independent_sets(g):
        forced = _forced_positives(g, s)
        key = (2 * len(s) + len(forced), tuple(sorted(s)))
        if best is None or key < best[:2]:
            best = (key[0], key[1], forced)
    weight, members, forced = best
    vals = [0] * g.n
    for v in members:
        vals[v] = 3 if v in forced else 2
    return weight, DRLabeling(vals)


def idn(g: Graph, size_limit: int | None = None) -> tuple[int, frozenset]:
    """Independent domination number with a minimum maximal independent set."""
    _guard(g, size_limit)
    _require_vertices(g)
    best = None
    for s in maximal_independent_sets(g):
        key = (len(s), tuple(sorted(s)))
        if best is None or key < best:
            best = key
    return best[0], frozenset(best[1])


def ir2dn(g: Graph, size_limit: int | None = None) -> tuple[int, R2Labeling]:
    """Independent Roman {2} domination number with an optimal labeling."""
    _guard(g, size_limit)
    _require_vertices(g)
    best = None
    for s in maximal_independent_sets(g):
        forced = _forced_positives(g, s)
        key = (len(s) + len(forced), tuple(sorted(s)))
        if best is None or key < best[:2]:
            best = (key[0], key[1], forced)
    weight, members, forced = best
    vals = [0] * g.n
    for v in members:
        vals[v] = 2 if v in forced else 1
    return weight, R2Labeling(vals)


_RAINBOW_CHOICES = (
    (1, 0, frozenset((1,))),
    (0, 1, frozenset((2,))),
    (1, 1, frozenset((1, 2))),
)


def i2rdn(g: Graph, size_limit: int | None = None) -> tuple[int, RainbowLabeling]:
    """Independent 2-rainbow domination number with an optimal labeling.

    Per maximal independent set: forced members take {1,2}; the rest are
    assigned by exact backtracking over {1},{2},{1,2} against the
    both-colors-visible constraints of the outside vertices.
    """
    _guard(g, size_limit)
    _require_vertices(g)
    best_w = None
    best_s = None
    best_labels = None
    for s in maximal_independent_sets(g):
        forced = _forced_positives(g, s)
        s_sorted = tuple(sorted(s))
        base = len(s) + len(forced)
        if best_w is not None and base > best_w:
            continue
        constraints = []
        seen = set()
        for v in range(g.n):
            if v in s:
                continue
            pos_nb = tuple(u for u in g.adjacency(v) if u in s)
            if any(u in forced for u in pos_nb):
                continue
            if pos_nb not in seen:
                seen.add(pos_nb)
                constraints.append(pos_nb)
        labels = {u: frozenset((1, 2)) if u in forced else frozenset((1,)) for u in s_sorted}
        if not constraints:
            if best_w is None or (base, s_sorted) < (best_w, best_s):
                best_w, best_s, best_labels = base, s_sorted, labels
            continue
        relevant = sorted({u for c in constraints for u in c})
        ridx = {u: k for k, u in enumerate(relevant)}
        member_of = [[] for _ in relevant]
        rem = []
        for ci, c in enumerate(constraints):
            rem.append(len(c))
            for u in c:
                member_of[ridx[u]].append(ci)
        c1 = [0] * len(constraints)
        c2 = [0] * len(constraints)
        limit = best_w
        chosen = [None] * len(relevant)
        found = [None]  # (total, labels tuple)

        def dfs(k: int, extra: int) -> None:
            if k == len(relevant):
                total = base + extra
                if found[0] is None or total < found[0][0]:
                    found[0] = (total, tuple(chosen))
                return
            for d1, d2, lab in _RAINBOW_CHOICES:
                ex2 = extra + (len(lab) - 1)
                if limit is not None and base + ex2 > limit:
                    continue
                if found[0] is not None and base + ex2 >= found[0][0]:
                    continue
                ok = True
                for ci in member_of[k]:
                    rem[ci] -= 1
                    c1[ci] += d1
                    c2[ci] += d2
                    if rem[ci] == 0 and (c1[ci] == 0 or c2[ci] == 0):
                        ok = False
                if ok:
                    chosen[k] = lab
                    dfs(k + 1, ex2)
                for ci in member_of[k]:
                    rem[ci] += 1
                    c1[ci] -= d1
                    c2[ci] -= d2

        dfs(0, 0)
        if found[0] is None:
            continue
        total, assignment = found[0]
        if best_w is None or (total, s_sorted) < (best_w, best_s):
            for k, u in enumerate(relevant):
                labels[u] = assignment[k]
            best_w, best_s, best_labels = total, s_sorted, labels
    vals = [frozenset()] * g.n
    for u, lab in best_labels.items():
        vals[u] = lab
    return best_w, RainbowLabeling(vals)


# ---------------------------------------------------------------------------
# plain domination numbers (branch and bound)
# ---------------------------------------------------------------------------


def _bfs_order(g: Graph) -> list:
    """BFS order starting from the max-degree vertex of each component."""
    n = g.n
    seen = [False] * n
    order = []
    for start in sorted(range(n), key=lambda v: (-g.degree(v), v)):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in g.adjacency(v):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


def _gamma_with_witness(g: Graph, size_limit: int | None) -> tuple[int, frozenset]:
    n = g.n
    inc_size, inc_set = idn(g, size_limit)
    inc_mask = 0
    for v in inc_set:
        inc_mask |= 1 << v
    closed = [g.neighbor_mask(v) | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    best = [inc_size, inc_mask]

    def dfs(count: int, dom: int, chosen: int, forbidden: int) -> None:
        if dom == full:
            if count < best[0]:
                best[0], best[1] = count, chosen
            return
        if count + 1 >= best[0]:
            return
        undom = full ^ dom
        allowed = full & ~forbidden & ~chosen
        maxcov = 0
        for u in _bits(allowed):
            c = (closed[u] & undom).bit_count()
            if c > maxcov:
                maxcov = c
        if maxcov == 0:
            return
        need = -(-undom.bit_count() // maxcov)
        if count + need >= best[0]:
            return
        bv, bcands, bcnt = -1, 0, n + 1
        for v in _bits(undom):
            cands = closed[v] & allowed
            c = cands.bit_count()
            if c == 0:
                return
            if c < bcnt:
                bcnt, bv, bcands = c, v, cands
        cand_list = sorted(
            _bits(bcands), key=lambda u: (-(closed[u] & undom).bit_count(), u)
        )
        forb = forbidden
        for u in cand_list:
            dfs(count + 1, dom | closed[u], chosen | (1 << u), forb)
            forb |= 1 << u

    dfs(0, 0, 0, 0)
    return best[0], frozenset(_bits(best[1]))


def domination_number(g: Graph, size_limit: int | None = None) -> int:
    """Exact domination number γ(g)."""
    _guard(g, size_limit)
    _require_vertices(g)
    return _gamma_with_witness(g, size_limit)[0]


def _gamma_r2_with_witness(g: Graph, size_limit: int | None) -> tuple[int, R2Labeling]:
    n = g.n
    inc_w, inc_lab = ir2dn(g, size_limit)
    best = [inc_w, list(inc_lab.values)]
    order = _bfs_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    close_list = [[] for _ in range(n)]
    for u in range(n):
        cp = pos[u]
        for w in g.adjacency(u):
            cp = max(cp, pos[w])
        close_list[cp].append(u)
    denom = 1 + (g.max_degree() if n else 0)
    vals = [-1] * n
    received = [0] * n
    adj = [g.adjacency(v) for v in range(n)]

    def rho_total() -> int:
        tot = 0
        for u in range(n):
            x = vals[u]
            if x > 0:
                continue
            r = received[u]
            if r >= 2:
                continue
            tot += (2 - r) if x == 0 else 1
        return tot

    def dfs(i: int, w: int) -> None:
        if i == n:
            if w < best[0]:
                best[0], best[1] = w, vals.copy()
            return
        v = order[i]
        for val in (0, 2, 1):
            w2 = w + val
            if w2 >= best[0]:
                continue
            vals[v] = val
            if val:
                for u in adj[v]:
                    received[u] += val
            ok = all(vals[u] != 0 or received[u] >= 2 for u in close_list[i])
            if ok and w2 + -(-rho_total() // denom) < best[0]:
                dfs(i + 1, w2)
            if val:
                for u in adj[v]:
                    received[u] -= val
            vals[v] = -1

    dfs(0, 0)
    return best[0], R2Labeling(best[1])


def gamma_r2(g: Graph, size_limit: int | None = None) -> int:
    """Exact Roman {2} domination number γ_{R2}(g)."""
    _guard(g, size_limit)
    _require_vertices(g)
    return _gamma_r2_with_witness(g, size_limit)[0]


def _gamma_dr_with_witness(g: Graph, size_limit: int | None) -> tuple[int, DRLabeling]:
    n = g.n
    inc_w, inc_lab = idrdn(g, size_limit)
    best = [inc_w, list(inc_lab.values)]
    order = _bfs_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    close_list = [[] for _ in range(n)]
    for u in range(n):
        cp = pos[u]
        for w in g.adjacency(u):
            cp = max(cp, pos[w])
        close_list[cp].append(u)
    denom = 1 + (g.max_degree() if n else 0)
    vals = [-1] * n
    count2 = [0] * n
    count3 = [0] * n
    adj = [g.adjacency(v) for v in range(n)]

    def rho_total() -> int:
        tot = 0
        for u in range(n):
            x = vals[u]
            if x >= 2:
                continue
            if x == 1:
                if count2[u] == 0 and count3[u] == 0:
                    tot += 2
                continue
            if count3[u] >= 1 or count2[u] >= 2:
                continue
            if x == 0:
                tot += 2 if count2[u] == 1 else 3
            else:
                tot += 1 if count2[u] == 1 else 2
        return tot

    def satisfied(u: int) -> bool:
        x = vals[u]
        if x >= 2:
            return True
        if x == 1:
            return count2[u] + count3[u] >= 1
        return count3[u] >= 1 or count2[u] >= 2

    def dfs(i: int, w: int) -> None:
        if i == n:
            if w < best[0]:
                best[0], best[1] = w, vals.copy()
            return
        v = order[i]
        for val in (0, 3, 2, 1):
            w2 = w + val
            if w2 >= best[0]:
                continue
            vals[v] = val
            if val == 2:
                for u in adj[v]:
                    count2[u] += 1
            elif val == 3:
                for u in adj[v]:
                    count3[u] += 1
            ok = all(satisfied(u) for u in close_list[i])
            if ok and w2 + -(-rho_total() // denom) < best[0]:
                dfs(i + 1, w2)
            if val == 2:
                for u in adj[v]:
                    count2[u] -= 1
            elif val == 3:
                for u in adj[v]:
                    count3[u] -= 1
            vals[v] = -1

    dfs(0, 0)
    return best[0], DRLabeling(best[1])


def gamma_dr(g: Graph, size_limit: int | None = None) -> int:
    """Exact double Roman domination number γ_{dR}(g)."""
    _guard(g, size_limit)
    _require_vertices(g)
    return _gamma_dr_with_witness(g, size_limit)[0]


# ---------------------------------------------------------------------------
# packing, matching, edge cover
# ---------------------------------------------------------------------------


def packing_number(g: Graph, size_limit: int | None = None) -> tuple[int, frozenset]:
    """Maximum 2-packing (pairwise disjoint closed neighborhoods) with witness.

    A set is a packing iff it is independent in the square graph (vertices at
    distance <= 2 adjacent), so the maximum is found among the square's
    maximal independent sets.
    """
    _guard(g, size_limit)
    _require_vertices(g)
    n = g.n
    closed = [g.neighbor_mask(v) | (1 << v) for v in range(n)]
    square_edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if closed[u] & closed[v]
    ]
    square = Graph(n, square_edges)
    best = None
    for s in maximal_independent_sets(square):
        key = (-len(s), tuple(sorted(s)))
        if best is None or key < best:
            best = key
    return -best[0], frozenset(best[1])


def _matching_partners(g: Graph) -> list:
    """match[v] = partner of v in a maximum matching, -1 if unmatched.

    Augmenting-path search with blossom contraction (base array), O(V^3).
    """
    n = g.n
    adj = [g.adjacency(v) for v in range(n)]
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> bool:
        nonlocal p, base
        used = [False] * n
        p = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        while to != -1:
                            pv = p[to]
                            ppv = match[pv]
                            match[to] = pv
                            match[pv] = to
                            to = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return match


def max_matching(g: Graph) -> int:
    """Maximum matching size α'(g) (exact on general graphs)."""
    _require_vertices(g)
    match = _matching_partners(g)
    return sum(1 for x in match if x != -1) // 2


def _matching_edges(g: Graph) -> tuple:
    match = _matching_partners(g)
    return tuple((v, match[v]) for v in range(g.n) if match[v] > v)


def min_edge_cover(g: Graph) -> int:
    """Minimum edge cover size β'(g) = n - α'(g); needs no isolated vertices."""
    _require_vertices(g)
    if g.has_isolated_vertex():
        raise ValueError("edge cover undefined: graph has an isolated vertex")
    return g.n - max_matching(g)


def _edge_cover_edges(g: Graph) -> tuple:
    match = _matching_partners(g)
    edges = [(v, match[v]) for v in range(g.n) if match[v] > v]
    for v in range(g.n):
        if match[v] == -1:
            edges.append(tuple(sorted((v, g.adjacency(v)[0]))))
    return tuple(sorted(edges))


# ---------------------------------------------------------------------------
# linear-time tree solvers
# ---------------------------------------------------------------------------


def _rooted_order(t: Graph) -> tuple[list, list]:
    parent = [-1] * t.n
    order = [0]
    seen = [False] * t.n
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in t.adjacency(v):
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                order.append(u)
                queue.append(u)
    return parent, order


def tree_idrdn(t: Graph) -> int:
    """Independent double Roman domination number of a tree, by dynamic
    programming over five per-vertex states.

    States: labeled 2; labeled 3; labeled 0 and already defended by children
    (a 3-child or two 2-children); labeled 0 with exactly one 2-child and no
    3-child (defended iff the parent takes 2 or 3); labeled 0 with no
    positive child (defended only by a 3-parent).  A positive vertex admits
    only zero-state children; the root must end positive or defended.
    """
    if not t.is_tree():
        raise ValueError("input is not a tree")
    n = t.n
    INF = float("inf")
    parent, order = _rooted_order(t)
    L2 = [0] * n
    L3 = [0] * n
    ZS = [0] * n
    ZN2 = [0] * n
    ZN3 = [0] * n
    for v in reversed(order):
        children = [u for u in t.adjacency(v) if u != parent[v]]
        if not children:
            L2[v], L3[v] = 2, 3
            ZS[v] = ZN2[v] = INF
            ZN3[v] = 0
            continue
        L2[v] = 2 + sum(min(ZS[c], ZN2[c]) for c in children)
        L3[v] = 3 + sum(min(ZS[c], ZN2[c], ZN3[c]) for c in children)
        # zero label: children pick 2 / 3 / defended-zero; count (2s, 3s) capped
        cur = {(0, 0): 0}
        for c in children:
            nxt = {}
            opts = ((0, 0, ZS[c]), (1, 0, L2[c]), (0, 1, L3[c]))
            for (k2, k3), cost in cur.items():
                for d2, d3, add in opts:
                    if add == INF:
                        continue
                    key = (min(2, k2 + d2), min(1, k3 + d3))
                    val = cost + add
                    if val < nxt.get(key, INF):
                        nxt[key] = val
            cur = nxt
        ZN3[v] = cur.get((0, 0), INF)
        ZN2[v] = cur.get((1, 0), INF)
        ZS[v] = min(
            cur.get((2, 0), INF),
            cur.get((0, 1), INF),
            cur.get((1, 1), INF),
            cur.get((2, 1), INF),
        )
    root = order[0]
    return int(min(L2[root], L3[root], ZS[root]))


def tree_idn(t: Graph) -> int:
    """Independent domination number of a tree (three-state DP)."""
    if not t.is_tree():
        raise ValueError("input is not a tree")
    n = t.n
    INF = float("inf")
    parent, order = _rooted_order(t)
    IN = [0] * n
    DOM = [0] * n  # out of the set, dominated by a child
    UND = [0] * n  # out of the set, needs the parent
    for v in reversed(order):
        children = [u for u in t.adjacency(v) if u != parent[v]]
        IN[v] = 1 + sum(min(DOM[c], UND[c]) for c in children)
        UND[v] = sum(DOM[c] for c in children)
        no_in, with_in = 0, INF
        for c in children:
            no_in, with_in = (
                no_in + DOM[c],
                min(with_in + min(IN[c], DOM[c]), no_in + IN[c]),
            )
        DOM[v] = with_in
    root = order[0]
    return int(min(IN[root], DOM[root]))


# ---------------------------------------------------------------------------
# invariant table
# ---------------------------------------------------------------------------


@dataclass
class InvariantTable:
    """Computed invariant values, optional witnesses, and skip markers."""

    entries: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    not_applicable: dict = field(default_factory=dict)


def compute_invariants(g: Graph, which=None, size_limit: int | None = None) -> InvariantTable:
    """Compute the requested invariants (all known ones by default).

    min_edge_cover is skipped with a not-applicable marker when the graph has
    an isolated vertex.  Unknown names raise ValueError.
    """
    if which is None:
        names = list(INVARIANT_NAMES)
    else:
        names = list(which)
        for name in names:
            if name not in INVARIANT_NAMES:
                raise ValueError(f"unknown invariant {name!r}")
    table = InvariantTable()
    for name in INVARIANT_NAMES:
        if name not in names:
            continue
        if name == "order":
            table.entries[name] = g.n
        elif name == "max_degree":
            table.entries[name] = g.max_degree()
        elif name == "min_degree":
            table.entries[name] = g.min_degree()
        elif name == "gamma":
            _guard(g, size_limit)
            _require_vertices(g)
            value, witness = _gamma_with_witness(g, size_limit)
            table.entries[name] = value
            table.witnesses[name] = tuple(sorted(witness))
        elif name == "idn":
            value, witness = idn(g, size_limit)
            table.entries[name] = value
            table.witnesses[name] = tuple(sorted(witness))
        elif name == "gamma_r2":
            _guard(g, size_limit)
            _require_vertices(g)
            value, witness = _gamma_r2_with_witness(g, size_limit)
            table.entries[name] = value
            table.witnesses[name] = witness
        elif name == "ir2dn":
            value, witness = ir2dn(g, size_limit)
            table.entries[name] = value
            table.witnesses[name] = witness
        elif name == "i2rdn":
            value, witness = i2rdn(g, size_limit)
            table.entries[name] = value
            table.witnesses[name] = witness
        elif name == "gamma_dr":
            _guard(g, size_limit)
            _require_vertices(g)
            value, witness = _gamma_dr_with_witness(g, size_limit)
            table.entries[name] = value
            table.witnesses[name] = witness
        elif name == "idrdn":
            value, witness = idrdn(g, size_limit)
            table.entries[name] = value
            table.witnesses[name] = witness
        elif name == "packing":
            value, witness = packing_number(g, size_limit)
            table.entries[name] = value
            table.witnesses[name] = tuple(sorted(witness))
        elif name == "max_matching":
            table.entries[name] = max_matching(g)
            table.witnesses[name] = _matching_edges(g)
        elif name == "min_edge_cover":
            if g.n > 0 and g.has_isolated_vertex():
                table.not_applicable[name] = "graph has an isolated vertex"
            else:
                table.entries[name] = min_edge_cover(g)
                table.witnesses[name] = _edge_cover_edges(g)
    return table
