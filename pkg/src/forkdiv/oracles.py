"""Exact NP-hard oracles sized for small verification corpora.

Clique and weighted clique run branch-and-bound with greedy colouring
bounds, colouring runs a clique-seeded saturation-degree branch-and-bound,
and odd holes are found by extending induced paths.  Every witness is
deterministic: ties break toward the lexicographically smallest vertex set.
"""

from __future__ import annotations

import itertools

from .graph import Graph, bits
from .limits import DEFAULT_CAPS, CapacityError


def _greedy_color_groups(adj, cand):
    """Order cand by greedy colour class; the class index bounds any clique."""
    order = []
    bound = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            order.append(v)
            bound.append(color)
            avail &= ~adj[v] & ~(1 << v)
            rest &= ~(1 << v)
    return order, bound


def _max_clique_size(adj, cand, stop_at=None):
    """Largest clique within cand; stops early once stop_at is reached."""
    best = 0

    def expand(size, cand):
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        order, bound = _greedy_color_groups(adj, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bound[i] <= best:
                return
            if stop_at is not None and best >= stop_at:
                return
            v = order[i]
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, cand)
    return best


def clique_number(g: Graph) -> int:
    return _max_clique_size(g.adj, g.vertex_mask)


def max_clique(g: Graph) -> int:
    """Lexicographically smallest maximum clique, as a bitmask."""
    w = clique_number(g)
    chosen = 0
    cand = g.vertex_mask
    for _ in range(w):
        for v in bits(cand):
            rest = cand & g.adj[v]
            need = w - chosen.bit_count() - 1
            if _max_clique_size(g.adj, rest, stop_at=need) >= need:
                chosen |= 1 << v
                cand = rest
                break
    return chosen


def independence_number(g: Graph) -> int:
    return clique_number(g.complement())


def _check_weights(g, weights):
    weights = tuple(int(w) for w in weights)
    if len(weights) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(weights)}")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    return weights


def _max_weight_value(adj, weights, cand):
    """Largest total weight of a clique within cand (empty clique counts)."""
    order = sorted(bits(cand), key=lambda v: (-weights[v], v))
    best = 0

    def expand(wsum, cand, rest_sum):
        nonlocal best
        if wsum > best:
            best = wsum
        if wsum + rest_sum <= best:
            return
        for v in order:
            if not cand >> v & 1:
                continue
            if wsum + rest_sum <= best:
                return
            expand(wsum + weights[v], cand & adj[v], _wsum(weights, cand & adj[v]))
            cand &= ~(1 << v)
            rest_sum -= weights[v]

    expand(0, cand, _wsum(weights, cand))
    return best


def _wsum(weights, mask):
    return sum(weights[v] for v in bits(mask))


def max_weight_clique(g: Graph, weights) -> tuple[int, int]:
    """(best total weight, witness bitmask); witness is lexicographically
    smallest among optima, which may include zero-weight vertices."""
    weights = _check_weights(g, weights)
    target = _max_weight_value(g.adj, weights, g.vertex_mask)
    chosen = 0
    cand = g.vertex_mask
    remaining = target
    while remaining > 0:
        for v in bits(cand):
            rest = cand & g.adj[v]
            if weights[v] + _max_weight_value(g.adj, weights, rest) == remaining:
                chosen |= 1 << v
                cand = rest
                remaining -= weights[v]
                break
        else:  # pragma: no cover - target is always attainable
            raise AssertionError("weighted clique witness reconstruction failed")
    return target, chosen


# -- colouring --------------------------------------------------------


def _dsatur_order_pick(adj, colors, uncolored, degrees):
    best = None
    key = None
    for v in bits(uncolored):
        sat = len({colors[u] for u in bits(adj[v]) if colors[u] >= 0})
        k = (-sat, -degrees[v], v)
        if key is None or k < key:
            key = k
            best = v
    return best


def exact_coloring(g: Graph, cap: int = DEFAULT_CAPS.coloring) -> tuple[int, ...]:
    """An optimal proper colouring with colours 0..chi-1.

    Clique-seeded saturation-degree branch and bound; deterministic.
    """
    n = g.n
    if n > cap:
        raise CapacityError("exact_coloring", n, cap)
    if n == 0:
        return ()
    adj = g.adj
    degrees = [g.degree(v) for v in range(n)]
    seed = max_clique(g)
    lb = seed.bit_count()

    colors = [-1] * n
    for i, v in enumerate(bits(seed)):
        colors[v] = i

    # greedy DSATUR completion gives the initial upper bound
    greedy = colors.copy()
    uncolored = g.vertex_mask & ~seed
    while uncolored:
        v = _dsatur_order_pick(adj, greedy, uncolored, degrees)
        used = {greedy[u] for u in bits(adj[v]) if greedy[u] >= 0}
        c = 0
        while c in used:
            c += 1
        greedy[v] = c
        uncolored &= ~(1 << v)
    best_k = max(greedy) + 1
    best = greedy
    if best_k == lb:
        return tuple(best)

    def solve(uncolored, used_k):
        nonlocal best, best_k
        if used_k >= best_k:
            return
        if not uncolored:
            best = colors.copy()
            best_k = used_k
            return
        v = _dsatur_order_pick(adj, colors, uncolored, degrees)
        forbidden = {colors[u] for u in bits(adj[v]) if colors[u] >= 0}
        for c in range(used_k):
            if c in forbidden:
                continue
            colors[v] = c
            solve(uncolored & ~(1 << v), used_k)
            colors[v] = -1
        if used_k + 1 < best_k:
            colors[v] = used_k
            solve(uncolored & ~(1 << v), used_k + 1)
            colors[v] = -1

    solve(g.vertex_mask & ~seed, lb)
    return tuple(best)


def chromatic_number(g: Graph, cap: int = DEFAULT_CAPS.coloring) -> int:
    coloring = exact_coloring(g, cap)
    return max(coloring) + 1 if coloring else 0


# -- odd holes and perfection ------------------------------------------


def find_odd_hole(g: Graph, cap: int = DEFAULT_CAPS.odd_hole) -> int | None:
    """Vertex bitmask of an induced odd cycle of length >= 5, or None.

    Grows induced paths anchored at their smallest vertex; a path can only
    close through a candidate adjacent to both ends and nothing in between.
    """
    n = g.n
    if n > cap:
        raise CapacityError("find_odd_hole", n, cap)
    if n < 5:
        return None
    adj = g.adj
    full = g.vertex_mask

    for start in range(n - 4):
        above = full >> (start + 1) << (start + 1)

        def dfs(path, used, blocked):
            # blocked: vertices adjacent to an interior vertex of the path
            last = path[-1]
            cand = adj[last] & above & ~used & ~blocked
            grown = blocked | adj[last]
            for v in bits(cand):
                if adj[v] >> start & 1:
                    cycle_len = len(path) + 1
                    if cycle_len >= 5 and cycle_len % 2 == 1:
                        return used | 1 << v
                else:
                    hit = dfs(path + [v], used | 1 << v, grown)
                    if hit:
                        return hit
            return None

        found = None
        for first in bits(adj[start] & above):
            found = dfs([start, first], 1 << start | 1 << first, 0)
            if found:
                break
        if found:
            return found
    return None


def find_odd_hole_subsets(g: Graph, cap: int = DEFAULT_CAPS.subset_hole) -> int | None:
    """Independent re-derivation of find_odd_hole by subset enumeration."""
    n = g.n
    if n > cap:
        raise CapacityError("find_odd_hole_subsets", n, cap)
    for size in range(5, n + 1, 2):
        for combo in itertools.combinations(range(n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            if all((g.adj[v] & m).bit_count() == 2 for v in combo):
                sub, _ = g.induced(m)
                if sub.is_connected():
                    return m
    return None


def find_odd_antihole(g: Graph, cap: int = DEFAULT_CAPS.odd_hole) -> int | None:
    return find_odd_hole(g.complement(), cap)


def is_perfect(g: Graph, cap: int = DEFAULT_CAPS.odd_hole) -> bool:
    """No odd hole and no odd antihole."""
    return find_odd_hole(g, cap) is None and find_odd_antihole(g, cap) is None


def is_perfect_induced(g: Graph, mask: int, cap: int = DEFAULT_CAPS.odd_hole) -> bool:
    sub, _ = g.induced(mask)
    return is_perfect(sub, cap)
