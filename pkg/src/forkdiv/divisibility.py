"""Perfect divisions, weighted divisions, and divisibility-based colouring.

A division of G splits V into A and B with G[A] perfect and, when G has any
vertices, omega(G[B]) < omega(G).  The weighted engine works on the support
U of the weight function: a vertex v of H = G[U] whose non-neighbourhood in
H induces a perfect graph yields the split S = M_H(v) + v, T = N_H(v) plus
all zero-weight vertices, and otherwise a homogeneous set X of H is
contracted onto its minimum vertex carrying the max clique weight of H[X];
divisions of the quotient and of H[X] recombine by substitution.  Every
division returned anywhere is re-checked against the oracles first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .decomposition import find_homogeneous_set
from .graph import Graph, bits, mask_of
from .limits import DEFAULT_CAPS, CapacityError, InvariantError
from .oracles import (
    clique_number,
    exact_coloring,
    is_perfect,
    is_perfect_induced,
    max_weight_clique,
)


@dataclass(frozen=True)
class Division:
    """A checked split (a, b) of some graph's vertex set, as bitmasks."""

    a: int
    b: int
    strategy: str
    a_is_perfect: bool
    omega_b: int
    omega: int
    pivot: int | None = None
    omega_w_b: int | None = None  # weighted certificates, when built under weights
    omega_w: int | None = None

    def to_json(self):
        out = {
            "a": sorted(bits(self.a)),
            "b": sorted(bits(self.b)),
            "strategy": self.strategy,
            "certificate": {
                "a_is_perfect": self.a_is_perfect,
                "omega_b": self.omega_b,
                "omega": self.omega,
            },
        }
        if self.pivot is not None:
            out["pivot"] = self.pivot
        if self.omega_w is not None:
            out["certificate"]["omega_w_b"] = self.omega_w_b
            out["certificate"]["omega_w"] = self.omega_w
        return out


def _checked_division(g, a, b, strategy, pivot=None) -> Division:
    """Assemble a Division, re-deriving its certificate from the oracles."""
    if a & b or (a | b) != g.vertex_mask:
        raise InvariantError(f"{strategy}: sides do not partition the vertex set")
    a_perfect = is_perfect_induced(g, a)
    sub_b, _ = g.induced(b)
    omega_b = clique_number(sub_b)
    omega = clique_number(g)
    if not a_perfect:
        raise InvariantError(f"{strategy}: side A is not perfect (a={sorted(bits(a))})")
    if g.n > 0 and omega_b >= omega:
        raise InvariantError(
            f"{strategy}: no clique drop (omega_b={omega_b}, omega={omega})"
        )
    return Division(a, b, strategy, a_perfect, omega_b, omega, pivot=pivot)


def perfect_division(
    g: Graph,
    exhaustive_cap: int = DEFAULT_CAPS.exhaustive_division,
) -> Division | None:
    """A division of g, None if exhaustion proves none exists.

    Strategies in order: the whole graph is perfect; some vertex whose
    non-neighbourhood induces a perfect graph (ascending index); the
    weighted engine under unit weights; exhaustive subset scan below the
    cap.  Raises CapacityError when all else fails above the cap.
    """
    if g.n == 0:
        return Division(0, 0, "perfect-whole", True, 0, 0)
    if is_perfect(g):
        return _checked_division(g, g.vertex_mask, 0, "perfect-whole")
    for v in range(g.n):
        m = g.non_neighborhood(v)
        if is_perfect_induced(g, m):
            return _checked_division(
                g, m | 1 << v, g.adj[v], "perfect-non-neighborhood", pivot=v
            )
    d = divide_weighted(g, (1,) * g.n)
    if d is not None:
        return _checked_division(g, d.a, d.b, d.strategy, pivot=d.pivot)
    if g.n > exhaustive_cap:
        raise CapacityError("perfect_division (exhaustive fallback)", g.n, exhaustive_cap)
    omega = clique_number(g)
    vertices = range(g.n)
    for size in range(g.n, -1, -1):
        for combo in combinations(vertices, size):
            a = mask_of(combo)
            b = g.vertex_mask & ~a
            sub_b, _ = g.induced(b)
            if clique_number(sub_b) < omega and is_perfect_induced(g, a):
                return _checked_division(g, a, b, "exhaustive")
    return None


def _omega_w(g, w, mask) -> int:
    sub, vmap = g.induced(mask)
    return max_weight_clique(sub, tuple(w[v] for v in vmap))[0]


def divide_weighted(g: Graph, w) -> Division | None:
    """A division for nonnegative integer weights w (not all zero):
    G[S] perfect and the max clique weight strictly drops on T."""
    w = tuple(int(x) for x in w)
    if len(w) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(w)}")
    if any(x < 0 for x in w):
        raise ValueError("weights must be nonnegative")
    support = mask_of(v for v in range(g.n) if w[v] > 0)
    if not support:
        raise ValueError("weights must not be identically zero")
    res = _divide_support(g, support, w)
    if res is None:
        return None
    s, t_inner, strategy, pivot = res
    t = t_inner | (g.vertex_mask & ~support)
    omega_w = _omega_w(g, w, g.vertex_mask)
    omega_w_t = _omega_w(g, w, t)
    if not is_perfect_induced(g, s):
        raise InvariantError(f"divide_weighted: side S not perfect (s={sorted(bits(s))})")
    if omega_w_t >= omega_w:
        raise InvariantError(
            f"divide_weighted: no weighted clique drop ({omega_w_t} >= {omega_w})"
        )
    sub_t, _ = g.induced(t)
    return Division(
        s,
        t,
        strategy,
        True,
        clique_number(sub_t),
        clique_number(g),
        pivot=pivot,
        omega_w_b=omega_w_t,
        omega_w=omega_w,
    )


def _divide_support(g, u_mask, w):
    """Divide H = G[u_mask] under all-positive weights; returns
    (s, t, strategy, pivot) partitioning u_mask, or None."""
    for v in bits(u_mask):
        m_h = u_mask & ~g.adj[v] & ~(1 << v)
        if is_perfect_induced(g, m_h):
            return m_h | 1 << v, u_mask & g.adj[v], "perfect-non-neighborhood", v
    h, hmap = g.induced(u_mask)
    x_local = find_homogeneous_set(h)
    if x_local is None:
        return None
    x = mask_of(hmap[i] for i in bits(x_local))
    return _divide_with_module(g, u_mask, w, x)


def _divide_with_module(g, u_mask, w, x):
    """Divide G[u_mask] through the homogeneous set x of G[u_mask]."""
    rep = x & -x
    rep_v = rep.bit_length() - 1
    quotient_mask = (u_mask & ~x) | rep
    w_quotient = list(w)
    w_quotient[rep_v] = _omega_w(g, w, x)
    res_q = _divide_support(g, quotient_mask, tuple(w_quotient))
    if res_q is None:
        return None
    s_q, _, _, _ = res_q
    res_x = _divide_support(g, x, w)
    if res_x is None:
        return None
    s_x, _, _, _ = res_x
    if s_q & rep:
        s = (s_q & ~rep) | s_x
    else:
        s = s_q
    t = u_mask & ~s
    # substitution must preserve both division properties; anything else
    # is a bug in the recombination, not a fact about the input
    if not is_perfect_induced(g, s):
        raise InvariantError(
            f"module recombination: S not perfect (s={sorted(bits(s))}, x={sorted(bits(x))})"
        )
    if _omega_w(g, w, t) >= _omega_w(g, w, u_mask):
        raise InvariantError(
            f"module recombination: no weighted drop (x={sorted(bits(x))})"
        )
    return s, t, "homogeneous-recursion", None


def is_perfectly_divisible_exact(
    g: Graph, cap: int = DEFAULT_CAPS.exact_divisibility
) -> bool:
    """Whether every induced subgraph admits a division; exhaustive."""
    n = g.n
    if n > cap:
        raise CapacityError("is_perfectly_divisible_exact", n, cap)
    if n == 0:
        return True
    adj = g.adj
    omega = [0] * (1 << n)
    for m in range(1, 1 << n):
        v = (m & -m).bit_length() - 1
        rest = m ^ 1 << v
        omega[m] = max(omega[rest], 1 + omega[rest & adj[v]])

    perfect_memo: dict[int, bool] = {}

    def perfect(mask):
        hit = perfect_memo.get(mask)
        if hit is None:
            hit = perfect_memo[mask] = is_perfect_induced(g, mask)
        return hit

    for h in range((1 << n) - 1, 0, -1):
        if perfect(h):
            continue
        om_h = omega[h]
        subsets = [h]
        s = (h - 1) & h
        while s:
            subsets.append(s)
            s = (s - 1) & h
        subsets.append(0)
        subsets.sort(key=lambda m: -m.bit_count())
        if not any(
            omega[h & ~a] < om_h and perfect(a) for a in subsets
        ):
            return False
    return True


# -- colouring through divisions ----------------------------------------


@dataclass(frozen=True)
class ColorLayer:
    a: int
    b: int
    strategy: str
    colors_used: tuple[int, ...]

    def to_json(self):
        return {
            "a": sorted(bits(self.a)),
            "b": sorted(bits(self.b)),
            "strategy": self.strategy,
            "colors_used": list(self.colors_used),
        }


@dataclass(frozen=True)
class ColoringCertificate:
    colors: tuple[int, ...]
    palette: int
    bound_value: int
    layers: tuple[ColorLayer, ...]
    fallback: bool

    def to_json(self):
        return {
            "colors": list(self.colors),
            "palette": self.palette,
            "bound": {"kind": "binomial", "text": "binom(omega+1,2)", "value": self.bound_value},
            "layers": [layer.to_json() for layer in self.layers],
            "fallback": self.fallback,
        }


def color_by_division(
    g: Graph,
    exhaustive_cap: int = DEFAULT_CAPS.exhaustive_division,
    coloring_cap: int = DEFAULT_CAPS.coloring,
) -> ColoringCertificate:
    """Colour by peeling divisions: each perfect side takes a fresh block of
    exactly its clique number of colours, and the residual side loses at
    least one from omega, so a fully divided run uses at most
    binom(omega+1, 2) colours.  Residuals that will not divide are coloured
    exactly and flagged."""
    colors = [-1] * g.n
    layers: list[ColorLayer] = []
    remaining = g.vertex_mask
    next_color = 0
    fallback = False
    while remaining:
        sub, vmap = g.induced(remaining)
        try:
            d = perfect_division(sub, exhaustive_cap)
        except CapacityError:
            d = None
        if d is None:
            residual_colors = exact_coloring(sub, coloring_cap)
            for i, c in enumerate(residual_colors):
                colors[vmap[i]] = next_color + c
            used = tuple(range(next_color, next_color + max(residual_colors) + 1))
            layers.append(ColorLayer(remaining, 0, "fallback-exact", used))
            next_color += max(residual_colors) + 1
            fallback = True
            break
        a_glob = mask_of(vmap[i] for i in bits(d.a))
        b_glob = mask_of(vmap[i] for i in bits(d.b))
        sub_a, amap = g.induced(a_glob)
        layer_colors = exact_coloring(sub_a, coloring_cap)
        k = max(layer_colors) + 1 if layer_colors else 0
        if k != clique_number(sub_a):
            raise InvariantError("perfect layer did not colour with omega colours")
        for i, c in enumerate(layer_colors):
            colors[amap[i]] = next_color + c
        layers.append(
            ColorLayer(a_glob, b_glob, d.strategy, tuple(range(next_color, next_color + k)))
        )
        next_color += k
        remaining = b_glob
    omega = clique_number(g)
    return ColoringCertificate(
        colors=tuple(colors),
        palette=next_color,
        bound_value=(omega + 1) * omega // 2,
        layers=tuple(layers),
        fallback=fallback,
    )


# -- line graphs ---------------------------------------------------------


def _dfs_tree_edges(g: Graph) -> set[tuple[int, int]]:
    seen = {0}
    tree: set[tuple[int, int]] = set()
    stack = [(0, iter(bits(g.adj[0])))]
    while stack:
        v, it = stack[-1]
        for u in it:
            if u not in seen:
                seen.add(u)
                tree.add((min(v, u), max(v, u)))
                stack.append((u, iter(bits(g.adj[u]))))
                break
        else:
            stack.pop()
    return tree


def line_graph_division(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...], Division]:
    """Divide the line graph of connected g: a depth-first spanning tree's
    edges induce the perfect side.

    A depth-first tree is the safe choice: every star loses a tree edge,
    and when the maximum degree is 3 a triangle avoiding the tree would
    force a degree-4 vertex, so the clique number always drops on the rest.
    """
    if g.n < 2:
        raise ValueError("line_graph_division needs at least one edge")
    if not g.is_connected():
        raise ValueError("line_graph_division needs a connected graph")
    lg, edge_list = g.line_graph()
    if g.edge_count == g.n - 1:
        return lg, edge_list, _checked_division(lg, lg.vertex_mask, 0, "spanning-tree")
    tree = _dfs_tree_edges(g)
    a = mask_of(i for i, e in enumerate(edge_list) if e in tree)
    b = lg.vertex_mask & ~a
    return lg, edge_list, _checked_division(lg, a, b, "spanning-tree")
