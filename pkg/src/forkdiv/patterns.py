"""Named small patterns, induced-subgraph search, and class bounds.

The catalog pins down every forbidden pattern the classifier and harness
talk about; names are the stable public identifiers used on the CLI.  The
five-vertex patterns are built from their defining claw or path plus the
extra vertex, so each construction reads like its definition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits
from .oracles import clique_number


def _fork():
    # claw centred at 2 with leaves 1, 3, 4; pendant 0 attached to leaf 1
    return Graph.from_edges(5, [(2, 1), (2, 3), (2, 4), (0, 1)])


def _dart():
    # claw centred at 0 with leaves 1, 2, 3; vertex 4 sees 0, 2, 3 but not 1
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (4, 0), (4, 2), (4, 3)])


def _banner():
    # claw centred at 0 with leaves 1, 2, 3; vertex 4 sees 1, 2 but not 0, 3
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (4, 1), (4, 2)])


def _bull():
    # path 0-1-2-3; vertex 4 sees the middle 1, 2 but not the ends
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)])


def _paw():
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def _diamond():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def _build_catalog() -> dict[str, Graph]:
    k1 = Graph.complete(1)
    paw = _paw()
    diamond = _diamond()
    fork = _fork()
    cat = {
        "K1": k1,
        "K2": Graph.complete(2),
        "K3": Graph.complete(3),
        "K4": Graph.complete(4),
        "K5": Graph.complete(5),
        "P3": Graph.path(3),
        "P4": Graph.path(4),
        "P5": Graph.path(5),
        "P6": Graph.path(6),
        "C4": Graph.cycle(4),
        "C5": Graph.cycle(5),
        "C6": Graph.cycle(6),
        "C7": Graph.cycle(7),
        "claw": Graph.complete_bipartite(1, 3),
        "fork": fork,
        "antifork": fork.complement(),
        "dart": _dart(),
        "banner": _banner(),
        "bull": _bull(),
        "paw": paw,
        "diamond": diamond,
        "co-dart": paw.disjoint_union(k1),
        "co-cricket": diamond.disjoint_union(k1),
        "K2,3": Graph.complete_bipartite(2, 3),
        "2K2": Graph.complete(2).disjoint_union(Graph.complete(2)),
        "3K1": Graph.empty(3),
        "4K1": Graph.empty(4),
        "P3+K1": Graph.path(3).disjoint_union(k1),
        "K2+2K1": Graph.complete(2).disjoint_union(Graph.empty(2)),
        "K3+K1": Graph.complete(3).disjoint_union(k1),
        "co-P5": Graph.path(5).complement(),
        "K5-e": Graph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (3, 4)]),
        "co-(P3+2K1)": Graph.path(3).disjoint_union(Graph.empty(2)).complement(),
    }
    return cat


CATALOG: dict[str, Graph] = _build_catalog()

_ALIASES = {
    "K1,3": "claw",
    "paw+K1": "co-dart",
    "diamond+K1": "co-cricket",
}


def pattern(name: str) -> Graph:
    key = _ALIASES.get(name, name)
    try:
        return CATALOG[key]
    except KeyError:
        raise ValueError(f"unknown pattern {name!r}") from None


def pattern_names() -> list[str]:
    return sorted(CATALOG)


@dataclass(frozen=True)
class PatternWitness:
    """An induced embedding: mapping[i] is the host vertex for pattern vertex i."""

    pattern_name: str | None
    mapping: tuple[int, ...]

    def validate(self, host: Graph, pat: Graph) -> bool:
        m = self.mapping
        if len(m) != pat.n or len(set(m)) != pat.n:
            return False
        if any(not 0 <= v < host.n for v in m):
            return False
        for u in range(pat.n):
            for v in range(u + 1, pat.n):
                if pat.has_edge(u, v) != host.has_edge(m[u], m[v]):
                    return False
        return True


def iter_induced(host: Graph, pat: Graph):
    """Yield every induced embedding of pat in host as a mapping tuple.

    Pattern vertices are assigned in descending-degree order; host
    candidates ascend, so the first yield is the lexicographically least
    witness under that order.
    """
    p = pat.n
    if p > host.n:
        return
    if p == 0:
        yield ()
        return
    order = sorted(range(p), key=lambda v: (-pat.degree(v), v))
    host_deg = [host.degree(v) for v in range(host.n)]
    pat_deg = [pat.degree(v) for v in range(p)]
    assign = [-1] * p

    def extend(i, used):
        u = order[i]
        allowed = host.vertex_mask & ~used
        for j in range(i):
            w = order[j]
            hv = assign[w]
            if pat.has_edge(u, w):
                allowed &= host.adj[hv]
            else:
                allowed &= ~host.adj[hv]
        for hv in bits(allowed):
            if host_deg[hv] < pat_deg[u]:
                continue
            if host.n - 1 - host_deg[hv] < p - 1 - pat_deg[u]:
                continue
            assign[u] = hv
            if i + 1 == p:
                yield tuple(assign)
            else:
                yield from extend(i + 1, used | 1 << hv)
        assign[u] = -1

    yield from extend(0, 0)


def find_induced(host: Graph, pat: Graph, name: str | None = None) -> PatternWitness | None:
    for mapping in iter_induced(host, pat):
        return PatternWitness(name, mapping)
    return None


def has_induced(host: Graph, name: str) -> bool:
    return find_induced(host, pattern(name), name) is not None


def is_free(host: Graph, names) -> tuple[bool, PatternWitness | None]:
    """Whether host avoids all named patterns; first witness otherwise."""
    for name in names:
        w = find_induced(host, pattern(name), name)
        if w is not None:
            return False, w
    return True, None


def claw_center(g: Graph) -> tuple[int, tuple[int, int, int]] | None:
    """Smallest vertex with three pairwise nonadjacent neighbours, plus the
    lexicographically least such triple."""
    import itertools

    for v in range(g.n):
        nbrs = list(bits(g.adj[v]))
        if len(nbrs) < 3:
            continue
        for a, b, c in itertools.combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return v, (a, b, c)
    return None


# -- chi bounds per forbidden companion pattern -------------------------


@dataclass(frozen=True)
class BoundRecord:
    """A chi bound as a function of omega: one of the four shapes below."""

    kind: str  # "constant" | "linear" | "binomial" | "square"
    coeff: int = 0
    offset: int = 0

    def evaluate(self, omega: int) -> int:
        if self.kind == "constant":
            return self.offset
        if self.kind == "linear":
            return self.coeff * omega + self.offset
        if self.kind == "binomial":
            return (omega + 1) * omega // 2
        if self.kind == "square":
            return omega * omega
        raise ValueError(f"unknown bound kind {self.kind!r}")

    @property
    def text(self) -> str:
        if self.kind == "constant":
            return str(self.offset)
        if self.kind == "linear":
            if self.offset == 0:
                return f"{self.coeff}*omega" if self.coeff != 1 else "omega"
            lead = f"{self.coeff}*omega" if self.coeff != 1 else "omega"
            return f"{lead}+{self.offset}"
        if self.kind == "binomial":
            return "binom(omega+1,2)"
        return "omega^2"

    def to_json(self):
        return {"kind": self.kind, "text": self.text}


_BINOMIAL = BoundRecord("binomial")
_SQUARE = BoundRecord("square")

#: chi bound for fork-free graphs that also exclude the key pattern
CLASS_BOUNDS: dict[str, BoundRecord] = {
    "K3": BoundRecord("constant", offset=3),
    "2K2": _BINOMIAL,
    "dart": _SQUARE,
    "banner": _SQUARE,
    "co-cricket": _SQUARE,
    "claw": _SQUARE,
    "P6": _BINOMIAL,
    "co-dart": _BINOMIAL,
    "bull": _BINOMIAL,
    "K5-e": BoundRecord("linear", coeff=1, offset=1),
    "co-(P3+2K1)": BoundRecord("linear", coeff=1, offset=1),
    "antifork": BoundRecord("linear", coeff=2, offset=0),
}


@dataclass(frozen=True)
class ClassMembership:
    forbidden: str
    free: bool
    bound: BoundRecord
    value: int | None  # bound evaluated at omega(g) when the class applies

    def to_json(self):
        return {
            "forbidden": self.forbidden,
            "free": self.free,
            "bound": self.bound.to_json(),
            "value": self.value,
        }


@dataclass(frozen=True)
class ClassReport:
    omega: int
    fork_free: bool
    memberships: tuple[ClassMembership, ...]
    tightest: tuple[str, int] | None

    def to_json(self):
        return {
            "omega": self.omega,
            "fork_free": self.fork_free,
            "classes": [m.to_json() for m in self.memberships],
            "tightest": (
                {"forbidden": self.tightest[0], "value": self.tightest[1]}
                if self.tightest
                else None
            ),
        }


def classify(g: Graph) -> ClassReport:
    """Membership in each fork-free class of the bounds table, with the
    applicable chi bounds evaluated at omega(g)."""
    omega = clique_number(g)
    fork_free = not has_induced(g, "fork")
    rows = []
    tightest: tuple[str, int] | None = None
    for forbidden, bound in CLASS_BOUNDS.items():
        free = fork_free and not has_induced(g, forbidden)
        value = bound.evaluate(omega) if free else None
        rows.append(ClassMembership(forbidden, free, bound, value))
        if value is not None and (tightest is None or value < tightest[1]):
            tightest = (forbidden, value)
    return ClassReport(omega, fork_free, tuple(rows), tightest)
