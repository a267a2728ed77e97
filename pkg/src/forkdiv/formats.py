"""Graph serialisation: graph6, DIMACS edge lists, and plain edge lists.

graph6 here is the header-less single-byte-size variant (n <= 62), which
covers everything the enumeration caps allow.  Parsers validate hard and
report byte offsets; emitters are exact inverses on the supported range.
"""

from __future__ import annotations

from .graph import Graph


class FormatError(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (offset {offset})"
        super().__init__(message)
        self.offset = offset


def _pair_bits(g: Graph):
    # column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, g.n):
        for i in range(j):
            yield (g.adj[i] >> j) & 1


def emit_graph6(g: Graph) -> str:
    if g.n > 62:
        raise FormatError(f"graph6 single-byte size tops out at 62 vertices, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    count = 0
    for b in _pair_bits(g):
        acc = (acc << 1) | b
        count += 1
        if count == 6:
            out.append(chr(acc + 63))
            acc = count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    if not line:
        raise FormatError("empty graph6 string", 0)
    first = ord(line[0])
    if first == 126:
        raise FormatError("multi-byte graph6 sizes are not supported", 0)
    if not 63 <= first <= 125:
        raise FormatError(f"size byte {line[0]!r} outside graph6 range", 0)
    n = first - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = line[1:]
    if len(body) != need:
        raise FormatError(
            f"graph6 body for n={n} needs {need} bytes, got {len(body)}", 1
        )
    bits: list[int] = []
    for k, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise FormatError(f"byte {ch!r} outside graph6 range", k + 1)
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    pairs = n * (n - 1) // 2
    if any(bits[pairs:]):
        raise FormatError("nonzero padding bits", len(line) - 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def parse_graph6_lines(text: str) -> list[Graph]:
    out = []
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            out.append(parse_graph6(line))
        except FormatError as exc:
            raise FormatError(f"line {ln}: {exc}") from exc
    return out


def parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise FormatError(f"line {ln}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise FormatError(f"line {ln}: expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"line {ln}: non-integer sizes") from None
            if n < 0 or declared_m < 0:
                raise FormatError(f"line {ln}: negative sizes")
        elif parts[0] == "e":
            if n is None:
                raise FormatError(f"line {ln}: edge before problem line")
            if len(parts) != 3:
                raise FormatError(f"line {ln}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"line {ln}: non-integer endpoints") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {ln}: endpoint outside 1..{n}")
            if u == v:
                raise FormatError(f"line {ln}: self-loop")
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"line {ln}: unknown record {parts[0]!r}")
    if n is None:
        raise FormatError("missing problem line")
    return Graph.from_edges(n, edges)


def emit_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str, n: int | None = None) -> Graph:
    edges: list[tuple[int, int]] = []
    top = -1
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {ln}: expected two endpoints")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {ln}: non-integer endpoints") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {ln}: negative vertex")
        if u == v:
            raise FormatError(f"line {ln}: self-loop")
        top = max(top, u, v)
        edges.append((u, v))
    size = n if n is not None else top + 1
    if top >= size:
        raise FormatError(f"vertex {top} outside declared size {size}")
    return Graph.from_edges(size, edges)


def emit_edgelist(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())
