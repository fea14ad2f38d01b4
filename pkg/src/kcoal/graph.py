"""Immutable simple graphs on integer vertices.

Vertices are dense labels 0..n-1.  Adjacency is stored twice: as sorted
neighbor tuples (stable iteration order) and as frozensets (constant-time
membership).  Graphs are read-only values; every function in this package
treats them as such, so they can be shared freely across workers.

Also hosts the two text codecs (graph6 and a plain "n m / u v" edge list)
and the small structural helpers the rest of the package needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

ISO_MAX_VERTICES = 12
GRAPH6_HEADER = ">>graph6<<"
_G6_MAX_N = 258047  # largest order the 4-byte size prefix can carry


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input."""


class Graph:
    """Finite simple undirected graph with vertices 0..n-1."""

    __slots__ = ("n", "_nbrs", "_nbr_sets", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        edge_set = set()
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            edge_set.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(edge_set):
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self._nbrs = tuple(tuple(sorted(a)) for a in adj)
        self._nbr_sets = tuple(frozenset(a) for a in adj)
        self._m = len(edge_set)

    # -- basic accessors ---------------------------------------------------

    @property
    def num_edges(self) -> int:
        return self._m

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def closed_neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._nbrs)

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("minimum degree undefined for the empty graph")
        return min(self.degrees())

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("maximum degree undefined for the empty graph")
        return max(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks; bit v of mask u is set iff u ~ v."""
        masks = [0] * self.n
        for u in range(self.n):
            for v in self._nbrs[u]:
                masks[u] |= 1 << v
        return tuple(masks)

    def is_regular(self, d: int) -> bool:
        return self.n > 0 and all(len(a) == d for a in self._nbrs)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._nbrs == other._nbrs

    def __hash__(self) -> int:
        return hash((self.n, self._nbrs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring witness: disjoint sides covering V, every edge crossing."""

    side_x: frozenset[int]
    side_y: frozenset[int]


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from explicit edges; duplicates collapse, loops reject."""
    return Graph(n, edges)


# -- graph6 codec ----------------------------------------------------------


def _g6_size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= _G6_MAX_N:
        return "~" + "".join(chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0))
    raise GraphFormatError(f"graph6 supports at most {_G6_MAX_N} vertices, got {n}")


def emit_graph6(g: Graph, header: bool = False) -> str:
    """Encode a graph as one line of graph6 (no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        row = g.neighbor_set(j)
        for i in range(j):
            bits.append(1 if i in row else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    prefix = GRAPH6_HEADER if header else ""
    return prefix + _g6_size_prefix(g.n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode one line of graph6 (optional ``>>graph6<<`` header)."""
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    if not data:
        raise GraphFormatError("empty graph6 string")
    codes = []
    for ch in data:
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise GraphFormatError(f"invalid graph6 character {ch!r}")
        codes.append(value)
    if codes[0] == 63:
        if len(codes) >= 2 and codes[1] == 63:
            raise GraphFormatError("graph6 orders above 258047 are not supported")
        if len(codes) < 4:
            raise GraphFormatError("truncated graph6 size prefix")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        codes = codes[4:]
    else:
        n = codes[0]
        codes = codes[1:]
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(codes) != nchars:
        raise GraphFormatError(
            f"graph6 body for n={n} needs {nchars} characters, got {len(codes)}"
        )
    bits = []
    for value in codes:
        for s in range(5, -1, -1):
            bits.append((value >> s) & 1)
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits in graph6 data")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


# -- edge-list text codec ----------------------------------------------------


def parse_edgelist_text(text: str) -> Graph:
    """Parse the plain format: first line ``n m``, then m lines ``u v``."""
    lines = [line for line in (raw.strip() for raw in text.splitlines()) if line]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v' edge line, got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphFormatError(f"non-integer edge line {line!r}") from exc
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def emit_edgelist_text(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- structural helpers ------------------------------------------------------


def is_bipartite(g: Graph) -> Bipartition | None:
    """Two-color by breadth-first layering; None when an odd cycle exists.

    Deterministic: each component is rooted at its least vertex, which is
    placed on side X.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            next_queue = []
            for u in queue:
                for v in g.neighbors(u):
                    if color[v] == -1:
                        color[v] = 1 - color[u]
                        next_queue.append(v)
                    elif color[v] == color[u]:
                        return None
            queue = next_queue
    side_x = frozenset(v for v in range(g.n) if color[v] == 0)
    side_y = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(side_x, side_y)


def leaves(g: Graph) -> frozenset[int]:
    """All vertices of degree exactly one."""
    return frozenset(v for v in range(g.n) if g.degree(v) == 1)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between the two parts.

    Vertices of g keep their labels; vertices of h are shifted by g.n.
    """
    edges = list(g.edges())
    edges.extend((u + g.n, v + g.n) for u, v in h.edges())
    edges.extend((u, v + g.n) for u in range(g.n) for v in range(h.n))
    return Graph(g.n + h.n, edges)


def universal_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == g.n - 1)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.neighbors(u):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and is_connected(g)


# -- small-graph isomorphism -------------------------------------------------


def _refine_colors(g: Graph, h: Graph) -> tuple[list[int], list[int]]:
    """Joint iterated-degree refinement so color names agree across graphs."""
    cg = list(g.degrees())
    ch = list(h.degrees())
    for _ in range(max(g.n, 1)):
        sig_g = [
            (cg[v], tuple(sorted(cg[u] for u in g.neighbors(v)))) for v in range(g.n)
        ]
        sig_h = [
            (ch[v], tuple(sorted(ch[u] for u in h.neighbors(v)))) for v in range(h.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(sig_g) | set(sig_h)))}
        ng = [palette[s] for s in sig_g]
        nh = [palette[s] for s in sig_h]
        if ng == cg and nh == ch:
            break
        cg, ch = ng, nh
    return cg, ch


def is_isomorphic_small(g: Graph, h: Graph) -> bool:
    """Exact isomorphism by degree-refined backtracking; capped at 12 vertices."""
    if g.n > ISO_MAX_VERTICES or h.n > ISO_MAX_VERTICES:
        raise ValueError(f"isomorphism test capped at {ISO_MAX_VERTICES} vertices")
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    cg, ch = _refine_colors(g, h)
    if sorted(cg) != sorted(ch):
        return False

    counts: dict[int, int] = {}
    for c in cg:
        counts[c] = counts.get(c, 0) + 1
    order = sorted(range(g.n), key=lambda v: (counts[cg[v]], v))
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        u = order[i]
        for w in range(h.n):
            if used[w] or ch[w] != cg[u]:
                continue
            ok = True
            for prev in order[:i]:
                if g.has_edge(u, prev) != h.has_edge(w, mapping[prev]):
                    ok = False
                    break
            if ok:
                mapping[u] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                mapping[u] = -1
        return False

    return extend(0)
