"""Parametric graph generators.

Covers the named families the solvers and witnesses are exercised on:
paths, cycles, stars, double stars, complete and complete bipartite
graphs, cocktail-party graphs, joins with a clique, the two sharpness
constructions ``gd`` and ``g_delta_Delta``, a handful of hard-coded cubic
graphs, and exhaustive free-tree enumeration for small orders.

Family specs serialize as ``name(p1=...,p2=...)`` strings so the CLI can
name any generator inline.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator

from .graph import Graph, is_isomorphic_small, join

FREE_TREE_MIN = 2
FREE_TREE_MAX = 10
_PRUFER_MAX = 8  # above this, switch to the level-sequence generator

# Known counts of free trees per order, used as an internal sanity check.
_FREE_TREE_COUNTS = {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}

NAMED_CUBIC = ("k4", "k33", "q3", "prism", "petersen")

FAMILIES = (
    "path",
    "cycle",
    "star",
    "double_star",
    "complete",
    "complete_bipartite",
    "cocktail_party",
    "join_equality",
    "gd",
    "g_delta_Delta",
    "named_cubic",
    "all_free_trees",
)


@dataclass(frozen=True)
class FamilySpec:
    """A generator target: family name plus its integer/name parameters."""

    family: str
    params: dict[str, int | str] = field(default_factory=dict)

    def serialize(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({inner})"


_SPEC_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*\(([^()]*)\)\s*$")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse a ``name(p1=...,p2=...)`` string into a FamilySpec."""
    m = _SPEC_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse family spec {text!r}")
    family = m.group(1)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    params: dict[str, int | str] = {}
    body = m.group(2).strip()
    if body:
        for item in body.split(","):
            if "=" not in item:
                raise ValueError(f"malformed parameter {item!r} in {text!r}")
            key, value = (part.strip() for part in item.split("=", 1))
            params[key] = int(value) if re.fullmatch(r"-?\d+", value) else value
    return FamilySpec(family, params)


# -- elementary families -----------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaf_count: int) -> Graph:
    """K_{1,leaf_count}: center 0 plus that many leaves."""
    if leaf_count < 1:
        raise ValueError("star needs at least one leaf")
    return Graph(leaf_count + 1, [(0, i) for i in range(1, leaf_count + 1)])


def double_star(a: int, b: int) -> Graph:
    """S_{a,b}: adjacent centers 0 and 1 with a and b leaves respectively."""
    if a < 1 or b < 1:
        raise ValueError("double star needs a, b >= 1")
    edges = [(0, 1)]
    edges.extend((0, 2 + i) for i in range(a))
    edges.extend((1, 2 + a + i) for i in range(b))
    return Graph(a + b + 2, edges)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with side X = 0..s-1 and side Y = s..s+t-1."""
    if s < 1 or t < 1:
        raise ValueError("complete bipartite needs s, t >= 1")
    return Graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def cocktail_party(r: int) -> Graph:
    """K_{2r} minus the perfect matching {(i, i+r)}."""
    if r < 1:
        raise ValueError("cocktail party needs r >= 1")
    edges = [
        (u, v) for u, v in combinations(range(2 * r), 2) if v - u != r
    ]
    return Graph(2 * r, edges)


def graph_from_bitcode(order: int, bitcode: int) -> Graph:
    """Decode an upper-triangle bitmask (combinations order) into a graph."""
    pairs = list(combinations(range(order), 2))
    if bitcode < 0 or bitcode >= 1 << len(pairs):
        raise ValueError(f"bitcode out of range for order {order}")
    edges = [pair for i, pair in enumerate(pairs) if (bitcode >> i) & 1]
    return Graph(order, edges)


def join_equality(k: int, m: int, h_bitcode: int = 0) -> Graph:
    """H joined with K_m where H is an arbitrary graph of order k-1."""
    if k < 2:
        raise ValueError("join_equality needs k >= 2")
    if m < 1:
        raise ValueError("join_equality needs clique order m >= 1")
    h = graph_from_bitcode(k - 1, h_bitcode)
    return join(h, complete(m))


def named_cubic(name: str) -> Graph:
    key = name.lower()
    if key == "k4":
        return complete(4)
    if key == "k33":
        return complete_bipartite(3, 3)
    if key == "q3":
        edges = [
            (u, v)
            for u, v in combinations(range(8), 2)
            if bin(u ^ v).count("1") == 1
        ]
        return Graph(8, edges)
    if key == "prism":
        return Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    if key == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        return Graph(10, outer + inner + spokes)
    raise ValueError(f"unknown cubic graph {name!r}; expected one of {NAMED_CUBIC}")


# -- the gd construction -----------------------------------------------------
#
# gd(d) glues 3d-1 four-cycles (three banks a, b, c) onto two stars with
# centers x and y.  It has minimum degree 2, maximum degree d, and attains
# the degree-based ceiling for 2-coalition partitions.


def gd_order(d: int) -> int:
    return 4 * (3 * d - 1) + 2 * (d + 1)


def gd_vertex_map(d: int) -> dict[str, int]:
    """Deterministic name -> label table for gd(d).

    Keys: "a1_3" is vertex 1 of the a-bank four-cycle number 3 (banks a and
    c have copies 1..d, bank b has copies 2..d), "x"/"y" are the star
    centers, "x_2"/"y_2" are star leaves.
    """
    if d < 4:
        raise ValueError("gd needs d >= 4")
    table: dict[str, int] = {}
    for i in range(1, d + 1):
        base = 4 * (i - 1)
        for j in range(1, 5):
            table[f"a{j}_{i}"] = base + (j - 1)
    for i in range(2, d + 1):
        base = 4 * d + 4 * (i - 2)
        for j in range(1, 5):
            table[f"b{j}_{i}"] = base + (j - 1)
    for i in range(1, d + 1):
        base = 8 * d - 4 + 4 * (i - 1)
        for j in range(1, 5):
            table[f"c{j}_{i}"] = base + (j - 1)
    table["x"] = 12 * d - 4
    for i in range(1, d + 1):
        table[f"x_{i}"] = 12 * d - 4 + i
    table["y"] = 13 * d - 3
    for i in range(1, d + 1):
        table[f"y_{i}"] = 13 * d - 3 + i
    return table


def _four_cycle_edges(v1: int, v2: int, v3: int, v4: int) -> list[tuple[int, int]]:
    # bipartition {v1,v2} / {v3,v4}
    return [(v1, v3), (v1, v4), (v2, v3), (v2, v4)]


def gd(d: int) -> Graph:
    if d < 4:
        raise ValueError("gd needs d >= 4")
    lab = gd_vertex_map(d)
    edges: list[tuple[int, int]] = []
    for bank, copies in (("a", range(1, d + 1)), ("b", range(2, d + 1)), ("c", range(1, d + 1))):
        for i in copies:
            edges.extend(
                _four_cycle_edges(*(lab[f"{bank}{j}_{i}"] for j in range(1, 5)))
            )
    for i in range(1, d + 1):
        edges.append((lab["x"], lab[f"x_{i}"]))
        edges.append((lab["y"], lab[f"y_{i}"]))
        edges.append((lab[f"x_{i}"], lab[f"a4_{i}"]))
        edges.append((lab[f"y_{i}"], lab[f"c1_{i}"]))
    for i in range(2, d + 1):
        edges.append((lab[f"x_{i}"], lab[f"b1_{i}"]))
        edges.append((lab[f"x_{i}"], lab[f"b2_{i}"]))
        edges.append((lab[f"y_{i}"], lab[f"b3_{i}"]))
        edges.append((lab[f"y_{i}"], lab[f"b4_{i}"]))
    g = Graph(gd_order(d), edges)
    assert g.min_degree() == 2 and g.max_degree() == d
    return g


# -- the g_delta_Delta construction -------------------------------------------
#
# For even delta >= 4 and Delta >= 2*delta: r = delta/2 + 1 stars K_{1,Delta}
# whose every leaf carries two cocktail-party graphs H(r); the leaf is joined
# to one fixed r-clique of each copy.  r-1 extra edges between untouched
# clique vertices make the graph connected without disturbing the degree
# profile (min degree delta, max degree Delta).


@dataclass(frozen=True)
class GDeltaLayout:
    """Label table for g_delta_Delta: centers, leaves, and copy vertices."""

    delta: int
    Delta: int
    r: int
    centers: tuple[int, ...]  # centers[i] = star i (0-based)
    leaves: tuple[tuple[int, ...], ...]  # leaves[i][l] = leaf l of star i
    # copy_vertex(i, l, c, p): vertex p of copy c in {0,1} attached to leaf l
    copy_base: int
    order: int

    def leaf(self, i: int, l: int) -> int:
        return self.leaves[i][l]

    def copy_vertex(self, i: int, l: int, c: int, p: int) -> int:
        # p in 0..2r-1; p < r lies in the clique the leaf is joined to (Q'),
        # p >= r in the untouched clique (Q''); (p, p+r) is the removed matching
        leaf_index = i * self.Delta + l
        return self.copy_base + leaf_index * 4 * self.r + c * 2 * self.r + p


def g_delta_delta_layout(delta: int, Delta: int) -> GDeltaLayout:
    if delta < 4 or delta % 2:
        raise ValueError("g_delta_Delta needs even delta >= 4")
    if Delta < 2 * delta:
        raise ValueError("g_delta_Delta needs Delta >= 2*delta")
    r = delta // 2 + 1
    centers = tuple(range(r))
    leaves = tuple(
        tuple(r + i * Delta + l for l in range(Delta)) for i in range(r)
    )
    copy_base = r + r * Delta
    order = copy_base + r * Delta * 4 * r
    return GDeltaLayout(delta, Delta, r, centers, leaves, copy_base, order)


def g_delta_Delta(delta: int, Delta: int) -> Graph:
    lay = g_delta_delta_layout(delta, Delta)
    r = lay.r
    edges: list[tuple[int, int]] = []
    for i in range(r):
        for l in range(lay.Delta):
            q = lay.leaf(i, l)
            edges.append((lay.centers[i], q))
            for c in (0, 1):
                # cocktail party H(r) inside the copy
                for p1, p2 in combinations(range(2 * r), 2):
                    if p2 - p1 != r:
                        edges.append(
                            (lay.copy_vertex(i, l, c, p1), lay.copy_vertex(i, l, c, p2))
                        )
                # the leaf is joined to the first clique of the copy
                for p in range(r):
                    edges.append((q, lay.copy_vertex(i, l, c, p)))
    # connect star components in a fixed chain through untouched clique
    # vertices (one extra edge per endpoint at most)
    for i in range(r - 1):
        a = lay.copy_vertex(i, lay.Delta - 1, 1, r)
        b = lay.copy_vertex(i + 1, 0, 0, r + 1)
        edges.append((a, b))
    g = Graph(lay.order, edges)
    if g.min_degree() != delta or g.max_degree() != Delta:
        raise ValueError(
            f"g_delta_Delta wiring violated the degree contract: "
            f"got ({g.min_degree()}, {g.max_degree()}), want ({delta}, {Delta})"
        )
    return g


# -- free trees ---------------------------------------------------------------


def _prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    edges = []
    for s in seq:
        for v in range(n):
            if degree[v] == 1:
                edges.append((v, s))
                degree[v] -= 1
                degree[s] -= 1
                break
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return edges


def _rooted_key(g: Graph, root: int) -> str:
    def rec(v: int, parent: int) -> str:
        subs = sorted(rec(u, v) for u in g.neighbors(v) if u != parent)
        return "(" + "".join(subs) + ")"

    return rec(root, -1)


def tree_canonical_key(g: Graph) -> str:
    """Canonical string of a free tree: rooted encoding from the center(s)."""
    if g.n == 1:
        return "()"
    degree = list(g.degrees())
    active = set(range(g.n))
    while len(active) > 2:
        shed = [v for v in active if degree[v] == 1]
        for v in shed:
            active.discard(v)
            for u in g.neighbors(v):
                degree[u] -= 1
    return min(_rooted_key(g, c) for c in active)


def _free_trees_prufer(n: int) -> list[Graph]:
    if n == 2:
        return [path(2)]
    seen: dict[str, Graph] = {}
    for seq in product(range(n), repeat=n - 2):
        g = Graph(n, _prufer_decode(seq, n))
        key = tree_canonical_key(g)
        if key not in seen:
            seen[key] = g
    return [seen[key] for key in sorted(seen)]


# Level-sequence generation of free trees (depth sequences in preorder,
# children ordered by decreasing subtree sequence).  The successor steps
# through canonical rooted sequences in decreasing lexicographic order; a
# centroid-split test keeps exactly one representative per free tree.


def _rooted_successor(seq: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    nxt = list(seq)
    for i in range(p, len(nxt)):
        nxt[i] = nxt[i - p + q]
    return nxt


def _split_principal(seq: list[int]) -> tuple[list[int], list[int]]:
    # first principal subtree (depths shifted to root at 0) and the remainder
    second_one = None
    ones = 0
    for i, depth in enumerate(seq):
        if depth == 1:
            ones += 1
            if ones == 2:
                second_one = i
                break
    m = second_one if second_one is not None else len(seq)
    left = [seq[i] - 1 for i in range(1, m)]
    rest = [0] + seq[m:]
    return left, rest


def _free_tree_step(seq: list[int]) -> list[int]:
    left, rest = _split_principal(seq)
    left_height = max(left)
    rest_height = max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return seq
    p = len(left)
    nxt = _rooted_successor(seq, p)
    if seq[p] > 2:
        new_left, _ = _split_principal(nxt)
        suffix = list(range(1, max(new_left) + 2))
        nxt[-len(suffix) :] = suffix
    return nxt


def _level_sequence_to_graph(seq: list[int]) -> Graph:
    parent_at_depth = {0: 0}
    edges = []
    for v in range(1, len(seq)):
        depth = seq[v]
        edges.append((parent_at_depth[depth - 1], v))
        parent_at_depth[depth] = v
    return Graph(len(seq), edges)


def _free_trees_level_sequence(n: int) -> Iterator[Graph]:
    if n == 1:
        yield Graph(1)
        return
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _free_tree_step(seq)
        yield _level_sequence_to_graph(seq)
        seq = _rooted_successor(seq)


_FREE_TREE_CACHE: dict[int, list[Graph]] = {}


def free_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees of order n (2..10)."""
    if not FREE_TREE_MIN <= n <= FREE_TREE_MAX:
        raise ValueError(f"free_trees supports {FREE_TREE_MIN} <= n <= {FREE_TREE_MAX}")
    if n not in _FREE_TREE_CACHE:
        if n <= _PRUFER_MAX:
            trees = _free_trees_prufer(n)
        else:
            trees = list(_free_trees_level_sequence(n))
        if len(trees) != _FREE_TREE_COUNTS[n]:
            raise AssertionError(
                f"free tree enumeration for n={n} produced {len(trees)} classes, "
                f"expected {_FREE_TREE_COUNTS[n]}"
            )
        _FREE_TREE_CACHE[n] = trees
    yield from _FREE_TREE_CACHE[n]


# -- dispatch ------------------------------------------------------------------


def _require(params: dict[str, int | str], *names: str) -> list:
    missing = [name for name in names if name not in params]
    if missing:
        raise ValueError(f"missing parameters {missing}")
    return [params[name] for name in names]


def generate(spec: FamilySpec) -> Graph:
    """Build the exact graph a FamilySpec names."""
    fam, p = spec.family, spec.params
    if fam == "path":
        return path(*_require(p, "n"))
    if fam == "cycle":
        return cycle(*_require(p, "n"))
    if fam == "star":
        return star(*_require(p, "leaves"))
    if fam == "double_star":
        return double_star(*_require(p, "a", "b"))
    if fam == "complete":
        return complete(*_require(p, "n"))
    if fam == "complete_bipartite":
        return complete_bipartite(*_require(p, "s", "t"))
    if fam == "cocktail_party":
        return cocktail_party(*_require(p, "r"))
    if fam == "join_equality":
        k, m = _require(p, "k", "m")
        return join_equality(k, m, p.get("h", 0))
    if fam == "gd":
        return gd(*_require(p, "d"))
    if fam == "g_delta_Delta":
        return g_delta_Delta(*_require(p, "delta", "Delta"))
    if fam == "named_cubic":
        return named_cubic(str(*_require(p, "name")))
    if fam == "all_free_trees":
        raise ValueError(
            "all_free_trees is a stream; use free_trees(n) or the CLI generate command"
        )
    raise ValueError(f"unknown family {fam!r}")
