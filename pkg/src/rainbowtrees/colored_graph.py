"""Edge-colored simple graphs and exact rainbow-spanning-tree machinery.

This module owns the shared graph model (`EdgeColoredGraph`), the brute-force
oracles (spanning-tree enumeration, rainbow filtering, rainbow-cycle search),
JL verification via monochromatic-cut decomposition, the convexity bounds, the
two-tree-partition characterization of the lower bound, exhaustive JL-coloring
enumeration for small graphs, and the random-coloring experiment.

A JL-coloring of a connected n-vertex graph is a surjective edge coloring with
exactly n-1 colors and no rainbow cycle; for such colorings the number of
rainbow spanning trees is the product of the color-class sizes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np


class EcgParseError(ValueError):
    """Malformed ECG text; messages carry 1-based line numbers."""


class NotJLColoringError(ValueError):
    """An operation that requires a JL-coloring received something else."""


class ScaleLimitError(ValueError):
    """An exhaustive operation was asked to run beyond its scale guard."""


@dataclass(frozen=True)
class EdgeColoredGraph:
    """Simple undirected graph with one positive integer color per edge.

    Vertices are 0..vertex_count-1.  Edges are (u, v, color) triples with
    u < v; duplicate vertex pairs are rejected.  Connectivity is queryable,
    never assumed.  Instances are immutable.
    """

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("vertex_count must be >= 1")
        edges = tuple((int(u), int(v), int(c)) for u, v, c in self.edges)
        seen: set[tuple[int, int]] = set()
        for u, v, c in edges:
            if not 0 <= u < v < self.vertex_count:
                raise ValueError(f"bad edge ({u}, {v}): need 0 <= u < v < {self.vertex_count}")
            if c < 1:
                raise ValueError(f"edge ({u}, {v}) has non-positive color {c}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        object.__setattr__(self, "edges", edges)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex sorted (neighbor, color) lists."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for u, v, c in self.edges:
            adj[u].append((v, c))
            adj[v].append((u, c))
        for row in adj:
            row.sort()
        return adj

    def color_set(self) -> frozenset[int]:
        return frozenset(c for _, _, c in self.edges)

    def is_connected(self) -> bool:
        n = self.vertex_count
        if n == 1:
            return True
        adj = self.adjacency()
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for w, _ in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == n


@dataclass(frozen=True)
class DecompositionTree:
    """Nested vertex-set partition witnessing JL-ness.

    A leaf holds a single vertex.  An internal node records the color of the
    monochromatic cut separating its two children, whose vertex sets partition
    the node's set.
    """

    vertices: frozenset[int]
    cut_color: int | None = None
    children: tuple["DecompositionTree", "DecompositionTree"] | None = None

    def __post_init__(self) -> None:
        if self.children is None:
            if self.cut_color is not None or len(self.vertices) != 1:
                raise ValueError("leaf nodes hold exactly one vertex and no cut color")
        else:
            a, b = self.children
            if self.cut_color is None or self.cut_color < 1:
                raise ValueError("internal nodes need a positive cut color")
            if a.vertices | b.vertices != self.vertices or a.vertices & b.vertices:
                raise ValueError("children must partition the node's vertex set")

    def leaves(self) -> Iterator["DecompositionTree"]:
        stack = [self]
        while stack:
            node = stack.pop()
            if node.children is None:
                yield node
            else:
                stack.extend(node.children)


@dataclass(frozen=True)
class JLVerification:
    """Outcome of verify_jl: a witness decomposition or a failure reason."""

    ok: bool
    witness: DecompositionTree | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class BoundsReport:
    """Convexity bounds on the rainbow-spanning-tree count of a JL-coloring.

    lower = |E| - (n-2); upper_real = (|E|/(n-1))^(n-1) exactly;
    upper_integral = product of the balanced integer partition of |E| into
    n-1 parts with pairwise difference at most one.
    """

    lower: int
    upper_real: Fraction
    upper_integral: int


# ---------------------------------------------------------------------------
# ECG text format
# ---------------------------------------------------------------------------

def load_ecg(text: str) -> EdgeColoredGraph:
    """Parse the ECG text format.

    One record per line: a single `n <vertex_count>` header, then
    `e <u> <v> <color>` lines.  `#` starts a comment; blank lines are ignored.
    Raises EcgParseError with the offending line number.
    """
    vertex_count: int | None = None
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "n":
            if vertex_count is not None:
                raise EcgParseError(f"line {lineno}: duplicate 'n' record")
            if len(tokens) != 2:
                raise EcgParseError(f"line {lineno}: expected 'n <vertex_count>'")
            try:
                vertex_count = int(tokens[1])
            except ValueError:
                raise EcgParseError(f"line {lineno}: vertex count is not an integer") from None
            if vertex_count < 1:
                raise EcgParseError(f"line {lineno}: vertex count must be >= 1")
        elif kind == "e":
            if vertex_count is None:
                raise EcgParseError(f"line {lineno}: edge before the 'n' header")
            if len(tokens) != 4:
                raise EcgParseError(f"line {lineno}: expected 'e <u> <v> <color>'")
            try:
                u, v, c = (int(t) for t in tokens[1:])
            except ValueError:
                raise EcgParseError(f"line {lineno}: edge fields must be integers") from None
            if u == v:
                raise EcgParseError(f"line {lineno}: loop edge ({u}, {v})")
            if u > v:
                u, v = v, u
            if not 0 <= u < v < vertex_count:
                raise EcgParseError(f"line {lineno}: vertex out of range in edge ({u}, {v})")
            if c < 1:
                raise EcgParseError(f"line {lineno}: color must be >= 1")
            if (u, v) in seen:
                raise EcgParseError(f"line {lineno}: duplicate edge ({u}, {v})")
            seen.add((u, v))
            edges.append((u, v, c))
        else:
            raise EcgParseError(f"line {lineno}: unknown record type {kind!r}")
    if vertex_count is None:
        raise EcgParseError("line 1: missing 'n' header")
    return EdgeColoredGraph(vertex_count, tuple(edges))


def save_ecg(g: EdgeColoredGraph) -> str:
    """Serialize to ECG text, edges sorted by (u, v)."""
    lines = [f"n {g.vertex_count}"]
    for u, v, c in sorted(g.edges):
        lines.append(f"e {u} {v} {c}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Basic queries
# ---------------------------------------------------------------------------

def color_class_sizes(g: EdgeColoredGraph) -> dict[int, int]:
    """Map each color to its class size; sizes sum to |E|."""
    return dict(Counter(c for _, _, c in g.edges))


def _components(vertices: frozenset[int], pairs: Iterable[tuple[int, int]]) -> list[frozenset[int]]:
    """Connected components of the graph (vertices, pairs), deterministic order."""
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    comps: list[frozenset[int]] = []
    for start in sorted(vertices):
        if start in seen:
            continue
        stack = [start]
        comp = {start}
        seen.add(start)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    seen.add(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


# ---------------------------------------------------------------------------
# Spanning trees and the brute-force rainbow count
# ---------------------------------------------------------------------------

def spanning_trees(g: EdgeColoredGraph) -> Iterator[tuple[int, ...]]:
    """Yield every spanning tree as a tuple of edge indices, in a fixed order.

    Include/exclude recursion over the edge list with union-find; the exclude
    branch is pruned when the remaining edges cannot reconnect the current
    components.
    """
    n = g.vertex_count
    edges = g.edges
    m = len(edges)
    if n == 1:
        yield ()
        return

    parent = list(range(n))
    size = [1] * n

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def connectable(start: int) -> bool:
        roots = {find(v) for v in range(n)}
        k = len(roots)
        if k == 1:
            return True
        scratch = {r: r for r in roots}

        def sfind(x: int) -> int:
            while scratch[x] != x:
                x = scratch[x]
            return x

        for idx in range(start, m):
            u, v, _ = edges[idx]
            ru, rv = sfind(find(u)), sfind(find(v))
            if ru != rv:
                scratch[ru] = rv
                k -= 1
                if k == 1:
                    return True
        return False

    chosen: list[int] = []

    def rec(i: int, ncomp: int) -> Iterator[tuple[int, ...]]:
        if ncomp == 1:
            yield tuple(chosen)
            return
        if m - i < ncomp - 1:
            return
        u, v, _ = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            chosen.append(i)
            yield from rec(i + 1, ncomp - 1)
            chosen.pop()
            size[ru] -= size[rv]
            parent[rv] = rv
        if connectable(i + 1):
            yield from rec(i + 1, ncomp)

    yield from rec(0, n)


def count_rst_bruteforce(g: EdgeColoredGraph) -> int:
    """Exact rainbow-spanning-tree count by enumerating all spanning trees.

    Guarded: needs vertex_count <= 9 or |E| <= 30.  Disconnected input has no
    spanning tree and counts 0; the one-vertex graph counts 1 (empty tree).
    """
    if g.vertex_count > 9 and len(g.edges) > 30:
        raise ScaleLimitError(
            "brute-force guard: needs vertex_count <= 9 or |E| <= 30, "
            f"got n={g.vertex_count}, |E|={len(g.edges)}"
        )
    need = g.vertex_count - 1
    edges = g.edges
    total = 0
    for tree in spanning_trees(g):
        if len({edges[i][2] for i in tree}) == need:
            total += 1
    return total


# ---------------------------------------------------------------------------
# Rainbow cycles
# ---------------------------------------------------------------------------

def find_rainbow_cycle(g: EdgeColoredGraph) -> list[int] | None:
    """Return some simple cycle with pairwise-distinct edge colors, or None.

    Exhaustive DFS over simple paths, so the None answer is a proof at the
    supported scale (vertex_count <= 10).  Paths that already repeat a color
    are pruned: no rainbow cycle can extend them.
    """
    n = g.vertex_count
    if n > 10:
        raise ScaleLimitError(f"rainbow-cycle guard: exhaustive search needs vertex_count <= 10, got {n}")
    adj = g.adjacency()
    path: list[int] = []
    on_path = [False] * n

    def extend(start: int, v: int, used: set[int]) -> list[int] | None:
        for w, c in adj[v]:
            if c in used:
                continue
            if w == start and len(path) >= 3:
                return list(path)
            if w > start and not on_path[w]:
                path.append(w)
                on_path[w] = True
                used.add(c)
                hit = extend(start, w, used)
                if hit is not None:
                    return hit
                used.discard(c)
                on_path[w] = False
                path.pop()
        return None

    for start in range(n):
        path = [start]
        on_path = [False] * n
        on_path[start] = True
        hit = extend(start, start, set())
        if hit is not None:
            return hit
    return None


# ---------------------------------------------------------------------------
# JL verification
# ---------------------------------------------------------------------------

def _vset_str(vset: frozenset[int]) -> str:
    return "{" + ",".join(str(v) for v in sorted(vset)) + "}"


def _decompose(
    vset: frozenset[int], edges: list[tuple[int, int, int]]
) -> tuple[DecompositionTree | None, str | None, frozenset[int]]:
    """Recursive monochromatic-cut decomposition.

    At each node, color classes are tried in ascending color id; a class is a
    valid cut when removing it leaves exactly two connected parts and the
    class is exactly the crossing edge set.  Backtracks across candidates, so
    a witness is found whenever one exists.
    """
    if len(vset) == 1:
        return DecompositionTree(vset), None, frozenset()
    first_failure: str | None = None
    for color in sorted({c for _, _, c in edges}):
        cut = [(u, v) for u, v, c in edges if c == color]
        rest = [(u, v, c) for u, v, c in edges if c != color]
        comps = _components(vset, [(u, v) for u, v, _ in rest])
        if len(comps) != 2:
            continue
        part_a, part_b = comps
        if not all((u in part_a) != (v in part_a) for u, v in cut):
            continue
        sub_a = [(u, v, c) for u, v, c in rest if u in part_a and v in part_a]
        sub_b = [(u, v, c) for u, v, c in rest if u in part_b and v in part_b]
        tree_a, reason_a, colors_a = _decompose(part_a, sub_a)
        if tree_a is None:
            first_failure = first_failure or reason_a
            continue
        tree_b, reason_b, colors_b = _decompose(part_b, sub_b)
        if tree_b is None:
            first_failure = first_failure or reason_b
            continue
        if colors_a & colors_b:
            first_failure = first_failure or f"color-set overlap below {_vset_str(vset)}"
            continue
        node = DecompositionTree(vset, cut_color=color, children=(tree_a, tree_b))
        return node, None, colors_a | colors_b | {color}
    return None, first_failure or f"no monochromatic cut at {_vset_str(vset)}", frozenset()


def verify_jl(g: EdgeColoredGraph) -> JLVerification:
    """Check JL-ness and produce a witness decomposition or a failure reason.

    Succeeds iff g is connected, uses exactly n-1 distinct colors, and admits
    the recursive monochromatic-cut decomposition with disjoint color sets
    below each node.  The one-vertex graph passes vacuously.
    """
    n = g.vertex_count
    if not g.is_connected():
        return JLVerification(False, reason="disconnected")
    distinct = len(g.color_set())
    if distinct != n - 1:
        return JLVerification(
            False, reason=f"color count: {distinct} colors on {n} vertices (need {n - 1})"
        )
    witness, reason, _ = _decompose(frozenset(range(n)), list(g.edges))
    if witness is None:
        return JLVerification(False, reason=reason)
    return JLVerification(True, witness=witness)


def count_rst_jl(g: EdgeColoredGraph) -> int:
    """Rainbow-spanning-tree count of a JL-coloring: the product of class sizes.

    Raises NotJLColoringError when verify_jl fails.
    """
    result = verify_jl(g)
    if not result.ok:
        raise NotJLColoringError(f"not JL: {result.reason}")
    product = 1
    for size in color_class_sizes(g).values():
        product *= size
    return product


# ---------------------------------------------------------------------------
# Convexity bounds
# ---------------------------------------------------------------------------

def convexity_bounds(g: EdgeColoredGraph) -> BoundsReport:
    """Structure-only bounds on the count for any JL-coloring of g."""
    n = g.vertex_count
    m = len(g.edges)
    if n < 2:
        raise ValueError("bounds need at least 2 vertices")
    if not g.is_connected():
        raise ValueError("bounds need a connected graph")
    if m < n - 1:
        raise ValueError(f"too sparse: |E|={m} < n-1={n - 1}")
    lower = m - (n - 2)
    upper_real = Fraction(m, n - 1) ** (n - 1)
    q, r = divmod(m, n - 1)
    upper_integral = (q + 1) ** r * q ** (n - 1 - r)
    return BoundsReport(lower=lower, upper_real=upper_real, upper_integral=upper_integral)


# ---------------------------------------------------------------------------
# Two-tree partitions (tightness of the lower bound)
# ---------------------------------------------------------------------------

def _induces_tree(g: EdgeColoredGraph, vset: frozenset[int]) -> bool:
    pairs = [(u, v) for u, v, _ in g.edges if u in vset and v in vset]
    if len(pairs) != len(vset) - 1:
        return False
    return len(_components(vset, pairs)) == 1


def two_tree_partition_coloring(g: EdgeColoredGraph, part: Iterable[int]) -> EdgeColoredGraph:
    """Color g so the lower bound |E|-(n-2) is attained, given a two-tree split.

    Both induced subgraphs must be trees and at least one edge must cross.
    Each tree is rainbow-colored with fresh colors; every crossing edge gets
    one final shared color.  The result is a JL-coloring whose count is
    exactly |E|-(n-2).
    """
    n = g.vertex_count
    part_x = frozenset(part)
    if not part_x or not part_x < frozenset(range(n)):
        raise ValueError("part must be a proper non-empty subset of the vertices")
    part_y = frozenset(range(n)) - part_x
    if not _induces_tree(g, part_x):
        raise ValueError(f"first part does not induce a tree: {sorted(part_x)}")
    if not _induces_tree(g, part_y):
        raise ValueError(f"second part does not induce a tree: {sorted(part_y)}")
    if not any((u in part_x) != (v in part_x) for u, v, _ in g.edges):
        raise ValueError("no crossing edges between the parts")
    cross_color = n - 1
    next_color = 1
    recolored = []
    for u, v, _ in sorted(g.edges):
        if (u in part_x) != (v in part_x):
            recolored.append((u, v, cross_color))
        else:
            recolored.append((u, v, next_color))
            next_color += 1
    return EdgeColoredGraph(n, tuple(recolored))


def find_two_tree_partition(g: EdgeColoredGraph) -> frozenset[int] | None:
    """Find X with G[X] and G[complement] both trees and a crossing edge.

    Exhaustive over subsets containing vertex 0 (the complement witnesses the
    same split), ascending bitmask order; guarded at vertex_count <= 12.
    Returns None when no such partition exists, which is exact at this scale.
    """
    n = g.vertex_count
    if n > 12:
        raise ScaleLimitError(f"two-tree partition guard: subset search needs vertex_count <= 12, got {n}")
    if n < 2:
        return None
    for mask in range((1 << (n - 1)) - 1):
        part_x = frozenset({0} | {i + 1 for i in range(n - 1) if mask >> i & 1})
        part_y = frozenset(range(n)) - part_x
        if not _induces_tree(g, part_x) or not _induces_tree(g, part_y):
            continue
        if any((u in part_x) != (v in part_x) for u, v, _ in g.edges):
            return part_x
    return None


# ---------------------------------------------------------------------------
# Exhaustive JL-coloring enumeration
# ---------------------------------------------------------------------------

def _partition_shapes(vset: frozenset[int], edges: tuple[tuple[int, int, int], ...]):
    """All recursive 2-partitions with connected parts and a non-empty cut."""
    if len(vset) == 1:
        yield ("leaf", vset)
        return
    vmin = min(vset)
    others = sorted(vset - {vmin})
    k = len(others)
    for mask in range(1 << k):
        if mask == (1 << k) - 1:
            continue
        part_a = frozenset({vmin} | {others[i] for i in range(k) if mask >> i & 1})
        part_b = vset - part_a
        cut = tuple(sorted((u, v) for u, v, _ in edges if (u in part_a) != (v in part_a)))
        if not cut:
            continue
        edges_a = tuple(e for e in edges if e[0] in part_a and e[1] in part_a)
        edges_b = tuple(e for e in edges if e[0] in part_b and e[1] in part_b)
        if len(_components(part_a, [(u, v) for u, v, _ in edges_a])) != 1:
            continue
        if len(_components(part_b, [(u, v) for u, v, _ in edges_b])) != 1:
            continue
        for shape_a in _partition_shapes(part_a, edges_a):
            for shape_b in _partition_shapes(part_b, edges_b):
                yield ("node", vset, cut, shape_a, shape_b)


def _materialize(shape, g: EdgeColoredGraph) -> tuple[DecompositionTree, EdgeColoredGraph]:
    """Assign colors 1.. to a partition shape in pre-order and build outputs."""
    color_of: dict[tuple[int, int], int] = {}
    counter = [0]

    def walk(node) -> DecompositionTree:
        if node[0] == "leaf":
            return DecompositionTree(node[1])
        _, vset, cut, shape_a, shape_b = node
        counter[0] += 1
        color = counter[0]
        for pair in cut:
            color_of[pair] = color
        child_a = walk(shape_a)
        child_b = walk(shape_b)
        return DecompositionTree(vset, cut_color=color, children=(child_a, child_b))

    witness = walk(shape)
    colored = EdgeColoredGraph(
        g.vertex_count, tuple((u, v, color_of[(u, v)]) for u, v, _ in g.edges)
    )
    return witness, colored


def enumerate_jl_colorings(
    g: EdgeColoredGraph,
) -> Iterator[tuple[DecompositionTree, EdgeColoredGraph]]:
    """Yield every JL-coloring of g up to color renaming, with its witness.

    Recursively enumerates 2-partitions with connected parts whose crossing
    g-edges form the (non-empty) cut, then deduplicates by the partition of
    the edge set into color classes.  Disconnected graphs admit none.
    Guarded at vertex_count <= 6.
    """
    n = g.vertex_count
    if n > 6:
        raise ScaleLimitError(f"JL-coloring enumeration guard: vertex_count <= 6, got {n}")
    if not g.is_connected():
        return
    if n == 1:
        yield DecompositionTree(frozenset({0})), g
        return
    seen: set[frozenset[frozenset[tuple[int, int]]]] = set()
    for shape in _partition_shapes(frozenset(range(n)), g.edges):
        witness, colored = _materialize(shape, g)
        classes: dict[int, set[tuple[int, int]]] = {}
        for u, v, c in colored.edges:
            classes.setdefault(c, set()).add((u, v))
        partition = frozenset(frozenset(s) for s in classes.values())
        if partition in seen:
            continue
        seen.add(partition)
        yield witness, colored


def max_rst_over_jl(g: EdgeColoredGraph) -> int:
    """Maximum rainbow-spanning-tree count over all JL-colorings of g.

    0 when g admits no JL-coloring (only connected graphs do).
    Guarded at vertex_count <= 6 via the enumeration.
    """
    best = 0
    for _, colored in enumerate_jl_colorings(g):
        product = 1
        for size in color_class_sizes(colored).values():
            product *= size
        best = max(best, product)
    return best


# ---------------------------------------------------------------------------
# Random colorings of K_n
# ---------------------------------------------------------------------------

def complete_graph(n: int, color: int = 1) -> EdgeColoredGraph:
    """K_n with every edge given the same color (a structure carrier)."""
    return EdgeColoredGraph(n, tuple((u, v, color) for u in range(n) for v in range(u + 1, n)))


def _spanning_tree_array(n: int) -> np.ndarray:
    """Edge-index tuples of every spanning tree of K_n, as an int array."""
    return np.array(list(spanning_trees(complete_graph(n))), dtype=np.int64)


_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)
_BITVAL = np.array([1 << i for i in range(8)], dtype=np.uint8)


def _rainbow_counts(tree_idx: np.ndarray, colorings: np.ndarray) -> np.ndarray:
    """Rainbow-spanning-tree count per row of `colorings` (rows are edge color
    vectors of K_n in the fixed edge order).

    A tree is rainbow iff the OR of its edge-color bitmasks has n-1 set bits;
    colors are at most 7 here, so masks fit in a byte.
    """
    need = tree_idx.shape[1]
    bits = _BITVAL[colorings]
    ored = np.bitwise_or.reduce(bits[:, tree_idx], axis=2)
    rainbow = _POPCOUNT[ored] == need
    return rainbow.sum(axis=1)


def random_coloring_mean(n: int, samples: int, seed: int) -> tuple[float, float]:
    """Sample mean and standard error of the rainbow-spanning-tree count when
    every edge of K_n is colored independently and uniformly from [n-1].

    Each sample is counted by exhaustive filtering of the spanning trees of
    K_n.  Deterministic for a fixed seed.  Guarded at 4 <= n <= 8.
    """
    if not 4 <= n <= 8:
        raise ScaleLimitError(f"random-coloring guard: 4 <= n <= 8, got {n}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    tree_idx = _spanning_tree_array(n)
    m = n * (n - 1) // 2
    rng = np.random.default_rng(seed)
    counts = np.empty(samples, dtype=np.int64)
    chunk = max(1, min(4096, 40_000_000 // (tree_idx.shape[0] * (n - 1))))
    done = 0
    while done < samples:
        take = min(chunk, samples - done)
        colorings = rng.integers(1, n, size=(take, m))
        counts[done : done + take] = _rainbow_counts(tree_idx, colorings)
        done += take
    mean = float(counts.mean())
    stderr = float(counts.std(ddof=1) / np.sqrt(samples)) if samples > 1 else 0.0
    return mean, stderr
