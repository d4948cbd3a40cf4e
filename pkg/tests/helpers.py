"""Shared test fixtures: explicit small-graph corpus and tiny utilities."""

from rainbowtrees import EdgeColoredGraph


def graph(n, pairs):
    """Structure carrier: all edges share color 1; pairs may be unordered."""
    return EdgeColoredGraph(n, tuple((min(u, v), max(u, v), 1) for u, v in pairs))


def color_partition(g):
    """The partition of the edge set into color classes (renaming-invariant)."""
    classes = {}
    for u, v, c in g.edges:
        classes.setdefault(c, set()).add((u, v))
    return frozenset(frozenset(s) for s in classes.values())


def class_product(g):
    product = 1
    sizes = {}
    for _, _, c in g.edges:
        sizes[c] = sizes.get(c, 0) + 1
    for s in sizes.values():
        product *= s
    return product


def complete_pairs(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def bipartite_pairs(n, m):
    return [(u, v) for u in range(n) for v in range(n, n + m)]


# Explicit connected test corpus, vertex_count <= 6.  Names are stable; tests
# key off them for the graphs with |E| >= 2(n-1) and the non-complete cases.
CORPUS = {
    "path2": graph(2, [(0, 1)]),
    "path3": graph(3, [(0, 1), (1, 2)]),
    "path4": graph(4, [(0, 1), (1, 2), (2, 3)]),
    "path5": graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    "star4": graph(4, [(0, 1), (0, 2), (0, 3)]),
    "star6": graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]),
    "spider5": graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)]),
    "caterpillar6": graph(6, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)]),
    "cycle3": graph(3, [(0, 1), (1, 2), (0, 2)]),
    "cycle4": graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "cycle5": graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    "cycle6": graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]),
    "unicyclic5": graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4)]),
    "theta5": graph(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]),
    "bowtie": graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]),
    "wheel5": graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)]),
    "bipartite23": graph(5, bipartite_pairs(2, 3)),
    "bipartite33": graph(6, bipartite_pairs(3, 3)),
    "prism": graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]),
    "octahedron": graph(
        6,
        [
            (0, 2), (0, 3), (0, 4), (0, 5),
            (1, 2), (1, 3), (1, 4), (1, 5),
            (2, 4), (2, 5), (3, 4), (3, 5),
        ],
    ),
    "complete4": graph(4, complete_pairs(4)),
    "complete4_minus_edge": graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "complete5": graph(5, complete_pairs(5)),
    "complete5_minus_edge": graph(5, complete_pairs(5)[:-1]),
    "complete6": graph(6, complete_pairs(6)),
}
