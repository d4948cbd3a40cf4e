"""Split trees for JL-colorings of complete bipartite graphs K_{n,m}.

Nodes carry ordered part-size pairs; the color class of an internal node with
children (p1,p2) and (q1,q2) has p1*q2 + p2*q1 edges.  The module provides the
extremal formulas nu_min = (n-1)(m-1)+1 and nu_max = m^(n-m+1)*((m-1)!)^2 for
n >= m, an independent maximizing oracle, the bound-achieving constructions,
exhaustive enumeration, and conversion to explicit colorings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .colored_graph import EdgeColoredGraph

Label = tuple[int, int]

_LEAF_LABELS = {(1, 0), (0, 1)}


def _valid_label(label: Label) -> bool:
    a, b = label
    if a < 0 or b < 0 or (a, b) == (0, 0):
        return False
    if (a == 0 and b >= 2) or (b == 0 and a >= 2):
        return False
    return True


@dataclass(frozen=True)
class JLbTree:
    """Rooted binary split tree for K_{n,m}; labels are part-size pairs.

    Leaves are exactly the nodes labeled (1,0) or (0,1).  An internal node
    labeled (r1,r2) has children whose labels sum to (r1,r2) componentwise;
    labels with a zero entry other than the two leaf labels are invalid
    (they would describe a disconnected piece).
    """

    label: Label
    children: tuple["JLbTree", "JLbTree"] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "label", (int(self.label[0]), int(self.label[1])))
        if not _valid_label(self.label):
            raise ValueError(f"invalid node label {self.label}")
        if self.children is None:
            if self.label not in _LEAF_LABELS:
                raise ValueError(f"leaf label must be (1,0) or (0,1), got {self.label}")
        else:
            if self.label in _LEAF_LABELS:
                raise ValueError(f"label {self.label} must be a leaf")
            first, second = self.children
            if (
                first.label[0] + second.label[0] != self.label[0]
                or first.label[1] + second.label[1] != self.label[1]
            ):
                raise ValueError(
                    f"children {first.label} + {second.label} do not sum to {self.label}"
                )

    def nodes(self) -> Iterator["JLbTree"]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            if node.children is not None:
                stack.append(node.children[1])
                stack.append(node.children[0])


@dataclass(frozen=True)
class NuRecord:
    """Maximum rainbow count for K_{n,m} with a witness tree achieving it."""

    n: int
    m: int
    nu: int
    witness: JLbTree


def class_sizes(t: JLbTree) -> list[int]:
    """Color-class sizes of the encoded coloring, sorted ascending.

    Every internal node with children (p1,p2),(q1,q2) contributes
    p1*q2 + p2*q1; the sizes sum to n*m and there are n+m-1 of them.
    """
    sizes = []
    for node in t.nodes():
        if node.children is None:
            continue
        (p1, p2), (q1, q2) = node.children[0].label, node.children[1].label
        sizes.append(p1 * q2 + p2 * q1)
    return sorted(sizes)


def nu_min_formula(n: int, m: int) -> int:
    """Minimum rainbow count over JL-colorings of K_{n,m}: (n-1)(m-1)+1."""
    if n < 1 or m < 1:
        raise ValueError(f"need n, m >= 1, got ({n}, {m})")
    return (n - 1) * (m - 1) + 1


def nu_max_formula(n: int, m: int) -> int:
    """Maximum rainbow count over JL-colorings of K_{n,m}: m^(n-m+1)*((m-1)!)^2.

    Requires n >= m >= 1; the caller orients the pair (the quantity is
    symmetric under swapping the parts).
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if n < m:
        raise ValueError(f"need n >= m, got ({n}, {m}); swap the parts first")
    return m ** (n - m + 1) * math.factorial(m - 1) ** 2


def _splits(label: Label) -> Iterator[tuple[Label, Label]]:
    """Ordered child-label splits of an internal node, deterministic order."""
    a, b = label
    for p1 in range(a, -1, -1):
        for p2 in range(b, -1, -1):
            first = (p1, p2)
            second = (a - p1, b - p2)
            if first == (0, 0) or second == (0, 0):
                continue
            if _valid_label(first) and _valid_label(second):
                yield first, second


@lru_cache(maxsize=None)
def _nu_best(a: int, b: int) -> int:
    """Max class-size product over split trees rooted at (a,b); memoized on
    the orientation-normalized pair."""
    if a < b:
        a, b = b, a
    if (a, b) in _LEAF_LABELS:
        return 1
    best = 0
    for first, second in _splits((a, b)):
        (p1, p2), (q1, q2) = first, second
        value = (p1 * q2 + p2 * q1) * _nu_best(p1, p2) * _nu_best(q1, q2)
        if value > best:
            best = value
    return best


def _nu_witness(label: Label) -> JLbTree:
    if label in _LEAF_LABELS:
        return JLbTree(label)
    target = _nu_best(*label)
    for first, second in _splits(label):
        (p1, p2), (q1, q2) = first, second
        if (p1 * q2 + p2 * q1) * _nu_best(p1, p2) * _nu_best(q1, q2) == target:
            return JLbTree(label, (_nu_witness(first), _nu_witness(second)))
    raise AssertionError(f"no split of {label} attains the memoized maximum")


def nu_max_oracle(n: int, m: int) -> NuRecord:
    """Maximize the class-size product over all split trees rooted at (n,m).

    Independent of the closed formula: recursive maximization over every
    valid split, memoized on (max, min) subproblem pairs.  Intended for
    n + m <= 10-ish; the memo keeps larger inputs feasible.
    """
    if n < 1 or m < 1:
        raise ValueError(f"need n, m >= 1, got ({n}, {m})")
    witness = _nu_witness((n, m))
    value = _nu_best(n, m)
    return NuRecord(n=n, m=m, nu=value, witness=witness)


def _chain_right(b: int) -> JLbTree:
    """Tree for (1, b): peel one right-part leaf at a time."""
    tree = JLbTree((1, 0))
    for k in range(1, b + 1):
        tree = JLbTree((1, k), (tree, JLbTree((0, 1))))
    return tree


def _chain_left(a: int) -> JLbTree:
    """Tree for (a, 1): peel one left-part leaf at a time."""
    tree = JLbTree((0, 1))
    for k in range(1, a + 1):
        tree = JLbTree((k, 1), (JLbTree((1, 0)), tree))
    return tree


def min_bip_tree(n: int, m: int) -> JLbTree:
    """The minimizing split tree: children of (a,b) are (1,b-1) and (a-1,1).

    Its coloring fixes one vertex in each part, gives every edge at those two
    vertices its own color, and reuses the color of the joining edge on all
    remaining edges.
    """
    if n < 1 or m < 1:
        raise ValueError(f"need n, m >= 1, got ({n}, {m})")
    if (n, m) == (1, 1):
        return JLbTree((1, 1), (JLbTree((1, 0)), JLbTree((0, 1))))
    return JLbTree((n, m), (_chain_right(m - 1), _chain_left(n - 1)))


def min_bip_coloring(n: int, m: int) -> EdgeColoredGraph:
    """Explicit K_{n,m} coloring attaining the minimum (n-1)(m-1)+1."""
    return jlb_tree_to_coloring(min_bip_tree(n, m))


def max_bip_tree(n: int, m: int) -> JLbTree:
    """The maximizing split tree for n >= m: split (a,b) with a >= b into
    (1,0) and (a-1,b), reorienting whenever the second coordinate exceeds
    the first."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if n < m:
        raise ValueError(f"need n >= m, got ({n}, {m}); swap the parts first")
    labels: list[Label] = []
    a, b = n, m
    while (a, b) not in _LEAF_LABELS:
        labels.append((a, b))
        if a >= b:
            a -= 1
        else:
            b -= 1
    tree = JLbTree((a, b))
    for a, b in reversed(labels):
        if a >= b:
            tree = JLbTree((a, b), (JLbTree((1, 0)), tree))
        else:
            tree = JLbTree((a, b), (JLbTree((0, 1)), tree))
    return tree


def jlb_tree_to_coloring(t: JLbTree) -> EdgeColoredGraph:
    """The explicit K_{n,m} coloring encoded by a split tree.

    Left part is 0..n-1, right part n..n+m-1; each node's parts are split
    into contiguous blocks, first child first.  Each internal node gets a
    fresh color (pre-order) on its crossing edges.
    """
    n, m = t.label
    edges: list[tuple[int, int, int]] = []
    color = 0
    stack: list[tuple[JLbTree, int, int]] = [(t, 0, n)]
    while stack:
        node, left0, right0 = stack.pop()
        if node.children is None:
            continue
        color += 1
        first, second = node.children
        p1, p2 = first.label
        a, b = node.label
        first_left = range(left0, left0 + p1)
        first_right = range(right0, right0 + p2)
        second_left = range(left0 + p1, left0 + a)
        second_right = range(right0 + p2, right0 + b)
        for u in first_left:
            for v in second_right:
                edges.append((u, v, color))
        for u in second_left:
            for v in first_right:
                edges.append((u, v, color))
        stack.append((second, left0 + p1, right0 + p2))
        stack.append((first, left0, right0))
    return EdgeColoredGraph(n + m, tuple(sorted(edges)))


def _tree_key(t: JLbTree) -> tuple:
    if t.children is None:
        return (t.label,)
    first, second = t.children
    return (t.label, _tree_key(first), _tree_key(second))


@lru_cache(maxsize=None)
def _all_jlb(a: int, b: int) -> tuple[JLbTree, ...]:
    label = (a, b)
    if label in _LEAF_LABELS:
        return (JLbTree(label),)
    out: list[JLbTree] = []
    for first, second in _splits(label):
        if first < second:
            continue
        if first > second:
            for left in _all_jlb(*first):
                for right in _all_jlb(*second):
                    out.append(JLbTree(label, (left, right)))
        else:
            halves = sorted(_all_jlb(*first), key=_tree_key, reverse=True)
            for i, left in enumerate(halves):
                for right in halves[i:]:
                    out.append(JLbTree(label, (left, right)))
    return tuple(out)


def enumerate_jlb_trees(n: int, m: int) -> Iterator[JLbTree]:
    """Every split tree rooted at (n,m), exactly once, deterministic order.

    Unordered normalization: the child with the lexicographically larger
    label comes first, ties broken by the recursive structure key.  Counts
    grow quickly; intended for n + m <= 8.
    """
    if not _valid_label((n, m)):
        raise ValueError(f"invalid root label ({n}, {m})")
    yield from _all_jlb(n, m)


# ---------------------------------------------------------------------------
# Presentation helpers
# ---------------------------------------------------------------------------

def bip_table_csv(n: int, m: int) -> str:
    """One-row CSV (n, m, nu_min, nu_max) with (n,m) oriented so n >= m."""
    hi, lo = (n, m) if n >= m else (m, n)
    return (
        "n,m,nu_min,nu_max\n"
        f"{hi},{lo},{nu_min_formula(hi, lo)},{nu_max_formula(hi, lo)}\n"
    )


def jlb_tree_dot(t: JLbTree, name: str = "jlbtree") -> str:
    """DOT rendering with nodes labeled \"(a,b)\"."""
    lines = [f"digraph {name} {{"]
    counter = 0
    stack: list[tuple[JLbTree, int]] = [(t, 0)]
    lines.append(f'  n0 [label="({t.label[0]},{t.label[1]})"];')
    while stack:
        node, node_id = stack.pop()
        if node.children is None:
            continue
        for child in node.children:
            counter += 1
            lines.append(f'  n{counter} [label="({child.label[0]},{child.label[1]})"];')
            lines.append(f"  n{node_id} -> n{counter};")
            stack.append((child, counter))
    lines.append("}")
    return "\n".join(lines) + "\n"
