"""Exact recurrence machinery for JL-colorings of complete graphs.

mu(n) = min over 1 <= p <= n-1 of n * mu(p) * mu(n-p), mu(1) = 1, is n times
the minimum rainbow-spanning-tree count over JL-colorings of K_n.  tau is its
smooth comparison function 2^(2n-2)/n, beta = mu/tau the exact excess factor.
This module computes all three exactly, finds the optimal splits, builds the
extremal split trees, and converts split trees into explicit edge colorings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .colored_graph import EdgeColoredGraph


@dataclass(frozen=True)
class JLTree:
    """Rooted binary split tree; every node is labeled by its leaf count.

    Leaves have label 1; an internal node's label is the sum of its two
    children's labels.  A tree with root label n has n leaves and n-1
    internal nodes and encodes a JL-coloring of K_n.
    """

    label: int
    children: tuple["JLTree", "JLTree"] | None = None

    def __post_init__(self) -> None:
        if self.children is None:
            if self.label != 1:
                raise ValueError(f"leaf label must be 1, got {self.label}")
        else:
            left, right = self.children
            if left.label + right.label != self.label:
                raise ValueError(
                    f"internal label {self.label} != {left.label} + {right.label}"
                )

    def nodes(self) -> Iterator["JLTree"]:
        """Pre-order traversal, iterative (trees can be deep)."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            if node.children is not None:
                stack.append(node.children[1])
                stack.append(node.children[0])


@dataclass(frozen=True)
class MuRecord:
    """Value of mu at n together with the smallest minimizing split argument."""

    n: int
    mu: int
    optimal_p: int | None


# Memo tables, filled bottom-up; index i holds mu(i) / its smallest minimizing
# split (0 for the undefined n=1 case).  Append-only, so concurrent readers of
# a built prefix are safe under the GIL.
_mu_vals: list[int] = [0, 1]
_mu_split: list[int] = [0, 0]


def _extend_mu(n: int) -> None:
    # The split value is symmetric in p <-> r-p, so scanning p <= r/2 finds
    # the minimum and the smallest minimizer.
    while len(_mu_vals) <= n:
        r = len(_mu_vals)
        best = 0
        best_p = 0
        for p in range(1, r // 2 + 1):
            val = r * _mu_vals[p] * _mu_vals[r - p]
            if best_p == 0 or val < best:
                best = val
                best_p = p
        _mu_vals.append(best)
        _mu_split.append(best_p)


def mu(n: int) -> MuRecord:
    """mu(n) by the memoized min-over-splits recurrence; exact integer."""
    if n < 1:
        raise ValueError(f"mu is defined for n >= 1, got {n}")
    _extend_mu(n)
    p = _mu_split[n]
    return MuRecord(n=n, mu=_mu_vals[n], optimal_p=p if p else None)


def tau(n: int) -> Fraction:
    """The comparison function 2^(2n-2)/n, in lowest terms."""
    if n < 1:
        raise ValueError(f"tau is defined for n >= 1, got {n}")
    return Fraction(1 << (2 * n - 2), n)


def beta(n: int) -> Fraction:
    """beta(n) = mu(n)/tau(n) = mu(n)*n/2^(2n-2); always >= 1."""
    if n < 1:
        raise ValueError(f"beta is defined for n >= 1, got {n}")
    return Fraction(mu(n).mu * n, 1 << (2 * n - 2))


def beta_split(n: int, p: int) -> Fraction:
    """The split value n^2/(4 p (n-p)) * beta(p) * beta(n-p).

    Minimizing this quantity over p is equivalent to the minimization that
    defines mu(n).
    """
    if n < 2:
        raise ValueError(f"beta_split needs n >= 2, got {n}")
    if not 1 <= p <= n - 1:
        raise ValueError(f"split argument p={p} out of range [1, {n - 1}]")
    return Fraction(n * n, 4 * p * (n - p)) * beta(p) * beta(n - p)


def conjectured_split(n: int) -> tuple[int, int]:
    """The unique power of two s with n/3 <= s < 2n/3, paired with n-s."""
    if n < 2:
        raise ValueError(f"conjectured_split needs n >= 2, got {n}")
    hits = []
    s = 1
    while s < n:
        if 3 * s >= n and 3 * s < 2 * n:
            hits.append(s)
        s <<= 1
    assert len(hits) == 1, f"power-of-two split not unique for n={n}: {hits}"
    s = hits[0]
    return s, n - s


def min_jl_tree(n: int) -> JLTree:
    """The split tree that minimizes the rainbow count: every internal label r
    splits per conjectured_split(r)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return JLTree(1)
    s, t = conjectured_split(n)
    return JLTree(n, (min_jl_tree(s), min_jl_tree(t)))


def max_jl_tree(n: int) -> JLTree:
    """The maximizing split tree: every internal label r splits as (r-1, 1)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    tree = JLTree(1)
    for r in range(2, n + 1):
        tree = JLTree(r, (tree, JLTree(1)))
    return tree


def tree_rst_count(t: JLTree) -> int:
    """Product of all non-root labels: the rainbow-spanning-tree count of the
    coloring the tree encodes."""
    product = 1
    stack = list(t.children or ())
    while stack:
        node = stack.pop()
        product *= node.label
        if node.children is not None:
            stack.extend(node.children)
    return product


def _tree_key(t: JLTree) -> tuple:
    """Canonical recursive sort key; labels agree on leafness so keys compare."""
    if t.children is None:
        return (1,)
    left, right = t.children
    return (t.label, _tree_key(left), _tree_key(right))


@lru_cache(maxsize=None)
def _all_trees(r: int) -> tuple[JLTree, ...]:
    if r == 1:
        return (JLTree(1),)
    out: list[JLTree] = []
    for p in range(r - 1, (r - 1) // 2, -1):
        q = r - p
        if p > q:
            for left in _all_trees(p):
                for right in _all_trees(q):
                    out.append(JLTree(r, (left, right)))
        else:
            halves = sorted(_all_trees(p), key=_tree_key, reverse=True)
            for i, left in enumerate(halves):
                for right in halves[i:]:
                    out.append(JLTree(r, (left, right)))
    return tuple(out)


def enumerate_jl_trees(n: int) -> Iterator[JLTree]:
    """Every split tree with root label n, exactly once, deterministic order.

    Trees are normalized unordered: left child label >= right child label,
    ties broken by the recursive structure key.  Counts grow super-
    exponentially; intended for n <= 9.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    yield from _all_trees(n)


def jl_tree_to_coloring(t: JLTree) -> EdgeColoredGraph:
    """The explicit JL-coloring of K_n encoded by a split tree.

    Leaves map to vertices 0..n-1 left to right; each internal node gets a
    fresh color (pre-order, starting at 1) on every edge between its two
    children's leaf spans.
    """
    n = t.label
    edges: list[tuple[int, int, int]] = []
    color = 0
    stack: list[tuple[JLTree, int]] = [(t, 0)]
    while stack:
        node, offset = stack.pop()
        if node.children is None:
            continue
        color += 1
        left, right = node.children
        mid = offset + left.label
        end = offset + node.label
        for u in range(offset, mid):
            for v in range(mid, end):
                edges.append((u, v, color))
        stack.append((right, mid))
        stack.append((left, offset))
    return EdgeColoredGraph(n, tuple(edges))


def beta_series(max_n: int) -> list[tuple[int, Fraction]]:
    """(n, beta(n)) for 1 <= n <= max_n."""
    if max_n < 1:
        raise ValueError(f"need max_n >= 1, got {max_n}")
    _extend_mu(max_n)
    return [(n, beta(n)) for n in range(1, max_n + 1)]


# ---------------------------------------------------------------------------
# Presentation helpers (exact fractions, CSV, DOT)
# ---------------------------------------------------------------------------

def format_exact(value: Fraction | int) -> str:
    """Render an exact rational as `p/q`, omitting `/q` when q == 1."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def decimal_12(value: Fraction) -> str:
    """Exact 12-decimal-place rendering (round half up); presentation only."""
    sign = "-" if value < 0 else ""
    f = abs(Fraction(value))
    scaled, rem = divmod(f.numerator * 10**12, f.denominator)
    if 2 * rem >= f.denominator:
        scaled += 1
    whole, frac = divmod(scaled, 10**12)
    return f"{sign}{whole}.{frac:012d}"


def mu_table_csv(max_n: int) -> str:
    """CSV rows (n, mu, mu/n, tau, beta) for n = 2..max_n, exact fields."""
    if max_n < 2:
        raise ValueError(f"need max_n >= 2, got {max_n}")
    _extend_mu(max_n)
    lines = ["n,mu,mu_over_n,tau_num,tau_den,beta_num,beta_den"]
    for n in range(2, max_n + 1):
        m = _mu_vals[n]
        t = tau(n)
        b = beta(n)
        lines.append(
            f"{n},{m},{m // n},{t.numerator},{t.denominator},{b.numerator},{b.denominator}"
        )
    return "\n".join(lines) + "\n"


def beta_series_csv(max_n: int) -> str:
    """CSV rows (n, beta as p/q, beta to 12 decimal places) for n = 1..max_n."""
    lines = ["n,beta,beta_decimal"]
    for n, b in beta_series(max_n):
        lines.append(f"{n},{format_exact(b)},{decimal_12(b)}")
    return "\n".join(lines) + "\n"


def beta_alternation_report(max_n: int) -> tuple[int, list[int]]:
    """Check beta(even n) < min(beta(n-1), beta(n+1)) over 4 <= n <= max_n-1.

    Exploratory: returns (confirmations, violations).  n = 2 is excluded:
    beta(1) = beta(2) = 1 ties, so strict alternation only makes sense from
    n = 4 on.  Not an invariant of the library.
    """
    _extend_mu(max_n)
    confirmed = 0
    violations: list[int] = []
    for n in range(4, max_n):
        if n % 2:
            continue
        if beta(n) < beta(n - 1) and beta(n) < beta(n + 1):
            confirmed += 1
        else:
            violations.append(n)
    return confirmed, violations


def jl_tree_dot(t: JLTree, name: str = "jltree") -> str:
    """DOT rendering with each node labeled by its integer."""
    lines = [f"digraph {name} {{"]
    counter = 0
    stack: list[tuple[JLTree, int]] = [(t, 0)]
    lines.append(f'  n0 [label="{t.label}"];')
    while stack:
        node, node_id = stack.pop()
        if node.children is None:
            continue
        for child in node.children:
            counter += 1
            lines.append(f'  n{counter} [label="{child.label}"];')
            lines.append(f"  n{node_id} -> n{counter};")
            stack.append((child, counter))
    lines.append("}")
    return "\n".join(lines) + "\n"


def jl_tree_text(t: JLTree) -> str:
    """Nested one-line rendering, e.g. `(4 (3 (2 1 1) 1) 1)`."""
    parts: list[str] = []
    stack: list[object] = [t]
    while stack:
        item = stack.pop()
        if item == ")":
            parts.append(")")
            continue
        node = item
        if node.children is None:
            parts.append("1")
        else:
            parts.append(f"({node.label}")
            stack.append(")")
            stack.append(node.children[1])
            stack.append(node.children[0])
    return " ".join(parts).replace("( ", "(").replace(" )", ")")
