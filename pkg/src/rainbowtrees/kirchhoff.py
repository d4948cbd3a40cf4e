"""Matrix-tree counting for rainbow spanning trees.

The colored Laplacian weighs each edge by the indeterminate of its color; the
determinant of a principal cofactor is the spanning-tree generating function
(sum over spanning trees of the product of their edge-color indeterminates).
The coefficient of c_1*c_2*...*c_{n-1} counts rainbow spanning trees, for any
coloring — not just JL ones.  The default extraction path never touches
polynomials: it evaluates 2^{n-1} exact integer determinants over the 0/1
points of the color cube and combines them by inclusion-exclusion, which is
valid because the generating function is homogeneous of degree n-1 in its
n-1 variables.  Setting every indeterminate to 1 recovers the classic
Kirchhoff count of all spanning trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .colored_graph import EdgeColoredGraph, ScaleLimitError

Exponents = tuple[int, ...]


class SparseMultiPoly:
    """Multivariate polynomial over exact integers, keyed by exponent vectors.

    Immutable by convention; zero coefficients are never stored.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | None = None):
        self.nvars = int(nvars)
        cleaned: dict[Exponents, int] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != self.nvars:
                raise ValueError(f"exponent vector {exps} has length != {self.nvars}")
            if coeff:
                cleaned[tuple(int(e) for e in exps)] = int(coeff)
        self.terms = cleaned

    @classmethod
    def zero(cls, nvars: int) -> "SparseMultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: int) -> "SparseMultiPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparseMultiPoly":
        """The monomial c_{index+1} (0-based index into the variables)."""
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SparseMultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "SparseMultiPoly") -> "SparseMultiPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable-count mismatch")
        merged = dict(self.terms)
        for exps, coeff in other.terms.items():
            merged[exps] = merged.get(exps, 0) + coeff
        return SparseMultiPoly(self.nvars, merged)

    def __neg__(self) -> "SparseMultiPoly":
        return SparseMultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparseMultiPoly") -> "SparseMultiPoly":
        return self + (-other)

    def __mul__(self, other: "SparseMultiPoly | int") -> "SparseMultiPoly":
        if isinstance(other, int):
            return SparseMultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if self.nvars != other.nvars:
            raise ValueError("variable-count mismatch")
        product: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                product[key] = product.get(key, 0) + c1 * c2
        return SparseMultiPoly(self.nvars, product)

    __rmul__ = __mul__

    def evaluate(self, values: Sequence[int]) -> int:
        """Exact evaluation at an integer point."""
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(values)}")
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for value, exp in zip(values, exps):
                if exp:
                    term *= value**exp
            total += term
        return total

    def total_degrees(self) -> set[int]:
        return {sum(exps) for exps in self.terms}

    def canonical_text(self) -> str:
        """Canonical rendering: terms sorted by exponent vector, zero exponents
        omitted, e.g. `2*c1*c2^2 + c3`."""
        if not self.terms:
            return "0"
        chunks = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"c{i + 1}")
                elif e > 1:
                    factors.append(f"c{i + 1}^{e}")
            if not factors:
                chunks.append(str(coeff))
            elif coeff == 1:
                chunks.append("*".join(factors))
            elif coeff == -1:
                chunks.append("-" + "*".join(factors))
            else:
                chunks.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"SparseMultiPoly({self.nvars}, {self.canonical_text()!r})"


LinearForm = tuple[tuple[int, int], ...]  # ((color, coefficient), ...)


@dataclass(frozen=True)
class ColoredLaplacian:
    """Laplacian with each edge weighted by the indeterminate of its color.

    Cell (i,j) for i != j is -c_color when the edge ij exists and zero
    otherwise; diagonal cell (i,i) sums the indeterminates of the edges at
    vertex i.  Rows sum to the zero form; setting every indeterminate to 1
    gives the combinatorial Laplacian D - A.
    """

    size: int
    ncolors: int
    cells: tuple[tuple[LinearForm, ...], ...]

    def evaluate(self, values: Sequence[int]) -> list[list[int]]:
        """Integer matrix obtained by substituting values[color-1] for each
        color indeterminate."""
        if len(values) != self.ncolors:
            raise ValueError(f"expected {self.ncolors} values, got {len(values)}")
        return [
            [sum(coeff * values[color - 1] for color, coeff in cell) for cell in row]
            for row in self.cells
        ]

    def poly_matrix(self) -> list[list[SparseMultiPoly]]:
        out = []
        for row in self.cells:
            poly_row = []
            for cell in row:
                terms: dict[Exponents, int] = {}
                for color, coeff in cell:
                    exps = [0] * self.ncolors
                    exps[color - 1] = 1
                    terms[tuple(exps)] = coeff
                poly_row.append(SparseMultiPoly(self.ncolors, terms))
            out.append(poly_row)
        return out


def colored_laplacian(g: EdgeColoredGraph) -> ColoredLaplacian:
    """Build the colored Laplacian of g; indeterminates cover 1..max(n-1, colors)."""
    n = g.vertex_count
    ncolors = max(n - 1, max((c for _, _, c in g.edges), default=0))
    grid: list[list[dict[int, int]]] = [[{} for _ in range(n)] for _ in range(n)]
    for u, v, c in g.edges:
        grid[u][v][c] = grid[u][v].get(c, 0) - 1
        grid[v][u][c] = grid[v][u].get(c, 0) - 1
        grid[u][u][c] = grid[u][u].get(c, 0) + 1
        grid[v][v][c] = grid[v][v].get(c, 0) + 1
    cells = tuple(
        tuple(tuple(sorted(cell.items())) for cell in row) for row in grid
    )
    return ColoredLaplacian(size=n, ncolors=ncolors, cells=cells)


def det_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination.

    Every intermediate division is exact; singular matrices return 0.  The
    empty matrix has determinant 1.
    """
    n = len(matrix)
    a = [[int(x) for x in row] for row in matrix]
    for row in a:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _poly_det(matrix: list[list[SparseMultiPoly]], nvars: int) -> SparseMultiPoly:
    """Determinant of a polynomial matrix by subset dynamic programming.

    D[S] is the determinant of the submatrix on rows 0..|S|-1 and column set
    S, built by expansion along the last row; 2^k polynomial rows in total.
    """
    k = len(matrix)
    if k == 0:
        return SparseMultiPoly.constant(nvars, 1)
    table: list[SparseMultiPoly | None] = [None] * (1 << k)
    table[0] = SparseMultiPoly.constant(nvars, 1)
    for subset in range(1, 1 << k):
        row = subset.bit_count() - 1
        acc = SparseMultiPoly.zero(nvars)
        position = 0
        for col in range(k):
            if subset >> col & 1:
                entry = matrix[row][col]
                if entry:
                    term = entry * table[subset ^ (1 << col)]
                    acc = acc + term if (row + position) % 2 == 0 else acc - term
                position += 1
        table[subset] = acc
    return table[(1 << k) - 1]


def tree_generating_function(g: EdgeColoredGraph, drop: int | None = None) -> SparseMultiPoly:
    """Spanning-tree generating function: det of a principal cofactor of the
    colored Laplacian.

    Each spanning tree contributes the product of its edge-color
    indeterminates, so the polynomial is homogeneous of degree n-1 and does
    not depend on which row/column is deleted (`drop`, default the last).
    Symbolic; guarded at vertex_count <= 8.
    """
    n = g.vertex_count
    if n > 8:
        raise ScaleLimitError(f"symbolic determinant guard: vertex_count <= 8, got {n}")
    laplacian = colored_laplacian(g)
    if drop is None:
        drop = n - 1
    if not 0 <= drop < n:
        raise ValueError(f"drop index {drop} out of range")
    full = laplacian.poly_matrix()
    cofactor = [
        [full[i][j] for j in range(n) if j != drop] for i in range(n) if i != drop
    ]
    return _poly_det(cofactor, laplacian.ncolors)


def multilinear_coeff(f: SparseMultiPoly) -> int:
    """Coefficient of the all-ones exponent vector (0 when absent)."""
    return f.terms.get((1,) * f.nvars, 0)


def rainbow_count_mtt(g: EdgeColoredGraph) -> int:
    """Rainbow-spanning-tree count via the colored Laplacian, no symbolics.

    The coefficient of c_1*...*c_{n-1} equals the alternating sum over color
    subsets S of det(cofactor evaluated at the indicator of S), because every
    monomial of the generating function has total degree n-1 and only the
    full-support monomial is multilinear.  Works for any coloring with colors
    in [1, n-1] (rainbow cycles permitted; missing colors give 0).
    Guarded at vertex_count <= 20 (2^{n-1} determinants).
    """
    n = g.vertex_count
    if n > 20:
        raise ScaleLimitError(
            f"inclusion-exclusion guard: vertex_count <= 20 (2^(n-1) determinants), got {n}"
        )
    if any(c > n - 1 for _, _, c in g.edges):
        bad = max(c for _, _, c in g.edges)
        raise ValueError(f"colors must lie in [1, {n - 1}] for the multilinear count, got {bad}")
    k = n - 1
    laplacian = colored_laplacian(g)
    cells = [
        [laplacian.cells[i][j] for j in range(n - 1)] for i in range(n - 1)
    ]
    total = 0
    for subset in range(1 << k):
        matrix = [
            [
                sum(coeff for color, coeff in cell if subset >> (color - 1) & 1)
                for cell in row
            ]
            for row in cells
        ]
        d = det_bareiss(matrix)
        if d:
            total += d if (k - subset.bit_count()) % 2 == 0 else -d
    return total


def kirchhoff_count(g: EdgeColoredGraph) -> int:
    """Total spanning-tree count: integer Laplacian cofactor determinant."""
    n = g.vertex_count
    degree = [0] * n
    adj = [[0] * n for _ in range(n)]
    for u, v, _ in g.edges:
        degree[u] += 1
        degree[v] += 1
        adj[u][v] = 1
        adj[v][u] = 1
    cofactor = [
        [(degree[i] if i == j else -adj[i][j]) for j in range(n - 1)]
        for i in range(n - 1)
    ]
    return det_bareiss(cofactor)
