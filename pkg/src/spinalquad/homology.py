"""Exact rational Betti numbers of simplicial complexes of dimension <= 2.

Complexes are abstract and downward-closed. Ranks of the boundary
operators are computed by fraction-free elimination over arbitrary
precision integers, so every reported number is exact; no floating
point is involved anywhere. Torsion is deliberately ignored: only the
rational Betti numbers are reported.

Orientation convention: listing a simplex's vertices in ascending
order defines its positive orientation, and boundary signs alternate
from there. Matrix rows and columns are ordered by sorted simplex
tuple, which makes every matrix, rank, and Betti vector reproducible.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .graph import Graph, ParseError, _strip_comment

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


class BettiVector(NamedTuple):
    b0: int
    b1: int
    b2: int


class SimplicialComplex:
    """Immutable abstract simplicial complex of dimension at most 2.

    The constructor completes the downward closure: every edge of every
    triangle and every endpoint of every edge is added automatically.
    Simplices with repeated vertices are rejected.
    """

    __slots__ = ("_vertices", "_edges", "_triangles")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[tuple[int, int]] = (),
        triangles: Iterable[tuple[int, int, int]] = (),
    ):
        vs = {int(v) for v in vertices}
        es: set[Edge] = set()
        ts: set[Triangle] = set()
        for t in triangles:
            tt = tuple(sorted(int(x) for x in t))
            if len(tt) != 3 or len(set(tt)) != 3:
                raise ValueError(f"triangle with repeated vertex: {t}")
            ts.add(tt)  # type: ignore[arg-type]
            es.update(((tt[0], tt[1]), (tt[0], tt[2]), (tt[1], tt[2])))
        for e in edges:
            ee = tuple(sorted(int(x) for x in e))
            if len(ee) != 2 or ee[0] == ee[1]:
                raise ValueError(f"edge with repeated vertex: {e}")
            es.add(ee)  # type: ignore[arg-type]
        for u, v in es:
            vs.add(u)
            vs.add(v)
        if any(v < 0 for v in vs):
            raise ValueError("negative vertex id")
        self._vertices = tuple(sorted(vs))
        self._edges = tuple(sorted(es))
        self._triangles = tuple(sorted(ts))

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def triangles(self) -> tuple[Triangle, ...]:
        return self._triangles

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._edges == other._edges
            and self._triangles == other._triangles
        )

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges, self._triangles))

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex({len(self._vertices)} vertices, "
            f"{len(self._edges)} edges, {len(self._triangles)} triangles)"
        )


def from_graph(g: Graph) -> SimplicialComplex:
    """View a graph as a 1-dimensional complex."""
    return SimplicialComplex(vertices=g.vertices, edges=g.edges)


def matrix_rank_exact(rows: list[list[int]]) -> int:
    """Rank over the rationals of an integer matrix.

    One-step fraction-free (Bareiss) elimination: every intermediate
    entry is an exact integer, every division is exact, and the pivot
    count is the rank. Row order is whatever the caller passed; the
    rank does not depend on it.
    """
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def boundary_matrix(k: int, complex: SimplicialComplex) -> list[list[int]]:
    """Integer matrix of the k-th boundary operator, k in {1, 2}.

    Rows are indexed by the (k-1)-simplices and columns by the
    k-simplices, both in sorted-tuple order. The boundary of an
    ascending simplex drops its i-th vertex with sign (-1)^i.
    """
    if k == 1:
        row_index = {(v,): i for i, v in enumerate(complex.vertices)}
        cols = complex.edges
    elif k == 2:
        row_index = {e: i for i, e in enumerate(complex.edges)}
        cols = complex.triangles
    else:
        raise ValueError(f"boundary operator index must be 1 or 2, got {k}")
    matrix = [[0] * len(cols) for _ in row_index]
    for j, simplex in enumerate(cols):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1 :]
            matrix[row_index[face]][j] += (-1) ** i
    return matrix


def boundary_rank(k: int, complex: SimplicialComplex) -> int:
    """Exact rank of the k-th boundary operator over the rationals."""
    return matrix_rank_exact(boundary_matrix(k, complex))


def betti_numbers(complex: SimplicialComplex) -> BettiVector:
    """Rational Betti numbers (b0, b1, b2) by rank-nullity.

    With r1 = rank of the edge boundary and r2 = rank of the triangle
    boundary: b0 = |V| - r1, b1 = |E| - r1 - r2, b2 = |T| - r2.
    """
    r1 = boundary_rank(1, complex)
    r2 = boundary_rank(2, complex)
    return BettiVector(
        b0=len(complex.vertices) - r1,
        b1=len(complex.edges) - r1 - r2,
        b2=len(complex.triangles) - r2,
    )


class EulerPoincareReport(NamedTuple):
    ok: bool
    euler_characteristic: int
    betti: BettiVector


def euler_poincare_check(complex: SimplicialComplex) -> EulerPoincareReport:
    """Check |V| - |E| + |T| == b0 - b1 + b2.

    This identity holds for every complex; a False result signals an
    internal bug in the rank computation and is surfaced as a
    verification failure rather than an exception.
    """
    chi = len(complex.vertices) - len(complex.edges) + len(complex.triangles)
    b = betti_numbers(complex)
    return EulerPoincareReport(ok=(chi == b.b0 - b.b1 + b.b2), euler_characteristic=chi, betti=b)


def parse_complex(text: str) -> SimplicialComplex:
    """Parse the ``.sc`` text format.

    Each non-comment line lists 1, 2, or 3 distinct decimal ids (a
    vertex, an edge, or a triangle). The downward closure is completed
    on load. Repeated vertices within a simplex and simplices of
    dimension greater than 2 are parse errors naming the line.
    """
    vertices: set[int] = set()
    edges: set[Edge] = set()
    triangles: set[Triangle] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        try:
            ids = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"line {lineno}: expected decimal integers") from None
        if any(v < 0 for v in ids):
            raise ParseError(f"line {lineno}: negative vertex id")
        if len(ids) > 3:
            raise ParseError(f"line {lineno}: simplex of dimension > 2")
        if len(set(ids)) != len(ids):
            raise ParseError(f"line {lineno}: repeated vertex within a simplex")
        if len(ids) == 1:
            vertices.add(ids[0])
        elif len(ids) == 2:
            edges.add(tuple(sorted(ids)))  # type: ignore[arg-type]
        else:
            triangles.add(tuple(sorted(ids)))  # type: ignore[arg-type]
    return SimplicialComplex(vertices, edges, triangles)


def format_complex(complex: SimplicialComplex) -> str:
    """Emit the ``.sc`` format, listing maximal simplices only."""
    in_edge = {v for e in complex.edges for v in e}
    in_triangle = {e for t in complex.triangles for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))}
    lines = [str(v) for v in complex.vertices if v not in in_edge]
    lines.extend(f"{u} {v}" for u, v in complex.edges if (u, v) not in in_triangle)
    lines.extend(f"{a} {b} {c}" for a, b, c in complex.triangles)
    return "\n".join(lines) + ("\n" if lines else "")
