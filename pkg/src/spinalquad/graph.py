"""Simple undirected graphs over nonnegative integer vertex ids.

This is the base layer of the toolkit: immutable graphs plus the
connectivity and cycle-rank primitives everything downstream consumes.
All outputs are reported in ascending id order so results are
byte-reproducible.
"""

from __future__ import annotations

from typing import Iterable

Edge = tuple[int, int]


class ParseError(ValueError):
    """Malformed text input; the message names the offending line."""


def _normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph.

    Vertices are arbitrary nonnegative integers, not necessarily
    contiguous. Edge endpoints are added to the vertex set
    automatically; self-loops and negative ids are rejected, duplicate
    edges collapse. Neighbor lists are kept in ascending order.
    """

    __slots__ = ("_vertices", "_edges", "_adj")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        vs = {int(v) for v in vertices}
        es = {_normalize_edge(int(u), int(v)) for u, v in edges}
        for u, v in es:
            vs.add(u)
            vs.add(v)
        for v in vs:
            if v < 0:
                raise ValueError(f"negative vertex id {v}")
        self._vertices: tuple[int, ...] = tuple(sorted(vs))
        self._edges: tuple[Edge, ...] = tuple(sorted(es))
        adj: dict[int, list[int]] = {v: [] for v in self._vertices}
        for u, v in self._edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj: dict[int, tuple[int, ...]] = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self._vertices if not self._adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph({len(self._vertices)} vertices, {len(self._edges)} edges)"


# A vertex partition is a list of disjoint blocks covering the vertex
# set; blocks and their members are in ascending order.
VertexPartition = list[tuple[int, ...]]


def components(g: Graph) -> VertexPartition:
    """Connected components of ``g``, each block sorted ascending.

    The number of blocks is the 0th Betti number of the graph.
    """
    seen: set[int] = set()
    blocks: VertexPartition = []
    for root in g.vertices:
        if root in seen:
            continue
        block = [root]
        seen.add(root)
        stack = [root]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    block.append(u)
                    stack.append(u)
        blocks.append(tuple(sorted(block)))
    return blocks


def cycle_rank(g: Graph) -> int:
    """First Betti number of the graph: edges - vertices + components.

    Counts independent cycles; additive over components and zero
    exactly on forests.
    """
    return len(g.edges) - len(g.vertices) + len(components(g))


def spanning_forest(g: Graph) -> tuple[Edge, ...]:
    """Edges of a maximal acyclic subgraph, chosen deterministically.

    Breadth-first from the smallest vertex of each component, scanning
    neighbors in ascending order. The number of co-forest edges equals
    cycle_rank(g).
    """
    seen: set[int] = set()
    tree: list[Edge] = []
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    tree.append(_normalize_edge(v, u))
                    queue.append(u)
    return tuple(sorted(tree))


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_id(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: expected decimal integer, got {token!r}") from None
    if value < 0:
        raise ParseError(f"line {lineno}: negative vertex id {value}")
    return value


def parse_edge_list(text: str) -> Graph:
    """Parse the ``.edges`` text format.

    One declaration per line: ``v <id>`` for a possibly-isolated
    vertex, ``<id> <id>`` for an edge. ``#`` starts a comment.
    Duplicates collapse; malformed lines, self-loops and negative ids
    raise ParseError naming the line.
    """
    vertices: set[int] = set()
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "v":
            if len(tokens) != 2:
                raise ParseError(f"line {lineno}: vertex declaration needs exactly one id")
            vertices.add(_parse_id(tokens[1], lineno))
        elif len(tokens) == 2:
            u = _parse_id(tokens[0], lineno)
            v = _parse_id(tokens[1], lineno)
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at vertex {u}")
            edges.add(_normalize_edge(u, v))
        else:
            raise ParseError(f"line {lineno}: expected 'v <id>' or '<id> <id>'")
    return Graph(vertices, edges)


def format_edge_list(g: Graph) -> str:
    """Emit the ``.edges`` format; parse_edge_list round-trips it."""
    lines = [f"v {v}" for v in g.isolated_vertices()]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + ("\n" if lines else "")
