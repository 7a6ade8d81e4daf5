"""The 2-fold interlacement of a spine graph.

Every spine vertex v splits into two twins: the primed copy (v, 0) and
the double-primed copy (v, 1). Twins are never adjacent; every spine
edge {u, v} is replaced by all four cross edges between the copies of
u and the copies of v, so the interlacement has 2V vertices and 4E
edges.

Internally twin vertices are encoded as integers 2 * spine_id + copy,
which keeps the interlacement an ordinary Graph and sorts primarily by
spine id. In text formats a twin is written ``<id>.0`` or ``<id>.1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import Graph, ParseError, _strip_comment


class TwinVertex(NamedTuple):
    spine_id: int
    copy: int  # 0 = primed, 1 = double-primed


def encode_twin(tv: TwinVertex) -> int:
    return 2 * tv.spine_id + tv.copy


def decode_twin(x: int) -> TwinVertex:
    return TwinVertex(x // 2, x % 2)


def project(tv: TwinVertex) -> int:
    """Spine vertex a twin came from."""
    return tv.spine_id


def twin_token(tv: TwinVertex) -> str:
    return f"{tv.spine_id}.{tv.copy}"


def parse_twin_token(token: str, lineno: int | None = None) -> TwinVertex:
    where = f"line {lineno}: " if lineno is not None else ""
    head, sep, tail = token.partition(".")
    if not sep or tail not in ("0", "1"):
        raise ParseError(f"{where}expected twin token '<id>.0' or '<id>.1', got {token!r}")
    try:
        spine_id = int(head)
    except ValueError:
        raise ParseError(f"{where}expected decimal id in twin token {token!r}") from None
    if spine_id < 0:
        raise ParseError(f"{where}negative vertex id in twin token {token!r}")
    return TwinVertex(spine_id, int(tail))


@dataclass(frozen=True)
class Interlacement:
    """A spine together with its 2-fold interlacement graph.

    ``graph`` is over encoded twin ids; the twin map is implicit in the
    encoding.
    """

    spine: Graph
    graph: Graph


def interlace(spine: Graph) -> Interlacement:
    """Build the 2-fold interlacement of a spine.

    Isolated spine vertices are permitted and yield two isolated
    twins each.
    """
    vertices = [encode_twin(TwinVertex(v, c)) for v in spine.vertices for c in (0, 1)]
    edges = [
        (2 * u + a, 2 * v + b)
        for u, v in spine.edges
        for a in (0, 1)
        for b in (0, 1)
    ]
    return Interlacement(spine=spine, graph=Graph(vertices, edges))


def format_twin_edge_list(graph: Graph) -> str:
    """Emit a twin-labeled graph in the ``.edges`` format."""
    lines = [f"v {twin_token(decode_twin(v))}" for v in graph.isolated_vertices()]
    lines.extend(
        f"{twin_token(decode_twin(u))} {twin_token(decode_twin(v))}" for u, v in graph.edges
    )
    return "\n".join(lines) + ("\n" if lines else "")


def parse_twin_edge_list(text: str) -> Graph:
    """Parse a twin-labeled ``.edges`` file into a graph over encoded ids."""
    vertices: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "v":
            if len(tokens) != 2:
                raise ParseError(f"line {lineno}: vertex declaration needs exactly one token")
            vertices.add(encode_twin(parse_twin_token(tokens[1], lineno)))
        elif len(tokens) == 2:
            u = encode_twin(parse_twin_token(tokens[0], lineno))
            v = encode_twin(parse_twin_token(tokens[1], lineno))
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at {tokens[0]}")
            edges.add((min(u, v), max(u, v)))
        else:
            raise ParseError(f"line {lineno}: expected 'v <token>' or '<token> <token>'")
    return Graph(vertices, edges)
