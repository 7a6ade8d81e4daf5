"""Seeded generators and naive oracles shared across the test suite.

The oracles here are deliberately dumber than the library: exhaustive
coloring search with no bounds, and rational Gaussian elimination for
matrix rank. They exist to cross-check the clever implementations.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from spinalquad import Graph, SimplicialComplex


def random_graph_no_isolated(seed: int, max_vertices: int = 10) -> Graph:
    """Seeded random graph, 2..max_vertices vertices, none isolated.

    Density varies with the seed, so the sample mixes connected and
    disconnected graphs. Isolated vertices are patched with one extra
    edge each.
    """
    rng = random.Random(seed)
    n = rng.randint(2, max_vertices)
    density = rng.uniform(0.12, 0.55)
    edges = {e for e in combinations(range(n), 2) if rng.random() < density}
    g = Graph(range(n), edges)
    for v in g.isolated_vertices():
        w = rng.choice([u for u in range(n) if u != v])
        edges.add((min(v, w), max(v, w)))
    return Graph(range(n), edges)


def random_two_complex(seed: int, max_vertices: int = 8) -> SimplicialComplex:
    """Seeded random 2-complex; faces imply their edges and vertices."""
    rng = random.Random(seed)
    n = rng.randint(1, max_vertices)
    edges = [e for e in combinations(range(n), 2) if rng.random() < 0.3]
    triangles = [t for t in combinations(range(n), 3) if rng.random() < 0.12]
    return SimplicialComplex(vertices=range(n), edges=edges, triangles=triangles)


def colorable_brute(g: Graph, k: int) -> bool:
    order = list(g.vertices)
    colors: dict[int, int] = {}

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in range(k):
            if all(colors.get(u) != c for u in g.neighbors(v)):
                colors[v] = c
                if place(i + 1):
                    return True
                del colors[v]
        return False

    return place(0)


def chromatic_brute(g: Graph) -> int:
    """Chromatic number by plain depth-first search, no pruning.

    Keep inputs to at most 8 or so vertices.
    """
    if not g.vertices:
        return 0
    k = 1
    while not colorable_brute(g, k):
        k += 1
    return k


def mutate_quad_text(text: str, action: str) -> str:
    """Damage a well-formed quad file in a still-parseable way.

    Actions: ``delete`` drops the first face, ``duplicate`` repeats
    it, ``twinflip`` reverses its corner walk and toggles one twin
    mark. Verification must flag all three.
    """
    lines = text.strip().splitlines()
    header, faces = lines[0], lines[1:]
    if action == "delete":
        faces = faces[1:]
    elif action == "duplicate":
        faces = faces + [faces[0]]
    elif action == "twinflip":
        tokens = faces[0].split()
        corners = tokens[:4]
        corners = [corners[0]] + corners[:0:-1]
        head, _, copy = corners[1].partition(".")
        corners[1] = f"{head}.{1 - int(copy)}"
        faces[0] = " ".join(corners + [tokens[4]])
    else:
        raise ValueError(f"unknown mutation {action!r}")
    return "\n".join([header] + faces) + "\n"


def rank_by_fractions(rows: list[list[int]]) -> int:
    """Matrix rank over the rationals by textbook elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        lead = m[rank][col]
        for r in range(n_rows):
            if r != rank and m[r][col] != 0:
                factor = m[r][col] / lead
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank
