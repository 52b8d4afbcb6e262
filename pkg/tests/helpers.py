"""Shared graph builders for the test suite."""

from __future__ import annotations

import random

from tricert import MultiGraph

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def k4() -> MultiGraph:
    return MultiGraph.from_edges(4, K4_EDGES)


def complete(n: int) -> MultiGraph:
    return MultiGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> MultiGraph:
    return MultiGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> MultiGraph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph.from_edges(10, edges)


def gnp(n: int, p: float, seed: int) -> MultiGraph:
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return MultiGraph.from_edges(n, edges)


def from_mask(n: int, mask: int) -> MultiGraph:
    """Graph on n nodes from a bitmask over the ordered pair list."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
    return MultiGraph.from_edges(n, edges)


def counterexample_graph() -> MultiGraph:
    """K4 on labels 1..4 plus a fifth node adjacent to 1, 2, 3.

    Prescribing the K4 forces a parallel-making step: no basic sequence
    exists from that start, but a non-basic one does.
    """
    text = "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n1 5\n2 5\n3 5\n"
    from tricert import parse_graph

    return parse_graph(text)


# Instance from the worked example: a K4-subdivision S0 with branch nodes
# a, c, d, f grown by the path e -> h -> g.  Labels chosen so the lowest
# interior node id is e (the search start the sequence expects).
FIG_IDS = {"a": 0, "e": 1, "h": 2, "g": 3, "b": 4, "c": 5, "d": 6, "f": 7}

_FIG_S0_EDGES = [
    ("a", "b"), ("b", "c"), ("a", "e"), ("e", "f"), ("d", "g"),
    ("g", "f"), ("a", "d"), ("c", "f"), ("c", "d"),
]
_FIG_C0_EDGES = [("e", "h"), ("h", "g")]


def figure_host() -> tuple[MultiGraph, list[int], list[int]]:
    """Returns (graph S1, ids of the S0 edges, ids of the added-path edges)."""
    g = MultiGraph()
    for _ in range(8):
        g.add_node()
    s0 = [g.add_edge(FIG_IDS[u], FIG_IDS[v]) for u, v in _FIG_S0_EDGES]
    c0 = [g.add_edge(FIG_IDS[u], FIG_IDS[v]) for u, v in _FIG_C0_EDGES]
    return g, s0, c0
