"""Index-stable undirected multigraph and its edit primitives.

Node and edge ids are never compacted: deletion only flips a liveness flag
and a dead edge keeps its last endpoints.  This keeps ids valid across the
whole pipeline, which is what lets certificates refer to edges of the input
graph by index no matter how many intermediate graphs were derived from it.

Graphs behave as values: every public edit returns a new graph, and an
instance is never mutated after an edit returns, so instances can be shared
freely between threads for reading.  The ``_inplace`` helpers exist for
code that owns a private working copy.
"""

from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed graph input."""


class GraphUsageError(ValueError):
    """Operation applied to a dead node/edge or otherwise out of contract."""


class ContractError(ValueError):
    """Edge contraction applied to a self-loop or dead edge."""


class MultiGraph:
    """Undirected multigraph with stable, never-reused slots.

    Self-loops appear twice in their node's incidence list, so
    ``degree(v) == len(incidence list)`` always holds.
    """

    __slots__ = ("_ends", "_edge_alive", "_inc", "_node_alive", "labels")

    def __init__(self) -> None:
        self._ends: list[tuple[int, int] | None] = []
        self._edge_alive: list[bool] = []
        self._inc: list[list[int]] = []
        self._node_alive: list[bool] = []
        self.labels: list[int] = []

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges) -> "MultiGraph":
        """Build a graph on nodes 0..n-1 (labels equal ids)."""
        g = cls()
        for v in range(n):
            g.add_node(v)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def add_node(self, label: int | None = None) -> int:
        nid = len(self._node_alive)
        self._node_alive.append(True)
        self._inc.append([])
        self.labels.append(nid if label is None else label)
        return nid

    def ensure_node(self, nid: int, label: int | None = None) -> int:
        """Make node id `nid` exist and be alive (used by replays)."""
        while len(self._node_alive) <= nid:
            self._node_alive.append(False)
            self._inc.append([])
            self.labels.append(len(self.labels))
        if self._node_alive[nid]:
            raise GraphUsageError(f"node {nid} already alive")
        self._node_alive[nid] = True
        if label is not None:
            self.labels[nid] = label
        return nid

    def add_edge(self, u: int, v: int, eid: int | None = None) -> int:
        """Add a live edge.  A caller-supplied id may only fill a dead slot."""
        if not (self._node_alive[u] and self._node_alive[v]):
            raise GraphUsageError(f"endpoint of ({u},{v}) is dead")
        if eid is None:
            eid = len(self._ends)
        while len(self._ends) <= eid:
            self._ends.append(None)
            self._edge_alive.append(False)
        if self._edge_alive[eid]:
            raise GraphUsageError(f"edge id {eid} already alive")
        self._ends[eid] = (u, v)
        self._edge_alive[eid] = True
        self._inc[u].append(eid)
        self._inc[v].append(eid)
        return eid

    # -- queries ----------------------------------------------------------

    def node_alive(self, v: int) -> bool:
        return 0 <= v < len(self._node_alive) and self._node_alive[v]

    def edge_alive(self, e: int) -> bool:
        return 0 <= e < len(self._edge_alive) and self._edge_alive[e]

    def ends(self, e: int) -> tuple[int, int]:
        ends = self._ends[e]
        if ends is None:
            raise GraphUsageError(f"edge {e} was never created")
        return ends

    def other_end(self, e: int, v: int) -> int:
        u, w = self.ends(e)
        return w if u == v else u

    def degree(self, v: int) -> int:
        return len(self._inc[v])

    def incident(self, v: int) -> list[int]:
        """Live edge ids at v (self-loops listed twice)."""
        return self._inc[v]

    def neighbors(self, v: int) -> set[int]:
        return {self.other_end(e, v) for e in self._inc[v]}

    def edge_between(self, u: int, v: int) -> int | None:
        """Smallest live edge id joining u and v, or None."""
        best = None
        for e in self._inc[u]:
            if self.other_end(e, u) == v and (best is None or e < best):
                best = e
        return best

    def live_nodes(self) -> list[int]:
        return [v for v, a in enumerate(self._node_alive) if a]

    def live_edges(self) -> list[int]:
        return [e for e, a in enumerate(self._edge_alive) if a]

    @property
    def n_live_nodes(self) -> int:
        return sum(self._node_alive)

    @property
    def n_live_edges(self) -> int:
        return sum(self._edge_alive)

    def min_degree(self) -> int:
        degs = [len(self._inc[v]) for v, a in enumerate(self._node_alive) if a]
        return min(degs) if degs else 0

    def label_to_id(self) -> dict[int, int]:
        return {self.labels[v]: v for v, a in enumerate(self._node_alive) if a}

    # -- edits ------------------------------------------------------------

    def kill_edge(self, e: int) -> None:
        if not self.edge_alive(e):
            raise GraphUsageError(f"edge {e} is not alive")
        u, v = self._ends[e]
        self._edge_alive[e] = False
        self._inc[u].remove(e)
        if u != v:
            self._inc[v].remove(e)
        else:
            self._inc[u].remove(e)

    def kill_node(self, v: int) -> None:
        if not self.node_alive(v):
            raise GraphUsageError(f"node {v} is not alive")
        if self._inc[v]:
            raise GraphUsageError(f"node {v} still has live edges")
        self._node_alive[v] = False

    def copy(self) -> "MultiGraph":
        g = MultiGraph.__new__(MultiGraph)
        g._ends = self._ends[:]
        g._edge_alive = self._edge_alive[:]
        g._inc = [lst[:] for lst in self._inc]
        g._node_alive = self._node_alive[:]
        g.labels = self.labels[:]
        return g


@dataclass(frozen=True)
class SimplifyReport:
    """What `simplify` removed.  3-connectivity is unaffected by either kind."""

    removed_self_loops: int = 0
    merged_parallel_classes: tuple[tuple[int, tuple[int, ...]], ...] = ()


def parse_graph(data: bytes | str, fmt: str = "edge-list") -> MultiGraph:
    """Parse an edge-list or DIMACS graph.

    Node ids are assigned densely (0-based) in sorted order of the input
    labels; the original labels are kept on the graph.  Duplicate lines
    become parallel edges.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if fmt == "edge-list":
        return _parse_edge_list(data)
    if fmt == "dimacs":
        return _parse_dimacs(data)
    raise ParseError(f"unknown format {fmt!r}")


def _parse_edge_list(text: str) -> MultiGraph:
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer node label") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative node label")
        pairs.append((u, v))
    labels = sorted({x for p in pairs for x in p})
    ids = {lab: i for i, lab in enumerate(labels)}
    g = MultiGraph()
    for lab in labels:
        g.add_node(lab)
    for u, v in pairs:
        g.add_edge(ids[u], ids[v])
    return g


def _parse_dimacs(text: str) -> MultiGraph:
    n = m = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {lineno}: bad problem line")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: bad problem line") from None
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: negative size")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer node label") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: node label out of range 1..{n}")
            pairs.append((u, v))
        else:
            raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ParseError("missing problem line")
    if m is not None and m != len(pairs):
        raise ParseError(f"problem line declares {m} edges, found {len(pairs)}")
    g = MultiGraph()
    for lab in range(1, n + 1):
        g.add_node(lab)
    for u, v in pairs:
        g.add_edge(u - 1, v - 1)
    return g


def serialize_graph(g: MultiGraph) -> str:
    """Sorted 'u v' lines using the original labels."""
    lines = []
    for e in g.live_edges():
        u, v = g.ends(e)
        lu, lv = g.labels[u], g.labels[v]
        lines.append((min(lu, lv), max(lu, lv)))
    lines.sort()
    return "".join(f"{u} {v}\n" for u, v in lines)


def simplify(g: MultiGraph) -> tuple[MultiGraph, SimplifyReport]:
    """Drop self-loops and merge parallel edges (keeping the lowest id)."""
    out = g.copy()
    loops = 0
    by_pair: dict[tuple[int, int], list[int]] = {}
    for e in out.live_edges():
        u, v = out.ends(e)
        if u == v:
            out.kill_edge(e)
            loops += 1
        else:
            by_pair.setdefault((min(u, v), max(u, v)), []).append(e)
    merged = []
    for pair in sorted(by_pair):
        eids = sorted(by_pair[pair])
        if len(eids) > 1:
            for dup in eids[1:]:
                out.kill_edge(dup)
            merged.append((eids[0], tuple(eids[1:])))
    return out, SimplifyReport(loops, tuple(merged))


def smoothable(g: MultiGraph, v: int) -> bool:
    if not g.node_alive(v):
        raise GraphUsageError(f"node {v} is not alive")
    return g.degree(v) == 2 and len(g.neighbors(v)) == 2 and v not in g.neighbors(v)


def smooth(g: MultiGraph, v: int, reuse_edge_id: int | None = None) -> MultiGraph:
    """Replace a degree-2 node by an edge between its two neighbors.

    If the conditions (degree 2, two distinct neighbors, no self-loop) are
    violated the graph is returned unchanged.  `reuse_edge_id` may name a
    dead slot to receive the replacement edge; by default a fresh id is used.
    """
    if not smoothable(g, v):
        return g
    out = g.copy()
    smooth_inplace(out, v, reuse_edge_id)
    return out


def smooth_inplace(g: MultiGraph, v: int, reuse_edge_id: int | None = None) -> int:
    """In-place smooth; returns the replacement edge id.

    Endpoints are stored as (far end of the lower-id incident edge, far
    end of the higher-id one) for determinism.
    """
    e1, e2 = sorted(g._inc[v])
    p = g.other_end(e1, v)
    q = g.other_end(e2, v)
    g.kill_edge(e1)
    g.kill_edge(e2)
    g.kill_node(v)
    return g.add_edge(p, q, eid=reuse_edge_id)


def contract_edge(g: MultiGraph, e: int) -> MultiGraph:
    """Contract edge e into its lower-id endpoint.

    Parallel classes arising at the merged node are collapsed to their
    lowest-id edge and self-loops created by the identification are dropped,
    so a simple graph stays simple.
    """
    if not g.edge_alive(e):
        raise ContractError(f"edge {e} is not alive")
    u, v = g.ends(e)
    if u == v:
        raise ContractError(f"edge {e} is a self-loop")
    out = g.copy()
    contract_edge_inplace(out, e)
    return out


def contract_edge_inplace(g: MultiGraph, e: int) -> int:
    u, v = g.ends(e)
    s, t = min(u, v), max(u, v)
    g.kill_edge(e)
    # Rewire every live edge at t; copies of e become loops at s and die.
    for eid in list(dict.fromkeys(g._inc[t])):
        a, b = g.ends(eid)
        na = s if a == t else a
        nb = s if b == t else b
        g.kill_edge(eid)
        if na == nb == s:
            continue
        g.add_edge(na, nb, eid=eid)
    g.kill_node(t)
    # Merge parallel classes at the survivor.
    groups: dict[int, list[int]] = {}
    for eid in g._inc[s]:
        groups.setdefault(g.other_end(eid, s), []).append(eid)
    for other in sorted(groups):
        eids = sorted(set(groups[other]))
        for dup in eids[1:]:
            g.kill_edge(dup)
    return s


def connected_components(g: MultiGraph) -> list[set[int]]:
    """Partition of the live nodes into connected sets, ordered by minimum."""
    seen: set[int] = set()
    comps: list[set[int]] = []
    for start in g.live_nodes():
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for eid in g._inc[x]:
                y = g.other_end(eid, x)
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: MultiGraph) -> bool:
    return len(connected_components(g)) <= 1
