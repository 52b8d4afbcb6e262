"""Subdivisions of 3-connected graphs embedded in a host graph.

A subdivision S is tracked as node/edge membership inside a host graph,
together with its *links*: the maximal paths of S whose interior nodes have
degree 2 in S.  Nodes of degree >= 3 in S are *real*; links run between
real nodes and partition the edges of S.  Two links are *parallel* when
they join the same pair of real nodes.

Growth happens by attaching a path that meets S exactly in its two
endpoints, or by an expand step (a new center joined to three real nodes
by internally disjoint paths).  Both updates are incremental and can be
cross-checked by recomputing the link table from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import GraphUsageError, MultiGraph


class StructureError(ValueError):
    """Edge set does not form a subdivision of a 3-connected graph."""


class PathRejected(ValueError):
    """Attachment path violates one of the three validity conditions."""

    def __init__(self, condition: int, message: str = ""):
        super().__init__(message or f"path violates condition {condition}")
        self.condition = condition


class ExpandRejected(ValueError):
    """Expand step violates its preconditions."""


@dataclass(frozen=True)
class PathStep:
    """A path attached to the subdivision at exactly its two endpoints."""

    nodes: tuple[int, ...]

    def __post_init__(self):
        if len(self.nodes) < 2:
            raise ValueError("path needs at least one edge")

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.nodes[0], self.nodes[-1]

    @property
    def inner(self) -> tuple[int, ...]:
        return self.nodes[1:-1]


@dataclass(frozen=True)
class ExpandStep:
    """A new center joined to three distinct real nodes by disjoint arms.

    Arms are stored center-first and sorted by anchor id.
    """

    center: int
    arms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.arms) != 3:
            raise ValueError("expand needs exactly three arms")
        for arm in self.arms:
            if len(arm) < 2 or arm[0] != self.center:
                raise ValueError("each arm must start at the center")
        anchors = self.anchors
        if len(set(anchors)) != 3:
            raise ValueError("anchors must be pairwise distinct")
        if list(anchors) != sorted(anchors):
            raise ValueError("arms must be sorted by anchor id")

    @property
    def anchors(self) -> tuple[int, int, int]:
        return tuple(arm[-1] for arm in self.arms)  # type: ignore[return-value]


Step = PathStep | ExpandStep


@dataclass(frozen=True)
class Link:
    lid: int  # smallest contained edge id; stable and deterministic
    nodes: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.nodes[0], self.nodes[-1]

    @property
    def pair(self) -> tuple[int, int]:
        a, b = self.nodes[0], self.nodes[-1]
        return (a, b) if a <= b else (b, a)


def _normalize(nodes: list[int], edges: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if nodes[0] > nodes[-1]:
        nodes = nodes[::-1]
        edges = edges[::-1]
    return tuple(nodes), tuple(edges)


class Subdivision:
    """Mutable subdivision state over a fixed host graph.

    Treated as a value between steps: the public ``apply_*`` functions copy,
    while the ``*_inplace`` variants serve single-writer loops.
    """

    __slots__ = (
        "host",
        "in_nodes",
        "in_edges",
        "real",
        "links",
        "node_link",
        "edge_link",
        "by_pair",
        "n_nodes",
        "n_edges",
        "inner_count",
    )

    def __init__(self, host: MultiGraph):
        n = len(host._node_alive)
        m = len(host._edge_alive)
        self.host = host
        self.in_nodes = [False] * n
        self.in_edges = [False] * m
        self.real = [False] * n
        self.links: dict[int, Link] = {}
        self.node_link: list[int | None] = [None] * n
        self.edge_link: list[int | None] = [None] * m
        self.by_pair: dict[tuple[int, int], set[int]] = {}
        self.n_nodes = 0
        self.n_edges = 0
        self.inner_count = 0

    def copy(self) -> "Subdivision":
        s = Subdivision.__new__(Subdivision)
        s.host = self.host
        s.in_nodes = self.in_nodes[:]
        s.in_edges = self.in_edges[:]
        s.real = self.real[:]
        s.links = dict(self.links)
        s.node_link = self.node_link[:]
        s.edge_link = self.edge_link[:]
        s.by_pair = {k: set(v) for k, v in self.by_pair.items()}
        s.n_nodes = self.n_nodes
        s.n_edges = self.n_edges
        s.inner_count = self.inner_count
        return s

    def edge_ids(self) -> set[int]:
        return {e for e, inside in enumerate(self.in_edges) if inside}

    def node_ids(self) -> set[int]:
        return {v for v, inside in enumerate(self.in_nodes) if inside}

    def real_nodes(self) -> list[int]:
        return [v for v, r in enumerate(self.real) if r]

    def parallel_count(self, pair: tuple[int, int]) -> int:
        return len(self.by_pair.get(pair, ()))

    # -- internal table maintenance ----------------------------------------

    def _insert_link(self, nodes: list[int], edges: list[int]) -> int:
        nt, et = _normalize(nodes, edges)
        lid = min(et)
        link = Link(lid, nt, et)
        self.links[lid] = link
        for e in et:
            self.edge_link[e] = lid
        for v in nt[1:-1]:
            self.node_link[v] = lid
        self.by_pair.setdefault(link.pair, set()).add(lid)
        return lid

    def _remove_link(self, lid: int) -> Link:
        link = self.links.pop(lid)
        self.by_pair[link.pair].discard(lid)
        if not self.by_pair[link.pair]:
            del self.by_pair[link.pair]
        return link

    def _split_link_at(self, v: int) -> None:
        lid = self.node_link[v]
        assert lid is not None
        link = self._remove_link(lid)
        idx = link.nodes.index(v)
        left_n, left_e = list(link.nodes[: idx + 1]), list(link.edges[:idx])
        right_n, right_e = list(link.nodes[idx:]), list(link.edges[idx:])
        self.node_link[v] = None
        self.real[v] = True
        self.inner_count -= 1
        self._insert_link(left_n, left_e)
        self._insert_link(right_n, right_e)


def _walk_links(g: MultiGraph, in_edges, deg) -> list[tuple[list[int], list[int]]]:
    """Decompose an edge set into links; raises on non-subdivision shapes."""
    visited = [False] * len(g._edge_alive)
    out: list[tuple[list[int], list[int]]] = []
    n_edges = 0
    for start, d in enumerate(deg):
        if d < 3:
            continue
        for e0 in g._inc[start]:
            if not in_edges[e0] or visited[e0]:
                continue
            nodes = [start]
            edges = []
            cur_e, cur = e0, start
            while True:
                visited[cur_e] = True
                edges.append(cur_e)
                cur = g.other_end(cur_e, cur)
                nodes.append(cur)
                if deg[cur] >= 3:
                    break
                nxt = None
                for e in g._inc[cur]:
                    if in_edges[e] and e != cur_e:
                        nxt = e
                        break
                if nxt is None:
                    raise StructureError(f"dangling path at node {cur}")
                cur_e = nxt
            if nodes[0] == nodes[-1]:
                raise StructureError(f"link closes into a loop at node {start}")
            out.append((nodes, edges))
            n_edges += len(edges)
    total = sum(1 for e, inside in enumerate(in_edges) if inside)
    if n_edges != total:
        raise StructureError("edge set contains a component without branch nodes")
    return out


def build_subdivision(g: MultiGraph, s0_edges) -> Subdivision:
    """Initial subdivision from an explicit edge set.

    Checks the structural requirements: minimum degree 2 inside the set,
    at least four branch nodes, connectivity, distinct link endpoints and
    no two links joining the same pair (so the smoothed graph is simple).
    Whether the smoothed graph is actually 3-connected is not decided here.
    """
    s = Subdivision(g)
    deg = [0] * len(g._node_alive)
    for e in s0_edges:
        if not g.edge_alive(e):
            raise StructureError(f"edge {e} is not a live host edge")
        if s.in_edges[e]:
            raise StructureError(f"edge {e} listed twice")
        s.in_edges[e] = True
        u, v = g.ends(e)
        if u == v:
            raise StructureError(f"edge {e} is a self-loop")
        deg[u] += 1
        deg[v] += 1
    for v, d in enumerate(deg):
        if d == 1:
            raise StructureError(f"node {v} has degree 1 in the edge set")
        if d:
            s.in_nodes[v] = True
            s.n_nodes += 1
            if d >= 3:
                s.real[v] = True
    if s.n_nodes == 0:
        raise StructureError("empty edge set")
    branches = sum(s.real)
    if branches < 4:
        raise StructureError(f"only {branches} branch nodes; need at least 4")
    for nodes, edges in _walk_links(g, s.in_edges, deg):
        lid = s._insert_link(nodes, edges)
        if len(s.by_pair[s.links[lid].pair]) > 1:
            raise StructureError("two links share the same endpoints")
        s.n_edges += len(edges)
        s.inner_count += len(nodes) - 2
    # Connectivity: every member node must be reachable along member edges.
    start = next(v for v, inside in enumerate(s.in_nodes) if inside)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for e in g._inc[x]:
            if s.in_edges[e]:
                y = g.other_end(e, x)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    if len(seen) != s.n_nodes:
        raise StructureError("edge set is disconnected")
    return s


def recompute_links(s: Subdivision) -> dict[int, Link]:
    """Link table rebuilt from scratch; equals the incremental one."""
    g = s.host
    deg = [0] * len(g._node_alive)
    for e, inside in enumerate(s.in_edges):
        if inside:
            u, v = g.ends(e)
            deg[u] += 1
            deg[v] += 1
    table: dict[int, Link] = {}
    for nodes, edges in _walk_links(g, s.in_edges, deg):
        nt, et = _normalize(nodes, edges)
        table[min(et)] = Link(min(et), nt, et)
    return table


def resolve_step_edges(s: Subdivision, nodes) -> list[int] | None:
    """Pick the host edges realizing a step: per consecutive pair the
    smallest live edge outside S.  None when some pair has no such edge."""
    g = s.host
    out = []
    for u, v in zip(nodes, nodes[1:]):
        best = None
        for e in g._inc[u]:
            if not s.in_edges[e] and g.other_end(e, u) == v and (best is None or e < best):
                best = e
        if best is None:
            return None
        out.append(best)
    return out


def path_violation(s: Subdivision, nodes) -> int | None:
    """First violated attachment condition (1, 2 or 3), or None if valid.

    1: the path must meet S exactly in its two endpoints,
    2: the endpoints must not lie on one link other than as its two ends,
    3: the endpoints must not be interior to two parallel links.
    """
    nodes = tuple(nodes)
    if len(nodes) < 2 or len(set(nodes)) != len(nodes):
        raise GraphUsageError("not a simple path")
    g = s.host
    for u, v in zip(nodes, nodes[1:]):
        if not g.node_alive(u) or g.edge_between(u, v) is None:
            raise GraphUsageError(f"{u}-{v} is not a host edge")
    x, y = nodes[0], nodes[-1]
    if not (s.in_nodes[x] and s.in_nodes[y]):
        return 1
    if any(s.in_nodes[v] for v in nodes[1:-1]):
        return 1
    if resolve_step_edges(s, nodes) is None:
        return 1
    lx = s.node_link[x]
    ly = s.node_link[y]
    if lx is not None and y in s.links[lx].nodes:
        return 2
    if ly is not None and x in s.links[ly].nodes:
        return 2
    if lx is not None and ly is not None and s.links[lx].pair == s.links[ly].pair:
        return 3
    return None


def apply_path_inplace(s: Subdivision, step: PathStep) -> None:
    viol = path_violation(s, step.nodes)
    if viol is not None:
        raise PathRejected(viol)
    edges = resolve_step_edges(s, step.nodes)
    assert edges is not None
    x, y = step.endpoints
    for v in (x, y):
        if not s.real[v]:
            s._split_link_at(v)
    for v in step.inner:
        s.in_nodes[v] = True
        s.n_nodes += 1
        s.inner_count += 1
    for e in edges:
        s.in_edges[e] = True
    s.n_edges += len(edges)
    s._insert_link(list(step.nodes), edges)


def apply_path(s: Subdivision, step: PathStep) -> Subdivision:
    """Attach a path; returns the grown subdivision (input unchanged)."""
    out = s.copy()
    apply_path_inplace(out, step)
    return out


def apply_expand_inplace(s: Subdivision, step: ExpandStep) -> None:
    g = s.host
    if s.in_nodes[step.center]:
        raise ExpandRejected(f"center {step.center} already in the subdivision")
    seen: set[int] = {step.center}
    arm_edges: list[list[int]] = []
    for arm in step.arms:
        anchor = arm[-1]
        if not s.in_nodes[anchor] or not s.real[anchor]:
            raise ExpandRejected(f"anchor {anchor} is not a real node")
        for v in arm[1:-1]:
            if s.in_nodes[v]:
                raise ExpandRejected(f"arm revisits the subdivision at {v}")
            if v in seen:
                raise ExpandRejected(f"arms intersect at {v}")
            seen.add(v)
        if len(set(arm)) != len(arm):
            raise ExpandRejected("arm is not a simple path")
        edges = resolve_step_edges(s, arm)
        if edges is None:
            raise ExpandRejected("arm is not realizable by host edges outside S")
        arm_edges.append(edges)
    for arm, edges in zip(step.arms, arm_edges):
        for v in arm[:-1]:
            if not s.in_nodes[v]:
                s.in_nodes[v] = True
                s.n_nodes += 1
        for e in edges:
            s.in_edges[e] = True
        s.n_edges += len(edges)
        for v in arm[1:-1]:
            s.inner_count += 1
        s._insert_link(list(arm), edges)
    s.real[step.center] = True


def apply_expand(s: Subdivision, step: ExpandStep) -> Subdivision:
    """Attach an expand step; returns the grown subdivision."""
    out = s.copy()
    apply_expand_inplace(out, step)
    return out


def apply_step_inplace(s: Subdivision, step: Step) -> None:
    if isinstance(step, PathStep):
        apply_path_inplace(s, step)
    else:
        apply_expand_inplace(s, step)
