"""Certifying 3-connectedness test.

The pipeline simplifies the input, gates on size / connectivity / minimum
degree, sparsifies to O(n) edges, finds an initial K4-subdivision (or takes
a prescribed one) and then grows it one attachment path at a time until it
covers the sparsified graph; edges dropped by the sparsifier are appended
as single-edge steps (their endpoints are branch nodes by then).  Success
yields a construction-sequence certificate, failure a witness that is
re-validated against the original input.

Determinism: all choices break ties by smallest node id, then smallest
edge id, so identical inputs give byte-identical certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    GraphUsageError,
    MultiGraph,
    SimplifyReport,
    connected_components,
    simplify,
)
from .k4finder import Witness, find_k4_subdivision
from .sparsify import sparsify3
from .subdivision import (
    PathStep,
    Step,
    StructureError,
    Subdivision,
    apply_path_inplace,
    build_subdivision,
)
from .verifier import verify_witness


class InputError(ValueError):
    """Prescribed starting subdivision is structurally unusable."""


@dataclass(frozen=True)
class PathCertificate:
    """A construction sequence: initial edge set plus ordered steps.

    The step edge sets are pairwise disjoint and together with the initial
    edges cover every edge of the (simplified) graph.
    """

    s0_edges: tuple[int, ...]
    steps: tuple[Step, ...]
    basic: bool = False


@dataclass(frozen=True)
class CertifyResult:
    certificate: PathCertificate | None
    witness: Witness | None
    simplify_report: SimplifyReport
    leftover_edges: tuple[int, ...] = ()

    @property
    def certified(self) -> bool:
        return self.certificate is not None


def canonical_step(sub: Subdivision, nodes) -> PathStep:
    """Normalize a path step's direction before recording it.

    An endpoint that is interior to a link goes first; when both endpoints
    are branch nodes the smaller id goes first.  The certificate transforms
    reconstruct exactly these directions.
    """
    nodes = tuple(nodes)
    x, y = nodes[0], nodes[-1]
    x_inner = sub.node_link[x] is not None
    y_inner = sub.node_link[y] is not None
    if y_inner and not x_inner:
        return PathStep(nodes[::-1])
    if not x_inner and not y_inner and x > y:
        return PathStep(nodes[::-1])
    return PathStep(nodes)


def find_next_path(g: MultiGraph, sub: Subdivision):
    """One growth step: an attachment path for `sub` found inside `g`,
    or a Witness when the search proves a small separator.

    `g` is the graph being covered; it may be a spanning subgraph of the
    subdivision's host (same ids).  Raises when `sub` already covers `g`.
    """
    if sub.n_edges >= g.n_live_edges:
        raise GraphUsageError("subdivision already covers the graph")

    if sub.inner_count:
        return _search_from_link_interior(g, sub)
    return _search_between_branch_nodes(g, sub)


def _search_from_link_interior(g: MultiGraph, sub: Subdivision):
    x = next(v for v, lid in enumerate(sub.node_link) if lid is not None)
    link = sub.links[sub.node_link[x]]
    ta, tb = link.endpoints
    t_pair = link.pair
    t_nodes = set(link.nodes)

    def in_target(v: int) -> bool:
        # V(S) minus the link's nodes minus interiors of parallel links.
        if not sub.in_nodes[v] or v in t_nodes:
            return False
        lid = sub.node_link[v]
        return lid is None or sub.links[lid].pair != t_pair

    parent = {x: -1}
    stack = [x]
    goal = None
    while stack and goal is None:
        p = stack.pop()
        for e in sorted(g._inc[p]):
            q = g.other_end(e, p)
            if q in parent or q == ta or q == tb:
                continue
            parent[q] = p
            if in_target(q):
                goal = q
                break
            stack.append(q)
    if goal is None:
        return Witness("separation_pair", (min(ta, tb), max(ta, tb)))

    path = [goal]
    while path[-1] != x:
        path.append(parent[path[-1]])
    path.reverse()
    # Trim to start at the last node lying on the link or a parallel link.
    start = 0
    for idx, v in enumerate(path[:-1]):
        lid = sub.node_link[v]
        if v in t_nodes or (sub.in_nodes[v] and lid is not None and sub.links[lid].pair == t_pair):
            start = idx
    return canonical_step(sub, path[start:])


def _search_between_branch_nodes(g: MultiGraph, sub: Subdivision):
    s_nodes = sub.n_nodes
    g_nodes = g.n_live_nodes
    if s_nodes == g_nodes:
        leftover = min(
            e for e in g.live_edges() if not sub.in_edges[e]
        )
        u, v = g.ends(leftover)
        return canonical_step(sub, (min(u, v), max(u, v)))

    x = None
    for v in range(len(sub.in_nodes)):
        if sub.in_nodes[v] and any(not sub.in_edges[e] for e in g._inc[v]):
            x = v
            break
    if x is None:
        raise GraphUsageError("no remaining edge leaves the subdivision")

    parent = {x: -1}
    stack = [x]
    goal = None
    while stack and goal is None:
        p = stack.pop()
        for e in sorted(g._inc[p]):
            if sub.in_edges[e]:
                continue
            q = g.other_end(e, p)
            if q in parent:
                continue
            parent[q] = p
            if sub.in_nodes[q]:
                goal = q
                break
            stack.append(q)
    if goal is None:
        return Witness("cut_vertex", (x,))
    path = [goal]
    while path[-1] != x:
        path.append(parent[path[-1]])
    path.reverse()
    return canonical_step(sub, path)


def certify(
    g_raw: MultiGraph,
    prescribed_s0=None,
    want_basic: bool = False,
    use_sparsify: bool = True,
) -> CertifyResult:
    """Test 3-connectedness, producing a certificate or a witness.

    Pure function: safe to run concurrently on distinct inputs.  A witness
    discovered on the sparsified graph is re-validated against the original
    input; in the unlikely event it does not transfer, the test reruns
    without sparsification, where witnesses are conclusive.
    """
    result = _certify_once(g_raw, prescribed_s0, want_basic, use_sparsify)
    if result is None:
        result = _certify_once(g_raw, prescribed_s0, want_basic, False)
    if result is None:
        raise AssertionError("witness failed validation on the unsparsified graph")
    return result


def _certify_once(g_raw, prescribed_s0, want_basic, use_sparsify) -> CertifyResult | None:
    g_s, report = simplify(g_raw)

    def refuted(w: Witness) -> CertifyResult | None:
        if not verify_witness(g_raw, w):
            return None if use_sparsify else _fail_hard(w)
        return CertifyResult(None, w, report)

    if g_s.n_live_nodes < 4:
        return CertifyResult(None, Witness("too_few_nodes"), report)
    if len(connected_components(g_s)) > 1:
        return CertifyResult(None, Witness("disconnected"), report)
    for v in g_s.live_nodes():
        if g_s.degree(v) < 3:
            return CertifyResult(None, Witness("low_degree", (v,)), report)

    if use_sparsify:
        g_w, _ = sparsify3(g_s)
        if prescribed_s0 is not None:
            for e in prescribed_s0:
                if not g_w.edge_alive(e):
                    if not g_s.edge_alive(e):
                        raise InputError(f"prescribed edge {e} is not in the graph")
                    u, v = g_s.ends(e)
                    g_w.add_edge(u, v, eid=e)
    else:
        g_w = g_s

    if prescribed_s0 is not None:
        try:
            sub = build_subdivision(g_s, sorted(prescribed_s0))
        except StructureError as exc:
            raise InputError(str(exc)) from exc
        s0_ids = tuple(sorted(prescribed_s0))
    else:
        found = find_k4_subdivision(g_w)
        if isinstance(found, Witness):
            return refuted(found)
        # Rebuild against the full simplified graph so leftover edges can be
        # appended later; ids are shared between g_w and g_s.
        s0_ids = tuple(sorted(found.edge_ids()))
        sub = build_subdivision(g_s, s0_ids)

    steps: list[Step] = []
    target = g_w.n_live_edges
    while sub.n_edges < target:
        nxt = find_next_path(g_w, sub)
        if isinstance(nxt, Witness):
            return refuted(nxt)
        before = sub.n_edges
        apply_path_inplace(sub, nxt)
        assert sub.n_edges > before
        steps.append(nxt)

    leftover = tuple(
        e for e in g_s.live_edges() if not sub.in_edges[e]
    )
    for e in sorted(leftover):
        u, v = g_s.ends(e)
        step = canonical_step(sub, (min(u, v), max(u, v)))
        apply_path_inplace(sub, step)
        steps.append(step)

    cert = PathCertificate(s0_edges=s0_ids, steps=tuple(steps), basic=False)
    if want_basic:
        from .transforms import to_basic

        cert = to_basic(g_s, cert)
    return CertifyResult(cert, None, report, tuple(sorted(leftover)))


def _fail_hard(w: Witness) -> CertifyResult:
    raise AssertionError(f"invalid witness {w} produced on unsparsified input")
