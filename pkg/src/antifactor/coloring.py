"""Proper edge colorings of regular bipartite multigraphs.

A q-regular bipartite multigraph decomposes into q perfect matchings
(Koenig), so it can be colored by peeling: find a perfect matching of
the residual support, give those edge copies the next color, decrement,
repeat.  After round t the residual graph is exactly (q-1-t)-regular,
so the next matching always exists.

A coloring is a nested list ``colors[u][v]`` holding one color (an int
element of GF(q)) per parallel copy of the edge u-v.  Copy c of edge
(u, v) has color ``colors[u][v][c]``.
"""

from __future__ import annotations

from .gf import GF
from .graphs import BipartiteMultigraph

EdgeColoring = list[list[list[int]]]


def find_perfect_matching(g: BipartiteMultigraph) -> list[int] | None:
    """Perfect matching of the support as a list u -> v, or None.

    Augmenting-path search; U-vertices are processed in increasing order
    and neighbors scanned in increasing v, so the result is deterministic.
    """
    if g.n_u != g.n_v:
        raise ValueError("perfect matching requires equal part sizes")
    n = g.n_u
    adj = [g.neighbors_u(u) for u in range(n)]
    match_v = [-1] * n  # owner of each V-vertex

    def augment(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_v[v] < 0 or augment(match_v[v], seen):
                    match_v[v] = u
                    return True
        return False

    for u in range(n):
        if not augment(u, [False] * n):
            return None
    match_u = [-1] * n
    for v, u in enumerate(match_v):
        match_u[u] = v
    return match_u


def edge_color(g: BipartiteMultigraph, field: GF) -> EdgeColoring:
    """Color every edge copy so that no vertex sees a color twice.

    Colors are assigned in the field's canonical element order; on a
    q-regular input each vertex ends up seeing every element of GF(q)
    exactly once.
    """
    q = g.regularity()
    if q is None:
        raise ValueError("graph is not regular")
    if q != field.q:
        raise ValueError(f"graph is {q}-regular but field has order {field.q}")
    residual = [list(row) for row in g.mult]
    colors: EdgeColoring = [[[] for _ in range(g.n_v)] for _ in range(g.n_u)]
    for t in range(q):
        support = BipartiteMultigraph.from_rows(
            [[1 if m > 0 else 0 for m in row] for row in residual], n_v=g.n_v
        )
        matching = find_perfect_matching(support)
        if matching is None:  # impossible for a regular residual
            raise RuntimeError("residual graph lost its perfect matching")
        for u, v in enumerate(matching):
            colors[u][v].append(t)
            residual[u][v] -= 1
    return colors


def check_coloring(g: BipartiteMultigraph, colors: EdgeColoring, field: GF) -> bool:
    """True iff the coloring is proper (and complete when g is field.q-regular)."""
    if len(colors) != g.n_u or any(len(colors[u]) != g.n_v for u in range(g.n_u)):
        raise ValueError("coloring shape does not match the graph")
    for u in range(g.n_u):
        for v in range(g.n_v):
            if len(colors[u][v]) != g.mult[u][v]:
                raise ValueError("coloring shape does not match the graph")
    for u in range(g.n_u):
        seen = [c for v in range(g.n_v) for c in colors[u][v]]
        if any(not 0 <= c < field.q for c in seen):
            return False
        if len(set(seen)) != len(seen):
            return False
    full = set(range(field.q))
    complete = g.regularity() == field.q
    for v in range(g.n_v):
        seen = [c for u in range(g.n_u) for c in colors[u][v]]
        if len(set(seen)) != len(seen):
            return False
        if complete and set(seen) != full:
            return False
    if complete:
        for u in range(g.n_u):
            seen = {c for v in range(g.n_v) for c in colors[u][v]}
            if seen != full:
                return False
    return True
