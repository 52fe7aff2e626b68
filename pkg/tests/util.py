"""Shared test helpers: exact isomorphism and independent distance oracles."""

from __future__ import annotations

from kmetric.graphs import Graph, all_pairs_distances


def vertex_profiles(g: Graph) -> list[tuple]:
    """Per-vertex invariant: degree plus sorted distance row."""
    dm = all_pairs_distances(g)
    return [(g.degree(v), tuple(sorted(dm.row(v)))) for v in range(g.n)]


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism by backtracking on profile-compatible mappings.

    Intended for the catalog scale (n <= 7); correctness over speed.
    """
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    prof1 = vertex_profiles(g1)
    prof2 = vertex_profiles(g2)
    if sorted(prof1) != sorted(prof2):
        return False
    candidates = [
        [w for w in range(g2.n) if prof2[w] == prof1[v]] for v in range(g1.n)
    ]
    mapping = [-1] * g1.n
    used = [False] * g2.n

    def extend(v: int) -> bool:
        if v == g1.n:
            return True
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for x in range(v):
                if g1.has_edge(v, x) != g2.has_edge(w, mapping[x]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return extend(0)


def tree_path_length(adjacency, root: int, i: int, j: int) -> int:
    """Unique-path length on a tree via parent pointers from a rooted walk."""
    parent = {root: None}
    depth = {root: 0}
    stack = [root]
    while stack:
        u = stack.pop()
        for v in adjacency[u]:
            if v not in parent:
                parent[v] = u
                depth[v] = depth[u] + 1
                stack.append(v)
    ancestors_i = set()
    x = i
    while x is not None:
        ancestors_i.add(x)
        x = parent[x]
    y = j
    while y not in ancestors_i:
        y = parent[y]
    return depth[i] + depth[j] - 2 * depth[y]
