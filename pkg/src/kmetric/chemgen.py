"""Generators for hexagonal chemical graph families via iterated products.

Every family is built constructively as a chain of hierarchical products
with P_2, so the product identities behind the dimension bounds hold by
construction.  Stage 0 root sets come from the defining texts (alternate
vertices of a cycle, even positions of a path); later stages default to the
rim policy below and accept explicit overrides.

Default rim policy: after each doubling the new outer rim is the top-copy
image of the previous outer rim, and the next root set consists of its
vertices at even 0-based base positions (the images of v_1, v_3, ... of the
original cycle or path).  Rung positions then alternate belt by belt, which
yields the hexagonal face structure and the expected vertex/edge counts.

Vertex labels record (stage, layer, base-index): the doubling stage that
created the vertex, its rim level counted from the original copy, and its
position on the original cycle or path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, cycle_graph, girth, path_graph
from .products import ProductGraph, RootedGraph, bridge_path, hierarchical_product


class BadRootSetError(GraphError):
    """An explicit root-set override has wrong arity or invalid members."""


@dataclass(frozen=True)
class FamilySpec:
    """CLI-facing description of a generator invocation."""

    family: str  # nanotube | polyhex_row | polyhex_stack | armchair | bridge_path
    p: int
    q: int | None = None
    levels: int | None = None
    d: int | None = None
    roots: tuple[tuple[int, ...], ...] | None = None


def cycle_with_even_roots(p: int) -> RootedGraph:
    """C_{2p} rooted at every second vertex (0-based odd positions)."""
    if p < 2:
        raise GraphError(f"p must be >= 2, got {p}")
    return RootedGraph(cycle_graph(2 * p), tuple(range(1, 2 * p, 2)))


def path_with_even_roots(p: int) -> RootedGraph:
    """P_{2p+3} rooted at every even 1-based position (0-based 1..2p+1).

    The p+1 roots give the strip generator p hexagonal faces and a pendant
    vertex at each end, and they are the root set under which the closed
    rooted-path dimension formula is exact.
    """
    if p < 1:
        raise GraphError(f"p must be >= 1, got {p}")
    return RootedGraph(path_graph(2 * p + 3), tuple(range(1, 2 * p + 2, 2)))


def _format_label(meta: tuple[int, int, int]) -> str:
    return f"({meta[0]},{meta[1]},{meta[2]})"


def _validated_roots(explicit, n: int, stage: int) -> tuple[int, ...]:
    roots = tuple(sorted(set(explicit)))
    if not roots:
        raise BadRootSetError(f"stage {stage}: empty root set")
    if roots[0] < 0 or roots[-1] >= n:
        raise BadRootSetError(f"stage {stage}: roots {roots} outside 0..{n - 1}")
    return roots


def _doubling_chain(
    base: Graph,
    stage0_roots: tuple[int, ...],
    num_stages: int,
    roots,
) -> ProductGraph:
    """Iterate (current graph)(U) x P_2 for num_stages stages.

    Tracks (stage, level, base) metadata per vertex; the top copy of each
    doubling gets mirrored levels so the outer rim is always the maximum
    level.
    """
    if roots is not None and len(roots) != num_stages:
        raise BadRootSetError(f"expected {num_stages} root sets, got {len(roots)}")
    meta = [(0, 0, b) for b in range(base.n)]
    g = base.with_labels([_format_label(m) for m in meta])
    levels = 1
    product: ProductGraph | None = None
    for s in range(num_stages):
        if roots is not None:
            u = _validated_roots(roots[s], g.n, s)
        elif s == 0:
            u = stage0_roots
        else:
            rim = levels - 1
            u = tuple(i for i, (_, lev, b) in enumerate(meta) if lev == rim and b % 2 == 0)
        product = hierarchical_product(RootedGraph(g, u), path_graph(2))
        new_meta = []
        for x in range(g.n):
            st, lev, b = meta[x]
            new_meta.append((st, lev, b))
            new_meta.append((s + 1, 2 * levels - 1 - lev, b))
        meta = new_meta
        levels *= 2
        g = product.graph.with_labels([_format_label(m) for m in meta])
        product = ProductGraph(g, product.factor_dims, product.vertex_map)
    assert product is not None
    return product


def nanotube(p: int, q: int, roots=None) -> ProductGraph:
    """Zigzag nanotube with 2^q - 1 hexagonal belts of p hexagons each.

    Stage 0 is C_{2p} rooted at alternate vertices; each of the q stages
    doubles via a product with P_2.
    """
    if p < 2:
        raise GraphError(f"p must be >= 2, got {p}")
    if q < 1:
        raise GraphError(f"q must be >= 1, got {q}")
    rg = cycle_with_even_roots(p)
    product = _doubling_chain(rg.graph, rg.roots, q, roots)
    if roots is None:
        _check_nanotube(product.graph, p, q)
    return product


def _check_nanotube(g: Graph, p: int, q: int) -> None:
    expected_n = 2 ** (q + 1) * p
    if g.n != expected_n:
        raise GraphError(f"nanotube self-check: {g.n} vertices, expected {expected_n}")
    degs = sorted(g.degree(v) for v in range(g.n))
    if degs != [2] * (2 * p) + [3] * (g.n - 2 * p):
        raise GraphError("nanotube self-check: degree sequence mismatch")
    expected_girth = 6 if p >= 3 else 4
    if girth(g) != expected_girth:
        raise GraphError(f"nanotube self-check: girth != {expected_girth}")


def polyhex_row(p: int) -> ProductGraph:
    """One-row polyhex strip: even-rooted P_{2p+3} times P_2."""
    rg = path_with_even_roots(p)
    product = _doubling_chain(rg.graph, rg.roots, 1, None)
    n, m = product.graph.n, product.graph.num_edges
    if n != 2 * (2 * p + 3) or m != 2 * (2 * p + 2) + p + 1:
        raise GraphError(f"polyhex_row self-check: got {n} vertices, {m} edges")
    return product


def _stack_stage_count(levels: int) -> int:
    stages = 1
    while 2**stages - 1 < levels:
        stages += 1
    if 2**stages - 1 != levels:
        raise GraphError(f"levels must be of the form 2^j - 1, got {levels}")
    return stages


def polyhex_stack(p: int, levels: int, roots=None) -> ProductGraph:
    """Polyhex lattice with the given number of hexagonal rows (2^j - 1)."""
    rg = path_with_even_roots(p)
    stages = _stack_stage_count(levels)
    product = _doubling_chain(rg.graph, rg.roots, stages, roots)
    expected_n = 2**stages * (2 * p + 3)
    if roots is None and product.graph.n != expected_n:
        raise GraphError(f"polyhex_stack self-check: {product.graph.n} != {expected_n}")
    return product


def armchair(p: int, levels: int = 3, roots=None) -> ProductGraph:
    """Armchair tube: a polyhex stack with one more rim doubling."""
    rg = path_with_even_roots(p)
    stages = _stack_stage_count(levels) + 1
    product = _doubling_chain(rg.graph, rg.roots, stages, roots)
    if roots is None:
        expected_n = 2**stages * (2 * p + 3)
        if product.graph.n != expected_n:
            raise GraphError(f"armchair self-check: {product.graph.n} != {expected_n}")
        if any(product.graph.degree(v) > 3 for v in range(product.graph.n)):
            raise GraphError("armchair self-check: degree above 3")
    return product


def bridge_path_uniform(g: Graph, u: int, d: int) -> Graph:
    """d bridged copies of (g, u); certified isomorphic to G(u) x P_d.

    The certificate is the explicit index bijection copy j, vertex x  <->
    product pair (x, j); edge sets must map exactly.
    """
    if d < 1:
        raise GraphError(f"d must be >= 1, got {d}")
    bridged = bridge_path([(g, u)] * d)
    product = hierarchical_product(RootedGraph(g, (u,)), path_graph(d))
    n = g.n
    mapped = {
        tuple(sorted(((a % n) * d + a // n, (b % n) * d + b // n)))
        for a, b in bridged.edges()
    }
    if mapped != set(product.graph.edges()):
        raise GraphError("bridge_path_uniform: bijection to the product failed")
    return bridged


def build_family(spec: FamilySpec) -> Graph:
    """Dispatch a FamilySpec to its generator and return the plain graph."""
    if spec.family == "nanotube":
        return nanotube(spec.p, spec.q if spec.q is not None else 1, spec.roots).graph
    if spec.family == "polyhex_row":
        return polyhex_row(spec.p).graph
    if spec.family == "polyhex_stack":
        return polyhex_stack(spec.p, spec.levels if spec.levels is not None else 3, spec.roots).graph
    if spec.family == "armchair":
        return armchair(spec.p, spec.levels if spec.levels is not None else 3, spec.roots).graph
    raise GraphError(f"unknown family {spec.family!r}")
