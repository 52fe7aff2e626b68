"""Exact k-metric dimension via 0-1 set multicover.

A vertex w distinguishes the pair (u, v) when d(w,u) != d(w,v).  A set S is
a k-metric generator for a pair family when every pair has at least k
distinguishers inside S; the k-metric dimension is the minimum size of such
a set, or infinite when some pair has fewer than k distinguishers in the
whole graph.  Minimizing |S| subject to per-pair coverage constraints is a
set-multicover problem with uniform demand k, solved here by a purpose-built
branch-and-bound over vertex inclusion.

The solver is sequential and fully deterministic: the optimum value and the
reported basis (the lexicographically smallest optimal vertex set) depend
only on the instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .graphs import DistanceMatrix, Graph, all_pairs_distances
from .products import RootedGraph

INFINITE = math.inf

ORACLE_SIZE_LIMIT = 16


class SamePairError(ValueError):
    """distinguishers() was asked about a pair (u, u)."""


class SizeLimitExceededError(ValueError):
    """The exhaustive oracle was given a universe beyond its size limit."""


@dataclass(frozen=True)
class SolveStats:
    nodes: int = 0
    rows: int = 0
    pruned: int = 0


@dataclass(frozen=True)
class MulticoverInstance:
    """The coverage model: one binary variable per vertex, one row per pair.

    Each row lists the distinguishers of one vertex pair; a feasible 0-1
    assignment must hit every row at least ``demand`` times.  The objective
    is the number of chosen vertices.
    """

    universe_size: int
    rows: tuple[tuple[int, ...], ...]
    demand: int

    def __post_init__(self):
        if self.demand < 0:
            raise ValueError(f"demand must be >= 0, got {self.demand}")
        for row in self.rows:
            if row and (row[0] < 0 or row[-1] >= self.universe_size):
                raise ValueError(f"row {row} outside universe 0..{self.universe_size - 1}")

    @property
    def feasible(self) -> bool:
        return all(len(row) >= self.demand for row in self.rows)

    def satisfied_by(self, selected) -> bool:
        chosen = set(selected)
        return all(len(chosen.intersection(row)) >= self.demand for row in self.rows)


@dataclass(frozen=True)
class DimResult:
    """Outcome of an exact solve: optimum value, witness basis, statistics.

    value is INFINITE when some pair cannot be distinguished k times by the
    whole vertex set; the basis is empty then, and also when there are no
    pairs to distinguish (value 0).
    """

    k: int
    value: int | float
    basis: tuple[int, ...]
    optimal: bool = True
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITE

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "dim": None if self.is_infinite else int(self.value),
            "infinite": self.is_infinite,
            "basis": [v + 1 for v in self.basis],
            "optimal": self.optimal,
            "stats": {
                "nodes": self.stats.nodes,
                "rows": self.stats.rows,
                "pruned": self.stats.pruned,
            },
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DimResult":
        stats = data.get("stats", {})
        return cls(
            k=data["k"],
            value=INFINITE if data["infinite"] else data["dim"],
            basis=tuple(v - 1 for v in data["basis"]),
            optimal=data["optimal"],
            stats=SolveStats(
                nodes=stats.get("nodes", 0),
                rows=stats.get("rows", 0),
                pruned=stats.get("pruned", 0),
            ),
        )


def representation(dm: DistanceMatrix, v: int, landmarks) -> tuple[int, ...]:
    """Distance vector from v to each landmark, in landmark order."""
    return tuple(dm[s, v] for s in landmarks)


def distinguishers(dm: DistanceMatrix, u: int, v: int) -> tuple[int, ...]:
    """Vertices w with d(w,u) != d(w,v); always contains u and v."""
    if u == v:
        raise SamePairError(f"pair ({u},{v}) is not a pair")
    du = dm.row(u)
    dv = dm.row(v)
    return tuple(w for w in range(dm.n) if du[w] != dv[w])


def max_k(dm: DistanceMatrix) -> int | float:
    """Largest k admitting a k-metric generator.

    Equals the minimum distinguisher-set size over all vertex pairs.  For
    n < 2 there are no pairs and every k works vacuously, reported as
    INFINITE by convention.
    """
    if dm.n < 2:
        return INFINITE
    return min(
        len(distinguishers(dm, u, v))
        for u in range(dm.n)
        for v in range(u + 1, dm.n)
    )


def is_k_generator(dm: DistanceMatrix, selected, k: int, pairs=None) -> bool:
    """Does ``selected`` distinguish every pair at least k times?

    ``pairs`` defaults to all unordered vertex pairs.
    """
    chosen = set(selected)
    if pairs is None:
        pairs = ((u, v) for u in range(dm.n) for v in range(u + 1, dm.n))
    for u, v in pairs:
        du = dm.row(u)
        dv = dm.row(v)
        hits = sum(1 for w in chosen if du[w] != dv[w])
        if hits < k:
            return False
    return True


def build_instance_full(dm: DistanceMatrix, k: int) -> MulticoverInstance:
    """One row per unordered vertex pair, in (i, j) lexicographic order."""
    rows = tuple(
        distinguishers(dm, i, j)
        for i in range(dm.n)
        for j in range(i + 1, dm.n)
    )
    return MulticoverInstance(dm.n, rows, k)


@dataclass(frozen=True)
class Sphere:
    """Vertices at exact distance ``radius`` from a root vertex.

    Spheres with at most one member impose no distinguishing constraints.
    """

    center: int
    radius: int
    members: tuple[int, ...]


def spheres(rg: RootedGraph, dm: DistanceMatrix) -> list[Sphere]:
    """All nonempty distance spheres (radius >= 1) around the roots."""
    out = []
    for u in rg.roots:
        by_radius: dict[int, list[int]] = {}
        for w in range(dm.n):
            ell = dm[u, w]
            if ell >= 1:
                by_radius.setdefault(ell, []).append(w)
        for ell in sorted(by_radius):
            out.append(Sphere(u, ell, tuple(by_radius[ell])))
    return out


def sphere_pairs(rg: RootedGraph, dm: DistanceMatrix) -> tuple[tuple[int, int], ...]:
    """Deduplicated pairs lying on a common distance sphere around a root."""
    pairs: set[tuple[int, int]] = set()
    for sphere in spheres(rg, dm):
        if len(sphere.members) >= 2:
            pairs.update(combinations(sphere.members, 2))
    return tuple(sorted(pairs))


def build_instance_rooted(rg: RootedGraph, dm: DistanceMatrix, k: int) -> MulticoverInstance:
    """Rows for sphere pairs only: the rooted dimension's coverage model.

    Minimizing one set that k-distinguishes every sphere pair is equivalent
    to minimizing the union of per-sphere generators, since each per-sphere
    generator may be taken equal to the union.
    """
    rows = tuple(distinguishers(dm, x, y) for x, y in sphere_pairs(rg, dm))
    return MulticoverInstance(dm.n, rows, k)


def _prune_dominated(masks: list[int]) -> tuple[list[int], int]:
    """Drop rows that are supersets of other rows (implied constraints)."""
    order = sorted(range(len(masks)), key=lambda i: (masks[i].bit_count(), masks[i]))
    kept: list[int] = []
    dropped = 0
    for i in order:
        m = masks[i]
        if any(km & m == km for km in kept):
            dropped += 1
        else:
            kept.append(m)
    return kept, dropped


def _greedy_cover(masks: list[int], k: int, n: int) -> tuple[int, int]:
    """Greedy multicover: repeatedly take the vertex hitting the most
    deficient rows.  Returns (size, chosen_mask); feasibility is assumed."""
    deficits = [k] * len(masks)
    chosen = 0
    count = 0
    while True:
        gain = [0] * n
        active = False
        for r, m in enumerate(masks):
            if deficits[r] > 0:
                active = True
                free = m & ~chosen
                while free:
                    low = free & -free
                    gain[low.bit_length() - 1] += 1
                    free ^= low
        if not active:
            return count, chosen
        best_v = max(range(n), key=lambda v: (gain[v], -v))
        bit = 1 << best_v
        chosen |= bit
        count += 1
        for r, m in enumerate(masks):
            if m & bit:
                deficits[r] -= 1


class _Search:
    """Branch-and-bound state shared by the two solve phases."""

    def __init__(self, masks: list[int], k: int, n: int):
        self.masks = masks
        self.k = k
        self.n = n
        self.deficits = [k] * len(masks)
        self.rows_of = [[] for _ in range(n)]
        for r, m in enumerate(masks):
            free = m
            while free:
                low = free & -free
                self.rows_of[low.bit_length() - 1].append(r)
                free ^= low
        self.nodes = 0
        self.best_value = 0
        self.best_mask = 0

    def _bound_or_prune(self, avail: int) -> int:
        """Max remaining deficit, or -1 when some row cannot be completed."""
        max_def = 0
        for r, d in enumerate(self.deficits):
            if d > 0:
                if (self.masks[r] & avail).bit_count() < d:
                    return -1
                if d > max_def:
                    max_def = d
        return max_def

    def _include(self, v: int) -> None:
        for r in self.rows_of[v]:
            self.deficits[r] -= 1

    def _undo(self, v: int) -> None:
        for r in self.rows_of[v]:
            self.deficits[r] += 1

    # Phase 1: optimal value.  Branches on the vertex present in the most
    # deficient rows (smallest index on ties), include branch first.
    def find_value(self, count: int, chosen: int, avail: int) -> None:
        self.nodes += 1
        max_def = self._bound_or_prune(avail)
        if max_def < 0:
            return
        if max_def == 0:
            if count < self.best_value:
                self.best_value = count
                self.best_mask = chosen
            return
        if count + max_def >= self.best_value:
            return
        gain = {}
        for r, d in enumerate(self.deficits):
            if d > 0:
                free = self.masks[r] & avail
                while free:
                    low = free & -free
                    v = low.bit_length() - 1
                    gain[v] = gain.get(v, 0) + 1
                    free ^= low
        branch_v = max(gain, key=lambda v: (gain[v], -v))
        bit = 1 << branch_v
        self._include(branch_v)
        self.find_value(count + 1, chosen | bit, avail & ~bit)
        self._undo(branch_v)
        self.find_value(count, chosen, avail & ~bit)

    # Phase 2: lexicographically smallest witness of the optimal value.
    # Ascending-index branching with the include branch first visits
    # equal-size vertex sets in lexicographic order, so the first feasible
    # set within the budget is the lex-smallest optimal basis.
    def find_lex_witness(self, count: int, chosen: int, avail: int, budget: int):
        self.nodes += 1
        max_def = self._bound_or_prune(avail)
        if max_def < 0:
            return None
        if max_def == 0:
            return chosen
        if count + max_def > budget:
            return None
        useful = 0
        for r, d in enumerate(self.deficits):
            if d > 0:
                useful |= self.masks[r]
        useful &= avail
        bit = useful & -useful
        v = bit.bit_length() - 1
        self._include(v)
        found = self.find_lex_witness(count + 1, chosen | bit, avail & ~bit, budget)
        self._undo(v)
        if found is not None:
            return found
        return self.find_lex_witness(count, chosen, avail & ~bit, budget)


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def solve_exact(inst: MulticoverInstance) -> DimResult:
    """Exact minimum of the multicover objective with a witness basis.

    Infeasibility (a row smaller than the demand) yields value INFINITE; an
    empty row set yields value 0.  Otherwise a two-phase branch-and-bound
    runs: the first phase proves the optimal value starting from a greedy
    incumbent with a max-deficit counting bound, the second extracts the
    lexicographically smallest basis of that value.
    """
    n, k = inst.universe_size, inst.demand
    if k == 0 or not inst.rows:
        return DimResult(k, 0, (), True, SolveStats(rows=len(inst.rows)))
    masks = [sum(1 << v for v in row) for row in inst.rows]
    if any(m.bit_count() < k for m in masks):
        return DimResult(k, INFINITE, (), True, SolveStats(rows=len(inst.rows)))
    kept, dropped = _prune_dominated(masks)
    stats_rows = len(kept)

    search = _Search(kept, k, n)
    ub, ub_mask = _greedy_cover(kept, k, n)
    search.best_value = ub
    search.best_mask = ub_mask
    full = (1 << n) - 1
    search.find_value(0, 0, full)

    budget = search.best_value
    witness = search.find_lex_witness(0, 0, full, budget)
    assert witness is not None, "phase 2 must rediscover the optimal value"
    return DimResult(
        k,
        budget,
        _mask_to_tuple(witness),
        True,
        SolveStats(nodes=search.nodes, rows=stats_rows, pruned=dropped),
    )


def dim_k(g: Graph, k: int, dm: DistanceMatrix | None = None) -> DimResult:
    """k-metric dimension of g; finite exactly when k <= max_k(g)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if dm is None:
        dm = all_pairs_distances(g)
    return solve_exact(build_instance_full(dm, k))


def dim_k_rooted(rg: RootedGraph, k: int, dm: DistanceMatrix | None = None) -> DimResult:
    """Rooted dimension: k-distinguish only pairs on common root spheres."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if dm is None:
        dm = all_pairs_distances(rg.graph)
    return solve_exact(build_instance_rooted(rg, dm, k))


def oracle_solve(inst: MulticoverInstance, limit: int = ORACLE_SIZE_LIMIT) -> DimResult:
    """Exhaustive reference solver: subsets by increasing cardinality,
    lexicographic within a cardinality, first feasible wins."""
    n, k = inst.universe_size, inst.demand
    if n > limit:
        raise SizeLimitExceededError(f"universe {n} exceeds oracle limit {limit}")
    if k == 0 or not inst.rows:
        return DimResult(k, 0, (), True, SolveStats(rows=len(inst.rows)))
    masks = [sum(1 << v for v in row) for row in inst.rows]
    if any(m.bit_count() < k for m in masks):
        return DimResult(k, INFINITE, (), True, SolveStats(rows=len(inst.rows)))
    for size in range(k, n + 1):
        for combo in combinations(range(n), size):
            chosen = sum(1 << v for v in combo)
            if all((m & chosen).bit_count() >= k for m in masks):
                return DimResult(k, size, combo, True, SolveStats(rows=len(inst.rows)))
    raise AssertionError("feasible instance must have a cover")


def oracle_dim(g: Graph, k: int, limit: int = ORACLE_SIZE_LIMIT) -> DimResult:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    dm = all_pairs_distances(g)
    return oracle_solve(build_instance_full(dm, k), limit)


def oracle_dim_rooted(rg: RootedGraph, k: int, limit: int = ORACLE_SIZE_LIMIT) -> DimResult:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    dm = all_pairs_distances(rg.graph)
    return oracle_solve(build_instance_rooted(rg, dm, k), limit)
