"""Equivalence of weighted digraphs under vertex reordering, out-weight
permutation, and (sigma, k)-local complementation.

Two acyclic graphs are equivalent when a sequence of the three moves
turns one into the other.  Orbits are computed by breadth-first closure
under a small involutive generating set, and an independent oracle
realizes each single-vertex move as a facet permutation acting on the
full characteristic matrix followed by GF(2) row reduction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .digraph import (
    BudgetError,
    DimensionFunction,
    VWDigraph,
    enumerate_acyclic,
    is_acyclic,
    reduced_matrix,
)
from .gf2 import GF2Vector, gf2_add, gf2_permute
from .permutation import Permutation

DEFAULT_ORBIT_BUDGET = 10**7


class OrbitBudgetError(BudgetError):
    def __init__(self, partial_size: int, budget: int):
        self.partial_size = partial_size
        self.budget = budget
        super().__init__(
            f"orbit exceeded budget {budget}; at least {partial_size} members found"
        )


def _check_vertex(g: VWDigraph, v: int) -> None:
    if not 1 <= v <= g.omega.m:
        raise ValueError(f"vertex {v} outside 1..{g.omega.m}")


def local_complement(g: VWDigraph, v: int) -> VWDigraph:
    """Add the weight of (u,v) onto (u,w) for every in-neighbor u and
    out-neighbor w of v; an edge exists in the result iff its new weight
    is nonzero."""
    _check_vertex(g, v)
    ins = g.in_neighbors(v)
    outs = g.out_neighbors(v)
    weights = {(i, j): w for i, j, w in g.edges}
    for u in ins:
        wuv = g.weight(u, v)
        assert wuv is not None
        for w in outs:
            if u == w:
                # Only reachable from a cyclic input; never create a loop.
                continue
            old = g.weight(u, w) or GF2Vector.zero(g.omega.dim(u))
            new = gf2_add(old, wuv)
            if new.is_zero:
                weights.pop((u, w), None)
            else:
                weights[(u, w)] = new
    return VWDigraph(g.omega, weights)


def permute_out_weights(g: VWDigraph, v: int, sigma: Permutation) -> VWDigraph:
    """Apply sigma to the weight of every edge leaving v."""
    _check_vertex(g, v)
    if sigma.degree != g.omega.dim(v):
        raise ValueError(
            f"permutation degree {sigma.degree} does not match dimension {g.omega.dim(v)}"
        )
    weights = {
        (i, j): (gf2_permute(sigma, w) if i == v else w) for i, j, w in g.edges
    }
    return VWDigraph(g.omega, weights)


def sigma_local_complement(g: VWDigraph, v: int, sigma: Permutation) -> VWDigraph:
    """Local complementation at v followed by permuting v's out-weights."""
    return permute_out_weights(local_complement(g, v), v, sigma)


def sigma_k_local_complement(
    g: VWDigraph, v: int, sigma: Permutation, k: int
) -> VWDigraph:
    """Local complementation restricted to out-edges of v whose k-th weight
    coordinate is 1, combined with a sigma-permutation of v's out-weights
    and an all-ones-except correction on the affected ones.

    Out-edges of v: weight w becomes sigma.w when w_k = 0, and
    sigma.w + (all ones except coordinate sigma^{-1}(k)) when w_k = 1.
    Cross pairs (u,w) with u an in-neighbor and w an out-neighbor gain
    the weight of (u,v) exactly when (weight of (v,w))_k = 1.  An edge
    exists in the result iff its final weight is nonzero.
    """
    _check_vertex(g, v)
    dim_v = g.omega.dim(v)
    if sigma.degree != dim_v:
        raise ValueError(
            f"permutation degree {sigma.degree} does not match dimension {dim_v}"
        )
    if not 1 <= k <= dim_v:
        raise ValueError(f"coordinate {k} outside 1..{dim_v}")
    ins = g.in_neighbors(v)
    outs = g.out_neighbors(v)
    correction = GF2Vector.all_ones_except(dim_v, sigma.inverse()(k))
    weights = {(i, j): w for i, j, w in g.edges}
    marked = [w for w in outs if g.weight(v, w).bit(k) == 1]
    # Cross pairs, from the original weights.
    for u in ins:
        wuv = g.weight(u, v)
        for w in marked:
            if u == w:
                continue
            old = g.weight(u, w) or GF2Vector.zero(g.omega.dim(u))
            new = gf2_add(old, wuv)
            if new.is_zero:
                weights.pop((u, w), None)
            else:
                weights[(u, w)] = new
    # Out-edges of v keep a 1 in coordinate sigma^{-1}(k) when marked, so
    # they never vanish.
    for w in outs:
        old = g.weight(v, w)
        new = gf2_permute(sigma, old)
        if old.bit(k) == 1:
            new = gf2_add(new, correction)
        weights[(v, w)] = new
    return VWDigraph(g.omega, weights)


def reorder_vertices(g: VWDigraph, mu: Permutation) -> VWDigraph:
    """Relabel vertices: the new weight of (p,q) is the old weight of
    (mu(p), mu(q)).  mu must preserve the dimension of every vertex."""
    m = g.omega.m
    if mu.degree != m:
        raise ValueError(f"permutation degree {mu.degree} does not match {m} vertices")
    for i in range(1, m + 1):
        if g.omega.dim(mu(i)) != g.omega.dim(i):
            raise ValueError(f"reordering does not preserve dimensions at vertex {i}")
    inv = mu.inverse()
    weights = {(inv(i), inv(j)): w for i, j, w in g.edges}
    return VWDigraph(g.omega, weights)


# ---------------------------------------------------------------------------
# Independent oracle: facet permutations acting on characteristic matrices
# ---------------------------------------------------------------------------


def facet_permutation_action(
    g: VWDigraph, v: int, sigma_full: Permutation
) -> VWDigraph:
    """Apply a permutation of the dim(v)+1 facets of the simplex factor at v.

    Builds the block matrix [I_n | R] whose right part is the reduced
    matrix of g written out in scalar coordinates, permutes the columns
    belonging to v's factor by sigma_full, row-reduces back to the form
    [I_n | R'] over GF(2), and reads the image graph off R'.  This is
    the ground truth the combinatorial moves are checked against:
    sigma_full fixing dim(v)+1 must act as an out-weight permutation,
    anything else as a (sigma, k)-local complementation.
    """
    _check_vertex(g, v)
    omega = g.omega
    m = omega.m
    dim_v = omega.dim(v)
    if sigma_full.degree != dim_v + 1:
        raise ValueError(
            f"facet permutation degree {sigma_full.degree}, expected {dim_v + 1}"
        )
    offsets = [0] * (m + 1)
    for t in range(1, m + 1):
        offsets[t] = offsets[t - 1] + omega.dim(t)
    n = offsets[m]

    reduced = reduced_matrix(g)

    # Columns 0..n-1: facet (t, c) for c = 1..dim(t); column n+t-1: facet
    # (t, dim(t)+1).  Store the matrix column-wise as n-bit ints.
    cols = [0] * (n + m)
    for r in range(n):
        cols[r] = 1 << r
    for t in range(1, m + 1):
        bits = 0
        for s in range(1, m + 1):
            entry = reduced.entry(s, t)
            for c in range(1, entry.dim + 1):
                if entry.bit(c):
                    bits |= 1 << (offsets[s - 1] + c - 1)
        cols[n + t - 1] = bits

    def facet_col(k: int) -> int:
        return offsets[v - 1] + k - 1 if k <= dim_v else n + v - 1

    old = [cols[facet_col(k)] for k in range(1, dim_v + 2)]
    for k in range(1, dim_v + 2):
        cols[facet_col(k)] = old[sigma_full(k) - 1]

    # Transpose to rows and Gauss-Jordan the first n columns to identity.
    rows = [0] * n
    for c, colbits in enumerate(cols):
        for r in range(n):
            if (colbits >> r) & 1:
                rows[r] |= 1 << c
    for col in range(n):
        mask = 1 << col
        pivot = next((r for r in range(col, n) if rows[r] & mask), None)
        if pivot is None:
            raise ValueError("facet-permuted matrix is singular; input invalid")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(n):
            if r != col and rows[r] & mask:
                rows[r] ^= rows[col]

    weights = {}
    for s in range(1, m + 1):
        d = omega.dim(s)
        for t in range(1, m + 1):
            bits = 0
            for c in range(d):
                if (rows[offsets[s - 1] + c] >> (n + t - 1)) & 1:
                    bits |= 1 << c
            if s == t:
                if bits != (1 << d) - 1:
                    raise ValueError("image matrix lost its unit diagonal")
            elif bits:
                weights[(s, t)] = GF2Vector(d, bits)
    return VWDigraph(omega, weights)


# ---------------------------------------------------------------------------
# Generators and orbits
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReorderVertices:
    mu: Permutation

    def apply(self, g: VWDigraph) -> VWDigraph:
        return reorder_vertices(g, self.mu)


@dataclass(frozen=True)
class PermuteWeights:
    vertex: int
    sigma: Permutation

    def apply(self, g: VWDigraph) -> VWDigraph:
        return permute_out_weights(g, self.vertex, self.sigma)


@dataclass(frozen=True)
class SigmaKLC:
    vertex: int
    sigma: Permutation
    k: int

    def apply(self, g: VWDigraph) -> VWDigraph:
        return sigma_k_local_complement(g, self.vertex, self.sigma, self.k)


Generator = Union[ReorderVertices, PermuteWeights, SigmaKLC]


def standard_generators(omega: DimensionFunction) -> list[Generator]:
    """Involutive generating set: dimension-preserving vertex swaps,
    adjacent out-weight transpositions, and identity-(k) local
    complementations.  These generate the whole equivalence because each
    full single-vertex move factors into them."""
    gens: list[Generator] = []
    m = omega.m
    for p in range(1, m + 1):
        for q in range(p + 1, m + 1):
            if omega.dim(p) == omega.dim(q):
                gens.append(ReorderVertices(Permutation.transposition(m, p, q)))
    for v in range(1, m + 1):
        d = omega.dim(v)
        for t in range(1, d):
            gens.append(PermuteWeights(v, Permutation.transposition(d, t, t + 1)))
    for v in range(1, m + 1):
        d = omega.dim(v)
        for k in range(1, d + 1):
            gens.append(SigmaKLC(v, Permutation.identity(d), k))
    return gens


@dataclass(frozen=True)
class OrbitReport:
    canonical: VWDigraph
    size: int
    members: tuple[VWDigraph, ...] | None = None


def orbit(
    g: VWDigraph,
    include_members: bool = False,
    budget: int = DEFAULT_ORBIT_BUDGET,
) -> OrbitReport:
    """Breadth-first closure of g under the standard generators."""
    if not is_acyclic(g):
        raise ValueError("orbits are computed for acyclic graphs only")
    gens = standard_generators(g.omega)
    seen: dict[str, VWDigraph] = {g.serial: g}
    frontier = [g]
    while frontier:
        nxt = []
        for cur in frontier:
            for gen in gens:
                img = gen.apply(cur)
                if img.serial not in seen:
                    seen[img.serial] = img
                    nxt.append(img)
                    if len(seen) > budget:
                        raise OrbitBudgetError(len(seen), budget)
        frontier = nxt
    canonical = seen[min(seen)]
    members = tuple(seen[k] for k in sorted(seen)) if include_members else None
    return OrbitReport(canonical=canonical, size=len(seen), members=members)


def count_equivalence_classes(
    omega: DimensionFunction,
    enumeration_budget: int | None = None,
    orbit_budget: int = DEFAULT_ORBIT_BUDGET,
) -> int:
    """Partition all acyclic weighted digraphs into orbits; return the count."""
    kwargs = {} if enumeration_budget is None else {"budget": enumeration_budget}
    seen: set[str] = set()
    classes = 0
    for g in enumerate_acyclic(omega, **kwargs):
        if g.serial in seen:
            continue
        report = orbit(g, include_members=True, budget=orbit_budget)
        assert report.members is not None
        seen.update(member.serial for member in report.members)
        classes += 1
    return classes
