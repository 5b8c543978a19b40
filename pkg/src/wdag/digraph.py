"""Vector-weighted digraphs on labeled vertices and their reduced matrices.

A weight-dimension map assigns each vertex i a positive dimension d_i;
an edge leaving vertex i carries a nonzero GF(2) vector of dimension
d_i, and the zero vector means "no edge".  Acyclic graphs correspond
one-to-one with vector matrices whose every coordinate specialization
has all principal minors equal to 1 (graph <-> adjacency + all-ones
diagonal).  This module provides that correspondence, exhaustive
enumeration, and the two vanishing-sum checks satisfied by every
reduced scalar matrix.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Mapping, Sequence

from .gf2 import GF2Matrix, GF2Vector, all_principal_minors_one, specialize

# Listing the underlying unweighted DAGs is capped here; the counts grow
# like 3, 25, 543, 29281, 3781503 and six vertices is already the limit
# of what an exhaustive desk run should attempt.
DAG_VERTEX_CAP = 6

# Refusal threshold for weighted enumeration, compared against the loose
# upper bound prod_i (2^{d_i})^(m-1).
DEFAULT_ENUMERATION_BUDGET = 10**8


class BudgetError(RuntimeError):
    """A requested exhaustive computation exceeds its configured budget."""


class EnumerationBudgetError(BudgetError):
    def __init__(self, estimate: int, budget: int):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"enumeration refused: loose size bound {estimate} exceeds budget {budget}"
        )


class VertexCapError(BudgetError):
    def __init__(self, m: int):
        self.m = m
        super().__init__(
            f"exhaustive DAG listing capped at {DAG_VERTEX_CAP} vertices, got {m}"
        )


@dataclass(frozen=True)
class DimensionFunction:
    """Weight dimensions per vertex: dims[i-1] is the dimension at vertex i."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.dims) < 1:
            raise ValueError("need at least one vertex")
        if any(d < 1 for d in self.dims):
            raise ValueError(f"dimensions must be positive: {self.dims}")

    @property
    def m(self) -> int:
        """Number of vertices; called m throughout because n is reserved
        for the total dimension."""
        return len(self.dims)

    def dim(self, i: int) -> int:
        if not 1 <= i <= self.m:
            raise ValueError(f"vertex {i} outside 1..{self.m}")
        return self.dims[i - 1]

    @classmethod
    def of(cls, *dims: int) -> "DimensionFunction":
        return cls(tuple(dims))


@dataclass(frozen=True)
class VectorMatrix:
    """Square matrix of GF(2) vectors; row i entries have dimension dim(i)."""

    omega: DimensionFunction
    rows: tuple[tuple[GF2Vector, ...], ...]

    def __post_init__(self) -> None:
        m = self.omega.m
        if len(self.rows) != m or any(len(r) != m for r in self.rows):
            raise ValueError(f"expected {m}x{m} entries")
        for i, row in enumerate(self.rows, start=1):
            want = self.omega.dim(i)
            for v in row:
                if v.dim != want:
                    raise ValueError(f"row {i} entry has dimension {v.dim}, want {want}")

    def entry(self, i: int, j: int) -> GF2Vector:
        m = self.omega.m
        if not (1 <= i <= m and 1 <= j <= m):
            raise ValueError(f"entry ({i},{j}) outside 1..{m}")
        return self.rows[i - 1][j - 1]

    @classmethod
    def from_entries(
        cls, omega: DimensionFunction, entries: Mapping[tuple[int, int], GF2Vector]
    ) -> "VectorMatrix":
        rows = tuple(
            tuple(
                entries.get((i, j), GF2Vector.zero(omega.dim(i)))
                for j in range(1, omega.m + 1)
            )
            for i in range(1, omega.m + 1)
        )
        return cls(omega, rows)

    def serialize(self) -> str:
        """Row-major concatenation of entry bit strings."""
        return "".join(v.to_string() for row in self.rows for v in row)


class VWDigraph:
    """Immutable weighted digraph; edge (i,j) carries a nonzero vector of dim(i)."""

    __slots__ = ("omega", "edges", "_wmap", "_serial", "_hash")

    def __init__(
        self,
        omega: DimensionFunction,
        weights: Mapping[tuple[int, int], GF2Vector]
        | Iterable[tuple[int, int, GF2Vector]] = (),
    ):
        if isinstance(weights, Mapping):
            items = [(i, j, w) for (i, j), w in weights.items()]
        else:
            items = list(weights)
        m = omega.m
        wmap: dict[tuple[int, int], GF2Vector] = {}
        for i, j, w in items:
            if not (1 <= i <= m and 1 <= j <= m):
                raise ValueError(f"edge ({i},{j}) outside 1..{m}")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if w.dim != omega.dim(i):
                raise ValueError(
                    f"edge ({i},{j}) weight has dimension {w.dim}, want {omega.dim(i)}"
                )
            if w.is_zero:
                raise ValueError(f"edge ({i},{j}) carries the zero vector")
            if (i, j) in wmap:
                raise ValueError(f"duplicate edge ({i},{j})")
            wmap[(i, j)] = w
        self.omega = omega
        self.edges = tuple(sorted((i, j, w) for (i, j), w in wmap.items()))
        self._wmap = wmap
        self._serial: str | None = None
        self._hash = hash((omega.dims, self.edges))

    def weight(self, i: int, j: int) -> GF2Vector | None:
        return self._wmap.get((i, j))

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self._wmap

    def out_neighbors(self, v: int) -> list[int]:
        return sorted(j for (i, j) in self._wmap if i == v)

    def in_neighbors(self, v: int) -> list[int]:
        return sorted(i for (i, j) in self._wmap if j == v)

    @property
    def serial(self) -> str:
        """Serialized adjacency matrix; the canonical sort key for graphs."""
        if self._serial is None:
            m = self.omega.m
            parts = []
            for i in range(1, m + 1):
                zero = "0" * self.omega.dim(i)
                for j in range(1, m + 1):
                    w = self._wmap.get((i, j))
                    parts.append(zero if w is None else w.to_string())
            self._serial = "".join(parts)
        return self._serial

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VWDigraph)
            and self.omega == other.omega
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        edges = ", ".join(f"{i}->{j}:{w.to_string()}" for i, j, w in self.edges)
        return f"VWDigraph(dims={self.omega.dims}, [{edges}])"


def is_acyclic(g: VWDigraph) -> bool:
    """Topological-sort check for directed cycles."""
    m = g.omega.m
    indeg = {v: 0 for v in range(1, m + 1)}
    for _, j, _ in g.edges:
        indeg[j] += 1
    stack = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for j in g.out_neighbors(v):
            indeg[j] -= 1
            if indeg[j] == 0:
                stack.append(j)
    return seen == m


def adjacency_matrix(g: VWDigraph) -> VectorMatrix:
    """Entry (i,j) is the weight of edge (i,j), zero when absent."""
    return VectorMatrix.from_entries(g.omega, dict(((i, j), w) for i, j, w in g.edges))


def reduced_matrix(g: VWDigraph) -> VectorMatrix:
    """Adjacency matrix plus the all-ones diagonal; requires an acyclic graph."""
    if not is_acyclic(g):
        raise ValueError("reduced matrix is only defined for acyclic graphs")
    entries = {(i, j): w for i, j, w in g.edges}
    for v in range(1, g.omega.m + 1):
        entries[(v, v)] = GF2Vector.all_ones(g.omega.dim(v))
    return VectorMatrix.from_entries(g.omega, entries)


def has_unit_principal_minors(a: VectorMatrix) -> bool:
    """True iff every coordinate specialization has all principal minors 1."""
    m = a.omega.m
    # Every diagonal coordinate is a 1x1 minor of some specialization.
    for i in range(1, m + 1):
        if a.entry(i, i).bits != (1 << a.omega.dim(i)) - 1:
            return False
    for ks in product(*(range(1, a.omega.dim(i) + 1) for i in range(1, m + 1))):
        if not all_principal_minors_one(specialize(a, ks)):
            return False
    return True


def graph_from_reduced(a: VectorMatrix) -> VWDigraph:
    """Inverse of reduced_matrix: nonzero off-diagonal entries become edges."""
    if not has_unit_principal_minors(a):
        raise ValueError("matrix has a principal minor unequal to 1")
    m = a.omega.m
    weights = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i != j and not a.entry(i, j).is_zero:
                weights[(i, j)] = a.entry(i, j)
    return VWDigraph(a.omega, weights)


# ---------------------------------------------------------------------------
# Exhaustive listing of the underlying unweighted DAGs
# ---------------------------------------------------------------------------


def dag_census(m: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every DAG on vertices 1..m exactly once, as a sorted edge tuple.

    Graphs are built layer by layer: the first layer is the source set,
    and each vertex of a later layer draws its in-edges from all earlier
    layers with at least one from the immediately preceding layer.  That
    decomposition is unique, so nothing is repeated.
    """
    if m > DAG_VERTEX_CAP:
        raise VertexCapError(m)
    if m == 0:
        yield ()
        return

    def extend(
        remaining: tuple[int, ...],
        prev: tuple[int, ...],
        earlier: tuple[int, ...],
        edges: tuple[tuple[int, int], ...],
    ) -> Iterator[tuple[tuple[int, int], ...]]:
        if not remaining:
            yield tuple(sorted(edges))
            return
        pool = earlier + prev
        if prev:
            options = [
                subset
                for size in range(1, len(pool) + 1)
                for subset in combinations(pool, size)
                if any(u in prev for u in subset)
            ]
        else:
            options = [()]
        for size in range(1, len(remaining) + 1):
            for layer in combinations(remaining, size):
                rest = tuple(x for x in remaining if x not in layer)
                for choice in product(options, repeat=size):
                    new_edges = edges + tuple(
                        (u, v) for v, ins in zip(layer, choice) for u in ins
                    )
                    yield from extend(rest, layer, pool, new_edges)

    yield from extend(tuple(range(1, m + 1)), (), (), ())


def count_dags(m: int, _memo: dict = {}) -> int:
    """Number of DAGs on m labeled vertices, via the layer recurrence."""

    def layered(remaining: int, prev: int, earlier: int) -> int:
        if remaining == 0:
            return 1
        key = (remaining, prev, earlier)
        if key in _memo:
            return _memo[key]
        per_vertex = ((1 << prev) - 1) * (1 << earlier)
        total = 0
        for size in range(1, remaining + 1):
            total += (
                _binomial(remaining, size)
                * per_vertex**size
                * layered(remaining - size, size, earlier + prev)
            )
        _memo[key] = total
        return total

    if m == 0:
        return 1
    return sum(
        _binomial(m, size) * layered(m - size, size, 0) for size in range(1, m + 1)
    )


def _binomial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def scalar_reduced_matrices(m: int) -> Iterator[GF2Matrix]:
    """The 0/1 matrices with all principal minors 1: DAG adjacency + identity."""
    for edges in dag_census(m):
        rows = [1 << i for i in range(m)]
        for i, j in edges:
            rows[i - 1] |= 1 << (j - 1)
        yield GF2Matrix(m, tuple(rows))


# ---------------------------------------------------------------------------
# Weighted enumeration and counting
# ---------------------------------------------------------------------------


def _nonzero_vectors(dim: int) -> list[GF2Vector]:
    vs = [GF2Vector(dim, bits) for bits in range(1, 1 << dim)]
    vs.sort(key=GF2Vector.to_string)
    return vs


def enumeration_bound(omega: DimensionFunction) -> int:
    """Loose upper bound on the number of weighted acyclic graphs."""
    bound = 1
    for d in omega.dims:
        bound *= (1 << d) ** (omega.m - 1)
    return bound


def enumerate_acyclic(
    omega: DimensionFunction, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> Iterator[VWDigraph]:
    """Every acyclic weighted digraph exactly once, sorted by serialized matrix."""
    bound = enumeration_bound(omega)
    if bound > budget:
        raise EnumerationBudgetError(bound, budget)
    choices = {d: _nonzero_vectors(d) for d in set(omega.dims)}
    graphs = []
    for edges in dag_census(omega.m):
        pools = [choices[omega.dim(i)] for i, _ in edges]
        for assignment in product(*pools):
            graphs.append(
                VWDigraph(omega, [(i, j, w) for (i, j), w in zip(edges, assignment)])
            )
    graphs.sort(key=lambda g: g.serial)
    yield from graphs


def count_acyclic(omega: DimensionFunction) -> int:
    """Number of acyclic weighted digraphs: sum over DAGs of
    prod_i (2^{dim(i)} - 1)^{outdeg(i)}."""
    total = 0
    for edges in dag_census(omega.m):
        term = 1
        for i, _ in edges:
            term *= (1 << omega.dim(i)) - 1
        total += term
    return total


# ---------------------------------------------------------------------------
# Vanishing sums satisfied by reduced scalar matrices
# ---------------------------------------------------------------------------


def derangement_sum(v: GF2Matrix) -> int:
    """Sum over fixed-point-free permutations of prod_i v[i, sigma(i)], mod 2."""
    n = v.n
    acc = 0
    for sigma in permutations(range(n)):
        if any(sigma[i] == i for i in range(n)):
            continue
        prod_bits = 1
        for i in range(n):
            prod_bits &= v.rows[i] >> sigma[i]
            if not prod_bits & 1:
                break
        acc ^= prod_bits & 1
    return acc


def cycle_sum(v: GF2Matrix, blocked: Iterable[int], i: int) -> int:
    """Sum over orderings of the unblocked vertices of the cyclic product
    v[i,a1] v[a1,a2] ... v[a_last,i], mod 2."""
    n = v.n
    blocked_set = set(blocked)
    if i in blocked_set:
        raise ValueError(f"index {i} is blocked")
    if not 1 <= i <= n:
        raise ValueError(f"index {i} outside 1..{n}")
    if any(not 1 <= b <= n for b in blocked_set):
        raise ValueError("blocked set outside 1..n")
    if len(blocked_set) > n - 2:
        raise ValueError("blocked set leaves fewer than one intermediate vertex")
    rest = sorted(set(range(1, n + 1)) - blocked_set - {i})
    acc = 0
    for order in permutations(rest):
        walk = (i,) + order + (i,)
        prod = 1
        for a, b in zip(walk, walk[1:]):
            prod &= v.entry(a, b)
            if not prod:
                break
        acc ^= prod
    return acc


# ---------------------------------------------------------------------------
# JSON form: {"omega": [...], "edges": [{"from": i, "to": j, "weight": "10"}]}
# ---------------------------------------------------------------------------


def graph_to_json(g: VWDigraph) -> dict:
    return {
        "omega": list(g.omega.dims),
        "edges": [
            {"from": i, "to": j, "weight": w.to_string()} for i, j, w in g.edges
        ],
    }


def graph_from_json(doc: dict) -> VWDigraph:
    try:
        omega = DimensionFunction(tuple(int(d) for d in doc["omega"]))
        weights = [
            (int(e["from"]), int(e["to"]), GF2Vector.from_string(e["weight"]))
            for e in doc.get("edges", [])
        ]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph document: {exc}") from exc
    return VWDigraph(omega, weights)


def dumps_graph(g: VWDigraph) -> str:
    return json.dumps(graph_to_json(g), separators=(", ", ": "))


def loads_graph(text: str) -> VWDigraph:
    return graph_from_json(json.loads(text))
