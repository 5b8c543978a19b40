"""Exact linear algebra over GF(2).

Vectors are fixed-dimension bit fields with 1-indexed coordinates;
matrices are square with bit-packed rows.  Everything here is an
immutable value and every function is pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from .permutation import Permutation

if TYPE_CHECKING:  # pragma: no cover
    from .digraph import VectorMatrix

# One machine word is plenty: desk-scale runs never need more than ~8
# coordinates, and a flat int keeps exhaustive sweeps fast.
MAX_DIM = 62


@dataclass(frozen=True)
class GF2Vector:
    """Vector over GF(2) with coordinates 1..dim; coordinate k sits at bit k-1."""

    dim: int
    bits: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"vector dimension must be in 1..{MAX_DIM}, got {self.dim}")
        if not 0 <= self.bits < (1 << self.dim):
            raise ValueError(f"bits 0x{self.bits:x} out of range for dimension {self.dim}")

    def bit(self, k: int) -> int:
        if not 1 <= k <= self.dim:
            raise ValueError(f"coordinate {k} outside 1..{self.dim}")
        return (self.bits >> (k - 1)) & 1

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def coords(self) -> tuple[int, ...]:
        return tuple(self.bit(k) for k in range(1, self.dim + 1))

    def to_string(self) -> str:
        """Bit string with coordinate 1 leftmost, e.g. (1,0,1) -> "101"."""
        return "".join(str(self.bit(k)) for k in range(1, self.dim + 1))

    @classmethod
    def from_string(cls, text: str) -> "GF2Vector":
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"invalid bit string {text!r}")
        bits = 0
        for k, c in enumerate(text, start=1):
            if c == "1":
                bits |= 1 << (k - 1)
        return cls(len(text), bits)

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "GF2Vector":
        bits = 0
        for k, c in enumerate(coords, start=1):
            if c not in (0, 1):
                raise ValueError(f"coordinate {c!r} is not a GF(2) scalar")
            if c:
                bits |= 1 << (k - 1)
        return cls(len(coords), bits)

    @classmethod
    def zero(cls, dim: int) -> "GF2Vector":
        return cls(dim, 0)

    @classmethod
    def all_ones(cls, dim: int) -> "GF2Vector":
        return cls(dim, (1 << dim) - 1)

    @classmethod
    def all_ones_except(cls, dim: int, k: int) -> "GF2Vector":
        """The vector with every coordinate 1 except the k-th."""
        if not 1 <= k <= dim:
            raise ValueError(f"coordinate {k} outside 1..{dim}")
        return cls(dim, ((1 << dim) - 1) ^ (1 << (k - 1)))

    def __repr__(self) -> str:
        return f"GF2Vector({self.to_string()!r})"


def gf2_add(a: GF2Vector, b: GF2Vector) -> GF2Vector:
    """Coordinatewise sum mod 2."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return GF2Vector(a.dim, a.bits ^ b.bits)


def gf2_permute(sigma: Permutation, v: GF2Vector) -> GF2Vector:
    """Permute coordinates: the i-th coordinate of the result is v_{sigma(i)}.

    Under this convention permuting by sigma and then by tau equals a
    single permute by sigma∘tau (see Permutation.compose).
    """
    if sigma.degree != v.dim:
        raise ValueError(f"degree mismatch: permutation on 1..{sigma.degree}, vector dim {v.dim}")
    bits = 0
    for i, img in enumerate(sigma.images):
        bits |= ((v.bits >> (img - 1)) & 1) << i
    return GF2Vector(v.dim, bits)


@dataclass(frozen=True)
class GF2Matrix:
    """Square 0/1 matrix; row i is the bit-packed int rows[i-1], bit j-1 = entry (i,j)."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("matrix size must be positive")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        for r in self.rows:
            if not 0 <= r < (1 << self.n):
                raise ValueError(f"row 0x{r:x} out of range for size {self.n}")

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"entry ({i},{j}) outside 1..{self.n}")
        return (self.rows[i - 1] >> (j - 1)) & 1

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "GF2Matrix":
        packed = []
        for row in rows:
            bits = 0
            for j, c in enumerate(row):
                if c not in (0, 1):
                    raise ValueError(f"entry {c!r} is not a GF(2) scalar")
                if c:
                    bits |= 1 << j
            packed.append(bits)
        return cls(len(packed), tuple(packed))

    def mul(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.n != other.n:
            raise ValueError("size mismatch in matrix product")
        out = []
        for r in self.rows:
            acc = 0
            j = 0
            while r:
                if r & 1:
                    acc ^= other.rows[j]
                r >>= 1
                j += 1
            out.append(acc)
        return GF2Matrix(self.n, tuple(out))

    def to_lists(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]


def gf2_det(m: GF2Matrix) -> int:
    """Determinant over GF(2) by Gaussian elimination on bit-packed rows."""
    rows = list(m.rows)
    n = m.n
    for col in range(n):
        mask = 1 << col
        pivot = next((r for r in range(col, n) if rows[r] & mask), None)
        if pivot is None:
            return 0
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(col + 1, n):
            if rows[r] & mask:
                rows[r] ^= rows[col]
    return 1


def gf2_inverse(m: GF2Matrix) -> GF2Matrix:
    """Inverse over GF(2); raises ValueError on a singular input."""
    n = m.n
    # Augment each row with the identity in the high bits.
    rows = [m.rows[i] | (1 << (n + i)) for i in range(n)]
    for col in range(n):
        mask = 1 << col
        pivot = next((r for r in range(col, n) if rows[r] & mask), None)
        if pivot is None:
            raise ValueError("singular matrix over GF(2)")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(n):
            if r != col and rows[r] & mask:
                rows[r] ^= rows[col]
    return GF2Matrix(n, tuple(row >> n for row in rows))


def all_principal_minors_one(m: GF2Matrix) -> bool:
    """True iff every nonempty principal minor of m equals 1."""
    n = m.n
    # 1x1 minors first: cheap rejection for almost all inputs.
    for i in range(n):
        if not (m.rows[i] >> i) & 1:
            return False
    indices = list(range(n))
    for subset_mask in range(1, 1 << n):
        chosen = [i for i in indices if subset_mask >> i & 1]
        if len(chosen) < 2:
            continue
        sub = GF2Matrix(
            len(chosen),
            tuple(
                sum(((m.rows[i] >> j) & 1) << col for col, j in enumerate(chosen))
                for i in chosen
            ),
        )
        if gf2_det(sub) != 1:
            return False
    return True


def specialize(a: "VectorMatrix", ks: Sequence[int]) -> GF2Matrix:
    """Pick coordinate ks[i] in every entry of row i, giving a scalar matrix."""
    m = a.omega.m
    if len(ks) != m:
        raise ValueError(f"expected {m} coordinate indices, got {len(ks)}")
    rows = []
    for i in range(1, m + 1):
        k = ks[i - 1]
        if not 1 <= k <= a.omega.dim(i):
            raise ValueError(f"coordinate {k} outside 1..{a.omega.dim(i)} in row {i}")
        bits = 0
        for j in range(1, m + 1):
            if a.entry(i, j).bit(k):
                bits |= 1 << (j - 1)
        rows.append(bits)
    return GF2Matrix(m, tuple(rows))
