"""Exact rational linear algebra on integer vectors and semilinear-set arithmetic.

Vectors are plain tuples of Python ints; tuple comparison gives the canonical
lexicographic order. Nothing in here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import DependentGeneratorsError, DimensionError

IntVector = tuple


def vector(entries: Iterable[int]) -> IntVector:
    out = []
    for x in entries:
        if isinstance(x, bool) or int(x) != x:
            raise TypeError(f"vector entries must be integers, got {x!r}")
        out.append(int(x))
    if not out:
        raise DimensionError("vectors must have positive dimension")
    return tuple(out)


def zero(dim: int) -> IntVector:
    return (0,) * dim


def unit(dim: int, i: int) -> IntVector:
    """Standard basis vector with a one at 0-based position ``i``."""
    return tuple(1 if j == i else 0 for j in range(dim))


def add(u: IntVector, v: IntVector) -> IntVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: IntVector, v: IntVector) -> IntVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: int, u: IntVector) -> IntVector:
    return tuple(c * a for a in u)


def _check_dims(*vectors: IntVector) -> int:
    dims = {len(v) for v in vectors}
    if len(dims) != 1:
        raise DimensionError(f"dimension mismatch: {sorted(dims)}")
    return dims.pop()


def dominates(u: IntVector, v: IntVector) -> bool:
    """Componentwise order: True iff ``u[i] <= v[i]`` for every i."""
    _check_dims(u, v)
    return all(a <= b for a, b in zip(u, v))


class GeneratorSet:
    """Sorted, duplicate-free set of integer vectors of a common dimension."""

    __slots__ = ("vectors", "dim", "_hash")

    def __init__(self, vectors: Iterable[Sequence[int]] = (), dim: Optional[int] = None):
        vecs = sorted({vector(v) for v in vectors})
        if vecs:
            d = _check_dims(*vecs)
            if dim is not None and dim != d:
                raise DimensionError(f"expected dimension {dim}, got {d}")
            dim = d
        elif dim is None:
            raise DimensionError("an empty generator set needs an explicit dimension")
        self.vectors: tuple = tuple(vecs)
        self.dim: int = dim
        self._hash = hash((self.dim, self.vectors))

    @property
    def max_abs(self) -> int:
        return max((abs(x) for v in self.vectors for x in v), default=0)

    def has_zero(self) -> bool:
        return zero(self.dim) in self.vectors

    def is_natural(self) -> bool:
        return all(x >= 0 for v in self.vectors for x in v)

    def without_zero(self) -> "GeneratorSet":
        z = zero(self.dim)
        return GeneratorSet([v for v in self.vectors if v != z], dim=self.dim)

    def union(self, other: "GeneratorSet") -> "GeneratorSet":
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return GeneratorSet(self.vectors + other.vectors, dim=self.dim)

    def issubset(self, other: "GeneratorSet") -> bool:
        return set(self.vectors) <= set(other.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __contains__(self, v):
        return tuple(v) in self.vectors

    def __eq__(self, other):
        if not isinstance(other, GeneratorSet):
            return NotImplemented
        return self.dim == other.dim and self.vectors == other.vectors

    def __lt__(self, other: "GeneratorSet"):
        return (self.dim, self.vectors) < (other.dim, other.vectors)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"GeneratorSet({list(self.vectors)!r})"


@dataclass(frozen=True, order=True)
class LinearBasis:
    """The pair <offset; generators>, denoting offset + cone_N(generators)."""

    offset: IntVector
    generators: GeneratorSet

    def __post_init__(self):
        object.__setattr__(self, "offset", vector(self.offset))
        if not isinstance(self.generators, GeneratorSet):
            object.__setattr__(self, "generators", GeneratorSet(self.generators, dim=len(self.offset)))
        if self.generators.dim != len(self.offset):
            raise DimensionError(
                f"offset has dimension {len(self.offset)} but generators have {self.generators.dim}")

    @property
    def dim(self) -> int:
        return len(self.offset)

    def size(self) -> int:
        """Unary size: sum of absolute values of all stored numbers."""
        return sum(abs(x) for x in self.offset) + sum(abs(x) for v in self.generators for x in v)


@dataclass(frozen=True)
class SemilinearBasis:
    """A finite union of linear sets; bases are deduplicated and kept sorted."""

    dim: int
    bases: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("dimension must be positive")
        bases = []
        for b in self.bases:
            if not isinstance(b, LinearBasis):
                b = LinearBasis(*b)
            if b.dim != self.dim:
                raise DimensionError(f"basis of dimension {b.dim} in a {self.dim}-dimensional set")
            bases.append(b)
        object.__setattr__(self, "bases", tuple(sorted(set(bases))))

    def __iter__(self):
        return iter(self.bases)

    def __len__(self):
        return len(self.bases)

    def size(self) -> int:
        return sum(b.size() for b in self.bases)

    def max_generators(self) -> int:
        return max((len(b.generators) for b in self.bases), default=0)


def _row_reduce(rows: list) -> list:
    """In-place Gauss-Jordan over Fractions; returns pivot columns."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(V) -> int:
    vecs = list(V)
    if not vecs:
        raise ValueError("rank of an empty vector set is undefined here")
    _check_dims(*vecs)
    rows = [[Fraction(x) for x in v] for v in vecs]
    return len(_row_reduce(rows))


def is_independent(S) -> bool:
    vecs = list(S)
    return not vecs or rank(vecs) == len(vecs)


class SpanSolver:
    """Precomputed left inverse for a linearly independent vector list.

    Solving reuses one d-by-d inverse on a set of pivot coordinates, then
    checks the remaining coordinates, so repeated queries against the same
    generators avoid re-running elimination.
    """

    def __init__(self, S):
        self.vectors = list(S)
        if not self.vectors:
            raise ValueError("empty generator list")
        self.dim = _check_dims(*self.vectors)
        d = len(self.vectors)
        # columns u_1..u_d as a k x d matrix; find d independent rows
        cols = [[Fraction(x) for x in u] for u in self.vectors]
        rows = [list(r) for r in zip(*cols)]  # k x d
        transposed = [[rows[i][j] for i in range(self.dim)] for j in range(d)]  # d x k
        pivots = _row_reduce([list(r) for r in transposed])
        if len(pivots) != d:
            raise DependentGeneratorsError(f"generators {self.vectors} are linearly dependent")
        self.rows = pivots
        sub_m = [rows[i] for i in pivots]  # d x d
        aug = [list(sub_m[i]) + [Fraction(int(i == j)) for j in range(d)] for i in range(d)]
        _row_reduce(aug)
        self.inverse = [r[d:] for r in aug]

    def solve(self, v: IntVector) -> Optional[list]:
        if len(v) != self.dim:
            raise DimensionError(f"vector of dimension {len(v)} against {self.dim}")
        rhs = [v[i] for i in self.rows]
        lam = [sum((a * b for a, b in zip(r, rhs)), Fraction(0)) for r in self.inverse]
        for e in range(self.dim):
            if sum(l * u[e] for l, u in zip(lam, self.vectors)) != v[e]:
                return None
        return lam


def solve_in_span(S, v: IntVector) -> Optional[list]:
    """Unique rational coefficients expressing ``v`` over independent ``S``, or None."""
    return SpanSolver(S).solve(vector(v))


def cone_contains(S, v: IntVector) -> Optional[list]:
    lam = solve_in_span(S, v)
    if lam is None or any(x < 0 for x in lam):
        return None
    return lam


def caratheodory_subcones(V) -> list:
    """All linearly independent rank(V)-subsets of ``V``, in canonical order.

    Their real cones cover cone(V).
    """
    gens = V if isinstance(V, GeneratorSet) else GeneratorSet(V)
    if not len(gens):
        raise ValueError("caratheodory_subcones needs a nonempty set")
    if gens.has_zero():
        raise ValueError("the zero vector is not allowed")
    d = rank(gens.vectors)
    out = [GeneratorSet(c, dim=gens.dim) for c in combinations(gens.vectors, d) if rank(c) == d]
    return sorted(set(out))


def sum_semilinear(B1: SemilinearBasis, B2: SemilinearBasis) -> SemilinearBasis:
    if B1.dim != B2.dim:
        raise DimensionError(f"dimension mismatch: {B1.dim} vs {B2.dim}")
    bases = [LinearBasis(add(x.offset, y.offset), x.generators.union(y.generators))
             for x in B1.bases for y in B2.bases]
    return SemilinearBasis(B1.dim, tuple(bases))


def union_semilinear(*parts: SemilinearBasis) -> SemilinearBasis:
    dims = {p.dim for p in parts}
    if len(dims) != 1:
        raise DimensionError(f"dimension mismatch: {sorted(dims)}")
    return SemilinearBasis(dims.pop(), tuple(b for p in parts for b in p.bases))
