"""Normal form of integer cones and semilinear sets with at most k generators.

``cone_N(V)`` is rewritten as a union of linear sets ``P(w; S)`` where each S
is a linearly independent subset of V of size rank(V). The offsets are the
minimal vectors of ``cone_N(V) ∩ cone(S)`` with respect to subtracting
generators of S, found by intersecting a table of small cone_N(V) points with
cone(S).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional

from .errors import DependentGeneratorsError, DimensionError, ExactModeTooLarge
from .geometry import (
    GeneratorSet,
    LinearBasis,
    SemilinearBasis,
    SpanSolver,
    add,
    caratheodory_subcones,
    is_independent,
    scale,
    sub,
    vector,
    zero,
)

# Largest number of box points exact mode is allowed to enumerate.
EXACT_POINT_LIMIT = 4_000_000


@dataclass(frozen=True)
class Bounds:
    t: int
    M: int
    N: int


def theoretical_bounds(m: int, k: int, a: int) -> Bounds:
    """Coefficient cap M and offset box N for m generators in dimension k with entries ≤ a."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    if a < 0:
        raise ValueError("a must be nonnegative")
    t = a * k
    M = (m + k) * (k * t) ** (2 * k + 1)
    N = (m + k) * (k * k * a) ** (2 * k + 2) + a * k
    return Bounds(t, M, N)


@dataclass(frozen=True)
class NormalizeMode:
    kind: str = "exact"
    bound: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("exact", "bounded"):
            raise ValueError(f"unknown normalization mode {self.kind!r}")
        if (self.kind == "bounded") != (self.bound is not None):
            raise ValueError("a bound is required in bounded mode and only there")
        if self.bound is not None and self.bound < 0:
            raise ValueError("bound must be nonnegative")

    @classmethod
    def bounded(cls, bound: int) -> "NormalizeMode":
        return cls("bounded", int(bound))

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"


EXACT = NormalizeMode()


@dataclass(frozen=True)
class ConeDecomposition:
    point: tuple
    canonical: tuple
    floor_coeffs: tuple
    subcone: GeneratorSet


def _as_gens(S) -> GeneratorSet:
    return S if isinstance(S, GeneratorSet) else GeneratorSet(S)


def _independent_solver(S: GeneratorSet) -> SpanSolver:
    # SpanSolver raises DependentGeneratorsError itself
    return SpanSolver(S.vectors)


def _decompose_with(solver: SpanSolver, S: GeneratorSet, v: tuple) -> Optional[ConeDecomposition]:
    lam = solver.solve(v)
    if lam is None or any(x < 0 for x in lam):
        return None
    floors = tuple(math.floor(x) for x in lam)
    canonical = v
    for c, u in zip(floors, S.vectors):
        if c:
            canonical = sub(canonical, scale(c, u))
    return ConeDecomposition(v, canonical, floors, S)


def decompose(S, v) -> Optional[ConeDecomposition]:
    """Split ``v`` in cone(S) into its canonical vector plus whole multiples of S."""
    S = _as_gens(S)
    v = vector(v)
    if len(v) != S.dim:
        raise DimensionError(f"vector of dimension {len(v)} against generators of {S.dim}")
    return _decompose_with(_independent_solver(S), S, v)


def canonical_vectors(S, a: int) -> list:
    """Integer points of the half-open parallelepiped spanned by S, clipped to [-ka, ka]."""
    S = _as_gens(S)
    solver = _independent_solver(S)
    k = S.dim
    lims = []
    for e in range(k):
        lo = sum(min(0, u[e]) for u in S)
        hi = sum(max(0, u[e]) for u in S)
        lims.append(range(max(lo, -k * a), min(hi, k * a) + 1))
    out = []
    for cand in product(*lims):
        lam = solver.solve(cand)
        if lam is not None and all(0 <= x < 1 for x in lam):
            out.append(cand)
    return out


@dataclass
class PointTable:
    """Points of cone_N(V) within a box, each with one witness coefficient tuple.

    ``coeffs`` are indexed like ``generators.vectors``.
    """

    generators: GeneratorSet
    coeff_cap: int
    box: int
    points: dict

    def __contains__(self, v):
        return v in self.points

    def witness(self, v) -> tuple:
        return self.points[v]


def bounded_cone_points(V, coeff_cap: int, box: int) -> PointTable:
    """Stage-wise table of ``sum c_i v_i`` with ``0 <= c_i <= coeff_cap`` inside ``[-box, box]^k``.

    Stage h adds up to ``coeff_cap`` copies of the h-th generator. For
    generators with negative entries, intermediate sums are kept inside the
    box widened by what the remaining stages could still undo, so no final
    in-box point is lost.
    """
    V = _as_gens(V)
    if not len(V):
        raise ValueError("need at least one generator")
    if V.has_zero():
        raise ValueError("the zero vector is not allowed")
    if coeff_cap < 0 or box < 0:
        raise ValueError("coeff_cap and box must be nonnegative")
    k, m = V.dim, len(V)
    natural = V.is_natural()
    a = V.max_abs
    lo_final = 0 if natural else -box

    def pad(h):
        return 0 if natural else (m - h) * coeff_cap * a

    def inside(v, p):
        return all(lo_final - p <= x <= box + p for x in v)

    table = {zero(k): (0,) * m}
    for h, g in enumerate(V.vectors):
        p_now = pad(h)  # pad for sums within stage h (covers both ends)
        frontier = list(table.items())
        for c in range(1, coeff_cap + 1):
            nxt = []
            for v, w in frontier:
                q = add(v, g)
                if q not in table and inside(q, p_now):
                    wq = w[:h] + (w[h] + 1,) + w[h + 1:]
                    table[q] = wq
                    nxt.append((q, wq))
            if not nxt:
                break
            frontier = nxt
        p_next = pad(h + 1)
        table = {v: w for v, w in table.items() if inside(v, p_next)}
    return PointTable(V, coeff_cap, box, table)


def _mode_limits(V: GeneratorSet, mode: NormalizeMode) -> tuple:
    if not mode.is_exact:
        return mode.bound, mode.bound
    b = theoretical_bounds(len(V), V.dim, V.max_abs)
    width = b.N + 1 if V.is_natural() else 2 * b.N + 1
    if width ** V.dim > EXACT_POINT_LIMIT:
        raise ExactModeTooLarge(
            f"exact normalization of {len(V)} generators in dimension {V.dim} needs a box of "
            f"radius {b.N}; use bounded mode")
    return b.M, b.N


def exact_feasible(V) -> bool:
    """Whether exact mode would accept ``V`` without raising ExactModeTooLarge."""
    V = _as_gens(V).without_zero()
    if not len(V) or is_independent(V.vectors):
        return True
    try:
        _mode_limits(V, EXACT)
    except ExactModeTooLarge:
        return False
    return True


def _minimal_in_table(table: PointTable, S: GeneratorSet) -> list:
    solver = _independent_solver(S)
    found = []
    for v in table.points:
        lam = solver.solve(v)
        if lam is None or any(x < 0 for x in lam):
            continue
        # v - u_i stays in cone(S) exactly when its coefficient is at least one
        if any(l >= 1 and sub(v, u) in table for l, u in zip(lam, S.vectors)):
            continue
        found.append(v)
    return sorted(found)


def _check_subcone(V: GeneratorSet, S: GeneratorSet):
    if not S.issubset(V):
        raise ValueError(f"{S} is not a subset of {V}")
    if not is_independent(S.vectors):
        raise DependentGeneratorsError(f"{S} is linearly dependent")


def minimal_vectors(V, S, mode: NormalizeMode = EXACT, table: Optional[PointTable] = None) -> list:
    """Offsets w such that no ``w - u`` (u in S) stays in cone_N(V) ∩ cone(S)."""
    V, S = _as_gens(V), _as_gens(S)
    _check_subcone(V, S)
    if table is None:
        cap, box = _mode_limits(V, mode)
        table = bounded_cone_points(V, cap, box)
    return _minimal_in_table(table, S)


@dataclass(frozen=True)
class ConeNormalForm:
    """Result of normalizing cone_N(V): the basis, T_1 witnesses of every offset, exactness."""

    generators: GeneratorSet
    basis: SemilinearBasis
    witnesses: dict
    exact: bool

    def witness(self, offset) -> tuple:
        return self.witnesses[tuple(offset)]


def cone_normal_form(V, mode: NormalizeMode = EXACT) -> ConeNormalForm:
    """Normalize cone_N(V), keeping witnesses; results are memoized per (V, mode)."""
    return _cone_normal_form(_as_gens(V), mode)


@lru_cache(maxsize=1024)
def _cone_normal_form(V: GeneratorSet, mode: NormalizeMode) -> ConeNormalForm:
    if not len(V):
        raise ValueError("need at least one generator")
    if V.has_zero():
        raise ValueError("the zero vector is not allowed")
    if is_independent(V.vectors):
        # already P(0; V); the only minimal vector is the apex
        apex = zero(V.dim)
        return ConeNormalForm(V, SemilinearBasis(V.dim, (LinearBasis(apex, V),)),
                              {apex: (0,) * len(V)}, True)
    cap, box = _mode_limits(V, mode)
    table = bounded_cone_points(V, cap, box)
    bases = []
    witnesses = {}
    for S in caratheodory_subcones(V):
        for w in _minimal_in_table(table, S):
            bases.append(LinearBasis(w, S))
            witnesses[w] = table.witness(w)
    return ConeNormalForm(V, SemilinearBasis(V.dim, tuple(bases)), witnesses, mode.is_exact)


def normalize_cone(V, mode: NormalizeMode = EXACT) -> SemilinearBasis:
    return cone_normal_form(_as_gens(V), mode).basis


def _needs_normalizing(basis: LinearBasis) -> bool:
    gens = basis.generators
    return len(gens) > gens.dim or not is_independent(gens.vectors)


def normalize_semilinear(B: SemilinearBasis, mode: NormalizeMode = EXACT) -> SemilinearBasis:
    """Rewrite every basis with dependent or more than k generators into normal form."""
    out = []
    for basis in B.bases:
        gens = basis.generators
        if gens.has_zero():
            gens = gens.without_zero()
            basis = LinearBasis(basis.offset, gens)
        if not len(gens) or not _needs_normalizing(basis):
            out.append(basis)
            continue
        for nb in normalize_cone(gens, mode).bases:
            out.append(LinearBasis(add(basis.offset, nb.offset), nb.generators))
    return SemilinearBasis(B.dim, tuple(out))


def is_normalized(B: SemilinearBasis) -> bool:
    return not any(_needs_normalizing(b) for b in B.bases if len(b.generators))
