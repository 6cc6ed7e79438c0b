"""Membership in linear, semilinear and Parikh-image sets, and feasibility of
``A x = b, x >= 0`` over the integers.

Once generators are linearly independent, membership of ``b`` in ``P(w; S)``
is a single rational linear solve followed by a nonnegative-integrality
check, so query cost depends on the bit length of ``b`` only.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .automata import Nfa, parikh_image
from .errors import DependentGeneratorsError, DimensionError, ExactModeTooLarge, Inconclusive
from .geometry import (
    GeneratorSet,
    LinearBasis,
    SemilinearBasis,
    SpanSolver,
    caratheodory_subcones,
    cone_contains,
    sub,
    vector,
)
from .normalform import (
    EXACT,
    NormalizeMode,
    cone_normal_form,
    exact_feasible,
    is_normalized,
    normalize_semilinear,
)

# Largest box (number of lattice points) the brute-force fallbacks will scan.
ENUMERATION_LIMIT = 1_000_000


@lru_cache(maxsize=4096)
def _solver(gens: GeneratorSet) -> SpanSolver:
    return SpanSolver(gens.vectors)


def linear_member(b, basis: LinearBasis) -> Optional[tuple]:
    """Coefficients ``x`` in N^d with ``offset + sum x_i u_i = b``, or None.

    The generators must be linearly independent; normalize first otherwise.
    """
    b = vector(b)
    if len(b) != basis.dim:
        raise DimensionError(f"query of dimension {len(b)} against a {basis.dim}-dimensional basis")
    rest = sub(b, basis.offset)
    gens = basis.generators
    if not len(gens):
        return () if not any(rest) else None
    try:
        lam = _solver(gens).solve(rest)
    except DependentGeneratorsError as exc:
        raise DependentGeneratorsError(
            f"{exc}; normalize the basis with normalize_semilinear first") from None
    if lam is None or any(x < 0 or x.denominator != 1 for x in lam):
        return None
    return tuple(int(x) for x in lam)


def _member(b: tuple, B: SemilinearBasis) -> bool:
    return any(linear_member(b, basis) is not None for basis in B.bases)


def semilinear_member(b, B: SemilinearBasis, mode: NormalizeMode = EXACT) -> bool:
    """Whether ``b`` lies in the set denoted by ``B``.

    Bases with dependent generators are normalized with ``mode`` first. A
    negative answer reached through bounded normalization raises Inconclusive.
    """
    b = vector(b)
    if len(b) != B.dim:
        raise DimensionError(f"query of dimension {len(b)} against a {B.dim}-dimensional set")
    if is_normalized(B):
        return _member(b, B)
    found = _member(b, normalize_semilinear(B, mode))
    if not found and not mode.is_exact:
        raise Inconclusive(f"{b} not found in a bounded (bound {mode.bound}) normal form")
    return found


def _natural_reach(gens: tuple, corner: tuple) -> set:
    """Points of cone_N(gens) that are componentwise ≤ ``corner`` (gens in N^k)."""
    start = (0,) * len(corner)
    seen = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(x + y for x, y in zip(p, g))
            if q not in seen and all(x <= c for x, c in zip(q, corner)):
                seen.add(q)
                queue.append(q)
    return seen


def _box_volume(corner) -> int:
    vol = 1
    for x in corner:
        vol *= x + 1
    return vol


def enumerate_member(b, B: SemilinearBasis) -> bool:
    """Membership by bounded search; every generator must lie in N^k."""
    b = vector(b)
    if len(b) != B.dim:
        raise DimensionError(f"query of dimension {len(b)} against a {B.dim}-dimensional set")
    reach: dict = {}
    for basis in B.bases:
        rest = sub(b, basis.offset)
        if any(x < 0 for x in rest):
            continue
        gens = tuple(g for g in basis.generators if any(g))
        if any(x < 0 for g in gens for x in g):
            raise ValueError("enumerate_member needs generators in N^k")
        if gens not in reach:
            reach[gens] = _natural_reach(gens, b)
        if rest in reach[gens]:
            return True
    return False


STRATEGIES = ("auto", "normalize", "enumerate")


@lru_cache(maxsize=256)
def _normalized_image(A: Nfa, mode: NormalizeMode) -> SemilinearBasis:
    return normalize_semilinear(parikh_image(A), mode)


def _exact_normalizable(B: SemilinearBasis) -> bool:
    return all(exact_feasible(basis.generators) for basis in B.bases)


def nfa_member(A: Nfa, b, strategy: str = "auto", mode: Optional[NormalizeMode] = None) -> bool:
    """Whether some accepted word of ``A`` has letter counts ``b``.

    ``normalize`` brings the cached Parikh image into normal form (exact mode
    unless ``mode`` is given) and solves one linear system per basis;
    ``enumerate`` searches the box below ``b``. ``auto`` takes exact
    normalization when it is affordable, else enumeration when the box below
    ``b`` is small, else the bounded ``mode`` if one was supplied.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}")
    b = vector(b)
    if len(b) != A.k:
        raise DimensionError(f"query of dimension {len(b)} for an alphabet of size {A.k}")
    if any(x < 0 for x in b):
        return False
    image = parikh_image(A)
    if strategy == "auto":
        if mode is None and _exact_normalizable(image):
            strategy, mode = "normalize", EXACT
        elif _box_volume(b) <= ENUMERATION_LIMIT:
            strategy = "enumerate"
        elif mode is not None:
            strategy = "normalize"
        else:
            raise ExactModeTooLarge(
                "exact normalization is too large and the query box too big to enumerate; "
                "supply a bounded mode")
    if strategy == "enumerate":
        return enumerate_member(b, image)
    mode = EXACT if mode is None else mode
    found = _member(b, _normalized_image(A, mode))
    if not found and not mode.is_exact:
        raise Inconclusive(f"{b} not found in a bounded (bound {mode.bound}) normal form")
    return found


@dataclass(frozen=True)
class IpInstance:
    """``matrix`` is k rows of m integers; ``target`` has length k."""

    matrix: tuple
    target: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.matrix)
        if not rows or not rows[0]:
            raise ValueError("the matrix needs at least one row and one column")
        if len({len(r) for r in rows}) != 1:
            raise ValueError("matrix rows have different lengths")
        target = vector(self.target)
        if len(target) != len(rows):
            raise DimensionError(f"target has {len(target)} entries for {len(rows)} rows")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "target", target)

    @property
    def columns(self) -> list:
        return [tuple(c) for c in zip(*self.matrix)]

    def evaluate(self, x: Sequence[int]) -> tuple:
        return tuple(sum(a * xi for a, xi in zip(row, x)) for row in self.matrix)


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    witness: Optional[tuple] = None
    verified: bool = True

    @property
    def inconclusive(self) -> bool:
        return not self.feasible and not self.verified


def _confirm_infeasible(V: GeneratorSet, b: tuple) -> bool:
    # outside the real cone means outside the integer cone
    if not any(cone_contains(S, b) is not None for S in caratheodory_subcones(V)):
        return True
    if V.is_natural() and all(x >= 0 for x in b) and _box_volume(b) <= ENUMERATION_LIMIT:
        from .oracle import Box, oracle_cone_points

        return b not in oracle_cone_points(V, Box(V.dim, max(b)))
    return False


def ip_feasible(inst: IpInstance, mode: NormalizeMode = EXACT) -> Feasibility:
    """Decide ``A x = b`` over ``x`` in N^m by normalizing the column cone."""
    b = inst.target
    m = len(inst.matrix[0])
    cols = inst.columns
    index = {}
    for i, c in enumerate(cols):
        if any(c):
            index.setdefault(c, i)
    if not index:
        return Feasibility(True, (0,) * m) if not any(b) else Feasibility(False)
    V = GeneratorSet(index, dim=len(b))
    nf = cone_normal_form(V, mode)
    for basis in nf.basis.bases:
        coeffs = linear_member(b, basis)
        if coeffs is None:
            continue
        x = [0] * m
        for g, c in zip(V.vectors, nf.witness(basis.offset)):
            x[index[g]] += c
        for g, c in zip(basis.generators.vectors, coeffs):
            x[index[g]] += c
        x = tuple(x)
        if inst.evaluate(x) != b:
            raise AssertionError(f"reconstructed witness {x} does not solve the program")
        return Feasibility(True, x)
    if mode.is_exact:
        return Feasibility(False)
    return Feasibility(False, None, _confirm_infeasible(V, b))


def reachable_by_moves(moves, target, mode: NormalizeMode = EXACT) -> Feasibility:
    """Can a walker starting at the origin reach ``target`` using the given move types?"""
    moves = [vector(v) for v in moves]
    if not moves:
        raise ValueError("need at least one move")
    matrix = tuple(zip(*moves))
    return ip_feasible(IpInstance(matrix, tuple(target)), mode)
