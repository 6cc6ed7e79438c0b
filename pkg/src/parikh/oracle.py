"""Brute-force reference point sets on bounded boxes.

These are deliberately naive transcriptions of the definitions: breadth-first
saturation for cones and linear sets, configuration search for automata. They
import nothing from the algorithmic modules so that a bug there cannot hide
in here too.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union


@dataclass(frozen=True)
class Box:
    """``{0..radius}^dim`` when unsigned, ``{-radius..radius}^dim`` when signed."""

    dim: int
    radius: int
    signed: bool = False

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("box radius must be nonnegative")
        if self.dim < 1:
            raise ValueError("box dimension must be positive")

    @property
    def low(self) -> int:
        return -self.radius if self.signed else 0

    def __contains__(self, v) -> bool:
        lo, hi = self.low, self.radius
        return all(lo <= x <= hi for x in v)

    def shrink(self, radius: int) -> "Box":
        return Box(self.dim, radius, self.signed)


def _vectors(V) -> list:
    return sorted({tuple(int(x) for x in v) for v in V})


def _signed(vectors) -> bool:
    return any(x < 0 for v in vectors for x in v)


def _as_box(box, dim: int, signed: bool) -> Box:
    if isinstance(box, Box):
        return box
    return Box(dim, int(box), signed)


def _coefficient_pad(gens: list, dim: int, radius: int) -> int:
    # Minimal nonnegative solutions of sum x_i g_i = p with |p| <= radius have
    # every x_i <= m (k t)^(2k+1), t = max(max |g|, radius); ordering the steps
    # generator by generator keeps every prefix within m * cap * a of p.
    m = len(gens)
    a = max(abs(x) for g in gens for x in g)
    t = max(a, radius)
    cap = m * (dim * t) ** (2 * dim + 1)
    return m * cap * a


def _coordinate_monotone(gens: list, dim: int) -> bool:
    return all(
        all(g[e] >= 0 for g in gens) or all(g[e] <= 0 for g in gens)
        for e in range(dim)
    )


def _saturate(seeds: Iterable[tuple], gens: list, lo: list, hi: list) -> set:
    seen = set()
    queue = deque()
    for s in seeds:
        if s not in seen and all(l <= x <= h for l, x, h in zip(lo, s, hi)):
            seen.add(s)
            queue.append(s)
    while queue:
        p = queue.popleft()
        for g in gens:
            q = tuple(a + b for a, b in zip(p, g))
            if q not in seen and all(l <= x <= h for l, x, h in zip(lo, q, hi)):
                seen.add(q)
                queue.append(q)
    return seen


def _linear_points(offsets: list, gens: list, box: Box, pad: Optional[int]) -> set:
    dim = box.dim
    lo = [box.low] * dim
    hi = [box.radius] * dim
    for o in offsets:
        lo = [min(l, x) for l, x in zip(lo, o)]
        hi = [max(h, x) for h, x in zip(hi, o)]
    if gens and pad is None:
        if _coordinate_monotone(gens, dim):
            # partial sums move monotonically from the offset to the target
            pad = 0
        else:
            reach = box.radius + max((abs(x) for o in offsets for x in o), default=0)
            pad = _coefficient_pad(gens, dim, reach)
    pad = pad or 0
    lo = [l - pad for l in lo]
    hi = [h + pad for h in hi]
    pts = _saturate(offsets, gens, lo, hi)
    return {p for p in pts if p in box}


def oracle_cone_points(V, box, pad: Optional[int] = None) -> set:
    """All points of cone_N(V) inside ``box`` (a Box or a radius).

    ``pad`` widens the search region for generators of mixed sign; when
    omitted a sound (possibly enormous) pad is derived from the coefficient
    bound for minimal solutions.
    """
    gens = [g for g in _vectors(V) if any(g)]
    if not gens and not isinstance(box, Box):
        raise ValueError("pass an explicit Box when V has no nonzero vectors")
    dim = box.dim if isinstance(box, Box) else len(gens[0])
    box = _as_box(box, dim, _signed(gens))
    return _linear_points([(0,) * dim], gens, box, pad)


def oracle_semilinear_points(B, box, pad: Optional[int] = None) -> set:
    """Union over the bases of B of their points inside ``box``.

    Bases sharing a generator set are saturated together from all their
    offsets at once.
    """
    dim = B.dim
    groups: dict = {}
    signed = False
    for basis in B.bases:
        gens = tuple(g for g in basis.generators.vectors if any(g))
        groups.setdefault(gens, []).append(tuple(basis.offset))
        signed = signed or _signed(gens) or _signed([basis.offset])
    box = _as_box(box, dim, signed)
    out = set()
    for gens, offsets in groups.items():
        out |= _linear_points(offsets, list(gens), box, pad)
    return out


def oracle_parikh_points(A, box) -> set:
    """Letter-count vectors of accepted words that fit in ``box``.

    Counts only grow along a run, so every prefix of a fitting word fits too
    and the configuration search is exact on the box.
    """
    k = A.k
    box = _as_box(box, k, False)
    r = box.radius
    succ: dict = {}
    for (p, letter, q) in A.transitions:
        succ.setdefault(p, []).append((letter - 1, q))
    start = (A.initial, (0,) * k)
    seen = {start}
    queue = deque([start])
    while queue:
        state, counts = queue.popleft()
        for i, q in succ.get(state, ()):
            if counts[i] < r:
                c = counts[:i] + (counts[i] + 1,) + counts[i + 1:]
                cfg = (q, c)
                if cfg not in seen:
                    seen.add(cfg)
                    queue.append(cfg)
    finals = set(A.finals)
    return {c for (q, c) in seen if q in finals}


@dataclass(frozen=True)
class BoxComparison:
    equal: bool
    witness: Optional[tuple] = None
    side: Optional[str] = None  # "lhs" or "rhs": which side contains the witness

    def __bool__(self):
        return self.equal


PointSource = Union[set, frozenset, Callable[[Box], set]]


def _points(src, box: Box) -> set:
    if callable(src):
        pts = src(box)
    elif hasattr(src, "bases"):
        pts = oracle_semilinear_points(src, box)
    else:
        pts = src
    return {tuple(p) for p in pts if tuple(p) in box}


def compare_on_box(lhs, rhs, box: Box) -> BoxComparison:
    """Set equality of two point sources restricted to ``box``.

    A source is a set of vectors, a semilinear basis, or a callable taking
    the box. On mismatch the smallest differing vector is reported.
    """
    left = _points(lhs, box)
    right = _points(rhs, box)
    if left == right:
        return BoxComparison(True)
    only_left = left - right
    only_right = right - left
    cands = [(p, "lhs") for p in only_left] + [(p, "rhs") for p in only_right]
    p, side = min(cands)
    return BoxComparison(False, p, side)
