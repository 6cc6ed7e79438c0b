"""NFAs, boolean reachability matrices indexed by Parikh vectors, and the
dynamic program that builds a semilinear basis of an automaton's Parikh image.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import DimensionError
from .geometry import GeneratorSet, LinearBasis, SemilinearBasis, add, unit, zero
from .normalform import EXACT, NormalizeMode, normalize_semilinear


@dataclass(frozen=True)
class Nfa:
    """States ``0..n-1``; letters ``1..k``; transitions are ``(source, letter, target)``."""

    n: int
    k: int
    initial: int
    finals: tuple
    transitions: tuple
    alphabet: Optional[tuple] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("an NFA needs at least one state")
        if self.k < 1:
            raise ValueError("the alphabet must be nonempty")
        if not 0 <= self.initial < self.n:
            raise ValueError(f"initial state {self.initial} out of range 0..{self.n - 1}")
        finals = tuple(sorted(set(self.finals)))
        if not finals:
            raise ValueError("finals must be nonempty")
        for f in finals:
            if not 0 <= f < self.n:
                raise ValueError(f"final state {f} out of range 0..{self.n - 1}")
        trans = set()
        for t in self.transitions:
            p, a, q = (int(x) for x in t)
            if not (0 <= p < self.n and 0 <= q < self.n):
                raise ValueError(f"transition {(p, a, q)} mentions a state outside 0..{self.n - 1}")
            if not 1 <= a <= self.k:
                raise ValueError(f"transition {(p, a, q)} uses a letter outside 1..{self.k}")
            trans.add((p, a, q))
        alphabet = self.alphabet
        if alphabet is None:
            alphabet = tuple(f"a{i}" for i in range(1, self.k + 1))
        alphabet = tuple(str(x) for x in alphabet)
        if len(alphabet) != self.k or len(set(alphabet)) != self.k:
            raise ValueError("alphabet must list k distinct letter names")
        object.__setattr__(self, "finals", finals)
        object.__setattr__(self, "transitions", tuple(sorted(trans)))
        object.__setattr__(self, "alphabet", alphabet)


def parikh_of_word(w: Sequence[int], k: int) -> tuple:
    counts = [0] * k
    for letter in w:
        if not 1 <= letter <= k:
            raise ValueError(f"letter {letter} outside 1..{k}")
        counts[letter - 1] += 1
    return tuple(counts)


@dataclass(frozen=True)
class BoolMatrix:
    """Square 0-1 matrix; bit j of ``rows[i]`` holds entry (i, j)."""

    n: int
    rows: tuple

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "BoolMatrix":
        return cls(n, (0,) * n)

    @classmethod
    def from_lists(cls, bits) -> "BoolMatrix":
        n = len(bits)
        rows = []
        for r in bits:
            if len(r) != n:
                raise DimensionError("boolean matrix must be square")
            rows.append(sum(1 << j for j, b in enumerate(r) if b))
        return cls(n, tuple(rows))

    def tolists(self) -> list:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def __getitem__(self, ij) -> bool:
        i, j = ij
        return bool((self.rows[i] >> j) & 1)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __matmul__(self, other: "BoolMatrix") -> "BoolMatrix":
        return bool_mul(self, other)

    def __or__(self, other: "BoolMatrix") -> "BoolMatrix":
        return bool_or(self, other)


def bool_mul(M: BoolMatrix, N: BoolMatrix) -> BoolMatrix:
    if M.n != N.n:
        raise DimensionError(f"size mismatch: {M.n} vs {N.n}")
    out = []
    for r in M.rows:
        acc = 0
        h = 0
        while r:
            if r & 1:
                acc |= N.rows[h]
            r >>= 1
            h += 1
        out.append(acc)
    return BoolMatrix(M.n, tuple(out))


def bool_or(M: BoolMatrix, N: BoolMatrix) -> BoolMatrix:
    if M.n != N.n:
        raise DimensionError(f"size mismatch: {M.n} vs {N.n}")
    return BoolMatrix(M.n, tuple(a | b for a, b in zip(M.rows, N.rows)))


@dataclass
class CycleTypeTable:
    """``matrices[v][i, j]`` is set iff some path from state i to j has Parikh image v.

    Keys are all ``v`` in N^k with entry sum at most n.
    """

    n: int
    k: int
    matrices: dict = field(repr=False)

    def __getitem__(self, v) -> BoolMatrix:
        return self.matrices[tuple(v)]


def _layer(k: int, total: int):
    """All vectors in N^k with entry sum ``total``, lexicographically."""
    if k == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _layer(k - 1, total - first):
            yield (first,) + rest


def bounded_vectors(k: int, n: int) -> list:
    return [v for s in range(n + 1) for v in _layer(k, s)]


def _pivot_product(table: dict, v: tuple, i: int, step: BoolMatrix, n: int) -> BoolMatrix:
    # M_v = OR over u <= v with u_i = 0 of M_u . M_{e_i} . M_{v - e_i - u}
    ranges = [range(1) if j == i else range(x + 1) for j, x in enumerate(v)]
    acc = 0
    rows = [0] * n
    for u in product(*ranges):
        mu = table[u]
        if mu.is_zero():
            continue
        left = bool_mul(mu, step)
        if left.is_zero():
            continue
        w = tuple(x - y - (1 if j == i else 0) for j, (x, y) in enumerate(zip(v, u)))
        mw = table[w]
        if mw.is_zero():
            continue
        prod_rows = bool_mul(left, mw).rows
        rows = [a | b for a, b in zip(rows, prod_rows)]
        acc = 1
    return BoolMatrix(n, tuple(rows)) if acc else BoolMatrix.zeros(n)


def cycle_type_table(A: Nfa, pivot: str = "first") -> CycleTypeTable:
    """Reachability matrices for every Parikh vector with entry sum ≤ n.

    Built layer by layer in total letter count. ``pivot`` picks which nonzero
    coordinate the recurrence splits on ("first" or "last"); the table does
    not depend on the choice.
    """
    if pivot not in ("first", "last"):
        raise ValueError("pivot must be 'first' or 'last'")
    n, k = A.n, A.k
    table = {zero(k): BoolMatrix.identity(n)}
    steps = []
    for letter in range(1, k + 1):
        rows = [0] * n
        for (p, a, q) in A.transitions:
            if a == letter:
                rows[p] |= 1 << q
        steps.append(BoolMatrix(n, tuple(rows)))
    for total in range(1, n + 1):
        for v in _layer(k, total):
            nz = [j for j, x in enumerate(v) if x]
            i = nz[0] if pivot == "first" else nz[-1]
            if total == 1:
                table[v] = steps[i]
            else:
                table[v] = _pivot_product(table, v, i, steps[i], n)
    return CycleTypeTable(n, k, table)


def gamma_sets(A: Nfa, T: Optional[CycleTypeTable] = None) -> list:
    """Per state, the nonzero Parikh vectors of closed walks of length ≤ n through it."""
    if T is None:
        T = cycle_type_table(A)
    out = []
    for i in range(A.n):
        out.append(sorted(v for v, m in T.matrices.items() if any(v) and m[i, i]))
    return out


NORMALIZATIONS = ("off", "step", "final")


def path_length_cap(n: int) -> int:
    """Longest accepting path the dynamic program needs to enumerate.

    (n-1)^2 for n >= 3. Two states need paths of length 2: with q0 = qF the
    word must be able to leave q0, loop at the other state and come back, and
    that loop only counts once the base path has visited its state.
    """
    return max((n - 1) ** 2, n * (n - 1) // 2 + 1)


def parikh_image(A: Nfa, normalize: str = "off", mode: NormalizeMode = EXACT,
                 max_length: Optional[int] = None, prune: bool = True) -> SemilinearBasis:
    """Semilinear basis of the Parikh image of ``A``.

    With ``normalize="off"`` offsets are Parikh images of accepting paths of
    length ≤ ``path_length_cap(n)`` and generators are cycle types met by the path.
    ``"step"`` rewrites oversized or dependent generator sets into normal form
    after every path-length layer, ``"final"`` only once at the end.

    ``prune`` drops a candidate ``<w; S>`` when an earlier candidate at the
    same state is ``<w - g; S'>`` with ``S ⊆ S'`` and ``g`` in ``S ∪ {0}``;
    every continuation of the dropped one is then covered by a continuation of
    the other, so the denoted set is unchanged.
    """
    if normalize not in NORMALIZATIONS:
        raise ValueError(f"normalize must be one of {NORMALIZATIONS}")
    return _parikh_image(A, normalize, mode, max_length, prune)


@lru_cache(maxsize=256)
def _parikh_image(A: Nfa, normalize: str, mode: NormalizeMode,
                  max_length: Optional[int], prune: bool) -> SemilinearBasis:
    n, k = A.n, A.k
    gammas = [GeneratorSet(g, dim=k) for g in gamma_sets(A)]
    length = path_length_cap(n) if max_length is None else max_length
    incoming: dict = {}
    for (p, a, q) in A.transitions:
        incoming.setdefault(q, []).append((p, a))

    seen = [dict() for _ in range(n)]  # state -> offset -> list of generator frozensets

    def subsumed(j, offset, gens: GeneratorSet) -> bool:
        index = seen[j]
        gset = frozenset(gens.vectors)
        for g in (zero(k),) + gens.vectors:
            key = tuple(x - y for x, y in zip(offset, g))
            for other in index.get(key, ()):
                if gset <= other:
                    return True
        return False

    def record(j, basis: LinearBasis):
        seen[j].setdefault(basis.offset, []).append(frozenset(basis.generators.vectors))

    def admit(j, bases) -> list:
        kept = []
        for b in sorted(set(bases)):
            if prune and subsumed(j, b.offset, b.generators):
                record(j, b)
                continue
            if not prune and frozenset(b.generators.vectors) in seen[j].get(b.offset, ()):
                continue
            record(j, b)
            kept.append(b)
        return kept

    def normalize_layer(layer):
        out = []
        for bases in layer:
            if bases:
                bases = list(normalize_semilinear(SemilinearBasis(k, tuple(bases)), mode).bases)
            out.append(bases)
        return out

    layer = [[] for _ in range(n)]
    layer[A.initial] = admit(A.initial, [LinearBasis(zero(k), gammas[A.initial])])
    if normalize == "step":
        layer = normalize_layer(layer)
    accepted = [b for f in A.finals for b in layer[f]]
    for _ in range(length):
        nxt = [[] for _ in range(n)]
        for j in range(n):
            cands = []
            for (h, letter) in incoming.get(j, ()):
                e = unit(k, letter - 1)
                for b in layer[h]:
                    cands.append(LinearBasis(add(b.offset, e), b.generators.union(gammas[j])))
            nxt[j] = admit(j, cands)
        if normalize == "step":
            nxt = normalize_layer(nxt)
        layer = nxt
        accepted.extend(b for f in A.finals for b in layer[f])
        if not any(layer):
            break
    result = SemilinearBasis(k, tuple(accepted))
    if normalize == "final":
        result = normalize_semilinear(result, mode)
    return result
