"""Generators for the lower-bound automata, the doubling grammar and the
Hamiltonian-path reduction, used as regression inputs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .automata import Nfa


def gen_partition_dfa(n: int, k: int) -> Nfa:
    """Chain of n+1 states where every letter advances; accepts exactly the words of length n."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    trans = [(i, a, i + 1) for i in range(n) for a in range(1, k + 1)]
    return Nfa(n + 1, k, 0, (n,), tuple(trans), tuple(f"a{i}" for i in range(1, k + 1)))


def quadratic_letters(n: int) -> tuple:
    names = ["a", "b", "c"]
    for i in range(1, n + 1):
        names += [f"a{i}", f"a{i}'"]
    return tuple(names)


def gen_quadratic_dfa(n: int) -> Nfa:
    """DFA for ``b (a^i a_i a_i'* c)* b`` over i = 1..n, with 2n+3 states.

    States: q0 = 0, p_0..p_n = 1..n+1, p'_1..p'_n = n+2..2n+1, qF = 2n+2.
    Letters (1-based): a=1, b=2, c=3, a_i = 2i+2, a'_i = 2i+3.
    """
    if n < 1:
        raise ValueError("n must be positive")
    q0, qf = 0, 2 * n + 2

    def p(i):
        return 1 + i

    def pp(i):
        return n + 1 + i

    a, b, c = 1, 2, 3
    trans = [(q0, b, p(0)), (p(0), b, qf)]
    for i in range(1, n + 1):
        trans.append((p(i - 1), a, p(i)))
        trans.append((p(i), 2 * i + 2, pp(i)))
        trans.append((pp(i), 2 * i + 3, pp(i)))
        trans.append((pp(i), c, p(0)))
    return Nfa(2 * n + 3, 2 * n + 3, q0, (qf,), tuple(trans), quadratic_letters(n))


@dataclass(frozen=True)
class UnaryCfg:
    """Grammar over the single terminal ``"a"``.

    ``rules`` is a tuple of ``(lhs, rhs)`` with ``rhs`` a tuple of symbols;
    the empty tuple is an epsilon rule.
    """

    start: str
    rules: tuple

    TERMINAL = "a"

    def __post_init__(self):
        rules = tuple((str(lhs), tuple(str(s) for s in rhs)) for lhs, rhs in self.rules)
        object.__setattr__(self, "rules", rules)

    @property
    def nonterminals(self) -> list:
        out = []
        for lhs, _ in self.rules:
            if lhs not in out:
                out.append(lhs)
        return out


def gen_doubling_cfg(n: int) -> UnaryCfg:
    """Grammar whose language is a^i for 0 <= i < 2^n, with O(n) rules."""
    if n < 1:
        raise ValueError("n must be positive")
    rules = [("S", tuple(f"A{i}" for i in range(n)))]
    for i in range(n):
        rules.append((f"A{i}", ()))
        rules.append((f"A{i}", (f"B{i}",)))
    for i in range(1, n):
        rules.append((f"B{i}", (f"B{i-1}", f"B{i-1}")))
    rules.append(("B0", ("a",)))
    return UnaryCfg("S", tuple(rules))


def unary_cfg_lengths(g: UnaryCfg, bound: int) -> set:
    """Word lengths derivable from the start symbol, up to ``bound``.

    Length sets are int bitmasks (bit i set = length i derivable); the least
    fixpoint is reached by Kleene iteration.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    nts = set(g.nonterminals)
    if g.start not in nts:
        raise ValueError(f"start symbol {g.start!r} has no rules")
    if UnaryCfg.TERMINAL in nts:
        raise ValueError("the terminal 'a' cannot be a nonterminal")
    for lhs, rhs in g.rules:
        for s in rhs:
            if s != UnaryCfg.TERMINAL and s not in nts:
                raise ValueError(f"rule {lhs} -> {' '.join(rhs)} uses undefined nonterminal {s!r}")
    mask = (1 << (bound + 1)) - 1

    def concat(x: int, y: int) -> int:
        out = 0
        i = 0
        while x:
            if x & 1:
                out |= y << i
            x >>= 1
            i += 1
        return out & mask

    lengths = {nt: 0 for nt in nts}
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.rules:
            acc = 1  # {0}
            for s in rhs:
                acc = concat(acc, 2 if s == UnaryCfg.TERMINAL else lengths[s])
                if not acc:
                    break
            new = lengths[lhs] | acc
            if new != lengths[lhs]:
                lengths[lhs] = new
                changed = True
    bits = lengths[g.start]
    return {i for i in range(bound + 1) if (bits >> i) & 1}


@dataclass(frozen=True)
class Graph:
    vertices: int
    edges: tuple
    source: int
    target: int

    def __post_init__(self):
        if self.vertices < 1:
            raise ValueError("a graph needs at least one vertex")
        for x in (self.source, self.target):
            if not 0 <= x < self.vertices:
                raise ValueError(f"vertex {x} out of range 0..{self.vertices - 1}")
        edges = set()
        for u, v in self.edges:
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise ValueError(f"edge {(u, v)} out of range")
            edges.add((int(u), int(v)))
        object.__setattr__(self, "edges", tuple(sorted(edges)))


def gen_hamiltonian_dfa(g: Graph) -> Nfa:
    """Automaton reading letter j whenever it enters vertex j."""
    trans = tuple((u, v + 1, v) for u, v in g.edges)
    names = tuple(f"v{i + 1}" for i in range(g.vertices))
    return Nfa(g.vertices, g.vertices, g.source, (g.target,), trans, names)


def hamiltonian_query(g: Graph) -> tuple:
    """All ones except a zero at the source: each vertex but the source is entered once."""
    return tuple(0 if i == g.source else 1 for i in range(g.vertices))
