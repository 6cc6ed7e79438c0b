"""Shared test utilities: random automata and small brute-force checks."""
import random
from itertools import product

from hypothesis import strategies as st

from parikh import Nfa


def random_nfa(rng: random.Random, n_max=5, k_max=3, n=None, k=None) -> Nfa:
    n = n or rng.randint(1, n_max)
    k = k or rng.randint(1, k_max)
    density = rng.random()
    trans = [(p, a, q) for p in range(n) for a in range(1, k + 1) for q in range(n)
             if rng.random() < density]
    finals = [q for q in range(n) if rng.random() < 0.4] or [rng.randrange(n)]
    return Nfa(n, k, rng.randrange(n), tuple(finals), tuple(trans))


@st.composite
def nfas(draw, n_max=4, k_max=3):
    n = draw(st.integers(1, n_max))
    k = draw(st.integers(1, k_max))
    all_trans = [(p, a, q) for p in range(n) for a in range(1, k + 1) for q in range(n)]
    trans = draw(st.lists(st.sampled_from(all_trans), max_size=len(all_trans), unique=True))
    initial = draw(st.integers(0, n - 1))
    finals = draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=n, unique=True))
    return Nfa(n, k, initial, tuple(finals), tuple(trans))


def accepts(A: Nfa, word) -> bool:
    current = {A.initial}
    for letter in word:
        current = {q for (p, a, q) in A.transitions if p in current and a == letter}
    return bool(current & set(A.finals))


def combos(V, cap, box, natural=True):
    """Every sum of at most ``cap`` copies of each vector, restricted to the box."""
    k = len(V[0])
    lo = 0 if natural else -box
    out = set()
    for cs in product(range(cap + 1), repeat=len(V)):
        v = tuple(sum(c * g[e] for c, g in zip(cs, V)) for e in range(k))
        if all(lo <= x <= box for x in v):
            out.add(v)
    return out
