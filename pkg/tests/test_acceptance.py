"""Acceptance criteria, one test per criterion, each with its time limit.

Run on its own with ``pytest tests/test_acceptance.py``; the terminal summary
prints one PASS/FAIL line per criterion.
"""
import random
import time
from itertools import permutations
from math import comb

from helpers import random_nfa
from parikh import (
    GeneratorSet,
    IpInstance,
    NormalizeMode,
    Nfa,
    cycle_type_table,
    gen_doubling_cfg,
    gen_hamiltonian_dfa,
    gen_partition_dfa,
    gen_quadratic_dfa,
    hamiltonian_query,
    ip_feasible,
    nfa_member,
    normalize_cone,
    parikh_image,
    rank,
    theoretical_bounds,
    unary_cfg_lengths,
)
from parikh.fixtures import Graph
from parikh.geometry import is_independent
from parikh.oracle import Box, compare_on_box, oracle_cone_points, oracle_parikh_points


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_c01_frobenius_normal_form():
    with Clock() as c:
        B = normalize_cone(GeneratorSet([(2,), (3,)]))
        box = Box(1, 100)
        res = compare_on_box(B, {(x,) for x in range(101) if x != 1}, box)
    assert res, res
    assert all(len(b.generators) == 1 for b in B.bases)
    assert c.elapsed < 5


def test_c02_partition_count():
    with Clock() as c:
        for n in range(1, 6):
            for k in range(1, 4):
                A = gen_partition_dfa(n, k)
                B = parikh_image(A)
                assert len(B.bases) == comb(n + k - 1, k - 1), (n, k)
                assert all(not len(b.generators) for b in B.bases)
                box = Box(k, n)
                assert compare_on_box(B, oracle_parikh_points(A, box), box), (n, k)
    assert c.elapsed < 30


def test_c03_doubling_grammar():
    with Clock() as c:
        for n in range(1, 11):
            assert unary_cfg_lengths(gen_doubling_cfg(n), 2**n) == set(range(2**n)), n
    assert c.elapsed < 5


def test_c04_quadratic_offset():
    for n, limit in ((2, 300), (3, 300)):
        with Clock() as c:
            A = gen_quadratic_dfa(n)
            B = parikh_image(A, "off")
            box = Box(A.k, 8)
            res = compare_on_box(B, oracle_parikh_points(A, box), box)
        assert res, (n, res)
        assert max(b.offset[0] for b in B.bases) >= n * (n + 1) // 2
        assert c.elapsed < limit


def test_c05_random_oracle_equivalence():
    rng = random.Random(5)
    failures = []
    with Clock() as c:
        for i in range(100):
            A = random_nfa(rng, n_max=5, k_max=3)
            box = Box(A.k, 10)
            res = compare_on_box(parikh_image(A, "off"), oracle_parikh_points(A, box), box)
            if not res:
                failures.append((i, A, res))
    assert not failures, failures[:3]
    assert c.elapsed < 600


def test_c06_normalization_preserves_semantics():
    rng = random.Random(6)
    pool = [(x, y) for x in range(5) for y in range(5) if (x, y) != (0, 0)]
    failures = []
    for i in range(50):
        V = GeneratorSet(rng.sample(pool, rng.randint(1, 4)))
        B = normalize_cone(V, NormalizeMode.bounded(64))
        box = Box(2, 20)
        res = compare_on_box(B, oracle_cone_points(V.vectors, box), box)
        if not res:
            failures.append((i, V, res))
        for b in B.bases:
            S = b.generators
            assert len(S) <= 2 and S.issubset(V) and is_independent(S.vectors) and len(S) == rank(V)
    assert not failures, failures[:3]


def test_c07_binary_scale_membership():
    A = Nfa(2, 1, 0, (1,), ((0, 1, 1), (1, 1, 0)))
    nfa_member(A, (1,))  # build and cache the image
    with Clock() as c:
        even = nfa_member(A, (10**18,))
        odd = nfa_member(A, (10**18 + 1,))
    assert (even, odd) == (False, True)
    assert c.elapsed < 0.1


def test_c08_ip_feasibility():
    reach = [False] * 1001
    reach[0] = True
    for b in range(1, 1001):
        reach[b] = (b >= 2 and reach[b - 2]) or (b >= 3 and reach[b - 3])
    infeasible = []
    for b in range(1001):
        res = ip_feasible(IpInstance([[2, 3]], [b]))
        assert res.feasible == reach[b], b
        if not res.feasible:
            infeasible.append(b)
    assert infeasible == [1]

    big = 10**30
    with Clock() as c:
        inst = IpInstance([[2, 3]], [big])
        res = ip_feasible(inst)
    assert res.feasible and res.verified and inst.evaluate(res.witness) == (big,)
    assert c.elapsed < 1

    for b in range(-50, 51):
        inst = IpInstance([[1, -1]], [b])
        res = ip_feasible(inst)
        assert res.feasible and inst.evaluate(res.witness) == (b,)


def _hamiltonian(g: Graph) -> bool:
    edges = set(g.edges)
    rest = [v for v in range(g.vertices) if v != g.source]
    for order in permutations(rest):
        path = (g.source,) + order
        if path[-1] == g.target and all(e in edges for e in zip(path, path[1:])):
            return True
    return False


def test_c09_hamiltonian_reduction():
    rng = random.Random(9)
    failures = []
    for i in range(50):
        n = rng.randint(1, 5)
        p = rng.random()
        edges = tuple((u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p)
        g = Graph(n, edges, rng.randrange(n), rng.randrange(n))
        got = nfa_member(gen_hamiltonian_dfa(g), hamiltonian_query(g))
        if got != _hamiltonian(g):
            failures.append((i, g, got))
    assert not failures, failures[:3]


def test_c10_bound_formulas():
    table = {
        (2, 1, 3): (3, 81, 246),
        (1, 1, 1): (1, 2, 3),
        (3, 2, 2): (4, 163840, 1310724),
    }
    for args, want in table.items():
        b = theoretical_bounds(*args)
        assert (b.t, b.M, b.N) == want, args


def test_c11_pivot_independence():
    rng = random.Random(11)
    for i in range(20):
        A = random_nfa(rng, n_max=4, k=3)
        assert cycle_type_table(A, "first").matrices == cycle_type_table(A, "last").matrices, i


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
