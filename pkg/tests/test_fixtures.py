import random
from itertools import permutations
from math import comb

import pytest

from helpers import accepts
from parikh import (
    Graph,
    UnaryCfg,
    gen_doubling_cfg,
    gen_hamiltonian_dfa,
    gen_partition_dfa,
    gen_quadratic_dfa,
    hamiltonian_query,
    nfa_member,
    parikh_image,
    unary_cfg_lengths,
)
from parikh.fixtures import quadratic_letters
from parikh.oracle import Box, oracle_parikh_points, oracle_semilinear_points


def has_hamiltonian_path(g: Graph) -> bool:
    edges = set(g.edges)
    others = [v for v in range(g.vertices) if v != g.source]
    for order in permutations(others):
        path = (g.source,) + order
        if path[-1] == g.target and all((u, v) in edges for u, v in zip(path, path[1:])):
            return True
    return g.vertices == 1 and g.source == g.target


def random_graph(rng):
    n = rng.randint(1, 5)
    p = rng.random()
    edges = tuple((u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p)
    return Graph(n, edges, rng.randrange(n), rng.randrange(n))


class TestPartition:
    def test_examples(self):
        A = gen_partition_dfa(3, 2)
        assert A.n == 4
        assert len(parikh_image(A).bases) == 4
        assert [b.offset for b in parikh_image(gen_partition_dfa(1, 1)).bases] == [(1,)]
        assert len(parikh_image(gen_partition_dfa(2, 3)).bases) == 6

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("k", range(1, 4))
    def test_count(self, n, k):
        assert len(parikh_image(gen_partition_dfa(n, k)).bases) == comb(n + k - 1, k - 1)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            gen_partition_dfa(0, 2)


class TestQuadratic:
    def test_shape(self):
        A = gen_quadratic_dfa(2)
        assert A.n == 7 and A.k == 7
        assert A.alphabet == ("a", "b", "c", "a1", "a1'", "a2", "a2'")
        assert quadratic_letters(1) == ("a", "b", "c", "a1", "a1'")

    def test_accepted_words(self):
        name = {s: i + 1 for i, s in enumerate(quadratic_letters(2))}
        A = gen_quadratic_dfa(2)
        word = [name[s] for s in "b a a1 c a a a2 c b".split()]
        assert accepts(A, word)
        assert accepts(A, [name["b"], name["b"]])
        assert accepts(A, [name[s] for s in "b a a1 a1' a1' c b".split()])
        assert not accepts(A, [name[s] for s in "b a a2 c b".split()])
        assert (0, 2, 0, 0, 0) in oracle_parikh_points(gen_quadratic_dfa(1), 2)

    def test_large_offset_n2(self):
        B = parikh_image(gen_quadratic_dfa(2))
        assert max(b.offset[0] for b in B.bases) >= 3

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            gen_quadratic_dfa(0)


class TestDoubling:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_lengths(self, n):
        assert unary_cfg_lengths(gen_doubling_cfg(n), 2**n) == set(range(2**n))

    def test_examples(self):
        assert unary_cfg_lengths(gen_doubling_cfg(3), 10) == set(range(8))
        assert unary_cfg_lengths(UnaryCfg("S", (("S", ("a",)),)), 5) == {1}
        g = UnaryCfg("S", (("S", ("S", "a")), ("S", ("a",))))
        assert unary_cfg_lengths(g, 4) == {1, 2, 3, 4}

    def test_rule_count_is_linear(self):
        assert len(gen_doubling_cfg(10).rules) == 1 + 2 * 10 + 9 + 1

    def test_undefined_nonterminal(self):
        with pytest.raises(ValueError, match="undefined"):
            unary_cfg_lengths(UnaryCfg("S", (("S", ("T",)),)), 3)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            gen_doubling_cfg(0)

    def test_finite_image_needs_one_point_per_length(self):
        # a finite set admits only generator-free bases, one per point
        from parikh import GeneratorSet, LinearBasis, SemilinearBasis
        n = 4
        B = SemilinearBasis(1, tuple(LinearBasis((i,), GeneratorSet([], dim=1))
                                     for i in unary_cfg_lengths(gen_doubling_cfg(n), 2**n)))
        assert len(B.bases) == 2**n
        assert oracle_semilinear_points(B, Box(1, 2**n)) == {(i,) for i in range(2**n)}


class TestHamiltonian:
    def test_examples(self):
        k3 = Graph(3, tuple((u, v) for u in range(3) for v in range(3) if u != v), 0, 2)
        assert nfa_member(gen_hamiltonian_dfa(k3), hamiltonian_query(k3))
        line = Graph(3, ((0, 1),), 0, 2)
        assert not nfa_member(gen_hamiltonian_dfa(line), (0, 1, 1))
        single = Graph(1, (), 0, 0)
        assert hamiltonian_query(single) == (0,)
        assert nfa_member(gen_hamiltonian_dfa(single), (0,))

    def test_graph_validation(self):
        with pytest.raises(ValueError):
            Graph(2, ((0, 5),), 0, 1)
        with pytest.raises(ValueError):
            Graph(2, (), 0, 2)

    def test_agrees_with_search(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_graph(rng)
            assert nfa_member(gen_hamiltonian_dfa(g), hamiltonian_query(g)) == has_hamiltonian_path(g), g
