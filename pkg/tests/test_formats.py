import json

import pytest
from hypothesis import given, strategies as st

from helpers import nfas
from parikh import (
    GeneratorSet,
    Graph,
    LinearBasis,
    SemilinearBasis,
    gen_doubling_cfg,
    gen_quadratic_dfa,
    parikh_image,
)
from parikh import formats
from parikh.errors import FormatError

big = st.integers(-(10**30), 10**30)


@st.composite
def bases(draw):
    k = draw(st.integers(1, 3))
    vec = st.tuples(*[big] * k)
    items = draw(st.lists(st.tuples(vec, st.lists(vec, max_size=3)), max_size=4))
    return SemilinearBasis(k, tuple(LinearBasis(o, GeneratorSet(gs, dim=k)) for o, gs in items))


@given(nfas(n_max=5, k_max=4))
def test_nfa_round_trip(A):
    assert formats.loads(formats.dumps(A)) == A


@given(bases())
def test_basis_round_trip(B):
    text = formats.dumps(B)
    assert formats.loads(text) == B
    assert formats.dumps(formats.loads(text)) == text


def test_big_entries_are_strings():
    B = SemilinearBasis(1, (LinearBasis((10**40,), GeneratorSet([(3,)])),))
    d = json.loads(formats.dumps(B))
    assert d["bases"][0]["offset"] == [str(10**40)]


def test_other_round_trips():
    g = Graph(4, ((0, 1), (1, 2), (2, 3)), 0, 3)
    assert formats.loads(formats.dumps(g)) == g
    cfg = gen_doubling_cfg(4)
    assert formats.loads(formats.dumps(cfg)) == cfg
    V = GeneratorSet([(2, -1), (0, 5)])
    assert formats.loads(formats.dumps(V)) == V
    A = gen_quadratic_dfa(2)
    assert formats.loads(formats.dumps(A)) == A


def test_lenient_numbers():
    d = {"alphabet": ["x"], "states": "2", "initial": 0, "finals": ["1"], "transitions": [["0", "x", 1]]}
    A = formats.nfa_from_dict(d)
    assert A.n == 2 and A.transitions == ((0, 1, 1),)


@pytest.mark.parametrize("doc,msg", [
    ({"alphabet": ["a"], "states": 3, "initial": 0, "finals": [1], "transitions": [[0, "a", 99]]}, "99"),
    ({"alphabet": ["a"], "states": 3, "initial": 0, "finals": [], "transitions": []}, "finals must be nonempty"),
    ({"alphabet": ["a"], "states": 3, "initial": 0, "finals": [1], "transitions": [[0, "z", 1]]}, "unknown letter"),
    ({"alphabet": ["a", "a"], "states": 1, "initial": 0, "finals": [0], "transitions": []}, "duplicate"),
    ({"alphabet": ["a"], "initial": 0, "finals": [0], "transitions": []}, "states"),
    ({"alphabet": ["a"], "states": 1, "initial": 0, "finals": [0], "transitions": [[0, "a"]]}, "transitions"),
])
def test_nfa_errors(doc, msg):
    with pytest.raises(FormatError, match=msg):
        formats.nfa_from_dict(doc)


def test_json_error_has_line():
    with pytest.raises(FormatError, match="line 2"):
        formats.loads('{"dim": 1,\n "bases": [,]}')


def test_unknown_document():
    with pytest.raises(FormatError):
        formats.loads('{"hello": 1}')


def test_basis_dimension_error():
    with pytest.raises(FormatError):
        formats.loads('{"dim": 2, "bases": [{"offset": ["1"], "generators": []}]}')


def test_missing_file(tmp_path):
    with pytest.raises(FormatError):
        formats.load(tmp_path / "nope.json")


def test_parse_nfa_file(tmp_path):
    path = tmp_path / "two.nfa"
    path.write_text(json.dumps({"alphabet": ["a"], "states": 2, "initial": 0, "finals": [1],
                                "transitions": [[0, "a", 1], [1, "a", 0]]}))
    A = formats.parse_nfa_file(path)
    assert (A.n, A.k) == (2, 1)
    assert parikh_image(A).bases[0].offset == (1,)
