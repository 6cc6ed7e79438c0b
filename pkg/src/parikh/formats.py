"""JSON file formats for automata, semilinear bases, grammars, graphs and
generator sets.

Vector entries are written as decimal strings so arbitrarily large integers
survive any JSON reader; parsers accept either strings or plain integers.
"""
from __future__ import annotations

import json
from pathlib import Path

from .automata import Nfa
from .errors import FormatError
from .fixtures import Graph, UnaryCfg
from .geometry import GeneratorSet, LinearBasis, SemilinearBasis


def _int(x, where: str) -> int:
    if isinstance(x, bool):
        raise FormatError(f"{where}: expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise FormatError(f"{where}: expected an integer, got {x!r}")


def _vec(xs, where: str) -> tuple:
    if not isinstance(xs, list):
        raise FormatError(f"{where}: expected a list of integers")
    return tuple(_int(x, f"{where}[{i}]") for i, x in enumerate(xs))


def _field(d, key: str, kind: str):
    if not isinstance(d, dict):
        raise FormatError(f"{kind}: expected a JSON object")
    if key not in d:
        raise FormatError(f"{kind}: missing field {key!r}")
    return d[key]


def _enc(v) -> list:
    return [str(x) for x in v]


def nfa_to_dict(A: Nfa) -> dict:
    return {
        "alphabet": list(A.alphabet),
        "states": A.n,
        "initial": A.initial,
        "finals": list(A.finals),
        "transitions": [[p, A.alphabet[a - 1], q] for p, a, q in A.transitions],
    }


def nfa_from_dict(d) -> Nfa:
    alphabet = _field(d, "alphabet", "nfa")
    if not isinstance(alphabet, list) or not alphabet:
        raise FormatError("nfa.alphabet: expected a nonempty list of letter names")
    names = [str(x) for x in alphabet]
    if len(set(names)) != len(names):
        raise FormatError("nfa.alphabet: duplicate letter names")
    letter = {name: i + 1 for i, name in enumerate(names)}
    n = _int(_field(d, "states", "nfa"), "nfa.states")
    initial = _int(_field(d, "initial", "nfa"), "nfa.initial")
    finals_raw = _field(d, "finals", "nfa")
    if not isinstance(finals_raw, list):
        raise FormatError("nfa.finals: expected a list")
    finals = [_int(f, f"nfa.finals[{i}]") for i, f in enumerate(finals_raw)]
    if not finals:
        raise FormatError("nfa.finals: finals must be nonempty")
    trans_raw = _field(d, "transitions", "nfa")
    if not isinstance(trans_raw, list):
        raise FormatError("nfa.transitions: expected a list")
    trans = []
    for i, t in enumerate(trans_raw):
        where = f"nfa.transitions[{i}]"
        if not isinstance(t, list) or len(t) != 3:
            raise FormatError(f"{where}: expected [from, letter, to], got {t!r}")
        p, name, q = t
        if str(name) not in letter:
            raise FormatError(f"{where}: unknown letter {name!r} in {t!r}")
        p, q = _int(p, where), _int(q, where)
        for s in (p, q):
            if not 0 <= s < max(n, 0):
                raise FormatError(f"{where}: state {s} out of range 0..{n - 1} in {t!r}")
        trans.append((p, letter[str(name)], q))
    try:
        return Nfa(n, len(names), initial, tuple(finals), tuple(trans), tuple(names))
    except ValueError as exc:
        raise FormatError(f"nfa: {exc}") from None


def slb_to_dict(B: SemilinearBasis) -> dict:
    return {
        "dim": B.dim,
        "bases": [
            {"offset": _enc(b.offset), "generators": [_enc(g) for g in b.generators]}
            for b in B.bases
        ],
    }


def slb_from_dict(d) -> SemilinearBasis:
    dim = _int(_field(d, "dim", "basis"), "basis.dim")
    raw = _field(d, "bases", "basis")
    if not isinstance(raw, list):
        raise FormatError("basis.bases: expected a list")
    bases = []
    for i, b in enumerate(raw):
        where = f"basis.bases[{i}]"
        offset = _vec(_field(b, "offset", where), f"{where}.offset")
        gens_raw = b.get("generators", [])
        if not isinstance(gens_raw, list):
            raise FormatError(f"{where}.generators: expected a list")
        gens = [_vec(g, f"{where}.generators[{j}]") for j, g in enumerate(gens_raw)]
        try:
            bases.append(LinearBasis(offset, GeneratorSet(gens, dim=dim)))
        except ValueError as exc:
            raise FormatError(f"{where}: {exc}") from None
    try:
        return SemilinearBasis(dim, tuple(bases))
    except ValueError as exc:
        raise FormatError(f"basis: {exc}") from None


def gens_to_dict(V: GeneratorSet) -> dict:
    return {"dim": V.dim, "generators": [_enc(v) for v in V]}


def gens_from_dict(d) -> GeneratorSet:
    dim = _int(_field(d, "dim", "generators"), "generators.dim")
    raw = _field(d, "generators", "generators")
    if not isinstance(raw, list):
        raise FormatError("generators.generators: expected a list")
    vecs = [_vec(v, f"generators[{i}]") for i, v in enumerate(raw)]
    try:
        return GeneratorSet(vecs, dim=dim)
    except ValueError as exc:
        raise FormatError(f"generators: {exc}") from None


def cfg_to_dict(g: UnaryCfg) -> dict:
    return {"start": g.start, "rules": [[lhs, list(rhs)] for lhs, rhs in g.rules]}


def cfg_from_dict(d) -> UnaryCfg:
    start = _field(d, "start", "cfg")
    raw = _field(d, "rules", "cfg")
    if not isinstance(raw, list):
        raise FormatError("cfg.rules: expected a list")
    rules = []
    for i, r in enumerate(raw):
        if not (isinstance(r, list) and len(r) == 2 and isinstance(r[1], list)):
            raise FormatError(f"cfg.rules[{i}]: expected [lhs, [symbols...]], got {r!r}")
        rules.append((str(r[0]), tuple(str(s) for s in r[1])))
    return UnaryCfg(str(start), tuple(rules))


def graph_to_dict(g: Graph) -> dict:
    return {"vertices": g.vertices, "edges": [list(e) for e in g.edges],
            "source": g.source, "target": g.target}


def graph_from_dict(d) -> Graph:
    n = _int(_field(d, "vertices", "graph"), "graph.vertices")
    raw = _field(d, "edges", "graph")
    if not isinstance(raw, list):
        raise FormatError("graph.edges: expected a list")
    edges = []
    for i, e in enumerate(raw):
        if not (isinstance(e, list) and len(e) == 2):
            raise FormatError(f"graph.edges[{i}]: expected [u, v], got {e!r}")
        edges.append((_int(e[0], f"graph.edges[{i}]"), _int(e[1], f"graph.edges[{i}]")))
    try:
        return Graph(n, tuple(edges), _int(_field(d, "source", "graph"), "graph.source"),
                     _int(_field(d, "target", "graph"), "graph.target"))
    except ValueError as exc:
        raise FormatError(f"graph: {exc}") from None


ENCODERS = {
    Nfa: nfa_to_dict,
    SemilinearBasis: slb_to_dict,
    GeneratorSet: gens_to_dict,
    UnaryCfg: cfg_to_dict,
    Graph: graph_to_dict,
}


def to_dict(obj) -> dict:
    try:
        return ENCODERS[type(obj)](obj)
    except KeyError:
        raise TypeError(f"no file format for {type(obj).__name__}") from None


def dumps(obj) -> str:
    return json.dumps(to_dict(obj), indent=2, sort_keys=True) + "\n"


def detect_kind(d) -> str:
    """Which format a decoded document is, judged by its keys."""
    if isinstance(d, dict):
        if "transitions" in d:
            return "nfa"
        if "bases" in d:
            return "slb"
        if "generators" in d:
            return "gens"
        if "rules" in d:
            return "cfg"
        if "edges" in d:
            return "graph"
    raise FormatError("unrecognized document: expected an NFA, basis, generator set, grammar or graph")


DECODERS = {
    "nfa": nfa_from_dict,
    "slb": slb_from_dict,
    "gens": gens_from_dict,
    "cfg": cfg_from_dict,
    "graph": graph_from_dict,
}


def loads(text: str, kind: str = None, source: str = "<input>"):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    kind = kind or detect_kind(d)
    try:
        return DECODERS[kind](d)
    except FormatError as exc:
        raise FormatError(f"{source}: {exc}") from None


def load(path, kind: str = None):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None
    return loads(text, kind, str(path))


def parse_nfa_file(path) -> Nfa:
    return load(path, "nfa")
