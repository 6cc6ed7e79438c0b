"""Command-line front end.

Exit codes: 0 success, 1 membership false under ``--exit-status`` (or a
failed ``check``), 2 usage or parse error, 3 domain error, 4 inconclusive.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from . import formats
from .automata import NORMALIZATIONS, Nfa, parikh_image
from .decision import IpInstance, ip_feasible, nfa_member, semilinear_member
from .errors import FormatError, Inconclusive, ParikhError
from .fixtures import (
    gen_doubling_cfg,
    gen_hamiltonian_dfa,
    gen_partition_dfa,
    gen_quadratic_dfa,
)
from .geometry import GeneratorSet, SemilinearBasis
from .normalform import EXACT, NormalizeMode, is_normalized, normalize_cone, normalize_semilinear
from .oracle import (
    Box,
    compare_on_box,
    oracle_cone_points,
    oracle_parikh_points,
    oracle_semilinear_points,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_DOMAIN, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    normalize: str = "off"
    bound: Optional[int] = None
    box: Optional[int] = None
    signed: bool = False
    pad: Optional[int] = None
    vector: Optional[tuple] = None
    matrix: Optional[str] = None
    target: Optional[tuple] = None
    fixture: Optional[str] = None
    params: list = field(default_factory=list)
    oracle_kind: Optional[str] = None
    strategy: str = "auto"
    output_format: str = "text"
    exit_status: bool = False
    report_size: bool = False
    verbose: bool = False

    def __post_init__(self):
        if self.bound is not None and self.bound < 0:
            raise FormatError("--bound must be nonnegative")
        if self.command in ("oracle", "check") and self.box is None:
            raise FormatError(f"{self.command} needs --box")

    @property
    def mode(self) -> NormalizeMode:
        return EXACT if self.bound is None else NormalizeMode.bounded(self.bound)


def parse_vector(text: str) -> tuple:
    """``[1,2]``, ``["1","2"]``, ``1,2`` or ``1 2``; a bare number is a 1-vector."""
    text = text.strip()
    try:
        if text.startswith("["):
            items = json.loads(text)
            if not isinstance(items, list):
                raise ValueError
        else:
            items = text.replace(",", " ").split()
        out = tuple(int(x) for x in items)
    except (ValueError, TypeError):
        raise FormatError(f"cannot parse vector {text!r}") from None
    if not out:
        raise FormatError("vectors must have at least one entry")
    return out


def parse_matrix(text: str) -> tuple:
    """Inline JSON rows, or a path to a file holding them."""
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        rows = json.loads(text)
        if isinstance(rows, dict):
            rows = rows["matrix"]
        return tuple(tuple(int(x) for x in r) for r in rows)
    except (ValueError, TypeError, KeyError):
        raise FormatError("matrix must be a JSON list of rows (inline or in a file)") from None


def _text_vec(v) -> str:
    return "[" + ",".join(str(x) for x in v) + "]"


def _points_doc(points) -> dict:
    return {"points": [[str(x) for x in p] for p in sorted(points)]}


def _emit(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _cmd_parikh(cfg: RunConfig):
    A = formats.load(cfg.inputs[0], "nfa")
    B = parikh_image(A, cfg.normalize, cfg.mode)
    doc = formats.slb_to_dict(B)
    if cfg.report_size:
        doc["size"] = str(B.size())
    return EXIT_OK, _emit(doc)


def _cmd_normalize(cfg: RunConfig):
    B = formats.load(cfg.inputs[0], "slb")
    N = normalize_semilinear(B, cfg.mode)
    doc = formats.slb_to_dict(N)
    doc["verified"] = cfg.mode.is_exact or is_normalized(B)
    if cfg.report_size:
        doc["size"] = str(N.size())
    return EXIT_OK, _emit(doc)


def _answer(cfg: RunConfig, value: bool):
    out = "true" if value else "false"
    if cfg.output_format == "json":
        out = _emit({"member": value})
    else:
        out += "\n"
    status = EXIT_FALSE if (cfg.exit_status and not value) else EXIT_OK
    return status, out


def _cmd_member(cfg: RunConfig):
    if cfg.vector is None:
        raise FormatError("member needs --vector")
    obj = formats.load(cfg.inputs[0])
    if isinstance(obj, Nfa):
        mode = None if cfg.bound is None else cfg.mode
        return _answer(cfg, nfa_member(obj, cfg.vector, cfg.strategy, mode))
    if isinstance(obj, SemilinearBasis):
        return _answer(cfg, semilinear_member(cfg.vector, obj, cfg.mode))
    raise FormatError("member expects an NFA or a semilinear basis")


def _cmd_ip(cfg: RunConfig):
    if cfg.matrix is None or cfg.target is None:
        raise FormatError("ip needs --matrix and --target")
    inst = IpInstance(parse_matrix(cfg.matrix), cfg.target)
    res = ip_feasible(inst, cfg.mode)
    if res.feasible:
        text = f"feasible, witness {_text_vec(res.witness)}"
        status = EXIT_OK
    elif res.verified:
        text = "infeasible"
        status = EXIT_FALSE if cfg.exit_status else EXIT_OK
    else:
        text = "inconclusive"
        status = EXIT_INCONCLUSIVE
    if cfg.output_format == "json":
        doc = {"result": text.split(",")[0], "verified": res.verified}
        if res.witness is not None:
            doc["witness"] = [str(x) for x in res.witness]
        return status, _emit(doc)
    return status, text + "\n"


def _int_param(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise FormatError(f"{name} must be an integer, got {text!r}") from None


def _cmd_gen(cfg: RunConfig):
    p = cfg.params
    want = {"partition-dfa": 2, "quadratic-dfa": 1, "doubling-cfg": 1, "ham-dfa": 1}
    if len(p) != want[cfg.fixture]:
        raise FormatError(f"gen {cfg.fixture} takes {want[cfg.fixture]} argument(s)")
    if cfg.fixture == "partition-dfa":
        obj = gen_partition_dfa(_int_param(p[0], "n"), _int_param(p[1], "k"))
    elif cfg.fixture == "quadratic-dfa":
        obj = gen_quadratic_dfa(_int_param(p[0], "n"))
    elif cfg.fixture == "doubling-cfg":
        obj = gen_doubling_cfg(_int_param(p[0], "n"))
    else:
        obj = gen_hamiltonian_dfa(formats.load(p[0], "graph"))
    return EXIT_OK, formats.dumps(obj)


def _cmd_oracle(cfg: RunConfig):
    kind = cfg.oracle_kind
    if kind == "parikh":
        A = formats.load(cfg.inputs[0], "nfa")
        pts = oracle_parikh_points(A, Box(A.k, cfg.box))
    elif kind == "cone":
        V = formats.load(cfg.inputs[0], "gens")
        signed = cfg.signed or not V.is_natural()
        pts = oracle_cone_points(V.vectors, Box(V.dim, cfg.box, signed), cfg.pad)
    else:
        B = formats.load(cfg.inputs[0], "slb")
        pts = oracle_semilinear_points(B, Box(B.dim, cfg.box, cfg.signed) if cfg.signed else cfg.box, cfg.pad)
    return EXIT_OK, _emit(_points_doc(pts))


def _cmd_check(cfg: RunConfig):
    obj = formats.load(cfg.inputs[0])
    if isinstance(obj, Nfa):
        box = Box(obj.k, cfg.box)
        res = compare_on_box(parikh_image(obj, cfg.normalize, cfg.mode),
                             oracle_parikh_points(obj, box), box)
    elif isinstance(obj, GeneratorSet):
        box = Box(obj.dim, cfg.box, cfg.signed or not obj.is_natural())
        res = compare_on_box(normalize_cone(obj, cfg.mode), oracle_cone_points(obj.vectors, box, cfg.pad), box)
    else:
        raise FormatError("check expects an NFA or a generator set")
    if cfg.output_format == "json":
        doc = {"equal": res.equal}
        if not res.equal:
            doc.update(witness=[str(x) for x in res.witness], side=res.side)
        out = _emit(doc)
    elif res.equal:
        out = "equal\n"
    else:
        out = f"counterexample {_text_vec(res.witness)} only in {res.side}\n"
    return (EXIT_OK if res.equal else EXIT_FALSE), out


COMMANDS = {
    "parikh": _cmd_parikh,
    "normalize": _cmd_normalize,
    "member": _cmd_member,
    "ip": _cmd_ip,
    "gen": _cmd_gen,
    "oracle": _cmd_oracle,
    "check": _cmd_check,
}


def run(cfg: RunConfig):
    """Execute one subcommand; returns ``(exit status, stdout text, stderr text)``."""
    try:
        status, out = COMMANDS[cfg.command](cfg)
        return status, out, ""
    except FormatError as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    except Inconclusive as exc:
        if cfg.output_format == "json":
            return EXIT_INCONCLUSIVE, _emit({"member": None, "inconclusive": True}), f"{exc}\n"
        return EXIT_INCONCLUSIVE, "inconclusive\n", f"{exc}\n"
    except (ParikhError, ValueError, TypeError) as exc:
        return EXIT_DOMAIN, "", f"error: {exc}\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    common.add_argument("-v", "--verbose", action="store_true")

    mode = argparse.ArgumentParser(add_help=False)
    g = mode.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="exact normalization (default)")
    g.add_argument("--bound", type=int, help="bounded normalization with this box and coefficient cap")

    parser = argparse.ArgumentParser(prog="parikh", description="Parikh images, semilinear sets, IP feasibility")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parikh", parents=[common, mode], help="Parikh image of an NFA")
    p.add_argument("input")
    p.add_argument("--normalize", choices=NORMALIZATIONS, default="off")
    p.add_argument("--report-size", action="store_true")

    p = sub.add_parser("normalize", parents=[common, mode], help="normal form of a semilinear basis")
    p.add_argument("input")
    p.add_argument("--report-size", action="store_true")

    p = sub.add_parser("member", parents=[common, mode], help="membership of a vector")
    p.add_argument("input")
    p.add_argument("--vector", required=True)
    p.add_argument("--strategy", choices=("auto", "normalize", "enumerate"), default="auto")
    p.add_argument("--exit-status", action="store_true")

    p = sub.add_parser("ip", parents=[common, mode], help="feasibility of Ax = b over x >= 0")
    p.add_argument("--matrix", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--exit-status", action="store_true")

    p = sub.add_parser("gen", parents=[common], help="write a fixture file")
    p.add_argument("fixture", choices=("partition-dfa", "quadratic-dfa", "doubling-cfg", "ham-dfa"))
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")

    p = sub.add_parser("oracle", parents=[common], help="brute-force point sets on a box")
    p.add_argument("oracle_kind", choices=("cone", "parikh", "semilinear"))
    p.add_argument("input")
    p.add_argument("--box", type=int, required=True)
    p.add_argument("--signed", action="store_true")
    p.add_argument("--pad", type=int, help="search margin for generators of mixed sign")

    p = sub.add_parser("check", parents=[common, mode], help="compare an algorithm with its oracle")
    p.add_argument("input")
    p.add_argument("--box", type=int, required=True)
    p.add_argument("--normalize", choices=NORMALIZATIONS, default="off")
    p.add_argument("--signed", action="store_true")
    p.add_argument("--pad", type=int, help="search margin for generators of mixed sign")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    get = lambda name, default=None: getattr(ns, name, default)  # noqa: E731
    return RunConfig(
        command=ns.command,
        inputs=[ns.input] if get("input") else [],
        normalize=get("normalize", "off"),
        bound=get("bound"),
        box=get("box"),
        signed=get("signed", False),
        pad=get("pad"),
        vector=parse_vector(ns.vector) if get("vector") is not None else None,
        matrix=get("matrix"),
        target=parse_vector(ns.target) if get("target") is not None else None,
        fixture=get("fixture"),
        params=get("params", []),
        oracle_kind=get("oracle_kind"),
        strategy=get("strategy", "auto"),
        output_format=ns.output_format,
        exit_status=get("exit_status", False),
        report_size=get("report_size", False),
        verbose=ns.verbose,
    )


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except FormatError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    start = time.perf_counter()
    status, out, err = run(cfg)
    target = getattr(ns, "output", None)
    if out and target:
        with open(target, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    if cfg.verbose:
        sys.stderr.write(f"{cfg.command}: exit {status} in {time.perf_counter() - start:.3f}s\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
