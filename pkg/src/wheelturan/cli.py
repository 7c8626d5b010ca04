"""Command-line front end: ``wheelturan <command> [flags]``.

Exit codes: 0 ok, 1 mismatches present, 2 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Sequence

from . import formulas as fm
from .codec import decode_graph6, encode_graph6
from .detect import parse_pattern
from .errors import CapacityError, DomainError, Graph6Error
from .graph import Graph, from_dot, to_dot
from .oracle import brute_force_ex
from .sweeps import SUITES, SweepSpec, build_named, rows_to_csv, run_check, run_sweep, summarize

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"10:30"`` (inclusive), ``"3,5,7"`` or ``"4"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ":" in part:
            a, b = part.split(":")
            lo, hi = int(a), int(b)
            if lo > hi:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty range {text!r}")
    return out


def parse_k_lists(text: str) -> list[list[int]]:
    """``"2;3;2,2"`` -> [[2], [3], [2, 2]]."""
    return [[int(x) for x in chunk.split(",")] for chunk in text.split(";") if chunk.strip()]


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph_text(g: Graph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        return json.dumps({"order": g.order, "edges": list(g.edges()),
                           "graph6": encode_graph6(g).decode()}) + "\n"
    return encode_graph6(g).decode() + "\n"


def _one(values, flag: str) -> int:
    if values is None:
        raise UsageError(f"{flag} is required")
    if len(values) != 1:
        raise UsageError(f"{flag} takes a single value here")
    return values[0]


# -- commands -----------------------------------------------------------------

def cmd_construct(a) -> int:
    if a.spec:
        g = build_named(a.spec)
    else:
        raise UsageError("construct needs a KIND:ARGS spec, e.g. family:1,5,4,3")
    _emit(_graph_text(g, a.format or "graph6"), a.out)
    return EXIT_OK


_FORMULAS = {
    "turan_edges": ("n", "p"),
    "family_edges": ("t", "n1", "n2", "k"),
    "star_path_free_edges": ("n", "k"),
    "ex_odd_wheel": ("n", "k"),
    "ex_m_odd_wheels": ("n", "k", "m"),
    "f_value": ("n", "t", "k"),
    "g_value": ("n1", "n2", "m", "k"),
    "ex_even_wheel_mix": ("n", "h"),
    "kst_upper_bound": ("n", "a", "b"),
    "ex_star_forest": ("n", "degrees"),
    "conjecture_ex": ("n", "ks"),
}


def cmd_exnum(a) -> int:
    name = a.spec
    if name not in _FORMULAS:
        raise UsageError(f"unknown formula {name!r}; choose from {', '.join(_FORMULAS)}")
    args = []
    for p in _FORMULAS[name]:
        if p in ("degrees", "ks"):
            if a.ks is None:
                raise UsageError("--ks is required (comma-separated list)")
            args.append(parse_k_lists(a.ks)[0])
        else:
            args.append(_one(getattr(a, p), f"--{p}"))
    fn = getattr(fm, name)
    kwargs = {"variant": a.liu_variant} if name in ("ex_star_forest", "conjecture_ex") else {}
    res = fn(*args, **kwargs)
    if isinstance(res, fm.ConjectureValue):
        payload = {"form_a": dataclasses.asdict(res.form_a), "form_b": dataclasses.asdict(res.form_b),
                   "agree": res.agree}
    elif dataclasses.is_dataclass(res):
        payload = dataclasses.asdict(res)
    else:
        payload = {"value": res}
    _emit(json.dumps({"formula": name, "args": args, **payload}) + "\n", a.out)
    return EXIT_OK


def cmd_oracle(a) -> int:
    if not a.pattern:
        raise UsageError("--pattern is required")
    res = brute_force_ex(_one(a.n, "--n"), parse_pattern(a.pattern), engine=a.engine,
                         budget=a.budget_nodes)
    if a.format == "graph6":
        _emit(res.witness + "\n", a.out)
    elif a.format == "dot":
        _emit(to_dot(res.witness_graph()), a.out)
    else:
        _emit(json.dumps(dataclasses.asdict(res)) + "\n", a.out)
    return EXIT_OK


def cmd_check(a) -> int:
    if not a.pattern or not (a.graph or a.spec):
        raise UsageError("check needs --pattern and either --graph or a KIND:ARGS spec")
    row = run_check(a.graph or a.spec, a.pattern, a.expected, a.budget_nodes)
    if a.format == "json":
        _emit(json.dumps(dataclasses.asdict(row)) + "\n", a.out)
    else:
        _emit(rows_to_csv([row]), a.out)
    return EXIT_MISMATCH if row.status == "mismatch" else EXIT_OK


def cmd_sweep(a) -> int:
    if not a.suite:
        raise UsageError(f"--suite is required; choose from {', '.join(SUITES)}")
    spec = SweepSpec(
        suite=a.suite, n=a.n or (), k=a.k or (), m=a.m or (), h=a.h or (),
        k_lists=parse_k_lists(a.ks) if a.ks else (), pattern=a.pattern,
        budget=a.budget_nodes, liu_variant=a.liu_variant)
    rows = run_sweep(spec)
    summary = summarize(rows)
    if a.format == "json":
        _emit(json.dumps([dataclasses.asdict(r) for r in rows]) + "\n", a.out)
    else:
        _emit(rows_to_csv(rows), a.out)
    # the summary goes to stdout; with no --out it follows the CSV
    print(json.dumps({"suite": a.suite, **summary}))
    return EXIT_MISMATCH if summary["mismatch"] else EXIT_OK


def cmd_convert(a) -> int:
    text = open(a.input).read() if a.input else sys.stdin.read()
    if text.lstrip().startswith("graph"):
        graphs = [from_dot(text)]
        fmt = a.format or "graph6"
    else:
        graphs = [decode_graph6(line) for line in text.splitlines() if line.strip()]
        fmt = a.format or "dot"
    _emit("".join(_graph_text(g, fmt) for g in graphs), a.out)
    return EXIT_OK


_COMMANDS = {"construct": cmd_construct, "exnum": cmd_exnum, "oracle": cmd_oracle,
             "check": cmd_check, "sweep": cmd_sweep, "convert": cmd_convert}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wheelturan", description="Turán numbers of wheel forests: "
                "constructions, formulas, detectors and a small-n oracle.")
    p.add_argument("command", choices=sorted(_COMMANDS))
    p.add_argument("spec", nargs="?",
                   help="construct/check: KIND:ARGS (e.g. family:1,5,4,3); exnum: formula name")
    for name in ("n", "k", "m", "h", "t", "p", "n1", "n2", "a", "b"):
        p.add_argument(f"--{name}", type=parse_range, help="integer, list a,b or range lo:hi")
    p.add_argument("--ks", help="k-lists or degree lists, ';'-separated, e.g. '2;3,2'")
    p.add_argument("--pattern", help="W5+W5, S3+S2, K3, C4, P4, K2,3 or g6:<graph6>")
    p.add_argument("--suite", choices=SUITES)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json", "dot", "graph6"))
    p.add_argument("--liu-variant", choices=("verbatim", "corrected"), default="verbatim")
    p.add_argument("--engine", choices=("auto", "enumerate", "branch"), default="auto")
    p.add_argument("--graph", help="graph6 line for check")
    p.add_argument("--expected", type=int)
    p.add_argument("--input", help="file for convert (default stdin)")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except (UsageError, DomainError, CapacityError, Graph6Error, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
