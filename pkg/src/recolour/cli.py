"""Command line front end: ``recolour <subcommand> ...``.

Exit status: 0 success or PASS, 1 FAIL, 2 usage or input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import graph_core as gc
from .checks import PAPER_CHECKS
from .colouring import (
    Lists,
    Uniform,
    format_colouring,
    format_lists,
    is_frozen,
    parse_colouring,
    parse_lists,
)
from .explorer import (
    DEFAULT_SEARCH_BUDGET,
    BudgetExhausted,
    components,
    distance,
    format_sequence,
    hamiltonian_cycle,
    metrics,
    neighbours,
    parse_sequence,
    state_budget_from_env,
    verify_sequence,
)
from .kpq_theory import (
    KpqInstance,
    diameter_interval,
    extremal_pair,
    format_regime_table,
    recolour_kpq,
    regime_table,
)
from .renaming import optimal_renaming

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None


def _parsed(path: str, parser):
    try:
        return parser(_read(path))
    except gc.ParseError as exc:
        raise _UsageError(f"{path}:{exc.lineno}: {exc.message}") from None


def _write(path: Optional[str], text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def _palette(args, n: int):
    if (args.k is None) == (args.lists is None):
        raise _UsageError("give exactly one of --k or --lists")
    if args.k is not None:
        if args.k < 1:
            raise _UsageError("--k must be positive")
        return Uniform(args.k)
    lists = _parsed(args.lists, parse_lists)
    if len(lists) != n:
        raise _UsageError(f"{args.lists}: {len(lists)} lists for {n} vertices")
    return Lists(lists)


def _budget(args) -> int:
    return args.budget if args.budget is not None else state_budget_from_env()


def _num(x):
    return "infinite" if x == math.inf else x


# ---------------------------------------------------------------- gen


def _gen(args) -> int:
    fam, prm = args.family, args.params
    arity = {
        "complete-bipartite": 2,
        "minus-matching": 1,
        "path": 1,
        "layered": 0,
        "gadget": 2,
        "chain": 1,
        "k18": 0,
        "frozen": 1,
    }
    if len(prm) != arity[fam]:
        raise _UsageError(f"family {fam} takes {arity[fam]} integer parameter(s)")
    lists = colourings = None
    if fam == "complete-bipartite":
        g = gc.complete_bipartite(*prm)
    elif fam == "minus-matching":
        g = gc.complete_bipartite_minus_matching(*prm)
    elif fam == "path":
        g = gc.path(*prm)
    elif fam == "layered":
        g = gc.layered_example()
    elif fam == "gadget":
        g, lists, _ = gc.forcing_gadget(*prm)
    elif fam == "chain":
        g, lists = gc.path_plus_chain(*prm)
    elif fam == "k18":
        g, lists, a, b = gc.k18_list_instance()
        colourings = (a, b)
    else:
        g, lists, phi = gc.frozen_list_instance(*prm)
        colourings = (phi,)
    if args.out is None:
        sys.stdout.write(gc.format_graph(g))
        return EXIT_OK
    Path(args.out + ".graph").write_text(gc.format_graph(g))
    written = [args.out + ".graph"]
    if lists is not None:
        Path(args.out + ".lists").write_text(format_lists(lists))
        written.append(args.out + ".lists")
    for name, c in zip("ab", colourings or ()):
        Path(f"{args.out}.{name}.col").write_text(format_colouring(c))
        written.append(f"{args.out}.{name}.col")
    sys.stdout.write("".join(f"wrote {w}\n" for w in written))
    return EXIT_OK


# ---------------------------------------------------------------- explorer


def _metrics(args) -> int:
    g = _parsed(args.graph, gc.parse_graph)
    pal = _palette(args, g.n)
    if args.symmetry and not isinstance(pal, Uniform):
        raise _UsageError("--symmetry needs --k")
    rep = metrics(g, pal, use_colour_symmetry=args.symmetry, budget=_budget(args), workers=args.workers)
    text = (
        f"nodes {rep.node_count}\ncomponents {rep.component_count}\n"
        f"diameter {_num(rep.diameter)}\nradius {_num(rep.radius)}\n"
    )
    _emit(args, rep.to_dict(), text)
    return EXIT_OK


def _distance(args) -> int:
    g = _parsed(args.graph, gc.parse_graph)
    pal = _palette(args, g.n)
    a, b = _parsed(args.a, parse_colouring), _parsed(args.b, parse_colouring)
    res = distance(g, pal, a, b, budget=_budget(args), with_sequence=args.out is not None)
    if res.status == "budget-exhausted":
        sys.stderr.write(f"budget exhausted after {res.visited} states\n")
        return EXIT_BUDGET
    d = res.distance if res.status == "reachable" else "infinite"
    if args.out is not None and res.sequence is not None:
        _write(args.out, format_sequence(res.sequence))
    _emit(args, {"status": res.status, "distance": d, "visited": res.visited}, f"{res.status} {d}\n")
    return EXIT_OK


def _components(args) -> int:
    g = _parsed(args.graph, gc.parse_graph)
    pal = _palette(args, g.n)
    rep = components(g, pal, budget=_budget(args))
    text = f"components {rep.count}\nsizes {' '.join(map(str, rep.sizes))}\n"
    _emit(args, {"components": rep.count, "sizes": list(rep.sizes)}, text)
    return EXIT_OK


def _frozen(args) -> int:
    g = _parsed(args.graph, gc.parse_graph)
    pal = _palette(args, g.n)
    c = _parsed(args.colouring, parse_colouring)
    frozen = is_frozen(g, c, pal)
    moves = len(neighbours(g, pal, c))
    _emit(args, {"frozen": frozen, "neighbours": moves}, f"frozen {'yes' if frozen else 'no'}\nneighbours {moves}\n")
    return EXIT_OK


def _ham(args) -> int:
    g = _parsed(args.graph, gc.parse_graph)
    pal = _palette(args, g.n)
    res = hamiltonian_cycle(g, pal, budget=args.budget if args.budget is not None else DEFAULT_SEARCH_BUDGET)
    payload = {"status": res.status, "length": len(res.cycle) if res.cycle else 0, "search_nodes": res.search_nodes}
    text = f"{res.status}\n"
    if res.cycle and args.out:
        _write(args.out, "".join(format_colouring(c) for c in res.cycle))
    _emit(args, payload, text)
    return EXIT_BUDGET if res.status == "budget-exhausted" else EXIT_OK


def _verify(args) -> int:
    g = _parsed(args.graph, gc.parse_graph)
    pal = _palette(args, g.n)
    a, b = _parsed(args.start, parse_colouring), _parsed(args.target, parse_colouring)
    seq = _parsed(args.sequence, lambda text: parse_sequence(text, a))
    rep = verify_sequence(g, pal, seq, b)
    payload = {
        "valid": rep.valid,
        "length": rep.length,
        "max_per_vertex": max(rep.per_vertex_counts, default=0),
        "failure_step": rep.failure_step,
        "reason": rep.reason,
    }
    if rep.valid:
        text = f"valid length {rep.length}\n"
    else:
        text = f"invalid at step {rep.failure_step}: {rep.reason}\n"
    _emit(args, payload, text)
    return EXIT_OK if rep.valid else EXIT_FAIL


def _renaming(args) -> int:
    g = _parsed(args.graph, gc.parse_graph)
    a, b = _parsed(args.a, parse_colouring), _parsed(args.b, parse_colouring)
    seq = optimal_renaming(g, a, b, args.ell)
    _write(args.out, format_sequence(seq))
    return EXIT_OK


# ---------------------------------------------------------------- K_{p,q}


def _instance(args) -> KpqInstance:
    return KpqInstance(args.p, args.q, args.k)


def _kpq_formula(args) -> int:
    iv = diameter_interval(_instance(args))
    text = "".join(f"{key} {str(val).lower() if isinstance(val, bool) else val}\n" for key, val in iv.to_dict().items())
    _emit(args, iv.to_dict(), text)
    return EXIT_OK


def _kpq_extremal(args) -> int:
    inst = _instance(args)
    a, b, shape = extremal_pair(inst)
    Path(args.out_a).write_text(format_colouring(a))
    Path(args.out_b).write_text(format_colouring(b))
    if args.out_graph:
        Path(args.out_graph).write_text(gc.format_graph(inst.graph()))
    payload = {"a": shape.a, "b": shape.b, "blocks": [list(t) for t in shape.blocks]}
    _emit(args, payload, f"a {shape.a}\nb {shape.b}\n")
    return EXIT_OK


def _kpq_recolour(args) -> int:
    inst = _instance(args)
    a, b = _parsed(args.a, parse_colouring), _parsed(args.b, parse_colouring)
    seq = recolour_kpq(inst, a, b)
    _write(args.out, format_sequence(seq))
    return EXIT_OK


def _kpq_regimes(args) -> int:
    sys.stdout.write(format_regime_table(regime_table(args.k, args.p, args.qmax)))
    return EXIT_OK


def _paper_check(args) -> int:
    fn = PAPER_CHECKS[args.item]
    kwargs = {}
    if args.item == "gadget-forcing":
        kwargs["full"] = args.full
    elif args.full:
        raise _UsageError("--full only applies to gadget-forcing")
    if args.item in ("example-4.2", "prop-1.2"):
        kwargs["workers"] = args.workers
    rep = fn(**kwargs)
    _emit(args, rep.to_dict(), rep.text())
    return EXIT_OK if rep.passed else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="recolour", description="Recolouring graph explorer and checks.", allow_abbrev=False)
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_, allow_abbrev=False)
        p.set_defaults(fn=fn)
        return p

    def palette_flags(p):
        p.add_argument("--k", type=int, help="uniform palette 1..k")
        p.add_argument("--lists", help="list assignment file")

    def budget_flag(p):
        p.add_argument("--budget", type=int, help="state budget (default: RECOLOUR_BUDGET or 10^8)")

    def json_flag(p):
        p.add_argument("--json", action="store_true", help="JSON output")

    def kpq_flags(p):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--q", type=int, required=True)

    p = cmd("gen", _gen, "write a graph family (and its lists/colourings)")
    p.add_argument(
        "family",
        choices=["complete-bipartite", "minus-matching", "path", "layered", "gadget", "chain", "k18", "frozen"],
    )
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out", help="file prefix; writes PREFIX.graph, PREFIX.lists, PREFIX.a.col, ...")

    p = cmd("metrics", _metrics, "diameter and radius of the recolouring graph")
    p.add_argument("graph")
    palette_flags(p)
    p.add_argument("--symmetry", action="store_true", help="use colour symmetry (uniform palettes)")
    p.add_argument("--workers", type=int, default=1)
    budget_flag(p)
    json_flag(p)

    p = cmd("distance", _distance, "distance between two colourings")
    p.add_argument("graph")
    p.add_argument("a")
    p.add_argument("b")
    palette_flags(p)
    p.add_argument("--out", help="write a shortest sequence here")
    budget_flag(p)
    json_flag(p)

    p = cmd("components", _components, "connected components of the recolouring graph")
    p.add_argument("graph")
    palette_flags(p)
    budget_flag(p)
    json_flag(p)

    p = cmd("frozen", _frozen, "is a colouring frozen")
    p.add_argument("graph")
    p.add_argument("colouring")
    palette_flags(p)
    json_flag(p)

    p = cmd("ham", _ham, "Hamiltonian cycle search")
    p.add_argument("graph")
    palette_flags(p)
    p.add_argument("--budget", type=int, help="search budget (steps plus search nodes)")
    p.add_argument("--out", help="write the cycle, one colouring per line")
    json_flag(p)

    p = cmd("verify", _verify, "replay and check a recolouring sequence")
    p.add_argument("graph")
    p.add_argument("start")
    p.add_argument("target")
    p.add_argument("sequence")
    palette_flags(p)
    json_flag(p)

    p = cmd("renaming", _renaming, "recolour between colourings with the same classes")
    p.add_argument("graph")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--out")

    p = cmd("kpq-formula", _kpq_formula, "closed-form diameter interval for C_k(K_{p,q})")
    kpq_flags(p)
    json_flag(p)

    p = cmd("kpq-extremal", _kpq_extremal, "write the far-apart colouring pair")
    kpq_flags(p)
    p.add_argument("--out-a", required=True)
    p.add_argument("--out-b", required=True)
    p.add_argument("--out-graph")
    json_flag(p)

    p = cmd("kpq-recolour", _kpq_recolour, "constructive recolouring sequence on K_{p,q}")
    kpq_flags(p)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--out")

    p = cmd("kpq-regimes", _kpq_regimes, "tab-separated regime expressions for plotting")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)

    p = cmd("paper-check", _paper_check, "reproduce a published value")
    p.add_argument("item", choices=sorted(PAPER_CHECKS))
    p.add_argument("--full", action="store_true", help="gadget-forcing: include the (4,4) gadget")
    p.add_argument("--workers", type=int, default=1)
    json_flag(p)
    return ap


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except BudgetExhausted as exc:
        sys.stderr.write(f"budget exhausted: {exc}\n")
        return EXIT_BUDGET
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
