"""Command-line surface.

Exit codes (stable, documented in --help):
  0 success
  2 parse error / malformed input
  3 structural validation failure (graph, cycles, charges, relators, groups)
  4 search budget exceeded
  5 instance too large for exact mode
  6 nothing found (e.g. no matching convention)
  7 internal invariant violation (commutation, -I, kernel, sparsity bounds)
  1 unexpected error
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .cayley import GroupSpec, Presentation, cayley_graph, code_from_group, ldpc_report
from .codespace import (
    GraphicalCode,
    code_from_cycles,
    code_report,
    matrix_to_alist,
)
from .errors import (
    BoundViolated,
    BudgetExceeded,
    GraphQecError,
    IdentityGenerator,
    KernelViolation,
    MinusIdentity,
    NoConventionFound,
    NonCommuting,
    NotACycle,
    NotARelator,
    NotConnected,
    NotEven,
    NotFourValent,
    NotGenerating,
    ParseError,
    SlotReused,
    TooLarge,
)
from .families import FAMILY_BUILDERS, build_family
from .graph import QuantizedGraph
from .metrics import distance, gv_bound, gv_bound_improved, optimal_profile
from .model import HamiltonianSpec, spectrum
from .pauli import (
    ALL_CONVENTIONS,
    PairingConvention,
    stabilizers,
    symplectic_check_matrix,
)

_EXIT_CODES = [
    (ParseError, 2),
    ((NotFourValent, NotConnected, SlotReused, NotACycle, NotEven, NotARelator,
      NotGenerating, IdentityGenerator), 3),
    (BudgetExceeded, 4),
    (TooLarge, 5),
    (NoConventionFound, 6),
    ((NonCommuting, MinusIdentity, KernelViolation, BoundViolated), 7),
]


def _exit_code(exc: GraphQecError) -> int:
    for types, code in _EXIT_CODES:
        if isinstance(exc, types):
            return code
    return 1


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _emit(args, payload: dict | str) -> None:
    if isinstance(payload, dict):
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        text = payload
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str) -> QuantizedGraph:
    return QuantizedGraph.from_json(_read(path))


def _load_cycles(g: QuantizedGraph, path: str):
    try:
        data = json.loads(_read(path))
        lists = data["cycles"]
        return [g.edge_vector(idxs) for idxs in lists]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed cycles file: {exc}") from exc
    except ValueError as exc:
        raise ParseError(f"cycle index out of range: {exc}") from exc


def _build_code(args) -> GraphicalCode:
    if args.graph and args.cycles:
        g = _load_graph(args.graph)
        return code_from_cycles(g, _load_cycles(g, args.cycles))
    if args.group and args.presentation:
        spec = GroupSpec.from_json(_read(args.group))
        pres = Presentation.from_json(_read(args.presentation))
        return code_from_group(spec, pres)
    raise ParseError("provide --graph with --cycles, or --group with --presentation")


def _convention(name: str) -> PairingConvention:
    if len(name) == 3 and set(name) == set("XYZ"):
        return PairingConvention(tuple(name))
    raise ParseError(
        f"convention must be a permutation of XYZ, got {name!r}; "
        f"known: {[c.name for c in ALL_CONVENTIONS]}"
    )


def _add_code_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="graph JSON file")
    p.add_argument("--cycles", help="cycles JSON file (edge-index lists)")
    p.add_argument("--group", help="group spec JSON file")
    p.add_argument("--presentation", help="relator words JSON file")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="graphqec",
        description="Stabilizer codes and solvable models on 4-valent graphs.",
        epilog=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--budget", type=int, default=None, help="search budget")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker count (results are identical for any value)")
    parser.add_argument("--format", choices=["json", "alist", "text"], default="json")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized subroutines")
    parser.add_argument("--out", default=None, help="write output to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a graph file")
    p.add_argument("graph_file")

    p = sub.add_parser("code", help="build a code and report n, k (and d)")
    _add_code_inputs(p)
    p.add_argument("--distance", action="store_true")

    p = sub.add_parser("stabilizers", help="emit the stabilizer generators")
    _add_code_inputs(p)
    p.add_argument("--convention", default="ZYX")

    p = sub.add_parser("check-matrix", help="emit the cycle check matrix")
    _add_code_inputs(p)

    p = sub.add_parser("distance", help="graphical distance report")
    _add_code_inputs(p)

    p = sub.add_parser("oracle", help="brute-force stabilizer distance")
    _add_code_inputs(p)
    p.add_argument("--convention", default="ZYX")

    p = sub.add_parser("optimal", help="optimal-code staircase of a graph")
    p.add_argument("graph_file")

    p = sub.add_parser("family", help="build a named family instance")
    p.add_argument("name", choices=sorted(FAMILY_BUILDERS))
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--distance", action="store_true")

    p = sub.add_parser("cayley", help="emit the Cayley graph of a group file")
    p.add_argument("group_file")

    p = sub.add_parser("spectrum", help="Hamiltonian spectrum")
    _add_code_inputs(p)
    p.add_argument("--family", choices=sorted(FAMILY_BUILDERS))
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--beta", type=float, default=None)

    p = sub.add_parser("bound", help="existence bound evaluation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, default=None)

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except GraphQecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)


def _dispatch(args) -> int:
    if args.command == "validate":
        g = _load_graph(args.graph_file)
        _emit(args, {"ok": True, "vertices": g.vertex_count, "edges": g.edge_count})
        return 0

    if args.command == "code":
        code = _build_code(args)
        report = code_report(code)
        if args.distance:
            report["distance"] = distance(code, args.budget).to_json_dict()
        _emit(args, report)
        return 0

    if args.command == "stabilizers":
        code = _build_code(args)
        group = stabilizers(code, _convention(args.convention))
        payload = {
            "n": group.n,
            "rank": group.rank,
            "generators": [g.to_letters() for g in group.generators],
        }
        if args.format == "text":
            _emit(args, "\n".join(payload["generators"]) + "\n")
        else:
            _emit(args, payload)
        return 0

    if args.command == "check-matrix":
        code = _build_code(args)
        rows = code.generating_cycles
        if args.format == "alist":
            _emit(args, matrix_to_alist(rows, code.graph.edge_count))
        elif args.format == "text":
            _emit(args, "\n".join(r.to01() for r in rows) + "\n")
        else:
            _emit(args, {"rows": [r.to01() for r in rows]})
        return 0

    if args.command == "distance":
        code = _build_code(args)
        _emit(args, distance(code, args.budget).to_json_dict())
        return 0

    if args.command == "oracle":
        from .pauli import oracle_distance

        code = _build_code(args)
        group = stabilizers(code, _convention(args.convention))
        budget = args.budget if args.budget is not None else code.n
        _emit(args, {"oracle_distance": oracle_distance(group, budget)})
        return 0

    if args.command == "optimal":
        g = _load_graph(args.graph_file)
        _emit(args, optimal_profile(g).to_json_dict())
        return 0

    if args.command == "family":
        instance = build_family(args.name, n=args.n)
        instance.check_nk()
        report = code_report(instance.code)
        report["family"] = instance.name
        report["params"] = instance.params
        report["expected"] = {
            "n": instance.expected_n,
            "k": instance.expected_k,
            "d": instance.expected_d,
        }
        report["graph"] = instance.code.graph.to_json_dict()
        if args.distance:
            report["distance"] = distance(instance.code, args.budget).to_json_dict()
        _emit(args, report)
        return 0

    if args.command == "cayley":
        spec = GroupSpec.from_json(_read(args.group_file))
        _emit(args, cayley_graph(spec).to_json_dict())
        return 0

    if args.command == "spectrum":
        if args.family:
            code = build_family(args.family, n=args.n).code
        else:
            code = _build_code(args)
        h = HamiltonianSpec.from_code(code)
        report = spectrum(h).to_json_dict()
        if args.beta is not None:
            from .model import partition_function

            report["beta"] = args.beta
            report["partition_function"] = f"{partition_function(h, args.beta):.6f}"
        _emit(args, report)
        return 0

    if args.command == "bound":
        if args.s is None:
            value = gv_bound(args.n, args.d)
        else:
            value = gv_bound_improved(args.n, args.d, args.s)
        _emit(args, {"n": args.n, "d": args.d, "s": args.s, "bound": f"{value:.6f}"})
        return 0

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
