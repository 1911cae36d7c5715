"""Command line entry point.

Exit codes: 0 success, 2 bad input, 3 size cap exceeded, 4 a consistency
check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Sequence

from .errors import CapExceededError, ConsistencyError, InputError
from .families import generate_family
from .filtration import BACKENDS, CONVENTIONS, MODES, hilbert_sequence
from .graph import DEFAULT_MAX_EDGES, MAX_VERTICES_FOR_SUBSETS, Multigraph, parse_graph
from .presentation import (deformed_relations, dimension_consistency, graded_relations,
                           redundancy_filter, relation_report, verify_relations)
from .series import PolySeries, format_poly, parse_poly
from .strata import (SPECIAL_LOCI, check_scale_invariance, check_specialization, sweep)

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_CONSISTENCY = 0, 2, 3, 4


def parse_range(text: str) -> list[int]:
    """``7``, ``3..13`` or ``3,5,8``."""
    text = text.strip()
    m = re.fullmatch(r"(\d+)\s*\.\.\s*(\d+)", text)
    try:
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if lo > hi:
                raise InputError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise InputError(f"bad size {text!r}") from exc


def _load_graph(args, n: int | None = None) -> Multigraph:
    if args.graph:
        path = Path(args.graph)
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from exc
        return parse_graph(text, name=path.stem)
    if not args.family:
        raise InputError("give --graph PATH or --family NAME")
    if n is None and args.n is not None:
        sizes = parse_range(args.n)
        if len(sizes) != 1:
            raise InputError("this command takes a single --n")
        n = sizes[0]
    return generate_family(args.family, n)


def _polys(args, default: Sequence[str] = ()) -> list[PolySeries]:
    texts = args.f or list(default)
    if not texts:
        raise InputError("give at least one --f POLY")
    return [parse_poly(t) for t in texts]


def _result_json(graph: Multigraph, f: PolySeries, res) -> dict:
    return {
        "graph": graph.name,
        "f": format_poly(f),
        "hilbert": list(res.hilbert),
        "cumulative": list(res.cumulative),
        "total_dim": res.total_dim,
        "forest_count": res.forest_count,
    }


def _compute(graph, f, args):
    return hilbert_sequence(graph, f, convention=args.convention, backend=args.backend,
                            mode=args.mode, max_edges=args.max_edges)


def cmd_hilbert(args, out) -> int:
    graph = _load_graph(args)
    rows = [_result_json(graph, f, _compute(graph, f, args)) for f in _polys(args)]
    if args.format == "json":
        json.dump(rows[0] if len(rows) == 1 else rows, out, indent=2)
        out.write("\n")
    else:
        for r in rows:
            out.write("\t".join(map(str, r["hilbert"])) + "\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    if not args.family:
        raise InputError("table needs --family")
    fam = args.family
    sizes = parse_range(args.n) if args.n else [None]
    records = []
    for f in _polys(args):
        block = []
        for n in sizes:
            graph = generate_family(fam, n)
            res = _compute(graph, f, args)
            block.append({"graph": graph.name, "n": n, "f": format_poly(f),
                          "hilbert": list(res.hilbert)})
        records.append(block)
    if args.format == "json":
        json.dump([r for block in records for r in block], out, indent=2)
        out.write("\n")
    else:
        for block in records:
            out.write(f"# {fam} n={args.n or '-'} f={block[0]['f']}\n")
            for r in block:
                out.write("\t".join(map(str, r["hilbert"])) + "\n")
    return EXIT_OK


def _verify_one(graph: Multigraph, f: PolySeries, args) -> tuple[list[dict], list[dict]]:
    checks: list[dict] = []
    relations: list[dict] = []

    def add(name: str, passed: bool, detail="", required: bool = True) -> None:
        checks.append({"check": name, "f": format_poly(f), "passed": bool(passed),
                       "required": required, "detail": detail})

    conv = args.convention
    if graph.n_vertices <= MAX_VERTICES_FOR_SUBSETS:
        for kind, rs in (("graded", graded_relations(graph)),
                         ("deformed", deformed_relations(graph, f, conv))):
            results = verify_relations(redundancy_filter(rs))
            relations += relation_report(results, graph)
            add(f"{kind} relations vanish", all(r.verified for r in results),
                f"{sum(r.verified for r in results)}/{len(results)}")
    else:
        add("relations vanish", True, "skipped: too many vertices for subset enumeration", False)

    dims = dimension_consistency(graph, f, conv)
    add("total dimension = graded total = forest count", dims["consistent"],
        f"{dims['filtered_total']}/{dims['graded_total']}/{dims['forest_count']}")

    scale = check_scale_invariance(graph, f, convention=conv)
    add("scale invariance", scale["passed"], " ".join(str(r["hilbert"]) for r in scale["scaled"]))

    base = hilbert_sequence(graph, f, convention=conv).hilbert
    flipped = graph.reorder(list(reversed(range(graph.n_vertices))))
    rev = hilbert_sequence(flipped, f, convention=conv).hilbert
    add("vertex order invariance", rev == base, str(list(rev)))

    lower = check_specialization(graph, f, PolySeries.from_coeffs([0, 1]), convention=conv)
    add("graded sequence lex below filtered", lower["passed"], str(lower["special"]))

    if format_poly(f) != "u":
        second = base[1] if len(base) > 1 else 0
        add("second entry equals vertex count", second == graph.n_vertices,
            str(second), required=False)
    return checks, relations


def cmd_verify(args, out) -> int:
    graph = _load_graph(args)
    checks, relations = [], []
    for f in _polys(args):
        c, r = _verify_one(graph, f, args)
        checks += c
        relations += r
    failed = any(c["required"] and not c["passed"] for c in checks)
    if args.format == "json":
        json.dump({"graph": graph.name, "checks": checks, "relations": relations}, out, indent=2)
        out.write("\n")
    else:
        for c in checks:
            status = "pass" if c["passed"] else ("FAIL" if c["required"] else "note")
            out.write(f"{status}\t{c['check']}\t{c['f']}\t{c['detail']}\n")
    return EXIT_CONSISTENCY if failed else EXIT_OK


def cmd_sweep(args, out) -> int:
    graph = _load_graph(args)
    md = max(graph.max_degree(), 1)
    if args.mask is None:
        mask = list(range(2, md + 1))
    else:
        mask = parse_range(args.mask) if args.mask.strip() else []
    loci = ()
    if args.family:
        loci = SPECIAL_LOCI.get(args.family.strip(), ())
    strata = sweep(graph, mask, args.samples, args.seed, loci, convention=args.convention)
    if args.format == "json":
        json.dump({"graph": graph.name, "mask": mask, "seed": args.seed, "samples": args.samples,
                   "strata": [s.as_dict() for s in strata]}, out, indent=2)
        out.write("\n")
    else:
        for s in strata:
            out.write("\t".join([" ".join(map(str, s.hilbert)), str(s.count),
                                 "lex_max" if s.lex_max else "-", "; ".join(s.representatives)]) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--graph", help="edge-list file")
    src.add_argument("--family", help="family token, e.g. chain or leg(3)")
    common.add_argument("--n", help="family size; table also accepts 3..13 or 3,5,7")
    common.add_argument("--f", action="append", help="polynomial, repeatable")
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    common.add_argument("--mode", choices=MODES, default="exact")
    common.add_argument("--backend", choices=BACKENDS, default="auto")
    common.add_argument("--convention", choices=CONVENTIONS, default="relations",
                        help="whether --f enters the defining relations or the generators")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="zonotopal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("hilbert", parents=[common], help="Hilbert sequence of one graph")
    sub.add_parser("table", parents=[common], help="Hilbert sequences over a family")
    sub.add_parser("verify", parents=[common], help="relation and invariance checks")
    sw = sub.add_parser("sweep", parents=[common], help="strata of the parameter space")
    sw.add_argument("--mask", help="coefficient degrees to vary, e.g. 2,3 or 2..4")
    sw.add_argument("--samples", type=int, default=8)
    sw.add_argument("--seed", type=int, default=0)
    return parser


COMMANDS = {"hilbert": cmd_hilbert, "table": cmd_table, "verify": cmd_verify, "sweep": cmd_sweep}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    out = out or sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
