"""Command line entry point.

Exit codes: 0 success / all agree, 1 disagreement found, 2 usage error,
3 cap or resource error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import algprops as ap
from .betti import graded_betti, has_linear_resolution, is_level, is_weakly_polymatroidal
from .classify import classify
from .combprops import certificate
from .complex import SimplicialComplex, alexander_dual, is_matroid, tight_labelling
from .errors import CapExceeded, EdgelessError, IsolatedEdgeContraction, ValidationError
from .homology import Field, reduced_homology
from .hypergraph import (
    Hypergraph,
    PartiteSpec,
    chordality,
    complete_multipartite,
    independence_complex,
    transversal_hypergraph,
)
from .ideals import MonomialIdeal, edge_ideal, ideal_dual, stanley_reisner
from .io import (
    complex_to_json,
    hypergraph_to_json,
    ideal_to_json,
    load_object,
    parse_sides,
)
from .sweep import SweepConfig, run_sweep

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

PROPERTIES = (
    "unmixed", "cm", "sr", "buchsbaum", "lcm", "lbuchsbaum", "gorenstein", "ci",
    "almost_ci", "seq_cm", "seq_s2", "level", "matroid", "tight", "shellable",
    "vd", "chordal", "linear_resolution", "weakly_polymatroidal",
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _add_input(p: argparse.ArgumentParser):
    p.add_argument("--spec", help="comma-separated side sizes of a complete multipartite hypergraph")
    p.add_argument("--s", type=int, help="uniformity for --spec")
    p.add_argument("--input", help="JSON file ('-' for stdin): hypergraph, complex or ideal")


def _add_field(p: argparse.ArgumentParser):
    p.add_argument("--field", default="q", help="q, f2 or fp:P (default q)")


def _read_input(args):
    if args.spec is not None:
        if args.s is None:
            raise _UsageError("--spec needs --s")
        return complete_multipartite(PartiteSpec(args.s, parse_sides(args.spec)))
    src = args.input or "-"
    text = sys.stdin.read() if src == "-" else open(src).read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"input is not JSON: {exc}") from exc
    obj = load_object(data)
    if isinstance(obj, PartiteSpec):
        return complete_multipartite(obj)
    return obj


def _as_complex(obj) -> SimplicialComplex:
    if isinstance(obj, Hypergraph):
        return independence_complex(obj)
    if isinstance(obj, MonomialIdeal):
        from .ideals import complex_of

        return complex_of(obj)
    return obj


def _as_hypergraph(obj) -> Hypergraph:
    if isinstance(obj, Hypergraph):
        return obj
    if isinstance(obj, MonomialIdeal):
        return Hypergraph(obj.n, obj.gens)
    # a complex is the independence complex of its minimal non-faces
    return Hypergraph(obj.n, stanley_reisner(obj).gens)


def _as_ideal(obj) -> MonomialIdeal:
    if isinstance(obj, Hypergraph):
        return edge_ideal(obj)
    if isinstance(obj, MonomialIdeal):
        return obj
    return stanley_reisner(obj)


def _emit(payload):
    print(json.dumps(payload, sort_keys=True))


def cmd_classify(args) -> int:
    spec = PartiteSpec(args.s, parse_sides(args.spec))
    _emit(classify(spec, args.l, args.r).to_json())
    return EXIT_OK


def cmd_check(args) -> int:
    obj = _read_input(args)
    fld = Field.parse(args.field)
    prop = args.property
    c = _as_complex(obj)
    if prop == "unmixed":
        v = ap.is_unmixed(c)
    elif prop == "cm":
        v = ap.is_cm(c, fld)
    elif prop == "sr":
        v = ap.satisfies_sr(c, args.r, fld)
    elif prop == "buchsbaum":
        v = ap.is_buchsbaum(c, fld)
    elif prop == "lcm":
        v = ap.is_l_cm(c, args.l, fld)
    elif prop == "lbuchsbaum":
        v = ap.is_l_buchsbaum(c, args.l, fld)
    elif prop == "gorenstein":
        v = ap.is_gorenstein(c, fld)
    elif prop == "ci":
        v = ap.is_complete_intersection(_as_ideal(obj))
    elif prop == "almost_ci":
        v = ap.is_almost_ci(_as_ideal(obj))
    elif prop == "seq_cm":
        v = ap.is_seq_cm(c, fld)
    elif prop == "seq_s2":
        v = ap.is_seq_s2(c, fld)
    elif prop == "level":
        v = ap.PropertyVerdict("level", is_level(c, fld))
    elif prop == "matroid":
        v = ap.PropertyVerdict("matroid", is_matroid(c))
    elif prop == "tight":
        order = tight_labelling(c)
        v = ap.PropertyVerdict("tight", order is not None, None if order is None else {"labelling": order})
    elif prop == "shellable":
        cert = certificate(c, "shellable")
        v = ap.PropertyVerdict("shellable", cert["value"], cert["certificate"])
    elif prop == "vd":
        cert = certificate(c, "vd")
        v = ap.PropertyVerdict("vertex_decomposable", cert["value"], cert["certificate"])
    elif prop == "chordal":
        res = chordality(_as_hypergraph(obj))
        w = None if res.failing_minor is None else {"failing_minor": hypergraph_to_json(res.failing_minor)}
        v = ap.PropertyVerdict("chordal", res.chordal, w)
    elif prop == "linear_resolution":
        v = ap.PropertyVerdict("linear_resolution", has_linear_resolution(_as_ideal(obj), fld))
    elif prop == "weakly_polymatroidal":
        v = ap.PropertyVerdict("weakly_polymatroidal", is_weakly_polymatroidal(_as_ideal(obj)))
    else:  # pragma: no cover - argparse restricts choices
        raise _UsageError(f"unknown property {prop}")
    _emit(v.to_json())
    return EXIT_OK


def cmd_homology(args) -> int:
    c = _as_complex(_read_input(args))
    _emit(reduced_homology(c, Field.parse(args.field)).to_json())
    return EXIT_OK


def cmd_betti(args) -> int:
    c = _as_complex(_read_input(args))
    table = graded_betti(c, Field.parse(args.field))
    if not args.json:
        print(table.macaulay_rows())
    _emit(table.to_json())
    return EXIT_OK


def cmd_certify(args) -> int:
    obj = _read_input(args)
    if args.what == "chordal":
        res = chordality(_as_hypergraph(obj))
        trace = [
            {"labels": list(k[0]), "edges": [list(e) for e in k[1]], "simplicial_vertex": v}
            for k, v in res.trace.items()
        ]
        payload = {"property": "chordal", "value": res.chordal, "certificate": trace if res.chordal else None}
        if res.failing_minor is not None:
            payload["failing_minor"] = hypergraph_to_json(res.failing_minor)
        _emit(payload)
    else:
        _emit(certificate(_as_complex(obj), args.what))
    return EXIT_OK


def cmd_dual(args) -> int:
    obj = _read_input(args)
    if isinstance(obj, MonomialIdeal):
        _emit(ideal_to_json(ideal_dual(obj)))
    elif isinstance(obj, Hypergraph):
        _emit(ideal_to_json(ideal_dual(edge_ideal(obj))))
    else:
        _emit(complex_to_json(alexander_dual(obj)))
    return EXIT_OK


def cmd_ind(args) -> int:
    _emit(complex_to_json(independence_complex(_as_hypergraph(_read_input(args)))))
    return EXIT_OK


def cmd_tr(args) -> int:
    _emit(hypergraph_to_json(transversal_hypergraph(_as_hypergraph(_read_input(args)))))
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        t_min=args.t_min,
        t_max=args.t_max,
        max_side=args.max_side,
        max_n=args.max_n,
        fields=tuple(args.fields.split(",")),
        l_values=tuple(range(1, args.l_max + 1)),
        r_values=tuple(int(x) for x in args.r_values.split(",")),
        tight_max_n=args.tight_max_n,
        polymatroid_max_n=args.polymatroid_max_n,
        jobs=args.jobs,
        out=args.out,
        perturb=args.perturb,
    )
    summary, _ = run_sweep(cfg, progress=(lambda label: logging.info("done %s", label)))
    _emit(
        {
            "specs": summary.specs,
            "records": summary.records,
            "disagreements": summary.disagreements,
            "field_mismatches": summary.field_mismatches,
            "per_property": summary.per_property,
        }
    )
    return EXIT_OK if summary.ok else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="edgeideals", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="closed-form report for a complete multipartite spec")
    p.add_argument("--spec", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--r", type=int, default=2)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check", help="run one definitional property check")
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--r", type=int, default=2)
    _add_input(p)
    _add_field(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("homology", help="reduced homology dimensions")
    _add_input(p)
    _add_field(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("betti", help="graded Betti table of R/I via Hochster's formula")
    _add_input(p)
    _add_field(p)
    p.add_argument("--json", action="store_true", help="JSON only")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("certify", help="emit a shelling order, shedding tree or chordality trace")
    p.add_argument("--what", required=True, choices=("shellable", "vd", "chordal"))
    _add_input(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("dual", help="Alexander dual of a complex or ideal")
    _add_input(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("ind", help="independence complex")
    _add_input(p)
    p.set_defaults(func=cmd_ind)

    p = sub.add_parser("tr", help="transversal hypergraph")
    _add_input(p)
    p.set_defaults(func=cmd_tr)

    p = sub.add_parser("sweep", help="compare closed forms with oracles over a grid")
    p.add_argument("--t-min", type=int, default=2)
    p.add_argument("--t-max", type=int, default=5)
    p.add_argument("--max-side", type=int, default=3)
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--fields", default="q,f2")
    p.add_argument("--l-max", type=int, default=4)
    p.add_argument("--r-values", default="2,3")
    p.add_argument("--tight-max-n", type=int, default=8)
    p.add_argument("--polymatroid-max-n", type=int, default=8)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (env EDGEIDEALS_JOBS)")
    p.add_argument("--out", help="JSONL output path")
    p.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"edgeideals: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"edgeideals: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"edgeideals: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"edgeideals: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValidationError, EdgelessError, IsolatedEdgeContraction) as exc:
        print(f"edgeideals: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
