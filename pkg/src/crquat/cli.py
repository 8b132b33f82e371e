"""Command line interface.

Verbs:

  analyze     decide and classify one or more input documents
  examples    write a catalog input document
  classify    enumerate the splitting types allowed for (k, l)
  map         check a linear map between two inputs for a lift
  semidirect  assemble a twisted product and test it for triviality

Exit codes: 0 analysis completed (whatever the decision), 2 parse error,
3 contract violation (including structural impossibility), 4 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from .analysis import enumerate_splitting_types, f_detect, splitting_type_cocr
from .catalog import named_example
from .documents import (
    dump_canonical,
    input_to_document,
    load_document,
    matrix_to_obj,
    parse_input_document,
    parse_map_document,
    parse_semidirect_document,
)
from .errors import ContractError, DocumentError, InternalCheckError
from .maps import is_direct, lift_cocr_map, lift_cr_map, lift_f_map, semidirect
from .report import analyze_input, render_text


def _analyze_path(path: str, role: str | None, budget: int) -> dict:
    doc = load_document(path)
    inp, extras = parse_input_document(doc)
    if role is not None and role != inp.role:
        raise ContractError("--role %s does not match document role %s" % (role, inp.role))
    report = analyze_input(inp, alpha=extras.get("alpha"), budget=budget)
    report["path"] = path
    return report


def _analyze_job(args):
    path, role, budget = args
    return dump_canonical(_analyze_path(path, role, budget))


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(dump_canonical(report))
    else:
        out.write(render_text(report))


def _cmd_analyze(args) -> int:
    jobs = max(1, args.jobs)
    if jobs > 1 and len(args.paths) > 1 and args.format == "json":
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for line in pool.map(_analyze_job, [(p, args.role, args.budget) for p in args.paths]):
                sys.stdout.write(line)
        return 0
    for path in args.paths:
        _emit(_analyze_path(path, args.role, args.budget), args.format, sys.stdout)
    return 0


def _cmd_examples(args) -> int:
    name = args.name
    if name in ("u_k", "uprime_k"):
        if args.k is None:
            raise ContractError("examples %s needs --k (the atom index)" % name)
        inp = named_example(name, index=args.k)
    elif name == "f_model":
        if args.k is None or args.l is None:
            raise ContractError("examples f_model needs --l and --k")
        inp = named_example(name, l=args.l, k=args.k)
    else:
        inp = named_example(name)
    text = dump_canonical(input_to_document(inp))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_classify(args) -> int:
    classes = enumerate_splitting_types(args.k, args.l)
    report = {
        "format": "crquat.classify.v1",
        "k": args.k,
        "l": args.l,
        "dim_u": 4 * args.k - args.l,
        "count": len(classes),
        "classes": [
            {"summands": [list(p) for p in st], "rank": st.rank, "total_degree": st.total_degree}
            for st in classes
        ],
    }
    if args.format == "json":
        sys.stdout.write(dump_canonical(report))
    else:
        sys.stdout.write("classes for k=%d l=%d (dim %d):\n" % (args.k, args.l, report["dim_u"]))
        for c in report["classes"]:
            body = " + ".join(("O(%d)" % d if m == 1 else "%dO(%d)" % (m, d)) for d, m in c["summands"])
            sys.stdout.write("  %s\n" % body)
    return 0


def _cmd_map(args) -> int:
    src, dst, matrix, twist, kind = parse_map_document(load_document(args.path))
    if kind == "cr":
        result = lift_cr_map(matrix, src, dst, twist)
    elif kind == "cocr":
        result = lift_cocr_map(matrix, src, dst, twist)
    else:
        certs = []
        for inp in (src, dst):
            cr = inp if inp.role == "cr" else None
            if cr is None:
                raise ContractError("f map checks need cr-presented components")
            cert = f_detect(cr)
            if cert is None:
                raise ContractError("component admits no compatible complement")
            certs.append(cert)
        result = lift_f_map(matrix, certs[0], certs[1], twist)
    report = {
        "format": "crquat.map.v1",
        "map_kind": kind,
        "lift_found": result is not None,
        "lift": matrix_to_obj(result.matrix) if result else None,
        "homogeneous_dim": result.homogeneous_dim if result else None,
        "path": args.path,
    }
    if args.format == "json":
        sys.stdout.write(dump_canonical(report))
    else:
        sys.stdout.write(
            "lift %s (%s)\n" % ("found" if result else "absent", "unique" if result and result.unique else "-")
        )
    return 0


def _cmd_semidirect(args) -> int:
    data = parse_semidirect_document(load_document(args.path))
    assembled = semidirect(data)
    st = splitting_type_cocr(assembled)
    direct, phi = is_direct(data)
    report = {
        "format": "crquat.semidirect.v1",
        "components": {
            "first": {"k": data.first.k, "dim_u": data.first.dim_u, "l": data.first.l},
            "second": {"k": data.second.k, "dim_u": data.second.dim_u, "l": data.second.l},
        },
        "assembled": {"k": assembled.k, "dim_u": assembled.dim_u, "l": assembled.l},
        "splitting_type": [list(p) for p in st],
        "direct": direct,
        "phi": matrix_to_obj(phi) if phi is not None else None,
        "path": args.path,
    }
    if args.format == "json":
        sys.stdout.write(dump_canonical(report))
    else:
        body = " + ".join(("O(%d)" % d if m == 1 else "%dO(%d)" % (m, d)) for d, m in st)
        sys.stdout.write("assembled splitting: %s\ndirect: %s\n" % (body, direct))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crquat", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="decide and classify input documents")
    p.add_argument("paths", nargs="+", help="UTF-8 JSON input documents")
    p.add_argument("--role", choices=("cr", "cocr"), help="expected role; must match the document")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--jobs", type=int, default=1, help="fan out over input files")
    p.add_argument("--budget", type=int, default=200, help="sign-witness search attempts")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("examples", help="write a catalog input document")
    p.add_argument("name", choices=("u_k", "uprime_k", "f_model", "ex351", "ex352"))
    p.add_argument("--k", type=int, help="atom index (u_k, uprime_k) or ambient size (f_model)")
    p.add_argument("--l", type=int, help="compatible-part size (f_model)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_examples)

    p = sub.add_parser("classify", help="enumerate splitting types for (k, l)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("map", help="lift a linear map between two inputs")
    p.add_argument("path")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("semidirect", help="assemble a twisted product and test triviality")
    p.add_argument("path")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_semidirect)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except ContractError as exc:
        print("contract violation: %s" % exc, file=sys.stderr)
        return 3
    except InternalCheckError as exc:
        print("internal invariant breach: %s" % exc, file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
