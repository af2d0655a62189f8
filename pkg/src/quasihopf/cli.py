"""Command-line surface.

Every subcommand loads an algebra file, runs one verification suite,
prints a human-readable table and optionally writes the machine report;
the exit status is 0 exactly when every executed check passed.
"""

from __future__ import annotations

import argparse
import sys

from . import fileio, report
from .algebra import AlgebraError
from .fileio import FileFormatError
from .generators import dual_group_cocycle, group_algebra, h2, sweedler
from .integrals import IntegralError


def _print_entries(title, entries):
    print("%s:" % title)
    for e in entries:
        mark = "pass" if e.ok else "FAIL"
        line = "  [%s] %-28s %s" % (mark, e.tag, report.TAG_REGISTRY.get(e.tag, ""))
        if not e.ok and e.witness:
            line += "  <- %s" % e.witness
        print(line)
    npass = sum(1 for e in entries if e.ok)
    print("  %d/%d passed" % (npass, len(entries)))


def _finish(args, A, sections, payload=None):
    doc = report.build_report(A, sections, payload)
    for name, entries in sections.items():
        if entries is None:
            print("%s: skipped (not unimodular)" % name)
        else:
            _print_entries(name, entries)
    if payload:
        for k, v in payload.items():
            print("%s: %s" % (k, v))
    if getattr(args, "json", None):
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.dump_report(doc))
        print("report written to %s" % args.json)
    return 0 if doc["summary"]["failed"] == 0 else 1


def cmd_gen(args):
    name = args.name
    if name == "h2":
        alg = h2()
    elif name == "sweedler":
        alg = sweedler()
    elif name == "group":
        alg = group_algebra(args.n, args.p)
    elif name == "cocycle":
        if args.n is None or args.p is None:
            print("cocycle needs -n and -p", file=sys.stderr)
            return 2
        alg = dual_group_cocycle(args.n, args.p)
    else:
        print("unknown generator %r (have: group, cocycle, sweedler, h2)" % name,
              file=sys.stderr)
        return 2
    fileio.save(alg, args.output)
    print("wrote %s (%s, dim %d)" % (args.output, alg.name, alg.dim))
    return 0


def _load(args):
    return fileio.load(args.file)


def cmd_verify(args):
    A = _load(args)
    return _finish(args, A, {
        "structure": report.structure_section(A),
        "axioms": report.axioms_section(A),
    })


def cmd_identities(args):
    A = _load(args)
    return _finish(args, A, {"identities": report.identities_section(A)})


def cmd_integrals(args):
    A = _load(args)
    entries, data = report.integrals_section(A)
    payload = {}
    if data is not None:
        payload = {
            "unimodular": data.unimodular,
            "modular_function": [A.field.to_json(c) for c in data.mu],
            "dim_left_integrals": len(data.left_integrals),
            "dim_right_integrals": len(data.right_integrals),
            "dim_left_cointegrals": len(data.left_cointegrals),
            "dim_right_cointegrals": len(data.right_cointegrals),
            "left_cointegral": [A.field.to_json(c) for c in data.lam],
            "right_cointegral": [A.field.to_json(c) for c in data.lam_r],
        }
    return _finish(args, A, {"integrals": entries}, payload)


def cmd_cointegrals(args):
    A = _load(args)
    return _finish(args, A, {"cointegrals": report.cointegrals_section(A)})


def cmd_adjoint(args):
    A = _load(args)
    return _finish(args, A, {"adjoint": report.adjoint_section(A)})


def cmd_yd(args):
    A = _load(args)
    return _finish(args, A, {"yd": report.yd_section(A)})


def cmd_frobenius(args):
    A = _load(args)
    entries = report.frobenius_section(A)
    if entries is None:
        print("%s is not unimodular: the adjoint algebra carries no Frobenius "
              "structure by this construction" % A.name, file=sys.stderr)
        return 1
    return _finish(args, A, {"frobenius": entries})


def _parse_pivot(A, spec):
    if spec == "auto":
        return None
    coords = [c.strip() for c in spec.split(",")]
    if len(coords) != A.dim:
        raise FileFormatError("--pivot needs %d comma-separated coordinates" % A.dim)
    return [A.field.of(c) for c in coords]


def cmd_trace(args):
    A = _load(args)
    pivot = None
    if args.pivot != "auto":
        pivot = _parse_pivot(A, args.pivot)
    elif getattr(A, "_file_pivot", None) is not None:
        pivot = A._file_pivot
    entries, payload = report.trace_section(A, pivot)
    return _finish(args, A, {"trace": entries}, payload)


def cmd_twist(args):
    A = _load(args)
    if args.F:
        F = fileio.load_tensor(args.F, A)
    else:
        F = A.random_gauge(args.seed or A.name)
    B = A.gauge_twist(F)
    fileio.save(B, args.output)
    print("wrote %s (twist of %s)" % (args.output, A.name))
    return 0


def cmd_report(args):
    A = _load(args)
    sections = {
        "structure": report.structure_section(A),
        "axioms": report.axioms_section(A),
        "identities": report.identities_section(A),
    }
    ient, data = report.integrals_section(A)
    sections["integrals"] = ient
    payload = {}
    if data is not None:
        payload["unimodular"] = data.unimodular
        payload["dim_left_cointegrals"] = len(data.left_cointegrals)
        payload["dim_right_cointegrals"] = len(data.right_cointegrals)
        sections["cointegrals"] = report.cointegrals_section(A)
        sections["adjoint"] = report.adjoint_section(A)
        sections["yd"] = report.yd_section(A)
        sections["frobenius"] = report.frobenius_section(A)
        tent, tpay = report.trace_section(A)
        sections["trace"] = tent
        payload.update(tpay)
    return _finish(args, A, sections, payload)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="qhopf",
        description="Exact verification kernel for finite-dimensional "
                    "quasi-Hopf algebras presented by structure constants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a bundled algebra to a file")
    p.add_argument("name", help="group | cocycle | sweedler | h2")
    p.add_argument("-n", type=int, default=2, help="order for group/cocycle")
    p.add_argument("-p", type=int, default=None, help="prime field (cocycle needs p = 1 mod n)")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    for name, fn, extra in [
        ("verify", cmd_verify, "structure and the eight defining axioms"),
        ("identities", cmd_identities, "the derived-element identity suite"),
        ("integrals", cmd_integrals, "integrals, cointegrals, Frobenius maps"),
        ("cointegrals", cmd_cointegrals, "the five-way cointegral equivalence"),
        ("adjoint", cmd_adjoint, "the adjoint algebra and class functions"),
        ("yd", cmd_yd, "Yetter-Drinfeld layer, induction, categorical cointegrals"),
        ("frobenius", cmd_frobenius, "Frobenius structure (unimodular only)"),
        ("report", cmd_report, "every suite"),
    ]:
        p = sub.add_parser(name, help=extra)
        p.add_argument("file")
        p.add_argument("--json", help="write the machine-readable report here")
        p.set_defaults(func=fn)

    p = sub.add_parser("trace", help="pivotal elements and twisted module traces")
    p.add_argument("file")
    p.add_argument("--pivot", default="auto",
                   help='"auto" or comma-separated coordinates')
    p.add_argument("--json")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("twist", help="write the gauge twist of an algebra")
    p.add_argument("file")
    p.add_argument("-F", help="tensor file with the gauge transformation")
    p.add_argument("--seed", help="seed for a random gauge when -F is omitted")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_twist)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FileFormatError, AlgebraError, IntegralError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
