"""Command line front end.

Exit codes: 0 when every case passes, 1 when some case fails, 2 on a usage
or input error, 3 when a resource budget is exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .config import BUDGET_ENV_VAR, DEFAULT_SEED, budget_from_env
from .errors import LocalModelsError, ResourceLimit
from .partitions import Partition

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_partition(text: str) -> Partition:
    """``[2,1]``, ``2,1`` or ``2 1``; ``[]`` is the empty partition."""
    t = text.strip()
    try:
        if t.startswith("["):
            parts = json.loads(t)
        else:
            parts = [int(x) for x in t.replace(",", " ").split()]
        return Partition(parts)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r} ({exc})")


def parse_int_list(text: str) -> list[int]:
    try:
        t = text.strip()
        return list(json.loads(t)) if t.startswith("[") else [int(x) for x in t.replace(",", " ").split()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def parse_field(text: str):
    from .polyring import Field
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def parse_eigenvalues(text: str):
    """``value:multiplicity`` pairs, e.g. ``0:2,1:1`` or ``1/2:1,3:2``."""
    pairs = []
    for item in text.split(","):
        value, _, mult = item.strip().partition(":")
        try:
            pairs.append((Fraction(value), int(mult or 1)))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad eigenvalue entry {item!r}: {exc}")
    return pairs


def _emit(args, data, text_lines):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _emit_report(args, report) -> int:
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        for line in report.summary_lines():
            print(line)
    return EXIT_OK if report.passed else EXIT_FAILED


def _single_case_report(args, campaign, case):
    from .report import VerificationReport
    return VerificationReport(campaign, [case], dict(args.budget_obj.as_dict(), seed=args.seed))


# subcommands -------------------------------------------------------------------

def cmd_strata(args):
    from .partitions import enumerate_strata
    st = enumerate_strata(args.r, args.e, args.d)
    members = [list(s) for s in st]
    data = {"r": args.r, "e": args.e, "d": args.d, "strata": members,
            "maximum": list(st.maximum()), "minimum": list(st.minimum())}
    _emit(args, data, [json.dumps(members, separators=(",", ":"))])
    return EXIT_OK


def cmd_dims(args):
    from .partitions import affine_orbit_dim, generic_fiber_dim, r_min, s_max, special_fiber_dim
    r, e, d = args.r, args.e, args.d
    special = special_fiber_dim(r, e, d)
    rmin = r_min(r, e)
    generic = generic_fiber_dim(rmin, d)
    top = s_max(r, e)
    orbit = affine_orbit_dim(top, d)
    data = {
        "r": r, "e": e, "d": d,
        "special_fiber": special,
        "generic_fiber": generic,
        "r_min": list(rmin),
        "s_max": list(top),
        "s_max_orbit": orbit,
        "equal": special == generic == orbit,
    }
    lines = [
        f"special fiber  {special}",
        f"generic fiber  {generic}  (r_min={list(rmin)})",
        f"orbit of s_max {orbit}  (s_max={list(top)})",
        "dimensions agree" if data["equal"] else "dimensions differ",
    ]
    _emit(args, data, lines)
    return EXIT_OK if data["equal"] else EXIT_FAILED


def cmd_kostka(args):
    from .partitions import kostka_number
    value = kostka_number(args.shape, args.content)
    _emit(args, {"shape": list(args.shape), "content": list(args.content), "kostka": value}, [str(value)])
    return EXIT_OK


def cmd_kostka_foulkes(args):
    from .partitions import format_q_polynomial, kostka_foulkes
    poly = kostka_foulkes(args.shape, args.content)
    data = {"shape": list(args.shape), "content": list(args.content),
            "coefficients": {str(k): v for k, v in poly.items()}, "text": format_q_polynomial(poly)}
    _emit(args, data, [data["text"]])
    return EXIT_OK


def _build_ideal(args):
    from . import matrix_schemes as ms
    F = args.field
    kind = args.kind
    if kind == "char-poly":
        return ms.char_poly_ideal(args.r, F)
    if kind == "s-block":
        return ms.s_block_ideal(args.r, F)
    if kind == "naive":
        return ms.naive_special_ideal(args.r, _need(args, "e"), F)
    if kind == "dcp-special":
        return ms.dcp_special_ideal(args.r, _need(args, "rvec"), F)
    if kind == "dcp-generic":
        eig = ms.EigenvalueData(_need(args, "eigenvalues"))
        return ms.dcp_generic_ideal(eig, F)
    if kind == "e2":
        return ms.e2_ideal(_need(args, "r1"), _need(args, "r2"), F)
    if kind == "coinvariant":
        return ms.diagonal_coinvariant_ideal(args.r, _need(args, "e"), F)
    raise UsageError(f"unknown ideal kind {kind}")


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for --kind {args.kind}")
    return value


def cmd_emit_ideal(args):
    from .polyring import ideal_to_dict
    if args.kind == "dcp-special" and args.r is None and args.rvec is not None:
        args.r = args.rvec.size
    if args.kind not in ("dcp-generic", "e2") and args.r is None:
        raise UsageError(f"--r is required for --kind {args.kind}")
    ideal = _build_ideal(args)
    if args.order != ideal.ring.order:
        from .polyring import Ideal, PolyRing
        ring = PolyRing(ideal.ring.variables, ideal.ring.field, args.order)
        ideal = Ideal(ring, [g.change_ring(ring) for g in ideal.generators], ideal.tags)
    data = ideal_to_dict(ideal, ideal.tags)
    data["kind"] = args.kind
    if args.groebner:
        data["groebner_basis"] = [str(g) for g in ideal.groebner_basis(budget=args.budget_obj)]
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(f"# {args.kind} over {data['field']} in {', '.join(data['variables'])}")
        for tag, g in zip(data["provenance"], data["generators"]):
            print(f"[{tag}] {g}")
        for g in data.get("groebner_basis", []):
            print(f"GB: {g}")
    return EXIT_OK


def cmd_verify_coinvariant(args):
    from .campaigns import verify_coinvariant
    case = verify_coinvariant(args.r, args.e, args.field, args.budget_obj)
    return _emit_report(args, _single_case_report(args, "verify-coinvariant", case))


def cmd_verify_dcp_lemma(args):
    from .campaigns import verify_dcp_lemma
    case = verify_dcp_lemma(args.r, args.field, args.budget_obj)
    return _emit_report(args, _single_case_report(args, "verify-dcp-lemma", case))


def cmd_verify_kostant(args):
    from .campaigns import verify_kostant
    case = verify_kostant(args.r, args.e, args.field, args.budget_obj)
    return _emit_report(args, _single_case_report(args, "verify-kostant", case))


def cmd_verify_tensor_kostka(args):
    from .multiplicities import verify_tensor_vs_kostka
    report = verify_tensor_vs_kostka(args.d, args.rvec)
    report.budgets = dict(args.budget_obj.as_dict(), seed=args.seed)
    return _emit_report(args, report)


def cmd_springer_count(args):
    from . import linalg
    from .orbits import PartialFlagSpec, jordan_matrix, springer_fiber_count
    from .polyring import GF
    import random
    F = GF(args.p)
    A = jordan_matrix(args.s, F)
    if args.conjugate:
        g = linalg.random_invertible(A.size, F, random.Random(args.seed))
        A = A.conjugate_by(g)
    start = time.perf_counter()
    result = springer_fiber_count(A, PartialFlagSpec(args.rvec), args.budget_obj)
    elapsed = (time.perf_counter() - start) * 1000
    data = {"count": result.count, "flags_enumerated": result.flags_enumerated}
    if not args.no_timings:
        data["elapsed_ms"] = round(elapsed, 3)
    _emit(args, data, [f"count {result.count}", f"flags enumerated {result.flags_enumerated}"])
    return EXIT_OK


def cmd_lattice_stratify(args):
    from .lattice_model import PiModule, enumerate_points, enumerate_points_filter, stratum_of
    from .polyring import GF
    from collections import Counter
    W = PiModule(args.exponents, GF(args.p))
    enum = enumerate_points if args.method == "closure" else enumerate_points_filter
    points = enum(W, args.r, args.budget_obj)
    counts = dict(sorted(Counter(stratum_of(P) for P in points).items(), reverse=True))
    data = {"total": len(points), "strata": [{"partition": list(s), "count": c} for s, c in counts.items()]}
    lines = [f"total {len(points)}"] + [f"{list(s)}: {c}" for s, c in counts.items()]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_multiplicities(args):
    from .multiplicities import tensor_minuscule_decompose
    table = tensor_minuscule_decompose(args.d, args.rvec)
    data = table.to_dict()
    _emit(args, data, [f"{list(lam)}: {m}" for lam, m in table.sorted_items()])
    return EXIT_OK


def cmd_verify_all(args):
    from .campaigns import run_campaign
    report = run_campaign(quick=args.quick, budget=args.budget_obj, seed=args.seed,
                          jobs=args.jobs, timings=args.timings)
    if args.report_dir:
        from .figures import write_report_dir
        written = write_report_dir(report, args.report_dir)
        if not args.json:
            for path in written:
                print(f"wrote {path}")
    return _emit_report(args, report)


# parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON on stdout")
    common.add_argument("--budget", default=None,
                        help=f"override budgets, e.g. max_pairs=5000 (defaults also read from {BUDGET_ENV_VAR})")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled checks")

    parser = _Parser(prog="localmodels", description="Combinatorics and ideals of local models for GL_d.")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("strata", cmd_strata, "partitions of r with at most d parts, each at most e")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add("dims", cmd_dims, "special and generic fibre dimensions")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    for name, func in (("kostka", cmd_kostka), ("kostka-foulkes", cmd_kostka_foulkes)):
        p = add(name, func, f"{name.replace('-', ' ')} number/polynomial")
        p.add_argument("--shape", type=parse_partition, required=True)
        p.add_argument("--content", type=parse_partition, required=True)

    p = add("emit-ideal", cmd_emit_ideal, "print a defining ideal with generator provenance")
    p.add_argument("--kind", required=True,
                   choices=["char-poly", "s-block", "naive", "dcp-special", "dcp-generic", "e2", "coinvariant"])
    p.add_argument("--r", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--rvec", type=parse_partition)
    p.add_argument("--r1", type=int)
    p.add_argument("--r2", type=int)
    p.add_argument("--eigenvalues", type=parse_eigenvalues, help="value:multiplicity pairs, e.g. 0:2,1:1")
    p.add_argument("--field", type=parse_field, default="q")
    p.add_argument("--order", choices=["lex", "grlex", "grevlex"], default="grevlex")
    p.add_argument("--groebner", action="store_true", help="also print the reduced Groebner basis")

    p = add("verify-coinvariant", cmd_verify_coinvariant, "staircase count against the closed formula")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--field", type=parse_field, default="q")

    p = add("verify-dcp-lemma", cmd_verify_dcp_lemma, "S-block ideal equals the char-poly ideal")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--field", type=parse_field, default="q")

    p = add("verify-kostant", cmd_verify_kostant, "entries of A^e lie in the char-poly ideal")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--e", type=int, default=None)
    p.add_argument("--field", type=parse_field, default="q")

    p = add("verify-tensor-kostka", cmd_verify_tensor_kostka, "exterior-power tensor table against Kostka numbers")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rvec", type=parse_partition, required=True)

    p = add("springer-count", cmd_springer_count, "count compatible partial flags over GF(p)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", type=parse_partition, required=True, help="Jordan type of the matrix")
    p.add_argument("--rvec", type=parse_partition, required=True, help="flag type")
    p.add_argument("--conjugate", action="store_true", help="conjugate by a seeded random invertible matrix")
    p.add_argument("--no-timings", action="store_true", help="omit elapsed_ms")

    p = add("lattice-stratify", cmd_lattice_stratify, "Pi-stable subspaces by Jordan type")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--exponents", type=parse_int_list, required=True, help="summand exponents, e.g. 3,1")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--method", choices=["closure", "filter"], default="closure")

    p = add("multiplicities", cmd_multiplicities, "decompose a tensor product of exterior powers")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rvec", type=parse_partition, required=True)

    p = add("verify-all", cmd_verify_all, "run every verification campaign")
    p.add_argument("--quick", action="store_true", help="smaller parameter ranges")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--timings", action="store_true", help="record elapsed_ms per case (breaks byte-identical output)")
    p.add_argument("--report-dir", default=None, help="also write report.json, cases.csv and PNG figures here")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        args.budget_obj = budget_from_env().override(args.budget)
    except ValueError as exc:
        print(f"bad budget: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, LocalModelsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
