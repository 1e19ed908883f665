"""Command-line front end: one subcommand per library operation.

Matrices travel in a plain text format (order on the first line, then one
row per line over ``+ - 0``) read from a file argument or stdin.  Every
subcommand prints deterministically for fixed inputs; ``--format`` selects
text, json or csv where a table is involved.  Exit codes: 0 on success,
1 when a requested verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from multiprocessing import Pool

from . import acceptance, bounds, classify, constructions, core, nonexistence, spectra
from .errors import (
    AngleOutOfRangeError,
    ConstructionError,
    OrderTooLargeError,
    PreconditionFailsError,
    SeidelError,
)

USAGE_EXIT = 2
VERIFY_EXIT = 1

# argument errors: malformed input, out-of-domain parameters
_USAGE_ERRORS = (
    ValueError,  # includes ValidationError and FormatError
    OrderTooLargeError,
    PreconditionFailsError,
    AngleOutOfRangeError,
    KeyError,
)


def _read_matrix(path: str) -> core.SeidelMatrix:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return core.parse_seidel(text)


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _parse_ints(text: str) -> list:
    return [int(t) for t in text.split(",") if t.strip() != ""]


def _jprint(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _class_label(S: core.SeidelMatrix) -> str:
    """Stable one-line identifier: ambient graph of the matrix, graph6."""
    return core.graph6_encode(core.ambient_graph(S))


# past this order the exact charpoly takes minutes; the summary line is a
# convenience, so skip it rather than stall (the spectrum subcommand still
# computes on demand at any size)
SPECTRUM_SUMMARY_LIMIT = 64


def _spectrum_line(S: core.SeidelMatrix) -> str:
    if S.n > SPECTRUM_SUMMARY_LIMIT:
        return f"skipped (order {S.n} > {SPECTRUM_SUMMARY_LIMIT})"
    spec = spectra.spectrum_exact(S)
    if spec is None:
        p = core.charpoly_exact(S).as_list()
        return "irrational; charpoly " + " ".join(map(str, p))
    return spectra.format_spectrum(spec)


def _pmap(fn, items, jobs):
    if jobs is not None and jobs > 1 and len(items) > 1:
        with Pool(jobs) as pool:
            return pool.map(fn, items)
    return [fn(x) for x in items]


# ---------------------------------------------------------------------------
# matrix-in subcommands


def _cmd_validate(args) -> int:
    S = _read_matrix(args.file)
    print(f"valid Seidel matrix of order {S.n}")
    return 0


def _cmd_switch(args) -> int:
    S = _read_matrix(args.file)
    subset = frozenset(_parse_ints(args.subset)) if args.subset else frozenset()
    perm = tuple(_parse_ints(args.perm)) if args.perm else None
    out = core.switch(S, core.SwitchingOperation(subset=subset, perm=perm))
    sys.stdout.write(core.format_seidel(out))
    return 0


def _cmd_det(args) -> int:
    S = _read_matrix(args.file)
    value = core.det_exact(S.rows)
    if args.format == "json":
        _jprint({"order": S.n, "det": value, "mod4": value % 4})
    else:
        print(value)
    return 0


def _cmd_perm(args) -> int:
    S = _read_matrix(args.file)
    value = core.permanent_exact(S.rows, limit=args.limit_order or 20)
    if args.format == "json":
        _jprint({"order": S.n, "permanent": value, "mod8": value % 8})
    else:
        print(value)
    return 0


def _cmd_charpoly(args) -> int:
    S = _read_matrix(args.file)
    coeffs = core.charpoly_exact(S).as_list()
    if args.format == "json":
        _jprint({"order": S.n, "coefficients_low_to_high": coeffs})
    else:
        print(" ".join(map(str, coeffs)))
    return 0


def _cmd_spectrum(args) -> int:
    S = _read_matrix(args.file)
    print(_spectrum_line(S))
    return 0


def _cmd_certify(args) -> int:
    S = _read_matrix(args.file)
    claimed = spectra.parse_spectrum(args.spectrum)
    spectra.certify_spectrum(S, claimed)
    print(f"certified {spectra.format_spectrum(claimed)}")
    return 0


def _cmd_invariant(args) -> int:
    S = _read_matrix(args.file)
    limit = args.limit_order or classify.CLASS_ORDER_LIMIT
    fp = classify.class_fingerprint(S, limit=limit)
    kind = "chi" if S.n <= 6 else f"phi{S.n}"
    if args.format == "json":
        _jprint({"order": S.n, "invariant": repr(fp.invariant), "kind": kind})
    else:
        print(f"{kind}: {fp.invariant}")
    return 0


# ---------------------------------------------------------------------------
# enumeration


def _cmd_enumerate(args) -> int:
    limit = args.limit_order or classify.CENSUS_ORDER_LIMIT
    classes = classify.enumerate_switching_classes(args.n, limit=limit)
    if args.format == "json":
        _jprint({
            "order": args.n,
            "count": len(classes),
            "classes": [list(fp.canonical_matrix.neg_masks()) for fp in classes],
        })
        return 0
    if args.format == "csv":
        print("index,graph6")
        for i, fp in enumerate(classes):
            print(f"{i},{_class_label(fp.canonical_matrix)}")
        return 0
    for i, fp in enumerate(classes):
        print(f"{i}\t{_class_label(fp.canonical_matrix)}")
    print(f"{len(classes)} classes of order {args.n}")
    return 0


def _cmd_census(args) -> int:
    limit = args.limit_order or classify.CENSUS_ORDER_LIMIT
    row = classify.census(args.n, limit=limit)
    if args.format == "json":
        _jprint({
            "n": row.n,
            "total": row.total,
            "gamma_nonzero": row.gamma_nonzero,
            "self_complementary": row.self_complementary,
            "lambda_min_minus_five": row.lambda_min_minus_five,
            "three_eigenvalues": row.three_eigenvalues,
        })
    elif args.format == "csv":
        print("n,total,gamma,self_compl,lambda_min_5,three_ev")
        print(f"{row.n},{row.total},{row.gamma_nonzero},{row.self_complementary},"
              f"{row.lambda_min_minus_five},{row.three_eigenvalues}")
    else:
        print(f"{row.total} total, {row.gamma_nonzero} gamma, "
              f"{row.self_complementary} self-compl, "
              f"{row.lambda_min_minus_five} lambda-min-5")
    return 0


# ---------------------------------------------------------------------------
# constructions


def _print_line_system(ls: constructions.LineSystem, fmt: str) -> None:
    if fmt == "json":
        print(ls.to_json())
        return
    # no spectrum here: large systems have irrational Seidel spectra and a
    # degree-n charpoly is expensive; pipe the json vectors if needed
    print(f"{ls.count} lines in R^{ls.dimension_ambient} at angle "
          f"1/{ls.angle_inv} (common squared length {ls.scale})")


def _print_matrix_result(S: core.SeidelMatrix, fmt: str) -> None:
    if fmt == "json":
        _jprint({
            "order": S.n,
            "neg_masks": list(S.neg_masks()),
            "spectrum": _spectrum_line(S),
        })
        return
    # matrix alone on stdout so the output pipes back into other subcommands
    sys.stdout.write(core.format_seidel(S))
    print("spectrum " + _spectrum_line(S), file=sys.stderr)


def _construct_blowup(args) -> core.SeidelMatrix:
    base = (core.SeidelMatrix.all_plus(args.a) if args.file is None
            else _read_matrix(args.file))
    return constructions.tensor_blowup(base, args.b)


_CONSTRUCTIONS = {
    "hadamard16": lambda args: constructions.hadamard16_system(),
    "paley": lambda args: constructions.paley(args.q),
    "conference": lambda args: constructions.conference_two_graph(args.q),
    "conference-deletion": lambda args: constructions.delete_switchable_clique(
        constructions.conference_two_graph(args.q), args.clique),
    "netto": lambda args: constructions.netto_sts19_system(),
    "witt": lambda args: constructions.witt_octad_system(),
    "two-graph-36": lambda args: constructions.regular_two_graph_36(),
    "deletion-28": lambda args: constructions.two_graph_36_deletion_system(),
    "mub": lambda args: constructions.unbiased_basis_lines(args.i, args.variant, args.j),
    "dynkin": lambda args: constructions.dynkin_triangles(args.d),
    "blowup": _construct_blowup,
    "maximal12": lambda args: constructions.twelve_line_maximal_classes(),
}


def _cmd_construct(args) -> int:
    result = _CONSTRUCTIONS[args.name](args)
    if isinstance(result, constructions.LineSystem):
        _print_line_system(result, args.format)
    elif isinstance(result, core.SeidelMatrix):
        _print_matrix_result(result, args.format)
    elif args.format == "json":
        _jprint([
            {"order": S.n, "neg_masks": list(S.neg_masks()),
             "spectrum": _spectrum_line(S)}
            for S in result
        ])
    else:
        for i, S in enumerate(result):
            print(f"# class {i}")
            _print_matrix_result(S, args.format)
    return 0


def _cmd_extend(args) -> int:
    S = _read_matrix(args.file)
    grown = constructions.extend_system(
        S, args.lam0, count=args.count, min_multiplicity=args.min_multiplicity)
    if args.format == "json":
        _jprint({
            "base_order": S.n,
            "count": len(grown),
            "classes": [
                {"neg_masks": list(T.neg_masks()), "spectrum": _spectrum_line(T)}
                for T in grown
            ],
        })
        return 0
    for T in grown:
        print(f"{_class_label(T)}\t{_spectrum_line(T)}")
    print(f"{len(grown)} classes of order {S.n + args.count} "
          f"with smallest eigenvalue {args.lam0}")
    return 0


# ---------------------------------------------------------------------------
# feasibility, nonexistence, bounds


def _cmd_feasible(args) -> int:
    dims = args.d
    existing = {d: bounds.best_known_lower(d) for d in dims}
    for override in args.at_least or ():
        key, _, val = override.partition("=")
        existing[int(key)] = int(val)
    rows = []
    for chunk in _pmap(
        _feasible_one, [(d, args.lambda0, existing) for d in dims], args.jobs
    ):
        rows.extend(chunk)
    rows.sort(key=lambda f: (f.d, f.n, f.mu, f.nu))
    if args.format == "json":
        _jprint([
            {"n": f.n, "d": f.d, "spectrum": spectra.format_spectrum(f.spectrum())}
            for f in rows
        ])
        return 0
    if args.format == "csv":
        print("n,d,lambda0,mu,nu,m,spectrum")
        for f in rows:
            print(f"{f.n},{f.d},{f.lam0},{f.mu},{f.nu},{f.m},"
                  f"{spectra.format_spectrum(f.spectrum())}")
        return 0
    for f in rows:
        print(f"n={f.n} d={f.d} {spectra.format_spectrum(f.spectrum())}")
    print(f"{len(rows)} feasible spectra")
    return 0


def _feasible_one(job):
    d, lam0, existing = job
    return spectra.enumerate_feasible_spectra([d], lam0, existing)


def _cmd_nonexist(args) -> int:
    if args.canned:
        proofs = nonexistence.known_nonexistence_proofs()
        if args.format == "json":
            _jprint([json.loads(p.to_json()) for p in proofs])
        else:
            for p in proofs:
                print(f"{p.conclusion}: {p.claim}")
                for step in p.steps:
                    print(f"  - {step.rule}: {step.statement}")
        return 0
    if args.spectrum is None:
        print("nonexist: a spectrum argument or --canned is required",
              file=sys.stderr)
        return USAGE_EXIT
    spec = spectra.parse_spectrum(args.spectrum)
    cert = nonexistence.three_eigenvalue_certificate(spec)
    assignment = cert.killing_assignment()
    verdict = "nonexistent" if assignment is not None else "inconclusive"
    if args.format == "json":
        out = json.loads(cert.to_json())
        out["verdict"] = verdict
        _jprint(out)
    else:
        print(f"verdict: {verdict}")
        if assignment is not None:
            print(f"  {assignment.describe()}")
    return 0 if assignment is not None else VERIFY_EXIT


def _cmd_bounds(args) -> int:
    if args.d is not None:
        lines = [
            f"absolute_bound({args.d}) = {bounds.absolute_bound(args.d)}"
            + (" (equality possible)" if bounds.absolute_equality_possible(args.d)
               else " (equality impossible)")
        ]
        payload = {"d": args.d, "absolute": bounds.absolute_bound(args.d),
                   "absolute_equality_possible":
                       bounds.absolute_equality_possible(args.d)}
        if args.alpha is not None:
            a = _parse_fraction(args.alpha)
            info = bounds.relative_bound_info(args.d, a)
            lines.append(
                f"relative_bound({args.d}, {a}) = {info.value} "
                f"(exact {info.exact}; equality iff {info.equality_condition})")
            payload["relative"] = info.value
            payload["relative_exact"] = str(info.exact)
            if args.n is not None:
                verdict = bounds.neumann_filter(args.n, args.d, a)
                lines.append(
                    f"neumann_filter(n={args.n}) = {'pass' if verdict else 'fail'}")
                payload["neumann_pass"] = verdict
        if args.format == "json":
            _jprint(payload)
        else:
            print("\n".join(lines))
        return 0
    rows = bounds.max_lines_table(args.lo, args.hi)
    _emit_table(rows, args.format)
    return 0


def _emit_table(rows, fmt: str) -> None:
    if fmt == "json":
        _jprint([
            {"d": r.d, "lower": r.lower, "upper": str(r.upper),
             "exact": r.exact, "angles": list(r.angles),
             "lower_source": r.lower_source, "upper_source": r.upper_source}
            for r in rows
        ])
    elif fmt == "csv":
        sys.stdout.write(bounds.table_csv(rows))
    else:
        sys.stdout.write(bounds.table_text(rows))


def _cmd_n5table(args) -> int:
    ds = list(range(args.lo, args.hi + 1))
    rows = _pmap(_n5_one, [(d, args.V) for d in ds], args.jobs)
    _emit_table(rows, args.format)
    return 0


def _n5_one(job):
    d, V = job
    return bounds.n5_bounds(d, V)


def _cmd_repro(args) -> int:
    if args.seed is not None:
        acceptance.set_seed(args.seed)
    numbers = args.criterion or [num for num, _, _ in acceptance.CRITERIA]
    results = [acceptance.run_one(k, long=args.long) for k in numbers]
    for r in results:
        print(r.line(), flush=True)
    failures = [r for r in results if not r.ok]
    print(f"{len(results) - len(failures)}/{len(results)} criteria passed")
    return VERIFY_EXIT if failures else 0


# ---------------------------------------------------------------------------
# parser


def _add_matrix_arg(p) -> None:
    p.add_argument("file", nargs="?", default="-",
                   help="matrix file, or - for stdin (default)")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="seidel",
        description="exact Seidel matrix and equiangular line calculations")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=fn)
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default="text")
        p.add_argument("--jobs", type=int, default=None,
                       help="worker processes for parallel table assembly")
        p.add_argument("--limit-order", type=int, default=None,
                       help="raise the default order cap for heavy operations")
        return p

    _add_matrix_arg(add("validate", _cmd_validate, "check a Seidel matrix"))

    p = add("switch", _cmd_switch, "apply switching and relabeling")
    _add_matrix_arg(p)
    p.add_argument("--subset", default="", help="comma-separated vertex list")
    p.add_argument("--perm", default="", help="comma-separated image list")

    _add_matrix_arg(add("det", _cmd_det, "exact determinant"))
    _add_matrix_arg(add("perm", _cmd_perm, "exact permanent"))
    _add_matrix_arg(add("charpoly", _cmd_charpoly,
                        "integer characteristic polynomial"))
    _add_matrix_arg(add("spectrum", _cmd_spectrum, "exact eigenvalues"))

    p = add("certify", _cmd_certify, "verify a claimed spectrum exactly")
    _add_matrix_arg(p)
    p.add_argument("--spectrum", required=True,
                   help='claimed spectrum, e.g. "{[-5]^6,[3]^10}"')

    _add_matrix_arg(add("invariant", _cmd_invariant,
                        "order-appropriate complete switching invariant"))

    p = add("enumerate", _cmd_enumerate, "all switching classes of an order")
    p.add_argument("n", type=int)

    p = add("census", _cmd_census, "class counts of an order")
    p.add_argument("n", type=int)

    p = add("construct", _cmd_construct, "build a named system")
    p.add_argument("name", choices=sorted(_CONSTRUCTIONS))
    p.add_argument("--q", type=int, default=25, help="prime power order")
    p.add_argument("--clique", type=int, default=6,
                   help="clique size for deletions")
    p.add_argument("--i", type=int, default=1, help="unbiased-basis exponent")
    p.add_argument("--variant", choices=("a", "b", "c"), default="a")
    p.add_argument("--j", type=int, default=None, help="basis count, variant c")
    p.add_argument("--d", type=int, default=6, help="dimension for dynkin")
    p.add_argument("--a", type=int, default=3, help="blowup base order")
    p.add_argument("--b", type=int, default=2, help="blowup factor")
    p.add_argument("--file", default=None,
                   help="blowup base matrix (overrides --a)")

    p = add("extend", _cmd_extend, "one-line extension search")
    _add_matrix_arg(p)
    p.add_argument("--lam0", type=int, required=True,
                   help="smallest eigenvalue to preserve")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--min-multiplicity", type=int, default=None)

    p = add("feasible", _cmd_feasible, "three-eigenvalue candidate spectra")
    p.add_argument("--d", type=int, action="append", required=True,
                   help="ambient dimension (repeatable)")
    p.add_argument("--lambda0", type=int, default=-5)
    p.add_argument("--at-least", action="append", metavar="D=N",
                   help="override the known line count for a dimension")

    p = add("nonexist", _cmd_nonexist, "refute a spectrum or replay proofs")
    p.add_argument("spectrum", nargs="?", default=None)
    p.add_argument("--canned", action="store_true",
                   help="replay the shipped nonexistence proofs")

    p = add("bounds", _cmd_bounds, "bound calculators and the general table")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--alpha", default=None, help="angle as a fraction, e.g. 1/5")
    p.add_argument("--n", type=int, default=None,
                   help="line count for the parity filter")
    p.add_argument("--lo", type=int, default=2)
    p.add_argument("--hi", type=int, default=41)

    p = add("n5table", _cmd_n5table, "angle-1/5 bound table")
    p.add_argument("--lo", type=int, default=2)
    p.add_argument("--hi", type=int, default=22)
    p.add_argument("--V", type=int, default=None,
                   help="commit to a Dynkin threshold value")

    p = add("repro", _cmd_repro, "run the acceptance checks")
    p.add_argument("--long", action="store_true",
                   help="include the extended order-10 and search runs")
    p.add_argument("--criterion", type=int, action="append",
                   help="run only this criterion number (repeatable)")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for the randomized identity checks")

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _USAGE_ERRORS as exc:
        print(f"seidel {args.command}: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except SeidelError as exc:
        print(f"seidel {args.command}: {exc}", file=sys.stderr)
        return VERIFY_EXIT
    except BrokenPipeError:
        # downstream closed early (e.g. | head); silence the shutdown flush
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
