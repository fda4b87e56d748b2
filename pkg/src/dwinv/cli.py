"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 internal inconsistency,
4 size limit or budget exceeded.
"""

import argparse
import json
import sys
from fractions import Fraction
from itertools import combinations

from dwinv import density
from dwinv.appendix import APPENDIX_ROWS, check_table
from dwinv.dw_invariant import METHODS, hom_elements, phi_character
from dwinv.enumeration import (
    ENUMERATION_LIMIT,
    all_graphs,
    count_all_graphs,
    count_even_graphs,
    enumerate_even_graphs,
)
from dwinv.errors import (
    DimensionError,
    DomainError,
    InternalError,
    LimitError,
    NotEvenError,
    ValidationError,
)
from dwinv.graphs import circuit_edges, euler_decomposition, is_even_graph
from dwinv.link_invariant import LinkingMatrix, link_hirano_sum, link_invariant_fast
from dwinv.number_theory import primes_1_mod_4_up_to
from dwinv.qr_graph import PrimeSet, build_qr_graph

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_LIMIT = 0, 2, 3, 4


def _fmt_ratio(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cmd_invariant(args, out):
    s = PrimeSet(args.primes)
    names = list(METHODS) if args.method == "all" else [args.method]
    values = {}
    for name in names:
        if name == "hirano":
            values[name] = METHODS[name](s, workers=args.threads)
        else:
            values[name] = METHODS[name](s)
        print(f"{name:<8} Z_k = {values[name]}", file=out)
    if len(set(values.values())) > 1:
        print("DISAGREEMENT between methods", file=out)
        return EXIT_INTERNAL
    if len(names) > 1:
        print("agreement OK", file=out)
    return EXIT_OK


def cmd_graph(args, out):
    s = PrimeSet(args.primes)
    g = build_qr_graph(s)
    if args.format == "json":
        print(g.to_json(), file=out)
    elif args.format == "dot":
        out.write(g.to_dot(labels=list(s.primes), name="QR"))
    else:
        out.write(g.to_ascii(labels=list(s.primes)))
    return EXIT_OK


def _load_golden(path):
    with open(path) as fh:
        data = json.load(fh)
    return [(tuple(row["primes"]), Fraction(str(row["z"]))) for row in data]


def cmd_table(args, out):
    rows = _load_golden(args.golden) if args.golden else APPENDIX_ROWS
    results = check_table(rows)
    bad = []
    print(f"{'S':<22} {'expected':>8} {'fast':>5} {'hirano':>6} {'product':>7}  status", file=out)
    for primes, exp, values, ok in results:
        label = ", ".join(map(str, primes))
        print(
            f"{label:<22} {str(exp):>8} {str(values['fast']):>5} "
            f"{str(values['hirano']):>6} {str(values['product']):>7}  {'ok' if ok else 'MISMATCH'}",
            file=out,
        )
        if not ok:
            bad.append(label)
    if bad:
        print(f"{len(bad)} mismatched rows: " + "; ".join(bad), file=out)
        return EXIT_INTERNAL
    print(f"all {len(results)} rows match", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    pool = primes_1_mod_4_up_to(args.max_prime)
    failures = []
    n_subsets = 0
    for r in range(1, args.max_r + 1):
        homs = hom_elements(r)
        for subset in combinations(pool, r):
            n_subsets += 1
            s = PrimeSet(subset)
            vals = {name: fn(s) for name, fn in METHODS.items()}
            if len(set(vals.values())) != 1:
                failures.append(f"methods disagree on {subset}: {vals}")
            even = is_even_graph(build_qr_graph(s))
            total = sum(phi_character(s, rho) for rho in homs)
            if total != (len(homs) if even else 0):
                failures.append(f"orthogonality fails on {subset}: sum {total}")
    n_graphs = 0
    for r in range(1, min(args.max_r, 6) + 1):
        n_even = 0
        for g in all_graphs(r):
            n_graphs += 1
            even = is_even_graph(g)
            n_even += even
            try:
                circuits = euler_decomposition(g)
            except NotEvenError:
                circuits = None
            if (circuits is not None) != even:
                failures.append(f"Euler criterion fails on r={r} mask={g.mask}")
            elif circuits is not None:
                used = sorted(e for c in circuits for e in circuit_edges(c))
                if used != g.edges:
                    failures.append(f"circuits miss edges on r={r} mask={g.mask}")
        if n_even != count_even_graphs(r):
            failures.append(f"r={r}: {n_even} even graphs, expected {count_even_graphs(r)}")
    print(f"subsets checked: {n_subsets}", file=out)
    print(f"graphs checked: {n_graphs}", file=out)
    for f in failures:
        print(f"FAIL {f}", file=out)
    print("verify: " + ("FAIL" if failures else "PASS"), file=out)
    return EXIT_INTERNAL if failures else EXIT_OK


def cmd_density(args, out):
    if args.exhaustive:
        rep = density.exact_density_scan(args.r, args.x, workers=args.threads)
    else:
        rep = density.monte_carlo_density(args.r, args.x, args.samples, args.seed, workers=args.threads)
    text = density.reports_to_csv([rep])
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    out.write(text)
    return EXIT_OK


def cmd_es(args, out):
    print("x,pi41_x,E_s,ratio", file=out)
    for x, n, e, ratio in density.es_decay_table(args.r, args.s, args.x):
        print(f"{x},{n},{e},{float(ratio):.10g}", file=out)
    return EXIT_OK


def cmd_enumerate(args, out):
    total, even = count_all_graphs(args.r), count_even_graphs(args.r)
    print(f"{total} graphs, {even} even, ratio {_fmt_ratio(Fraction(even, total))}", file=out)
    if args.r <= ENUMERATION_LIMIT:
        found = sum(1 for _ in enumerate_even_graphs(args.r))
        print(f"exhaustive scan: {found} even graphs", file=out)
        if found != even:
            return EXIT_INTERNAL
    return EXIT_OK


def cmd_link(args, out):
    m = LinkingMatrix.read(args.matrix)
    fast = link_invariant_fast(m)
    brute = link_hirano_sum(m, workers=args.threads)
    print(f"Z_M = {fast}", file=out)
    if fast != brute:
        print(f"DISAGREEMENT: character sum gives {brute}", file=out)
        return EXIT_INTERNAL
    return EXIT_OK


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def build_parser():
    p = argparse.ArgumentParser(prog="dwinv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("invariant", help="compute Z_k for a set of primes = 1 mod 4")
    q.add_argument("primes", nargs="+", type=int)
    q.add_argument("--method", choices=["fast", "hirano", "product", "all"], default="fast")
    q.add_argument("--threads", type=_positive, default=1)
    q.set_defaults(func=cmd_invariant)

    q = sub.add_parser("graph", help="print the quadratic residue graph")
    q.add_argument("primes", nargs="+", type=int)
    q.add_argument("--format", choices=["ascii", "dot", "json"], default="ascii")
    q.set_defaults(func=cmd_graph)

    q = sub.add_parser("table", help="recompute the published Z_k examples")
    q.add_argument("--appendix", action="store_true", help="use the built-in table (default)")
    q.add_argument("--golden", help="JSON list of {primes, z} rows to check instead")
    q.set_defaults(func=cmd_table)

    q = sub.add_parser("verify", help="cross-check all methods over prime subsets")
    q.add_argument("--max-prime", type=_nonneg, default=150)
    q.add_argument("--max-r", type=_positive, default=5)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("density", help="density of even residue graphs")
    q.add_argument("--r", type=_positive, required=True)
    q.add_argument("--x", type=_nonneg, required=True)
    mode = q.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=_positive)
    q.add_argument("--seed", type=_nonneg, default=0)
    q.add_argument("--output", help="also write the CSV report here")
    q.add_argument("--threads", type=_positive, default=1)
    q.set_defaults(func=cmd_density)

    q = sub.add_parser("es", help="character sums E_s(x) and their decay")
    q.add_argument("--r", type=_positive, required=True)
    q.add_argument("--s", type=_positive, required=True)
    q.add_argument("--x", type=_nonneg, nargs="+", required=True)
    q.set_defaults(func=cmd_es)

    q = sub.add_parser("enumerate", help="count all and even graphs on r vertices")
    q.add_argument("--r", type=_positive, required=True)
    q.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("link", help="Z_M from a mod 2 linking-matrix file")
    q.add_argument("--matrix", required=True)
    q.add_argument("--threads", type=_positive, default=1)
    q.set_defaults(func=cmd_link)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ValidationError, DomainError, DimensionError, NotEvenError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except LimitError as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
