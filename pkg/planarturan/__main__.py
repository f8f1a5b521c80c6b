# -*- coding: utf-8 -*-
"""
planarturan command-line utilities
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .certificate import CertificateError, Provenance, certify
from .constructions import UnsupportedRangeError, best_witness, bounds_for, check_range
from .graph import UsageError
from .lemmas import LEMMAS, run_suite
from .parsers import ParseError, iter_graph6, parse_certificate
from .patterns import PatternSpec, find_w
from .planarity import is_planar
from .search import ENGINES, SearchBudget, SearchError, default_threads, enumerate_graphs, exact_ex
from .search.generation import free_filter, planar_filter, planar_free_filter
from .writers import certificate_json, graph6_encode, write_certificate, write_graph6

log = logging.getLogger("planarturan")

EXIT_FOUND = 2
EXIT_FAILED = 1
EXIT_USAGE = 64
EXIT_DATA = 65

WITNESS_HELP = "Construct a dense planar W_{h,k}-free graph and certify it."

WITNESS_EXAMPLES = """
Print the icosahedral witness on 24 vertices, and write its certificate:
> planarturan witness --h 1 --k 5 --n 24 --out icosa24.json
"""

CHECK_HELP = "Test graphs for planarity and W_{h,k}-freeness, and compare their size to the known bounds."

CHECK_EXAMPLES = """
Check every graph of a graph6 file, one per line:
> planarturan check --h 1 --k 2 --in graphs.g6

Re-verify a certificate:
> planarturan check --h 1 --k 5 --in icosa24.json

Exit status is 2 if some graph contains W_{h,k}.
"""

EXACT_HELP = "Compute the planar Turan number of W_{h,k} exactly, by exhaustive search (n <= 10)."

EXACT_EXAMPLES = """
> planarturan ex-exact --h 1 --k 2 --n 5
> planarturan ex-exact --h 1 --k 4 --n 7 --threads 4 --engine descend

The number of worker processes defaults to the PLANAR_TURAN_THREADS environment variable.
"""

BOUNDS_HELP = "Display the known lower and upper bounds, as exact rationals and floors."

BOUNDS_EXAMPLES = """
> planarturan bounds --h 1 --k 5 --n 12
"""

LEMMAS_HELP = "Property-test the structural lemmas on random planar W_{h,k}-free graphs."

LEMMAS_EXAMPLES = f"""
> planarturan verify-lemmas --h 1 --k 4 --samples 1000 --seed 0
> planarturan verify-lemmas --h 2 --k 5 --samples 500 --seed 1 --lemma w25-claims

Lemma identifiers: {", ".join(LEMMAS)}.
Exit status is 1 if a lemma is violated, or if some lemma never had its hypotheses met.
"""

GEN_HELP = "Stream one graph6 line per isomorphism class of graphs on n vertices (n <= 10)."

GEN_EXAMPLES = """
> planarturan gen --n 5
> planarturan gen --n 7 --planar --free 1,2
"""


class Parser(argparse.ArgumentParser):
    """Argument parser exiting with a usage status on bad flags."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def pattern_pair(text: str):
    try:
        h, k = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected H,K, got {text!r}")
    return h, k


parser = Parser(prog="planarturan", description=f"planarturan {__version__} command-line utilities")
parser.add_argument(
    "-v",
    "--verbose",
    action="count",
    default=0,
    help="Log progress; repeat for debugging output.",
)
parser.add_argument("--version", action="version", version=f"planarturan {__version__}")

subparsers = parser.add_subparsers(title="command", dest="command", parser_class=Parser)


def add_pattern(subparser, n=True):
    subparser.add_argument("--h", type=int, required=True, help="Leaves at the first end of the path.")
    subparser.add_argument("--k", type=int, required=True, help="Leaves at the other end of the path.")
    if n:
        subparser.add_argument("--n", type=int, required=True, help="Number of vertices.")


def add_subparser(name, help, examples):
    return subparsers.add_parser(
        name,
        help=help,
        description=help,
        epilog=examples,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )


witness_parser = add_subparser("witness", WITNESS_HELP, WITNESS_EXAMPLES)
add_pattern(witness_parser)
witness_parser.add_argument("--out", type=Path, help="Write the certificate to this file.")

check_parser = add_subparser("check", CHECK_HELP, CHECK_EXAMPLES)
add_pattern(check_parser, n=False)
check_parser.add_argument(
    "--in",
    dest="input",
    required=True,
    help="graph6 file (one graph per line), certificate JSON file, or '-' for standard input.",
)

exact_parser = add_subparser("ex-exact", EXACT_HELP, EXACT_EXAMPLES)
add_pattern(exact_parser)
exact_parser.add_argument("--threads", type=int, default=None, help="Number of worker processes.")
exact_parser.add_argument("--engine", choices=ENGINES, default="augment", help="Search engine.")
exact_parser.add_argument("--max-nodes", type=int, default=None, help="Node budget of the search.")
exact_parser.add_argument("--max-seconds", type=float, default=None, help="Time budget of the search.")
exact_parser.add_argument("--out", type=Path, help="Write the certificate to this file.")

bounds_parser = add_subparser("bounds", BOUNDS_HELP, BOUNDS_EXAMPLES)
add_pattern(bounds_parser)
bounds_parser.add_argument("--json", action="store_true", help="Print the bounds as JSON.")

lemmas_parser = add_subparser("verify-lemmas", LEMMAS_HELP, LEMMAS_EXAMPLES)
add_pattern(lemmas_parser, n=False)
lemmas_parser.add_argument("--samples", type=int, default=1000, help="Number of random instances.")
lemmas_parser.add_argument(
    "--seed", type=int, default=0, help="Random seed; equal seeds give equal reports."
)
lemmas_parser.add_argument(
    "--lemma",
    action="append",
    choices=list(LEMMAS),
    help="Lemma to check; may be repeated. All applicable lemmas by default.",
)
lemmas_parser.add_argument(
    "--min-hits", type=int, default=1, help="Instances meeting the hypotheses required per lemma."
)
lemmas_parser.add_argument("--json", action="store_true", help="Print the reports as JSON.")

gen_parser = add_subparser("gen", GEN_HELP, GEN_EXAMPLES)
gen_parser.add_argument("--n", type=int, required=True, help="Number of vertices.")
gen_parser.add_argument("--planar", action="store_true", help="Only planar graphs.")
gen_parser.add_argument(
    "--free", type=pattern_pair, metavar="H,K", help="Only graphs without W_{H,K}."
)


def read_input(name: str):
    """Graphs and certificates from a graph6 or certificate file."""
    text = sys.stdin.read() if name == "-" else Path(name).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        certificate = parse_certificate(text)
        return [(certificate.graph, certificate)]
    return [(g, None) for g in iter_graph6(text.splitlines())]


def run_witness(args) -> int:
    witness, certificate = best_witness(args.h, args.k, args.n)
    print(graph6_encode(witness))
    log.info("%s", certificate)
    if args.out is not None:
        write_certificate(certificate, args.out)
    return 0


def run_check(args) -> int:
    p = PatternSpec(args.h, args.k)
    status = 0
    for index, (g, certificate) in enumerate(read_input(args.input), start=1):
        if certificate is not None and certificate.pattern.normalized() != p.normalized():
            raise CertificateError(
                f"Certificate is for W_{{{certificate.h},{certificate.k}}}, not {p}"
            )
        embedding = find_w(g, p)
        planar = is_planar(g)
        line = f"{index}: n={g.n} m={g.m} planar={planar} free={embedding is None}"
        normalized = p.normalized()
        try:
            bounds = bounds_for(normalized.h, normalized.k, g.n) if g.n >= 1 else None
        except UnsupportedRangeError:
            bounds = None
        if bounds is not None:
            line += f" lower={bounds.lower_floor} upper={bounds.upper_floor}"
            if planar and embedding is None and g.m > bounds.upper_floor:
                line += " ABOVE UPPER BOUND"
        if embedding is not None:
            line += f" copy={embedding.vertices}"
            status = EXIT_FOUND
        print(line)
    return status


def run_exact(args) -> int:
    check_range(*sorted((args.h, args.k)))
    threads = args.threads if args.threads is not None else default_threads()
    budget = SearchBudget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)
    result = exact_ex(args.n, args.h, args.k, budget=budget, engine=args.engine, threads=threads)
    labels = list()
    certificate = certify(result.witness, PatternSpec(args.h, args.k), provenance=Provenance.search, search=result.as_dict())
    if certificate.bounds is not None and not certificate.bounds.equality:
        labels.append("derived")
    if not result.exact:
        labels.append("partial")
    certificate = certificate.with_labels(*labels)
    if args.out is not None:
        write_certificate(certificate, args.out)
    else:
        print(certificate_json(certificate))
    return 0


def run_bounds(args) -> int:
    check_range(args.h, args.k)
    bounds = bounds_for(args.h, args.k, args.n)
    if args.json:
        print(json.dumps(bounds.as_dict(), indent=2))
        return 0
    equality = "yes" if bounds.equality else "no"
    print(f"W_{{{args.h},{args.k}}}, n = {args.n}")
    print(f"    lower ........... {bounds.lower} (floor {bounds.lower_floor})")
    print(f"    upper ........... {bounds.upper} (floor {bounds.upper_floor})")
    print(f"    theorem lower ... {bounds.theorem_lower} (blocks of {bounds.lower_divisor})")
    print(f"    equality ........ {equality}")
    return 0


def run_lemmas(args) -> int:
    log.info("Lemma suite for W_{%d,%d} with seed %d", args.h, args.k, args.seed)
    reports = run_suite(
        PatternSpec(args.h, args.k),
        samples=args.samples,
        seed=args.seed,
        lemmas=args.lemma,
        min_hits=args.min_hits,
    )
    if args.json:
        print(json.dumps([r.as_dict() for r in reports], indent=2))
    else:
        for r in reports:
            health = "ok" if r.healthy else "FAILED"
            print(
                f"{r.lemma:<36} instances={r.instances:<6} hits={r.hits:<6} "
                f"violations={r.violations:<4} {health}"
            )
    return 0 if all(r.healthy for r in reports) else EXIT_FAILED


def run_gen(args) -> int:
    if args.free is not None:
        p = PatternSpec(*args.free)
        accept = planar_free_filter(p) if args.planar else free_filter(p)
    else:
        accept = planar_filter() if args.planar else None
    write_graph6(enumerate_graphs(args.n, accept), sys.stdout)
    return 0


COMMANDS = {
    "witness": run_witness,
    "check": run_check,
    "ex-exact": run_exact,
    "bounds": run_bounds,
    "verify-lemmas": run_lemmas,
    "gen": run_gen,
}


def main(argv=None):
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        sys.exit(EXIT_USAGE)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.captureWarnings(True)

    try:
        status = COMMANDS[args.command](args)
    except (UsageError, SearchError) as error:
        print(f"planarturan: {error}", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    except (UnsupportedRangeError, ParseError, CertificateError, OSError) as error:
        print(f"planarturan: {error}", file=sys.stderr)
        sys.exit(EXIT_DATA)
    sys.exit(status)


if __name__ == "__main__":
    main()
