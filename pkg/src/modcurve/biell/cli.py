# -*- coding: utf-8 -*-
#
# This file is part of MODCURVE.BIELL.
#
# MODCURVE.BIELL is free software: you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation, version 2.
#
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more
# details.
#
# You should have received a copy of the GNU General Public License along with
# this program; if not, write to the Free Software Foundation, Inc., 51
# Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.
#
# Copyright 2026 by its authors.
# Some rights reserved, see README and LICENSE.

"""Command line entry point. Values go to stdout, logging to stderr.

Exit status: 0 on success, 1 on an integrity failure, 2 on a usage error,
3 on a missing or malformed data file.
"""

import argparse
import logging
import sys

from modcurve.biell import logger
from modcurve.biell import setup_logging
from modcurve.biell.atlas import Classifier
from modcurve.biell.atlas import check_classification
from modcurve.biell.atlas import classify_all
from modcurve.biell.atlas import compare_genus_row
from modcurve.biell.atlas import emit_report
from modcurve.biell.atlas import genus_row
from modcurve.biell.atlas import get_datasets
from modcurve.biell.atlas import klein_four_defects
from modcurve.biell.config import REPORT_FORMATS
from modcurve.biell.datafiles import load_fixtables
from modcurve.biell.datafiles import load_genus_errata
from modcurve.biell.datafiles import load_genus_tables
from modcurve.biell.errors import DataFileError
from modcurve.biell.errors import IntegrityError
from modcurve.biell.involutions import ExtInvolution
from modcurve.biell.involutions import FixTable
from modcurve.biell.involutions import group_closure
from modcurve.biell.involutions import quotient_genus_hurwitz
from modcurve.biell.modsym import build_space
from modcurve.biell.modsym import invariant_genus
from modcurve.biell.ntheory import ALSubgroup
from modcurve.biell.screening import excluded
from modcurve.biell.screening import screen_pair
from modcurve.biell.x0invariants import genus_x0

EXIT_OK = 0
EXIT_INTEGRITY = 1
EXIT_USAGE = 2
EXIT_DATA = 3

# verbs that log at INFO by default
LONG_RUNNING = ("classify", "selftest")


def parse_subgroup(N, text):
    """Parses "w8,w3" into the subgroup of B(N) it generates. Raises
    ValueError naming the offending token
    """
    divisors = []
    for token in text.split(","):
        token = token.strip()
        if not (token.startswith("w") and token[1:].isdigit()):
            raise ValueError("Invalid Atkin-Lehner involution {!r}".format(
                token))
        divisors.append(int(token[1:]))
    return ALSubgroup.generated(N, divisors)


def parse_elements(N, text):
    return [ExtInvolution.parse(N, token) for token in text.split(",")]


def level(text):
    try:
        N = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid level {!r}".format(text))
    if N < 1:
        raise argparse.ArgumentTypeError("level must be positive, got "
                                         "{}".format(N))
    return N


def build_parser():
    parser = argparse.ArgumentParser(
        prog="modcurve-biell",
        description="Bielliptic quotients of modular curves X0(N)/W")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="log at DEBUG level")
    parser.add_argument("-q", "--quiet", action="store_true",
                        help="log warnings only")
    parser.add_argument("--data-dir", default=None,
                        help="directory whose files override the shipped "
                             "data")
    verbs = parser.add_subparsers(dest="verb", metavar="verb")
    verbs.required = True

    genus = verbs.add_parser("genus", help="genus of X0(N)/W")
    genus.add_argument("N", type=level)
    genus.add_argument("--w", default=None, metavar="w8,w3",
                       help="generators of W")
    genus.add_argument("--all", action="store_true",
                       help="the genus table row of N")
    genus.add_argument("--format", choices=REPORT_FORMATS,
                       default="markdown")

    fix = verbs.add_parser("fix", help="fixed points of involutions")
    fix.add_argument("N", type=level)
    fix.add_argument("--element", default=None, metavar="V2*w40")
    fix.add_argument("--all", action="store_true",
                     help="every modelled involution of X0(N)")

    group = verbs.add_parser("group-genus",
                             help="genus of X0(N)/G for a group of "
                                  "involutions")
    group.add_argument("N", type=level)
    group.add_argument("--gens", required=True, metavar="w9,V3*w7")

    screen = verbs.add_parser("screen", help="exclusion rules on a pair")
    screen.add_argument("N", type=level)
    screen.add_argument("--w", required=True, metavar="w8,w3")
    screen.add_argument("--trace", action="store_true")

    classify = verbs.add_parser("classify", help="classify all pairs")
    classify.add_argument("levels", type=level, nargs="*")
    classify.add_argument("--format", choices=REPORT_FORMATS,
                          default="markdown")
    classify.add_argument("--trace", action="store_true")
    classify.add_argument("--genera", action="store_true",
                          help="include the genus tables of the levels")
    classify.add_argument("--jobs", type=int, default=1)

    quad = verbs.add_parser("quadpoints",
                            help="quadratic points of X0(N)/W")
    quad.add_argument("N", type=level)
    quad.add_argument("--w", required=True, metavar="w8,w3")
    quad.add_argument("--trace", action="store_true")

    selftest = verbs.add_parser("selftest",
                                help="check against the golden data")
    selftest.add_argument("--genus-tables", "--appendix-a",
                          dest="genus_tables",
                          action="store_true", help="genus tables")
    selftest.add_argument("--fixtables", action="store_true")
    selftest.add_argument("--theorems", action="store_true",
                          help="classification and quadratic points")
    selftest.add_argument("--jobs", type=int, default=1)

    dump = verbs.add_parser("dump", help="modular symbols debug report")
    dump.add_argument("N", type=level)
    return parser


def parse_args(argv=None):
    """Parses and validates the command line. Exits with status 2 on a
    usage error
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "w", None):
            args.W = parse_subgroup(args.N, args.w)
        if getattr(args, "element", None):
            args.element = ExtInvolution.parse(args.N, args.element)
        if getattr(args, "gens", None):
            args.gens = parse_elements(args.N, args.gens)
    except ValueError as e:
        parser.error(str(e))
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    if args.verb == "fix" and not (args.all or args.element):
        parser.error("fix needs --element or --all")
    return args


def do_genus(args, out):
    if args.all:
        out.write(emit_report([], args.format, {args.N: genus_row(args.N)}))
    elif args.w:
        out.write("{}\n".format(invariant_genus(args.N, args.W)))
    else:
        out.write("{}\n".format(genus_x0(args.N)))


def do_fix(args, out):
    if args.all:
        out.write(FixTable(args.N).to_tsv())
    else:
        table = FixTable(args.N, [args.element])
        out.write("{}\n".format(table[args.element]))


def do_group_genus(args, out):
    G = group_closure(args.N, args.gens)
    out.write("{}\n".format(quotient_genus_hurwitz(args.N, G)))


def do_screen(args, out):
    context = get_datasets(args.data_dir).context()
    trace = screen_pair(args.N, args.W, context)
    verdict = excluded(trace)
    if verdict is None:
        out.write("not excluded\n")
    else:
        out.write("excluded by {}\n".format(verdict.rule))
    if args.trace:
        for v in trace:
            out.write("  {}\n".format(v))


def do_classify(args, out):
    records = classify_all(args.levels or None, jobs=args.jobs,
                           data_dir=args.data_dir)
    genus_rows = {}
    if args.genera:
        for N in sorted(set(r.N for r in records)):
            genus_rows[N] = genus_row(N)
    out.write(emit_report(records, args.format, genus_rows, args.trace))


def do_quadpoints(args, out):
    classifier = Classifier(get_datasets(args.data_dir))
    record = classifier.classify(args.W)
    out.write("{}\n".format(record.quadratic.kind))
    if args.trace:
        out.write("  status: {}\n".format(record.status))
        out.write("  reason: {}\n".format(record.quadratic.reason))


def selftest_genus_tables(data_dir):
    errata = load_genus_errata(data_dir)
    checked = 0
    for N, (_, genera) in load_genus_tables(data_dir).items():
        mismatches, corrected = compare_genus_row(N, genera, errata)
        if mismatches:
            diff = ", ".join("{} {} != {}".format(label, genus, printed)
                             for label, printed, genus in mismatches)
            raise IntegrityError("Genus table of level {}: {}".format(
                N, diff))
        for label, printed, genus in corrected:
            logger.warning("Genus table of level {}: {} is printed as {}, "
                           "computed {} (known erratum)".format(
                               N, label, printed, genus))
        defects = klein_four_defects(N)
        if defects:
            V, left, right = defects[0]
            raise IntegrityError(
                "Level {}: g + 2g(X/V) = {} but the involutions of {} sum "
                "to {}".format(N, left, V.label(), right))
        checked += len(genera)
    logger.info("Verified {} genus table cells".format(checked))
    return checked


def selftest_fixtables(data_dir):
    checked = 0
    for N, rows in load_fixtables(data_dir).items():
        table = FixTable(N)
        for row in rows:
            count = table[row.element]
            if count != row.count:
                raise IntegrityError(
                    "{}:{}: #({}, X0({})) = {}, expected {}".format(
                        "fixtables", row.lineno, row.element, N, count,
                        row.count))
            checked += 1
    logger.info("Verified {} fixed point counts".format(checked))
    return checked


def selftest_theorems(data_dir, jobs):
    datasets = get_datasets(data_dir)
    records = classify_all(jobs=jobs, data_dir=data_dir)
    problems = check_classification(records, datasets)
    if problems:
        raise IntegrityError("{} classification discrepancies, first: "
                             "{}".format(len(problems), problems[0]))
    logger.info("Verified {} pairs".format(len(records)))
    return len(records)


def do_selftest(args, out):
    every = not (args.genus_tables or args.fixtables or args.theorems)
    if every or args.genus_tables:
        out.write("genus tables: {} cells\n".format(
            selftest_genus_tables(args.data_dir)))
    if every or args.fixtables:
        out.write("fixed point tables: {} entries\n".format(
            selftest_fixtables(args.data_dir)))
    if every or args.theorems:
        out.write("classification: {} pairs\n".format(
            selftest_theorems(args.data_dir, args.jobs)))


def do_dump(args, out):
    out.write(build_space(args.N).report())
    out.write("\n")
    out.write(FixTable(args.N).to_tsv())


COMMANDS = {
    "genus": do_genus,
    "fix": do_fix,
    "group-genus": do_group_genus,
    "screen": do_screen,
    "classify": do_classify,
    "quadpoints": do_quadpoints,
    "selftest": do_selftest,
    "dump": do_dump,
}


def run(args, out=None):
    """Runs a parsed command and returns the exit status
    """
    out = out or sys.stdout
    try:
        COMMANDS[args.verb](args, out)
    except IntegrityError as e:
        logger.error("Integrity failure: {}".format(e))
        return EXIT_INTEGRITY
    except DataFileError as e:
        logger.error("Data error: {}".format(e))
        return EXIT_DATA
    except ValueError as e:
        logger.error("Invalid input: {}".format(e))
        return EXIT_USAGE
    return EXIT_OK


def main(argv=None):
    args = parse_args(argv)
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet or args.verb not in LONG_RUNNING:
        level = logging.WARNING
    else:
        level = logging.INFO
    setup_logging(level, sys.stderr)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
