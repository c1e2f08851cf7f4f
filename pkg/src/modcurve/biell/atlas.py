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

"""Classification of the bielliptic quotients X0(N)/W.

The pairs (N, W) come from the levels of the star-gate tables. Each pair
is searched for an involution with an elliptic quotient, screened by the
rules of the screening module, and if neither settles it, looked up in
the adjudicated verdicts. The result is a list of PairRecord objects, one
per pair, sorted by level and subgroup mask.
"""

import collections
import re
import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from modcurve.biell import logger
from modcurve.biell.config import EC_TABLE_FILE
from modcurve.biell.config import EXCLUDED_LEVELS
from modcurve.biell.config import FIELD_Q
from modcurve.biell.config import FIELD_Q_SQRT_M3
from modcurve.biell.config import REPORT_FORMATS
from modcurve.biell.config import STATUS_ADJUDICATED
from modcurve.biell.config import STATUS_BIELLIPTIC
from modcurve.biell.config import STATUS_EXCLUDED
from modcurve.biell.config import STATUS_GENUS_TOO_SMALL
from modcurve.biell.config import STATUS_HYPERELLIPTIC
from modcurve.biell.config import STATUS_INCONCLUSIVE
from modcurve.biell.config import VERDICT_BIELLIPTIC_OVER
from modcurve.biell.datafiles import iter_lines
from modcurve.biell.datafiles import load_adjudications
from modcurve.biell.datafiles import load_annotations
from modcurve.biell.datafiles import load_bielliptic
from modcurve.biell.datafiles import load_hyperelliptic
from modcurve.biell.datafiles import parse_int
from modcurve.biell.datafiles import read_data
from modcurve.biell.datafiles import split_fields
from modcurve.biell.errors import DataFileError
from modcurve.biell.errors import DuplicateLabel
from modcurve.biell.errors import IntegrityError
from modcurve.biell.errors import MissingDataError
from modcurve.biell.errors import NotApplicable
from modcurve.biell.involutions import ExtInvolution
from modcurve.biell.involutions import has_v3
from modcurve.biell.involutions import involutions
from modcurve.biell.ntheory import ALSubgroup
from modcurve.biell.ntheory import al_subgroups
from modcurve.biell.ntheory import factor
from modcurve.biell.report import render
from modcurve.biell.screening import ScreeningContext
from modcurve.biell.screening import StarGateTables
from modcurve.biell.screening import excluded
from modcurve.biell.screening import extend
from modcurve.biell.screening import extended_genus
from modcurve.biell.screening import iso_reduce_v3
from modcurve.biell.screening import iso_reduce_w4
from modcurve.biell.screening import reduction_verdict
from modcurve.biell.screening import screen_pair
from modcurve.biell.screening import subgroup_genus
from modcurve.biell.x0invariants import genus_x0

INFINITE = "infinite"
FINITE = "finite"
NOT_APPLICABLE = "n/a"

QuadraticPoints = collections.namedtuple("QuadraticPoints",
                                         ["kind", "reason"])

# "lift(X@M)": the involution X of level M carried up to the pair
LIFT_PATTERN = re.compile(r"^lift\((?P<element>[^@]+)@(?P<level>\d+)\)$")


class ECRecord(object):
    """An elliptic curve over Q with its rank and modular degree, None
    when unknown
    """

    __slots__ = ("label", "conductor", "rank", "modular_degree")

    def __init__(self, label, conductor, rank=None, modular_degree=None):
        self.label = label
        self.conductor = conductor
        self.rank = rank
        self.modular_degree = modular_degree

    def __eq__(self, other):
        if not isinstance(other, ECRecord):
            return NotImplemented
        return ((self.label, self.conductor, self.rank, self.modular_degree)
                == (other.label, other.conductor, other.rank,
                    other.modular_degree))

    def __hash__(self):
        return hash(self.label)

    def __repr__(self):
        return "ECRecord({}, {}, {}, {})".format(
            self.label, self.conductor, self.rank, self.modular_degree)


class AdjudicatedVerdict(object):
    """A verdict on a pair taken from outside the screening rules
    """

    __slots__ = ("N", "W", "verdict", "field", "citation")

    def __init__(self, N, W, verdict, field, citation):
        self.N = N
        self.W = W
        self.verdict = verdict
        self.field = field
        self.citation = citation

    def is_bielliptic(self):
        return self.verdict == VERDICT_BIELLIPTIC_OVER

    def __str__(self):
        verdict = self.verdict
        if self.field:
            verdict = "{}({})".format(verdict, self.field)
        return "{} [{}]".format(verdict, self.citation)

    def __repr__(self):
        return "AdjudicatedVerdict({}, {}, {})".format(
            self.N, self.W.label(), self.verdict)


class Witness(object):
    """An involution v with genus(X0(N)/<W, v>) = 1, found at the level of
    the pair or at the end of a chain of isomorphisms
    """

    __slots__ = ("element", "group", "field", "chain")

    def __init__(self, element, group, field, chain=()):
        self.element = element
        self.group = group
        self.field = field
        self.chain = tuple(chain)

    def __str__(self):
        if not self.chain:
            return str(self.element)
        return "{}@{}".format(self.element, self.element.N)

    def __repr__(self):
        return "Witness({}, {})".format(self, self.field)


class PairRecord(object):
    """Classification of one quotient X0(N)/W
    """

    def __init__(self, N, W, genus):
        self.N = N
        self.W = W
        self.genus = genus
        self.status = None
        self.witness = None
        self.exclusion = None
        self.adjudication = None
        self.chain = ()
        self.trace = ()
        self.quadratic = None

    @property
    def field(self):
        if self.witness is not None:
            return self.witness.field
        if self.adjudication is not None and self.adjudication.field:
            return self.adjudication.field
        return None

    def is_bielliptic(self):
        if self.status == STATUS_BIELLIPTIC:
            return True
        return (self.status == STATUS_ADJUDICATED and
                self.adjudication.is_bielliptic())

    def sort_key(self):
        return (self.N, self.W.mask)

    def to_dict(self, trace=False):
        data = collections.OrderedDict([
            ("N", self.N),
            ("W", self.W.label()),
            ("mask", self.W.mask),
            ("genus", self.genus),
            ("status", self.status),
            ("witness", str(self.witness) if self.witness else None),
            ("field", self.field),
            ("chain", [str(v) for v in self.chain]),
            ("exclusion", self.exclusion.rule if self.exclusion else None),
            ("adjudication", str(self.adjudication)
             if self.adjudication else None),
            ("quadratic_points", self.quadratic.kind
             if self.quadratic else None),
            ("reason", self.quadratic.reason if self.quadratic else None),
        ])
        if trace:
            data["trace"] = [v.to_dict() for v in self.trace]
        return data

    def __repr__(self):
        return "PairRecord({}, {}, {}, {})".format(
            self.N, self.W.label(), self.genus, self.status)


def ingest_ec_table(source, path=None):
    """Parses "label conductor rank degree" lines, "-" for an unknown rank
    or degree. The source is the text itself or an open file
    """
    text = source.read() if hasattr(source, "read") else source
    records = []
    seen = set()
    for lineno, line in iter_lines(text):
        label, conductor, rank, degree = split_fields(
            line, 4, path, lineno, sep=None)
        if label in seen:
            raise DuplicateLabel("Duplicate label {}".format(label),
                                 path, lineno)
        seen.add(label)
        conductor = parse_int(conductor, path, lineno, "conductor")
        if conductor < 11:
            raise DataFileError("No elliptic curve has conductor {}".format(
                conductor), path, lineno)
        rank = None if rank == "-" else parse_int(rank, path, lineno, "rank")
        degree = None if degree == "-" else parse_int(
            degree, path, lineno, "degree")
        if degree == 0:
            raise DataFileError("Modular degree must be positive", path,
                                lineno)
        records.append(ECRecord(label, conductor, rank, degree))
    return records


def load_ec_table(data_dir=None):
    path, text = read_data(EC_TABLE_FILE, data_dir)
    records = ingest_ec_table(text, path)
    logger.info("Loaded {} elliptic curves from {}".format(
        len(records), path))
    return records


class Datasets(object):
    """The shipped (or overridden) tables the classification consults
    """

    def __init__(self, data_dir=None):
        self.data_dir = data_dir
        self.tables = StarGateTables.load(data_dir)
        self.hyperelliptic = self._pairs(load_hyperelliptic(data_dir))
        self.bielliptic = self._pairs(load_bielliptic(data_dir))
        self.annotations = dict(
            (row.W, row) for rows in load_annotations(data_dir).values()
            for row in rows)
        self.adjudications = dict(
            (row.W, AdjudicatedVerdict(N, row.W, row.verdict, row.field,
                                       row.citation))
            for N, rows in load_adjudications(data_dir).items()
            for row in rows)
        self.ec_records = load_ec_table(data_dir)

    @staticmethod
    def _pairs(table):
        return dict((row.W, row.genus) for rows in table.values()
                    for row in rows)

    def context(self):
        degrees = {}
        for record in self.ec_records:
            degrees.setdefault(record.conductor, []).append(
                (record.label, record.modular_degree))
        return ScreeningContext(self.tables, self.hyperelliptic, degrees)

    def expected_bielliptic(self):
        """Pairs the classification must find bielliptic: the index two
        subgroups over an elliptic X0*(N) and the listed pairs
        """
        expected = dict(self.bielliptic)
        for N in sorted(self.tables.genus1):
            for W, genus in index_two_pairs(N):
                expected[W] = genus
        return expected


@lru_cache(maxsize=None)
def get_datasets(data_dir=None):
    return Datasets(data_dir)


def index_two_pairs(N):
    """Subgroups of index 2 in B(N) with a quotient of genus at least 2
    """
    B = ALSubgroup.full(N)
    pairs = []
    for W in al_subgroups(N):
        if 2 * W.order != B.order or W.is_fricke():
            continue
        genus = subgroup_genus(W)
        if genus >= 2:
            pairs.append((W, genus))
    return pairs


def enumerate_pairs(tables=None, levels=None):
    """Pairs (N, W) with W non trivial, different from <w_N> and B(N) and
    X0(N)/W of genus at least 2, sorted by level and mask
    """
    if levels is None:
        tables = tables or StarGateTables.load()
        levels = tables.levels()
    pairs = []
    for N in sorted(set(levels)):
        if N in EXCLUDED_LEVELS or genus_x0(N) < 2:
            continue
        for W in al_subgroups(N):
            if W.is_trivial() or W.is_full() or W.is_fricke():
                continue
            if subgroup_genus(W) >= 2:
                pairs.append((N, W))
    return sorted(pairs, key=lambda pair: (pair[0], pair[1].mask))


def find_witness(W):
    """First modelled involution v with genus(X0(N)/<W, v>) = 1, searching
    Atkin-Lehner involutions first, then the S2, V2 and V3 families
    """
    for element in involutions(W.N):
        if element.is_al() and element.d in W:
            continue
        G = extend(W, element)
        if G is None:
            continue
        if extended_genus(G) == 1:
            logger.debug("Witness {} for {} {}".format(
                element, W.N, W.label()))
            return Witness(element, G, element.field(W))
    return None


def isomorphic_pairs(W):
    """Pairs isomorphic to X0(N)/W through the w4 reduction and the V3
    conjugation, as (pair, verdict, field of the isomorphism)
    """
    N = W.N
    found = []
    try:
        M, U = iso_reduce_w4(N, W)
    except NotApplicable:
        pass
    else:
        found.append((U, reduction_verdict("iso_reduce_w4", N, W, M, U),
                      FIELD_Q))
    if has_v3(N):
        U = iso_reduce_v3(N, W)
        if U != W:
            found.append((U, reduction_verdict("iso_reduce_v3", N, W, N, U),
                          FIELD_Q_SQRT_M3))
    for U, _, _ in found:
        if subgroup_genus(U) != subgroup_genus(W):
            raise IntegrityError("Isomorphic quotients {} {} and {} {} "
                                 "have different genera".format(
                                     N, W.label(), U.N, U.label()))
    return found


def confirm_bielliptic(N, W, visited=None):
    """Returns a Witness that X0(N)/W is bielliptic, or None
    """
    if not isinstance(W, ALSubgroup):
        W = ALSubgroup.generated(N, W)
    visited = set() if visited is None else visited
    visited.add(W)
    witness = find_witness(W)
    if witness is not None:
        return witness
    for U, step, field in isomorphic_pairs(W):
        if U in visited:
            continue
        lower = confirm_bielliptic(U.N, U, visited)
        if lower is None:
            continue
        if FIELD_Q_SQRT_M3 in (field, lower.field):
            field = FIELD_Q_SQRT_M3
        return Witness(lower.element, lower.group, field,
                       (step,) + lower.chain)
    return None


def listed_involutions(N, annotation):
    """The involutions of an annotation, a lift "lift(X@M)" being parsed
    as X at level M
    """
    found = []
    for entry in annotation.involutions:
        match = LIFT_PATTERN.match(entry)
        if match:
            level, token = int(match.group("level")), match.group("element")
        else:
            level, token = N, entry
        found.append(ExtInvolution.parse(level, token))
    return found


def witness_in_family(witness, listed):
    """Returns whether the witness lies in the group generated by the pair
    and one of the listed involutions. None when no listed involution acts
    on the curve the witness was found on
    """
    if any(step.rule == "iso_reduce_v3" for step in witness.chain):
        return None
    comparable = [e for e in listed if e.N == witness.element.N]
    if not comparable:
        return None
    return any(e in witness.group for e in comparable)


def annotation_problems(datasets=None, levels=None):
    """Checks the annotated bielliptic pairs: each one is confirmed or
    adjudicated bielliptic, and a confirming witness lies in a listed
    family. Returns the list of discrepancies
    """
    datasets = datasets or get_datasets()
    problems = []
    for W in sorted(datasets.annotations, key=lambda w: w.sort_key()):
        annotation = datasets.annotations[W]
        if W.is_full() or not annotation.involutions:
            continue
        if levels and W.N not in levels:
            continue
        witness = confirm_bielliptic(W.N, W)
        if witness is None:
            adjudication = datasets.adjudications.get(W)
            if adjudication is None or not adjudication.is_bielliptic():
                problems.append("{} {} has no witness".format(
                    W.N, W.label()))
            continue
        listed = listed_involutions(W.N, annotation)
        if witness_in_family(witness, listed) is False:
            problems.append("{} {}: witness {} is not among {}".format(
                W.N, W.label(), witness, ", ".join(annotation.involutions)))
    for problem in problems:
        logger.warning(problem)
    return problems


class Classifier(object):
    """Classifies pairs against one set of datasets, caching the traces of
    the pairs visited along isomorphism chains
    """

    def __init__(self, datasets):
        self.datasets = datasets
        self.context = datasets.context()
        self._traces = {}

    def trace(self, W):
        trace = self._traces.get(W)
        if trace is None:
            trace = screen_pair(W.N, W, self.context)
            self._traces[W] = trace
        return trace

    def exclusion(self, W, visited=None):
        """Returns (verdict, chain) for the first rule excluding X0(N)/W or
        a pair isomorphic to it, (None, ()) if there is none
        """
        visited = set() if visited is None else visited
        visited.add(W)
        verdict = excluded(self.trace(W))
        if verdict is not None:
            return verdict, ()
        for U, step, _ in isomorphic_pairs(W):
            if U in visited:
                continue
            verdict, chain = self.exclusion(U, visited)
            if verdict is not None:
                return verdict, (step,) + chain
        return None, ()

    def classify(self, W):
        N = W.N
        record = PairRecord(N, W, subgroup_genus(W))
        if record.genus < 2:
            record.status = STATUS_GENUS_TOO_SMALL
            record.quadratic = QuadraticPoints(NOT_APPLICABLE,
                                               "genus below 2")
            return record
        record.trace = tuple(self.trace(W))
        witness = confirm_bielliptic(N, W)
        verdict, chain = self.exclusion(W)
        adjudication = self.datasets.adjudications.get(W)
        if witness is not None:
            if verdict is not None:
                raise IntegrityError(
                    "{} {} has the elliptic quotient by {} but is excluded "
                    "by {}".format(N, W.label(), witness, verdict))
            record.status = STATUS_BIELLIPTIC
            record.witness = witness
            record.chain = witness.chain
            self.check_adjudication(record, adjudication)
        elif verdict is not None:
            record.status = STATUS_EXCLUDED
            record.exclusion = verdict
            record.chain = chain
            self.check_adjudication(record, adjudication)
        elif adjudication is not None:
            record.status = STATUS_ADJUDICATED
            record.adjudication = adjudication
        elif W in self.datasets.hyperelliptic:
            record.status = STATUS_HYPERELLIPTIC
        else:
            record.status = STATUS_INCONCLUSIVE
        record.trace += tuple(record.chain)
        record.quadratic = quadratic_points(
            record, self.datasets.ec_records, self.datasets)
        return record

    def check_adjudication(self, record, adjudication):
        if adjudication is None:
            return
        computed = record.status == STATUS_BIELLIPTIC
        if computed != adjudication.is_bielliptic():
            raise IntegrityError("{} {} is {} but adjudicated {}".format(
                record.N, record.W.label(), record.status, adjudication))
        if computed and adjudication.field != record.field:
            raise IntegrityError(
                "{} {} is bielliptic over {} but adjudicated {}".format(
                    record.N, record.W.label(), record.field, adjudication))
        logger.warning("Adjudicated verdict for {} {} ignored, the pair is "
                       "{}".format(record.N, record.W.label(), record.status))


def quadratic_points(record, ec_table, datasets=None):
    """Decides whether X0(N)/W has infinitely many quadratic points: it is
    hyperelliptic, or bielliptic over Q with an elliptic quotient of
    positive rank
    """
    datasets = datasets or get_datasets()
    if record.genus < 2:
        return QuadraticPoints(NOT_APPLICABLE, "genus below 2")
    if record.W in datasets.hyperelliptic:
        return QuadraticPoints(INFINITE, "hyperelliptic")
    curves = dict((ec.label, ec) for ec in ec_table)
    if record.is_bielliptic() and record.field == FIELD_Q:
        for label in elliptic_quotients(record, datasets):
            ec = curves.get(label[1:])
            if ec is None:
                raise MissingDataError("No elliptic curve {} for {} "
                                       "{}".format(label, record.N,
                                                   record.W.label()))
            if ec.rank is None:
                raise MissingDataError("Unknown rank of {}".format(label))
            if ec.rank > 0:
                return QuadraticPoints(INFINITE, "bielliptic, {} rank "
                                       "{}".format(label, ec.rank))
    candidates = sorted(
        (ec for ec in ec_table
         if ec.rank and record.N % ec.conductor == 0),
        key=lambda ec: (ec.conductor, ec.label))
    reason = "no positive rank elliptic quotient over Q"
    if candidates:
        reason = "{}; positive rank curves of conductor dividing {}: " \
                 "{}".format(reason, record.N,
                             ",".join(ec.label for ec in candidates))
    return QuadraticPoints(FINITE, reason)


def elliptic_quotients(record, datasets):
    """Isogeny labels of the elliptic quotients of a bielliptic pair
    """
    N, W = record.N, record.W
    annotation = datasets.annotations.get(W)
    if annotation is not None:
        return annotation.labels
    B = ALSubgroup.full(N)
    if 2 * W.order == B.order and N in datasets.tables.genus1:
        annotation = datasets.annotations.get(B)
        if annotation is not None:
            return annotation.labels
    raise MissingDataError("No elliptic quotient known for {} {}".format(
        N, W.label()))


def classify_level(N, data_dir=None, datasets=None):
    """Classifies all pairs of level N
    """
    start = time.time()
    datasets = datasets or get_datasets(data_dir)
    classifier = Classifier(datasets)
    records = [classifier.classify(W)
               for _, W in enumerate_pairs(levels=[N])]
    counts = collections.Counter(r.status for r in records)
    logger.info("Level {}: {} pairs, {} ({:.2f}s)".format(
        N, len(records), ", ".join("{} {}".format(k, counts[k])
                                   for k in sorted(counts)),
        time.time() - start))
    return records


def classify_all(levels=None, jobs=1, data_dir=None):
    """Classifies every pair in scope, fanning levels out to a process pool
    when jobs > 1
    """
    datasets = get_datasets(data_dir)
    if levels is None:
        levels = [N for N in datasets.tables.levels()
                  if N not in EXCLUDED_LEVELS]
    levels = sorted(set(levels))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [executor.submit(classify_level, N, data_dir)
                       for N in levels]
            batches = [future.result() for future in futures]
    else:
        batches = [classify_level(N, datasets=datasets) for N in levels]
    records = sorted((r for batch in batches for r in batch),
                     key=lambda r: r.sort_key())
    expected = datasets.expected_bielliptic()
    for record in records:
        if record.W in expected and record.status == STATUS_EXCLUDED:
            raise IntegrityError("Bielliptic {} {} is excluded by {}".format(
                record.N, record.W.label(), record.exclusion))
    return records


def check_classification(records, datasets=None):
    """Compares the classification with the expected bielliptic pairs and
    quadratic points. Returns the list of discrepancies
    """
    datasets = datasets or get_datasets()
    levels = set(r.N for r in records)
    problems = []
    expected = dict((W, genus) for W, genus in
                    datasets.expected_bielliptic().items() if W.N in levels)
    found = dict((r.W, r) for r in records if r.is_bielliptic())
    for W in sorted(set(expected) - set(found), key=lambda w: w.sort_key()):
        problems.append("{} {} is not found bielliptic".format(
            W.N, W.label()))
    for W in sorted(set(found) - set(expected), key=lambda w: w.sort_key()):
        problems.append("{} {} is found bielliptic but not listed".format(
            W.N, W.label()))
    for W in set(found) & set(expected):
        if found[W].genus != expected[W]:
            problems.append("{} {} has genus {}, listed {}".format(
                W.N, W.label(), found[W].genus, expected[W]))
    infinite = set(r.W for r in records if r.quadratic and
                   r.quadratic.kind == INFINITE)
    expected_infinite = set(W for W in datasets.hyperelliptic
                            if W.N in levels and W in
                            set(r.W for r in records))
    expected_infinite |= set(r.W for r in records if r.N == 99 and
                             r.W.order == 2)
    for W in sorted(infinite ^ expected_infinite,
                    key=lambda w: w.sort_key()):
        problems.append("{} {}: quadratic points {}".format(
            W.N, W.label(), "infinite" if W in infinite else "finite"))
    for problem in problems:
        logger.warning(problem)
    return problems


def genus_table_columns(N):
    """Subgroups of B(N) in the column order of the genus tables, as
    (label, subgroup). p1 < p2 < p3 stand for the prime power parts of N
    """
    parts = factor(N).prime_power_parts()
    if len(parts) == 2:
        p1, p2 = parts
        columns = [("1", []), ("p1", [p1]), ("p2", [p2]),
                   ("p1p2", [p1 * p2]), ("B", parts)]
    elif len(parts) == 3:
        p1, p2, p3 = parts
        columns = [
            ("1", []), ("p1", [p1]), ("p2", [p2]), ("p3", [p3]),
            ("p1p2", [p1 * p2]), ("p1p3", [p1 * p3]), ("p2p3", [p2 * p3]),
            ("p1p2p3", [p1 * p2 * p3]),
            ("p1,p2", [p1, p2]), ("p1,p3", [p1, p3]), ("p2,p3", [p2, p3]),
            ("p1,p2p3", [p1, p2 * p3]), ("p2,p1p3", [p2, p1 * p3]),
            ("p3,p1p2", [p3, p1 * p2]), ("p1p2,p1p3", [p1 * p2, p1 * p3]),
            ("B", parts),
        ]
    else:
        return [(W.label(), W) for W in al_subgroups(N)]
    return [(label, ALSubgroup.generated(N, gens))
            for label, gens in columns]


def genus_row(N):
    """Genera of X0(N)/W in the column order of the genus tables, as
    (label, subgroup, genus)
    """
    return [(label, W, subgroup_genus(W))
            for label, W in genus_table_columns(N)]


def compare_genus_row(N, printed, errata=None):
    """Compares the computed genus row of N with a printed one. Returns
    (mismatches, corrected) as lists of (label, printed, computed). A cell
    lands in corrected when an erratum for it turns the printed value into
    the computed one
    """
    row = genus_row(N)
    if len(row) != len(printed):
        raise IntegrityError("Genus table of level {}: {} columns, "
                             "expected {}".format(N, len(printed), len(row)))
    known = (errata or {}).get(N, {})
    mismatches = []
    corrected = []
    for (label, _, genus), value in zip(row, printed):
        erratum = known.get(label)
        if erratum is None:
            if genus != value:
                mismatches.append((label, value, genus))
        elif erratum.printed == value and erratum.corrected == genus:
            corrected.append((label, value, genus))
        else:
            mismatches.append((label, value, genus))
    return mismatches, corrected


def klein_four_defects(N, genus=None):
    """Klein four subgroups V of B(N) breaking
    g(X) + 2 g(X/V) = g(X/a) + g(X/b) + g(X/ab), as (V, left, right).
    genus maps a subgroup to the genus of its quotient and defaults to the
    computed one
    """
    genus = genus or subgroup_genus
    g = genus(ALSubgroup.generated(N))
    defects = []
    for V in al_subgroups(N):
        if V.order != 4:
            continue
        left = g + 2 * genus(V)
        right = sum(genus(ALSubgroup.generated(N, [d])) for d in V if d != 1)
        if left != right:
            defects.append((V, left, right))
    return defects


def emit_report(records, fmt="markdown", genus_rows=None, trace=False):
    """Renders the classification. genus_rows maps a level to the output of
    genus_row
    """
    if fmt not in REPORT_FORMATS:
        raise ValueError("Unknown report format {!r}, expected one of "
                         "{}".format(fmt, ", ".join(REPORT_FORMATS)))
    return render(fmt, records, genus_rows or {}, trace)
