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

"""Readers of the plain text tables shipped in the data folder
"""

import collections
import hashlib
import os

from modcurve.biell import PRODUCT_NAME
from modcurve.biell import logger
from modcurve.biell.config import ADJUDICATIONS_FILE
from modcurve.biell.config import ANNOTATIONS_FILE
from modcurve.biell.config import BIELLIPTIC_FILE
from modcurve.biell.config import DATA_DIR_ENV
from modcurve.biell.config import FIXTABLES_FILE
from modcurve.biell.config import GENUS_ERRATA_FILE
from modcurve.biell.config import GENUS_TABLES_FILE
from modcurve.biell.config import HYPERELLIPTIC_FILE
from modcurve.biell.config import STARGATE_FILE
from modcurve.biell.config import STARGATE_SHA256
from modcurve.biell.config import VERDICT_BIELLIPTIC_OVER
from modcurve.biell.config import VERDICT_NOT_BIELLIPTIC
from modcurve.biell.errors import DataFileError
from modcurve.biell.errors import DuplicateLabel
from modcurve.biell.errors import IntegrityError
from modcurve.biell.errors import MissingDataError
from modcurve.biell.ntheory import ALSubgroup
from pkg_resources import resource_exists
from pkg_resources import resource_filename

PairRow = collections.namedtuple("PairRow", ["W", "genus", "lineno"])

Annotation = collections.namedtuple(
    "Annotation", ["W", "involutions", "labels", "lineno"])

Adjudication = collections.namedtuple(
    "Adjudication", ["W", "verdict", "field", "citation", "lineno"])

FixRow = collections.namedtuple("FixRow", ["N", "element", "count", "lineno"])

Erratum = collections.namedtuple(
    "Erratum", ["N", "column", "printed", "corrected", "note", "lineno"])


def get_data_dir(data_dir=None):
    """Returns the directory that overrides the shipped data, if any
    """
    return data_dir or os.environ.get(DATA_DIR_ENV) or None


def get_data_path(name, data_dir=None):
    """Returns the path of the data file with the given name. A file in the
    override directory takes precedence over the shipped one
    """
    directory = get_data_dir(data_dir)
    if directory:
        path = os.path.join(directory, name)
        if os.path.isfile(path):
            return path
    resource = "data/{}".format(name)
    if not resource_exists(PRODUCT_NAME, resource):
        raise MissingDataError("No data file {}".format(name), path=name)
    return resource_filename(PRODUCT_NAME, resource)


def read_data(name, data_dir=None):
    """Returns a tuple (path, text) for the data file with the given name
    """
    path = get_data_path(name, data_dir)
    try:
        with open(path, "r") as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise MissingDataError("Cannot read data file: {}".format(e),
                               path=path)
    logger.debug("Read data file {}".format(path))
    return path, text


def iter_lines(text):
    """Yields (lineno, line) for the non empty lines that are not comments
    """
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def split_fields(line, count, path, lineno, sep=";"):
    fields = [f.strip() for f in line.split(sep)] if sep else line.split()
    if len(fields) != count:
        raise DataFileError("Expected {} fields, got {}: {!r}".format(
            count, len(fields), line), path, lineno)
    return fields


def parse_int(token, path, lineno, what="value"):
    try:
        value = int(token)
    except ValueError:
        raise DataFileError("Invalid {} {!r}".format(what, token),
                            path, lineno)
    if value < 0:
        raise DataFileError("Negative {} {!r}".format(what, token),
                            path, lineno)
    return value


def parse_generators(N, token, path=None, lineno=None):
    """Parses "w4,w3" into the subgroup of B(N) it generates
    """
    divisors = []
    for item in token.split(","):
        item = item.strip()
        if not (item.startswith("w") and item[1:].isdigit()):
            raise DataFileError("Invalid generator {!r}".format(item),
                                path, lineno)
        divisors.append(int(item[1:]))
    try:
        return ALSubgroup.generated(N, divisors)
    except ValueError as e:
        raise DataFileError(str(e), path, lineno)


def checksum(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def verify_checksum(name, expected, data_dir=None):
    """Raises IntegrityError when the data file does not match the digest
    """
    path, text = read_data(name, data_dir)
    digest = checksum(text)
    if digest != expected:
        raise IntegrityError("Checksum mismatch for {}: {} != {}".format(
            path, digest, expected))
    return path, text


def read_sections(text, path):
    """Splits a file with "[section]" headers into {section: [(lineno,
    line)]}, keeping the order of the sections
    """
    sections = collections.OrderedDict()
    current = None
    for lineno, line in iter_lines(text):
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if current in sections:
                raise DataFileError("Duplicate section {!r}".format(current),
                                    path, lineno)
            sections[current] = []
            continue
        if current is None:
            raise DataFileError("Data before the first section", path,
                                lineno)
        sections[current].append((lineno, line))
    return sections


def load_stargate(data_dir=None):
    """Returns the star-gate sections as {section: [(N, genus)]}. The lists
    of levels by genus carry genus 0, 1 and 2
    """
    path, text = verify_checksum(STARGATE_FILE, STARGATE_SHA256, data_dir)
    genera = {"genus0": 0, "genus1": 1, "genus2": 2}
    tables = collections.OrderedDict()
    for section, lines in read_sections(text, path).items():
        rows = []
        for lineno, line in lines:
            if section in genera:
                for token in line.split():
                    N = parse_int(token, path, lineno, "level")
                    rows.append((N, genera[section]))
            else:
                N, genus = split_fields(line, 2, path, lineno, sep=None)
                rows.append((parse_int(N, path, lineno, "level"),
                             parse_int(genus, path, lineno, "genus")))
        tables[section] = rows
    logger.debug("Loaded star-gate lists from {}".format(path))
    return tables


def load_pair_table(name, data_dir=None):
    """Reads a "N;generators;genus" file into {N: [PairRow]}
    """
    path, text = read_data(name, data_dir)
    table = collections.OrderedDict()
    for lineno, line in iter_lines(text):
        N, gens, genus = split_fields(line, 3, path, lineno)
        N = parse_int(N, path, lineno, "level")
        W = parse_generators(N, gens, path, lineno)
        genus = parse_int(genus, path, lineno, "genus")
        table.setdefault(N, []).append(PairRow(W, genus, lineno))
    logger.info("Loaded {} pairs from {}".format(
        sum(map(len, table.values())), path))
    return table


def load_hyperelliptic(data_dir=None):
    return load_pair_table(HYPERELLIPTIC_FILE, data_dir)


def load_bielliptic(data_dir=None):
    return load_pair_table(BIELLIPTIC_FILE, data_dir)


def load_annotations(data_dir=None):
    """Reads the known bielliptic involutions and elliptic quotients into
    {N: [Annotation]}
    """
    path, text = read_data(ANNOTATIONS_FILE, data_dir)
    table = collections.OrderedDict()
    for lineno, line in iter_lines(text):
        N, gens, involutions, labels = split_fields(line, 4, path, lineno)
        N = parse_int(N, path, lineno, "level")
        W = parse_generators(N, gens, path, lineno)
        involutions = () if involutions == "-" else tuple(
            i.strip() for i in involutions.split(","))
        labels = tuple(label.strip() for label in labels.split(","))
        if not all(label.startswith("E") for label in labels):
            raise DataFileError("Invalid isogeny labels {!r}".format(
                ",".join(labels)), path, lineno)
        table.setdefault(N, []).append(
            Annotation(W, involutions, labels, lineno))
    return table


def parse_verdict(token, path, lineno):
    """Returns (verdict, field) from "not-bielliptic" or
    "bielliptic-over(K)"
    """
    if token == VERDICT_NOT_BIELLIPTIC:
        return token, None
    prefix = "{}(".format(VERDICT_BIELLIPTIC_OVER)
    if token.startswith(prefix) and token.endswith(")"):
        return VERDICT_BIELLIPTIC_OVER, token[len(prefix):-1]
    raise DataFileError("Unknown verdict {!r}".format(token), path, lineno)


def load_adjudications(data_dir=None):
    """Reads the adjudicated verdicts into {N: [Adjudication]}
    """
    path, text = read_data(ADJUDICATIONS_FILE, data_dir)
    table = collections.OrderedDict()
    seen = set()
    for lineno, line in iter_lines(text):
        N, gens, verdict, citation = split_fields(line, 4, path, lineno)
        N = parse_int(N, path, lineno, "level")
        W = parse_generators(N, gens, path, lineno)
        if W in seen:
            raise DataFileError("Second verdict for {}".format(W.label()),
                                path, lineno)
        seen.add(W)
        if not citation:
            raise DataFileError("Verdict without citation", path, lineno)
        verdict, field = parse_verdict(verdict, path, lineno)
        table.setdefault(N, []).append(
            Adjudication(W, verdict, field, citation, lineno))
    logger.info("Loaded {} adjudicated verdicts from {}".format(
        len(seen), path))
    return table


def load_genus_tables(data_dir=None):
    """Reads the golden genus tables into {N: (shape, genera)} where shape
    is "two-prime" or "three-prime"
    """
    path, text = read_data(GENUS_TABLES_FILE, data_dir)
    widths = {"two-prime": 5, "three-prime": 16}
    table = collections.OrderedDict()
    for section, lines in read_sections(text, path).items():
        if section not in widths:
            raise DataFileError("Unknown section {!r}".format(section), path)
        for lineno, line in lines:
            fields = split_fields(line, widths[section] + 1, path, lineno,
                                  sep=None)
            values = [parse_int(f, path, lineno) for f in fields]
            table[values[0]] = (section, tuple(values[1:]))
    return table


def load_genus_errata(data_dir=None):
    """Reads the known misprints of the golden genus tables into
    {N: {column: Erratum}}
    """
    path, text = read_data(GENUS_ERRATA_FILE, data_dir)
    errata = collections.OrderedDict()
    for lineno, line in iter_lines(text):
        N, column, printed, corrected, note = split_fields(
            line, 5, path, lineno)
        N = parse_int(N, path, lineno, "level")
        printed = parse_int(printed, path, lineno, "genus")
        corrected = parse_int(corrected, path, lineno, "genus")
        if printed == corrected:
            raise DataFileError("Erratum without a correction", path,
                                lineno)
        row = errata.setdefault(N, {})
        if column in row:
            raise DuplicateLabel("Duplicate erratum for level {} column "
                                 "{}".format(N, column), path, lineno)
        row[column] = Erratum(N, column, printed, corrected, note, lineno)
    logger.debug("Loaded errata for {} levels from {}".format(
        len(errata), path))
    return errata


def load_fixtables(data_dir=None):
    """Reads the golden fixed point tables into {N: [FixRow]}
    """
    path, text = read_data(FIXTABLES_FILE, data_dir)
    table = collections.OrderedDict()
    for lineno, line in iter_lines(text):
        N, element, count = split_fields(line, 3, path, lineno)
        N = parse_int(N, path, lineno, "level")
        count = parse_int(count, path, lineno, "count")
        table.setdefault(N, []).append(FixRow(N, element, count, lineno))
    return table
