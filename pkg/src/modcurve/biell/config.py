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


# Environment variable naming a directory with data files that take
# precedence over the ones shipped with the package. Files are looked up by
# the same names as below
DATA_DIR_ENV = "MODCURVE_BIELL_DATA"

# Environment variable that enables the exhaustive test sweeps
FULL_TESTS_ENV = "MODCURVE_BIELL_FULL"

# Levels where X0*(N) has genus 0, 1 or 2, the hyperelliptic X0*(N) of
# higher genus and the bielliptic X0*(N). One section per list
STARGATE_FILE = "stargate.txt"

# SHA-256 of the shipped star-gate table. A changed table is rejected
STARGATE_SHA256 = (
    "570deb0fcfa51b3f075e5af99d12146d2ada57b0b6a600c364da32368048ea46")

# Elliptic curves: "label conductor rank degree", "-" for an unknown value
EC_TABLE_FILE = "ec_table.txt"

# Verdicts taken from the literature for pairs the rules cannot decide:
# "N;generators;verdict;citation"
ADJUDICATIONS_FILE = "adjudications.txt"

# Hyperelliptic quotients X0(N)/W: "N;generators;genus"
HYPERELLIPTIC_FILE = "hyperelliptic.txt"

# Known bielliptic involutions and elliptic quotients per pair:
# "N;generators;involutions;labels"
ANNOTATIONS_FILE = "annotations.txt"

# Golden genus tables, one row of subgroup genera per level
GENUS_TABLES_FILE = "genus_tables.txt"

# Cells of the golden genus tables known to be misprinted:
# "N;column;printed;corrected;note"
GENUS_ERRATA_FILE = "genus_errata.txt"

# Golden list of bielliptic pairs that are not double covers of an
# elliptic X0*(N): "N;generators;genus"
BIELLIPTIC_FILE = "bielliptic.txt"

# Golden fixed-point tables: "N;element;count"
FIXTABLES_FILE = "fixtables.txt"

# An involution with more fixed points than this is either the bielliptic
# involution or the curve is not bielliptic
FIXED_POINT_THRESHOLD = 8

# Genus from which a bielliptic involution is unique and central, so the
# structural rules (2-group, lift, point counting) apply
STRUCTURAL_MIN_GENUS = 6

# Primes tried for the point-counting bound over F_{p^2}
OGG_PRIMES = (2, 3, 5, 7, 11, 13)

# Levels in the star-gate lists left out of the enumeration. For N = 420
# every proper subgroup is ruled out by the fixed-point closure argument
# and the full quotient X0*(420) is outside the pairs considered
EXCLUDED_LEVELS = (420,)

# Supported report formats
REPORT_FORMATS = ("markdown", "csv", "json")

# Field tags of a bielliptic involution
FIELD_Q = "Q"
FIELD_Q_SQRT_M3 = "Q(sqrt-3)"

# Pair statuses
STATUS_GENUS_TOO_SMALL = "genus-too-small"
STATUS_HYPERELLIPTIC = "hyperelliptic"
STATUS_BIELLIPTIC = "bielliptic-confirmed"
STATUS_EXCLUDED = "excluded"
STATUS_ADJUDICATED = "adjudicated"
STATUS_INCONCLUSIVE = "inconclusive"

# Adjudicated verdicts
VERDICT_NOT_BIELLIPTIC = "not-bielliptic"
VERDICT_BIELLIPTIC_OVER = "bielliptic-over"

# Rule verdicts
EXCLUDES = "excludes"
REDUCES = "reduces"
CONFIRMS = "confirms"
INCONCLUSIVE = "inconclusive"
CONSISTENT = "consistent"
MUST_FACTOR = "must-factor"
