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

"""Property sweeps. Bounds grow to the full ranges with MODCURVE_BIELL_FULL=1
"""

import unittest
from math import gcd

from modcurve.biell.atlas import check_classification
from modcurve.biell.atlas import classify_all
from modcurve.biell.atlas import compare_genus_row
from modcurve.biell.atlas import enumerate_pairs
from modcurve.biell.atlas import get_datasets
from modcurve.biell.atlas import klein_four_defects
from modcurve.biell.config import FIXED_POINT_THRESHOLD
from modcurve.biell.config import STRUCTURAL_MIN_GENUS
from modcurve.biell.datafiles import load_genus_errata
from modcurve.biell.errors import NotApplicable
from modcurve.biell.errors import OrderViolation
from modcurve.biell.involutions import al_group
from modcurve.biell.involutions import fix_al
from modcurve.biell.involutions import fix_al_classnumber_crosscheck
from modcurve.biell.involutions import fix_count
from modcurve.biell.involutions import FixTable
from modcurve.biell.involutions import group_closure
from modcurve.biell.involutions import has_v3
from modcurve.biell.involutions import involutions
from modcurve.biell.involutions import quotient_genus_hurwitz
from modcurve.biell.modsym import cuspidal_dim
from modcurve.biell.ntheory import al_subgroups
from modcurve.biell.ntheory import class_number
from modcurve.biell.ntheory import factor
from modcurve.biell.ntheory import is_discriminant
from modcurve.biell.ntheory import psi
from modcurve.biell.ntheory import reduce_form
from modcurve.biell.screening import iso_reduce_v3
from modcurve.biell.screening import iso_reduce_w4
from modcurve.biell.screening import RULES
from modcurve.biell.screening import screen_pair
from modcurve.biell.screening import subgroup_genus
from modcurve.biell.tests.base import BaseTestCase
from modcurve.biell.tests.base import full_run
from modcurve.biell.tests.base import golden_fixtables
from modcurve.biell.tests.base import golden_genus_tables
from modcurve.biell.x0invariants import genus_x0
from sympy import isprime

SAMPLE_LEVELS = (44, 60, 90, 126)

# one level for each way a pair gets decided
CLASSIFIED_LEVELS = (40, 44, 60, 99, 171, 284)

GENUS_TABLE_BOUND = 300


def reduced_classes(D):
    """Reduced forms reached by reducing every primitive form (a, b, c) of
    discriminant D with a and |b| in a box containing the reduced ones
    """
    bound = int((-D / 3.0) ** 0.5) + 1
    found = set()
    for a in range(1, bound + 1):
        for b in range(-2 * bound, 2 * bound + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if gcd(gcd(a, b), c) != 1:
                continue
            found.add(reduce_form(a, b, c))
    return found


def squarefree(N):
    return all(e == 1 for _, e in factor(N))


class NTheoryPropertiesTestCase(BaseTestCase):

    def test_class_number_matches_form_reduction(self):
        bound = self.sweep(-600, -5000)
        for D in range(-3, bound - 1, -1):
            if not is_discriminant(D):
                continue
            self.assertEqual(class_number(D), len(reduced_classes(D)), D)

    def test_fricke_fixed_points_from_class_numbers(self):
        bound = self.sweep(60, 200)
        for N in range(5, bound + 1):
            if not squarefree(N):
                continue
            self.assertEqual(fix_al(N, N), fix_al_classnumber_crosscheck(N),
                             N)


class GenusPropertiesTestCase(BaseTestCase):

    def test_cuspidal_dimension_is_twice_the_genus(self):
        bound = self.sweep(60, 300)
        for N in range(1, bound + 1):
            self.assertEqual(cuspidal_dim(N), 2 * genus_x0(N), N)

    def test_hurwitz_agrees_with_modular_symbols(self):
        levels = SAMPLE_LEVELS
        if full_run():
            levels = sorted(set(W.N for _, W in enumerate_pairs()))
        for N in levels:
            for W in al_subgroups(N):
                self.assertEqual(quotient_genus_hurwitz(N, al_group(W)),
                                 subgroup_genus(W), W)

    def test_fixed_points_of_every_involution(self):
        for N in (56, 90, 120, 126, 176):
            g = genus_x0(N)
            for element in involutions(N):
                G = group_closure(N, [element])
                h = quotient_genus_hurwitz(N, G)
                self.assertQuotientGenus(fix_count(element), g, h)

    def test_golden_genus_tables(self):
        tables = golden_genus_tables()
        errata = load_genus_errata()
        levels = [N for N in sorted(tables) if N <= GENUS_TABLE_BOUND]
        if full_run():
            levels = sorted(tables)
        self.assertIn(294, levels)
        for N in levels:
            _, printed = tables[N]
            mismatches, _ = compare_genus_row(N, printed, errata)
            self.assertEqual(mismatches, [], N)

    def test_klein_four_genus_relation(self):
        levels = [N for N in sorted(golden_genus_tables())
                  if N <= GENUS_TABLE_BOUND]
        for N in levels:
            self.assertEqual(klein_four_defects(N), [], N)

    def test_golden_fixtables(self):
        for N, rows in golden_fixtables().items():
            table = FixTable(N)
            for row in rows:
                self.assertEqual(table[row.element], row.count,
                                 "{} {}".format(N, row.element))


class OrderViolationTestCase(BaseTestCase):

    def test_s2_and_w4_when_4_exactly_divides(self):
        with self.assertRaises(OrderViolation):
            group_closure(28, ["S2", "w4"])

    def test_v3_and_a_twisted_involution(self):
        # 5 = 2 mod 3
        with self.assertRaises(OrderViolation):
            group_closure(45, ["V3", "w5"])


class ReductionPropertiesTestCase(BaseTestCase):

    def test_reductions_preserve_genus(self):
        levels = (60, 90, 126, 180, 252)
        pairs = enumerate_pairs(levels=levels)
        if full_run():
            pairs = enumerate_pairs()
        for N, W in pairs:
            try:
                M, U = iso_reduce_w4(N, W)
            except NotApplicable:
                pass
            else:
                self.assertSameGenus(W, U, subgroup_genus)
            if has_v3(N):
                self.assertSameGenus(W, iso_reduce_v3(N, W), subgroup_genus)


class ClassificationPropertiesTestCase(BaseTestCase):

    def test_classified_levels_match_the_listed_pairs(self):
        records = classify_all(levels=CLASSIFIED_LEVELS)
        self.assertEqual(sorted(set(r.N for r in records)),
                         list(CLASSIFIED_LEVELS))
        self.assertEqual(check_classification(records), [])


class ScreeningPreconditionsTestCase(BaseTestCase):
    """Every verdict in a trace comes from a rule whose hypotheses hold
    """

    def setUp(self):
        self.context = get_datasets().context()
        self.pairs = enumerate_pairs(levels=CLASSIFIED_LEVELS + (90, 126))
        if full_run():
            self.pairs = enumerate_pairs()

    def assertPreconditions(self, N, W, verdict):
        g = subgroup_genus(W)
        inputs = dict(verdict.inputs)
        where = "{} {} {}".format(N, W.label(), verdict)
        if verdict.rule == "star_gate":
            self.assertEqual(inputs["N"], N, where)
            return
        self.assertGreaterEqual(g, 2, where)
        if "g" in inputs:
            self.assertEqual(inputs["g"], g, where)
        if verdict.rule == "ogg_bound":
            self.assertGreaterEqual(g, STRUCTURAL_MIN_GENUS, where)
            self.assertTrue(isprime(inputs["p"]), where)
            self.assertNotEqual(N % inputs["p"], 0, where)
            self.assertEqual(inputs["psi"], psi(N), where)
            self.assertEqual(inputs["order"], W.order, where)
        elif verdict.rule in ("two_group", "hyperelliptic_lift"):
            self.assertGreaterEqual(g, STRUCTURAL_MIN_GENUS, where)
        if verdict.rule in ("hyperelliptic_lift", "unramified_cover"):
            self.assertGreaterEqual(inputs["h"], 2, where)
        if verdict.rule == "unramified_cover":
            self.assertNotEqual(g - 1, inputs["order"] * (inputs["h"] - 1),
                                where)
        elif verdict.rule == "castelnuovo":
            d, h = inputs["d"], inputs["h"]
            self.assertGreaterEqual(d, 2, where)
            self.assertGreaterEqual(h, 0, where)
            self.assertGreater(g, d * h + d + 1, where)
        elif verdict.rule == "many_fixed_points":
            self.assertEqual(inputs["fixed"], 2 * g + 2 - 4 * inputs["h"],
                             where)
            self.assertGreater(inputs["fixed"], FIXED_POINT_THRESHOLD, where)
            self.assertNotEqual(inputs["h"], 1, where)

    def test_verdicts_meet_their_hypotheses(self):
        for N, W in self.pairs:
            for verdict in screen_pair(N, W, self.context):
                self.assertPreconditions(N, W, verdict)

    def test_genus_below_two_only_reaches_the_star_gate(self):
        for N in CLASSIFIED_LEVELS:
            for W in al_subgroups(N):
                if subgroup_genus(W) >= 2:
                    continue
                rules = set(v.rule for v in screen_pair(N, W, self.context))
                self.assertLessEqual(rules, set(["star_gate"]), W)

    def test_first_exclusion_follows_the_rule_order(self):
        order = list(RULES)
        for N, W in self.pairs:
            trace = screen_pair(N, W, self.context)
            positions = [order.index(v.rule) for v in trace]
            self.assertEqual(positions, sorted(positions), W)



if __name__ == "__main__":
    unittest.main()
