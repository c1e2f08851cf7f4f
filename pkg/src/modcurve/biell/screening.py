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

"""Criteria deciding whether a quotient X = X0(N)/W can be bielliptic.

Every rule is a pure function returning one of the verdict constants of
the config module. `screen_pair` runs the rules that apply to a pair and
returns the ordered trace of Verdict objects.
"""

import collections
from functools import lru_cache

from modcurve.biell import logger
from modcurve.biell.config import CONSISTENT
from modcurve.biell.config import EXCLUDES
from modcurve.biell.config import FIXED_POINT_THRESHOLD
from modcurve.biell.config import INCONCLUSIVE
from modcurve.biell.config import MUST_FACTOR
from modcurve.biell.config import OGG_PRIMES
from modcurve.biell.config import REDUCES
from modcurve.biell.config import STRUCTURAL_MIN_GENUS
from modcurve.biell.datafiles import load_stargate
from modcurve.biell.errors import MissingDataError
from modcurve.biell.errors import NotApplicable
from modcurve.biell.errors import OrderViolation
from modcurve.biell.involutions import AL
from modcurve.biell.involutions import ExtInvolution
from modcurve.biell.involutions import V2
from modcurve.biell.involutions import V3
from modcurve.biell.involutions import compose
from modcurve.biell.involutions import fix_al
from modcurve.biell.involutions import group_closure
from modcurve.biell.involutions import has_v3
from modcurve.biell.involutions import involutions
from modcurve.biell.involutions import quotient_genus_hurwitz
from modcurve.biell.involutions import twist
from modcurve.biell.involutions import two_part
from modcurve.biell.modsym import invariant_genus
from modcurve.biell.ntheory import ALSubgroup
from modcurve.biell.ntheory import al_subgroups
from modcurve.biell.ntheory import factor
from modcurve.biell.ntheory import hall_divisors
from modcurve.biell.ntheory import hall_product
from modcurve.biell.ntheory import psi
from sympy import isprime

# star gate outcomes
GENUS0 = "genus0"
GENUS1 = "genus1"
HYPERELLIPTIC = "hyperelliptic"
BIELLIPTIC = "bielliptic"
FAILS_GATE = "fails-gate"

StarGate = collections.namedtuple("StarGate", ["kind", "genus"])


class Rule(object):
    """A screening criterion with a stable identifier and its citation.
    Rules with pair_level False only rule out one candidate elliptic
    quotient, never the pair
    """

    __slots__ = ("id", "citation", "pair_level")

    def __init__(self, id, citation, pair_level=True):
        self.id = id
        self.citation = citation
        self.pair_level = pair_level

    def __repr__(self):
        return "Rule({})".format(self.id)


RULES = collections.OrderedDict((rule.id, rule) for rule in (
    Rule("star_gate",
         "a bielliptic X0(N)/W lies over an X0*(N) that is bielliptic, "
         "hyperelliptic or of genus at most one"),
    Rule("iso_reduce_w4",
         "X0(4M)/<w4, W'> is isomorphic to X0(2M)/W' for M odd"),
    Rule("iso_reduce_v3",
         "V3 conjugates X0(N)/W to X0(N)/W'' over Q(sqrt-3)"),
    Rule("ogg_bound",
         "supersingular points and cusps over F_{p^2} of a curve "
         "bielliptic over Q"),
    Rule("castelnuovo",
         "castelnuovo inequality g <= d*h + d + 1 or the map factors over "
         "the bielliptic quotient"),
    Rule("many_fixed_points",
         "an involution with more than 8 fixed points is the bielliptic "
         "involution"),
    Rule("modular_degree",
         "the modular degree of the optimal quotient divides 2|W|",
         pair_level=False),
    Rule("unramified_cover",
         "unramified covering criterion over a non hyperelliptic quotient"),
    Rule("hyperelliptic_lift",
         "the bielliptic involution induces the hyperelliptic involution "
         "of a ramified quotient"),
    Rule("two_group",
         "a 2-group of order not dividing 2(g-1) holds the bielliptic "
         "involution"),
    Rule("fixed_point_closure",
         "fixed point bearing w_d lie in W over a non subhyperelliptic "
         "X0*(N)"),
))


class Verdict(object):
    """Outcome of one rule on one pair, with the inputs it was fed
    """

    __slots__ = ("rule", "outcome", "inputs", "detail")

    def __init__(self, rule, outcome, inputs=(), detail=""):
        if rule not in RULES:
            raise ValueError("Unknown rule {!r}".format(rule))
        self.rule = rule
        self.outcome = outcome
        self.inputs = tuple(inputs)
        self.detail = detail

    @property
    def citation(self):
        return RULES[self.rule].citation

    def excludes_pair(self):
        return self.outcome == EXCLUDES and RULES[self.rule].pair_level

    def to_dict(self):
        return collections.OrderedDict([
            ("rule", self.rule),
            ("citation", self.citation),
            ("inputs", collections.OrderedDict(
                (k, str(v)) for k, v in self.inputs)),
            ("verdict", self.outcome),
            ("detail", self.detail),
        ])

    def __str__(self):
        inputs = " ".join("{}={}".format(k, v) for k, v in self.inputs)
        text = "{} [{}] {} -> {}".format(
            self.rule, self.citation, inputs, self.outcome)
        if self.detail:
            text = "{} ({})".format(text, self.detail)
        return text

    def __repr__(self):
        return "Verdict({}, {})".format(self.rule, self.outcome)


class StarGateTables(object):
    """Classification of the quotients X0*(N) by genus, hyperellipticity
    and biellipticity
    """

    def __init__(self, genus0=(), genus1=(), genus2=(), hyperelliptic=None,
                 bielliptic=None):
        self.genus0 = frozenset(genus0)
        self.genus1 = frozenset(genus1)
        self.genus2 = frozenset(genus2)
        self.hyperelliptic = dict(hyperelliptic or {})
        self.bielliptic = dict(bielliptic or {})

    @classmethod
    def load(cls, data_dir=None):
        sections = load_stargate(data_dir)

        def levels(name):
            return [N for N, _ in sections.get(name, [])]

        return cls(genus0=levels("genus0"),
                   genus1=levels("genus1"),
                   genus2=levels("genus2"),
                   hyperelliptic=dict(sections.get("hyperelliptic", [])),
                   bielliptic=dict(sections.get("bielliptic", [])))

    def levels(self):
        return sorted(self.genus0 | self.genus1 | self.genus2 |
                      set(self.hyperelliptic) | set(self.bielliptic))

    def __contains__(self, N):
        return (N in self.genus0 or N in self.genus1 or N in self.genus2 or
                N in self.hyperelliptic or N in self.bielliptic)

    def star_genus(self, N):
        """Genus of X0*(N) for a listed level, None otherwise
        """
        gate = star_gate(N, self) if is_gate_level(N) else None
        return gate.genus if gate else None

    def is_star_hyperelliptic(self, N):
        return N in self.genus2 or N in self.hyperelliptic

    def is_star_non_subhyperelliptic(self, N):
        """Returns whether X0*(N) is known to have genus at least 3 and to
        not be hyperelliptic
        """
        return (N in self.bielliptic and N not in self.hyperelliptic and
                self.bielliptic[N] >= 3)


def is_gate_level(N):
    """Returns whether N is neither squarefree nor a prime power
    """
    if N < 1:
        return False
    factors = factor(N)
    return len(factors) > 1 and any(e > 1 for _, e in factors)


def star_gate(N, tables):
    """Classifies X0*(N) from the star-gate tables. The hyperelliptic lists
    take precedence over the bielliptic one
    """
    if not is_gate_level(N):
        raise ValueError("{} is squarefree or a prime power".format(N))
    if N in tables.genus0:
        return StarGate(GENUS0, 0)
    if N in tables.genus1:
        return StarGate(GENUS1, 1)
    if N in tables.genus2:
        return StarGate(HYPERELLIPTIC, 2)
    if N in tables.hyperelliptic:
        return StarGate(HYPERELLIPTIC, tables.hyperelliptic[N])
    if N in tables.bielliptic:
        return StarGate(BIELLIPTIC, tables.bielliptic[N])
    return StarGate(FAILS_GATE, None)


def rule_castelnuovo(gX, d, gY):
    if d < 2 or gX < 0 or gY < 0:
        raise ValueError("Invalid castelnuovo input ({}, {}, {})".format(
            gX, d, gY))
    if gX > d * gY + d + 1:
        return MUST_FACTOR
    return CONSISTENT


def rule_many_fixed_points(fix_count, quotient_is_elliptic):
    if fix_count < 0:
        raise ValueError("Negative fixed point count {}".format(fix_count))
    if fix_count > FIXED_POINT_THRESHOLD and not quotient_is_elliptic:
        return EXCLUDES
    return INCONCLUSIVE


def rule_unramified_cover(g, group_order, h, y_hyperelliptic):
    """Coverings X -> Y = X/G of a curve of genus h >= 2. When Y is
    not hyperelliptic the covering of a bielliptic X is unramified
    """
    if h < 2:
        raise ValueError("The quotient must have genus at least 2, "
                         "got {}".format(h))
    if not y_hyperelliptic and g - 1 != group_order * (h - 1):
        return EXCLUDES
    return INCONCLUSIVE


def rule_two_group(g, order, has_bielliptic_element=False):
    if order < 1 or order & (order - 1):
        raise ValueError("{} is not a power of 2".format(order))
    if g < STRUCTURAL_MIN_GENUS or has_bielliptic_element:
        return INCONCLUSIVE
    if (2 * (g - 1)) % order:
        return EXCLUDES
    return INCONCLUSIVE


def rule_ogg_bound(N, w_order, p):
    """psi(N)/|W| <= 12 (2(p + 1)^2 - 1)/(p - 1) for X0(N)/W bielliptic
    over Q and p prime to N
    """
    if not isprime(p):
        raise ValueError("{} is not a prime".format(p))
    if N % p == 0:
        raise ValueError("{} divides the level {}".format(p, N))
    if psi(N) * (p - 1) > 12 * (2 * (p + 1) ** 2 - 1) * w_order:
        return EXCLUDES
    return INCONCLUSIVE


def rule_modular_degree(w_order, degree):
    if degree is None:
        raise MissingDataError("No modular degree available")
    if (2 * w_order) % degree:
        return EXCLUDES
    return INCONCLUSIVE


def rule_hyperelliptic_lift(g, ramified, y_hyperelliptic, lift_genera):
    """A bielliptic involution of X of genus g >= 6 over a ramified
    hyperelliptic quotient Y is one of the lifts of the hyperelliptic
    involution of Y. Excludes when no lift has an elliptic quotient
    """
    if g < STRUCTURAL_MIN_GENUS or not ramified or not y_hyperelliptic:
        return INCONCLUSIVE
    if 1 in lift_genera:
        return INCONCLUSIVE
    return EXCLUDES


def rule_fixed_point_closure(N, W, gstar):
    """Over a non subhyperelliptic X0*(N) of genus gstar the covering
    X0(N)/W -> X0*(N) is unramified
    """
    if not isinstance(W, ALSubgroup):
        W = ALSubgroup.generated(N, W)
    if gstar is None or gstar < 3:
        raise NotApplicable("X0*({}) is subhyperelliptic".format(N))
    ramified = [d for d in hall_divisors(N)[1:]
                if d not in W and fix_al(N, d) > 0]
    if ramified:
        return EXCLUDES, ramified
    index = len(hall_divisors(N)) // W.order
    if subgroup_genus(W) - 1 != index * (gstar - 1):
        return EXCLUDES, []
    return INCONCLUSIVE, []


def iso_reduce_w4(N, W):
    """Returns (N/2, W') with X0(N)/W isomorphic to X0(N/2)/W' when 4 || N
    and w4 lies in W
    """
    if not isinstance(W, ALSubgroup):
        W = ALSubgroup.generated(N, W)
    if N % 4 or N % 8 == 0:
        raise NotApplicable("4 || N fails for N = {}".format(N))
    if 4 not in W:
        raise NotApplicable("w4 is not in {}".format(W.label()))
    M = N // 2
    return M, ALSubgroup(M, [d for d in W if d % 2])


def iso_reduce_v3(N, W):
    """Image of W under conjugation by V3: w_d goes to w_d w_9^e(d)
    """
    if not isinstance(W, ALSubgroup):
        W = ALSubgroup.generated(N, W)
    if not has_v3(N):
        raise NotApplicable("9 || N fails for N = {}".format(N))
    return ALSubgroup(N, [hall_product(d, 9) if twist(d) else d for d in W])


@lru_cache(maxsize=None)
def subgroup_genus(W):
    """Genus of X0(N)/W for an Atkin-Lehner subgroup W
    """
    return invariant_genus(W.N, W)


@lru_cache(maxsize=None)
def extended_genus(G):
    """Genus of X0(N)/G for a group of modelled involutions
    """
    if G.is_al():
        return subgroup_genus(G.al_subgroup())
    return quotient_genus_hurwitz(G.N, G)


def generators_of(W):
    return [ExtInvolution(W.N, AL, d) for d in W.generators]


@lru_cache(maxsize=None)
def extend(W, element):
    """Returns the group generated by W and the element when it has order
    2|W|, None when the element does not commute with W or lies in it
    """
    generators = generators_of(W) + [element]
    try:
        G = group_closure(W.N, generators)
    except OrderViolation:
        return None
    if G.order != 2 * W.order:
        return None
    return G


@lru_cache(maxsize=None)
def commuting_extensions(W):
    """Distinct groups <W, v> of order 2|W| for the modelled involutions v,
    as a tuple of (v, group)
    """
    found = []
    seen = set()
    for element in involutions(W.N):
        if element.is_al() and element.d in W:
            continue
        G = extend(W, element)
        if G is None or G in seen:
            continue
        seen.add(G)
        found.append((element, G))
    return tuple(found)


def central_involutions(N):
    """Extra involutions commuting with every w_d: V2 when 8 | N and V3 when
    every Hall divisor has a trivial twist
    """
    found = []
    alpha, _ = two_part(N)
    if alpha >= 3:
        found.append(ExtInvolution(N, V2))
    if has_v3(N) and all(twist(d) == 0 for d in hall_divisors(N)):
        found.append(ExtInvolution(N, V3))
    return found


class ScreeningContext(object):
    """Data the rules consult: star-gate tables, known hyperelliptic pairs
    and modular degrees of optimal curves by conductor
    """

    def __init__(self, tables, hyperelliptic=None, degrees=None):
        self.tables = tables
        self.hyperelliptic = dict(hyperelliptic or {})
        self.degrees = dict(degrees or {})

    def is_hyperelliptic_pair(self, W):
        return W in self.hyperelliptic

    def known_non_hyperelliptic(self, W):
        """Returns whether X0(N)/W is known not to be hyperelliptic
        """
        N = W.N
        if N not in self.tables or W.is_trivial() or W.is_fricke():
            return False
        h = subgroup_genus(W)
        if h < 3:
            return False
        if W.is_full():
            return not self.tables.is_star_hyperelliptic(N)
        return W not in self.hyperelliptic


def proper_supergroups(W):
    return [U for U in al_subgroups(W.N) if W < U]


def has_elliptic_coset(W, elements):
    """Returns whether some element u outside W gives genus(<W, u>) = 1
    """
    for u in elements:
        if u.is_al() and u.d in W:
            continue
        G = extend(W, u)
        if G is not None and extended_genus(G) == 1:
            return True
    return False


def screen_castelnuovo(W, g, context):
    verdicts = []
    N = W.N
    if context.is_hyperelliptic_pair(W) and g >= 4:
        outcome = rule_castelnuovo(g, 2, 0)
        verdicts.append(Verdict(
            "castelnuovo", EXCLUDES if outcome == MUST_FACTOR else outcome,
            [("g", g), ("d", 2), ("h", 0)], "hyperelliptic of genus >= 4"))
    targets = []
    for U in proper_supergroups(W):
        elements = [ExtInvolution(N, AL, d) for d in U if d not in W]
        targets.append((U.label(), U.order // W.order, subgroup_genus(U),
                        elements))
    for element, G in commuting_extensions(W):
        if element.is_al():
            continue
        targets.append((G.label(), 2, extended_genus(G), [element]))
    for label, d, h, elements in targets:
        if rule_castelnuovo(g, d, h) != MUST_FACTOR:
            continue
        if h < 2 and has_elliptic_coset(W, elements):
            continue
        verdicts.append(Verdict(
            "castelnuovo", EXCLUDES, [("g", g), ("d", d), ("h", h)],
            "X0(N)/{} does not factor over an elliptic quotient".format(
                label)))
        break
    return verdicts


def screen_many_fixed_points(W, g):
    for element, G in commuting_extensions(W):
        h = extended_genus(G)
        count = 2 * g + 2 - 4 * h
        if rule_many_fixed_points(count, h == 1) == EXCLUDES:
            return [Verdict("many_fixed_points", EXCLUDES,
                            [("involution", element), ("fixed", count),
                             ("h", h)])]
    return []


def screen_ogg(W, g):
    if g < STRUCTURAL_MIN_GENUS:
        return []
    N = W.N
    verdict = None
    for p in OGG_PRIMES:
        if N % p == 0:
            continue
        outcome = rule_ogg_bound(N, W.order, p)
        verdict = Verdict("ogg_bound", outcome,
                          [("psi", psi(N)), ("order", W.order), ("p", p)])
        if outcome == EXCLUDES:
            break
    return [verdict] if verdict else []


def screen_modular_degree(W, context):
    verdicts = []
    for label, degree in context.degrees.get(W.N, ()):
        if degree is None:
            continue
        outcome = rule_modular_degree(W.order, degree)
        verdicts.append(Verdict(
            "modular_degree", outcome,
            [("label", label), ("degree", degree), ("order", W.order)]))
    return verdicts


def screen_unramified(W, g, context):
    for U in proper_supergroups(W):
        if not context.known_non_hyperelliptic(U):
            continue
        h = subgroup_genus(U)
        order = U.order // W.order
        if rule_unramified_cover(g, order, h, False) == EXCLUDES:
            return [Verdict("unramified_cover", EXCLUDES,
                            [("g", g), ("order", order), ("h", h),
                             ("quotient", U.label())])]
    return []


def screen_hyperelliptic_lift(W, g):
    if g < STRUCTURAL_MIN_GENUS:
        return []
    for U in proper_supergroups(W):
        h = subgroup_genus(U)
        order = U.order // W.order
        if h < 2 or g - 1 <= order * (h - 1):
            continue
        hyperelliptic = None
        for element, G in commuting_extensions(U):
            if extended_genus(G) == 0:
                hyperelliptic = element
                break
        if hyperelliptic is None:
            continue
        # lifts of the hyperelliptic involution of X0(N)/U to X
        try:
            lifts = [hyperelliptic] + [compose_al(hyperelliptic, d)
                                       for d in U if d not in W]
        except OrderViolation as e:
            logger.debug("Lift rule inconclusive for {}: {}".format(W, e))
            continue
        groups = [extend(W, lift) for lift in lifts]
        if None in groups:
            logger.debug("Lift rule inconclusive for {}: a lift does not "
                         "commute with W".format(W))
            continue
        lift_genera = [extended_genus(G) for G in groups]
        outcome = rule_hyperelliptic_lift(g, True, True, lift_genera)
        if outcome == EXCLUDES:
            return [Verdict("hyperelliptic_lift", EXCLUDES,
                            [("g", g), ("quotient", U.label()), ("h", h),
                             ("involution", hyperelliptic)])]
    return []


def compose_al(element, d):
    return compose(element, ExtInvolution(element.N, AL, d))


def screen_two_group(W, g):
    if g < STRUCTURAL_MIN_GENUS:
        return []
    N = W.N
    B = ALSubgroup.full(N)
    verdicts = []
    order = B.order // W.order
    if order > 1:
        cosets = [ExtInvolution(N, AL, d) for d in B if d not in W]
        outcome = rule_two_group(g, order, has_elliptic_coset(W, cosets))
        verdicts.append(Verdict(
            "two_group", outcome,
            [("g", g), ("order", order), ("group", "B/W")]))
        if outcome == EXCLUDES:
            return verdicts
    for v in central_involutions(N):
        elements = [ExtInvolution(N, AL, d) for d in B if d not in W]
        elements += [compose_al(v, d) for d in B]
        outcome = rule_two_group(g, 2 * order, has_elliptic_coset(W, elements))
        verdicts.append(Verdict(
            "two_group", outcome,
            [("g", g), ("order", 2 * order), ("group", "<B,{}>/W".format(v))]))
        if outcome == EXCLUDES:
            break
    return verdicts


def screen_fixed_point_closure(W, context):
    N = W.N
    if not context.tables.is_star_non_subhyperelliptic(N):
        return []
    gstar = context.tables.bielliptic[N]
    outcome, ramified = rule_fixed_point_closure(N, W, gstar)
    detail = ""
    if ramified:
        detail = "fixed points: {}".format(
            ",".join("w{}".format(d) for d in ramified))
    return [Verdict("fixed_point_closure", outcome,
                    [("gstar", gstar), ("index",
                                        len(hall_divisors(N)) // W.order)],
                    detail)]


def screen_star_gate(N, context):
    if not is_gate_level(N):
        return []
    gate = star_gate(N, context.tables)
    outcome = EXCLUDES if gate.kind == FAILS_GATE else INCONCLUSIVE
    return [Verdict("star_gate", outcome, [("N", N)], gate.kind)]


def screen_pair(N, W, context):
    """Runs the exclusion rules on X0(N)/W and returns the trace. Only a
    failed star gate or a genus below 2 ends screening early, otherwise
    every rule runs. The trace follows the precedence of the rules, so the
    first exclusion in it is the one reported for the pair
    """
    if not isinstance(W, ALSubgroup):
        W = ALSubgroup.generated(N, W)
    g = subgroup_genus(W)
    trace = screen_star_gate(N, context)
    if any(v.excludes_pair() for v in trace):
        return trace
    if g < 2:
        return trace
    trace += screen_ogg(W, g)
    trace += screen_castelnuovo(W, g, context)
    trace += screen_many_fixed_points(W, g)
    trace += screen_modular_degree(W, context)
    trace += screen_unramified(W, g, context)
    trace += screen_hyperelliptic_lift(W, g)
    trace += screen_two_group(W, g)
    trace += screen_fixed_point_closure(W, context)
    for verdict in trace:
        logger.debug("{} {}: {}".format(N, W.label(), verdict))
    return trace


def reduction_verdict(rule, N, W, M, U):
    return Verdict(rule, REDUCES, [("from", "{} {}".format(N, W.label())),
                                   ("to", "{} {}".format(M, U.label()))])


def excluded(trace):
    """Returns the first verdict of the trace that rules the pair out
    """
    for verdict in trace:
        if verdict.excludes_pair():
            return verdict
    return None
