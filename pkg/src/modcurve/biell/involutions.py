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


"""Fixed points of involutions of X0(N) and genera of quotients by groups
of involutions.

Besides the Atkin-Lehner involutions w_d the following elements of the
normalizer of Gamma0(N) are modelled:

* for 4 | N, with 2^a || N, the involution S2 and its conjugates
  S2C = w_{2^a} S2 w_{2^a} and V2 = S2 w_{2^a} S2. Together with w_{2^a}
  they generate a dihedral group of order 8 (a >= 3) or 6 (a = 2), and
  they commute with every w_r, r odd;
* for 9 || N, the involution V3, with w_d V3 = V3 w_9^e(d) w_d where e(d)
  is 0 when the part of d prime to 3 is 1 mod 3, and 1 otherwise.
"""

from functools import lru_cache

from modcurve.biell import logger
from modcurve.biell.config import FIELD_Q
from modcurve.biell.config import FIELD_Q_SQRT_M3
from modcurve.biell.errors import IntegrityError
from modcurve.biell.errors import OrderViolation
from modcurve.biell.modsym import invariant_genus
from modcurve.biell.ntheory import ALSubgroup
from modcurve.biell.ntheory import class_number
from modcurve.biell.ntheory import factor
from modcurve.biell.ntheory import hall_divisors
from modcurve.biell.ntheory import hall_product
from modcurve.biell.ntheory import is_hall
from modcurve.biell.x0invariants import genus_x0

AL = "AL"
S2 = "S2"
S2C = "S2C"
V2 = "V2"
V3 = "V3"

KINDS = (AL, S2, S2C, V2, V3)

# dihedral elements (k, f) stand for rho^k s^f
IDENTITY2 = (0, 0)

RULE_DIHEDRAL_6 = "S2 and w4 generate a group of order 6 when 4 || N"
RULE_DIHEDRAL_8 = "S2, V2 and w_2^a generate a dihedral group of order 8"
RULE_V3_ORDER_4 = "V3*w_r has order 4 when r = 2 mod 3"
RULE_MIXED = "no commutation rule between S2, V2 and V3"


def two_part(N):
    """Returns (a, 2^a) with 2^a || N
    """
    alpha = factor(N).exponent(2)
    return alpha, 2 ** alpha


def dihedral_order(N):
    """Order of the rotation subgroup modelling <S2, w_2^a>
    """
    alpha, _ = two_part(N)
    if alpha < 2:
        return None
    return 4 if alpha >= 3 else 3


def dihedral_mul(n, x, y):
    k1, f1 = x
    k2, f2 = y
    k = (k1 + (-1) ** f1 * k2) % n
    return k, (f1 + f2) % 2


def has_s2(N):
    return N % 4 == 0


def has_v3(N):
    return N % 9 == 0 and N % 27 != 0


def twist(d):
    """Exponent e(d) of w_9 in w_d V3 = V3 w_9^e(d) w_d
    """
    r = d // 9 if d % 9 == 0 else d
    return 0 if r % 3 == 1 else 1


def _dihedral_code(N, kind):
    n = dihedral_order(N)
    codes = {
        S2: (0, 1),
        V2: (1, 1),
        AL: (3, 1) if n == 4 else (2, 1),
        S2C: (2, 1) if n == 4 else (1, 1),
    }
    return codes[kind]


class ExtInvolution(object):
    """An involution of X0(N): w_d, S2*w_r, S2C*w_r, V2*w_d or V3*w_d. The
    identity is AL with d = 1
    """

    __slots__ = ("N", "kind", "d")

    def __init__(self, N, kind=AL, d=1):
        if kind not in KINDS:
            raise ValueError("Unknown involution kind {!r}".format(kind))
        if not is_hall(d, N):
            raise ValueError("{} is not a Hall divisor of {}".format(d, N))
        alpha, q = two_part(N)
        if kind in (S2, S2C, V2) and not has_s2(N):
            raise ValueError("{} needs 4 | N, got N = {}".format(kind, N))
        if kind == V3 and not has_v3(N):
            raise ValueError("V3 needs 9 || N, got N = {}".format(N))
        if kind in (S2, S2C) and d % 2 == 0:
            raise OrderViolation(kind, "w{}".format(q), RULE_DIHEDRAL_8
                                 if alpha >= 3 else RULE_DIHEDRAL_6)
        if kind == V2 and d % 2 == 0 and alpha < 3:
            raise OrderViolation(kind, "w{}".format(q), RULE_DIHEDRAL_6)
        if kind == V3 and twist(d) != 0:
            raise OrderViolation(kind, "w{}".format(d), RULE_V3_ORDER_4)
        if kind == S2C and alpha == 2:
            # w4 S2 w4 = S2 w4 S2 when 4 || N
            kind = V2
        self.N = N
        self.kind = kind
        self.d = d

    @classmethod
    def parse(cls, N, text):
        """Parses "w63", "S2", "S2*w15", "S2C*w5", "V2*w40", "V3*w7" or "1"
        """
        token = text.strip()
        if token in ("1", "id"):
            return cls(N)
        parts = [p.strip() for p in token.split("*")]
        kind, d = AL, 1
        for part in parts:
            if part in (S2, S2C, V2, V3):
                if kind != AL:
                    raise ValueError("Invalid involution {!r}".format(text))
                kind = part
            elif part.startswith("w") and part[1:].isdigit():
                e = int(part[1:])
                if not is_hall(e, N):
                    raise ValueError("{} is not an Atkin-Lehner involution "
                                     "of level {}".format(part, N))
                d = hall_product(d, e)
            else:
                raise ValueError("Invalid involution {!r}".format(text))
        return cls(N, kind, d)

    def is_identity(self):
        return self.kind == AL and self.d == 1

    def is_al(self):
        return self.kind == AL

    def __eq__(self, other):
        if not isinstance(other, ExtInvolution):
            return NotImplemented
        return (self.N, self.kind, self.d) == (other.N, other.kind, other.d)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.N, self.kind, self.d))

    def sort_key(self):
        return (KINDS.index(self.kind), hall_divisors(self.N).index(self.d))

    def __str__(self):
        if self.kind == AL:
            return "w{}".format(self.d) if self.d > 1 else "1"
        if self.d == 1:
            return self.kind
        return "{}*w{}".format(self.kind, self.d)

    def __repr__(self):
        return "ExtInvolution({}, {})".format(self.N, self)

    def encode(self):
        """Returns (dihedral part, V3 exponent, odd or full AL part)
        """
        N = self.N
        if has_s2(N):
            n = dihedral_order(N)
            _, q = two_part(N)
            m = self.d // q if self.d % q == 0 else self.d
            if self.kind == AL or self.kind == V3:
                x = _dihedral_code(N, AL) if self.d % q == 0 else IDENTITY2
            elif self.kind == V2 and self.d % q == 0:
                x = dihedral_mul(n, _dihedral_code(N, V2),
                                 _dihedral_code(N, AL))
            else:
                x = _dihedral_code(N, self.kind)
        else:
            x, m = None, self.d
        return x, int(self.kind == V3), m

    @classmethod
    def decode(cls, N, code):
        """Inverse of encode. Returns None for elements of order > 2
        """
        x, v, m = code
        if x is None:
            if v:
                return cls(N, V3, m) if twist(m) == 0 else None
            return cls(N, AL, m)
        n = dihedral_order(N)
        _, q = two_part(N)
        w = _dihedral_code(N, AL)
        if v:
            if x not in (IDENTITY2, w):
                return None
            d = m * q if x == w else m
            return cls(N, V3, d) if twist(d) == 0 else None
        if x == IDENTITY2:
            return cls(N, AL, m)
        if x == w:
            return cls(N, AL, m * q)
        if x == (0, 1):
            return cls(N, S2, m)
        if x == (1, 1):
            return cls(N, V2, m)
        if n == 4 and x == (2, 1):
            return cls(N, S2C, m)
        if n == 4 and x == (2, 0):
            return cls(N, V2, m * q)
        return None

    def field(self, W=None):
        """Field of definition of the involution induced on X0(N)/W
        """
        if self.kind == V3 and (W is None or 9 not in W):
            return FIELD_Q_SQRT_M3
        return FIELD_Q


def compose(a, b):
    """Product a*b of two commuting involutions (or the identity)
    """
    if a.N != b.N:
        raise ValueError("Elements of levels {} and {}".format(a.N, b.N))
    N = a.N
    x, u, m = a.encode()
    y, v, k = b.encode()
    n = dihedral_order(N)
    if (u or v) and x is not None:
        w = _dihedral_code(N, AL)
        if x not in (IDENTITY2, w) or y not in (IDENTITY2, w):
            raise OrderViolation(a, b, RULE_MIXED)
    left_al = a.d
    twist_exp = v * twist(left_al) if u or v else 0
    d = hall_product(m, k)
    if twist_exp:
        d = hall_product(d, 9)
    z = dihedral_mul(n, x, y) if x is not None else None
    product = ExtInvolution.decode(N, (z, (u + v) % 2, d))
    if product is None:
        raise OrderViolation(a, b, violated_rule(a, b))
    return product


def violated_rule(a, b):
    if V3 in (a.kind, b.kind):
        if a.kind in (S2, S2C, V2) or b.kind in (S2, S2C, V2):
            return RULE_MIXED
        return RULE_V3_ORDER_4
    alpha, _ = two_part(a.N)
    return RULE_DIHEDRAL_8 if alpha >= 3 else RULE_DIHEDRAL_6


class InvolutionGroup(object):
    """A group of involutions of X0(N), every non trivial element being an
    involution
    """

    def __init__(self, N, elements, generators=()):
        self.N = N
        self.elements = frozenset(elements)
        self.generators = tuple(generators)

    def __iter__(self):
        return iter(sorted(self.elements, key=lambda e: e.sort_key()))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, element):
        return element in self.elements

    def __eq__(self, other):
        if not isinstance(other, InvolutionGroup):
            return NotImplemented
        return self.N == other.N and self.elements == other.elements

    def __hash__(self):
        return hash((self.N, self.elements))

    @property
    def order(self):
        return len(self.elements)

    def al_subgroup(self):
        """Atkin-Lehner elements of the group
        """
        return ALSubgroup(self.N, [e.d for e in self.elements if e.is_al()])

    def is_al(self):
        return all(e.is_al() for e in self.elements)

    def label(self):
        return "<{}>".format(",".join(str(g) for g in self.generators))

    def __repr__(self):
        return "InvolutionGroup({}, {})".format(self.N, sorted(
            str(e) for e in self.elements))


def group_closure(N, generators):
    """Closes the generators under composition. Raises OrderViolation on the
    first product that is not an involution
    """
    generators = [g if isinstance(g, ExtInvolution)
                  else ExtInvolution.parse(N, g) for g in generators]
    elements = {ExtInvolution(N)}
    frontier = list(elements)
    while frontier:
        grown = []
        for element in frontier:
            for g in generators:
                product = compose(element, g)
                if product not in elements:
                    elements.add(product)
                    grown.append(product)
        frontier = grown
    # closed under right multiplication by generators, check all products
    for a in elements:
        for b in elements:
            compose(a, b)
    return InvolutionGroup(N, elements, generators)


def al_group(W):
    """InvolutionGroup of the Atkin-Lehner subgroup W
    """
    N = W.N
    return InvolutionGroup(
        N, [ExtInvolution(N, AL, d) for d in W],
        [ExtInvolution(N, AL, d) for d in W.generators])


@lru_cache(maxsize=None)
def fix_al(N, Q):
    """Number of fixed points of w_Q on X0(N)
    """
    if not is_hall(Q, N) or Q == 1:
        raise ValueError("w{} is not a non trivial Atkin-Lehner involution "
                         "of level {}".format(Q, N))
    genus = genus_x0(N)
    h = invariant_genus(N, ALSubgroup.generated(N, [Q]))
    count = 2 * genus + 2 - 4 * h
    if count < 0:
        raise IntegrityError("Negative fixed point count for w{} at level "
                             "{}".format(Q, N))
    return count


def fix_al_classnumber_crosscheck(N):
    """Fixed points of the Fricke involution of a squarefree level N > 3
    from class numbers
    """
    if N <= 3 or any(e > 1 for _, e in factor(N)):
        raise ValueError("{} is not a squarefree level above 3".format(N))
    count = class_number(-4 * N)
    if N % 4 == 3:
        count += class_number(-N)
    return count


def _check_s2(N):
    if not has_s2(N):
        raise ValueError("S2 needs 4 | N, got N = {}".format(N))


def _check_odd(N, r):
    if r % 2 == 0 or not is_hall(r, N):
        raise ValueError("{} is not an odd Hall divisor of {}".format(r, N))


@lru_cache(maxsize=None)
def fix_s2(N):
    """Fixed points of S2 (and of w_2^a S2 w_2^a) on X0(N)
    """
    _check_s2(N)
    return (2 * genus_x0(N) - 2) - 2 * (2 * genus_x0(N // 2) - 2)


@lru_cache(maxsize=None)
def fix_s2_wr(N, r):
    """Fixed points of S2*w_r on X0(N), r odd
    """
    _check_s2(N)
    _check_odd(N, r)
    if r == 1:
        return fix_s2(N)
    return 2 * fix_al(N // 2, r) - fix_al(N, r)


def fix_v2(N, r=1):
    """Fixed points of V2*w_r on X0(N), r odd
    """
    _check_s2(N)
    _check_odd(N, r)
    _, q = two_part(N)
    return fix_al(N, q * r)


@lru_cache(maxsize=None)
def fix_v2_w2a(N, r=1):
    """Fixed points of V2*w_2^a*w_r on X0(N), r odd, 2^a || N with a >= 3
    """
    _check_s2(N)
    _check_odd(N, r)
    alpha, q = two_part(N)
    if alpha < 3:
        raise OrderViolation(V2, "w{}".format(q), RULE_DIHEDRAL_6)
    return 2 * fix_s2_wr(N // 2, r) - fix_s2_wr(N, r)


def fix_v3(N, r=1):
    """Fixed points of V3*w_r on X0(N), 9 || N
    """
    if not has_v3(N):
        raise ValueError("V3 needs 9 || N, got N = {}".format(N))
    if not is_hall(r, N):
        raise ValueError("{} is not a Hall divisor of {}".format(r, N))
    if twist(r):
        raise OrderViolation(V3, "w{}".format(r), RULE_V3_ORDER_4)
    s = r // 9 if r % 9 == 0 else r
    return fix_al(N, 9 * s)


def fix_count(element):
    """Number of fixed points of an involution of X0(N)
    """
    N, d = element.N, element.d
    if element.kind == AL:
        return fix_al(N, d)
    if element.kind in (S2, S2C):
        return fix_s2_wr(N, d)
    if element.kind == V2:
        _, q = two_part(N)
        if d % q == 0:
            return fix_v2_w2a(N, d // q)
        return fix_v2(N, d)
    return fix_v3(N, d)


def quotient_genus_hurwitz(N, G):
    """Genus h of X0(N)/G from |G|(2h - 2) + sum #(w, X0(N)) = 2g - 2
    """
    total = sum(fix_count(e) for e in G.elements if not e.is_identity())
    numerator = 2 * genus_x0(N) - 2 - total
    order = G.order
    if numerator % order or (numerator // order) % 2:
        raise IntegrityError("No integral quotient genus for {}: "
                             "{} = {}(2h - 2)".format(G, numerator, order))
    h = (numerator // order + 2) // 2
    if h < 0:
        raise IntegrityError("Negative quotient genus for {}".format(G))
    return h


def involutions(N):
    """All modelled involutions of X0(N), in table order
    """
    elements = [ExtInvolution(N, AL, d) for d in hall_divisors(N)[1:]]
    if has_s2(N):
        alpha, q = two_part(N)
        odd = [d for d in hall_divisors(N) if d % 2]
        elements += [ExtInvolution(N, S2, r) for r in odd]
        if alpha >= 3:
            elements += [ExtInvolution(N, S2C, r) for r in odd]
        elements += [ExtInvolution(N, V2, r) for r in odd]
        if alpha >= 3:
            elements += [ExtInvolution(N, V2, q * r) for r in odd]
    if has_v3(N):
        elements += [ExtInvolution(N, V3, d) for d in hall_divisors(N)
                     if twist(d) == 0]
    return sorted(elements, key=lambda e: e.sort_key())


class FixTable(object):
    """Fixed point counts of every modelled involution of X0(N)
    """

    def __init__(self, N, elements=None):
        self.N = N
        elements = involutions(N) if elements is None else elements
        self.entries = [(e, fix_count(e)) for e in elements]
        logger.debug("Fixed point table of level {}: {} entries".format(
            N, len(self.entries)))

    def __getitem__(self, element):
        if not isinstance(element, ExtInvolution):
            element = ExtInvolution.parse(self.N, element)
        for e, count in self.entries:
            if e == element:
                return count
        raise KeyError(str(element))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def to_tsv(self):
        lines = ["element\tcount"]
        lines += ["{}\t{}".format(e, count) for e, count in self.entries]
        return "\n".join(lines) + "\n"
