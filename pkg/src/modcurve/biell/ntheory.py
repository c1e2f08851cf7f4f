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


"""Integer arithmetic used throughout: factorizations, unitary (Hall)
divisors, Kronecker symbols and class numbers of imaginary quadratic
orders.
"""

from functools import lru_cache
from math import gcd
from math import isqrt

from sympy import factorint
from sympy import isprime
from sympy.functions.combinatorial.numbers import legendre_symbol


class Factorization(object):
    """Canonical factorization of a positive integer
    """

    __slots__ = ("n", "factors")

    def __init__(self, n, factors):
        self.n = n
        self.factors = tuple(factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __eq__(self, other):
        if isinstance(other, Factorization):
            return self.factors == other.factors
        return list(self.factors) == list(other)

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return "Factorization({}, {})".format(self.n, list(self.factors))

    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)

    def exponent(self, p):
        """Returns the exponent of p in n, 0 if p does not divide n
        """
        for prime, e in self.factors:
            if prime == p:
                return e
        return 0

    def prime_power_parts(self):
        """Returns the prime power parts p^e of n in increasing prime order
        """
        return tuple(p ** e for p, e in self.factors)


@lru_cache(maxsize=None)
def factor(n):
    """Returns the factorization of n with primes in increasing order
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("Cannot factor {!r}: a positive integer is "
                         "required".format(n))
    factors = sorted(factorint(n).items())
    return Factorization(n, factors)


def omega(n):
    """Number of distinct primes dividing n
    """
    return len(factor(n))


def psi(n):
    """Dedekind psi function n * prod_{p | n} (1 + 1/p)
    """
    value = n
    for p, _ in factor(n):
        value = value // p * (p + 1)
    return value


def is_hall(d, n):
    """Returns whether d is a unitary (Hall) divisor of n
    """
    return d > 0 and n % d == 0 and gcd(d, n // d) == 1


@lru_cache(maxsize=None)
def hall_divisors(n):
    """Returns the unitary divisors of n in ascending order
    """
    divisors = [1]
    for q in factor(n).prime_power_parts():
        divisors += [d * q for d in divisors]
    return tuple(sorted(divisors))


def hall_product(d, e):
    """Product in the Atkin-Lehner group: w_d w_e = w_{de/gcd(d,e)^2}
    """
    g = gcd(d, e)
    return (d // g) * (e // g)


def kronecker(D, p):
    """Kronecker symbol (D/p) for a prime p
    """
    if not isprime(p):
        raise ValueError("{} is not a prime".format(p))
    if D % p == 0:
        return 0
    if p == 2:
        return 1 if D % 8 in (1, 7) else -1
    return int(legendre_symbol(D % p, p))


def is_discriminant(D):
    return isinstance(D, int) and D < 0 and D % 4 in (0, 1)


def is_reduced_form(a, b, c):
    """Returns whether the positive definite form (a, b, c) is reduced
    """
    if not abs(b) <= a <= c:
        return False
    if b < 0 and (abs(b) == a or a == c):
        return False
    return True


def reduce_form(a, b, c):
    """Returns the reduced form equivalent to the positive definite form
    (a, b, c)
    """
    if a <= 0 or b * b - 4 * a * c >= 0:
        raise ValueError("({}, {}, {}) is not positive definite".format(
            a, b, c))
    while True:
        # normalize b into (-a, a]
        r = (a - b) // (2 * a)
        b, c = b + 2 * r * a, a * r * r + b * r + c
        if a < c or (a == c and b >= 0):
            return a, b, c
        a, b, c = c, -b, a


@lru_cache(maxsize=None)
def class_number(D):
    """Number of reduced primitive forms of discriminant D < 0
    """
    if not is_discriminant(D):
        raise ValueError("{} is not a negative discriminant".format(D))
    count = 0
    a_max = isqrt(-D // 3)
    for a in range(1, a_max + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if not is_reduced_form(a, b, c):
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            count += 1
    return count


class ALSubgroup(object):
    """A subgroup of the Atkin-Lehner group B(N), an F_2 vector space with
    one coordinate per prime power part of N
    """

    __slots__ = ("N", "elements")

    def __init__(self, N, elements):
        self.N = N
        self.elements = frozenset(elements)

    @classmethod
    def generated(cls, N, generators=()):
        """Returns the subgroup of B(N) generated by the given Hall divisors
        """
        elements = {1}
        for d in generators:
            if not is_hall(d, N):
                raise ValueError("w{} is not an Atkin-Lehner involution of "
                                 "level {}".format(d, N))
            elements |= {hall_product(d, e) for e in elements}
        return cls(N, elements)

    @classmethod
    def full(cls, N):
        return cls(N, hall_divisors(N))

    def __contains__(self, d):
        return d in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, ALSubgroup):
            return NotImplemented
        return self.N == other.N and self.elements == other.elements

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.N, self.elements))

    def __le__(self, other):
        return self.N == other.N and self.elements <= other.elements

    def __lt__(self, other):
        return self.N == other.N and self.elements < other.elements

    @property
    def order(self):
        return len(self.elements)

    @property
    def mask(self):
        """Bit i is set when the i-th Hall divisor of N lies in the group
        """
        divisors = hall_divisors(self.N)
        return sum(1 << i for i, d in enumerate(divisors)
                   if d in self.elements)

    @property
    def generators(self):
        """Minimal generating set, picked greedily in ascending order
        """
        gens = []
        span = {1}
        for d in sorted(self.elements):
            if d in span:
                continue
            gens.append(d)
            span |= {hall_product(d, e) for e in span}
        return tuple(gens)

    def is_trivial(self):
        return self.elements == frozenset([1])

    def is_full(self):
        return len(self.elements) == len(hall_divisors(self.N))

    def is_fricke(self):
        """Returns whether the group is <w_N>
        """
        return self.N > 1 and self.elements == frozenset([1, self.N])

    def join(self, *divisors):
        return ALSubgroup.generated(self.N, self.generators + divisors)

    def index_in(self, other):
        return other.order // self.order

    def label(self):
        gens = self.generators
        if not gens:
            return "1"
        return "<{}>".format(",".join("w{}".format(d) for d in gens))

    def __repr__(self):
        return "ALSubgroup({}, {})".format(self.N, self.label())

    def sort_key(self):
        return (self.N, self.order, self.mask)


@lru_cache(maxsize=None)
def al_subgroups(N):
    """Returns all subgroups of B(N), ordered by (order, mask)
    """
    divisors = hall_divisors(N)
    found = {ALSubgroup.generated(N)}
    frontier = list(found)
    while frontier:
        grown = []
        for group in frontier:
            for d in divisors:
                if d in group:
                    continue
                bigger = group.join(d)
                if bigger not in found:
                    found.add(bigger)
                    grown.append(bigger)
        frontier = grown
    return tuple(sorted(found, key=lambda g: g.sort_key()))
