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


from functools import lru_cache
from math import gcd

from modcurve.biell.errors import IntegrityError
from modcurve.biell.ntheory import factor
from modcurve.biell.ntheory import kronecker
from modcurve.biell.ntheory import psi
from sympy import divisors
from sympy import totient


class LevelInvariants(object):
    """Classical invariants of X0(N)
    """

    __slots__ = ("N", "index", "nu2", "nu3", "nu_inf", "genus")

    def __init__(self, N, index, nu2, nu3, nu_inf, genus):
        self.N = N
        self.index = index
        self.nu2 = nu2
        self.nu3 = nu3
        self.nu_inf = nu_inf
        self.genus = genus

    def __repr__(self):
        return ("LevelInvariants(N={}, index={}, nu2={}, nu3={}, "
                "nu_inf={}, genus={})").format(
            self.N, self.index, self.nu2, self.nu3, self.nu_inf, self.genus)


def cusp_count(N):
    """Number of cusps of X0(N)
    """
    return sum(int(totient(gcd(d, N // d))) for d in divisors(N))


def nu2(N):
    """Number of elliptic points of order 2 of Gamma0(N)
    """
    if N % 4 == 0:
        return 0
    count = 1
    for p in factor(N).primes:
        count *= 1 + kronecker(-4, p)
    return count


def nu3(N):
    """Number of elliptic points of order 3 of Gamma0(N)
    """
    if N % 9 == 0:
        return 0
    count = 1
    for p in factor(N).primes:
        count *= 1 + kronecker(-3, p)
    return count


@lru_cache(maxsize=None)
def level_invariants(N):
    """Returns the LevelInvariants of X0(N)
    """
    if N < 1:
        raise ValueError("Level must be positive, got {}".format(N))
    index = psi(N)
    e2, e3, cusps = nu2(N), nu3(N), cusp_count(N)
    twelve_g = 12 + index - 3 * e2 - 4 * e3 - 6 * cusps
    if twelve_g % 12:
        raise IntegrityError("Non integral genus at level {}".format(N))
    return LevelInvariants(N, index, e2, e3, cusps, twelve_g // 12)


def genus_x0(N):
    """Genus of X0(N)
    """
    return level_invariants(N).genus
