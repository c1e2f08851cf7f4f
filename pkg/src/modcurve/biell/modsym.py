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


"""Weight 2 modular symbols for Gamma0(N) over the rationals.

The space is presented by Manin symbols indexed by P^1(Z/N) subject to the
two term relation x + x*sigma = 0 and the three term relation
x + x*tau + x*tau^2 = 0, where (c, d)*sigma = (d, -c) and
(c, d)*tau = (d, -c - d). The cuspidal subspace is the kernel of the
boundary map and has dimension 2g. Atkin-Lehner involutions act on it by
their action on the endpoints of the symbols, and the genus of a quotient
X0(N)/W is half the dimension of the subspace fixed by W.
"""

import threading
import time
from math import gcd

from modcurve.biell import logger
from modcurve.biell.errors import IntegrityError
from modcurve.biell.ntheory import ALSubgroup
from modcurve.biell.ntheory import hall_divisors
from modcurve.biell.ntheory import is_hall
from modcurve.biell.x0invariants import cusp_count
from modcurve.biell.x0invariants import genus_x0
from sympy import divisors
from sympy.core.intfunc import igcdex
from sympy.ntheory.modular import crt
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


def lift_unit(n, d, a):
    """Lifts a unit a modulo d, with d | n, to a unit modulo n
    """
    u, v = 1, n
    g = gcd(v, d)
    while g > 1:
        u *= g
        v //= g
        g = gcd(v, g)
    return int(crt([u, v], [a, 1])[0]) % n


class P1(object):
    """The projective line over Z/N with canonical representatives
    """

    def __init__(self, N):
        if N < 1:
            raise ValueError("Level must be positive, got {}".format(N))
        self.N = N
        reps = set()
        for c in divisors(N):
            for d in range(N):
                try:
                    reps.add(self.normalize(c, d))
                except ValueError:
                    continue
        self._list = sorted(reps)
        self._index = dict((p, i) for i, p in enumerate(self._list))
        self._lookup = {}

    def __len__(self):
        return len(self._list)

    def __getitem__(self, i):
        return self._list[i]

    def __iter__(self):
        return iter(self._list)

    def __contains__(self, p):
        try:
            self.normalize(*p)
        except ValueError:
            return False
        return True

    def normalize(self, c, d):
        """Canonical representative of (c : d). The first entry divides N
        and the second one is the least possible
        """
        N = self.N
        c %= N
        d %= N
        if c == 0:
            if gcd(d, N) == 1:
                return 0, 1
            raise ValueError("({}, {}) is not in P1(Z/{})".format(c, d, N))
        _, s, g = map(int, igcdex(N, c))
        if gcd(g, d) > 1:
            raise ValueError("({}, {}) is not in P1(Z/{})".format(c, d, N))
        s = lift_unit(N, N // g, s)
        d = (s * d) % N
        if g == 1:
            return 1, d
        d = min((d * t) % N for t in range(1, N, N // g) if gcd(N, t) == 1)
        return g, d

    def index(self, c, d):
        key = (c % self.N, d % self.N)
        i = self._lookup.get(key)
        if i is None:
            i = self._index[self.normalize(*key)]
            self._lookup[key] = i
        return i


def p1_enumerate(N):
    """Returns the canonical representatives of P^1(Z/N)
    """
    return list(P1(N))


def cusp_equivalent(N, p, q):
    """Returns whether the cusps u1/v1 and u2/v2 are Gamma0(N)-equivalent
    """
    u1, v1 = p
    u2, v2 = q
    s1 = int(igcdex(u1, v1)[0])
    s2 = int(igcdex(u2, v2)[0])
    return (s1 * v2 - s2 * v1) % gcd(N, v1 * v2) == 0


def cusp_classes(N):
    """Returns one representative (u, v) of each class of cusps u/v of
    Gamma0(N), infinity being (1, 0)
    """
    classes = []
    for v in divisors(N):
        m = gcd(v, N // v)
        for x in range(max(m, 1)):
            if gcd(x, m) != 1:
                continue
            u = x
            while gcd(u, v) != 1:
                u += m
            cusp = (u, v) if v != N else (1, 0)
            if any(cusp_equivalent(N, cusp, other) for other in classes):
                continue
            classes.append(cusp)
    if len(classes) != cusp_count(N):
        raise IntegrityError("Found {} cusp classes at level {}, expected "
                             "{}".format(len(classes), N, cusp_count(N)))
    return classes


def apply_matrix(matrix, cusp):
    """Image of the cusp u/v under a 2x2 integral matrix, as a reduced pair
    """
    a, b, c, d = matrix
    u, v = cusp
    p, q = a * u + b * v, c * u + d * v
    g = gcd(p, q)
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return p, q


def convergent_symbols(cusp):
    """Manin symbols (c, d) whose sum is the modular symbol {0, u/v}, read
    off the continued fraction convergents of u/v
    """
    u, v = cusp
    if v == 0:
        return [(0, 1)]
    if u == 0:
        return []
    symbols = []
    p2, q2 = 0, 1
    p1, q1 = 1, 0
    sign = -1
    # symbol for the pair of convergents with index -2 and -1
    symbols.append((0, 1))
    num, den = u, v
    while True:
        a, r = divmod(num, den)
        p, q = a * p1 + p2, a * q1 + q2
        symbols.append((sign * q, q1))
        sign = -sign
        p2, q2, p1, q1 = p1, q1, p, q
        if r == 0:
            break
        num, den = den, r
    return symbols


class ModSymSpace(object):
    """Weight 2 modular symbols for Gamma0(N) with the cuspidal subspace
    """

    def __init__(self, N):
        self.N = N
        self.p1 = P1(N)
        self._build_relations()
        self._build_boundary()
        self._operators = {}
        self._lock = threading.Lock()

    def _build_relations(self):
        p1 = self.p1
        size = len(p1)

        # two term relation: x_i = -x_j with j = i*sigma, x_i = 0 if i = j
        rep = [None] * size
        for i, (c, d) in enumerate(p1):
            j = p1.index(d, -c)
            if i == j:
                rep[i] = (None, 0)
            else:
                r = min(i, j)
                rep[i] = (r, 1 if i == r else -1)
        columns = sorted(set(r for r, s in rep if s))
        column_of = dict((r, k) for k, r in enumerate(columns))

        # three term relation on each tau orbit
        rows = {}
        seen = set()
        for i, (c, d) in enumerate(p1):
            if i in seen:
                continue
            orbit = [i, p1.index(d, -c - d), p1.index(-c - d, c)]
            seen.update(orbit)
            row = {}
            for k in orbit:
                r, s = rep[k]
                if not s:
                    continue
                col = column_of[r]
                row[col] = row.get(col, 0) + s
            row = dict((col, QQ(v)) for col, v in row.items() if v)
            if row:
                rows[len(rows)] = row

        ncols = len(columns)
        pivot_rows = reduced_rows(rows, (len(rows), ncols))
        free = [k for k in range(ncols) if k not in pivot_rows]
        basis_of = dict((col, b) for b, col in enumerate(free))

        # coordinates of each two term representative in the free basis
        column_coords = {}
        for col in range(ncols):
            if col in basis_of:
                column_coords[col] = {basis_of[col]: QQ.one}
                continue
            coords = {}
            for j, value in pivot_rows[col].items():
                if j != col:
                    coords[basis_of[j]] = -value
            column_coords[col] = coords

        self.coordinates = []
        for r, s in rep:
            if not s:
                self.coordinates.append({})
                continue
            coords = column_coords[column_of[r]]
            if s == 1:
                self.coordinates.append(coords)
            else:
                self.coordinates.append(
                    dict((b, -v) for b, v in coords.items()))
        self.basis = [columns[col] for col in free]
        self.dimension = len(self.basis)

    def _build_boundary(self):
        N = self.N
        self.cusps = cusp_classes(N)
        dod = {}
        for b, i in enumerate(self.basis):
            c, d = self.p1[i]
            x, y, _ = map(int, igcdex(d, -c))
            # [[x, y], [c, d]] has determinant 1, symbol {y/d, x/c}
            for cusp, sign in (((x, c), 1), ((y, d), -1)):
                row = self.cusp_index(cusp)
                value = dod.setdefault(row, {}).get(b, 0) + sign
                if value:
                    dod[row][b] = value
                else:
                    del dod[row][b]
        dod = dict((r, dict((k, QQ(v)) for k, v in row.items()))
                   for r, row in dod.items() if row)
        pivot_rows = reduced_rows(dod, (len(self.cusps), self.dimension))
        self.boundary_rank = len(pivot_rows)
        self.cuspidal_free = [k for k in range(self.dimension)
                              if k not in pivot_rows]
        self.cuspidal_basis = []
        for j in self.cuspidal_free:
            vector = {j: QQ.one}
            for p, row in pivot_rows.items():
                value = row.get(j)
                if value:
                    vector[p] = -value
            self.cuspidal_basis.append(vector)
        self.cuspidal_dim = len(self.cuspidal_basis)

        genus = genus_x0(N)
        if self.cuspidal_dim != 2 * genus:
            raise IntegrityError(
                "Cuspidal dimension {} at level {} but the genus is "
                "{}".format(self.cuspidal_dim, N, genus))
        if self.dimension != self.cuspidal_dim + len(self.cusps) - 1:
            raise IntegrityError(
                "Modular symbols of level {} have dimension {}, expected "
                "{}".format(N, self.dimension,
                            self.cuspidal_dim + len(self.cusps) - 1))

    def cusp_index(self, cusp):
        u, v = cusp
        g = gcd(u, v)
        cusp = (u // g, v // g)
        if cusp[1] < 0 or (cusp[1] == 0 and cusp[0] < 0):
            cusp = (-cusp[0], -cusp[1])
        for k, other in enumerate(self.cusps):
            if cusp_equivalent(self.N, cusp, other):
                return k
        raise IntegrityError("Cusp {}/{} has no class at level {}".format(
            cusp[0], cusp[1], self.N))

    def manin_coordinates(self, c, d):
        """Coordinates of the Manin symbol (c, d) in the free basis
        """
        return self.coordinates[self.p1.index(c, d)]

    def path_coordinates(self, cusp):
        """Coordinates of the modular symbol {0, cusp}
        """
        coords = {}
        for c, d in convergent_symbols(cusp):
            add_into(coords, self.manin_coordinates(c, d))
        return coords

    def al_operator(self, Q):
        """Returns the ALOperator of w_Q, built once per divisor
        """
        if not is_hall(Q, self.N):
            raise ValueError("{} is not a Hall divisor of {}".format(
                Q, self.N))
        with self._lock:
            operator = self._operators.get(Q)
            if operator is None:
                operator = ALOperator(self, Q)
                self._operators[Q] = operator
        return operator

    def report(self):
        """Debug dump, one key=value per line
        """
        lines = [
            "level={}".format(self.N),
            "p1_size={}".format(len(self.p1)),
            "dimension={}".format(self.dimension),
            "cusps={}".format(len(self.cusps)),
            "boundary_rank={}".format(self.boundary_rank),
            "cuspidal_dim={}".format(self.cuspidal_dim),
        ]
        for Q in hall_divisors(self.N)[1:]:
            lines.append("trace_w{}={}".format(
                Q, self.al_operator(Q).trace()))
        return "\n".join(lines)


class ALOperator(object):
    """Atkin-Lehner involution w_Q acting on the cuspidal subspace
    """

    def __init__(self, space, Q):
        self.space = space
        self.Q = Q
        self.matrix_entries = witness_matrix(space.N, Q)
        self.action = self._cuspidal_action()

    def _cuspidal_action(self):
        space = self.space
        n = space.cuspidal_dim
        images = {}
        dod = {}
        for j, vector in enumerate(space.cuspidal_basis):
            image = {}
            for col, value in vector.items():
                if col not in images:
                    images[col] = self._image(space.basis[col])
                add_into(image, images[col], value)
            # coordinates of a cuspidal vector sit at the free columns
            row = {}
            for k, free in enumerate(space.cuspidal_free):
                value = image.get(free)
                if value:
                    row[k] = value
            for k, value in row.items():
                dod.setdefault(k, {})[j] = value
        return DomainMatrix(dod, (n, n), QQ)

    def _image(self, index):
        """Coordinates of w_Q applied to the basis Manin symbol of index
        """
        space = self.space
        c, d = space.p1[index]
        x, y, _ = map(int, igcdex(d, -c))
        # {y/d, x/c} maps to {0, W(x/c)} - {0, W(y/d)}
        image = dict(space.path_coordinates(
            apply_matrix(self.matrix_entries, (x, c))))
        add_into(image, space.path_coordinates(
            apply_matrix(self.matrix_entries, (y, d))), -1)
        return image

    def trace(self):
        return sum((self.action[i, i].element for i in
                    range(self.action.shape[0])), QQ.zero)

    def plus_dimension(self):
        n = self.action.shape[0]
        return n - (self.action - identity(n)).rank()

    def is_involution(self):
        n = self.action.shape[0]
        return self.action * self.action == identity(n)


def witness_matrix(N, Q):
    """Integral matrix (Qx, y; Nz, Qw) of determinant Q inducing w_Q,
    with z = w = 1 and |y| as small as possible
    """
    if not is_hall(Q, N):
        raise ValueError("{} is not a Hall divisor of {}".format(Q, N))
    M = N // Q
    s, t, _ = map(int, igcdex(Q, M))
    # Q*x - M*y = 1 with x = s + k*M and y = -t + k*Q
    k = min(range(-abs(t) - 1, abs(t) + 2),
            key=lambda k: (abs(-t + k * Q), -t + k * Q))
    x, y = s + k * M, -t + k * Q
    return Q * x, y, N, Q


def reduced_rows(dod, shape):
    """Row reduces the sparse rational matrix given as a dict of rows and
    maps each pivot column to the nonzero entries of its row
    """
    rows = {}
    if not dod or 0 in shape:
        return rows
    rref, _ = DomainMatrix(dod, shape, QQ).rref()
    for row in rref.to_sparse().rep.values():
        if row:
            rows[min(row)] = row
    return rows


def add_into(target, source, scale=1):
    for key, value in source.items():
        value = target.get(key, QQ.zero) + scale * value
        if value:
            target[key] = value
        else:
            target.pop(key, None)
    return target


def identity(n):
    return DomainMatrix.eye(n, QQ).to_sparse()


_spaces = {}
_locks = {}
_global_lock = threading.Lock()


def build_space(N):
    """Returns the cached ModSymSpace of level N, building it on first use
    """
    space = _spaces.get(N)
    if space is not None:
        return space
    with _global_lock:
        lock = _locks.setdefault(N, threading.Lock())
    with lock:
        space = _spaces.get(N)
        if space is None:
            start = time.time()
            space = ModSymSpace(N)
            _spaces[N] = space
            logger.info("Built modular symbols of level {}: dimension {}, "
                        "cuspidal {} ({:.2f}s)".format(
                            N, space.dimension, space.cuspidal_dim,
                            time.time() - start))
    return space


def cuspidal_dim(N):
    return build_space(N).cuspidal_dim


def al_operator(space, Q):
    """Returns the ALOperator of w_Q on the given space
    """
    return space.al_operator(Q)


def invariant_dimension(N, generators):
    """Dimension of the cuspidal subspace fixed by all w_d, d in generators
    """
    space = build_space(N)
    n = space.cuspidal_dim
    generators = [d for d in generators if d != 1]
    if not generators or n == 0:
        return n
    dod = {}
    offset = 0
    for d in generators:
        delta = space.al_operator(d).action - identity(n)
        for i, row in delta.to_sparse().rep.items():
            if row:
                dod[offset + i] = dict(row)
        offset += n
    stacked = DomainMatrix(dod, (offset, n), QQ)
    return n - stacked.rank()


def invariant_genus(N, W):
    """Genus of X0(N)/W from the W-invariant cuspidal subspace
    """
    if not isinstance(W, ALSubgroup):
        W = ALSubgroup.generated(N, W)
    dimension = invariant_dimension(N, W.generators)
    if dimension % 2:
        raise IntegrityError("Odd invariant dimension {} for {}".format(
            dimension, W))
    return dimension // 2
