# Copyright 2026, Linkforge authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
The symplectic space of boundary colorings.

Boundary colorings of a 2n-tangle satisfy ``sum (-1)^i a_i = 0``, so they are
spanned by ``f_k = e_k + e_{k+1}`` for ``k = 1 .. 2n-1``. The skew form with
``phi(f_k, f_{k+1}) = 1`` has the monochromatic vector ``f_1 + f_3 + ...`` as
its kernel; the quotient by that vector is a nondegenerate space of dimension
``2n - 2``. Vectors of the quotient are kept as coordinates on
``f_1 .. f_{2n-2}``, obtained by subtracting the ``f_{2n-1}`` coordinate from
every odd coordinate and dropping the last one.
"""

import itertools
import logging
from typing import List

import numpy as np

from linkforge import util
from linkforge.coloring import fp
from linkforge.coloring.fox import boundary_image
from linkforge.diagram.tangle import Tangle
from linkforge.errors import SymplecticError

LOG = logging.getLogger(__name__)


class SymplecticSpace(object):
    """ ``((F_p)^{2n-2}, phi)`` in f-basis coordinates. """

    def __init__(self, p: int, n: int) -> None:
        if n < 2:
            raise SymplecticError("n must be at least 2, got %d" % n)
        if not util.is_prime(p):
            raise SymplecticError("p must be prime, got %d" % p)
        self.p_ = p
        self.n_ = n
        self.dim_ = 2 * n - 2
        form = np.zeros((self.dim_, self.dim_), dtype=np.int64)
        for i in range(self.dim_ - 1):
            form[i, i + 1] = 1
            form[i + 1, i] = -1
        self.form_ = form % p
        """ Gram matrix of phi on ``f_1 .. f_{2n-2}``. """

    def check(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (self.dim_,):
            raise SymplecticError("vector of length %d in a space of "
                                  "dimension %d" % (v.size, self.dim_))
        return v % self.p_

    def basis_f(self, k: int) -> np.ndarray:
        """ Image of ``f_k`` (1-based) in the quotient. """
        coords = np.zeros(2 * self.n_ - 1, dtype=np.int64)
        coords[k - 1] = 1
        return self.reduce_f(coords)

    def reduce_f(self, coords) -> np.ndarray:
        """ Full f-coordinates (length ``2n - 1``) to quotient coordinates. """
        c = np.array(coords, dtype=np.int64) % self.p_
        last = c[-1]
        c[0::2] = (c[0::2] - last) % self.p_
        return c[:-1]

    def from_boundary(self, a) -> np.ndarray:
        """ Alternating boundary vector (length 2n) to quotient coordinates:
            ``c_k = sum_{i <= k} (-1)^(k-i) a_i``.

            :raises SymplecticError: the alternating sum is not zero
        """
        a = np.array(a, dtype=np.int64) % self.p_
        if a.shape != (2 * self.n_,):
            raise SymplecticError("boundary vector must have length %d"
                                  % (2 * self.n_))
        signs = np.array([(-1) ** i for i in range(2 * self.n_)])
        if int(signs @ a) % self.p_:
            raise SymplecticError("boundary vector %s is not alternating"
                                  % a.tolist())
        coords = np.zeros(2 * self.n_ - 1, dtype=np.int64)
        running = 0
        for k in range(2 * self.n_ - 1):
            running = (a[k] - running) % self.p_
            coords[k] = running
        return self.reduce_f(coords)

    def to_boundary(self, v) -> np.ndarray:
        """ A boundary vector representing ``v`` (with ``f_{2n-1}`` part 0). """
        c = list(self.check(v)) + [0]
        a = [c[0]] + [c[k - 1] + c[k] for k in range(1, len(c))] + [c[-1]]
        return np.array(a, dtype=np.int64) % self.p_

    def form_value(self, u, v) -> int:
        u, v = self.check(u), self.check(v)
        return int(u @ self.form_ @ v) % self.p_


class SymplecticSubspace(object):
    """ Subspace of a :py:class:`SymplecticSpace`, stored in reduced
        row-echelon form so equal subspaces compare equal.
    """

    def __init__(self, space: SymplecticSpace, rows) -> None:
        self.space_ = space
        self.basis_ = fp.row_space(rows, space.p_, space.dim_)

    @property
    def dim(self) -> int:
        return self.basis_.shape[0]

    def is_isotropic(self) -> bool:
        b = self.basis_
        if b.shape[0] == 0:
            return True
        gram = (b @ self.space_.form_ @ b.T) % self.space_.p_
        return not np.any(gram)

    def is_lagrangian(self) -> bool:
        return self.dim == self.space_.n_ - 1 and self.is_isotropic()

    def key(self):
        return self.space_.p_, self.space_.n_, \
            tuple(tuple(int(x) for x in row) for row in self.basis_)

    def __eq__(self, other):
        return isinstance(other, SymplecticSubspace) and \
            self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "SymplecticSubspace(p=%d, n=%d, %s)" % (
            self.space_.p_, self.space_.n_, self.basis_.tolist())


def lagrangian_count(n: int, p: int) -> int:
    """ ``prod_{i=1}^{n-1} (p^i + 1)`` """
    if n < 2:
        raise SymplecticError("n must be at least 2, got %d" % n)
    count = 1
    for i in range(1, n):
        count *= p ** i + 1
    return count


def echelon_cells(dim: int, rank: int):
    """ Pivot columns and free positions of every reduced echelon shape. """
    for pivots in itertools.combinations(range(dim), rank):
        free = [(r, c) for r, pc in enumerate(pivots)
                for c in range(pc + 1, dim) if c not in pivots]
        yield pivots, free


def enumerate_lagrangians(s: SymplecticSpace) -> List[SymplecticSubspace]:
    """ Every Lagrangian subspace, by scanning all reduced echelon forms of
        rank ``n - 1``.

        :raises SymplecticError: more candidates than
            ``LINKFORGE_LAGRANGIAN_GUARD`` allows
    """
    rank = s.n_ - 1
    cells = list(echelon_cells(s.dim_, rank))
    total = sum(s.p_ ** len(free) for _, free in cells)
    guard = util.lagrangian_guard()
    if total > guard:
        raise SymplecticError("%d candidate subspaces exceed the guard %d"
                              % (total, guard))
    found = []
    for pivots, free in cells:
        base = np.zeros((rank, s.dim_), dtype=np.int64)
        for r, c in enumerate(pivots):
            base[r, c] = 1
        for values in itertools.product(range(s.p_), repeat=len(free)):
            m = base.copy()
            for (r, c), x in zip(free, values):
                m[r, c] = x
            w = SymplecticSubspace(s, m)
            if w.is_isotropic():
                found.append(w)
    LOG.info("%d Lagrangians for n=%d p=%d out of %d candidates",
             len(found), s.n_, s.p_, total)
    return found


def tangle_lagrangian(t: Tangle, p: int) -> SymplecticSubspace:
    """ The image of ``Col_p(T)`` in the quotient space.

        :raises SymplecticError: the image fails to be Lagrangian
    """
    space = SymplecticSpace(p, t.n)
    image = boundary_image(t, p)
    rows = [space.from_boundary(v) for v in image.image_basis_]
    w = SymplecticSubspace(space, np.array(rows, dtype=np.int64)
                           .reshape(len(rows), space.dim_))
    if not w.is_lagrangian():
        raise SymplecticError("boundary image of dimension %d is not "
                              "Lagrangian" % w.dim)
    return w


def rotate_subspace(w: SymplecticSubspace, i: int) -> SymplecticSubspace:
    """ Image of ``w`` under rotating the boundary by ``i`` positions. """
    s = w.space_
    size = 2 * s.n_
    rows = []
    for v in w.basis_:
        a = s.to_boundary(v)
        rotated = [a[(j - i) % size] for j in range(size)]
        rows.append(s.from_boundary(rotated))
    return SymplecticSubspace(s, np.array(rows, dtype=np.int64)
                              .reshape(len(rows), s.dim_))


def reflect_subspace(w: SymplecticSubspace) -> SymplecticSubspace:
    """ Image of ``w`` under the boundary reversal ``k -> 2n - 1 - k`` that
        turning a tangle over induces.
    """
    s = w.space_
    rows = [s.from_boundary(s.to_boundary(v)[::-1]) for v in w.basis_]
    return SymplecticSubspace(s, np.array(rows, dtype=np.int64)
                              .reshape(len(rows), s.dim_))


def rotation_invariant_lagrangians(s: SymplecticSpace,
                                   step: int = 2) -> List[SymplecticSubspace]:
    """ Lagrangians fixed by rotating the boundary ``step`` positions. """
    return [w for w in enumerate_lagrangians(s)
            if rotate_subspace(w, step) == w]


__all__ = ['SymplecticSpace', 'SymplecticSubspace', 'lagrangian_count',
           'echelon_cells', 'enumerate_lagrangians', 'tangle_lagrangian',
           'rotate_subspace', 'reflect_subspace',
           'rotation_invariant_lagrangians']
