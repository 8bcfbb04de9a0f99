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

""" Fox k-colorings. A coloring gives every over-arc a value in Z_k so that
    at each crossing the two under-arcs sum to twice the over-arc. Free loops
    are arcs without relations.
"""

import logging
from math import gcd
from typing import Dict, List, Union

import numpy as np

from linkforge import util
from linkforge.coloring import fp
from linkforge.coloring.snf import SmithForm
from linkforge.diagram.graph import UnionFind
from linkforge.diagram.pd import Diagram
from linkforge.diagram.tangle import Tangle
from linkforge.errors import ColoringError

LOG = logging.getLogger(__name__)

Colorable = Union[Diagram, Tangle]


class ColoringSpace(object):
    """ The group Col_k of a diagram or tangle, as a direct sum of cyclic
        groups.
    """

    def __init__(self, modulus: int, arcs: List[List[int]], loops: int,
                 basis: np.ndarray, cyclic_factors: List[int]) -> None:
        self.modulus_ = modulus
        self.arcs_ = arcs
        """ Label groups of the over-arcs, in generator order. Free loops
            follow them as extra generators.
        """
        self.ambient_dim_ = len(arcs) + loops
        self.basis_ = basis
        """ Generator per cyclic factor, as rows over Z_k. """
        self.cyclic_factors_ = cyclic_factors
        self.cardinality_exponents_ = util.factor_exponents(cyclic_factors)

    @property
    def dim(self) -> int:
        """ Number of nontrivial cyclic factors; over a prime field this is
            the vector space dimension.
        """
        return len(self.cyclic_factors_)

    def cardinality(self) -> int:
        return util.expand_factored(self.cardinality_exponents_)

    def arc_of(self) -> Dict[int, int]:
        out = {}
        for n, group in enumerate(self.arcs_):
            for label in group:
                out[label] = n
        return out

    def __repr__(self):
        return "ColoringSpace(k=%d, factors=%s)" % (self.modulus_,
                                                    self.cyclic_factors_)


class BoundaryColoringSpace(object):
    """ Image of the restriction map psi from Col_p(T) to the colors of the
        2n boundary points.
    """

    def __init__(self, p: int, n: int, image_basis: np.ndarray,
                 colorings_dim: int) -> None:
        self.p_ = p
        self.n_ = n
        self.image_basis_ = image_basis
        self.colorings_dim_ = colorings_dim

    @property
    def image_dim(self) -> int:
        return self.image_basis_.shape[0]

    @property
    def kernel_dim(self) -> int:
        return self.colorings_dim_ - self.image_dim


def coloring_arcs(x: Colorable) -> List[List[int]]:
    uf = UnionFind(sorted(x.embedding_.occurrences_))
    for c in x.crossings_:
        uf.union(c.ends_[1], c.ends_[3])
    return uf.classes()


def relation_matrix(x: Colorable) -> np.ndarray:
    """ One row per crossing, ``2 over - under - under``, over the arcs
        followed by one zero column per free loop.
    """
    arcs = coloring_arcs(x)
    arc_of = {}
    for n, group in enumerate(arcs):
        for label in group:
            arc_of[label] = n
    m = np.zeros((len(x.crossings_), len(arcs) + x.free_loops_),
                 dtype=np.int64)
    for row, c in enumerate(x.crossings_):
        m[row, arc_of[c.ends_[1]]] += 2
        m[row, arc_of[c.ends_[0]]] -= 1
        m[row, arc_of[c.ends_[2]]] -= 1
    return m


def coloring_space(x: Colorable, k: int) -> ColoringSpace:
    """ Solve the crossing relations modulo ``k``: by elimination over F_k
        for prime ``k``, by the integer Smith form otherwise.

        :raises ColoringError: ``k < 2``
    """
    if k < 2:
        raise ColoringError("modulus must be at least 2, got %s" % k)
    arcs = coloring_arcs(x)
    m = relation_matrix(x)
    width = m.shape[1]
    if util.is_prime(k):
        basis = fp.nullspace(m, k, width)
        factors = [k] * basis.shape[0]
    else:
        basis, factors = _composite_solutions(m, k)
    LOG.debug("Col_%d: factors %s", k, factors)
    return ColoringSpace(k, arcs, x.free_loops_, basis, factors)


def _composite_solutions(m: np.ndarray, k: int):
    snf = SmithForm(m)
    d, _, right = snf.compute()
    width = m.shape[1]
    rows = []
    factors = []
    for j in range(width):
        dj = int(d[j, j]) if j < d.shape[0] else 0
        order = gcd(dj, k) if dj else k
        if order == 1:
            continue
        column = right[:, j] * (k // order)
        rows.append([int(v) % k for v in column])
        factors.append(order)
    basis = np.array(rows, dtype=np.int64).reshape(len(rows), width)
    return basis, factors


def determinant(d: Diagram) -> int:
    """ Order of the torsion of the coloring module when it has exactly one
        free generator (the monochromatic direction), and 0 otherwise.
    """
    m = relation_matrix(d)
    diagonal = SmithForm(m).diagonal()
    nonzero = [x for x in diagonal if x != 0]
    if m.shape[1] - len(nonzero) != 1:
        return 0
    det = 1
    for x in nonzero:
        det *= x
    return abs(det)


def boundary_image(t: Tangle, p: int) -> BoundaryColoringSpace:
    """ Restrict Col_p(T) to the boundary points, in boundary order.

        :raises ColoringError: ``p`` is not prime
    """
    if not util.is_prime(p):
        raise ColoringError("boundary image needs a prime, got %s" % p)
    space = coloring_space(t, p)
    arc_of = space.arc_of()
    columns = [arc_of[label] for label in t.boundary_]
    values = space.basis_[:, columns] if space.basis_.shape[0] else \
        np.zeros((0, len(columns)), dtype=np.int64)
    image = fp.row_space(values, p, len(columns))
    return BoundaryColoringSpace(p, t.n, image, space.dim)


def coloring_count_brute(x: Colorable, k: int) -> int:
    """ Count colorings by enumeration; only for small inputs. """
    m = relation_matrix(x)
    width = m.shape[1]
    if k ** width > 10 ** 6:
        raise ColoringError("brute force over %d^%d assignments refused"
                            % (k, width))
    grids = np.indices((k,) * width).reshape(width, -1) if width else \
        np.zeros((0, 1), dtype=np.int64)
    residues = (m @ grids) % k
    return int(np.count_nonzero(~residues.any(axis=0)))


__all__ = ['ColoringSpace', 'BoundaryColoringSpace', 'coloring_arcs',
           'relation_matrix', 'coloring_space', 'determinant',
           'boundary_image', 'coloring_count_brute']
