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
The free group of exponent 3 and rank ``d``.

Every element has a unique collected form::

    a_1^A_1 ... a_d^A_d  *  prod_{i<j} [a_i, a_j]^B_ij  *  prod_{i<j<k} [a_i, a_j, a_k]^C_ijk

with exponents in ``Z_3``, so the order is ``3^(d + C(d,2) + C(d,3))``.
Groups of exponent 3 are 2-Engel: ``[a_i, a_j]`` commutes with ``a_i`` and
``a_j``, and ``[a_i, a_j, a_k]`` is central, trilinear and alternating in
its three indices. Commutators are ``[g, h] = g^-1 h^-1 g h``.
"""

import itertools
import logging
from typing import List, Tuple

import numpy as np

LOG = logging.getLogger(__name__)


def permutation_sign(indices) -> int:
    """ Sign of the permutation sorting ``indices``, 0 when two agree. """
    indices = list(indices)
    if len(set(indices)) < len(indices):
        return 0
    sign = 1
    for x, y in itertools.combinations(range(len(indices)), 2):
        if indices[x] > indices[y]:
            sign = -sign
    return sign


class Exponent3Group(object):
    """ Elements are int64 vectors ``(A, B, C)`` reduced mod 3. """

    p_ = 3

    def __init__(self, rank: int) -> None:
        self.rank_ = rank
        d = rank
        self.pairs_ = list(itertools.combinations(range(d), 2))
        self.triples_ = list(itertools.combinations(range(d), 3))
        self.pair_index_ = {pair: d + n for n, pair in enumerate(self.pairs_)}
        base = d + len(self.pairs_)
        self.triple_index_ = {t: base + n for n, t in enumerate(self.triples_)}
        self.layers_ = [(0, d), (d, base), (base, base + len(self.triples_))]
        """ Coordinate range of each weight. """
        self.dim_ = base + len(self.triples_)

        # [C, a_i] = prod [a_j, a_k, a_i]^B_jk, linear in B
        self.bracket_with_ = []
        """ Per generator, the map from weight-two to weight-three
            coordinates giving ``[C, a_i]``. """
        for i in range(d):
            m = np.zeros((len(self.triples_), len(self.pairs_)),
                         dtype=np.int64)
            for col, (j, k) in enumerate(self.pairs_):
                sign = permutation_sign((j, k, i))
                if sign:
                    row = self.triple_index_[tuple(sorted((j, k, i)))] - base
                    m[row, col] = sign
            self.bracket_with_.append(m)
        LOG.debug("B(%d, 3) of order 3^%d", d, self.dim_)

    def labels(self) -> List[List[str]]:
        return [["a%d" % i for i in range(self.rank_)],
                ["[a%d,a%d]" % pair for pair in self.pairs_],
                ["[a%d,a%d,a%d]" % t for t in self.triples_]]

    def identity(self) -> np.ndarray:
        return np.zeros(self.dim_, dtype=np.int64)

    def generator(self, i: int) -> np.ndarray:
        g = self.identity()
        g[i] = 1
        return g

    def _times_generator(self, w: np.ndarray, i: int, x: int) -> np.ndarray:
        """ ``w * a_i^x``. Moving ``a_i^x`` left past the commutator part
            adds ``[C, a_i^x]``; past ``S = a_{i+1}^A ... a_d^A`` it adds
            ``[S, a_i^x] = prod_m [a_i, a_m]^-x A_m * prod_{m<n}
            [a_i, a_m, a_n]^-x A_m A_n``.
        """
        out = w.copy()
        _, mid, hi = self.layers_
        out[hi[0]:hi[1]] += x * (self.bracket_with_[i] @ w[mid[0]:mid[1]])
        alpha = w[:self.rank_]
        for m in range(i + 1, self.rank_):
            if alpha[m]:
                out[self.pair_index_[(i, m)]] -= x * alpha[m]
                for n in range(m + 1, self.rank_):
                    if alpha[n]:
                        out[self.triple_index_[(i, m, n)]] -= \
                            x * alpha[m] * alpha[n]
        out[i] += x
        return out % 3

    def multiply(self, g: np.ndarray, h: np.ndarray) -> np.ndarray:
        out = g
        for i in np.nonzero(h[:self.rank_])[0]:
            out = self._times_generator(out, int(i), int(h[i]))
        if out is g:
            out = g.copy()
        # commutators of weight two commute with each other and weight three
        # is central
        out[self.rank_:] = (out[self.rank_:] + h[self.rank_:]) % 3
        return out

    def inverse(self, g: np.ndarray) -> np.ndarray:
        return self.multiply(g, g)

    def power(self, g: np.ndarray, k: int) -> np.ndarray:
        k %= 3
        out = self.identity()
        for _ in range(k):
            out = self.multiply(out, g)
        return out

    def commutator(self, g: np.ndarray, h: np.ndarray) -> np.ndarray:
        return self.multiply(self.multiply(self.inverse(g), self.inverse(h)),
                             self.multiply(g, h))

    def order_exponent(self) -> int:
        return self.dim_


def free_dims(rank: int) -> Tuple[int, int, int]:
    """ Layer dimensions of the free exponent-3 group. """
    return (rank, rank * (rank - 1) // 2,
            rank * (rank - 1) * (rank - 2) // 6)


__all__ = ['permutation_sign', 'Exponent3Group', 'free_dims']
