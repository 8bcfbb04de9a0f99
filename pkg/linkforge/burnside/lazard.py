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
The free nilpotent group of class 3 and exponent ``p`` for primes ``p >= 5``,
realized on the free nilpotent Lie algebra of class 3 over F_p. The group
law is the truncated Baker-Campbell-Hausdorff product::

    X * Y = X + Y + [X, Y]/2 + ([X, [X, Y]] + [Y, [Y, X]])/12

which needs 2 and 3 invertible. Powers are multiples, so every element has
order ``p``.

The Lie algebra carries the Hall basis ``x_i``; ``[x_i, x_j]`` for ``i < j``;
``[[x_i, x_j], x_k]`` for ``i < j`` and ``k >= i``.
"""

import itertools
import logging
from typing import List, Tuple

import numpy as np

from linkforge.errors import UnsupportedError

LOG = logging.getLogger(__name__)


class LazardGroup(object):

    def __init__(self, rank: int, p: int) -> None:
        if p < 5:
            raise UnsupportedError("the class-3 Lazard correspondence needs "
                                   "p >= 5, got %d" % p)
        self.p_ = p
        self.rank_ = d = rank
        self.pairs_ = list(itertools.combinations(range(d), 2))
        self.hall_ = [(i, j, k) for (i, j) in self.pairs_
                      for k in range(i, d)]
        pair_pos = {pair: n for n, pair in enumerate(self.pairs_)}
        hall_pos = {h: n for n, h in enumerate(self.hall_)}
        d2, d3 = len(self.pairs_), len(self.hall_)
        self.layers_ = [(0, d), (d, d + d2), (d + d2, d + d2 + d3)]
        self.dim_ = d + d2 + d3

        self.t2_ = np.zeros((d, d, d2), dtype=np.int64)
        """ ``[x_i, x_j]`` in weight-two coordinates. """
        for (i, j), n in pair_pos.items():
            self.t2_[i, j, n] = 1
            self.t2_[j, i, n] = p - 1

        self.t3_ = np.zeros((d2, d, d3), dtype=np.int64)
        """ ``[[x_i, x_j], x_k]`` in weight-three coordinates. """
        for (i, j), n in pair_pos.items():
            for k in range(d):
                if k >= i:
                    self.t3_[n, k, hall_pos[(i, j, k)]] += 1
                else:
                    # Jacobi identity
                    self.t3_[n, k, hall_pos[(k, j, i)]] += 1
                    self.t3_[n, k, hall_pos[(k, i, j)]] -= 1
        self.t3_ %= p

        self.half_ = pow(2, p - 2, p)
        self.twelfth_ = pow(12, p - 2, p)

    def labels(self) -> List[List[str]]:
        return [["x%d" % i for i in range(self.rank_)],
                ["[x%d,x%d]" % pair for pair in self.pairs_],
                ["[[x%d,x%d],x%d]" % h for h in self.hall_]]

    def _split(self, v: np.ndarray):
        return [v[a:b] for a, b in self.layers_]

    def bracket(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """ Lie bracket, dropping everything above weight three. """
        u1, u2, _ = self._split(u)
        v1, v2, _ = self._split(v)
        w2 = np.einsum('i,j,ijn->n', u1, v1, self.t2_)
        w3 = np.einsum('a,k,akn->n', u2, v1, self.t3_) - \
            np.einsum('a,k,akn->n', v2, u1, self.t3_)
        return np.concatenate([np.zeros(self.rank_, dtype=np.int64),
                               w2, w3]) % self.p_

    def identity(self) -> np.ndarray:
        return np.zeros(self.dim_, dtype=np.int64)

    def generator(self, i: int) -> np.ndarray:
        g = self.identity()
        g[i] = 1
        return g

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        uv = self.bracket(u, v)
        cubic = self.bracket(u, uv) + self.bracket(v, (-uv) % self.p_)
        return (u + v + self.half_ * uv + self.twelfth_ * cubic) % self.p_

    def inverse(self, u: np.ndarray) -> np.ndarray:
        return (-u) % self.p_

    def power(self, u: np.ndarray, k: int) -> np.ndarray:
        return (k * u) % self.p_

    def commutator(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.multiply(self.multiply(self.inverse(u), self.inverse(v)),
                             self.multiply(u, v))


def free_dims(rank: int) -> Tuple[int, int, int]:
    """ Witt numbers of weights one to three. """
    return rank, rank * (rank - 1) // 2, (rank ** 3 - rank) // 3


__all__ = ['LazardGroup', 'free_dims']
