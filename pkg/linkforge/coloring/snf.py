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

""" Smith normal form of integer matrices with unimodular transforms.

    Arrays use ``dtype=object`` so entries are Python integers and never
    overflow.
"""

import logging
from typing import List, Tuple

import numpy as np

LOG = logging.getLogger(__name__)


class SmithForm(object):
    """ Computes ``D = left . A . right`` with ``D`` diagonal, each diagonal
        entry dividing the next, all of them non-negative.

        :param a: integer matrix, shape ``(m, n)``
    """

    def __init__(self, a) -> None:
        a = np.array(a, dtype=object)
        if a.ndim != 2:
            a = a.reshape(0, 0) if a.size == 0 else a.reshape(1, -1)
        self.original_ = a
        self.d_ = a.copy()
        self.left_ = np.eye(a.shape[0], dtype=int).astype(object)
        self.right_ = np.eye(a.shape[1], dtype=int).astype(object)
        self._done = False

    @property
    def rows(self) -> int:
        return self.d_.shape[0]

    @property
    def columns(self) -> int:
        return self.d_.shape[1]

    def compute(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """ :returns: ``(D, left, right)`` """
        if not self._done:
            s = 0
            while s < min(self.rows, self.columns):
                if not self._step(s):
                    break
                if self._settled(s):
                    s += 1
            self._done = True
        return self.d_, self.left_, self.right_

    def diagonal(self) -> List[int]:
        d, _, _ = self.compute()
        return [int(d[i, i]) for i in range(min(self.rows, self.columns))]

    def _step(self, s: int) -> bool:
        row, col = smallest_nonzero(self.d_, s)
        if row is None:
            return False
        self._swap_rows(s, row)
        self._swap_columns(s, col)
        pivot = self.d_[s, s]
        for i in range(s + 1, self.rows):
            if self.d_[i, s] != 0:
                self._add_row(i, s, -(self.d_[i, s] // pivot))
        for j in range(s + 1, self.columns):
            if self.d_[s, j] != 0:
                self._add_column(j, s, -(self.d_[s, j] // pivot))
        return True

    def _settled(self, s: int) -> bool:
        """ After a pass at ``s``: finished when the pivot row and column are
            clear and the pivot divides the rest; otherwise the matrix is
            prepared for another pass.
        """
        if np.count_nonzero(self.d_[s, s + 1:]) or \
                np.count_nonzero(self.d_[s + 1:, s]):
            return False
        pivot = self.d_[s, s]
        for i in range(s + 1, self.rows):
            for j in range(s + 1, self.columns):
                if self.d_[i, j] % pivot != 0:
                    # pull the offending row into the pivot row
                    self._add_row(s, i, 1)
                    return False
        if pivot < 0:
            self.left_[s] *= -1
            self.d_[s] *= -1
        return True

    def _swap_rows(self, i, j):
        if i != j:
            self.left_[[i, j]] = self.left_[[j, i]]
            self.d_[[i, j]] = self.d_[[j, i]]

    def _swap_columns(self, i, j):
        if i != j:
            self.right_[:, [i, j]] = self.right_[:, [j, i]]
            self.d_[:, [i, j]] = self.d_[:, [j, i]]

    def _add_row(self, target, source, k):
        """ row[target] += k * row[source] """
        self.left_[target] = self.left_[target] + self.left_[source] * k
        self.d_[target] = self.d_[target] + self.d_[source] * k

    def _add_column(self, target, source, k):
        self.right_[:, target] = self.right_[:, target] + \
            self.right_[:, source] * k
        self.d_[:, target] = self.d_[:, target] + self.d_[:, source] * k


def smallest_nonzero(a: np.ndarray, s: int):
    """ Position of the entry of least absolute value in ``a[s:, s:]``
        ignoring zeros, or ``(None, None)``.
    """
    best = (None, None)
    least = None
    for i in range(s, a.shape[0]):
        for j in range(s, a.shape[1]):
            v = a[i, j]
            if v != 0 and (least is None or abs(v) < least):
                best, least = (i, j), abs(v)
    return best


def invariant_factors(a) -> List[int]:
    """ Nonzero diagonal entries of the Smith form, ascending. """
    return [x for x in SmithForm(a).diagonal() if x != 0]


__all__ = ['SmithForm', 'smallest_nonzero', 'invariant_factors']
