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

""" Row reduction over the prime field F_p on integer numpy arrays. """

import logging
from typing import List, Tuple

import numpy as np

LOG = logging.getLogger(__name__)


def as_fp(m, p: int, columns: int = None) -> np.ndarray:
    """ Copy of ``m`` as a 2-d int64 array reduced into ``0 .. p-1``. An
        empty list becomes a ``0 x columns`` array.
    """
    arr = np.array(m, dtype=np.int64)
    if arr.size == 0:
        width = columns if columns is not None else \
            (arr.shape[1] if arr.ndim == 2 else 0)
        return np.zeros((0, width), dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    return arr % p


def rref(m, p: int, columns: int = None) -> Tuple[np.ndarray, List[int]]:
    """ Reduced row-echelon form over F_p with zero rows dropped.

        :returns: ``(R, pivots)``, pivot column per row of ``R``
    """
    a = as_fp(m, p, columns)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        k = r + nonzero[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m, p: int) -> int:
    return len(rref(m, p)[1])


def nullspace(m, p: int, columns: int = None) -> np.ndarray:
    """ Basis (as rows, in reduced form) of ``{x : m x = 0}`` over F_p. """
    r, pivots = rref(m, p, columns)
    cols = r.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for n, f in enumerate(free):
        basis[n, f] = 1
        for row, c in enumerate(pivots):
            basis[n, c] = (-r[row, f]) % p
    return rref(basis, p, cols)[0]


def row_space(m, p: int, columns: int = None) -> np.ndarray:
    """ Canonical basis of the row space (its reduced echelon form). """
    return rref(m, p, columns)[0]


def contains(space: np.ndarray, v, p: int) -> bool:
    """ Whether ``v`` lies in the row space of ``space``. """
    if space.shape[0] == 0:
        return not np.any(as_fp(v, p))
    stacked = np.vstack([space, as_fp(v, p, space.shape[1])])
    return rank(stacked, p) == rank(space, p)


__all__ = ['as_fp', 'rref', 'rank', 'nullspace', 'row_space', 'contains']
