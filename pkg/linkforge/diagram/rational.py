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

""" Rational tangles from continued fractions.

    ``[c0; c1, ..., ck]`` stands for ``c0 + 1/(c1 + 1/(... + 1/ck))``. The
    tangle is grown from the innermost term outward: even-indexed terms add
    horizontal half-twists on the right (fraction ``f -> f + c``), odd-indexed
    terms add vertical half-twists at the bottom (``f -> 1/(1/f + c)``). The
    seed is the 0-tangle when ``k`` is even and the infinity tangle when it
    is odd. A positive half-twist has its NW-SE strand on top.
"""

import logging
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from linkforge.diagram.graph import Crossing
from linkforge.diagram.tangle import Tangle
from linkforge.errors import TangleError

LOG = logging.getLogger(__name__)


class TwistBuilder(object):
    """ Grows a 2-tangle one half-twist at a time, keeping track of the
        current corner labels.
    """

    def __init__(self, vertical_seed: bool, first_label: int = 1,
                 first_id: int = 0):
        a, b = first_label, first_label + 1
        if vertical_seed:
            self.nw_, self.sw_, self.se_, self.ne_ = a, a, b, b
        else:
            self.nw_, self.sw_, self.se_, self.ne_ = a, b, b, a
        self.next_label_ = first_label + 2
        self.next_id_ = first_id
        self.crossings_ = []  # type: List[Crossing]
        self.regions_ = []  # type: List[List[int]]
        """ Crossing ids added per twist call, in build order. """

    def _fresh(self):
        label = self.next_label_
        self.next_label_ += 1
        return label

    def _add(self, ends) -> int:
        cid = self.next_id_
        self.next_id_ += 1
        self.crossings_.append(Crossing(cid, ends))
        return cid

    def horizontal(self, count: int):
        sign = 1 if count > 0 else -1
        region = []
        for _ in range(abs(count)):
            se, ne = self._fresh(), self._fresh()
            if sign > 0:
                ends = (self.se_, se, ne, self.ne_)
            else:
                ends = (self.ne_, self.se_, se, ne)
            region.append(self._add(ends))
            self.se_, self.ne_ = se, ne
        self.regions_.append(region)

    def vertical(self, count: int):
        sign = 1 if count > 0 else -1
        region = []
        for _ in range(abs(count)):
            sw, se = self._fresh(), self._fresh()
            if sign > 0:
                ends = (sw, se, self.se_, self.sw_)
            else:
                ends = (self.sw_, sw, se, self.se_)
            region.append(self._add(ends))
            self.sw_, self.se_ = sw, se
        self.regions_.append(region)

    def tangle(self) -> Tangle:
        return Tangle(self.crossings_,
                      (self.nw_, self.sw_, self.se_, self.ne_))


def rational_regions(terms: Sequence[int], first_label: int = 1,
                     first_id: int = 0) -> Tuple[Tangle, List[List[int]]]:
    """ Build the rational tangle ``[c0; c1, ..., ck]``.

        :returns: the tangle and, per term ``c0 .. ck``, the ids of its
            crossings
        :raises TangleError: empty term list
    """
    if not terms:
        raise TangleError("continued fraction needs at least one term")
    k = len(terms) - 1
    builder = TwistBuilder(k % 2 == 1, first_label, first_id)
    for i in range(k, -1, -1):
        if terms[i] == 0:
            builder.regions_.append([])
        elif i % 2 == 0:
            builder.horizontal(terms[i])
        else:
            builder.vertical(terms[i])
    regions = list(reversed(builder.regions_))
    return builder.tangle(), regions


def rational_tangle(terms: Sequence[int]) -> Tangle:
    return rational_regions(terms)[0]


def continued_fraction(p: int, q: int) -> List[int]:
    """ Terms of ``p/q`` with every partial quotient truncated toward zero,
        e.g. ``5/2 -> [2; 2]`` and ``-5/2 -> [-2; -2]``.
    """
    if q == 0:
        raise TangleError("denominator must be nonzero")
    terms = []
    while q != 0:
        t = abs(p) // abs(q)
        if (p < 0) != (q < 0):
            t = -t
        terms.append(t)
        p, q = q, p - t * q
    return terms


def fraction_tangle(p: int, q: int) -> Tangle:
    """ The rational tangle of fraction ``p/q``.

        :raises TangleError: ``q == 0`` or ``gcd(p, q) != 1``
    """
    if q == 0 or gcd(p, q) != 1:
        raise TangleError("fraction %d/%d must have q != 0 and gcd 1"
                          % (p, q))
    return rational_tangle(continued_fraction(p, q))


def evaluate_fraction(terms: Sequence[int]) -> Fraction:
    """ Value of the continued fraction, following the tangle arithmetic (a
        vertical step on an infinite fraction gives ``1/c``).
    """
    value = None  # None stands for infinity
    k = len(terms) - 1
    if k % 2 == 0:
        value = Fraction(0)
    for i in range(k, -1, -1):
        c = terms[i]
        if i % 2 == 0:
            if value is not None:
                value = value + c
        else:
            inverse = Fraction(0) if value is None else \
                (None if value == 0 else 1 / value)
            if inverse is not None:
                inverse += c
                value = None if inverse == 0 else 1 / inverse
    if value is None:
        raise TangleError("continued fraction %s is infinite" % list(terms))
    return value


__all__ = ['TwistBuilder', 'rational_regions', 'rational_tangle',
           'continued_fraction', 'fraction_tangle', 'evaluate_fraction']
