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
The Kauffman polynomial ``F(a, x)`` by skein recursion.

For any crossing, ``F(L) + F(L') = x (F(L_0) + F(L_inf))`` where ``L'`` is
``L`` with the crossing switched and ``L_0``, ``L_inf`` are its two
smoothings. A positive curl contributes a factor ``a`` and a split circle a
factor ``delta = (a + a^-1) x^-1 - 1``; the unknot is 1.

The recursion simplifies greedily, splits off separate pieces, and switches
the first crossing met from below by the strand traversal until the diagram
is descending. A descending diagram is a trivial link framed by its
self-writhe. One evaluator runs over any coefficient ring: Laurent
polynomials for the full invariant and ``Z[x]/(x^2 + x - 1)`` for the value
at ``a = 1``, ``x = 2cos(2pi/5)``.
"""

import collections
import logging
from typing import NamedTuple, Tuple

from linkforge import util
from linkforge.diagram.canonical import canonical_code
from linkforge.diagram.pd import Diagram, components, crossing_signs, \
    first_ascending, remove_and_glue, self_writhe, smoothings, strand_walks, \
    switch
from linkforge.errors import BudgetExceededError, SkeinError
from linkforge.moves.engine import apply
from linkforge.moves.model import Move, MoveSite
from linkforge.moves.simplify import simplify
from linkforge.skein.golden import GoldenValue, PhiDecomposition, decompose
from linkforge.skein.laurent import LaurentPoly2

LOG = logging.getLogger(__name__)


class LaurentRing(object):
    """ Coefficients of the full two-variable invariant. """

    name = "laurent"

    @staticmethod
    def one():
        return LaurentPoly2.constant(1)

    @staticmethod
    def x():
        return LaurentPoly2.monomial(0, 1)

    @staticmethod
    def a_power(k: int):
        return LaurentPoly2.monomial(k, 0)

    @staticmethod
    def delta():
        return LaurentPoly2({(1, -1): 1, (-1, -1): 1, (0, 0): -1})


class GoldenRing(object):
    """ Coefficients at ``a = 1``, ``x = 2cos(2pi/5)``; ``delta`` becomes
        ``2x + 1``, the square root of five.
    """

    name = "golden"

    @staticmethod
    def one():
        return GoldenValue(1, 0)

    @staticmethod
    def x():
        return GoldenValue(0, 1)

    @staticmethod
    def a_power(k: int):
        return GoldenValue(1, 0)

    @staticmethod
    def delta():
        return GoldenValue.sqrt5()


class SkeinMemo(object):
    """ Least recently used table of reduced skein values keyed by canonical
        code. Holds at most ``limit`` entries; without a limit the bound is
        re-read from ``LINKFORGE_MEMO_LIMIT`` on every store.
    """

    def __init__(self, limit: int = None) -> None:
        self.limit_ = limit
        self.table_ = collections.OrderedDict()

    def limit(self) -> int:
        return util.memo_limit() if self.limit_ is None else self.limit_

    def get(self, key):
        """ The cached value or None; a hit becomes the most recent entry. """
        value = self.table_.get(key)
        if value is not None:
            self.table_.move_to_end(key)
        return value

    def put(self, key, value) -> None:
        self.table_[key] = value
        self.table_.move_to_end(key)
        limit = self.limit()
        while len(self.table_) > limit:
            self.table_.popitem(last=False)

    def clear(self) -> None:
        self.table_.clear()

    def __len__(self):
        return len(self.table_)

    def __contains__(self, key):
        return key in self.table_


class SkeinEvaluator(object):
    """ Memoizing evaluator over one coefficient ring.

        :param ring: :py:class:`LaurentRing` or :py:class:`GoldenRing`
        :param memo: optional shared :py:class:`SkeinMemo`
    """

    def __init__(self, ring, memo: SkeinMemo = None) -> None:
        self.ring_ = ring
        self.memo_ = SkeinMemo() if memo is None else memo
        """ Values of simplified diagrams, without their framing factor. """
        self.nodes_ = 0
        self.budget_ = util.node_budget()

    def evaluate(self, d: Diagram):
        """ :raises SkeinError: the diagram is empty
            :raises BudgetExceededError: more recursion nodes than
                ``LINKFORGE_NODE_BUDGET``
        """
        if not d.crossings_ and d.free_loops_ == 0:
            raise SkeinError("the invariant is defined on nonempty diagrams")
        self.nodes_ = 0
        self.budget_ = util.node_budget()
        value = self._value(d)
        LOG.debug("%s skein value of %r after %d nodes", self.ring_.name, d,
                  self.nodes_)
        return value

    def _value(self, d: Diagram):
        self.nodes_ += 1
        if self.nodes_ > self.budget_:
            raise BudgetExceededError("skein recursion passed %d nodes"
                                      % self.budget_)
        reduced = simplify(d)
        d = reduced.diagram
        factor = self.ring_.a_power(reduced.framing)
        key = canonical_code(d.crossings_, (), d.free_loops_)
        value = self.memo_.get(key)
        if value is None:
            value = self._reduced_value(d)
            self.memo_.put(key, value)
        return factor * value

    def _reduced_value(self, d: Diagram):
        ring = self.ring_
        pieces = d.embedding_.pieces()
        parts = len(pieces) + d.free_loops_
        if not d.crossings_:
            return ring.delta() ** (parts - 1)
        if parts > 1:
            value = ring.delta() ** (parts - 1)
            for piece in pieces:
                sub = Diagram((d.crossings_[i] for i in piece), 0,
                              validate=False)
                value = value * self._value(sub)
            return value
        cid = first_ascending(d)
        if cid is None:
            return ring.a_power(self_writhe(d)) * \
                ring.delta() ** (components(d) - 1)
        zero, infinity = smoothings(d, cid)
        return ring.x() * (self._value(zero) + self._value(infinity)) - \
            self._value(switch(d, cid))


_memos = {LaurentRing.name: SkeinMemo(), GoldenRing.name: SkeinMemo()}


def kauffman_framed(d: Diagram) -> LaurentPoly2:
    """ Framed Kauffman polynomial of the diagram, blackboard framing. """
    value = SkeinEvaluator(LaurentRing, _memos[LaurentRing.name]).evaluate(d)
    LOG.info("Kauffman polynomial of %r: %r", d, value)
    return value


def eval_phi5(d: Diagram) -> GoldenValue:
    """ ``F(1, 2cos(2pi/5))`` computed in ``Z[x]/(x^2 + x - 1)``. """
    value = SkeinEvaluator(GoldenRing, _memos[GoldenRing.name]).evaluate(d)
    LOG.info("F(1, 2cos(2pi/5)) of %r: %r", d, value)
    return value


def phi5_decomposition(d: Diagram) -> PhiDecomposition:
    return decompose(eval_phi5(d))


def clear_cache():
    for memo in _memos.values():
        memo.clear()


SkeinQuadruple = NamedTuple('SkeinQuadruple', [('plus', Diagram),
                                               ('minus', Diagram),
                                               ('zero', Diagram),
                                               ('infinity', Diagram)])
""" ``L_0`` is the smoothing agreeing with the traversal orientation. """


def skein_quadruple(d: Diagram, crossing_id: int) -> SkeinQuadruple:
    c = d.crossing(crossing_id)
    i = d.index_of(crossing_id)
    entry = {}
    for walk in strand_walks(d.crossings_):
        for vertex, pos in walk:
            if vertex == i:
                entry[pos % 2] = pos
    under_in, over_in = entry[0], entry[1]
    e = c.ends_
    zero = remove_and_glue(d, [crossing_id],
                           [(e[under_in], e[(over_in + 2) % 4]),
                            (e[over_in], e[(under_in + 2) % 4])])
    infinity = remove_and_glue(d, [crossing_id],
                               [(e[under_in], e[over_in]),
                                (e[(under_in + 2) % 4],
                                 e[(over_in + 2) % 4])])
    switched = switch(d, crossing_id)
    if crossing_signs(d)[crossing_id] > 0:
        return SkeinQuadruple(d, switched, zero, infinity)
    return SkeinQuadruple(switched, d, zero, infinity)


DoubleTwistReport = NamedTuple(
    'DoubleTwistReport',
    [('horizontal', Tuple[GoldenValue, GoldenValue]),
     ('vertical', Tuple[GoldenValue, GoldenValue]),
     ('constant', int),
     ('holds', bool)])
""" Values of the two twisted diagrams for each direction and whether each
    pair differs by the factor ``constant``.
"""


def verify_double_twist_sign(d: Diagram,
                             site: MoveSite) -> DoubleTwistReport:
    """ Compare a double twist with the tangle a (2,2)-move turns it into.

        Horizontally the twist is the 2 tangle and its partner ``-1/2``;
        vertically the ``1/2`` tangle and its partner ``-2``. Both pairs must
        evaluate to values of opposite sign.

        :param site: a :py:class:`~linkforge.moves.model.MoveSite` admitting
            insertions
        :raises MoveError: the site does not admit an insertion
    """
    def twisted(variant, params):
        return eval_phi5(apply(d, Move(variant, params, site)))

    horizontal = (twisted('NMove', (2,)), twisted('RationalMove', (-1, 2)))
    vertical = (twisted('RationalMove', (1, 2)), twisted('NMove', (-2,)))
    constant = -1
    holds = all(first == second * constant
                for first, second in (horizontal, vertical))
    return DoubleTwistReport(horizontal, vertical, constant, holds)


__all__ = ['LaurentRing', 'GoldenRing', 'SkeinMemo', 'SkeinEvaluator',
           'kauffman_framed', 'eval_phi5', 'phi5_decomposition',
           'clear_cache',
           'SkeinQuadruple', 'skein_quadruple', 'DoubleTwistReport',
           'verify_double_twist_sign']
