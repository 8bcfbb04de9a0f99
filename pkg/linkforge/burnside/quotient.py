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
Graded Lie quotients of Burnside groups of links, up to class three.

The relatively free group of exponent ``p`` on the seeds of a Tietze
eliminated presentation is computed exactly in class three (the free
exponent-3 group for ``p = 3``, the Lazard group for ``p >= 5``). The
remaining relators generate a normal subgroup, kept as an induced
polycyclic sequence: elements with distinct leading coordinates, closed
under commutators. Leading coordinates falling in weight ``i`` are the
dimension lost by ``L_i``.
"""

import logging
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from linkforge import util
from linkforge.burnside import exponent3, lazard
from linkforge.burnside.presentation import GroupPresentation, core_group, \
    double_cover_presentation, eliminate, evaluate_elimination
from linkforge.coloring import fp
from linkforge.diagram.pd import Diagram
from linkforge.errors import UnsupportedError

LOG = logging.getLogger(__name__)

MAX_CLASS = 3


class NormalClosure(object):
    """ Induced polycyclic sequence of a normal subgroup, indexed by leading
        coordinate.
    """

    def __init__(self, group) -> None:
        self.group_ = group
        self.table_ = {}  # type: Dict[int, np.ndarray]
        self.weight_of_ = np.zeros(group.dim_, dtype=np.int64)
        for w, (a, b) in enumerate(group.layers_):
            self.weight_of_[a:b] = w + 1

    @staticmethod
    def lead(v: np.ndarray) -> Optional[int]:
        nonzero = np.flatnonzero(v)
        return int(nonzero[0]) if nonzero.size else None

    def sift(self, h: np.ndarray) -> Optional[np.ndarray]:
        """ Divide ``h`` by table elements until its leading coordinate is
            free; the result has leading coefficient 1, or is None when
            ``h`` lies in the subgroup.
        """
        g, p = self.group_, self.group_.p_
        while True:
            j = self.lead(h)
            if j is None:
                return None
            t = self.table_.get(j)
            if t is None:
                return g.power(h, pow(int(h[j]), p - 2, p))
            h = g.multiply(h, g.power(t, (-int(h[j])) % p))

    def add(self, element: np.ndarray):
        g = self.group_
        queue = [element]
        while queue:
            h = self.sift(queue.pop())
            if h is None:
                continue
            j = self.lead(h)
            weight = int(self.weight_of_[j])
            self.table_[j] = h
            LOG.debug("new leading coordinate %d of weight %d", j, weight)
            for i, t in list(self.table_.items()):
                if weight + self.weight_of_[i] <= MAX_CLASS:
                    queue.append(g.commutator(h, t))
            if weight < MAX_CLASS:
                queue.extend(g.commutator(h, g.generator(k))
                             for k in range(g.rank_))

    def leads(self, weight: int) -> List[int]:
        return sorted(j for j in self.table_
                      if self.weight_of_[j] == weight)


class GradedLieQuotient(object):
    """ ``L_1 + L_2 + L_3`` of a Burnside group over F_p. """

    def __init__(self, p: int, class_bound: int, dims: Tuple[int, ...],
                 basis: List[List[str]], relation_ideal: List[np.ndarray],
                 rank: int) -> None:
        self.p_ = p
        self.class_bound_ = class_bound
        self.dims_ = dims
        self.basis_ = basis
        """ Hall-basis labels spanning each ``L_i``. """
        self.relation_ideal_ = relation_ideal
        """ Per weight, reduced rows of the relations cut from the free
            layer. """
        self.rank_ = rank
        """ Generators left after Tietze elimination. """

    def to_json(self) -> dict:
        return {"p": self.p_,
                "class": self.class_bound_,
                "dims": list(self.dims_),
                "basis": self.basis_,
                "relations": [m.tolist() for m in self.relation_ideal_]}

    def __repr__(self):
        return "GradedLieQuotient(p=%d, dims=%s)" % (self.p_, self.dims_)


def _check(p: int, c: int):
    if c not in range(1, MAX_CLASS + 1):
        raise UnsupportedError("class %s is not supported, 1 to %d are"
                               % (c, MAX_CLASS))
    if p == 2:
        raise UnsupportedError("exponents 2 and 4 need the class-5 "
                               "machinery and are not supported")
    if not util.is_prime(p):
        raise UnsupportedError("p must be an odd prime, got %s" % p)


def relatively_free_group(rank: int, p: int):
    if p == 3:
        return exponent3.Exponent3Group(rank)
    return lazard.LazardGroup(rank, p)


def free_dims(rank: int, p: int) -> Tuple[int, int, int]:
    if p == 3:
        return exponent3.free_dims(rank)
    return lazard.free_dims(rank)


def lie_quotient(g: GroupPresentation, p: int,
                 c: int = MAX_CLASS) -> GradedLieQuotient:
    """ Dimensions of ``L_1 .. L_c`` for the exponent-``p`` quotient of the
        group presented by ``g``.

        :raises UnsupportedError: ``p`` is 2 or not prime, or ``c`` is not
            1, 2 or 3
    """
    _check(p, c)
    plan = eliminate(g)
    group = relatively_free_group(len(plan.seeds), p)
    closure = NormalClosure(group)
    for r in evaluate_elimination(group, g, plan):
        closure.add(r)

    labels = group.labels()
    dims, basis, ideal = [], [], []
    for w in range(1, c + 1):
        a, b = group.layers_[w - 1]
        leads = closure.leads(w)
        dims.append(b - a - len(leads))
        basis.append([labels[w - 1][j - a] for j in range(a, b)
                      if j not in leads])
        rows = [closure.table_[j][a:b] for j in leads]
        ideal.append(fp.row_space(rows, p, b - a))
    LOG.info("L_1..L_%d over F_%d: %s from %d seeds", c, p, dims,
             len(plan.seeds))
    return GradedLieQuotient(p, c, tuple(dims), basis, ideal,
                             len(plan.seeds))


BurnsideReport = NamedTuple('BurnsideReport', [
    ('p', int),
    ('class_bound', int),
    ('dims', Tuple[int, ...]),
    ('order_exponent', Optional[int]),
    ('reference_dims', Tuple[int, ...]),
    ('obstruction', bool)])
""" ``order_exponent`` is set for ``p = 3`` only, where class three is
    exact. ``reference_dims`` are those of the free Burnside group on
    ``dims[0]`` generators.
"""


def burnside_report(d: Diagram, p: int, c: int = MAX_CLASS,
                    killed: int = 0) -> BurnsideReport:
    """ Compare the Burnside group of ``d`` with the free one of the same
        abelian rank.

        :param killed: generator of the core group put to 1
    """
    _check(p, c)
    q = lie_quotient(double_cover_presentation(core_group(d), killed), p, c)
    reference = free_dims(q.dims_[0], p)[:c]
    obstruction = any(got != want for got, want
                      in zip(q.dims_[1:], reference[1:]))
    order = sum(q.dims_) if p == 3 and c == MAX_CLASS else None
    return BurnsideReport(p, c, q.dims_, order, tuple(reference), obstruction)


def report_to_json(r: BurnsideReport) -> dict:
    out = {"p": r.p, "class": r.class_bound, "dims": list(r.dims),
           "reference_dims": list(r.reference_dims),
           "obstruction": r.obstruction}
    if r.order_exponent is not None:
        out["order_exponent"] = r.order_exponent
    return out


__all__ = ['MAX_CLASS', 'NormalClosure', 'GradedLieQuotient',
           'relatively_free_group', 'free_dims', 'lie_quotient',
           'BurnsideReport', 'burnside_report', 'report_to_json']
