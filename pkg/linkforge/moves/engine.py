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


""" Applying a :py:class:`~linkforge.moves.model.Move` to a diagram. """

import logging

from linkforge.diagram.pd import Diagram
from linkforge.diagram.rational import TwistBuilder, fraction_tangle, \
    rational_tangle
from linkforge.diagram.tangle import Tangle
from linkforge.errors import MoveError
from linkforge.moves import reidemeister, rotor, sites
from linkforge.moves.model import Move

LOG = logging.getLogger(__name__)


def move_tangle(m: Move) -> Tangle:
    """ The 2-tangle an NMove, SQMove or RationalMove puts in place of the
        0-tangle: ``n``, ``[s; q] = (sq + 1)/q`` or ``p/q``.
    """
    if m.variant_ == 'NMove':
        return rational_tangle([m.params_[0]])
    if m.variant_ == 'SQMove':
        return rational_tangle(list(m.params_))
    if m.variant_ == 'RationalMove':
        return fraction_tangle(*m.params_)
    raise MoveError("%s does not insert a twist tangle" % m.variant_)


def bigon_tangle(over: int = 0) -> Tangle:
    """ Two opposite half-twists; with ``over = 0`` the strand from NW
        passes over at both.
    """
    b = TwistBuilder(False)
    first = 1 if over == 0 else -1
    b.horizontal(first)
    b.horizontal(-first)
    return b.tangle()


def _site_crossings(m: Move, count: int):
    ids = m.site_.crossings_
    if len(ids) != count:
        raise MoveError("%s needs %d crossing ids, got %s"
                        % (m.variant_, count, list(ids)))
    return ids


def _site_edges(m: Move, count: int):
    edges = m.site_.edges_
    if len(edges) != count:
        raise MoveError("%s needs %d edges, got %s"
                        % (m.variant_, count, list(edges)))
    return edges


def apply(d: Diagram, m: Move) -> Diagram:
    """ Apply one move.

        :raises MoveError: the site is invalid for the variant or the move's
            pattern is not present there
    """
    v, site = m.variant_, m.site_
    if v == 'R1+':
        edge, = _site_edges(m, 1)
        out = reidemeister.r1_insert(d, edge, site.side_, m.params_[0])
    elif v == 'R1-':
        cid, = _site_crossings(m, 1)
        out, _ = reidemeister.r1_remove(d, cid)
    elif v == 'R2+':
        _site_edges(m, 2)
        out = sites.insert_tangle(d, site, bigon_tangle(*m.params_))
    elif v == 'R2-':
        first, second = _site_crossings(m, 2)
        out = reidemeister.r2_remove(d, first, second)
    elif v == 'R3':
        out = reidemeister.r3(d, _site_edges(m, 3))
    elif v == 'RotorFlip':
        order = m.params_[0] if m.params_ else None
        out = rotor.flip_region(d, site.crossings_, site.base_, order)
    elif site.is_deletion():
        out = sites.delete_tangle(d, site.crossings_, move_tangle(m))
    else:
        out = sites.insert_tangle(d, site, move_tangle(m))
    LOG.debug("applied %r: %d -> %d crossings", m, d.crossing_count(),
              out.crossing_count())
    return out


__all__ = ['move_tangle', 'bigon_tangle', 'apply']
