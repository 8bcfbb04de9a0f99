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


""" Greedy simplification by curl and bigon removal. """

import logging
from typing import List, NamedTuple

from linkforge.diagram.pd import Diagram
from linkforge.moves.model import Move, MoveSite
from linkforge.moves.reidemeister import find_bigons, find_kinks, \
    r1_remove, r2_remove

LOG = logging.getLogger(__name__)

SimplifyResult = NamedTuple('SimplifyResult', [('diagram', Diagram),
                                               ('framing', int),
                                               ('steps', List[Move])])
""" The reduced diagram, the summed signs of the removed curls and the
    R1-/R2- moves that were applied, in order.
"""


def simplify(d: Diagram) -> SimplifyResult:
    """ Remove curls (smallest crossing id first) and then R2 bigons until
        neither is left.
    """
    steps = []
    framing = 0
    while True:
        kinks = find_kinks(d)
        if kinks:
            d, sign = r1_remove(d, kinks[0])
            framing += sign
            steps.append(Move('R1-', (), MoveSite(crossings=[kinks[0]])))
            continue
        pairs = find_bigons(d)
        if pairs:
            first, second = pairs[0]
            d = r2_remove(d, first, second)
            steps.append(Move('R2-', (),
                              MoveSite(crossings=[first, second])))
            continue
        break
    if steps:
        LOG.debug("simplified by %d moves to %d crossings", len(steps),
                  d.crossing_count())
    return SimplifyResult(d, framing, steps)


__all__ = ['SimplifyResult', 'simplify']
