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
Replacing a 0-tangle region of a diagram by a 2-tangle, and back.

An insertion site ``(e1, e2, side)`` frames a disk inside a face. Let ``d1``
be end ``side`` of edge ``e1`` (ends ordered by crossing id, then position)
and follow the face to the right of ``e1`` as traversed from ``d1``; ``d2``
is the first end of ``e2`` met on that face. In the frame ``e1`` is the top
strand, running from ``d1`` on the west to the east, and ``e2`` the bottom
strand, running from ``d2`` on the east to the west. The tangle corners are
glued as NW to the ``d1`` part of ``e1``, NE to the far part of ``e1``, SE to
the ``d2`` part of ``e2`` and SW to the far part of ``e2``.

A free loop, written ``"O"``, can stand for either strand: on its own it is
closed up through the tangle, ``("O", "O", 0)`` closes one loop with the
denominator closure and ``("O", "O", 1)`` two loops with the numerator
closure.
"""

import logging
from typing import Sequence

from linkforge.diagram.graph import Dart, splice
from linkforge.diagram.pd import Diagram, remove_and_glue
from linkforge.diagram.tangle import Tangle, extract_tangle, shifted, \
    tangle_rotate
from linkforge.errors import DiagramError, MoveError, TangleError
from linkforge.moves.model import LOOP, MoveSite
from linkforge.moves.reidemeister import with_ends

LOG = logging.getLogger(__name__)


def face_walk(d: Diagram, start: Dart):
    """ Darts of the face to the right of ``start``'s edge, from ``start``. """
    emb = d.embedding_
    out = [start]
    dart = emb.phi(start)
    while dart != start:
        out.append(dart)
        dart = emb.phi(dart)
    return out


def _edge_end(d: Diagram, label: int, side: int) -> Dart:
    darts = d.embedding_.darts_of(label)
    if len(darts) != 2:
        raise MoveError("no edge labelled %s" % label)
    return darts[side]


def insertion_frame(d: Diagram, site: MoveSite):
    """ The two darts ``(d1, d2)`` framing an insertion; either is None for
        a free loop.

        :raises MoveError: unknown edges, a degenerate site, edges not on a
            common face, or too few free loops
    """
    if len(site.edges_) != 2:
        raise MoveError("insertion site needs two edges, got %s"
                        % list(site.edges_))
    e1, e2 = site.edges_
    loops_needed = [e1, e2].count(LOOP)
    if loops_needed == 2 and site.side_ == 0:
        loops_needed = 1
    if d.free_loops_ < loops_needed:
        raise MoveError("site %s needs %d free loops, diagram has %d"
                        % (list(site.edges_), loops_needed, d.free_loops_))
    if e1 == LOOP and e2 == LOOP:
        return None, None
    if e1 == LOOP:
        return None, _edge_end(d, e2, site.side_)
    if e2 == LOOP:
        return _edge_end(d, e1, site.side_), None
    if e1 == e2:
        raise MoveError("degenerate site: both strands on edge %s" % e1)
    d1 = _edge_end(d, e1, site.side_)
    emb = d.embedding_
    for dart in face_walk(d, d1)[1:]:
        if emb.label(dart) == e2:
            return d1, dart
    raise MoveError("edges %s and %s do not bound a common face" % (e1, e2))


def insert_tangle(d: Diagram, site: MoveSite, t: Tangle) -> Diagram:
    """ Replace the 0-tangle framed by ``site`` with ``t``. The crossings of
        ``t`` get fresh ids in their own order.
    """
    if t.n != 2:
        raise MoveError("only 2-tangles can be inserted, got n=%d" % t.n)
    d1, d2 = insertion_frame(d, site)
    t = _fresh_copy(d, t)
    nw, sw, se, ne = t.boundary_
    cut = max(t.labels(), default=0) + 1
    changes = {}
    pairs = []
    loops_used = 0
    emb = d.embedding_
    if d1 is None:
        pairs.append((nw, ne))
        loops_used += 1
    else:
        changes[emb.alpha(d1)] = cut
        pairs.extend([(nw, emb.label(d1)), (ne, cut)])
    if d2 is None:
        if d1 is None and site.side_ == 0:
            # one loop through both corners pairs
            pairs = [(nw, sw), (ne, se)]
        else:
            pairs.append((sw, se))
            loops_used += 1
    else:
        changes[emb.alpha(d2)] = cut + 1
        pairs.extend([(se, emb.label(d2)), (sw, cut + 1)])
    crossings = with_ends(d, changes) + list(t.crossings_)
    try:
        crossings, _, loops = splice(crossings, (), pairs)
        out = Diagram(crossings,
                      d.free_loops_ - loops_used + t.free_loops_ + loops)
    except DiagramError as exc:
        raise MoveError("insertion at %s failed: %s" % (site, exc))
    LOG.debug("inserted %d crossings at %s", len(t.crossings_), site)
    return out


def _fresh_copy(d: Diagram, t: Tangle) -> Tangle:
    label_shift = d.next_label() - min(t.labels(), default=1)
    id_shift = d.next_id() - min((c.id_ for c in t.crossings_), default=0)
    return shifted(t, label_shift, id_shift)


def delete_tangle(d: Diagram, crossing_ids: Sequence[int],
                  expected: Tangle) -> Diagram:
    """ Replace the region holding exactly ``crossing_ids`` by the 0-tangle,
        provided the region is ``expected`` seen from one of its four
        corners.

        :raises MoveError: the ids do not fill a disk with four ends, or the
            disk holds a different tangle
    """
    ids = sorted(set(crossing_ids))
    for cid in ids:
        if not d.has_crossing(cid):
            raise MoveError("no crossing with id %s" % cid)
    try:
        inner, _ = extract_tangle(d, ids)
    except TangleError as exc:
        raise MoveError("crossings %s do not form a tangle: %s" % (ids, exc))
    if inner.n != 2:
        raise MoveError("crossings %s bound %d ends, not 4"
                        % (ids, len(inner.boundary_)))
    target = expected.code()
    for turn in range(4):
        framed = tangle_rotate(inner, turn)
        if framed.code() == target:
            nw, sw, se, ne = framed.boundary_
            LOG.debug("deleting %s, frame turned by %d", ids, turn)
            return remove_and_glue(d, ids, [(nw, ne), (sw, se)])
    raise MoveError("crossings %s do not hold the expected tangle" % ids)


__all__ = ['face_walk', 'insertion_frame', 'insert_tangle', 'delete_tangle']
