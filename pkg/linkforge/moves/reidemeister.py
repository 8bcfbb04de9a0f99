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


""" Reidemeister moves on planar-diagram codes. Removals look for their
    pattern at the given crossings and raise :py:class:`MoveError` when it is
    absent.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from linkforge.diagram.graph import Crossing, Dart
from linkforge.diagram.pd import Diagram, remove_and_glue
from linkforge.errors import DiagramError, MoveError
from linkforge.moves.model import LOOP, EdgeRef

LOG = logging.getLogger(__name__)


def kink_sign(c: Crossing) -> Optional[int]:
    """ Framing contribution of a curl at ``c``: +1 when the loop joins
        positions 0-1 or 2-3, -1 for 1-2 or 3-0, None without a curl.
    """
    i = c.kink_position()
    if i is None:
        return None
    return 1 if i % 2 == 0 else -1


def find_kinks(d: Diagram) -> List[int]:
    return [c.id_ for c in d.crossings_ if c.kink_position() is not None]


def r1_remove(d: Diagram, crossing_id: int) -> Tuple[Diagram, int]:
    """ Undo a curl.

        :returns: the diagram and the sign of the removed curl
    """
    c = d.crossing(crossing_id)
    i = c.kink_position()
    if i is None:
        raise MoveError("crossing %d is not a curl" % crossing_id)
    e = c.ends_
    out = remove_and_glue(d, [crossing_id], [(e[(i + 2) % 4],
                                              e[(i + 3) % 4])])
    return out, kink_sign(c)


def with_ends(d: Diagram, changes: Dict[Dart, int]) -> List[Crossing]:
    """ Crossings of ``d`` with single ends replaced, keyed by dart. """
    out = []
    for i, c in enumerate(d.crossings_):
        ends = list(c.ends_)
        for pos in range(4):
            if (i, pos) in changes:
                ends[pos] = changes[(i, pos)]
        out.append(Crossing(c.id_, ends))
    return out


def r1_insert(d: Diagram, edge: EdgeRef, side: int, sign: int) -> Diagram:
    """ Add a curl of the given sign on an edge, or turn a free loop into a
        one-crossing circle. ``side`` picks the side of the edge the curl
        lies on.
    """
    loop = d.next_label()
    cid = d.next_id()
    if edge == LOOP:
        if d.free_loops_ < 1:
            raise MoveError("no free loop to curl")
        other = loop + 1
        ends = (loop, loop, other, other) if sign > 0 else \
            (other, loop, loop, other)
        return Diagram(d.crossings_ + (Crossing(cid, ends),),
                       d.free_loops_ - 1)
    darts = d.embedding_.darts_of(edge)
    if len(darts) != 2:
        raise MoveError("no edge labelled %s" % edge)
    kept, cut = darts[side], darts[1 - side]
    fresh = loop + 1
    crossings = with_ends(d, {cut: fresh})
    if sign > 0:
        ends = (loop, loop, edge, fresh)
    else:
        ends = (fresh, loop, loop, edge)
    LOG.debug("R1+ on %s side %d sign %d keeps %s", edge, side, sign, kept)
    return Diagram(crossings + [Crossing(cid, ends)], d.free_loops_)


def bigons(d: Diagram) -> List[Tuple[Dart, Dart]]:
    """ Faces with two corners at distinct crossings, as dart pairs. """
    out = []
    for face in d.embedding_.faces():
        if len(face) == 2 and face[0][0] != face[1][0]:
            out.append((face[0], face[1]))
    return out


def _bigon_strands(d: Diagram, face: Tuple[Dart, Dart]):
    """ For a bigon ``[(i1, p1), (i2, p2)]`` the edge leaving ``i1`` at
        ``p1`` arrives at ``i2`` at ``p2 - 1``, the other one leaves ``i2`` at
        ``p2`` and arrives at ``i1`` at ``p1 - 1``.

        :returns: the two strands as ``(position at i1, position at i2)``
    """
    (_, p1), (_, p2) = face
    return ((p1, (p2 - 1) % 4), ((p1 - 1) % 4, p2))


def is_r2_bigon(d: Diagram, face: Tuple[Dart, Dart]) -> bool:
    """ True when one strand passes over at both corners. """
    (a1, a2), _ = _bigon_strands(d, face)
    return a1 % 2 == a2 % 2


def find_bigons(d: Diagram) -> List[Tuple[int, int]]:
    """ Crossing id pairs bounding a bigon removable by R2. """
    out = []
    for face in bigons(d):
        if is_r2_bigon(d, face):
            ids = sorted(d.crossings_[v].id_ for v, _ in face)
            out.append(tuple(ids))
    return sorted(set(out))


def r2_remove(d: Diagram, first: int, second: int) -> Diagram:
    """ Pull apart two strands crossing twice in the same direction. """
    i1, i2 = d.index_of(first), d.index_of(second)
    for face in bigons(d):
        vertices = {face[0][0], face[1][0]}
        if vertices != {i1, i2} or not is_r2_bigon(d, face):
            continue
        (v1, _), (v2, _) = face
        c1, c2 = d.crossings_[v1].ends_, d.crossings_[v2].ends_
        pairs = [(c1[(at1 + 2) % 4], c2[(at2 + 2) % 4])
                 for at1, at2 in _bigon_strands(d, face)]
        return remove_and_glue(d, [first, second], pairs)
    raise MoveError("crossings %d and %d do not bound an R2 bigon"
                    % (first, second))


def _triangle(d: Diagram, labels: Sequence[int]):
    wanted = sorted(labels)
    emb = d.embedding_
    for face in emb.faces():
        if len(face) != 3 or len({v for v, _ in face}) != 3:
            continue
        if sorted(emb.label(dart) for dart in face) == wanted:
            return face
    raise MoveError("edges %s do not bound a triangular face" % wanted)


def r3(d: Diagram, labels: Sequence[int]) -> Diagram:
    """ Slide one strand across the crossing of the other two.

        ``labels`` are the three edges of a triangular face. Each triangle
        edge runs from corner ``(v, p)`` to ``(w, q - 1)`` where ``(w, q)`` is
        the next corner. After the move every triangle position carries the
        strand's outer edge from the other corner and every outer position a
        new triangle edge; positions, and so the over/under data, are kept.
    """
    if len(labels) != 3:
        raise MoveError("R3 needs three edge labels, got %d" % len(labels))
    face = _triangle(d, labels)
    emb = d.embedding_
    segments = []
    for k, (v, p) in enumerate(face):
        w, q = face[(k + 1) % 3]
        segments.append(((v, p), (w, (q - 1) % 4)))
    if not any(a[1] % 2 == b[1] % 2 for a, b in segments):
        raise MoveError("R3 at %s: no strand passes over or under at both "
                        "corners" % sorted(labels))

    base = d.next_label()
    port = {}
    glue = []
    changes = {}
    for k, (a, b) in enumerate(segments):
        inner = base + k
        for here, there in ((a, b), (b, a)):
            outer_pos = (there[0], (there[1] + 2) % 4)
            # the triangle position at ``here`` takes the outer edge of
            # ``there``, through a port label glued back below
            label = base + 3 + len(port)
            port[here] = label
            glue.append((label, emb.label(outer_pos)))
            changes[here] = label
            changes[(here[0], (here[1] + 2) % 4)] = inner
    removed = [d.crossings_[v].id_ for v, _ in face]
    rebuilt = [c for c in with_ends(d, changes) if c.id_ in removed]
    LOG.debug("R3 on triangle %s", sorted(labels))
    try:
        return remove_and_glue(d, removed, glue, rebuilt)
    except DiagramError as exc:
        raise MoveError("R3 at %s failed: %s" % (sorted(labels), exc))


__all__ = ['kink_sign', 'find_kinks', 'r1_remove', 'with_ends', 'r1_insert',
           'bigons', 'is_r2_bigon', 'find_bigons', 'r2_remove', 'r3']
